use fixedbitset::FixedBitSet;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use super::Graph;
use crate::error::{Error, Result};

const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop distances, filled by one breadth-first search per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceTable {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut dist = vec![UNREACHABLE; n * n];
        if n <= 64 {
            let masks: Vec<u64> = (0..n)
                .map(|v| g.neighbors(v).fold(0u64, |acc, u| acc | (1 << u)))
                .collect();
            for (source, row) in dist.chunks_mut(n).enumerate() {
                bfs_masks(&masks, source, row);
            }
        } else {
            for (source, row) in dist.chunks_mut(n).enumerate() {
                bfs_rows(g, source, row);
            }
        }
        Self { n, dist }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Hop distance, or `None` when `u` and `v` lie in different components.
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        match self.dist[u * self.n + v] {
            UNREACHABLE => None,
            d => Some(d as usize),
        }
    }

    pub fn row(&self, v: usize) -> impl Iterator<Item = Option<usize>> + '_ {
        self.dist[v * self.n..(v + 1) * self.n]
            .iter()
            .map(|&d| (d != UNREACHABLE).then_some(d as usize))
    }

    pub fn is_connected(&self) -> bool {
        !self.dist.contains(&UNREACHABLE)
    }

    pub fn diameter(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.dist.iter().copied().max().unwrap_or(0) as usize)
    }

    /// `hist[k]` is the number of unordered pairs at distance exactly `k`
    /// (`hist[0]` is always 0). Unreachable pairs are not counted.
    pub fn pair_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0usize; 1];
        for u in 0..self.n {
            for &d in &self.dist[u * self.n + u + 1..(u + 1) * self.n] {
                if d == UNREACHABLE {
                    continue;
                }
                let d = d as usize;
                if d >= hist.len() {
                    hist.resize(d + 1, 0);
                }
                hist[d] += 1;
            }
        }
        hist
    }
}

fn bfs_masks(masks: &[u64], source: usize, out: &mut [u32]) {
    let mut seen = 1u64 << source;
    let mut frontier = seen;
    let mut depth = 0u32;
    while frontier != 0 {
        let mut rest = frontier;
        while rest != 0 {
            out[rest.trailing_zeros() as usize] = depth;
            rest &= rest - 1;
        }
        let mut next = 0u64;
        let mut rest = frontier;
        while rest != 0 {
            next |= masks[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        frontier = next & !seen;
        seen |= frontier;
        depth += 1;
    }
}

fn bfs_rows(g: &Graph, source: usize, out: &mut [u32]) {
    let n = g.n();
    let mut seen = FixedBitSet::with_capacity(n);
    seen.insert(source);
    let mut frontier = seen.clone();
    let mut depth = 0u32;
    while !frontier.is_clear() {
        let mut next = FixedBitSet::with_capacity(n);
        for v in frontier.ones() {
            out[v] = depth;
            next.union_with(g.row(v));
        }
        next.difference_with(&seen);
        seen.union_with(&next);
        frontier = next;
        depth += 1;
    }
}

struct Row<'a>(&'a [u32]);

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for &d in self.0 {
            if d == UNREACHABLE {
                seq.serialize_element("inf")?;
            } else {
                seq.serialize_element(&d)?;
            }
        }
        seq.end()
    }
}

impl Serialize for DistanceTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Row<'_>> = self.dist.chunks(self.n.max(1)).map(Row).collect();
        let mut st = serializer.serialize_struct("DistanceTable", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("dist", &rows)?;
        st.end()
    }
}

impl std::fmt::Debug for DistanceTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let rows: Vec<Vec<Option<usize>>> = (0..self.n).map(|v| self.row(v).collect()).collect();
        f.debug_struct("DistanceTable").field("n", &self.n).field("dist", &rows).finish()
    }
}
