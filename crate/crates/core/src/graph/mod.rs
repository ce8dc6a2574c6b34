//! Immutable undirected simple graphs backed by bitset adjacency rows.
//!
//! Every constructor validates its input strictly: loops, out-of-range
//! endpoints, and repeated edges are errors rather than being silently
//! merged. Vertex counts are capped at [`MAX_VERTICES`].

mod distance;
mod io;

pub use distance::DistanceTable;
pub use io::{parse_edge_list, serialize_edge_list};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Largest vertex count accepted by any constructor.
pub const MAX_VERTICES: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
    m: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices with exactly the given edges.
    ///
    /// Endpoint order inside a pair does not matter, but the same unordered
    /// pair may appear only once.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_order(n)?;
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if adj[u].contains(v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_rows(adj))
    }

    /// Builds a graph from rows that are already symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<FixedBitSet>) -> Self {
        let n = adj.len();
        let degree_sum: usize = adj.iter().map(|r| r.count_ones(..)).sum();
        let g = Self { n, adj, m: degree_sum / 2 };
        debug_assert!(g.invariants_hold(), "adjacency rows violate graph invariants");
        g
    }

    /// Builds a graph from `u64` neighbour masks (n <= 64).
    pub(crate) fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        debug_assert!(n <= 64);
        let adj = masks
            .iter()
            .map(|&mask| {
                let mut row = FixedBitSet::with_capacity(n);
                let mut rest = mask;
                while rest != 0 {
                    row.insert(rest.trailing_zeros() as usize);
                    rest &= rest - 1;
                }
                row
            })
            .collect();
        Self::from_rows(adj)
    }

    fn invariants_hold(&self) -> bool {
        let mut twice_m = 0;
        for (v, row) in self.adj.iter().enumerate() {
            if row.len() != self.n || row.contains(v) {
                return false;
            }
            if row.ones().any(|u| !self.adj[u].contains(v)) {
                return false;
            }
            twice_m += row.count_ones(..);
        }
        twice_m == 2 * self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Number of vertex pairs, `n(n-1)/2`.
    pub fn pair_count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.pair_count()
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reach(0).count_ones(..) == self.n
    }

    /// Vertices in the connected component of `v`.
    pub(crate) fn reach(&self, v: usize) -> FixedBitSet {
        let mut seen = FixedBitSet::with_capacity(self.n);
        seen.insert(v);
        let mut frontier = seen.clone();
        while !frontier.is_clear() {
            let mut next = FixedBitSet::with_capacity(self.n);
            for u in frontier.ones() {
                next.union_with(&self.adj[u]);
            }
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// The common degree if every vertex has the same degree.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn distances(&self) -> DistanceTable {
        DistanceTable::new(self)
    }

    /// Largest hop distance over all pairs; 0 for a single vertex.
    pub fn diameter(&self) -> Result<usize> {
        self.distances().diameter()
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = FixedBitSet::with_capacity(self.n);
        for &p in perm {
            if p >= self.n || seen.put(p) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        let mut adj = vec![FixedBitSet::with_capacity(self.n); self.n];
        for (u, v) in self.edges() {
            adj[perm[u]].insert(perm[v]);
            adj[perm[v]].insert(perm[u]);
        }
        Ok(Self::from_rows(adj))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

pub(crate) fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_VERTICES {
        return Err(Error::TooLarge { n, cap: MAX_VERTICES });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle8() -> Graph {
        let edges: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        Graph::from_edges(8, &edges).unwrap()
    }

    #[test]
    fn triangle() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.is_complete());
        assert_eq!(g.regular_degree(), Some(2));
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(4, &[(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::from_edges(0, &[]), Err(Error::EmptyGraph));
        assert!(matches!(
            Graph::from_edges(MAX_VERTICES + 1, &[]),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn connectivity() {
        assert!(Graph::from_edges(1, &[]).unwrap().is_connected());
        assert!(cycle8().is_connected());
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two.is_connected());
    }

    #[test]
    fn degrees() {
        assert_eq!(cycle8().regular_degree(), Some(2));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.regular_degree(), None);
        assert_eq!(star.min_degree(), 1);
        let single = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(single.regular_degree(), Some(0));
        assert_eq!(single.diameter(), Ok(0));
    }

    #[test]
    fn diameters() {
        assert_eq!(cycle8().diameter(), Ok(4));
        let k5: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        assert_eq!(Graph::from_edges(5, &k5).unwrap().diameter(), Ok(1));
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(p5.diameter(), Ok(4));
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.diameter(), Err(Error::Disconnected));
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = cycle8();
        let h = g.relabel(&[3, 1, 4, 0, 5, 2, 7, 6]).unwrap();
        assert_eq!(h.edge_count(), 8);
        assert!(h.has_edge(3, 1));
        assert!(h.has_edge(6, 3));
        assert!(g.relabel(&[0, 0, 1, 2, 3, 4, 5, 6]).is_err());
    }
}
