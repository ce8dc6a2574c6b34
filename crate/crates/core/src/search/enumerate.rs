//! Exhaustive generation of connected d-regular graphs.
//!
//! Both generators fill adjacency vertex by vertex: when vertex `v` is
//! processed, all its missing edges go to higher-labelled vertices, and
//! afterwards `v` is never touched again.
//!
//! * [`Mode::Labeled`] emits every labelled connected d-regular graph once.
//! * [`Mode::Classes`] only emits graphs whose labelling is a breadth-first
//!   order (the new neighbours of `v` take the next free labels), and
//!   additionally treats unprocessed vertices with identical adjacency as
//!   interchangeable. Every isomorphism class appears at least once.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::canon::{canonical_masks, DEDUP_CAP};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// Largest n accepted by the exhaustive generators.
pub const EXHAUSTIVE_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Labeled,
    Classes,
}

#[derive(Clone)]
pub(crate) struct State {
    masks: [u64; EXHAUSTIVE_CAP],
    /// Vertices `0..next` are discovered (Classes mode only).
    next: usize,
    /// Vertex to process next.
    v: usize,
}

pub(crate) struct Enumerator {
    n: usize,
    d: usize,
    mode: Mode,
}

pub(crate) fn validate(n: usize, d: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > EXHAUSTIVE_CAP {
        return Err(invalid(format!("exhaustive enumeration is capped at n <= {EXHAUSTIVE_CAP}")));
    }
    if d >= n {
        return Err(invalid(format!("degree {d} must be below n = {n}")));
    }
    if n * d % 2 == 1 {
        return Err(Error::OddDegreeSum { n, d });
    }
    Ok(())
}

impl Enumerator {
    pub(crate) fn new(n: usize, d: usize, mode: Mode) -> Result<Self> {
        validate(n, d)?;
        Ok(Self { n, d, mode })
    }

    fn root(&self) -> State {
        State { masks: [0; EXHAUSTIVE_CAP], next: 1, v: 0 }
    }

    /// Runs the search from `root`. With `split = Some(depth)`, states that
    /// reach vertex `depth` are collected instead of being explored.
    fn run(&self, root: State, split: Option<usize>, emit: &mut dyn FnMut(&[u64]), pending: &mut Vec<State>) {
        let mut state = root;
        self.process(&mut state, split, emit, pending);
    }

    fn deg(&self, state: &State, w: usize) -> usize {
        state.masks[w].count_ones() as usize
    }

    fn process(&self, s: &mut State, split: Option<usize>, emit: &mut dyn FnMut(&[u64]), pending: &mut Vec<State>) {
        let (n, d) = (self.n, self.d);
        let v = s.v;
        if v == n {
            if self.mode == Mode::Labeled && !connected(&s.masks[..n]) {
                return;
            }
            emit(&s.masks[..n]);
            return;
        }
        if split == Some(v) {
            pending.push(s.clone());
            return;
        }
        if self.mode == Mode::Classes && v >= s.next {
            return;
        }
        let need = d - self.deg(s, v);
        let hi = if self.mode == Mode::Classes { s.next } else { n };
        let candidates: Vec<usize> = (v + 1..hi).filter(|&w| self.deg(s, w) < d).collect();
        let fresh_room = if self.mode == Mode::Classes { n - s.next } else { 0 };
        if candidates.len() + fresh_room < need {
            return;
        }
        // prev_twin[i]: earlier candidate interchangeable with candidate i.
        let prev_twin: Vec<Option<usize>> = match self.mode {
            Mode::Labeled => vec![None; candidates.len()],
            Mode::Classes => (0..candidates.len())
                .map(|i| (0..i).rev().find(|&k| s.masks[candidates[k]] == s.masks[candidates[i]]))
                .collect(),
        };
        let mut chosen = vec![false; candidates.len()];
        self.choose(s, &candidates, &prev_twin, &mut chosen, 0, need, split, emit, pending);
    }

    #[allow(clippy::too_many_arguments)]
    fn choose(
        &self,
        s: &mut State,
        candidates: &[usize],
        prev_twin: &[Option<usize>],
        chosen: &mut [bool],
        i: usize,
        need: usize,
        split: Option<usize>,
        emit: &mut dyn FnMut(&[u64]),
        pending: &mut Vec<State>,
    ) {
        let v = s.v;
        let remaining = candidates.len() - i;
        match self.mode {
            Mode::Labeled => {
                if need > remaining {
                    return;
                }
                if need == 0 {
                    self.finish_vertex(s, split, emit, pending);
                    return;
                }
            }
            Mode::Classes => {
                if need == 0 || i == candidates.len() {
                    // The rest of v's neighbours are new vertices.
                    if s.next + need > self.n {
                        return;
                    }
                    let saved = (s.masks, s.next);
                    for x in s.next..s.next + need {
                        s.masks[v] |= 1 << x;
                        s.masks[x] |= 1 << v;
                    }
                    s.next += need;
                    self.finish_vertex(s, split, emit, pending);
                    (s.masks, s.next) = saved;
                    return;
                }
            }
        }
        let w = candidates[i];
        // Take w, unless an interchangeable earlier candidate was skipped.
        if prev_twin[i].is_none_or(|k| chosen[k]) {
            chosen[i] = true;
            s.masks[v] |= 1 << w;
            s.masks[w] |= 1 << v;
            self.choose(s, candidates, prev_twin, chosen, i + 1, need - 1, split, emit, pending);
            s.masks[v] &= !(1 << w);
            s.masks[w] &= !(1 << v);
            chosen[i] = false;
        }
        self.choose(s, candidates, prev_twin, chosen, i + 1, need, split, emit, pending);
    }

    fn finish_vertex(&self, s: &mut State, split: Option<usize>, emit: &mut dyn FnMut(&[u64]), pending: &mut Vec<State>) {
        if !self.feasible(s) {
            return;
        }
        s.v += 1;
        self.process(s, split, emit, pending);
        s.v -= 1;
    }

    /// Pruning after vertex `s.v` is complete.
    fn feasible(&self, s: &State) -> bool {
        let (n, d) = (self.n, self.d);
        let v = s.v;
        let upper = if self.mode == Mode::Classes { s.next } else { n };
        let undiscovered = n - upper;
        // Every later vertex needs enough partners with spare degree.
        let open: Vec<usize> = (v + 1..upper).filter(|&w| self.deg(s, w) < d).collect();
        let partners = open.len() + undiscovered;
        for &w in &open {
            if d - self.deg(s, w) > partners - 1 {
                return false;
            }
        }
        if self.mode == Mode::Classes {
            // The next vertex to process must already be discovered.
            return v + 1 < upper || upper == n;
        }
        // A finished component that is not the whole graph.
        let comp = component(&s.masks[..n], v);
        if comp.count_ones() as usize == n {
            return true;
        }
        let mut rest = comp;
        while rest != 0 {
            let x = rest.trailing_zeros() as usize;
            if self.deg(s, x) < d {
                return true;
            }
            rest &= rest - 1;
        }
        false
    }

    /// Splits the tree into independent subtrees for parallel exploration.
    fn partitions(&self, emit: &mut dyn FnMut(&[u64])) -> Vec<State> {
        let mut pending = Vec::new();
        let depth = 4.min(self.n);
        self.run(self.root(), Some(depth), emit, &mut pending);
        pending
    }
}

fn component(masks: &[u64], v: usize) -> u64 {
    let mut seen = 1u64 << v;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut rest = frontier;
        while rest != 0 {
            next |= masks[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        frontier = next & !seen;
        seen |= frontier;
    }
    seen
}

fn connected(masks: &[u64]) -> bool {
    component(masks, 0).count_ones() as usize == masks.len()
}

/// Visits raw adjacency masks sequentially.
pub(crate) fn visit_masks(n: usize, d: usize, mode: Mode, emit: &mut dyn FnMut(&[u64])) -> Result<()> {
    let e = Enumerator::new(n, d, mode)?;
    e.run(e.root(), None, emit, &mut Vec::new());
    Ok(())
}

/// Folds over all emitted mask sets, splitting the tree across rayon
/// workers. Returns one accumulator per subtree, in a fixed order, so the
/// result does not depend on scheduling.
pub(crate) fn par_fold_masks<T, I, F>(n: usize, d: usize, mode: Mode, init: I, fold: F) -> Result<Vec<T>>
where
    T: Send,
    I: Fn() -> T + Sync,
    F: Fn(&mut T, &[u64]) + Sync,
{
    let e = Enumerator::new(n, d, mode)?;
    let mut head = init();
    let parts = e.partitions(&mut |m| fold(&mut head, m));
    let mut out: Vec<T> = parts
        .into_par_iter()
        .map(|state| {
            let mut acc = init();
            e.run(state, None, &mut |m| fold(&mut acc, m), &mut Vec::new());
            acc
        })
        .collect();
    out.insert(0, head);
    Ok(out)
}

/// Calls `f` with every labelled connected d-regular graph on n vertices
/// (`dedup = false`) or with one canonical representative per isomorphism
/// class, in increasing canonical-code order (`dedup = true`).
pub fn visit_connected_regular(n: usize, d: usize, dedup: bool, mut f: impl FnMut(Graph)) -> Result<()> {
    if dedup {
        for g in enumerate_classes(n, d)? {
            f(g);
        }
        Ok(())
    } else {
        visit_masks(n, d, Mode::Labeled, &mut |m| f(Graph::from_masks(m)))
    }
}

pub fn enumerate_connected_regular(n: usize, d: usize, dedup: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    visit_connected_regular(n, d, dedup, |g| out.push(g))?;
    Ok(out)
}

/// One canonically labelled graph per isomorphism class.
fn enumerate_classes(n: usize, d: usize) -> Result<Vec<Graph>> {
    validate(n, d)?;
    if n > DEDUP_CAP {
        return Err(Error::DedupCap { n, cap: DEDUP_CAP });
    }
    let parts = par_fold_masks(n, d, Mode::Classes, BTreeMap::new, |acc: &mut BTreeMap<u128, Vec<u64>>, m| {
        let (code, order) = canonical_masks(m);
        acc.entry(code).or_insert_with(|| relabel_masks(m, &order));
    })?;
    let mut all = BTreeMap::new();
    for part in parts {
        all.extend(part);
    }
    Ok(all.values().map(|m| Graph::from_masks(m)).collect())
}

/// Masks with `order[k]` renamed to `k`.
fn relabel_masks(masks: &[u64], order: &[usize]) -> Vec<u64> {
    let mut pos = vec![0; masks.len()];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    order
        .iter()
        .map(|&v| {
            let mut row = 0u64;
            let mut rest = masks[v];
            while rest != 0 {
                row |= 1 << pos[rest.trailing_zeros() as usize];
                rest &= rest - 1;
            }
            row
        })
        .collect()
}
