//! Canonical codes for small graphs.
//!
//! The code of a vertex ordering `o_0 .. o_{n-1}` is the upper triangle of
//! the reordered adjacency matrix read column by column:
//! `A[o_0][o_1], A[o_0][o_2], A[o_1][o_2], A[o_0][o_3], ...`.
//! The canonical code is the lexicographically greatest code over all n!
//! orderings. The search below finds exactly that maximum; it only prunes
//! branches that provably cannot reach it.

use std::cmp::Ordering;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest n for which canonical codes are computed.
pub const DEDUP_CAP: usize = 12;

/// Hex rendering of an adjacency code, MSB first, zero-padded to a whole
/// number of hex digits. Codes of graphs with the same n have equal length,
/// so string order equals code order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonCode(String);

impl CanonCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn from_bits(bits: impl Iterator<Item = bool>) -> Self {
        let mut out = String::new();
        let mut nibble = 0u8;
        let mut filled = 0;
        for bit in bits {
            nibble = nibble << 1 | u8::from(bit);
            filled += 1;
            if filled == 4 {
                out.push(char::from_digit(nibble as u32, 16).unwrap());
                nibble = 0;
                filled = 0;
            }
        }
        if filled > 0 {
            nibble <<= 4 - filled;
            out.push(char::from_digit(nibble as u32, 16).unwrap());
        }
        CanonCode(out)
    }

    pub(crate) fn from_u128(code: u128, bits: usize) -> Self {
        Self::from_bits((0..bits).rev().map(|i| code >> i & 1 == 1))
    }
}

impl std::fmt::Display for CanonCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for CanonCode {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

/// Code of the identity ordering.
pub fn labeled_code(g: &Graph) -> CanonCode {
    let n = g.n();
    CanonCode::from_bits((1..n).flat_map(|j| (0..j).map(move |i| g.has_edge(i, j))))
}

/// Canonical code, permutation invariant. Requires n <= [`DEDUP_CAP`].
pub fn canonical_code(g: &Graph) -> Result<CanonCode> {
    let n = g.n();
    if n > DEDUP_CAP {
        return Err(Error::DedupCap { n, cap: DEDUP_CAP });
    }
    let (code, _) = canonical_masks(&masks_of(g));
    Ok(CanonCode::from_u128(code, n * (n - 1) / 2))
}

/// Canonically relabelled copy of `g` (isomorphic graphs map to equal
/// graphs).
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n > DEDUP_CAP {
        return Err(Error::DedupCap { n, cap: DEDUP_CAP });
    }
    let (_, order) = canonical_masks(&masks_of(g));
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

pub(crate) fn masks_of(g: &Graph) -> Vec<u64> {
    debug_assert!(g.n() <= 64);
    (0..g.n())
        .map(|v| g.neighbors(v).fold(0u64, |acc, u| acc | 1 << u))
        .collect()
}

pub(crate) fn code_bits(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Maximum code (as an integer, first bit most significant) and an ordering
/// attaining it. n <= 16.
pub(crate) fn canonical_masks(masks: &[u64]) -> (u128, Vec<usize>) {
    let n = masks.len();
    assert!(n <= 16, "canonical search supports at most 16 vertices");
    let mut search = Search {
        masks,
        n,
        cur: [0; 16],
        order: [0; 16],
        best: None,
        best_order: [0; 16],
    };
    search.descend(0, 0, [0; 16], Ordering::Equal);
    let best = search.best.unwrap_or([0; 16]);
    let mut code = 0u128;
    for (j, &col) in best.iter().enumerate().take(n).skip(1) {
        code = code << j | col as u128;
    }
    (code, search.best_order[..n].to_vec())
}

struct Search<'a> {
    masks: &'a [u64],
    n: usize,
    cur: [u16; 16],
    order: [usize; 16],
    best: Option<[u16; 16]>,
    best_order: [usize; 16],
}

impl Search<'_> {
    /// `cols[x]` holds the adjacency of unplaced vertex `x` to the placed
    /// prefix, first placed vertex in the highest bit. `cmp` compares the
    /// placed prefix of the current code with the best code found so far.
    /// Returns true when the best code was replaced inside this subtree.
    fn descend(&mut self, j: usize, used: u64, cols: [u16; 16], cmp: Ordering) -> bool {
        if j == self.n {
            if self.best.is_none() || cmp == Ordering::Greater {
                self.best = Some(self.cur);
                self.best_order = self.order;
                return true;
            }
            return false;
        }
        let unused = (0..self.n).filter(|&x| used >> x & 1 == 0);
        let top = unused.clone().map(|x| cols[x]).max().expect("an unplaced vertex");
        let mut cmp = match (cmp, &self.best) {
            (Ordering::Equal, Some(best)) => top.cmp(&best[j]),
            (c, _) => c,
        };
        if cmp == Ordering::Less {
            return false;
        }
        let mut replaced = false;
        for x in unused.filter(|&x| cols[x] == top).collect::<Vec<_>>() {
            self.cur[j] = top;
            self.order[j] = x;
            let mut next = [0u16; 16];
            for y in 0..self.n {
                next[y] = cols[y] << 1 | (self.masks[x] >> y & 1) as u16;
            }
            if self.descend(j + 1, used | 1 << x, next, cmp) {
                // The new best extends the current prefix.
                cmp = Ordering::Equal;
                replaced = true;
            }
        }
        replaced
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, gdm, path};

    /// Maximum code over all n! orderings, by Heap's algorithm.
    fn brute_force_code(g: &Graph) -> u128 {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let code_of = |p: &[usize]| {
            let mut code = 0u128;
            for j in 1..n {
                for i in 0..j {
                    code = code << 1 | u128::from(g.has_edge(p[i], p[j]));
                }
            }
            code
        };
        let mut best = code_of(&perm);
        let mut c = vec![0usize; n];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    perm.swap(0, i);
                } else {
                    perm.swap(c[i], i);
                }
                best = best.max(code_of(&perm));
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        best
    }

    fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn matches_brute_force() {
        for seed in 0..150 {
            let n = 1 + (seed as usize % 7);
            let g = random_graph(n, 0.2 + 0.1 * (seed % 6) as f64, seed);
            let (code, order) = canonical_masks(&masks_of(&g));
            assert_eq!(code, brute_force_code(&g), "{g:?}");
            let mut sorted = order.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn permutation_invariant() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for g in [cycle(9).unwrap(), gdm(2, 3).unwrap(), gdm(3, 3).unwrap(), random_graph(11, 0.4, 3)] {
            let code = canonical_code(&g).unwrap();
            for _ in 0..20 {
                let mut perm: Vec<usize> = (0..g.n()).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_code(&g.relabel(&perm).unwrap()).unwrap(), code);
            }
        }
    }

    #[test]
    fn separates_non_isomorphic() {
        // C_6 and two triangles have the same degree sequence.
        let two_triangles = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_code(&cycle(6).unwrap()).unwrap(), canonical_code(&two_triangles).unwrap());
        assert_eq!(canonical_code(&gdm(2, 3).unwrap()).unwrap(), canonical_code(&cycle(9).unwrap()).unwrap());
    }

    #[test]
    fn canonical_form_is_a_relabelling() {
        let g = path(5).unwrap();
        let c = canonical_form(&g).unwrap();
        assert_eq!(labeled_code(&c), canonical_code(&g).unwrap());
        assert_eq!(c.edge_count(), 4);
    }

    #[test]
    fn codes_render_as_hex() {
        assert_eq!(canonical_code(&complete(4).unwrap()).unwrap().as_str(), "fc");
        assert_eq!(labeled_code(&path(3).unwrap()).as_str(), "a");
        assert_eq!(canonical_code(&complete(1).unwrap()).unwrap().as_str(), "");
        assert!(matches!(
            canonical_code(&cycle(13).unwrap()),
            Err(Error::DedupCap { n: 13, .. })
        ));
    }
}
