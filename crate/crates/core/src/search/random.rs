//! Seeded random connected regular graphs from the pairing model.
//!
//! Each attempt shuffles the `n * d` half-edges and pairs them off; pairs
//! that would form a loop or a repeated edge go back into the pool, which is
//! reshuffled until it is empty. An attempt is abandoned when no remaining
//! pair is usable, and the whole outcome is rejected if it is disconnected.

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{invalid, Error, Result};
use crate::graph::{check_order, Graph};

/// Attempts before giving up with [`Error::RejectionCap`].
pub const REJECTION_CAP: usize = 1000;

/// Generator for candidate `index` of a run seeded with `master`. Every
/// candidate draws from its own ChaCha stream, so results do not depend on
/// how candidates are scheduled.
pub fn candidate_rng(master: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(index);
    rng
}

pub fn random_connected_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    random_connected_regular_with(n, d, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_connected_regular_with<R: Rng + ?Sized>(n: usize, d: usize, rng: &mut R) -> Result<Graph> {
    check_order(n)?;
    if d >= n {
        return Err(invalid(format!("degree {d} must be below n = {n}")));
    }
    if n * d % 2 == 1 {
        return Err(Error::OddDegreeSum { n, d });
    }
    for _ in 0..REJECTION_CAP {
        if let Some(rows) = try_pairing(n, d, rng) {
            let g = Graph::from_rows(rows);
            if g.is_connected() {
                return Ok(g);
            }
        }
    }
    Err(Error::RejectionCap(REJECTION_CAP))
}

fn try_pairing<R: Rng + ?Sized>(n: usize, d: usize, rng: &mut R) -> Option<Vec<FixedBitSet>> {
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, d)).collect();
    while !stubs.is_empty() {
        stubs.shuffle(rng);
        let mut leftover = Vec::new();
        for pair in stubs.chunks_exact(2) {
            let (u, v) = (pair[0], pair[1]);
            if u != v && !adj[u].contains(v) {
                adj[u].insert(v);
                adj[v].insert(u);
            } else {
                leftover.extend_from_slice(pair);
            }
        }
        if !pool_usable(&leftover, &adj) {
            return None;
        }
        stubs = leftover;
    }
    Some(adj)
}

/// True if the pool is empty or holds two distinct non-adjacent vertices.
fn pool_usable(pool: &[usize], adj: &[FixedBitSet]) -> bool {
    if pool.is_empty() {
        return true;
    }
    let mut vertices = pool.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    vertices
        .iter()
        .enumerate()
        .any(|(i, &u)| vertices[i + 1..].iter().any(|&v| !adj[u].contains(v)))
}
