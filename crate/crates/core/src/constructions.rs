//! Deterministic builders for the explicit graph families.
//!
//! Vertex labels are fixed by each builder so that serialized outputs are
//! reproducible byte for byte.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::graph::{check_order, Graph};
use crate::sumset::ResidueSet;

/// Collects edges, keeping the rows symmetric; inserting an edge twice is a
/// construction bug and panics in debug builds.
struct Builder {
    adj: Vec<FixedBitSet>,
}

impl Builder {
    fn new(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Self { adj: vec![FixedBitSet::with_capacity(n); n] })
    }

    fn edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v, "loop at {u}");
        debug_assert!(!self.adj[u].contains(v), "edge {u}-{v} inserted twice");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    fn remove(&mut self, u: usize, v: usize) {
        debug_assert!(self.adj[u].contains(v), "removing absent edge {u}-{v}");
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    /// All edges among `vertices`.
    fn clique(&mut self, vertices: &[usize]) {
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                self.edge(u, v);
            }
        }
    }

    fn finish(self) -> Graph {
        Graph::from_rows(self.adj)
    }
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut b = Builder::new(n)?;
    b.clique(&(0..n).collect::<Vec<_>>());
    Ok(b.finish())
}

pub fn path(n: usize) -> Result<Graph> {
    let mut b = Builder::new(n)?;
    for v in 1..n {
        b.edge(v - 1, v);
    }
    Ok(b.finish())
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let mut b = Builder::new(n)?;
    for v in 0..n {
        b.edge(v, (v + 1) % n);
    }
    Ok(b.finish())
}

/// Parameters of the block-chain family: `m` blocks of `d + 1` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GdmParams {
    pub d: usize,
    pub m: usize,
}

impl GdmParams {
    pub fn new(d: usize, m: usize) -> Result<Self> {
        if d < 2 {
            return Err(invalid(format!("gdm needs d >= 2, got {d}")));
        }
        if m < 2 {
            return Err(invalid(format!("gdm needs m >= 2, got {m}")));
        }
        Ok(Self { d, m })
    }

    pub fn n(&self) -> usize {
        self.m * (self.d + 1)
    }

    /// Vertices of block `i` (0-based) as a consecutive range.
    pub fn block(&self, i: usize) -> std::ops::Range<usize> {
        i * (self.d + 1)..(i + 1) * (self.d + 1)
    }

    /// The two distinguished vertices of block `i`: its first two labels.
    pub fn distinguished(&self, i: usize) -> (usize, usize) {
        let start = i * (self.d + 1);
        (start, start + 1)
    }
}

/// `m` copies of K_{d+1} minus an edge {x_i, y_i}, chained into a ring by
/// the edges {x_i, y_{i+1}} (indices mod m). Connected and d-regular.
pub fn gdm(d: usize, m: usize) -> Result<Graph> {
    let p = GdmParams::new(d, m)?;
    let mut b = Builder::new(p.n())?;
    for i in 0..m {
        let block: Vec<usize> = p.block(i).collect();
        b.clique(&block);
        let (x, y) = p.distinguished(i);
        b.remove(x, y);
    }
    for i in 0..m {
        let (x, _) = p.distinguished(i);
        let (_, y_next) = p.distinguished((i + 1) % m);
        b.edge(x, y_next);
    }
    Ok(b.finish())
}

/// Parameters of the regular family with near-maximal diameter.
///
/// The path `v_1 .. v_a` carries `k + 2` consecutive triples: the first and
/// last attach to the end cliques, the `k` middle ones to the middle cliques.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiamExtremalParams {
    pub d: usize,
    pub k: usize,
    pub a: usize,
    pub b: usize,
    pub n: usize,
}

impl DiamExtremalParams {
    pub fn new(d: usize, k: usize) -> Result<Self> {
        if d < 5 || d.is_multiple_of(2) {
            return Err(invalid(format!("diameter-extremal family needs odd d >= 5, got {d}")));
        }
        let a = 3 * (k + 2);
        let b = (k + 2) * (d - 2) + 2;
        Ok(Self { d, k, a, b, n: a + b })
    }

    /// Label of path vertex `v_i`, 1-based as in the construction.
    pub fn v(&self, i: usize) -> usize {
        debug_assert!((1..=self.a).contains(&i));
        i - 1
    }

    /// Label of `w_j`, 1-based.
    pub fn w(&self, j: usize) -> usize {
        debug_assert!((1..=self.b).contains(&j));
        self.a + j - 1
    }

    /// Diameter the path forces: `a - 1`.
    pub fn path_length(&self) -> usize {
        self.a - 1
    }
}

pub fn diameter_extremal(d: usize, k: usize) -> Result<Graph> {
    let p = DiamExtremalParams::new(d, k)?;
    let (a, bsz) = (p.a, p.b);
    let mut g = Builder::new(p.n)?;

    // I: the path.
    for i in 1..a {
        g.edge(p.v(i), p.v(i + 1));
    }
    // II and III: the end triples against the end cliques, minus two edges each.
    for i in 1..=3 {
        for j in 1..d {
            if (i, j) != (2, d - 1) && (i, j) != (3, 1) {
                g.edge(p.v(i), p.w(j));
            }
            let (vi, wj) = (a + 1 - i, bsz + 1 - j);
            if (vi, wj) != (a - 1, bsz + 2 - d) && (vi, wj) != (a - 2, bsz) {
                g.edge(p.v(vi), p.w(wj));
            }
        }
    }
    // IV: middle triples against middle cliques.
    for r in 1..=p.k {
        for s in 1..=3 {
            for t in 1..=d - 2 {
                g.edge(p.v(3 * r + s), p.w((d - 2) * r + 1 + t));
            }
        }
    }
    // V and VI: end cliques on d - 1 vertices minus a perfect matching on the
    // d - 3 inner ones (consecutive pairs).
    for first in [1, bsz + 2 - d] {
        let block: Vec<usize> = (first..first + d - 1).map(|j| p.w(j)).collect();
        g.clique(&block);
        for pair in block[1..d - 2].chunks(2) {
            g.remove(pair[0], pair[1]);
        }
    }
    // VII: middle cliques on d - 2 vertices.
    for r in 1..=p.k {
        let block: Vec<usize> = (r * (d - 2) + 2..=(r + 1) * (d - 2) + 1).map(|j| p.w(j)).collect();
        g.clique(&block);
    }
    Ok(g.finish())
}

/// A Cayley graph on Z_n with the symmetric closure of the requested
/// generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circulant {
    pub graph: Graph,
    pub generators: ResidueSet,
}

pub fn circulant(n: usize, gens: &[usize]) -> Result<Circulant> {
    check_order(n)?;
    if gens.contains(&0) {
        return Err(invalid("generator 0 would create loops"));
    }
    let set = ResidueSet::new(n, gens.iter().copied())?;
    circulant_from_set(&set)
}

/// Cayley graph of `gens` (symmetrized) on Z_n, n = `gens.modulus()`.
pub fn circulant_from_set(gens: &ResidueSet) -> Result<Circulant> {
    let n = gens.modulus();
    check_order(n)?;
    if gens.contains(0) {
        return Err(invalid("generator 0 would create loops"));
    }
    let generators = gens.symmetrized();
    let rows = (0..n)
        .map(|u| {
            let mut row = FixedBitSet::with_capacity(n);
            for s in generators.iter() {
                row.insert((u + s) % n);
            }
            row
        })
        .collect();
    Ok(Circulant { graph: Graph::from_rows(rows), generators })
}

/// Largest q with q^4 <= n^3, i.e. floor(n^(3/4)).
pub fn floor_three_quarter_power(n: usize) -> usize {
    let cube = (n as u128).pow(3);
    let mut q = (n as f64).powf(0.75) as u128;
    while q.pow(4) > cube {
        q -= 1;
    }
    while (q + 1).pow(4) <= cube {
        q += 1;
    }
    q as usize
}

/// Clique on the first floor(n^(3/4)) vertices, path on the rest, joined by
/// one edge from vertex 0 to the first path vertex.
pub fn clique_path(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(invalid(format!("clique-path needs n >= 4, got {n}")));
    }
    let q = floor_three_quarter_power(n);
    let mut b = Builder::new(n)?;
    b.clique(&(0..q).collect::<Vec<_>>());
    for v in q + 1..n {
        b.edge(v - 1, v);
    }
    b.edge(0, q);
    Ok(b.finish())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Gdm,
    DiamExtremal,
    Circulant,
    CliquePath,
    Cycle,
    Complete,
    Path,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Gdm,
        Family::DiamExtremal,
        Family::Circulant,
        Family::CliquePath,
        Family::Cycle,
        Family::Complete,
        Family::Path,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Gdm => "gdm",
            Family::DiamExtremal => "diam-extremal",
            Family::Circulant => "circulant",
            Family::CliquePath => "clique-path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Path => "path",
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| invalid(format!("unknown family {s:?}")))
    }
}
