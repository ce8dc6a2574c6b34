//! Per-vertex neighbourhood shells and the diametral geodesic cut.
//!
//! For a vertex `v` the vertex set splits into `{v}`, its neighbours `A`,
//! the second shell `C` (distance exactly 2), and the remainder `D`
//! (distance at least 3). The set `C*` holds the members of `C` with a
//! neighbour in `D`, and
//!
//! ```text
//! alpha = (1 - eps1) / d * max { |N(c) ∩ A| : c ∈ C* }
//! ```
//!
//! classifies `v` as case 1 (`alpha <= 1/2`) or case 2 (`alpha > 1/2`).

use serde::Serialize;

use crate::checks::default_epsilon;
use crate::error::{Error, Result};
use crate::graph::{DistanceTable, Graph};

/// Vertices at hop distance exactly 2 from `v`.
pub fn excess_neighbors(g: &Graph, v: usize) -> Result<Vec<usize>> {
    check_vertex(g, v)?;
    Ok(second_shell(g, v))
}

fn second_shell(g: &Graph, v: usize) -> Vec<usize> {
    let mut reach = g.row(v).clone();
    for a in g.neighbors(v) {
        reach.union_with(g.row(a));
    }
    reach.difference_with(g.row(v));
    reach.set(v, false);
    reach.ones().collect()
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(())
}

/// `eps1 = sqrt(eps)` at the midpoint of the default bracket.
pub fn default_eps1() -> f64 {
    default_epsilon().eps1()
}

/// Vertices whose second shell is smaller than `eps1 * d`.
pub fn v1_membership(g: &Graph, eps1: f64) -> Result<Vec<usize>> {
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    let threshold = eps1 * d as f64;
    Ok((0..g.n())
        .filter(|&v| (second_shell(g, v).len() as f64) < threshold)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    Case1,
    Case2,
    /// `C` or `D` is empty: the vertex sees the whole graph within two or
    /// three steps.
    Saturated,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Decomposition {
    pub v: usize,
    /// N(v).
    pub a: Vec<usize>,
    /// Distance exactly 2.
    pub c: Vec<usize>,
    /// Distance at least 3.
    pub d: Vec<usize>,
    /// Members of `c` with a neighbour in `d`.
    pub script_c: Vec<usize>,
    pub alpha: Option<f64>,
    pub case_tag: CaseTag,
    /// Degree used in `alpha` (the common degree, or the minimum degree for
    /// non-regular input).
    pub degree: usize,
    pub eps1: f64,
    /// Set when the graph is not regular and `degree` is the minimum degree.
    pub extended_semantics: bool,
}

pub fn vertex_decomposition(g: &Graph, v: usize, eps1: f64) -> Result<Decomposition> {
    check_vertex(g, v)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (degree, extended_semantics) = match g.regular_degree() {
        Some(d) => (d, false),
        None => (g.min_degree(), true),
    };
    Ok(decompose(g, v, eps1, degree, extended_semantics))
}

fn decompose(g: &Graph, v: usize, eps1: f64, degree: usize, extended_semantics: bool) -> Decomposition {
    let a: Vec<usize> = g.neighbors(v).collect();
    let c = second_shell(g, v);
    let mut inner = g.row(v).clone();
    inner.insert(v);
    for &x in &c {
        inner.insert(x);
    }
    let d: Vec<usize> = (0..g.n()).filter(|&x| !inner.contains(x)).collect();

    let script_c: Vec<usize> = c
        .iter()
        .copied()
        .filter(|&x| g.row(x).ones().any(|y| !inner.contains(y)))
        .collect();
    let best = script_c
        .iter()
        .map(|&x| g.row(x).intersection(g.row(v)).count())
        .max();
    let alpha = best.map(|b| (1.0 - eps1) / degree as f64 * b as f64);
    let case_tag = if c.is_empty() || d.is_empty() {
        CaseTag::Saturated
    } else if alpha.is_some_and(|al| al > 0.5) {
        CaseTag::Case2
    } else {
        CaseTag::Case1
    };
    Decomposition {
        v,
        a,
        c,
        d,
        script_c,
        alpha,
        case_tag,
        degree,
        eps1,
        extended_semantics,
    }
}

/// Decompositions of every vertex.
pub fn all_decompositions(g: &Graph, eps1: f64) -> Result<Vec<Decomposition>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let (degree, extended) = match g.regular_degree() {
        Some(d) => (d, false),
        None => (g.min_degree(), true),
    };
    Ok((0..g.n()).map(|v| decompose(g, v, eps1, degree, extended)).collect())
}

/// A shortest path between a diametral pair together with the edge count
/// across the cut (path vertices, rest).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeodesicCut {
    pub endpoints: (usize, usize),
    pub path: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub e_ab: usize,
    pub min_degree: usize,
    /// (delta + 1)(d - 2) + 2.
    pub lower: i64,
    /// 3|B|.
    pub upper: i64,
}

impl GeodesicCut {
    pub fn delta(&self) -> usize {
        self.path.len() - 1
    }

    pub fn bounds_hold(&self) -> bool {
        self.lower <= self.e_ab as i64 && self.e_ab as i64 <= self.upper
    }
}

/// Cut along the lexicographically smallest diametral pair.
pub fn geodesic_cut(g: &Graph) -> Result<GeodesicCut> {
    if g.n() < 2 {
        return Err(Error::InvalidArgument("geodesic cut needs at least 2 vertices".into()));
    }
    let table = g.distances();
    let delta = table.diameter()?;
    let (u, w) = (0..g.n())
        .flat_map(|u| (u + 1..g.n()).map(move |w| (u, w)))
        .find(|&(u, w)| table.get(u, w) == Some(delta))
        .expect("some pair realises the diameter");
    let path = shortest_path(g, &table, u, w);

    let n = g.n();
    let mut on_path = vec![false; n];
    for &x in &path {
        on_path[x] = true;
    }
    let a: Vec<usize> = (0..n).filter(|&x| on_path[x]).collect();
    let b: Vec<usize> = (0..n).filter(|&x| !on_path[x]).collect();
    let e_ab = path
        .iter()
        .map(|&x| g.neighbors(x).filter(|&y| !on_path[y]).count())
        .sum();
    let d = g.min_degree() as i64;
    Ok(GeodesicCut {
        endpoints: (u, w),
        lower: (delta as i64 + 1) * (d - 2) + 2,
        upper: 3 * b.len() as i64,
        path,
        a,
        b,
        e_ab,
        min_degree: d as usize,
    })
}

/// Walks back from `w`, always stepping to the smallest-index neighbour one
/// step closer to `u`.
fn shortest_path(g: &Graph, table: &DistanceTable, u: usize, w: usize) -> Vec<usize> {
    let mut path = vec![w];
    let mut x = w;
    while x != u {
        let dx = table.get(u, x).expect("connected");
        x = g
            .neighbors(x)
            .find(|&y| table.get(u, y) == Some(dx - 1))
            .expect("a predecessor exists on a shortest path");
        path.push(x);
    }
    path.reverse();
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, gdm, path};

    const EPS1: f64 = 0.2956;

    #[test]
    fn excess_neighbor_sets() {
        assert_eq!(excess_neighbors(&cycle(8).unwrap(), 0).unwrap(), vec![2, 6]);
        assert!(excess_neighbors(&complete(4).unwrap(), 0).unwrap().is_empty());
        assert_eq!(excess_neighbors(&path(4).unwrap(), 0).unwrap(), vec![2]);
        assert!(excess_neighbors(&path(4).unwrap(), 4).is_err());
    }

    #[test]
    fn v1_sets() {
        assert_eq!(v1_membership(&complete(4).unwrap(), 0.01).unwrap(), vec![0, 1, 2, 3]);
        assert!(v1_membership(&cycle(8).unwrap(), EPS1).unwrap().is_empty());
        // Second-shell sizes are 2 or 3 and eps1 * 3 < 1.
        let g = gdm(3, 4).unwrap();
        let sizes: Vec<usize> = (0..16).map(|v| excess_neighbors(&g, v).unwrap().len()).collect();
        assert!(sizes.iter().all(|&s| s == 2 || s == 3), "{sizes:?}");
        assert!(v1_membership(&g, EPS1).unwrap().is_empty());
        assert_eq!(v1_membership(&path(3).unwrap(), EPS1), Err(Error::NotRegular));
        assert!((default_eps1() - EPS1).abs() < 1e-4);
    }

    #[test]
    fn cycle_decomposition() {
        let dec = vertex_decomposition(&cycle(8).unwrap(), 0, EPS1).unwrap();
        assert_eq!(dec.a, vec![1, 7]);
        assert_eq!(dec.c, vec![2, 6]);
        assert_eq!(dec.d, vec![3, 4, 5]);
        assert_eq!(dec.script_c, vec![2, 6]);
        assert!((dec.alpha.unwrap() - 0.3522).abs() < 1e-4);
        assert_eq!(dec.case_tag, CaseTag::Case1);
        assert!(!dec.extended_semantics);
    }

    #[test]
    fn complete_graph_is_saturated() {
        let dec = vertex_decomposition(&complete(4).unwrap(), 0, EPS1).unwrap();
        assert_eq!(dec.a, vec![1, 2, 3]);
        assert!(dec.c.is_empty() && dec.d.is_empty() && dec.script_c.is_empty());
        assert_eq!(dec.alpha, None);
        assert_eq!(dec.case_tag, CaseTag::Saturated);
    }

    #[test]
    fn path_uses_min_degree() {
        let dec = vertex_decomposition(&path(4).unwrap(), 0, EPS1).unwrap();
        assert_eq!((dec.a.clone(), dec.c.clone(), dec.d.clone()), (vec![1], vec![2], vec![3]));
        assert!((dec.alpha.unwrap() - 0.7044).abs() < 1e-4);
        assert_eq!(dec.case_tag, CaseTag::Case2);
        assert!(dec.extended_semantics);
        assert_eq!(dec.degree, 1);
    }

    #[test]
    fn decomposition_errors() {
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_decomposition(&two, 0, EPS1), Err(Error::Disconnected));
        assert!(vertex_decomposition(&cycle(5).unwrap(), 5, EPS1).is_err());
    }

    #[test]
    fn geodesic_cuts() {
        let cut = geodesic_cut(&cycle(8).unwrap()).unwrap();
        assert_eq!(cut.endpoints, (0, 4));
        assert_eq!(cut.path, vec![0, 1, 2, 3, 4]);
        assert_eq!(cut.b, vec![5, 6, 7]);
        assert_eq!((cut.e_ab, cut.lower, cut.upper), (2, 2, 9));

        let cut = geodesic_cut(&path(5).unwrap()).unwrap();
        assert_eq!(cut.endpoints, (0, 4));
        assert!(cut.b.is_empty());
        assert_eq!((cut.e_ab, cut.lower, cut.upper), (0, -3, 0));

        let cut = geodesic_cut(&complete(4).unwrap()).unwrap();
        assert_eq!((cut.endpoints, cut.delta()), ((0, 1), 1));
        assert_eq!(cut.b, vec![2, 3]);
        assert_eq!((cut.e_ab, cut.lower, cut.upper), (4, 4, 6));
        assert!(cut.bounds_hold());

        assert!(geodesic_cut(&complete(1).unwrap()).is_err());
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(geodesic_cut(&two), Err(Error::Disconnected));
    }
}
