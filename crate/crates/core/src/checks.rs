//! Executable verdicts for the growth and diameter inequalities.
//!
//! Every check compares an exact left-hand side against a right-hand side
//! that is an integer, an exact rational, or (when the growth constant is
//! involved) a bracket `[lo, hi]` of reals.

use num_rational::Ratio;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::constructions::circulant_from_set;
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::power::PowerProfile;
use crate::sumset::{is_prime, ResidueSet};

/// Bracket `[lo, hi]` around the positive root of
/// `f(e) = e - (1 - sqrt(e))^3 / 4`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EpsilonBracket {
    pub lo: f64,
    pub hi: f64,
}

impl EpsilonBracket {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    /// sqrt of the midpoint, the per-vertex threshold used by the
    /// decomposition diagnostics.
    pub fn eps1(&self) -> f64 {
        self.mid().sqrt()
    }
}

pub fn epsilon_equation(e: f64) -> f64 {
    e - (1.0 - e.sqrt()).powi(3) / 4.0
}

/// Bisection on `[0, 1/4]`, where `f` is strictly increasing.
pub fn epsilon_star(tol: f64) -> Result<EpsilonBracket> {
    if !(tol > 0.0 && tol < 0.1) {
        return Err(invalid(format!("tolerance must lie in (0, 0.1), got {tol}")));
    }
    let (mut lo, mut hi) = (0.0f64, 0.25f64);
    debug_assert!(epsilon_equation(lo) < 0.0 && epsilon_equation(hi) > 0.0);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if epsilon_equation(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(EpsilonBracket { lo, hi })
}

/// Bracket used by the graph checks.
pub fn default_epsilon() -> EpsilonBracket {
    epsilon_star(1e-12).expect("fixed tolerance is in range")
}

#[derive(Debug, Clone, PartialEq)]
pub enum Quantity {
    Int(i64),
    Rational(Ratio<i64>),
    Bracket { lo: f64, hi: f64 },
}

impl Quantity {
    pub fn as_f64(&self) -> f64 {
        match self {
            Quantity::Int(v) => *v as f64,
            Quantity::Rational(r) => *r.numer() as f64 / *r.denom() as f64,
            Quantity::Bracket { lo, hi } => 0.5 * (lo + hi),
        }
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Quantity::Int(v) => serializer.serialize_i64(*v),
            Quantity::Rational(r) => {
                let mut st = serializer.serialize_struct("Rational", 3)?;
                st.serialize_field("num", r.numer())?;
                st.serialize_field("den", r.denom())?;
                st.serialize_field("value", &self.as_f64())?;
                st.end()
            }
            Quantity::Bracket { lo, hi } => {
                let mut st = serializer.serialize_struct("Bracket", 2)?;
                st.serialize_field("lo", lo)?;
                st.serialize_field("hi", hi)?;
                st.end()
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Fails,
    /// Holds against the low end of the bracket but not the high end.
    Borderline,
    /// Hypotheses not met; the implication holds vacuously.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub branch: String,
    pub holds: bool,
    pub status: Status,
    pub details: String,
}

impl Verdict {
    fn new(name: &str, lhs: Quantity, rhs: Quantity, branch: &str, status: Status, details: String) -> Self {
        Self {
            name: name.to_string(),
            lhs,
            rhs,
            branch: branch.to_string(),
            holds: matches!(status, Status::Holds | Status::NotApplicable),
            status,
            details,
        }
    }

    pub fn not_applicable(name: &str, reason: &str) -> Self {
        Self::new(
            name,
            Quantity::Int(0),
            Quantity::Int(0),
            "not-applicable",
            Status::NotApplicable,
            reason.to_string(),
        )
    }

    fn exact(name: &str, lhs: i64, rhs: i64, branch: &str, details: String) -> Self {
        let status = if lhs >= rhs { Status::Holds } else { Status::Fails };
        Self::new(name, Quantity::Int(lhs), Quantity::Int(rhs), branch, status, details)
    }
}

fn choose2(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

/// min{p, h|A| - (h - 1)}.
pub fn cd_bound(p: usize, set_size: usize, h: usize) -> i64 {
    let linear = h as i64 * set_size as i64 - (h as i64 - 1);
    linear.min(p as i64)
}

fn require_prime(p: usize) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// |hA| >= min{p, h|A| - (h - 1)} for h = 1..=hmax.
pub fn check_cauchy_davenport(p: usize, a: &ResidueSet, hmax: usize) -> Result<Vec<Verdict>> {
    require_prime(p)?;
    if a.modulus() != p {
        return Err(invalid(format!("set has modulus {}, expected {p}", a.modulus())));
    }
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if hmax == 0 {
        return Err(invalid("hmax must be at least 1"));
    }
    let mut out = Vec::with_capacity(hmax);
    let mut sum = a.clone();
    for h in 1..=hmax {
        if h > 1 {
            sum = sum.sum(a)?;
        }
        let lhs = sum.len() as i64;
        let branch = if sum.is_full() { "saturated" } else { "growth" };
        out.push(Verdict::exact(
            "cauchy-davenport",
            lhs,
            cd_bound(p, a.len(), h),
            branch,
            format!("p={p} A={{{a}}} h={h}"),
        ));
    }
    Ok(out)
}

/// |hE| >= min{C(p,2), h|E|} for the loop-free Cayley graph of `a` on Z_p.
pub fn check_thm14(p: usize, a: &ResidueSet, hmax: usize) -> Result<Vec<Verdict>> {
    require_prime(p)?;
    if a.modulus() != p {
        return Err(invalid(format!("set has modulus {}, expected {p}", a.modulus())));
    }
    if !a.contains(0) {
        return Err(Error::MissingZero);
    }
    if !a.is_symmetric() {
        return Err(Error::NotSymmetric(format!("{{{a}}} mod {p}")));
    }
    let cayley = circulant_from_set(&a.without(0))?;
    let profile = PowerProfile::from_distances(&cayley.graph.distances(), hmax)?;
    let edges = profile.base_edges as i64;
    let pairs = choose2(p);
    Ok(profile
        .rows
        .iter()
        .map(|row| {
            let lhs = row.total as i64;
            let branch = if lhs == pairs { "saturated" } else { "growth" };
            Verdict::exact(
                "thm14-cayley-growth",
                lhs,
                pairs.min(row.h as i64 * edges),
                branch,
                format!("p={p} A={{{a}}} h={} |E|={edges}", row.h),
            )
        })
        .collect())
}

/// |3E| >= min{C(n,2), (1 + eps)|E|} for connected regular graphs.
///
/// `branch` names the disjunct that is satisfied: `saturated` when the
/// 3-fold sumgraph is complete, `growth` otherwise. Non-regular input is an
/// error; the CLI turns it into a not-applicable verdict.
pub fn check_thm15(g: &Graph) -> Result<Verdict> {
    check_thm15_with(g, &default_epsilon())
}

pub fn check_thm15_with(g: &Graph, eps: &EpsilonBracket) -> Result<Verdict> {
    let table = g.distances();
    if !table.is_connected() {
        return Err(Error::Disconnected);
    }
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    let profile = PowerProfile::from_distances(&table, 3)?;
    Ok(thm15_verdict(g.n(), d, profile.base_edges, profile.rows[2].total, eps))
}

pub(crate) fn thm15_verdict(n: usize, d: usize, edges: usize, total3: usize, eps: &EpsilonBracket) -> Verdict {
    let pairs = choose2(n);
    let lhs = total3 as i64;
    let (rhs_lo, rhs_hi) = (
        (pairs as f64).min((1.0 + eps.lo) * edges as f64),
        (pairs as f64).min((1.0 + eps.hi) * edges as f64),
    );
    let status = if lhs as f64 >= rhs_hi {
        Status::Holds
    } else if lhs as f64 >= rhs_lo {
        Status::Borderline
    } else {
        Status::Fails
    };
    let rhs = if pairs as f64 <= (1.0 + eps.lo) * edges as f64 {
        Quantity::Int(pairs)
    } else {
        Quantity::Bracket { lo: rhs_lo, hi: rhs_hi }
    };
    let branch = if lhs == pairs { "saturated" } else { "growth" };
    Verdict::new(
        "thm15-cube-growth",
        Quantity::Int(lhs),
        rhs,
        branch,
        status,
        format!("n={n} d={d} |E|={edges} |3E|={total3} C(n,2)={pairs}"),
    )
}

/// (3n - (d + 3)) / (d + 1) with d the minimum degree.
pub fn prop16_bound(n: usize, min_degree: usize) -> Ratio<i64> {
    let (n, d) = (n as i64, min_degree as i64);
    Ratio::new(3 * n - (d + 3), d + 1)
}

/// diam(G) <= (3n - (d + 3)) / (d + 1) for connected G of minimum degree d.
pub fn check_prop16(g: &Graph) -> Result<Verdict> {
    let diameter = g.diameter()?;
    let d = g.min_degree();
    let bound = prop16_bound(g.n(), d);
    let status = if Ratio::from_integer(diameter as i64) <= bound {
        Status::Holds
    } else {
        Status::Fails
    };
    Ok(Verdict::new(
        "prop16-diameter",
        Quantity::Rational(bound),
        Quantity::Int(diameter as i64),
        "diameter",
        status,
        format!("n={} min_degree={d} diameter={diameter}", g.n()),
    ))
}

/// Excess of the 2-fold sumgraph over the base graph, per vertex.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Conj18Stat {
    pub n: usize,
    pub d: usize,
    /// False when the 2-fold sumgraph is already complete.
    pub applicable: bool,
    pub excess2: usize,
    pub per_n: f64,
    /// `excess2 >= n/2`, asserted when applicable and `n >= d + 2`.
    pub trivial_bound: Option<bool>,
}

impl Conj18Stat {
    pub fn per_n_exact(&self) -> Ratio<i64> {
        Ratio::new(self.excess2 as i64, self.n as i64)
    }

    pub fn verdict(&self) -> Verdict {
        let rhs = Quantity::Rational(Ratio::new(self.n as i64, 2));
        let details = format!("n={} d={} excess2={} per_n={}", self.n, self.d, self.excess2, self.per_n);
        match self.trivial_bound {
            None => Verdict::new(
                "conj18-excess2",
                Quantity::Int(self.excess2 as i64),
                rhs,
                "saturated",
                Status::NotApplicable,
                details,
            ),
            Some(holds) => Verdict::new(
                "conj18-excess2",
                Quantity::Int(self.excess2 as i64),
                rhs,
                "trivial-bound",
                if holds { Status::Holds } else { Status::Fails },
                details,
            ),
        }
    }
}

pub fn conj18_stat(g: &Graph) -> Result<Conj18Stat> {
    let table = g.distances();
    if !table.is_connected() {
        return Err(Error::Disconnected);
    }
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    let profile = PowerProfile::from_distances(&table, 2)?;
    Ok(conj18_from_counts(g.n(), d, profile.rows[1].total, profile.rows[1].excess))
}

pub(crate) fn conj18_from_counts(n: usize, d: usize, total2: usize, excess2: usize) -> Conj18Stat {
    let applicable = total2 as i64 != choose2(n);
    let trivial_bound = (applicable && n >= d + 2).then_some(2 * excess2 >= n);
    Conj18Stat {
        n,
        d,
        applicable,
        excess2,
        per_n: excess2 as f64 / n as f64,
        trivial_bound,
    }
}
