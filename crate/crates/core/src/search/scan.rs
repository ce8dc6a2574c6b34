use std::collections::BTreeMap;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::canon::{canonical_masks, code_bits, labeled_code, CanonCode, DEDUP_CAP};
use super::enumerate::{par_fold_masks, Mode};
use super::random::{candidate_rng, random_connected_regular_with};
use crate::error::{invalid, Error, Result};
use crate::graph::Graph;
use crate::power::PowerProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    /// |3E| / |E| over graphs whose 3-fold sumgraph is not complete.
    Min3Ratio,
    /// |2E \ E| / n over graphs whose 2-fold sumgraph is not complete.
    Min2Excess,
}

impl Objective {
    pub fn name(self) -> &'static str {
        match self {
            Objective::Min3Ratio => "min-3ratio",
            Objective::Min2Excess => "min-2excess",
        }
    }
}

impl std::str::FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min-3ratio" => Ok(Objective::Min3Ratio),
            "min-2excess" => Ok(Objective::Min2Excess),
            _ => Err(invalid(format!("unknown objective {s:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Source {
    /// Every connected d-regular graph on n vertices; with `dedup`, one
    /// representative per isomorphism class.
    Exhaustive { n: usize, d: usize, dedup: bool },
    /// `count` seeded samples; sample `i` uses stream `i` of `seed`.
    Random { n: usize, d: usize, count: usize, seed: u64 },
    /// An explicit list of connected regular graphs.
    Graphs(Vec<Graph>),
}

#[derive(Debug, Clone, Copy)]
pub struct ScanConfig {
    pub top_k: usize,
    /// Worker threads; 1 runs on the calling thread only.
    pub jobs: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self { top_k: 100, jobs: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchRecord {
    /// Canonical code for n up to [`DEDUP_CAP`], labelled code above it.
    pub canon: CanonCode,
    pub n: usize,
    pub d: usize,
    pub edges: usize,
    pub excess2: usize,
    pub total3: usize,
    pub diameter: usize,
    pub objective: Ratio<i64>,
}

pub const CSV_HEADER: &str = "n,d,edges,excess2,total3,diameter,objective";

impl SearchRecord {
    pub fn objective_value(&self) -> f64 {
        *self.objective.numer() as f64 / *self.objective.denom() as f64
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.n, self.d, self.edges, self.excess2, self.total3, self.diameter, self.objective
        )
    }

    fn key(&self) -> (Ratio<i64>, usize, CanonCode) {
        (self.objective, self.n, self.canon.clone())
    }
}

impl Serialize for SearchRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("SearchRecord", 9)?;
        st.serialize_field("canon", &self.canon)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("edges", &self.edges)?;
        st.serialize_field("excess2", &self.excess2)?;
        st.serialize_field("total3", &self.total3)?;
        st.serialize_field("diameter", &self.diameter)?;
        st.serialize_field("objective", &self.objective.to_string())?;
        st.serialize_field("objective_value", &self.objective_value())?;
        st.end()
    }
}

struct Metrics {
    n: usize,
    d: usize,
    edges: usize,
    total2: usize,
    total3: usize,
    diameter: usize,
}

fn metrics(g: &Graph) -> Result<Metrics> {
    let table = g.distances();
    let diameter = table.diameter()?;
    let d = g.regular_degree().ok_or(Error::NotRegular)?;
    let profile = PowerProfile::from_distances(&table, 3)?;
    Ok(Metrics {
        n: g.n(),
        d,
        edges: profile.base_edges,
        total2: profile.rows[1].total,
        total3: profile.rows[2].total,
        diameter,
    })
}

/// Objective value, or `None` when the relevant sumgraph is complete.
fn objective_of(m: &Metrics, objective: Objective) -> Option<Ratio<i64>> {
    let pairs = m.n * (m.n - 1) / 2;
    match objective {
        Objective::Min3Ratio => {
            (m.total3 != pairs).then(|| Ratio::new(m.total3 as i64, m.edges as i64))
        }
        Objective::Min2Excess => {
            (m.total2 != pairs).then(|| Ratio::new((m.total2 - m.edges) as i64, m.n as i64))
        }
    }
}

fn code_for(g: &Graph) -> CanonCode {
    if g.n() <= DEDUP_CAP {
        super::canon::canonical_code(g).expect("n within cap")
    } else {
        labeled_code(g)
    }
}

/// Record for one connected regular graph, or `None` when its sumgraph
/// saturates for the chosen objective.
pub fn search_record(g: &Graph, objective: Objective) -> Result<Option<SearchRecord>> {
    let m = metrics(g)?;
    Ok(objective_of(&m, objective).map(|value| record(&m, value, code_for(g))))
}

fn record(m: &Metrics, objective: Ratio<i64>, canon: CanonCode) -> SearchRecord {
    SearchRecord {
        canon,
        n: m.n,
        d: m.d,
        edges: m.edges,
        excess2: m.total2 - m.edges,
        total3: m.total3,
        diameter: m.diameter,
        objective,
    }
}

/// Keeps the `k` smallest records by (objective, n, canon); equal keys
/// collapse.
struct TopK {
    k: usize,
    records: BTreeMap<(Ratio<i64>, usize, CanonCode), SearchRecord>,
}

impl TopK {
    fn new(k: usize) -> Self {
        Self { k, records: BTreeMap::new() }
    }

    /// True if a record with this objective could still enter.
    fn admits(&self, objective: &Ratio<i64>) -> bool {
        self.records.len() < self.k
            || self.records.last_key_value().is_some_and(|((worst, _, _), _)| objective <= worst)
    }

    fn insert(&mut self, rec: SearchRecord) {
        if self.k == 0 {
            return;
        }
        self.records.insert(rec.key(), rec);
        if self.records.len() > self.k {
            self.records.pop_last();
        }
    }

    fn merge(&mut self, other: TopK) {
        for (_, rec) in other.records {
            self.insert(rec);
        }
    }

    fn into_vec(self) -> Vec<SearchRecord> {
        self.records.into_values().collect()
    }
}

fn mask_code(masks: &[u64], g: &Graph) -> CanonCode {
    let n = masks.len();
    if n <= DEDUP_CAP {
        CanonCode::from_u128(canonical_masks(masks).0, code_bits(n))
    } else {
        labeled_code(g)
    }
}

/// Ranks the candidates of `source` by `objective`, ascending, ties broken
/// by (n, canon). Output is identical for every `jobs` value.
pub fn extremal_scan(source: &Source, objective: Objective, config: &ScanConfig) -> Result<Vec<SearchRecord>> {
    if config.jobs == 0 {
        return Err(invalid("jobs must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| invalid(format!("thread pool: {e}")))?;
    pool.install(|| scan_inner(source, objective, config.top_k))
}

fn scan_inner(source: &Source, objective: Objective, top_k: usize) -> Result<Vec<SearchRecord>> {
    let mut top = TopK::new(top_k);
    match source {
        Source::Exhaustive { n, d, dedup } => {
            let mode = if *dedup { Mode::Classes } else { Mode::Labeled };
            if *dedup && *n > DEDUP_CAP {
                return Err(Error::DedupCap { n: *n, cap: DEDUP_CAP });
            }
            let parts = par_fold_masks(*n, *d, mode, || TopK::new(top_k), |acc: &mut TopK, masks| {
                let g = Graph::from_masks(masks);
                let m = metrics(&g).expect("enumerated graphs are connected and regular");
                if let Some(value) = objective_of(&m, objective) {
                    if acc.admits(&value) {
                        acc.insert(record(&m, value, mask_code(masks, &g)));
                    }
                }
            })?;
            for part in parts {
                top.merge(part);
            }
        }
        Source::Random { n, d, count, seed } => {
            let records: Vec<Option<SearchRecord>> = (0..*count as u64)
                .into_par_iter()
                .map(|i| {
                    let g = random_connected_regular_with(*n, *d, &mut candidate_rng(*seed, i))?;
                    search_record(&g, objective)
                })
                .collect::<Result<_>>()?;
            for rec in records.into_iter().flatten() {
                top.insert(rec);
            }
        }
        Source::Graphs(graphs) => {
            let records: Vec<Option<SearchRecord>> = graphs
                .par_iter()
                .map(|g| search_record(g, objective))
                .collect::<Result<_>>()?;
            for rec in records.into_iter().flatten() {
                top.insert(rec);
            }
        }
    }
    Ok(top.into_vec())
}
