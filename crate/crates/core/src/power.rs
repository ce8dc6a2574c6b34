//! h-fold sumgraphs: the graph on the same vertices joining every pair at
//! hop distance at most h.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::{DistanceTable, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub h: usize,
    /// Edges of the h-fold sumgraph.
    pub total: usize,
    /// Edges of the h-fold sumgraph that are not edges of the base graph.
    pub excess: usize,
}

/// Edge counts of the h-fold sumgraphs for h = 1..=hmax.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerProfile {
    pub n: usize,
    pub base_edges: usize,
    pub rows: Vec<ProfileRow>,
}

impl PowerProfile {
    pub fn from_distances(table: &DistanceTable, hmax: usize) -> Result<Self> {
        if hmax == 0 {
            return Err(invalid("hmax must be at least 1"));
        }
        let hist = table.pair_histogram();
        let base_edges = hist.get(1).copied().unwrap_or(0);
        let mut total = 0;
        let rows = (1..=hmax)
            .map(|h| {
                total += hist.get(h).copied().unwrap_or(0);
                ProfileRow { h, total, excess: total - base_edges }
            })
            .collect();
        Ok(Self { n: table.n(), base_edges, rows })
    }

    pub fn row(&self, h: usize) -> Option<&ProfileRow> {
        self.rows.get(h.checked_sub(1)?)
    }
}

pub fn power_graph(g: &Graph, h: usize) -> Result<Graph> {
    if h == 0 {
        return Err(invalid("power h must be at least 1"));
    }
    if h == 1 {
        return Ok(g.clone());
    }
    Ok(power_from_distances(&g.distances(), h))
}

pub(crate) fn power_from_distances(table: &DistanceTable, h: usize) -> Graph {
    let n = table.n();
    let rows = (0..n)
        .map(|v| {
            let mut row = FixedBitSet::with_capacity(n);
            for (u, d) in table.row(v).enumerate() {
                if matches!(d, Some(d) if d >= 1 && d <= h) {
                    row.insert(u);
                }
            }
            row
        })
        .collect();
    Graph::from_rows(rows)
}

pub fn edge_growth(g: &Graph, hmax: usize) -> Result<PowerProfile> {
    PowerProfile::from_distances(&g.distances(), hmax)
}
