//! Sumgraphs of undirected graphs: h-fold powers, their edge growth, the
//! bounds they satisfy for Cayley and regular graphs, and searches for
//! regular graphs with slow growth.
//!
//! The h-fold sumgraph `hG` joins every pair of distinct vertices at
//! distance at most `h` in `G`.

pub mod checks;
pub mod constructions;
pub mod diagnostics;
mod error;
pub mod graph;
pub mod power;
pub mod search;
pub mod sumset;

pub use error::{Error, Result};
pub use graph::{parse_edge_list, serialize_edge_list, DistanceTable, Graph, MAX_VERTICES};
pub use power::{edge_growth, power_graph, PowerProfile, ProfileRow};
pub use sumset::ResidueSet;
