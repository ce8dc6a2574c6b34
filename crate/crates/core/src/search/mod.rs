//! Exhaustive and random generation of connected regular graphs, and
//! extremal scans over their sumgraph growth.

mod canon;
mod enumerate;
mod random;
mod scan;

pub use canon::{canonical_code, canonical_form, labeled_code, CanonCode, DEDUP_CAP};
pub use enumerate::{enumerate_connected_regular, visit_connected_regular, EXHAUSTIVE_CAP};
pub use random::{candidate_rng, random_connected_regular, random_connected_regular_with, REJECTION_CAP};
pub use scan::{extremal_scan, search_record, Objective, ScanConfig, SearchRecord, Source, CSV_HEADER};
