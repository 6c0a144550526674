//! Clique enumeration over filtered graphs.
//!
//! The crate builds edge filtrations (from CSV edge lists, ASCII point
//! clouds via a Vietoris–Rips scan, or synthetic complete graphs) and
//! enumerates the cliques they carry with two incremental enumerator
//! families — one keyed on clique boundary faces, one on per-dimension node
//! neighbourhood layers — plus three classic triangle baselines and a
//! brute-force oracle for cross-checking.

pub mod boundary;
pub mod classic;
pub mod clique;
pub mod error;
pub mod filtration;
pub mod multilayer;
pub mod neighborhood;
pub mod oracle;
pub mod report;
pub mod runner;
pub mod sink;

pub use clique::{Clique, NodeId, NodeSet};
pub use error::{Error, Result};
pub use filtration::{
    build_vr_edges, build_vr_edges_sequential, complete_graph, parse_csv_edges, parse_pcd_ascii,
    parse_weighted_csv, CsvIngest, EdgeStream, FilteredEdge, OrderPolicy, PointCloud,
};
pub use oracle::{brute_force_cliques, brute_force_cliques_capped, per_dim_census};
pub use report::{
    peak_rss_bytes, resolve_count_convention, write_report_csv, write_report_ndjson, BenchRow,
    CountConvention, RunStatus,
};
pub use runner::Algorithm;
pub use sink::{CliqueSink, CollectingSink, CountingSink, NdjsonSink, RunSummary};
