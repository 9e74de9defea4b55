//! Verification targets, scans and reports for Haar graph symmetry.

pub mod cache;
pub mod claims;
pub mod report;
pub mod scan;
pub mod targets;

pub use cache::Cache;
pub use report::{Row, RowStatus, VerificationReport};
pub use scan::{scan, Context, ScanOptions, ScanRecord, ScanSummary};
pub use targets::{run_scan, run_target, TargetParams, TARGETS};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
