//! Harness library behind the `congruence-lab` binary: sweep specifications
//! and execution, report serialization, and the persistent sequence cache.
//!
//! Everything here is ordinary plumbing over the core engine; the binary in
//! `main.rs` only parses arguments and maps results to exit codes
//! (0 = all consistent, 1 = counterexample found, 2 = usage or data error).

pub mod cache_file;
pub mod commands;
pub mod report;
pub mod sweep;

pub use report::{render_csv, render_human, write_report};
pub use sweep::{run_sweep, Range, SweepError, SweepReport, SweepSpec, SweepSummary, Target};
