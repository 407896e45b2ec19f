//! Command-line front end for the `twinless` crate: instance loading,
//! report rendering, and the CSV benchmark harness.

pub mod app;
pub mod bench;
pub mod instance;
pub mod render;

pub use app::{run, run_args, Cli, Outcome};
pub use bench::{BenchOptions, BenchRecord, BenchSummary, Sweep};
pub use instance::{InstanceError, InstanceSpec};
