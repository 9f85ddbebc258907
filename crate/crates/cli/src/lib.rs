//! Batch front door for the engine: scenario files in, deterministic text or
//! JSON reports out, plus a seeded randomized verification suite and a
//! catalog of named worked examples.

pub mod catalog;
pub mod error;
pub mod report;
pub mod rng;
pub mod scenario;
pub mod suite;

pub use error::CliError;
pub use report::{ClassRow, OutputBlock, ScenarioReport};
pub use scenario::{execute, parse_spec, ExecOptions, ScenarioSpec};
pub use suite::{run_suite, SuiteParams, SuiteReport};

/// Engine identification string embedded in every report.
pub fn engine_version() -> String {
    format!("prochern {}", env!("CARGO_PKG_VERSION"))
}
