//! Command-line front end for `casimir-core`: argument handling, spectrum
//! files, parallel versions of the long sums, and report formatting.

pub mod config;
pub mod error;
pub mod format;
pub mod parallel;
pub mod report;
pub mod run;
pub mod spectrum_io;

pub use config::{Cli, RunConfig};
pub use error::{CliError, Result};
pub use report::OutputFormat;
pub use run::{build_report, run};
