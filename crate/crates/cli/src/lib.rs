//! File formats, reports, SVG output and the multi-threaded certification driver behind
//! the `muarr` command.

pub mod commands;
pub mod error;
pub mod format;
pub mod parallel;
pub mod report;
pub mod svg;

pub use commands::{Outcome, Status};
pub use error::CliError;
pub use format::{ArrangementFile, DiskRecord};
pub use report::ReportFile;
