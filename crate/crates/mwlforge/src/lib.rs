//! File formats, reports and the command-line front end for `mwlforge-core`.

pub mod cli;
pub mod curvefile;
pub mod data;
pub mod error;
pub mod render;
pub mod report;

pub use error::{CliError, ExitKind};
