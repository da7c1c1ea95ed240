//! Library half of the `rbc` command-line tool: the structure file format,
//! JSON reports, and the command implementations.

pub mod commands;
pub mod error;
pub mod format;
pub mod report;

pub use error::{CliError, Result};
pub use format::{Kind, StructureFile};
