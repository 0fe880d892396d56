//! Front end for the `breakdiv` library: graph files, report formatting, the
//! subcommands behind the `breakdiv` binary and the `verify` suite.

pub mod commands;
pub mod error;
pub mod graph_file;
pub mod output;
pub mod verify;

pub use error::{CliError, Result};
