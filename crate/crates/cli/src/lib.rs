//! Library half of the `homalg` command line: the workspace format, backend
//! glue and command implementations. The binary is a thin wrapper.

pub mod backend;
pub mod commands;
pub mod error;
pub mod workspace;

pub use commands::{run, run_on_text, Cli, Command, Output};
pub use error::CliError;
