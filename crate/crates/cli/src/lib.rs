//! Command-line front end: JSON documents, DOT export, reports and the
//! subcommands that tie the core library together.

pub mod commands;
pub mod document;
pub mod dot;
pub mod report;

pub use commands::{run_command, run_command_with_seed, Outcome};
