//! IO, parallel sampling and command-line plumbing around `gaussfit-core`.

pub mod cli;
pub mod parallel;
pub mod report;
pub mod sweep;

pub use cli::{run, Cli, Command};
