//! Library side of the `arlab` binary: argument types, the result cache,
//! command dispatch and the claim suite.

pub mod args;
pub mod cache;
pub mod run;
pub mod suite;
mod table;

pub use run::{run, CliError, Output};
