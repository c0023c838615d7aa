//! Std side of the simultaneous conjugacy solver: instance files, seeded
//! generators, the scaling benchmark, and the output formats of the `scp`
//! command.

pub mod bench;
mod error;
pub mod gen;
pub mod instance;
pub mod report;

pub use error::{CliError, ParseError};
