//! Tooling around [`mhg_core`]: the MHG v1 text format, multi-threaded
//! enumeration and the `mhg` command-line interface.

pub mod cli;
pub mod format;
pub mod parallel;

pub use format::{parse_mhg, write_mhg, ParseError};
