//! File formats, fixture library and command-line front end for computing
//! Manin products of binary quadratic operads.

pub mod cli;
pub mod fixtures;
pub mod format;

pub use format::{parse_operad, write_amx, write_operad, FormatError};
