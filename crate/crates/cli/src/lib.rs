//! Command-line front end for `requitable-core`, plus the text coloring format
//! and JSON report shapes it reads and writes.

pub mod cli;
pub mod format;
pub mod json;
