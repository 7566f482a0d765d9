//! File formats, partition files and the command-line front end for
//! `probe-block-core`.

pub mod cli;
pub mod io;
pub mod partition;
pub mod report;

pub use probe_block_core as core;
