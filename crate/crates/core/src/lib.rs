//! Certificate-producing recognition of probe block graphs.
//!
//! A graph is a *k-probe block graph* when it has `k` independent sets
//! `N1..Nk` of non-probe vertices such that adding some edges, each with both
//! ends inside one `Ni`, turns it into a block graph (every biconnected
//! component a clique). This crate decides membership for `k = 1, 2` in
//! linear time and, on a positive answer, returns the sets together with the
//! embedding that proves it. Negative answers carry a refutation: the block or
//! case that failed, an uncovered vertex pair, or a forbidden pattern.
//!
//! The crate is `no_std` and needs only `alloc`. File formats and the
//! command-line front end live in the `probe-block` crate.
//!
//! ```
//! use probe_block_core::{graph::Graph, probe::recognize_2probe_block};
//!
//! // C4 is not a block graph, but completing both diagonals yields K4.
//! let c4 = Graph::cycle(4);
//! let outcome = recognize_2probe_block(&c4);
//! let cert = outcome.certificate().expect("C4 is a 2-probe block graph");
//! assert_eq!(cert.partition.n1(), &[0, 2]);
//! assert_eq!(cert.partition.n2(), &[1, 3]);
//! assert_eq!(cert.embedding.added, vec![(0, 2), (1, 3)]);
//! ```
#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod decomposition;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod probe;
pub mod structure;

pub use decomposition::{block_decomposition, BlockDecomposition};
pub use graph::{Graph, GraphError, Vertex};
pub use probe::{
    recognize_2probe_block, recognize_2probe_complete, recognize_probe_block, verify_partitioned,
    ProbePartition, RecognitionOutcome, Refutation, Target,
};
pub use structure::{kxyz, KxyzFailure, KxyzPartition};
