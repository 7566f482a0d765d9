//! Probe recognition: partitioned verification, the enhanced graph, and the
//! unpartitioned recognizers for 1- and 2-probe block graphs and 2-probe
//! complete graphs.

mod find;
mod sides;
mod verify;

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::decomposition::block_decomposition;
use crate::graph::{Graph, Vertex};
use crate::structure::{kxyz, KxyzFailure};

pub use find::{block_structures, find_nonprobes, FindError};
pub use sides::{solve_sides, SideConflict};
pub use verify::{enhanced_graph, verify_partitioned, EnhanceMode};

/// The class an embedding must land in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Target {
    /// Every block becomes a clique.
    Block,
    /// The whole graph becomes a clique.
    Complete,
}

/// The non-probe sets `N1` and `N2`, each sorted and duplicate-free. A
/// vertex may belong to both. Vertices in neither are probes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ProbePartition {
    n1: Vec<Vertex>,
    n2: Vec<Vertex>,
}

impl ProbePartition {
    pub fn new(mut n1: Vec<Vertex>, mut n2: Vec<Vertex>) -> Self {
        n1.sort_unstable();
        n1.dedup();
        n2.sort_unstable();
        n2.dedup();
        ProbePartition { n1, n2 }
    }

    pub fn n1(&self) -> &[Vertex] {
        &self.n1
    }

    pub fn n2(&self) -> &[Vertex] {
        &self.n2
    }

    /// Vertices of `0..n` in neither set.
    pub fn probes(&self, n: usize) -> Vec<Vertex> {
        (0..n)
            .filter(|v| self.n1.binary_search(v).is_err() && self.n2.binary_search(v).is_err())
            .collect()
    }

    /// `|N1| + |N2|`.
    pub fn weight(&self) -> usize {
        self.n1.len() + self.n2.len()
    }
}

/// `host` plus the `added` edges (sorted, `u < v`) is `result`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding<'g> {
    pub host: &'g Graph,
    pub added: Vec<(Vertex, Vertex)>,
    pub result: Graph,
}

/// Proof of membership: the non-probe sets and the embedding they allow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate<'g> {
    pub partition: ProbePartition,
    pub embedding: Embedding<'g>,
}

/// Branch of the non-probe search that hit a contradiction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BranchCase {
    /// The cut vertex is universal in its block and already in both sets.
    C1Both,
    /// The cut vertex is universal and in one set, but the block needs more
    /// than its isolated part added to the other set.
    C1One,
    /// The cut vertex is not universal and has a neighbor in both sets.
    C2Common,
    /// The cut vertex is not universal and has neighbors in `N1` and in
    /// `N2`, though no common one.
    C2BothSides,
    /// No non-probe neighbors, but the cut vertex is in both sets outside Z.
    C21,
    /// Non-probe neighbors on one side only, the cut vertex lies in Z and
    /// the block has a nonempty bipartite part.
    C22,
}

impl BranchCase {
    pub fn tag(self) -> &'static str {
        match self {
            BranchCase::C1Both => "C1-both",
            BranchCase::C1One => "C1-one",
            BranchCase::C2Common => "C2-common",
            BranchCase::C2BothSides => "C2-both-sides",
            BranchCase::C21 => "C2.1",
            BranchCase::C22 => "C2.2",
        }
    }
}

/// Why a graph is not in the class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    /// Block `block` is not a (K, X, Y, Z)-graph; vertices in `reason` are
    /// ids of the input graph.
    BadBlock { block: usize, reason: KxyzFailure },
    /// The whole graph is not a (K, X, Y, Z)-graph.
    NotKxyz(KxyzFailure),
    /// The non-probe search failed at `block`, glued at `cut_vertex`.
    ImpossibleBranch {
        case: BranchCase,
        block: usize,
        cut_vertex: Vertex,
    },
    /// `pair` must be joined but is inside neither set.
    VerificationFailed { pair: (Vertex, Vertex) },
    /// `N{set}` contains the edge `edge`.
    DependentSets { set: u8, edge: (Vertex, Vertex) },
    /// Exhaustive search tried this many candidate `N1` and none worked.
    NoValidPartition { candidates: usize },
}

impl Refutation {
    /// Short name of the stage or check that produced the refutation.
    pub fn stage(&self) -> &'static str {
        match self {
            Refutation::BadBlock { .. } => "block-structure",
            Refutation::NotKxyz(_) => "kxyz",
            Refutation::ImpossibleBranch { .. } => "find-nonprobes",
            Refutation::VerificationFailed { .. } | Refutation::DependentSets { .. } => {
                "verification"
            }
            Refutation::NoValidPartition { .. } => "exhaustive",
        }
    }
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refutation::BadBlock { block, reason } => {
                write!(f, "block {block} is not a (K,X,Y,Z)-graph: {reason}")
            }
            Refutation::NotKxyz(reason) => write!(f, "not a (K,X,Y,Z)-graph: {reason}"),
            Refutation::ImpossibleBranch {
                case,
                block,
                cut_vertex,
            } => {
                write!(
                    f,
                    "case {} fails at block {block}, cut vertex {cut_vertex}",
                    case.tag()
                )
            }
            Refutation::VerificationFailed { pair: (u, v) } => {
                write!(
                    f,
                    "non-edge {u}-{v} must be added but is inside neither set"
                )
            }
            Refutation::DependentSets { set, edge: (u, v) } => {
                write!(f, "N{set} contains the edge {u}-{v}")
            }
            Refutation::NoValidPartition { candidates } => {
                write!(f, "none of {candidates} candidate partitions works")
            }
        }
    }
}

impl fmt::Display for KxyzFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            KxyzFailure::TwoComponents {
                first: (a, b),
                second: (c, d),
            } => {
                write!(f, "edges {a}-{b} and {c}-{d} lie in different components after removing universal vertices")
            }
            KxyzFailure::OddCycle { edge: (a, b) } => write!(f, "edge {a}-{b} closes an odd cycle"),
            KxyzFailure::MissingCrossEdge { x, y } => {
                write!(f, "{x} and {y} are on opposite sides but not adjacent")
            }
        }
    }
}

/// Result of a recognizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecognitionOutcome<'g> {
    Yes(Certificate<'g>),
    No(Refutation),
}

impl<'g> RecognitionOutcome<'g> {
    pub fn is_yes(&self) -> bool {
        matches!(self, RecognitionOutcome::Yes(_))
    }

    pub fn certificate(&self) -> Option<&Certificate<'g>> {
        match self {
            RecognitionOutcome::Yes(c) => Some(c),
            RecognitionOutcome::No(_) => None,
        }
    }

    pub fn refutation(&self) -> Option<&Refutation> {
        match self {
            RecognitionOutcome::Yes(_) => None,
            RecognitionOutcome::No(r) => Some(r),
        }
    }
}

/// Invalid input to a partitioned routine.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ProbeError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("N{set} is not independent: it contains the edge {}-{}", .edge.0, .edge.1)]
    DependentSet { set: u8, edge: (Vertex, Vertex) },
}

/// Stages of [`recognize_2probe_block_with`], reported as each one starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Decomposition,
    BlockStructure,
    FindNonprobes,
    Verification,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Decomposition => "decomposition",
            Stage::BlockStructure => "block-structure",
            Stage::FindNonprobes => "find-nonprobes",
            Stage::Verification => "verification",
        }
    }
}

/// Decides whether `g` is a 2-probe block graph in `O(n + m)`.
pub fn recognize_2probe_block(g: &Graph) -> RecognitionOutcome<'_> {
    recognize_2probe_block_with(g, |_| {})
}

/// [`recognize_2probe_block`], calling `on_stage` as each stage begins.
pub fn recognize_2probe_block_with(
    g: &Graph,
    mut on_stage: impl FnMut(Stage),
) -> RecognitionOutcome<'_> {
    on_stage(Stage::Decomposition);
    let bd = block_decomposition(g);
    on_stage(Stage::BlockStructure);
    let structures = match block_structures(g, &bd) {
        Ok(s) => s,
        Err(r) => return RecognitionOutcome::No(r),
    };
    on_stage(Stage::FindNonprobes);
    let first = match find_nonprobes(g, &bd, &structures) {
        Ok(p) => Ok(p),
        Err(FindError::Impossible {
            case,
            block,
            cut_vertex,
        }) => Err(RecognitionOutcome::No(Refutation::ImpossibleBranch {
            case,
            block,
            cut_vertex,
        })),
        Err(FindError::MissingStructure(_)) => unreachable!("one structure per block"),
    };
    let outcome = match first {
        Ok(partition) => {
            on_stage(Stage::Verification);
            verify::verify_checked(g, Some(&bd), partition, Target::Block)
        }
        Err(no) => no,
    };
    if outcome.is_yes() {
        return outcome;
    }
    // The case analysis commits to a side wherever it has a free choice, and
    // a later block can need the other one. The parity solver is exact.
    match solve_sides(g, &structures) {
        Ok(partition) => {
            on_stage(Stage::Verification);
            verify::verify_checked(g, Some(&bd), partition, Target::Block)
        }
        Err(_) => outcome,
    }
}

/// Decides whether `g` is a (1-)probe block graph in `O(n + m)`.
///
/// Runs the 2-probe recognizer; a certificate with `N2 = ∅` is final,
/// otherwise the answer is decided by verifying `(N1, ∅)`.
pub fn recognize_probe_block(g: &Graph) -> RecognitionOutcome<'_> {
    match recognize_2probe_block(g) {
        RecognitionOutcome::Yes(cert) if !cert.partition.n2().is_empty() => {
            let partition = ProbePartition::new(cert.partition.n1, Vec::new());
            verify::verify_checked(g, None, partition, Target::Block)
        }
        other => other,
    }
}

/// Decides whether `g` is a 2-probe complete graph, i.e. a
/// (K, X, Y, Z)-graph, with `N1 = X ∪ Z` and `N2 = Y ∪ Z`.
pub fn recognize_2probe_complete(g: &Graph) -> RecognitionOutcome<'_> {
    let p = match kxyz(g) {
        Ok(p) => p,
        Err(e) => return RecognitionOutcome::No(Refutation::NotKxyz(e)),
    };
    let n1 = p.x.iter().chain(&p.z).copied().collect();
    let n2 = p.y.iter().chain(&p.z).copied().collect();
    verify::verify_checked(g, None, ProbePartition::new(n1, n2), Target::Complete)
}
