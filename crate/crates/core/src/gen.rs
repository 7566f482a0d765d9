//! Reproducible instance generators.
//!
//! All randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded via
//! `SeedableRng::seed_from_u64(seed)`, which expands the 64-bit seed with
//! PCG32 (multiplier `6364136223846793005`, increment `11634580027462260723`)
//! into the 256-bit ChaCha key. Identical inputs give identical graphs and
//! certificates on every platform.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex};
use crate::probe::ProbePartition;

/// Knobs for [`random_block_graph`] and [`plant`].
#[derive(Clone, Debug, PartialEq)]
pub struct GenSpec {
    /// Number of vertices.
    pub n: usize,
    pub seed: u64,
    /// Smallest block size (at least 2).
    pub min_clique: usize,
    /// Largest block size.
    pub max_clique: usize,
    /// Probability that a new block is glued at an existing cut vertex
    /// instead of a uniformly random vertex. Higher values put more blocks
    /// around each cut vertex.
    pub cut_reuse: f64,
    /// Per block and per planted set, the probability that a random subset
    /// of the block (at least two vertices) is drafted into that set.
    pub draft: f64,
}

impl Default for GenSpec {
    fn default() -> Self {
        GenSpec {
            n: 16,
            seed: 0,
            min_clique: 2,
            max_clique: 5,
            cut_reuse: 0.3,
            draft: 0.5,
        }
    }
}

impl GenSpec {
    pub fn new(n: usize, seed: u64) -> Self {
        GenSpec {
            n,
            seed,
            ..GenSpec::default()
        }
    }
}

/// A tree of cliques on `spec.n` vertices, plus its blocks.
fn block_graph_with_blocks(spec: &GenSpec, rng: &mut ChaCha8Rng) -> (Graph, Vec<Vec<Vertex>>) {
    let n = spec.n;
    let lo = spec.min_clique.max(2);
    let hi = spec.max_clique.max(lo);
    let mut blocks: Vec<Vec<Vertex>> = Vec::new();
    let mut membership = vec![0u32; n];
    let mut cuts: Vec<Vertex> = Vec::new();
    let mut placed = n.min(1);
    while placed < n {
        let size = rng.gen_range(lo..=hi).min(n - placed + 1);
        let anchor = if !cuts.is_empty() && rng.gen_bool(spec.cut_reuse.clamp(0.0, 1.0)) {
            cuts[rng.gen_range(0..cuts.len())]
        } else {
            rng.gen_range(0..placed)
        };
        let mut block = Vec::with_capacity(size);
        block.push(anchor);
        block.extend(placed..placed + size - 1);
        placed += size - 1;
        membership[anchor] += 1;
        if membership[anchor] == 2 {
            cuts.push(anchor);
        }
        for &v in &block[1..] {
            membership[v] = 1;
        }
        blocks.push(block);
    }
    let edges: Vec<_> = blocks
        .iter()
        .flat_map(|b| {
            b.iter()
                .enumerate()
                .flat_map(move |(i, &u)| b[i + 1..].iter().map(move |&v| (u, v)))
        })
        .collect();
    let g = Graph::from_edges(n, edges).expect("generated edges are valid");
    (g, blocks)
}

/// A random connected block graph: cliques of random size glued along a
/// random tree at single vertices.
pub fn random_block_graph(spec: &GenSpec) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    block_graph_with_blocks(spec, &mut rng).0
}

/// Deletes from `host` every edge with both ends in `s1` or both ends in
/// `s2`. If `host` is a block graph the result, with `N1 = s1` and
/// `N2 = s2`, is a partitioned 2-probe block graph.
pub fn plant_into(host: &Graph, s1: &[Vertex], s2: &[Vertex]) -> (Graph, ProbePartition) {
    let n = host.order();
    let mut side = vec![0u8; n];
    for &v in s1 {
        side[v] |= 1;
    }
    for &v in s2 {
        side[v] |= 2;
    }
    let kept = host.edges().filter(|&(u, v)| side[u] & side[v] == 0);
    let g = Graph::from_edges(n, kept).expect("subgraph of a valid graph");
    (g, ProbePartition::new(s1.to_vec(), s2.to_vec()))
}

/// A planted `k`-probe block graph (`k` is 1 or 2) with its partition.
///
/// Starts from [`random_block_graph`] and drafts random subsets of blocks
/// into the planted sets, then deletes the edges inside each set.
pub fn plant(k: usize, spec: &GenSpec) -> (Graph, ProbePartition) {
    assert!(
        k == 1 || k == 2,
        "only 1- and 2-probe instances are planted"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let (host, blocks) = block_graph_with_blocks(spec, &mut rng);
    let mut sets: [Vec<Vertex>; 2] = [Vec::new(), Vec::new()];
    let mut marked = [vec![false; spec.n], vec![false; spec.n]];
    let draft = spec.draft.clamp(0.0, 1.0);
    let mut scratch = Vec::new();
    for block in &blocks {
        for i in 0..k {
            if !rng.gen_bool(draft) {
                continue;
            }
            let t = rng.gen_range(2..=block.len());
            scratch.clear();
            scratch.extend_from_slice(block);
            let (chosen, _) = scratch.partial_shuffle(&mut rng, t);
            for &v in chosen.iter() {
                if !marked[i][v] {
                    marked[i][v] = true;
                    sets[i].push(v);
                }
            }
        }
    }
    plant_into(&host, &sets[0], &sets[1])
}

/// Erdős–Rényi graph: each pair independently an edge with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = p.clamp(0.0, 1.0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid pairs")
}

/// The labeled graph on `n` vertices whose edge set is encoded by `mask`:
/// bit `k` stands for the `k`-th pair `(u, v)`, `u < v`, in lexicographic
/// order. Enumerating `mask` over `0..2^(n(n-1)/2)` lists every labeled graph.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).expect("valid pairs")
}

/// `n(n-1)/2`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}
