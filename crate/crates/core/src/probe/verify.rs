//! Partitioned verification and the enhanced graph.

use alloc::vec;
use alloc::vec::Vec;

use crate::decomposition::{block_decomposition, BlockDecomposition};
use crate::graph::{Graph, Vertex};

use super::{
    Certificate, Embedding, ProbeError, ProbePartition, RecognitionOutcome, Refutation, Target,
};

fn check_range(g: &Graph, sets: &[&[Vertex]]) -> Result<(), ProbeError> {
    let n = g.order();
    match sets.iter().flat_map(|s| s.iter()).find(|&&v| v >= n) {
        Some(&vertex) => Err(ProbeError::VertexOutOfRange { vertex, n }),
        None => Ok(()),
    }
}

/// Membership bits: 1 for `N1`, 2 for `N2`.
fn membership(n: usize, p: &ProbePartition) -> Vec<u8> {
    let mut mem = vec![0u8; n];
    for &v in p.n1() {
        mem[v] |= 1;
    }
    for &v in p.n2() {
        mem[v] |= 2;
    }
    mem
}

fn dependent_edge(g: &Graph, set: &[Vertex], mem: &[u8], bit: u8) -> Option<(Vertex, Vertex)> {
    set.iter().find_map(|&v| {
        g.neighbors(v)
            .iter()
            .find(|&&w| mem[w] & bit != 0)
            .map(|&w| (v.min(w), v.max(w)))
    })
}

/// Decides whether adding every missing edge inside each block (or inside
/// the whole graph, for [`Target::Complete`]) is possible with edges inside
/// `N1` or inside `N2` only.
///
/// That holds iff both sets are independent and every non-adjacent pair
/// sharing a block lies inside `N1` or inside `N2`. The check is `O(n + m)`;
/// building the certificate adds `O(|E'| log |E'|)` for the `E'` added edges.
pub fn verify_partitioned<'g>(
    g: &'g Graph,
    n1: &[Vertex],
    n2: &[Vertex],
    target: Target,
) -> Result<RecognitionOutcome<'g>, ProbeError> {
    check_range(g, &[n1, n2])?;
    Ok(verify_checked(
        g,
        None,
        ProbePartition::new(n1.to_vec(), n2.to_vec()),
        target,
    ))
}

/// Scratch space sized to the graph, reset after each group.
struct Scratch {
    deg: Vec<usize>,
    to_n2: Vec<usize>,
    local: Vec<usize>,
    stamp: Vec<usize>,
    // local adjacency of the current group
    offsets: Vec<usize>,
    fill: Vec<usize>,
    adj: Vec<usize>,
}

/// Checks one group (a block, or the whole graph) and appends its missing
/// pairs to `added`. Returns the first uncovered pair on failure.
fn cover_group(
    set: &[Vertex],
    edges: &[(Vertex, Vertex)],
    mem: &[u8],
    s: &mut Scratch,
    added: &mut Vec<(Vertex, Vertex)>,
) -> Result<(), (Vertex, Vertex)> {
    let k = set.len();
    if edges.len() == k * k.saturating_sub(1) / 2 {
        return Ok(());
    }
    for &(u, v) in edges {
        s.deg[u] += 1;
        s.deg[v] += 1;
        if mem[u] == 1 && mem[v] == 2 {
            s.to_n2[u] += 1;
        } else if mem[v] == 1 && mem[u] == 2 {
            s.to_n2[v] += 1;
        }
    }
    let only_n2 = set.iter().filter(|&&v| mem[v] == 2).count();
    let failing = set.iter().copied().find(|&v| match mem[v] {
        0 => s.deg[v] != k - 1,
        1 => s.to_n2[v] != only_n2,
        _ => false,
    });
    for (i, &v) in set.iter().enumerate() {
        s.deg[v] = 0;
        s.to_n2[v] = 0;
        s.local[v] = i;
    }
    // local adjacency of the group, compressed
    s.offsets.clear();
    s.offsets.resize(k + 1, 0);
    for &(u, v) in edges {
        s.offsets[s.local[u] + 1] += 1;
        s.offsets[s.local[v] + 1] += 1;
    }
    for i in 0..k {
        s.offsets[i + 1] += s.offsets[i];
    }
    s.fill.clear();
    s.fill.extend_from_slice(&s.offsets[..k]);
    s.adj.clear();
    s.adj.resize(2 * edges.len(), 0);
    for &(u, v) in edges {
        let (a, b) = (s.local[u], s.local[v]);
        s.adj[s.fill[a]] = b;
        s.fill[a] += 1;
        s.adj[s.fill[b]] = a;
        s.fill[b] += 1;
    }
    let stamp_row = |i: usize, s: &mut Scratch| {
        for t in s.offsets[i]..s.offsets[i + 1] {
            let j = s.adj[t];
            s.stamp[set[j]] = i + 1;
        }
    };
    if let Some(v) = failing {
        let i = s.local[v];
        stamp_row(i, s);
        let w = set
            .iter()
            .copied()
            .find(|&w| w != v && s.stamp[w] != i + 1 && (mem[v] == 0 || mem[w] == 2))
            .expect("a failing vertex has an uncovered partner");
        for &w in set {
            s.stamp[w] = 0;
        }
        return Err((v.min(w), v.max(w)));
    }
    for i in 0..k {
        stamp_row(i, s);
        for j in i + 1..k {
            if s.stamp[set[j]] != i + 1 {
                added.push((set[i], set[j]));
            }
        }
    }
    for &w in set {
        s.stamp[w] = 0;
    }
    Ok(())
}

/// Verification for vertex ids already known to be in range.
pub(crate) fn verify_checked<'g>(
    g: &'g Graph,
    bd: Option<&BlockDecomposition>,
    partition: ProbePartition,
    target: Target,
) -> RecognitionOutcome<'g> {
    let n = g.order();
    let mem = membership(n, &partition);
    for (bit, set) in [(1u8, partition.n1()), (2u8, partition.n2())] {
        if let Some(edge) = dependent_edge(g, set, &mem, bit) {
            return RecognitionOutcome::No(Refutation::DependentSets { set: bit, edge });
        }
    }
    let mut scratch = Scratch {
        deg: vec![0; n],
        to_n2: vec![0; n],
        local: vec![0; n],
        stamp: vec![0; n],
        offsets: Vec::new(),
        fill: Vec::new(),
        adj: Vec::new(),
    };
    let mut added = Vec::new();
    let outcome = match target {
        Target::Complete => {
            let all: Vec<Vertex> = g.vertices().collect();
            let edges: Vec<_> = g.edges().collect();
            cover_group(&all, &edges, &mem, &mut scratch, &mut added)
        }
        Target::Block => {
            let owned;
            let bd = match bd {
                Some(bd) => bd,
                None => {
                    owned = block_decomposition(g);
                    &owned
                }
            };
            (0..bd.len()).try_for_each(|b| {
                cover_group(
                    bd.block(b),
                    bd.block_edges(b),
                    &mem,
                    &mut scratch,
                    &mut added,
                )
            })
        }
    };
    if let Err(pair) = outcome {
        return RecognitionOutcome::No(Refutation::VerificationFailed { pair });
    }
    added.sort_unstable();
    let result = g
        .with_added_edges(&added)
        .expect("added pairs are in range");
    RecognitionOutcome::Yes(Certificate {
        partition,
        embedding: Embedding {
            host: g,
            added,
            result,
        },
    })
}

/// Which induced patterns trigger an added edge in [`enhanced_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EnhanceMode {
    /// Join `x, y ∈ N1` with adjacent common neighbors (a diamond). `N2` is
    /// ignored.
    Diamond,
    /// Join `x, y` in the same `Ni` with two common neighbors, adjacent
    /// (diamond) or not (C4).
    DiamondC4,
}

/// The enhanced graph: `g` plus `xy` for every non-adjacent `x, y` in the
/// same non-probe set that have two common neighbors as `mode` describes.
pub fn enhanced_graph<'g>(
    g: &'g Graph,
    n1: &[Vertex],
    n2: &[Vertex],
    mode: EnhanceMode,
) -> Result<Embedding<'g>, ProbeError> {
    let sets: &[&[Vertex]] = match mode {
        EnhanceMode::Diamond => &[n1],
        EnhanceMode::DiamondC4 => &[n1, n2],
    };
    check_range(g, sets)?;
    let n = g.order();
    let mut added = Vec::new();
    let mut inset = vec![false; n];
    let mut commons: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut touched = Vec::new();
    for (i, set) in sets.iter().enumerate() {
        for &v in set.iter() {
            inset[v] = true;
        }
        let set_no = i as u8 + 1;
        if let Some((u, v)) = set
            .iter()
            .find_map(|&v| g.neighbors(v).iter().find(|&&w| inset[w]).map(|&w| (v, w)))
        {
            return Err(ProbeError::DependentSet {
                set: set_no,
                edge: (u.min(v), u.max(v)),
            });
        }
        for &x in set.iter() {
            for &a in g.neighbors(x) {
                for &y in g.neighbors(a) {
                    if y > x && inset[y] {
                        if commons[y].is_empty() {
                            touched.push(y);
                        }
                        commons[y].push(a);
                    }
                }
            }
            for &y in &touched {
                let c = &commons[y];
                let hit = (0..c.len()).any(|p| {
                    (p + 1..c.len()).any(|q| {
                        let adjacent = g.has_edge(c[p], c[q]);
                        adjacent || mode == EnhanceMode::DiamondC4
                    })
                });
                if hit {
                    added.push((x, y));
                }
            }
            for &y in &touched {
                commons[y].clear();
            }
            touched.clear();
        }
        for &v in set.iter() {
            inset[v] = false;
        }
    }
    added.sort_unstable();
    added.dedup();
    let result = g.with_added_edges(&added).expect("pairs are in range");
    Ok(Embedding {
        host: g,
        added,
        result,
    })
}
