//! Per-block structure and the non-probe search.

use alloc::vec;
use alloc::vec::Vec;

use crate::decomposition::BlockDecomposition;
use crate::graph::{Graph, Vertex};
use crate::structure::{kxyz, KxyzPartition, Role};

use super::{BranchCase, ProbePartition, Refutation};

/// Runs the (K, X, Y, Z) recognizer on every block, in `O(n + m)` overall.
/// Partitions use the ids of `g`.
pub fn block_structures(
    g: &Graph,
    bd: &BlockDecomposition,
) -> Result<Vec<KxyzPartition>, Refutation> {
    let mut local = vec![0usize; g.order()];
    let mut out = Vec::with_capacity(bd.len());
    for b in 0..bd.len() {
        let verts = bd.block(b);
        let edges = bd.block_edges(b);
        let k = verts.len();
        if edges.len() == k * k.saturating_sub(1) / 2 {
            out.push(KxyzPartition {
                k: verts.to_vec(),
                ..KxyzPartition::default()
            });
            continue;
        }
        for (i, &v) in verts.iter().enumerate() {
            local[v] = i;
        }
        let h = Graph::from_edges(k, edges.iter().map(|&(u, v)| (local[u], local[v])))
            .expect("block edges");
        match kxyz(&h) {
            Ok(p) => out.push(p.relabel(verts)),
            Err(reason) => {
                return Err(Refutation::BadBlock {
                    block: b,
                    reason: reason.relabel(verts),
                })
            }
        }
    }
    Ok(out)
}

/// Failure of [`find_nonprobes`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FindError {
    /// The graph is not a 2-probe block graph; `case` names the branch.
    Impossible {
        case: BranchCase,
        block: usize,
        cut_vertex: Vertex,
    },
    /// `structures` has no entry for this block.
    MissingStructure(usize),
}

/// Incrementally maintained `N1'`, `N2'` with per-vertex neighbor counts.
struct Sets<'a> {
    g: &'a Graph,
    mem: Vec<u8>,
    /// Neighbors in `N1'`, in `N2'`, in both.
    c1: Vec<u32>,
    c2: Vec<u32>,
    c12: Vec<u32>,
}

impl Sets<'_> {
    fn add(&mut self, v: Vertex, bit: u8) {
        let old = self.mem[v];
        let new = old | bit;
        if new == old {
            return;
        }
        self.mem[v] = new;
        for &w in self.g.neighbors(v) {
            if old & 1 == 0 && new & 1 == 1 {
                self.c1[w] += 1;
            }
            if old & 2 == 0 && new & 2 == 2 {
                self.c2[w] += 1;
            }
            if new == 3 {
                self.c12[w] += 1;
            }
        }
    }

    fn add_all<'s>(&mut self, parts: impl IntoIterator<Item = &'s [Vertex]>, bit: u8) {
        for part in parts {
            for &v in part {
                self.add(v, bit);
            }
        }
    }

    /// Neighbors of `u` in `N_i'` but not in the other set.
    fn only(&self, u: Vertex, i: u8) -> u32 {
        if i == 1 {
            self.c1[u] - self.c12[u]
        } else {
            self.c2[u] - self.c12[u]
        }
    }

    /// Set for a probe `v`'s new neighbors: `v` must not end up with
    /// non-adjacent neighbors in `N1` only and in `N2` only.
    fn side_beside(&self, v: Vertex) -> u8 {
        if self.only(v, 2) > 0 && self.only(v, 1) == 0 {
            2
        } else {
            1
        }
    }

    /// Set for `v` itself when it is in neither and has no neighbor in
    /// either: the same condition, for each neighbor of `v`. Runs at most
    /// once per vertex, since `v` joins a set afterwards.
    fn side_for(&self, v: Vertex) -> u8 {
        let blocked = |i: u8| self.g.neighbors(v).iter().any(|&u| self.only(u, 3 - i) > 0);
        if blocked(1) && !blocked(2) {
            2
        } else {
            1
        }
    }

    /// `N1 += X ∪ Z, N2 += Y ∪ Z` when the block has a bipartite part,
    /// otherwise `N1 += Z`.
    fn default_split(&mut self, p: &KxyzPartition) {
        if p.x.is_empty() {
            self.add_all([&p.z[..]], 1);
        } else {
            self.add_all([&p.x[..], &p.z[..]], 1);
            self.add_all([&p.y[..], &p.z[..]], 2);
        }
    }
}

/// Computes candidate non-probe sets for a graph whose blocks are all
/// (K, X, Y, Z)-graphs.
///
/// Blocks are visited in reverse peel order, so each block after the first
/// of its component meets the part already processed in exactly one cut
/// vertex `v`. The sets chosen there depend on the role of `v` in the block
/// and on which sets `v` and its processed neighbors already belong to. If
/// `g` is a 2-probe block graph the result is a valid partition; otherwise
/// either this returns [`FindError::Impossible`] or verification fails.
pub fn find_nonprobes(
    g: &Graph,
    bd: &BlockDecomposition,
    structures: &[KxyzPartition],
) -> Result<ProbePartition, FindError> {
    let n = g.order();
    let mut s = Sets {
        g,
        mem: vec![0; n],
        c1: vec![0; n],
        c2: vec![0; n],
        c12: vec![0; n],
    };
    for (b, cut) in bd.peel_order().into_iter().rev() {
        let p = structures.get(b).ok_or(FindError::MissingStructure(b))?;
        if p.x.is_empty() && p.z.is_empty() {
            // a clique needs no non-probes
            continue;
        }
        let Some(v) = cut else {
            s.default_split(p);
            continue;
        };
        let fail = |case| {
            Err(FindError::Impossible {
                case,
                block: b,
                cut_vertex: v,
            })
        };
        let role = p.role(v).ok_or(FindError::MissingStructure(b))?;
        if role == Role::K {
            match s.mem[v] {
                3 => return fail(BranchCase::C1Both),
                m @ (1 | 2) => {
                    if p.z.is_empty() || !p.x.is_empty() {
                        return fail(BranchCase::C1One);
                    }
                    s.add_all([&p.z[..]], 3 - m);
                }
                _ if p.x.is_empty() => {
                    let i = s.side_beside(v);
                    s.add_all([&p.z[..]], i);
                }
                _ => s.default_split(p),
            }
            continue;
        }
        if s.c12[v] > 0 {
            return fail(BranchCase::C2Common);
        }
        let (has1, has2) = (s.c1[v] > 0, s.c2[v] > 0);
        if has1 && has2 {
            return fail(BranchCase::C2BothSides);
        }
        if !has1 && !has2 {
            let side = match s.mem[v] {
                0 => s.side_for(v),
                m => m,
            };
            if role == Role::Z {
                if p.x.is_empty() {
                    // v keeps a single set; no F1 would back it in both
                    s.add_all([&p.z[..]], if side == 3 { 1 } else { side });
                } else {
                    s.default_split(p);
                }
                continue;
            }
            if side == 3 {
                return fail(BranchCase::C21);
            }
            let (own, other) = if role == Role::X {
                (&p.x, &p.y)
            } else {
                (&p.y, &p.x)
            };
            s.add_all([&own[..], &p.z[..]], side);
            s.add_all([&other[..], &p.z[..]], 3 - side);
            continue;
        }
        // neighbors in N_j' only; v joins N_i
        let j = if has1 { 1 } else { 2 };
        let i = 3 - j;
        match role {
            Role::Z => {
                if !p.x.is_empty() {
                    return fail(BranchCase::C22);
                }
                s.add_all([&p.z[..]], i);
            }
            Role::X => {
                s.add_all([&p.x[..], &p.z[..]], i);
                s.add_all([&p.y[..], &p.z[..]], j);
            }
            _ => {
                s.add_all([&p.y[..], &p.z[..]], i);
                s.add_all([&p.x[..], &p.z[..]], j);
            }
        }
    }
    let pick = |bit: u8| (0..n).filter(|&v| s.mem[v] & bit != 0).collect::<Vec<_>>();
    Ok(ProbePartition::new(pick(1), pick(2)))
}
