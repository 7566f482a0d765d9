//! Exact side assignment for the non-probe sets.
//!
//! In a non-clique block with structure (K, X, Y, Z), any valid partition
//! contains `X ∪ Z` in one set and `Y ∪ Z` in the other when `X` is
//! nonempty, and all of `Z` in one set otherwise. Restricting a valid
//! partition to these parts keeps it valid, so each block contributes one
//! binary choice: which set gets its first side. Blocks only interact
//! through edges whose ends were placed by different blocks, and each such
//! edge says two choices are equal or differ. That is a parity system,
//! solved here with a union-find.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};
use crate::structure::KxyzPartition;

use super::ProbePartition;

/// A membership a block gives a vertex: set `1 + (choice(block) ^ flip)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Lit {
    block: usize,
    flip: u8,
}

/// Union-find over block choices; `parity[b]` relates `b` to its parent.
struct Parity {
    parent: Vec<usize>,
    parity: Vec<u8>,
}

impl Parity {
    fn new(n: usize) -> Self {
        Parity {
            parent: (0..n).collect(),
            parity: vec![0; n],
        }
    }

    /// Root of `b` and the parity of `b` relative to it.
    fn find(&mut self, b: usize) -> (usize, u8) {
        let mut root = b;
        let mut acc = 0;
        while self.parent[root] != root {
            acc ^= self.parity[root];
            root = self.parent[root];
        }
        // compress, rewriting each node's parity relative to the root
        let mut cur = b;
        let mut p = acc;
        while self.parent[cur] != root && cur != root {
            let next = self.parent[cur];
            let step = self.parity[cur];
            self.parent[cur] = root;
            self.parity[cur] = p;
            p ^= step;
            cur = next;
        }
        (root, acc)
    }

    /// Records `choice(a) ^ choice(b) == rel`; false on contradiction.
    fn relate(&mut self, a: usize, b: usize, rel: u8) -> bool {
        let (ra, pa) = self.find(a);
        let (rb, pb) = self.find(b);
        if ra == rb {
            return pa ^ pb == rel;
        }
        self.parent[ra] = rb;
        self.parity[ra] = pa ^ pb ^ rel;
        true
    }
}

/// Two vertices that must avoid a common set but cannot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SideConflict {
    pub edge: (Vertex, Vertex),
}

/// Smallest non-probe sets for `g`, or the edge whose ends are forced into
/// a common set. `structures` holds one (K, X, Y, Z) partition per block.
/// Runs in `O(n + m)`.
pub fn solve_sides(
    g: &Graph,
    structures: &[KxyzPartition],
) -> Result<ProbePartition, SideConflict> {
    let n = g.order();
    let mut first: Vec<Option<Lit>> = vec![None; n];
    let mut both = vec![false; n];
    // later memberships of a vertex, paired with its first one
    let mut extra: Vec<(Vertex, Lit)> = Vec::new();
    for (b, p) in structures.iter().enumerate() {
        let mut give = |w: Vertex, lit: Option<Lit>| match lit {
            None => both[w] = true,
            Some(l) => match first[w] {
                None => first[w] = Some(l),
                Some(_) => extra.push((w, l)),
            },
        };
        if p.x.is_empty() {
            for &z in &p.z {
                give(z, Some(Lit { block: b, flip: 0 }));
            }
        } else {
            for &x in &p.x {
                give(x, Some(Lit { block: b, flip: 0 }));
            }
            for &y in &p.y {
                give(y, Some(Lit { block: b, flip: 1 }));
            }
            for &z in &p.z {
                give(z, None);
            }
        }
    }
    let member = |v: Vertex| both[v] || first[v].is_some();
    let mut sys = Parity::new(structures.len());
    // a vertex with a member neighbor must sit in exactly one set
    let mut single = vec![false; n];
    for (u, v) in g.edges() {
        if !(member(u) && member(v)) {
            continue;
        }
        if both[u] || both[v] {
            return Err(SideConflict { edge: (u, v) });
        }
        single[u] = true;
        single[v] = true;
        let (a, b) = (first[u].unwrap(), first[v].unwrap());
        if !sys.relate(a.block, b.block, a.flip ^ b.flip ^ 1) {
            return Err(SideConflict { edge: (u, v) });
        }
    }
    for &(w, l) in &extra {
        if !single[w] {
            continue;
        }
        let f = first[w].unwrap();
        if !sys.relate(f.block, l.block, f.flip ^ l.flip) {
            let nb = g
                .neighbors(w)
                .iter()
                .copied()
                .find(|&x| member(x))
                .expect("single implies a member neighbor");
            return Err(SideConflict {
                edge: (w.min(nb), w.max(nb)),
            });
        }
    }
    let mut sets = [Vec::new(), Vec::new()];
    let side = |l: Lit, sys: &mut Parity| usize::from(sys.find(l.block).1 ^ l.flip);
    let mut placed = vec![0u8; n];
    for v in 0..n {
        if both[v] {
            placed[v] = 3;
        } else if let Some(l) = first[v] {
            placed[v] |= 1 << side(l, &mut sys);
        }
    }
    for &(w, l) in &extra {
        placed[w] |= 1 << side(l, &mut sys);
    }
    for (v, &m) in placed.iter().enumerate() {
        for (i, set) in sets.iter_mut().enumerate() {
            if m & (1 << i) != 0 {
                set.push(v);
            }
        }
    }
    let [n1, n2] = sets;
    Ok(ProbePartition::new(n1, n2))
}
