//! Slow, independent checkers used to validate the linear-time code.
//!
//! Nothing here is used by the recognizers. Every routine has a size guard
//! and returns [`OracleError::Oversize`] past it.

mod brute;
mod ecc;
pub mod pattern;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

pub use brute::{brute_kprobe, required_pairs_brute, BRUTE_LIMIT};
pub use ecc::{edge_clique_cover_min, ECC_LIMIT};
pub use pattern::pattern;

/// Largest graph accepted by [`forbidden_witness`].
pub const WITNESS_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("graph has {n} vertices; this oracle is limited to {limit}")]
    Oversize { n: usize, limit: usize },
    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),
    #[error("k = {0} is not supported; use 1 or 2")]
    UnsupportedK(usize),
}

pub(crate) fn guard(g: &Graph, limit: usize) -> Result<(), OracleError> {
    if g.order() > limit {
        Err(OracleError::Oversize {
            n: g.order(),
            limit,
        })
    } else {
        Ok(())
    }
}

/// Finds an induced copy of `h` in `g`.
///
/// Returns `phi` with `phi[u]` the vertex of `g` playing vertex `u` of `h`,
/// so `uv ∈ E(h)` iff `phi[u] phi[v] ∈ E(g)`. Backtracking; exponential in
/// `|V(h)|` in the worst case, meant for small patterns.
pub fn find_induced(g: &Graph, h: &Graph) -> Option<Vec<Vertex>> {
    let k = h.order();
    if k > g.order() || h.size() > g.size() {
        return None;
    }
    if k == 0 {
        return Some(Vec::new());
    }
    // Match in an order where each vertex after the first of its component
    // has an earlier neighbor to draw candidates from.
    let mut order = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let next = (0..k)
            .filter(|&u| !placed[u])
            .max_by_key(|&u| {
                let back = h.neighbors(u).iter().filter(|&&w| placed[w]).count();
                (back, h.degree(u), core::cmp::Reverse(u))
            })
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    let mut pos = vec![0; k];
    for (i, &u) in order.iter().enumerate() {
        pos[u] = i;
    }
    let anchor: Vec<Option<Vertex>> = order
        .iter()
        .map(|&u| {
            h.neighbors(u)
                .iter()
                .copied()
                .filter(|&w| pos[w] < pos[u])
                .min_by_key(|&w| pos[w])
        })
        .collect();

    let mut phi = vec![usize::MAX; k];
    let mut used = vec![false; g.order()];
    if search(g, h, &order, &anchor, 0, &mut phi, &mut used) {
        Some(phi)
    } else {
        None
    }
}

fn search(
    g: &Graph,
    h: &Graph,
    order: &[Vertex],
    anchor: &[Option<Vertex>],
    i: usize,
    phi: &mut [Vertex],
    used: &mut [bool],
) -> bool {
    if i == order.len() {
        return true;
    }
    let u = order[i];
    let all: Vec<Vertex>;
    let candidates: &[Vertex] = match anchor[i] {
        Some(a) => g.neighbors(phi[a]),
        None => {
            all = g.vertices().collect();
            &all
        }
    };
    for &c in candidates {
        if used[c] || g.degree(c) < h.degree(u) {
            continue;
        }
        let consistent = order[..i]
            .iter()
            .all(|&w| h.has_edge(u, w) == g.has_edge(c, phi[w]));
        if !consistent {
            continue;
        }
        phi[u] = c;
        used[c] = true;
        if search(g, h, order, anchor, i + 1, phi, used) {
            return true;
        }
        used[c] = false;
    }
    phi[u] = usize::MAX;
    false
}

/// Graph classes with a known finite (up to holes) forbidden-subgraph list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// Ptolemaic and `F1`–`F3`-free: gem, holes, `F1`, `F2`, `F3`.
    ProbeBlock,
    /// The block-level obstructions `B1`–`B6` of 2-probe block graphs.
    TwoProbeBlockBlocks,
    /// The gluing obstructions `G1`–`G16` of 2-probe block graphs.
    TwoProbeBlockGluing,
    /// House, domino, gem and holes of length at least 5.
    DistanceHereditary,
    /// Gem and holes.
    Ptolemaic,
    /// `P4`, `2K2`, `K3+K1`, `B1`, `B3`: the (K, X, Y, Z)-graph obstructions.
    TwoProbeComplete,
}

impl Family {
    /// Fixed-size members, then holes from `min_hole` up to `n` (0 = none).
    fn members(self) -> (&'static [&'static str], usize) {
        match self {
            Family::ProbeBlock => (&["gem", "F1", "F2", "F3"], 4),
            Family::TwoProbeBlockBlocks => (&["B1", "B2", "B3", "B4", "B5", "B6"], 0),
            Family::TwoProbeBlockGluing => (
                &[
                    "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10", "G11", "G12",
                    "G13", "G14", "G15", "G16",
                ],
                0,
            ),
            Family::DistanceHereditary => (&["house", "domino", "gem"], 5),
            Family::Ptolemaic => (&["gem"], 4),
            Family::TwoProbeComplete => (&["P4", "2K2", "K3+K1", "B1", "B3"], 0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::ProbeBlock => "probe-block",
            Family::TwoProbeBlockBlocks => "2probe-block-blocks",
            Family::TwoProbeBlockGluing => "2probe-block-gluing",
            Family::DistanceHereditary => "dh",
            Family::Ptolemaic => "ptolemaic",
            Family::TwoProbeComplete => "2probe-complete",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        [
            Family::ProbeBlock,
            Family::TwoProbeBlockBlocks,
            Family::TwoProbeBlockGluing,
            Family::DistanceHereditary,
            Family::Ptolemaic,
            Family::TwoProbeComplete,
        ]
        .into_iter()
        .find(|f| f.name() == s)
    }
}

/// First member of `family`, in catalog order then by hole length, that
/// occurs as an induced subgraph, with its embedding as in [`find_induced`].
pub fn forbidden_witness(
    g: &Graph,
    family: Family,
) -> Result<Option<(String, Vec<Vertex>)>, OracleError> {
    guard(g, WITNESS_LIMIT)?;
    let (fixed, min_hole) = family.members();
    for &name in fixed {
        if let Some(phi) = find_induced(g, &pattern(name)?) {
            return Ok(Some((String::from(name), phi)));
        }
    }
    if min_hole > 0 {
        for l in min_hole..=g.order() {
            if let Some(phi) = find_induced(g, &Graph::cycle(l)) {
                return Ok(Some((pattern::hole_name(l), phi)));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{join, union};

    fn is_induced_embedding(g: &Graph, h: &Graph, phi: &[Vertex]) -> bool {
        let mut seen = phi.to_vec();
        seen.sort_unstable();
        seen.dedup();
        seen.len() == h.order()
            && (0..h.order()).all(|u| {
                (0..h.order()).all(|v| u == v || h.has_edge(u, v) == g.has_edge(phi[u], phi[v]))
            })
    }

    #[test]
    fn gem_contains_only_the_spine_p4() {
        let gem = pattern("gem").unwrap();
        let phi = find_induced(&gem, &Graph::path(4)).unwrap();
        let mut img = phi.clone();
        img.sort_unstable();
        assert_eq!(img, vec![0, 1, 2, 3]);
        assert!(is_induced_embedding(&gem, &Graph::path(4), &phi));
        assert!(find_induced(&gem, &Graph::cycle(4)).is_none());
    }

    #[test]
    fn catalog_sizes() {
        let expect = [
            ("F1", 5, 8),
            ("F2", 7, 10),
            ("F3", 8, 11),
            ("B1", 5, 7),
            ("B2", 6, 8),
            ("B3", 6, 12),
            ("B4", 6, 10),
            ("B5", 6, 11),
            ("B6", 6, 12),
            ("G1", 8, 13),
            ("G2", 8, 12),
            ("G5", 8, 13),
            ("G6", 8, 12),
            ("G7", 9, 16),
            ("G8", 9, 14),
            ("G9", 9, 13),
            ("G10", 10, 15),
            ("G12", 10, 13),
            ("G13", 12, 18),
            ("G16", 12, 15),
            ("house", 5, 6),
            ("domino", 6, 7),
            ("gem", 5, 7),
            ("diamond", 4, 5),
            ("octahedron", 6, 12),
            ("C7", 7, 7),
            ("hole(5)", 5, 5),
        ];
        for (name, n, m) in expect {
            let g = pattern(name).unwrap();
            assert_eq!((g.order(), g.size()), (n, m), "{name}");
        }
        for name in pattern::NAMES {
            assert!(pattern(name).is_ok(), "{name}");
        }
        assert!(matches!(
            pattern("G17"),
            Err(OracleError::UnknownPattern(_))
        ));
        assert!(pattern("C2").is_err());
    }

    #[test]
    fn b1_b3_algebraic_forms() {
        let k2k1 = union(&Graph::complete(2), &Graph::empty(1));
        let b1 = join(&k2k1, &Graph::empty(2));
        let iso = |a: &Graph, b: &Graph| {
            a.order() == b.order() && a.size() == b.size() && find_induced(a, b).is_some()
        };
        assert!(iso(&pattern("B1").unwrap(), &b1));
        assert!(iso(
            &pattern("B3").unwrap(),
            &pattern("octahedron").unwrap()
        ));
    }

    #[test]
    fn witness_on_patterns_themselves() {
        let house = pattern("house").unwrap();
        let (name, phi) = forbidden_witness(&house, Family::DistanceHereditary)
            .unwrap()
            .unwrap();
        assert_eq!(name, "house");
        assert!(is_induced_embedding(&house, &house, &phi));
        let (name, _) = forbidden_witness(&Graph::cycle(6), Family::Ptolemaic)
            .unwrap()
            .unwrap();
        assert_eq!(name, "C6");
        assert_eq!(
            forbidden_witness(&Graph::complete(6), Family::ProbeBlock).unwrap(),
            None
        );
        assert!(matches!(
            forbidden_witness(&Graph::empty(65), Family::Ptolemaic),
            Err(OracleError::Oversize { n: 65, limit: 64 })
        ));
    }

    #[test]
    fn find_induced_embeddings_are_induced() {
        for seed in 0..60 {
            let g = crate::gen::random_graph(9, 0.5, seed);
            for name in ["P4", "C4", "diamond", "gem", "2K2", "house"] {
                let h = pattern(name).unwrap();
                if let Some(phi) = find_induced(&g, &h) {
                    assert!(is_induced_embedding(&g, &h, &phi));
                }
            }
        }
    }
}
