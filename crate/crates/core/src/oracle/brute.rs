//! Exhaustive k-probe search on small graphs.
//!
//! Shares no code with the linear recognizer: block membership of a
//! non-adjacent pair is decided from the definition (no single vertex
//! separates them), not from a block decomposition.

use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};
use crate::probe::{
    Certificate, Embedding, ProbePartition, RecognitionOutcome, Refutation, Target,
};

use super::{guard, OracleError};

/// Largest graph accepted by [`brute_kprobe`].
pub const BRUTE_LIMIT: usize = 12;

fn masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

/// Vertices reachable from `s` inside `alive`.
fn reach(adj: &[u32], s: Vertex, alive: u32) -> u32 {
    let mut seen = 1u32 << s;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & alive & !seen;
        seen |= new;
        frontier |= new;
    }
    seen
}

/// Non-adjacent pairs `(x, y)`, `x < y`, that an embedding must join: those
/// lying in a common block (for [`Target::Block`]), or all of them (for
/// [`Target::Complete`]).
pub fn required_pairs_brute(
    g: &Graph,
    target: Target,
) -> Result<Vec<(Vertex, Vertex)>, OracleError> {
    guard(g, BRUTE_LIMIT)?;
    let n = g.order();
    let adj = masks(g);
    let all = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if adj[x] >> y & 1 == 1 {
                continue;
            }
            let joined = match target {
                Target::Complete => true,
                Target::Block => {
                    (0..n)
                        .filter(|&w| w != x && w != y)
                        .all(|w| reach(&adj, x, all & !(1 << w)) >> y & 1 == 1)
                        && reach(&adj, x, all) >> y & 1 == 1
                }
            };
            if joined {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

/// Decides whether `g` is a `k`-probe block graph (`target = Block`) or a
/// `k`-probe complete graph (`target = Complete`) by trying every `N1`.
///
/// For a fixed `N1` the least admissible `N2` is forced: the endpoints of
/// the required pairs not inside `N1`. `N1` ranges over independent subsets
/// of the required-pair endpoints in increasing bitmask order, so the
/// certificate is the one with the numerically smallest `N1` mask.
pub fn brute_kprobe(
    g: &Graph,
    k: usize,
    target: Target,
) -> Result<RecognitionOutcome<'_>, OracleError> {
    if k != 1 && k != 2 {
        return Err(OracleError::UnsupportedK(k));
    }
    let pairs = required_pairs_brute(g, target)?;
    let adj = masks(g);
    let independent = |s: u32| {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & s != 0 {
                return false;
            }
        }
        true
    };
    let relevant = pairs.iter().fold(0u32, |m, &(x, y)| m | 1 << x | 1 << y);
    let mut tried = 0usize;
    let mut found = None;
    if k == 1 {
        tried = 1;
        if independent(relevant) {
            found = Some((relevant, 0));
        }
    } else {
        let mut s = 0u32;
        loop {
            // ascending enumeration of the submasks of `relevant`
            tried += 1;
            if independent(s) {
                let forced = pairs
                    .iter()
                    .filter(|&&(x, y)| s >> x & s >> y & 1 == 0)
                    .fold(0u32, |m, &(x, y)| m | 1 << x | 1 << y);
                if independent(forced) {
                    found = Some((s, forced));
                    break;
                }
            }
            if s == relevant {
                break;
            }
            s = (s.wrapping_sub(relevant)) & relevant;
        }
    }
    let Some((s1, s2)) = found else {
        return Ok(RecognitionOutcome::No(Refutation::NoValidPartition {
            candidates: tried,
        }));
    };
    let bits = |m: u32| {
        (0..g.order())
            .filter(|&v| m >> v & 1 == 1)
            .collect::<Vec<_>>()
    };
    let result = g
        .with_added_edges(&pairs)
        .expect("pairs are valid non-edges");
    Ok(RecognitionOutcome::Yes(Certificate {
        partition: ProbePartition::new(bits(s1), bits(s2)),
        embedding: Embedding {
            host: g,
            added: pairs,
            result,
        },
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::pattern;
    use alloc::vec;

    #[test]
    fn small_cases() {
        let k5 = Graph::complete(5);
        let cert = brute_kprobe(&k5, 2, Target::Block).unwrap();
        let cert = cert.certificate().unwrap();
        assert!(cert.partition.n1().is_empty() && cert.partition.n2().is_empty());

        let c4 = Graph::cycle(4);
        assert!(!brute_kprobe(&c4, 1, Target::Block).unwrap().is_yes());
        let out = brute_kprobe(&c4, 2, Target::Block).unwrap();
        let cert = out.certificate().unwrap();
        assert_eq!(cert.partition.n1(), &[0, 2]);
        assert_eq!(cert.partition.n2(), &[1, 3]);

        let diamond = pattern("diamond").unwrap();
        let out = brute_kprobe(&diamond, 1, Target::Block).unwrap();
        assert_eq!(out.certificate().unwrap().partition.n1(), &[2, 3]);

        assert!(matches!(
            brute_kprobe(&Graph::empty(13), 2, Target::Block),
            Err(OracleError::Oversize { .. })
        ));
        assert_eq!(
            brute_kprobe(&c4, 3, Target::Block).unwrap_err(),
            OracleError::UnsupportedK(3)
        );
    }

    #[test]
    fn required_pairs_by_separation() {
        // two triangles sharing vertex 2, plus a pendant path: nothing to join
        let g =
            Graph::from_edges(6, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5)]).unwrap();
        assert!(required_pairs_brute(&g, Target::Block).unwrap().is_empty());
        assert_eq!(
            required_pairs_brute(&Graph::path(3), Target::Complete).unwrap(),
            vec![(0, 2)]
        );
        assert_eq!(
            required_pairs_brute(&Graph::cycle(4), Target::Block).unwrap(),
            vec![(0, 2), (1, 3)]
        );
    }
}
