//! Minimum edge clique cover by exact search.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

use super::{guard, OracleError};

/// Largest graph accepted by [`edge_clique_cover_min`].
pub const ECC_LIMIT: usize = 12;

fn maximal_cliques(adj: &[u32], r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot_pool = p | x;
    let pivot = (0..32)
        .filter(|&u| pivot_pool >> u & 1 == 1)
        .max_by_key(|&u| (adj[u] & p).count_ones())
        .unwrap();
    let mut cand = p & !adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        maximal_cliques(adj, r | 1 << v, p & adj[v], x & adj[v], out);
        p &= !(1 << v);
        x |= 1 << v;
    }
}

fn covers(uncovered: u128, budget: usize, by_edge: &[Vec<u128>]) -> bool {
    if uncovered == 0 {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let e = uncovered.trailing_zeros() as usize;
    by_edge[e]
        .iter()
        .any(|&c| covers(uncovered & !c, budget - 1, by_edge))
}

/// The least number of cliques whose edges cover every edge of `g`.
///
/// Some optimum uses only maximal cliques, so the search branches on the
/// maximal cliques through the lowest uncovered edge, with iterative
/// deepening on the budget.
pub fn edge_clique_cover_min(g: &Graph) -> Result<usize, OracleError> {
    guard(g, ECC_LIMIT)?;
    let n = g.order();
    let edges: Vec<_> = g.edges().collect();
    if edges.is_empty() {
        return Ok(0);
    }
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut cliques = Vec::new();
    let all = u32::MAX >> (32 - n);
    maximal_cliques(&adj, 0, all, 0, &mut cliques);
    let mut by_edge = vec![Vec::new(); edges.len()];
    for &c in &cliques {
        let mut mask = 0u128;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if c >> u & c >> v & 1 == 1 {
                mask |= 1 << i;
            }
        }
        for (i, slot) in by_edge.iter_mut().enumerate() {
            if mask >> i & 1 == 1 {
                slot.push(mask);
            }
        }
    }
    let full = if edges.len() == 128 {
        u128::MAX
    } else {
        (1u128 << edges.len()) - 1
    };
    Ok((1..=edges.len())
        .find(|&k| covers(full, k, &by_edge))
        .expect("every edge is a clique"))
}
