//! Recognizers for the supporting graph classes: complete split graphs,
//! (K, X, Y, Z)-graphs, block graphs, chordal, distance-hereditary and
//! ptolemaic graphs.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::{BitMatrix, BitSet};
use crate::decomposition::block_decomposition;
use crate::graph::{Graph, Vertex};

/// Partition `V = K ∪ X ∪ Y ∪ Z` of a (K, X, Y, Z)-graph.
///
/// `K` is the set of universal vertices, `X ∪ Z` and `Y ∪ Z` are
/// independent, and `X` is completely joined to `Y`. `Z` is exactly the set
/// of isolated vertices of `G - K`. All four sets are sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KxyzPartition {
    pub k: Vec<Vertex>,
    pub x: Vec<Vertex>,
    pub y: Vec<Vertex>,
    pub z: Vec<Vertex>,
}

/// Role of a vertex in a [`KxyzPartition`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    K,
    X,
    Y,
    Z,
}

impl KxyzPartition {
    pub fn role(&self, v: Vertex) -> Option<Role> {
        [
            (&self.k, Role::K),
            (&self.x, Role::X),
            (&self.y, Role::Y),
            (&self.z, Role::Z),
        ]
        .into_iter()
        .find(|(set, _)| set.binary_search(&v).is_ok())
        .map(|(_, r)| r)
    }

    /// Rewrites every vertex id through `map`.
    pub fn relabel(&self, map: &[Vertex]) -> KxyzPartition {
        let tr = |s: &[Vertex]| {
            let mut out: Vec<Vertex> = s.iter().map(|&v| map[v]).collect();
            out.sort_unstable();
            out
        };
        KxyzPartition {
            k: tr(&self.k),
            x: tr(&self.x),
            y: tr(&self.y),
            z: tr(&self.z),
        }
    }
}

/// Why a graph is not a (K, X, Y, Z)-graph. Vertex pairs are edges or
/// non-edges of the input graph as named.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KxyzFailure {
    /// `G - K` has two nontrivial components; one edge from each.
    TwoComponents {
        first: (Vertex, Vertex),
        second: (Vertex, Vertex),
    },
    /// The nontrivial component of `G - K` is not bipartite; this edge joins
    /// two vertices of the same BFS color class.
    OddCycle { edge: (Vertex, Vertex) },
    /// The component is bipartite but `x` and `y` lie on opposite sides and
    /// are not adjacent.
    MissingCrossEdge { x: Vertex, y: Vertex },
}

impl KxyzFailure {
    pub fn relabel(&self, map: &[Vertex]) -> KxyzFailure {
        let p = |(a, b): (Vertex, Vertex)| (map[a], map[b]);
        match *self {
            KxyzFailure::TwoComponents { first, second } => KxyzFailure::TwoComponents {
                first: p(first),
                second: p(second),
            },
            KxyzFailure::OddCycle { edge } => KxyzFailure::OddCycle { edge: p(edge) },
            KxyzFailure::MissingCrossEdge { x, y } => KxyzFailure::MissingCrossEdge {
                x: map[x],
                y: map[y],
            },
        }
    }
}

/// Vertices adjacent to every other vertex.
pub fn universal_set(g: &Graph) -> Vec<Vertex> {
    let n = g.order();
    g.vertices().filter(|&v| g.degree(v) + 1 == n).collect()
}

/// Complete split partition `V = Q ∪ S`: `Q` a clique, `S` independent,
/// every `Q`–`S` pair adjacent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteSplit {
    pub clique: Vec<Vertex>,
    pub independent: Vec<Vertex>,
}

/// Recognizes complete split graphs (equivalently, probe complete graphs).
///
/// Every clique-side vertex is universal, so `Q` is the universal set and the
/// rest must be independent. On failure returns an edge between two
/// non-universal vertices.
pub fn complete_split(g: &Graph) -> Result<CompleteSplit, (Vertex, Vertex)> {
    let clique = universal_set(g);
    let n = g.order();
    let is_universal = |v: Vertex| g.degree(v) + 1 == n;
    let independent: Vec<Vertex> = g.vertices().filter(|&v| !is_universal(v)).collect();
    let universal_count = clique.len();
    for &u in &independent {
        if g.degree(u) != universal_count {
            let w = *g
                .neighbors(u)
                .iter()
                .find(|&&w| !is_universal(w))
                .expect("extra neighbor");
            return Err((u.min(w), u.max(w)));
        }
    }
    Ok(CompleteSplit {
        clique,
        independent,
    })
}

/// Recognizes (K, X, Y, Z)-graphs (equivalently, 2-probe complete graphs) in
/// linear time.
///
/// After removing the universal vertices at most one nontrivial component may
/// remain, and it must be complete bipartite. `X` is the side containing the
/// smallest vertex id of that component.
pub fn kxyz(g: &Graph) -> Result<KxyzPartition, KxyzFailure> {
    let n = g.order();
    let universal: Vec<bool> = g.vertices().map(|v| g.degree(v) + 1 == n).collect();
    let k: Vec<Vertex> = g.vertices().filter(|&v| universal[v]).collect();
    let kc = k.len();
    // every non-universal vertex sees all of K
    let rest_degree = |v: Vertex| g.degree(v) - kc;
    let z: Vec<Vertex> = g
        .vertices()
        .filter(|&v| !universal[v] && rest_degree(v) == 0)
        .collect();
    let rest: Vec<Vertex> = g
        .vertices()
        .filter(|&v| !universal[v] && rest_degree(v) > 0)
        .collect();
    let Some(&start) = rest.first() else {
        return Ok(KxyzPartition {
            k,
            x: Vec::new(),
            y: Vec::new(),
            z,
        });
    };

    const UNSEEN: u8 = 2;
    let mut color = vec![UNSEEN; n];
    color[start] = 0;
    let mut queue = VecDeque::from([start]);
    let mut reached = 0;
    while let Some(v) = queue.pop_front() {
        reached += 1;
        for &w in g.neighbors(v) {
            if universal[w] {
                continue;
            }
            if color[w] == UNSEEN {
                color[w] = 1 - color[v];
                queue.push_back(w);
            } else if color[w] == color[v] {
                return Err(KxyzFailure::OddCycle {
                    edge: (v.min(w), v.max(w)),
                });
            }
        }
    }
    if reached < rest.len() {
        let other = *rest
            .iter()
            .find(|&&v| color[v] == UNSEEN)
            .expect("unreached vertex");
        let nb = |v: Vertex| {
            *g.neighbors(v)
                .iter()
                .find(|&&w| !universal[w])
                .expect("non-isolated")
        };
        let a = nb(start);
        let b = nb(other);
        return Err(KxyzFailure::TwoComponents {
            first: (start.min(a), start.max(a)),
            second: (other.min(b), other.max(b)),
        });
    }
    let x: Vec<Vertex> = rest.iter().copied().filter(|&v| color[v] == 0).collect();
    let y: Vec<Vertex> = rest.iter().copied().filter(|&v| color[v] == 1).collect();
    for (side, opposite) in [(&x, &y), (&y, &x)] {
        if let Some(&u) = side.iter().find(|&&u| rest_degree(u) != opposite.len()) {
            let w = *opposite
                .iter()
                .find(|&&w| !g.has_edge(u, w))
                .expect("missing neighbor");
            let (x, y) = if color[u] == 0 { (u, w) } else { (w, u) };
            return Err(KxyzFailure::MissingCrossEdge { x, y });
        }
    }
    Ok(KxyzPartition { k, x, y, z })
}

/// True when every block is a clique. Otherwise returns a non-adjacent pair
/// lying in a common block.
pub fn is_block_graph(g: &Graph) -> Result<(), (Vertex, Vertex)> {
    let bd = block_decomposition(g);
    for b in 0..bd.len() {
        let verts = bd.block(b);
        let s = verts.len();
        if bd.block_edges(b).len() == s * (s - 1) / 2 {
            continue;
        }
        for (i, &u) in verts.iter().enumerate() {
            if let Some(&v) = verts[i + 1..].iter().find(|&&v| !g.has_edge(u, v)) {
                return Err((u, v));
            }
        }
    }
    Ok(())
}

/// Lexicographic breadth-first search by partition refinement, `O(n + m)`.
/// Returns vertices in visiting order.
pub fn lex_bfs(g: &Graph) -> Vec<Vertex> {
    let n = g.order();
    let mut order: Vec<Vertex> = (0..n).collect();
    let mut pos: Vec<usize> = (0..n).collect();
    // classes are contiguous ranges of `order`; class_start moves right as
    // vertices leave the front of a class
    let mut class_of = vec![0usize; n];
    let mut class_start = vec![0usize];
    let mut split_into: Vec<usize> = vec![usize::MAX];
    let mut split_stamp: Vec<usize> = vec![usize::MAX];
    let mut visited = vec![false; n];
    for i in 0..n {
        let v = order[i];
        visited[v] = true;
        class_start[class_of[v]] += 1;
        for &w in g.neighbors(v) {
            if visited[w] {
                continue;
            }
            let c = class_of[w];
            if split_stamp[c] != i {
                split_stamp[c] = i;
                split_into[c] = class_start.len();
                class_start.push(class_start[c]);
                split_into.push(usize::MAX);
                split_stamp.push(usize::MAX);
            }
            let fresh = split_into[c];
            // swap w to the front of what is left of class c
            let front = class_start[c];
            let u = order[front];
            order.swap(front, pos[w]);
            pos[u] = pos[w];
            pos[w] = front;
            class_start[c] += 1;
            class_of[w] = fresh;
        }
    }
    order
}

/// Chordality test. On success returns a perfect elimination order (the
/// reverse of a LexBFS order); otherwise a chordless cycle of length at
/// least four, listed along the cycle.
pub fn is_chordal(g: &Graph) -> Result<Vec<Vertex>, Vec<Vertex>> {
    let n = g.order();
    let visit = lex_bfs(g);
    let mut rank = vec![0usize; n];
    for (i, &v) in visit.iter().enumerate() {
        rank[v] = i;
    }
    for &v in &visit {
        let earlier: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| rank[w] < rank[v])
            .collect();
        let Some(&parent) = earlier.iter().max_by_key(|&&w| rank[w]) else {
            continue;
        };
        if let Some(&w) = earlier
            .iter()
            .find(|&&w| w != parent && !g.has_edge(parent, w))
        {
            let hole = chordless_cycle_through(g, v, parent, w).unwrap_or_else(|| find_hole(g));
            return Err(hole);
        }
    }
    let mut peo = visit;
    peo.reverse();
    Ok(peo)
}

/// A chordless cycle `v, a, ..., b` using a shortest `a`–`b` path that avoids
/// `v` and its other neighbors, if one exists.
fn chordless_cycle_through(g: &Graph, v: Vertex, a: Vertex, b: Vertex) -> Option<Vec<Vertex>> {
    let n = g.order();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &w in g.neighbors(v) {
        blocked[w] = w != a && w != b;
    }
    let mut prev = vec![usize::MAX; n];
    prev[a] = a;
    let mut queue = VecDeque::from([a]);
    while let Some(u) = queue.pop_front() {
        if u == b {
            break;
        }
        for &w in g.neighbors(u) {
            // a and b are non-adjacent, so the path has an interior
            if !blocked[w] && prev[w] == usize::MAX && !(u == a && w == b) {
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    if prev[b] == usize::MAX {
        return None;
    }
    let mut cycle = vec![v];
    let mut path = vec![b];
    let mut u = b;
    while u != a {
        u = prev[u];
        path.push(u);
    }
    path.reverse();
    cycle.extend(path);
    Some(cycle)
}

/// Exhaustive fallback: some vertex of any hole has two non-adjacent
/// neighbors joined by a path outside its closed neighborhood.
fn find_hole(g: &Graph) -> Vec<Vertex> {
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !g.has_edge(a, b) {
                    if let Some(c) = chordless_cycle_through(g, v, a, b) {
                        return c;
                    }
                }
            }
        }
    }
    unreachable!("graph without perfect elimination order has a hole")
}

/// Distance-hereditary test by pruning: repeatedly delete the lowest-id
/// vertex that is pendant or has a (true or false) twin. The graph is
/// distance-hereditary iff the pruning leaves no edge.
///
/// Quadratic memory; meant for desk-scale graphs.
pub fn is_distance_hereditary(g: &Graph) -> bool {
    let n = g.order();
    let adj = BitMatrix::from_graph(g);
    let mut alive = BitSet::full(n);
    let mut remaining = n;
    let words = adj.words();
    let mut scratch_u = vec![0u64; words];
    let mut scratch_w = vec![0u64; words];
    'outer: while remaining > 1 {
        for u in 0..n {
            if !alive.contains(u) {
                continue;
            }
            if alive.count_in(adj.row(u)) == 1 {
                alive.remove(u);
                remaining -= 1;
                continue 'outer;
            }
            for w in 0..n {
                if w == u || !alive.contains(w) {
                    continue;
                }
                for i in 0..words {
                    scratch_u[i] = adj.row(u)[i] & alive.words()[i];
                    scratch_w[i] = adj.row(w)[i] & alive.words()[i];
                }
                scratch_u[w / 64] &= !(1 << (w % 64));
                scratch_w[u / 64] &= !(1 << (u % 64));
                if scratch_u == scratch_w {
                    alive.remove(u);
                    remaining -= 1;
                    continue 'outer;
                }
            }
        }
        break;
    }
    let none_left = alive.iter().all(|u| alive.count_in(adj.row(u)) == 0);
    none_left
}

/// Ptolemaic graphs are exactly the gem-free chordal graphs.
pub fn is_ptolemaic(g: &Graph) -> bool {
    is_chordal(g).is_ok()
        && crate::oracle::find_induced(g, &crate::oracle::pattern::gem()).is_none()
}
