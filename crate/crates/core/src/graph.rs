//! Immutable simple undirected graphs on the vertex ids `0..n`.

use alloc::vec;
use alloc::vec::Vec;

/// Vertex id. Graphs always use the dense range `0..n`.
pub type Vertex = usize;

/// Errors raised while building graphs or addressing their vertices.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
}

/// How [`compose`] combines two graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Composition {
    /// `G + H`: vertices of `H` are shifted past those of `G`.
    DisjointUnion,
    /// `G ⋆ H`: the disjoint union plus every pair between the two sides.
    Join,
}

/// A simple undirected graph in compressed adjacency form.
///
/// Neighbor lists are sorted, symmetric and free of loops and duplicates.
/// The graph cannot be mutated after construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<Vertex>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            offsets: vec![0; n + 1],
            neighbors: Vec::new(),
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut pairs = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            pairs.push((u, v));
        }
        Ok(Self::from_checked_pairs(n, &pairs))
    }

    /// Counting-sort construction; `pairs` must already be validated.
    fn from_checked_pairs(n: usize, pairs: &[(Vertex, Vertex)]) -> Self {
        let mut degree = vec![0usize; n + 1];
        for &(u, v) in pairs {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut start = vec![0usize; n + 1];
        for v in 0..n {
            start[v + 1] = start[v] + degree[v];
        }
        let mut fill = start.clone();
        let mut raw = vec![0; start[n]];
        for &(u, v) in pairs {
            raw[fill[u]] = v;
            fill[u] += 1;
            raw[fill[v]] = u;
            fill[v] += 1;
        }
        // sort and dedup each list, compacting in place
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        let mut write = 0;
        for v in 0..n {
            let list = &mut raw[start[v]..start[v + 1]];
            list.sort_unstable();
            let mut last = None;
            for i in start[v]..start[v + 1] {
                let w = raw[i];
                if last != Some(w) {
                    raw[write] = w;
                    write += 1;
                    last = Some(w);
                }
            }
            offsets.push(write);
        }
        raw.truncate(write);
        Graph {
            offsets,
            neighbors: raw,
        }
    }

    pub fn complete(n: usize) -> Self {
        let pairs: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::from_checked_pairs(n, &pairs)
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::from_checked_pairs(n, &pairs)
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`. Requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let pairs: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::from_checked_pairs(n, &pairs)
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.neighbors.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.order()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Position of `v` in the flattened adjacency storage of `u`, if `uv` is
    /// an edge. Every edge owns two slots, one per orientation, and slots are
    /// numbered `0..2m`.
    pub fn slot(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.neighbors(u)
            .binary_search(&v)
            .ok()
            .map(|i| self.offsets[u] + i)
    }

    /// First slot of `v`'s neighbor list.
    #[inline]
    pub fn first_slot(&self, v: Vertex) -> usize {
        self.offsets[v]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut pairs = Vec::new();
        for u in 0..n {
            let mut nbrs = self.neighbors(u).iter().peekable();
            for v in u + 1..n {
                while nbrs.next_if(|&&w| w < v).is_some() {}
                if nbrs.peek() != Some(&&v) {
                    pairs.push((u, v));
                }
            }
        }
        Self::from_checked_pairs(n, &pairs)
    }

    /// The subgraph induced by `set`, relabeled `0..|set|` in increasing id
    /// order. Repeated ids are ignored.
    pub fn induced(&self, set: &[Vertex]) -> Result<Graph, GraphError> {
        let n = self.order();
        if let Some(&bad) = set.iter().find(|&&v| v >= n) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n });
        }
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut local = vec![usize::MAX; n];
        for (i, &v) in sorted.iter().enumerate() {
            local[v] = i;
        }
        let mut pairs = Vec::new();
        for (i, &v) in sorted.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = local[w];
                if j != usize::MAX && i < j {
                    pairs.push((i, j));
                }
            }
        }
        Ok(Self::from_checked_pairs(sorted.len(), &pairs))
    }

    /// Adds the given pairs, which must be valid non-loop pairs.
    pub fn with_added_edges(&self, added: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let n = self.order();
        let mut extra_offsets = vec![0usize; n + 1];
        for &(u, v) in added {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            extra_offsets[u + 1] += 1;
            extra_offsets[v + 1] += 1;
        }
        for v in 0..n {
            extra_offsets[v + 1] += extra_offsets[v];
        }
        let mut fill = extra_offsets.clone();
        let mut extra = vec![0; extra_offsets[n]];
        for &(u, v) in added {
            extra[fill[u]] = v;
            fill[u] += 1;
            extra[fill[v]] = u;
            fill[v] += 1;
        }
        // merge each sorted list with its sorted extras, dropping repeats
        let mut offsets = Vec::with_capacity(n + 1);
        let mut neighbors = Vec::with_capacity(self.neighbors.len() + extra.len());
        offsets.push(0);
        for v in 0..n {
            let more = &mut extra[extra_offsets[v]..extra_offsets[v + 1]];
            more.sort_unstable();
            let old = self.neighbors(v);
            let (mut i, mut j) = (0, 0);
            while i < old.len() || j < more.len() {
                let w = if j == more.len() || (i < old.len() && old[i] <= more[j]) {
                    i += 1;
                    old[i - 1]
                } else {
                    j += 1;
                    more[j - 1]
                };
                if neighbors.len() == offsets[v] || neighbors.last() != Some(&w) {
                    neighbors.push(w);
                }
            }
            offsets.push(neighbors.len());
        }
        Ok(Graph { offsets, neighbors })
    }

    /// Returns an edge with both ends in `set`, if there is one.
    pub fn dependent_pair(&self, set: &[Vertex]) -> Option<(Vertex, Vertex)> {
        let mut inside = vec![false; self.order()];
        for &v in set {
            inside[v] = true;
        }
        set.iter().find_map(|&u| {
            self.neighbors(u)
                .iter()
                .find(|&&w| inside[w])
                .map(|&w| (u.min(w), u.max(w)))
        })
    }

    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }
}

/// Disjoint union or join of two graphs; `h`'s vertices are shifted by
/// `g.order()`.
pub fn compose(kind: Composition, g: &Graph, h: &Graph) -> Graph {
    let shift = g.order();
    let n = shift + h.order();
    let mut pairs: Vec<_> = g
        .edges()
        .chain(h.edges().map(|(u, v)| (u + shift, v + shift)))
        .collect();
    if kind == Composition::Join {
        for u in 0..shift {
            for v in shift..n {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_checked_pairs(n, &pairs)
}

/// `g ⋆ h`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    compose(Composition::Join, g, h)
}

/// `g + h`.
pub fn union(g: &Graph, h: &Graph) -> Graph {
    compose(Composition::DisjointUnion, g, h)
}
