//! Blocks, cut vertices and end-block peeling.
//!
//! Blocks are the maximal 2-connected subgraphs, bridges, and isolated
//! vertices. They are computed by an iterative Hopcroft–Tarjan traversal, so
//! graphs with millions of vertices do not exhaust the call stack.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::graph::{Graph, Vertex};

const NO: u32 = u32::MAX;

/// The block structure of a graph.
///
/// Blocks are ordered by smallest vertex id, then by size, then by their
/// sorted vertex lists, so the indices are a pure function of the graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Sorted vertex lists, block after block.
    vertices: Vec<Vertex>,
    vertex_offsets: Vec<usize>,
    /// Sorted edge lists, block after block.
    edges: Vec<(Vertex, Vertex)>,
    edge_offsets: Vec<usize>,
    cut_vertices: Vec<Vertex>,
    /// Block of the edge stored at each adjacency slot of the graph.
    slot_block: Vec<usize>,
    /// Block–cut incidence, compressed by vertex.
    vertex_block_offsets: Vec<usize>,
    vertex_blocks: Vec<usize>,
}

impl BlockDecomposition {
    pub fn len(&self) -> usize {
        self.vertex_offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Vertex lists of all blocks, by index.
    pub fn blocks(&self) -> impl ExactSizeIterator<Item = &[Vertex]> + '_ {
        (0..self.len()).map(|b| self.block(b))
    }

    /// Sorted vertex list of block `b`.
    pub fn block(&self, b: usize) -> &[Vertex] {
        &self.vertices[self.vertex_offsets[b]..self.vertex_offsets[b + 1]]
    }

    /// Edges of block `b` as `(u, v)` with `u < v`, sorted.
    pub fn block_edges(&self, b: usize) -> &[(Vertex, Vertex)] {
        &self.edges[self.edge_offsets[b]..self.edge_offsets[b + 1]]
    }

    /// Sorted cut vertices.
    pub fn cut_vertices(&self) -> &[Vertex] {
        &self.cut_vertices
    }

    pub fn is_cut_vertex(&self, v: Vertex) -> bool {
        self.blocks_of(v).len() >= 2
    }

    /// Indices of the blocks containing `v`, ascending.
    pub fn blocks_of(&self, v: Vertex) -> &[usize] {
        &self.vertex_blocks[self.vertex_block_offsets[v]..self.vertex_block_offsets[v + 1]]
    }

    /// The unique block containing edge `uv`.
    pub fn block_of_edge(&self, g: &Graph, u: Vertex, v: Vertex) -> Option<usize> {
        g.slot(u, v).map(|s| self.slot_block[s])
    }

    /// Block of the edge stored at adjacency slot `slot` (see [`Graph::slot`]).
    #[inline]
    pub fn block_of_slot(&self, slot: usize) -> usize {
        self.slot_block[slot]
    }

    /// Cut vertices lying in block `b`.
    pub fn cut_vertices_of(&self, b: usize) -> impl Iterator<Item = Vertex> + '_ {
        self.block(b)
            .iter()
            .copied()
            .filter(move |&v| self.is_cut_vertex(v))
    }

    /// Orders all blocks so that each one is an end-block of what remains
    /// after removing the interiors of the blocks before it.
    ///
    /// Each entry pairs a block with its cut vertex in the residual graph, or
    /// `None` for the last block of a connected component. Among eligible
    /// end-blocks the lowest index is taken first.
    pub fn peel_order(&self) -> Vec<(usize, Option<Vertex>)> {
        let nb = self.len();
        let n = self.vertex_block_offsets.len() - 1;
        // residual number of blocks containing each vertex
        let mut live_count: Vec<u32> = (0..n).map(|v| self.blocks_of(v).len() as u32).collect();
        // residual number of cut vertices in each block
        let mut cut_degree: Vec<u32> = (0..nb)
            .map(|b| self.cut_vertices_of(b).count() as u32)
            .collect();
        let mut removed = vec![false; nb];
        // Blocks at or past `cursor` are found by scanning; only blocks that
        // become end-blocks behind it go through the heap.
        let mut cursor = 0;
        let mut behind: BinaryHeap<Reverse<usize>> = BinaryHeap::new();
        let mut order = Vec::with_capacity(nb);
        loop {
            while cursor < nb && (removed[cursor] || cut_degree[cursor] > 1) {
                cursor += 1;
            }
            let b = match behind.peek() {
                Some(&Reverse(h)) if h < cursor => {
                    behind.pop();
                    if removed[h] {
                        continue;
                    }
                    h
                }
                _ if cursor < nb => cursor,
                _ => break,
            };
            removed[b] = true;
            let cut = self.block(b).iter().copied().find(|&v| live_count[v] >= 2);
            order.push((b, cut));
            for &v in self.block(b) {
                live_count[v] -= 1;
                if live_count[v] == 1 {
                    // v stops being a cut vertex of the one block still holding it
                    let other = self
                        .blocks_of(v)
                        .iter()
                        .copied()
                        .find(|&c| !removed[c])
                        .expect("live block");
                    cut_degree[other] -= 1;
                    if cut_degree[other] == 1 && other < cursor {
                        behind.push(Reverse(other));
                    }
                }
            }
        }
        debug_assert_eq!(order.len(), nb);
        order
    }
}

/// Prefix sums of `counts`, with a leading zero.
fn offsets_of(counts: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(counts.len() + 1);
    let mut acc = 0;
    out.push(0);
    for &c in counts {
        acc += c;
        out.push(acc);
    }
    out
}

/// Computes blocks and cut vertices. Linear apart from breaking ties
/// between blocks with the same smallest vertex.
pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    assert!(n < NO as usize, "graph too large");
    let mut disc = vec![NO; n];
    let mut low = vec![0u32; n];
    // Every vertex except a traversal root belongs to exactly one block
    // below it, its owner; each block also holds its head, the vertex the
    // traversal entered it from (none for isolated vertices).
    let mut owner = vec![NO; n];
    let mut head: Vec<u32> = Vec::new();
    let mut time = 0u32;
    let mut members: Vec<u32> = Vec::new();
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(u32, u32, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != NO {
            continue;
        }
        disc[root] = time;
        time += 1;
        if g.degree(root) == 0 {
            owner[root] = head.len() as u32;
            head.push(NO);
            continue;
        }
        low[root] = disc[root];
        stack.push((root as u32, NO, 0));
        while let Some(frame) = stack.last_mut() {
            let (v, parent, i) = *frame;
            let vu = v as usize;
            if let Some(&w) = g.neighbors(vu).get(i) {
                frame.2 += 1;
                if disc[w] == NO {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    members.push(w as u32);
                    stack.push((w as u32, v, 0));
                } else if w as u32 != parent && disc[w] < disc[vu] {
                    low[vu] = low[vu].min(disc[w]);
                }
            } else {
                stack.pop();
                if parent != NO {
                    let p = parent as usize;
                    low[p] = low[p].min(low[vu]);
                    if low[vu] >= disc[p] {
                        let r = head.len() as u32;
                        head.push(parent);
                        while let Some(x) = members.pop() {
                            owner[x as usize] = r;
                            if x == v {
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
    let raw_total = head.len();
    // an edge belongs to the owner of its later-discovered end
    let edge_raw = |u: Vertex, w: Vertex| -> usize {
        if disc[u] > disc[w] {
            owner[u] as usize
        } else {
            owner[w] as usize
        }
    };

    // blocks headed by each vertex, and block sizes
    let mut headed_count = vec![0usize; n];
    let mut raw_size = vec![0usize; raw_total];
    for (r, &h) in head.iter().enumerate() {
        if h != NO {
            headed_count[h as usize] += 1;
            raw_size[r] += 1;
        }
    }
    for &o in &owner {
        if o != NO {
            raw_size[o as usize] += 1;
        }
    }
    let headed_offsets = offsets_of(&headed_count);
    let mut fill = headed_offsets.clone();
    let mut headed = vec![0u32; raw_total];
    for (r, &h) in head.iter().enumerate() {
        if h != NO {
            headed[fill[h as usize]] = r as u32;
            fill[h as usize] += 1;
        }
    }
    let raw_blocks_of = |u: Vertex| {
        let own = owner[u];
        (own != NO)
            .then_some(own)
            .into_iter()
            .chain(
                headed[headed_offsets[u]..headed_offsets[u + 1]]
                    .iter()
                    .copied(),
            )
            .map(|r| r as usize)
    };

    // sorted vertex lists, provisional order
    let raw_offsets = offsets_of(&raw_size);
    let mut fill = raw_offsets.clone();
    let mut raw_vertices = vec![0; raw_offsets[raw_total]];
    for u in 0..n {
        for r in raw_blocks_of(u) {
            raw_vertices[fill[r]] = u;
            fill[r] += 1;
        }
    }
    let raw_list = |r: usize| &raw_vertices[raw_offsets[r]..raw_offsets[r + 1]];

    // canonical order: a block is first met at its smallest vertex
    let mut order: Vec<usize> = Vec::with_capacity(raw_total);
    let mut seen = vec![false; raw_total];
    for u in 0..n {
        let group = order.len();
        for r in raw_blocks_of(u) {
            if !seen[r] {
                seen[r] = true;
                order.push(r);
            }
        }
        if order.len() - group > 1 {
            order[group..].sort_unstable_by(|&a, &b| {
                (raw_size[a], raw_list(a)).cmp(&(raw_size[b], raw_list(b)))
            });
        }
    }
    drop(seen);
    let mut canon = vec![0usize; raw_total];
    for (b, &r) in order.iter().enumerate() {
        canon[r] = b;
    }

    let vertex_offsets = offsets_of(&order.iter().map(|&r| raw_size[r]).collect::<Vec<_>>());
    let mut vertices = Vec::with_capacity(raw_vertices.len());
    for &r in &order {
        vertices.extend_from_slice(raw_list(r));
    }
    drop(raw_vertices);

    let mut slot_block = Vec::with_capacity(2 * g.size());
    let mut edge_count = vec![0usize; raw_total];
    for u in 0..n {
        for &w in g.neighbors(u) {
            let b = canon[edge_raw(u, w)];
            slot_block.push(b);
            if u < w {
                edge_count[b] += 1;
            }
        }
    }
    let edge_offsets = offsets_of(&edge_count);
    drop(edge_count);
    let mut fill = edge_offsets.clone();
    let mut edges = vec![(0, 0); g.size()];
    for u in 0..n {
        let base = g.first_slot(u);
        for (i, &w) in g.neighbors(u).iter().enumerate() {
            if u < w {
                let b = slot_block[base + i];
                edges[fill[b]] = (u, w);
                fill[b] += 1;
            }
        }
    }

    let mut vertex_block_offsets = Vec::with_capacity(n + 1);
    let mut vertex_blocks = Vec::with_capacity(vertices.len());
    let mut cut_vertices = Vec::new();
    vertex_block_offsets.push(0);
    for u in 0..n {
        let start = vertex_blocks.len();
        vertex_blocks.extend(raw_blocks_of(u).map(|r| canon[r]));
        vertex_blocks[start..].sort_unstable();
        if vertex_blocks.len() - start >= 2 {
            cut_vertices.push(u);
        }
        vertex_block_offsets.push(vertex_blocks.len());
    }

    BlockDecomposition {
        vertices,
        vertex_offsets,
        edges,
        edge_offsets,
        cut_vertices,
        slot_block,
        vertex_block_offsets,
        vertex_blocks,
    }
}
