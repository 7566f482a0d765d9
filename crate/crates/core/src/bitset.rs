//! Dense adjacency rows for the desk-scale routines.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Vertex};

/// Square bit matrix; row `v` holds the neighborhood of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut m = BitMatrix::new(g.order());
        for (u, v) in g.edges() {
            m.set(u, v);
            m.set(v, u);
        }
        m
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, u: Vertex, v: Vertex) {
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn row(&self, u: Vertex) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }
}

/// Fixed-capacity vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSet {
    bits: Vec<u64>,
}

impl BitSet {
    pub fn new(n: usize) -> Self {
        BitSet {
            bits: vec![0; n.div_ceil(64).max(1)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = BitSet::new(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        self.bits[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: Vertex) {
        self.bits[v / 64] |= 1 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: Vertex) {
        self.bits[v / 64] &= !(1 << (v % 64));
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.bits
    }

    /// `|row ∩ self|`.
    pub fn count_in(&self, row: &[u64]) -> usize {
        self.bits
            .iter()
            .zip(row)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }
}
