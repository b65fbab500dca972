//! Adjacency stored as bitmask rows of `ceil(n/64)` words, for random-graph
//! experiments beyond the 64-vertex [`Graph`].

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

pub const MAX_DENSE_ORDER: usize = 4096;

#[derive(Clone, PartialEq, Eq)]
pub struct DenseGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    m: usize,
}

impl DenseGraph {
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("graph order must be at least 1"));
        }
        if n > MAX_DENSE_ORDER {
            return Err(Error::OrderTooLarge {
                n,
                max: MAX_DENSE_ORDER,
            });
        }
        let words = n.div_ceil(64);
        Ok(DenseGraph {
            n,
            words,
            rows: vec![0; n * words],
            m: 0,
        })
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut d = DenseGraph::empty(g.order()).expect("order already validated");
        for &(u, v) in g.edges() {
            d.add_edge(u, v);
        }
        d
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.has_edge(u, v) {
            self.rows[u * self.words + v / 64] |= 1 << (v % 64);
            self.rows[v * self.words + u / 64] |= 1 << (u % 64);
            self.m += 1;
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] & (1 << (v % 64)) != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_words(self.row(v))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    /// Edges `(u, v)`, `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Converts back to a [`Graph`] when the order allows it.
    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges())
    }
}

impl std::fmt::Debug for DenseGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DenseGraph(n={}, m={})", self.n, self.m)
    }
}

pub(crate) fn iter_words(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words
        .iter()
        .enumerate()
        .flat_map(|(i, &w)| Bits(w).map(move |b| i * 64 + b))
}
