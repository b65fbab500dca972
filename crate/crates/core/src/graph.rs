//! Simple undirected graphs of order at most 64.
//!
//! Every vertex keeps its neighbourhood in a single `u64`, so clique and
//! triangle machinery reduces to word-level mask operations. The edge list is
//! kept alongside the masks in lexicographic `(u, v)` order with `u < v`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest order representable with one neighbour word per vertex.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edges: Vec<(usize, usize)>,
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Iterates the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: vec![0; n],
            edges: Vec::new(),
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::param(format!(
                    "edge ({u}, {v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::param(format!("loop at vertex {u}")));
            }
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(Self::from_masks_unchecked(n, adj))
    }

    /// Builds a graph from neighbour masks, validating symmetry and
    /// irreflexivity.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        check_order(n)?;
        let outside = !full_mask(n);
        for (u, &row) in adj.iter().enumerate() {
            if row & bit(u) != 0 {
                return Err(Error::param(format!("loop at vertex {u}")));
            }
            if row & outside != 0 {
                return Err(Error::param(format!("row {u} has bits beyond order {n}")));
            }
            for v in Bits(row) {
                if adj[v] & bit(u) == 0 {
                    return Err(Error::param(format!("asymmetric adjacency at ({u}, {v})")));
                }
            }
        }
        Ok(Self::from_masks_unchecked(n, adj))
    }

    pub(crate) fn from_masks_unchecked(n: usize, adj: Vec<u64>) -> Self {
        let mut edges = Vec::new();
        for (u, &row) in adj.iter().enumerate() {
            let higher = if u + 1 >= 64 { 0 } else { row & !full_mask(u + 1) };
            edges.extend(Bits(higher).map(|v| (u, v)));
        }
        Graph { n, adj, edges }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Position of edge `uv` in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * (self.n - 1) / 2
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == d)
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & all & !bit(v))
            .collect();
        Self::from_masks_unchecked(self.n, adj)
    }

    /// Returns a copy with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || u == v {
            return Err(Error::param(format!("cannot add edge ({u}, {v})")));
        }
        let mut adj = self.adj.clone();
        adj[u] |= bit(v);
        adj[v] |= bit(u);
        Ok(Self::from_masks_unchecked(self.n, adj))
    }

    /// Vertex sets of the connected components, in order of smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let mut comp = bit(s);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let fresh = self.adj[u] & !comp;
                comp |= fresh;
                queue.extend(Bits(fresh));
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        // Frontier expansion over whole masks; no allocation.
        let mut reached = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for u in Bits(frontier) {
                next |= self.adj[u];
            }
            frontier = next & !reached;
            reached |= next;
        }
        reached == self.vertex_mask()
    }

    /// Block-diagonal union; `other`'s vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_order(n)?;
        let shift = self.n;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&row| row << shift));
        Ok(Self::from_masks_unchecked(n, adj))
    }

    /// Two-colouring by BFS; `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<u64> {
        let mut side = 0u64;
        let mut seen = 0u64;
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            seen |= bit(s);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let u_side = side & bit(u) != 0;
                for w in Bits(self.adj[u]) {
                    if seen & bit(w) == 0 {
                        seen |= bit(w);
                        if !u_side {
                            side |= bit(w);
                        }
                        queue.push_back(w);
                    } else if (side & bit(w) != 0) == u_side {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// graph6 encoding (no trailing newline).
    pub fn to_graph6(&self) -> String {
        let n = self.n;
        let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
        if n <= 62 {
            out.push(63 + n as u8);
        } else {
            out.push(126);
            out.push(63 + ((n >> 12) & 63) as u8);
            out.push(63 + ((n >> 6) & 63) as u8);
            out.push(63 + (n & 63) as u8);
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | u8::from(self.adj[i] & bit(j) != 0);
                filled += 1;
                if filled == 6 {
                    out.push(acc + 63);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((acc << (6 - filled)) + 63);
        }
        // All bytes lie in 63..=126.
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    /// Parses one graph6 line. An optional `>>graph6<<` header and trailing
    /// whitespace are accepted.
    pub fn from_graph6(text: &str) -> Result<Graph> {
        let mut bytes = text.trim_end().as_bytes();
        let mut base = 0;
        if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
            bytes = rest;
            base = 10;
        }
        if bytes.is_empty() {
            return Err(Error::graph6(base, "empty input"));
        }
        for (i, &b) in bytes.iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(Error::graph6(base + i, format!("byte {b:#04x} outside 63..=126")));
            }
        }
        let (n, header_len) = if bytes[0] != 126 {
            ((bytes[0] - 63) as usize, 1)
        } else {
            if bytes.len() >= 2 && bytes[1] == 126 {
                return Err(Error::graph6(base + 1, "orders above 258047 are not supported"));
            }
            if bytes.len() < 4 {
                return Err(Error::graph6(base + bytes.len(), "truncated order header"));
            }
            let n = bytes[1..4]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        };
        if n > MAX_ORDER {
            return Err(Error::graph6(base, format!("order {n} exceeds {MAX_ORDER}")));
        }
        let body = &bytes[header_len..];
        let nbits = n * n.saturating_sub(1) / 2;
        let need = nbits.div_ceil(6);
        if body.len() < need {
            return Err(Error::graph6(
                base + header_len + body.len(),
                format!("truncated body: expected {need} bytes, found {}", body.len()),
            ));
        }
        if body.len() > need {
            return Err(Error::graph6(base + header_len + need, "trailing bytes after body"));
        }
        let mut adj = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                let byte = body[k / 6] - 63;
                if byte & (32 >> (k % 6)) != 0 {
                    adj[i] |= bit(j);
                    adj[j] |= bit(i);
                }
                k += 1;
            }
        }
        if nbits % 6 != 0 {
            let last = body[need - 1] - 63;
            let pad = 6 - nbits % 6;
            if last & ((1 << pad) - 1) != 0 {
                return Err(Error::graph6(base + header_len + need - 1, "nonzero padding bits"));
            }
        }
        Ok(Self::from_masks_unchecked(n, adj))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::param("graph order must be at least 1"));
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge { n, max: MAX_ORDER });
    }
    Ok(())
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, g6={})", self.n, self.size(), self.to_graph6())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}
