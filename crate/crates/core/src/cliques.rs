//! Clique number, local clique numbers `c(v)` and `c(e)`, triangle counts
//! and structural predicates for graphs of order at most 64.

use serde::Serialize;

use crate::graph::{bit, Bits, Graph};

/// A maximum clique: its order and one witness vertex set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Clique {
    pub size: usize,
    pub vertices: u64,
}

/// Largest clique of `g`.
pub fn max_clique(g: &Graph) -> Clique {
    max_clique_within(g, g.vertex_mask())
}

/// Largest clique of the subgraph induced on `mask`.
pub fn max_clique_within(g: &Graph, mask: u64) -> Clique {
    max_clique_masks(g.adjacency(), mask, 0)
}

/// Branch and bound with greedy colouring bounds. `floor` is a clique size
/// already known to be attainable; only strictly larger cliques are sought,
/// and if none exists the returned witness is empty with `size == floor`.
pub(crate) fn max_clique_masks(adj: &[u64], cand: u64, floor: usize) -> Clique {
    let mut best = Clique {
        size: floor,
        vertices: 0,
    };
    if cand != 0 {
        expand(adj, 0, 0, cand, &mut best);
    }
    best
}

fn expand(adj: &[u64], current: u64, depth: usize, mut p: u64, best: &mut Clique) {
    let mut order = [0u8; 64];
    let mut colours = [0u8; 64];
    let mut len = 0;
    let mut uncoloured = p;
    let mut colour = 0u8;
    while uncoloured != 0 {
        colour += 1;
        let mut q = uncoloured;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !adj[v] & !bit(v);
            uncoloured &= !bit(v);
            order[len] = v as u8;
            colours[len] = colour;
            len += 1;
        }
    }
    for i in (0..len).rev() {
        if depth + colours[i] as usize <= best.size {
            return;
        }
        let v = order[i] as usize;
        let next = p & adj[v];
        let with_v = current | bit(v);
        if next == 0 {
            if depth + 1 > best.size {
                *best = Clique {
                    size: depth + 1,
                    vertices: with_v,
                };
            }
        } else {
            expand(adj, with_v, depth + 1, next, best);
        }
        p &= !bit(v);
    }
}

/// `c(v) = 1 + ω(G[N(v)])` for every vertex; isolated vertices get 1.
pub fn vertex_clique_numbers(g: &Graph) -> Vec<u32> {
    let adj = g.adjacency();
    (0..g.order())
        .map(|v| 1 + max_clique_masks(adj, adj[v], 0).size as u32)
        .collect()
}

/// `c(uv) = 2 + ω(G[N(u) ∩ N(v)])`, aligned with [`Graph::edges`].
pub fn edge_clique_numbers(g: &Graph) -> Vec<u32> {
    let adj = g.adjacency();
    g.edges()
        .iter()
        .map(|&(u, v)| 2 + max_clique_masks(adj, adj[u] & adj[v], 0).size as u32)
        .collect()
}

/// Exact triangle count: each triangle is seen once per edge.
pub fn triangle_count(g: &Graph) -> u64 {
    let adj = g.adjacency();
    let per_edge: u64 = g
        .edges()
        .iter()
        .map(|&(u, v)| (adj[u] & adj[v]).count_ones() as u64)
        .sum();
    per_edge / 3
}

/// `Σ_v m(G[N(v)])`, which equals three times the triangle count.
pub fn neighborhood_edge_sum(g: &Graph) -> u64 {
    let adj = g.adjacency();
    (0..g.order())
        .map(|v| {
            Bits(adj[v])
                .map(|u| (adj[u] & adj[v]).count_ones() as u64)
                .sum::<u64>()
                / 2
        })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Predicates {
    pub triangle_free: bool,
    pub diamond_free: bool,
    pub regular: bool,
    pub complete: bool,
    pub bipartite: bool,
    pub complete_multipartite: bool,
}

/// Diamond (K4 minus an edge) as a not necessarily induced subgraph: some
/// edge has two common neighbours.
pub fn is_diamond_free(g: &Graph) -> bool {
    let adj = g.adjacency();
    g.edges()
        .iter()
        .all(|&(u, v)| (adj[u] & adj[v]).count_ones() < 2)
}

/// True when the complement is a disjoint union of cliques, i.e.
/// non-adjacency is an equivalence relation.
pub fn is_complete_multipartite(g: &Graph) -> bool {
    let all = g.vertex_mask();
    let class = |v: usize| (!g.neighbors(v) & all) | bit(v);
    (0..g.order()).all(|v| Bits(class(v)).all(|u| class(u) == class(v)))
}

pub fn predicates(g: &Graph) -> Predicates {
    Predicates {
        triangle_free: triangle_count(g) == 0,
        diamond_free: is_diamond_free(g),
        regular: g.is_regular(),
        complete: g.is_complete(),
        bipartite: g.bipartition().is_some(),
        complete_multipartite: is_complete_multipartite(g),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueProfile {
    pub omega: u32,
    pub c_v: Vec<u32>,
    /// Aligned with [`Graph::edges`].
    pub c_e: Vec<u32>,
    pub t: u64,
    /// Number of vertices lying in a triangle (`c(v) >= 3`).
    pub tv: usize,
    pub predicates: Predicates,
}

impl CliqueProfile {
    pub fn new(g: &Graph) -> Self {
        let c_v = vertex_clique_numbers(g);
        let c_e = edge_clique_numbers(g);
        let omega = c_v.iter().copied().max().unwrap_or(1);
        let tv = c_v.iter().filter(|&&c| c >= 3).count();
        CliqueProfile {
            omega,
            c_v,
            c_e,
            t: triangle_count(g),
            tv,
            predicates: predicates(g),
        }
    }
}
