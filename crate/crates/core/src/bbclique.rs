//! Maximum clique by branch and bound over multiword bitsets, with greedy
//! colouring bounds (the MCQ/BBMC family). Used for graphs beyond 64 vertices,
//! always on one neighbourhood at a time.

use serde::Serialize;

use crate::dense::{iter_words, DenseGraph};

/// Induced subgraph relabelled to `0..k` in the order given.
#[derive(Clone, Debug)]
pub struct LocalGraph {
    k: usize,
    words: usize,
    rows: Vec<u64>,
}

impl LocalGraph {
    pub fn induced(g: &DenseGraph, vertices: &[usize]) -> Self {
        let k = vertices.len();
        let words = k.div_ceil(64).max(1);
        let mut rows = vec![0u64; k * words];
        for i in 0..k {
            let vi = vertices[i];
            for j in i + 1..k {
                if g.has_edge(vi, vertices[j]) {
                    rows[i * words + j / 64] |= 1 << (j % 64);
                    rows[j * words + i / 64] |= 1 << (i % 64);
                }
            }
        }
        LocalGraph { k, words, rows }
    }

    pub fn order(&self) -> usize {
        self.k
    }

    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn all(&self) -> Vec<u64> {
        let mut set = vec![0u64; self.words];
        for v in 0..self.k {
            set[v / 64] |= 1 << (v % 64);
        }
        set
    }

    fn degree_within(&self, v: usize, set: &[u64]) -> u32 {
        self.row(v)
            .iter()
            .zip(set)
            .map(|(a, b)| (a & b).count_ones())
            .sum()
    }

    /// Greedy clique inside `cand`: repeatedly take the candidate with most
    /// neighbours among the remaining candidates (lowest index on ties).
    pub fn greedy_clique(&self, cand: &[u64]) -> Vec<usize> {
        let mut p = cand.to_vec();
        let mut clique = Vec::new();
        while p.iter().any(|&w| w != 0) {
            let v = iter_words(&p)
                .max_by_key(|&v| (self.degree_within(v, &p), std::cmp::Reverse(v)))
                .expect("nonempty candidate set");
            clique.push(v);
            for (a, b) in p.iter_mut().zip(self.row(v)) {
                *a &= b;
            }
        }
        clique
    }
}

/// Outcome of one search. `exact` is false when the node budget ran out, in
/// which case `witness` is still a clique and `witness.len()` a lower bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueSearch {
    pub witness: Vec<usize>,
    pub exact: bool,
    pub nodes: u64,
}

impl CliqueSearch {
    pub fn size(&self) -> usize {
        self.witness.len()
    }
}

struct Search<'a> {
    g: &'a LocalGraph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    aborted: bool,
}

/// Largest clique of `g` inside `cand`. `seed` is any known clique inside
/// `cand` (possibly empty); the search only looks for strictly larger ones.
pub fn max_clique(g: &LocalGraph, cand: &[u64], seed: Vec<usize>, budget: Option<u64>) -> CliqueSearch {
    let mut s = Search {
        g,
        best: seed,
        current: Vec::new(),
        nodes: 0,
        budget: budget.unwrap_or(u64::MAX),
        aborted: false,
    };
    let mut p = cand.to_vec();
    if p.iter().any(|&w| w != 0) {
        s.expand(&mut p);
    }
    CliqueSearch {
        witness: s.best,
        exact: !s.aborted,
        nodes: s.nodes,
    }
}

impl Search<'_> {
    fn expand(&mut self, p: &mut [u64]) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        let words = p.len();
        let depth = self.current.len();
        // Vertices whose colour cannot lift the clique past `best` are never
        // branched on.
        let kmin = (self.best.len() + 1).saturating_sub(depth).max(1) as u32;
        let mut order: Vec<(u32, u32)> = Vec::new();
        let mut uncoloured = p.to_vec();
        let mut q = vec![0u64; words];
        let mut colour = 0u32;
        let mut first = 0usize;
        while first < words {
            if uncoloured[first] == 0 {
                first += 1;
                continue;
            }
            colour += 1;
            q[first..].copy_from_slice(&uncoloured[first..]);
            let mut wi = first;
            while wi < words {
                let w = q[wi];
                if w == 0 {
                    wi += 1;
                    continue;
                }
                let b = w.trailing_zeros() as usize;
                let v = wi * 64 + b;
                uncoloured[wi] &= !(1u64 << b);
                q[wi] &= !(1u64 << b);
                let row = self.g.row(v);
                for j in wi..words {
                    q[j] &= !row[j];
                }
                if colour >= kmin {
                    order.push((v as u32, colour));
                }
            }
        }
        let mut next = vec![0u64; words];
        for &(v, c) in order.iter().rev() {
            if depth + c as usize <= self.best.len() {
                return;
            }
            let v = v as usize;
            let row = self.g.row(v);
            let mut any = false;
            for j in 0..words {
                next[j] = p[j] & row[j];
                any |= next[j] != 0;
            }
            self.current.push(v);
            if any {
                self.expand(&mut next);
            } else if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            self.current.pop();
            if self.aborted {
                return;
            }
            p[v / 64] &= !(1u64 << (v % 64));
        }
    }
}

/// Branch-and-bound node caps for the local searches on large graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBudget {
    pub vertex_nodes: u64,
    pub edge_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            vertex_nodes: 5_000,
            edge_nodes: 100,
        }
    }
}

/// Clique-local numbers of a [`DenseGraph`]. When a search runs out of
/// budget its entry is a lower bound; the `*_exact` fields count the entries
/// known to be exact.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DenseCliqueProfile {
    pub omega: u32,
    pub omega_exact: bool,
    pub c_v: Vec<u32>,
    /// Aligned with [`DenseGraph::edges`].
    pub c_e: Vec<u32>,
    pub c_v_exact: usize,
    pub c_e_exact: usize,
    pub t: u64,
    pub diamond_free: bool,
    pub regular: bool,
    pub complete: bool,
    pub connected: bool,
}

impl DenseCliqueProfile {
    pub fn new(g: &DenseGraph, budget: SearchBudget) -> Self {
        let n = g.order();
        let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
        // Edge ids follow `DenseGraph::edges`: row-major over u < v.
        let mut offset = vec![0usize; n + 1];
        for u in 0..n {
            offset[u + 1] = offset[u] + nbrs[u].iter().filter(|&&v| v > u).count();
        }
        let edge_id = |a: usize, b: usize| {
            let start = nbrs[a].partition_point(|&x| x <= a);
            offset[a] + nbrs[a].binary_search(&b).expect("witness pairs are edges") - start
        };

        let mut c_v = vec![1u32; n];
        let mut c_v_exact = 0;
        let mut witnesses: Vec<Vec<usize>> = Vec::with_capacity(n);
        for v in 0..n {
            let h = LocalGraph::induced(g, &nbrs[v]);
            let all = h.all();
            let seed = h.greedy_clique(&all);
            let r = max_clique(&h, &all, seed, Some(budget.vertex_nodes));
            c_v[v] = 1 + r.size() as u32;
            c_v_exact += r.exact as usize;
            let mut k: Vec<usize> = r.witness.iter().map(|&i| nbrs[v][i]).collect();
            k.push(v);
            k.sort_unstable();
            witnesses.push(k);
        }

        // Lower bounds for edges from the vertex witnesses.
        let m = offset[n];
        let mut best_witness = vec![usize::MAX; m];
        let mut lb = vec![2u32; m];
        for (w, k) in witnesses.iter().enumerate() {
            for (i, &a) in k.iter().enumerate() {
                for &b in &k[i + 1..] {
                    let id = edge_id(a, b);
                    if k.len() as u32 > lb[id] {
                        lb[id] = k.len() as u32;
                        best_witness[id] = w;
                    }
                }
            }
        }

        let mut c_e = vec![2u32; m];
        let mut c_e_exact = 0;
        let (mut t3, mut diamond_free) = (0u64, true);
        for u in 0..n {
            let h = LocalGraph::induced(g, &nbrs[u]);
            let start = nbrs[u].partition_point(|&x| x <= u);
            for j in start..nbrs[u].len() {
                let v = nbrs[u][j];
                let id = offset[u] + (j - start);
                let cand = h.row(j);
                let common: u32 = cand.iter().map(|w| w.count_ones()).sum();
                t3 += common as u64;
                diamond_free &= common < 2;
                let mut seed = h.greedy_clique(cand);
                if let Some(k) = witnesses.get(best_witness[id]) {
                    if k.len() - 2 > seed.len() {
                        seed = k
                            .iter()
                            .filter(|&&x| x != u && x != v)
                            .map(|x| nbrs[u].binary_search(x).expect("witness lies in N(u)"))
                            .collect();
                    }
                }
                let r = max_clique(&h, cand, seed, Some(budget.edge_nodes));
                c_e[id] = 2 + r.size() as u32;
                c_e_exact += r.exact as usize;
            }
        }

        let d0 = nbrs.first().map_or(0, Vec::len);
        DenseCliqueProfile {
            omega: c_v.iter().copied().max().unwrap_or(1),
            omega_exact: c_v_exact == n,
            c_v,
            c_e,
            c_v_exact,
            c_e_exact,
            t: t3 / 3,
            diamond_free,
            regular: nbrs.iter().all(|x| x.len() == d0),
            complete: m == n * (n - 1) / 2,
            connected: g.is_connected(),
        }
    }

    pub fn exact(&self) -> bool {
        self.c_v_exact == self.c_v.len() && self.c_e_exact == self.c_e.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_gnp_dense;
    use crate::named;

    fn is_clique(g: &LocalGraph, c: &[usize]) -> bool {
        c.iter().enumerate().all(|(i, &a)| {
            c[i + 1..]
                .iter()
                .all(|&b| g.row(a)[b / 64] & (1 << (b % 64)) != 0)
        })
    }

    /// Exhaustive subset search, feasible for tiny graphs.
    fn brute_force_omega(g: &DenseGraph) -> usize {
        let n = g.order();
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let vs: Vec<_> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let ok = vs
                .iter()
                .enumerate()
                .all(|(i, &a)| vs[i + 1..].iter().all(|&b| g.has_edge(a, b)));
            if ok {
                best = best.max(vs.len());
            }
        }
        best
    }

    #[test]
    fn fixtures() {
        for (g, omega) in [
            (named::complete(4).unwrap(), 4),
            (named::petersen().unwrap(), 2),
            (named::diamond().unwrap(), 3),
            (named::octahedron().unwrap(), 3),
        ] {
            let d = DenseGraph::from_graph(&g);
            let vs: Vec<_> = (0..d.order()).collect();
            let local = LocalGraph::induced(&d, &vs);
            let r = max_clique(&local, &local.all(), Vec::new(), None);
            assert!(r.exact);
            assert_eq!(r.size(), omega);
            assert!(is_clique(&local, &r.witness));
        }
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        for s in 0..40 {
            let d = random_gnp_dense(14, 0.3 + 0.01 * s as f64, 5, s).unwrap();
            let vs: Vec<_> = (0..d.order()).collect();
            let local = LocalGraph::induced(&d, &vs);
            let r = max_clique(&local, &local.all(), Vec::new(), None);
            assert_eq!(r.size(), brute_force_omega(&d), "stream {s}");
            assert!(is_clique(&local, &r.witness));
            let greedy = local.greedy_clique(&local.all());
            assert!(is_clique(&local, &greedy) && greedy.len() <= r.size());
        }
    }

    #[test]
    fn budget_exhaustion_keeps_a_valid_clique() {
        let d = random_gnp_dense(150, 0.5, 3, 0).unwrap();
        let vs: Vec<_> = (0..d.order()).collect();
        let local = LocalGraph::induced(&d, &vs);
        let r = max_clique(&local, &local.all(), Vec::new(), Some(5));
        assert!(!r.exact);
        assert!(is_clique(&local, &r.witness));
        let full = max_clique(&local, &local.all(), r.witness.clone(), None);
        assert!(full.exact && full.size() >= r.size());
    }

    #[test]
    fn dense_profile_matches_small_profile() {
        let unlimited = SearchBudget {
            vertex_nodes: u64::MAX,
            edge_nodes: u64::MAX,
        };
        for s in 0..30 {
            let g = crate::generate::random_gnp_stream(40, 0.2 + 0.02 * s as f64, 9, s).unwrap();
            let d = DenseCliqueProfile::new(&DenseGraph::from_graph(&g), unlimited);
            let p = crate::cliques::CliqueProfile::new(&g);
            assert!(d.exact() && d.omega_exact);
            assert_eq!((d.omega, &d.c_v, &d.c_e, d.t), (p.omega, &p.c_v, &p.c_e, p.t));
            assert_eq!(d.diamond_free, p.predicates.diamond_free);
            assert_eq!(d.connected, g.is_connected());
        }
        let d = DenseCliqueProfile::new(&DenseGraph::from_graph(&named::bowtie().unwrap()), SearchBudget::default());
        assert!(d.diamond_free && d.t == 2 && d.c_e == vec![3; 6]);
    }
}
