//! Adjacency spectra, square energies, power sums and walk counts.

use serde::Serialize;

use crate::dense::DenseGraph;
use crate::eigen::{self, SymMatrix};
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};
use crate::weights::EdgeWeights;

/// Eigenvalues with `|λ| <= REL * max(1, λ₁)` count as zero.
pub const DEFAULT_SIGN_THRESHOLD: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    /// Descending.
    pub eigenvalues: Vec<f64>,
    pub sign_threshold: f64,
    pub s_plus: f64,
    pub s_minus: f64,
    pub n_plus: usize,
    pub n_minus: usize,
}

impl Spectrum {
    pub fn of(g: &Graph) -> Result<Self> {
        Self::with_threshold(g, DEFAULT_SIGN_THRESHOLD)
    }

    pub fn with_threshold(g: &Graph, relative_threshold: f64) -> Result<Self> {
        let values = eigen::eigenvalues(&adjacency_matrix(g))?;
        Ok(Self::from_eigenvalues(values, relative_threshold))
    }

    pub fn of_dense(g: &DenseGraph) -> Result<Self> {
        let values = eigen::eigenvalues(&dense_adjacency_matrix(g))?;
        Ok(Self::from_eigenvalues(values, DEFAULT_SIGN_THRESHOLD))
    }

    /// Sorts `values` descending and classifies signs against
    /// `relative_threshold * max(1, λ₁)`.
    pub fn from_eigenvalues(mut values: Vec<f64>, relative_threshold: f64) -> Self {
        values.sort_by(|a, b| b.total_cmp(a));
        let lambda1 = values.first().copied().unwrap_or(0.0);
        let threshold = relative_threshold * lambda1.max(1.0);
        let (mut s_plus, mut s_minus, mut n_plus, mut n_minus) = (0.0, 0.0, 0, 0);
        for &x in &values {
            if x > threshold {
                s_plus += x * x;
                n_plus += 1;
            } else if x < -threshold {
                s_minus += x * x;
                n_minus += 1;
            }
        }
        Spectrum {
            eigenvalues: values,
            sign_threshold: threshold,
            s_plus,
            s_minus,
            n_plus,
            n_minus,
        }
    }

    pub fn order(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn lambda1(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Second largest eigenvalue; 0 for a single vertex.
    pub fn lambda2(&self) -> f64 {
        self.eigenvalues.get(1).copied().unwrap_or(0.0)
    }

    pub fn lambda_min(&self) -> f64 {
        *self.eigenvalues.last().expect("nonempty spectrum")
    }

    /// `Σ λᵢ^p`.
    pub fn power_sum(&self, p: u32) -> f64 {
        self.eigenvalues.iter().map(|x| x.powi(p as i32)).sum()
    }

    /// Positive eigenvalues, descending.
    pub fn positive(&self) -> &[f64] {
        &self.eigenvalues[..self.n_plus]
    }

    /// Negative eigenvalues, ascending (most negative first).
    pub fn negative(&self) -> Vec<f64> {
        self.eigenvalues[self.order() - self.n_minus..]
            .iter()
            .rev()
            .copied()
            .collect()
    }
}

pub fn eigenvalues(g: &Graph) -> Result<Spectrum> {
    Spectrum::of(g)
}

pub fn square_energies(s: &Spectrum) -> (f64, f64) {
    (s.s_plus, s.s_minus)
}

pub fn power_sum(s: &Spectrum, p: u32) -> f64 {
    s.power_sum(p)
}

pub fn adjacency_matrix(g: &Graph) -> SymMatrix {
    let mut a = SymMatrix::zeros(g.order());
    for &(u, v) in g.edges() {
        a.set_sym(u, v, 1.0);
    }
    a
}

pub fn dense_adjacency_matrix(g: &DenseGraph) -> SymMatrix {
    let mut a = SymMatrix::zeros(g.order());
    for u in 0..g.order() {
        for v in g.neighbors(u).filter(|&v| v > u) {
            a.set_sym(u, v, 1.0);
        }
    }
    a
}

pub fn weighted_adjacency_matrix(g: &Graph, w: &EdgeWeights) -> SymMatrix {
    let mut a = SymMatrix::zeros(g.order());
    for (&(u, v), &x) in g.edges().iter().zip(w.values()) {
        a.set_sym(u, v, x);
    }
    a
}

/// Largest eigenvalue of the weighted adjacency matrix.
pub fn weighted_spectral_radius(g: &Graph, w: &EdgeWeights) -> Result<f64> {
    if w.values().len() != g.size() {
        return Err(Error::Weights("weight vector does not match the edge list".into()));
    }
    Ok(eigen::eigenvalues(&weighted_adjacency_matrix(g, w))?[0])
}

/// Largest `‖A x − λ x‖` over all eigenpairs of `A(G)`, scaled by
/// `max(1, |λ₁|)`, with eigenvectors recomputed by the full decomposition.
pub fn max_relative_residual(g: &Graph) -> Result<f64> {
    let a = adjacency_matrix(g);
    let dec = eigen::eigen_decomposition(&a)?;
    let scale = dec.values[0].abs().max(1.0);
    let mut worst: f64 = 0.0;
    for (j, &lambda) in dec.values.iter().enumerate() {
        let x = dec.vector(j);
        let ax = a.mul_vec(x);
        let r = ax
            .iter()
            .zip(x)
            .map(|(y, xi)| (y - lambda * xi).powi(2))
            .sum::<f64>()
            .sqrt();
        worst = worst.max(r / scale);
    }
    Ok(worst)
}

/// Walks with `r` vertices, per start vertex and in total.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WalkTable {
    pub r: u32,
    pub per_vertex: Vec<u64>,
    pub total: u64,
}

/// `w_r(v)` by repeated neighbour sums in checked 64-bit arithmetic.
pub fn walk_counts(g: &Graph, r: u32) -> Result<WalkTable> {
    walk_tables(g, r).map(|mut t| t.pop().expect("r >= 1 yields a table"))
}

/// Tables for `1..=r_max`.
pub fn walk_tables(g: &Graph, r_max: u32) -> Result<Vec<WalkTable>> {
    if r_max == 0 {
        return Err(Error::param("walk length r must be at least 1"));
    }
    let n = g.order();
    let mut current = vec![1u64; n];
    let mut tables = Vec::with_capacity(r_max as usize);
    for r in 1..=r_max {
        if r > 1 {
            let mut next = vec![0u64; n];
            for (v, slot) in next.iter_mut().enumerate() {
                let mut acc = 0u64;
                for u in Bits(g.neighbors(v)) {
                    acc = acc
                        .checked_add(current[u])
                        .ok_or(Error::WalkOverflow { r })?;
                }
                *slot = acc;
            }
            current = next;
        }
        let total = current
            .iter()
            .try_fold(0u64, |acc, &x| acc.checked_add(x))
            .ok_or(Error::WalkOverflow { r })?;
        tables.push(WalkTable {
            r,
            per_vertex: current.clone(),
            total,
        });
    }
    Ok(tables)
}
