//! Dense real symmetric eigensolver: Householder reduction to tridiagonal
//! form followed by the implicit QL iteration with Wilkinson-style shifts.
//!
//! Matrices are stored column-major (`a[col * n + row]`); for symmetric input
//! the distinction only matters for the access pattern, which keeps the inner
//! loops of both phases contiguous.

// Index loops mirror the textbook formulation of both phases.
#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};

/// Symmetric matrix in column-major order.
#[derive(Clone, Debug, PartialEq)]
pub struct SymMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(n: usize) -> Self {
        SymMatrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> f64 {
        self.data[c * self.n + r]
    }

    /// Sets both `(r, c)` and `(c, r)`.
    #[inline]
    pub fn set_sym(&mut self, r: usize, c: usize, x: f64) {
        self.data[c * self.n + r] = x;
        self.data[r * self.n + c] = x;
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        let mut y = vec![0.0; self.n];
        for (c, &xc) in x.iter().enumerate() {
            if xc != 0.0 {
                let col = &self.data[c * self.n..(c + 1) * self.n];
                for (yr, &a) in y.iter_mut().zip(col) {
                    *yr += a * xc;
                }
            }
        }
        y
    }

    /// FNV-1a over the bit patterns of the entries, used to identify a matrix
    /// in error reports.
    pub fn fingerprint(&self) -> u64 {
        let mut h = 0xcbf29ce484222325u64;
        for x in &self.data {
            for b in x.to_bits().to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        }
        h
    }
}

/// Eigenvalues and column-major eigenvectors (`vectors[j * n + k]` is
/// component `k` of the eigenvector for `values[j]`), sorted descending.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: Vec<f64>,
}

impl EigenDecomposition {
    pub fn vector(&self, j: usize) -> &[f64] {
        let n = self.values.len();
        &self.vectors[j * n..(j + 1) * n]
    }
}

/// Eigenvalues only, sorted descending.
pub fn eigenvalues(a: &SymMatrix) -> Result<Vec<f64>> {
    let n = a.n;
    let mut v = a.data.clone();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(n, &mut v, &mut d, &mut e, false);
    ql_implicit(n, &mut d, &mut e, None).map_err(|reason| Error::Numeric {
        reason,
        fingerprint: a.fingerprint(),
    })?;
    d.sort_by(|x, y| y.total_cmp(x));
    Ok(d)
}

/// Full decomposition.
pub fn eigen_decomposition(a: &SymMatrix) -> Result<EigenDecomposition> {
    let n = a.n;
    let mut v = a.data.clone();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tridiagonalize(n, &mut v, &mut d, &mut e, true);
    ql_implicit(n, &mut d, &mut e, Some(&mut v)).map_err(|reason| Error::Numeric {
        reason,
        fingerprint: a.fingerprint(),
    })?;
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| d[j].total_cmp(&d[i]));
    let mut vectors = Vec::with_capacity(n * n);
    for &j in &idx {
        vectors.extend_from_slice(&v[j * n..(j + 1) * n]);
    }
    Ok(EigenDecomposition {
        values: idx.iter().map(|&j| d[j]).collect(),
        vectors,
    })
}

/// Householder reduction. On return `d` holds the diagonal and `e[1..]` the
/// subdiagonal of the tridiagonal matrix; with `accumulate`, `v` holds the
/// orthogonal transformation.
fn tridiagonalize(n: usize, v: &mut [f64], d: &mut [f64], e: &mut [f64], accumulate: bool) {
    // at(row, col) = v[col * n + row]; the reduction works on the lower
    // triangle, i.e. columns are contiguous.
    let at = |r: usize, c: usize| c * n + r;
    if n == 0 {
        return;
    }
    for j in 0..n {
        d[j] = v[at(n - 1, j)];
    }
    for i in (1..n).rev() {
        let mut scale = 0.0;
        let mut h = 0.0;
        for k in 0..i {
            scale += d[k].abs();
        }
        if scale == 0.0 {
            e[i] = d[i - 1];
            for j in 0..i {
                d[j] = v[at(i - 1, j)];
                v[at(i, j)] = 0.0;
                v[at(j, i)] = 0.0;
            }
        } else {
            for k in 0..i {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            let mut f = d[i - 1];
            let mut g = h.sqrt();
            if f > 0.0 {
                g = -g;
            }
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for ej in e.iter_mut().take(i) {
                *ej = 0.0;
            }
            for j in 0..i {
                f = d[j];
                v[at(j, i)] = f;
                g = e[j] + v[at(j, j)] * f;
                let col = &v[j * n..j * n + i];
                for k in j + 1..i {
                    g += col[k] * d[k];
                    e[k] += col[k] * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for j in 0..i {
                e[j] /= h;
                f += e[j] * d[j];
            }
            let hh = f / (h + h);
            for j in 0..i {
                e[j] -= hh * d[j];
            }
            for j in 0..i {
                f = d[j];
                g = e[j];
                let col = &mut v[j * n..j * n + i];
                for k in j..i {
                    col[k] -= f * e[k] + g * d[k];
                }
                d[j] = v[at(i - 1, j)];
                v[at(i, j)] = 0.0;
            }
        }
        d[i] = h;
    }

    if !accumulate {
        for j in 0..n {
            d[j] = v[at(j, j)];
        }
        e[0] = 0.0;
        return;
    }

    for i in 0..n - 1 {
        v[at(n - 1, i)] = v[at(i, i)];
        v[at(i, i)] = 1.0;
        let h = d[i + 1];
        if h != 0.0 {
            for k in 0..=i {
                d[k] = v[at(k, i + 1)] / h;
            }
            for j in 0..=i {
                let mut g = 0.0;
                for k in 0..=i {
                    g += v[at(k, i + 1)] * v[at(k, j)];
                }
                for k in 0..=i {
                    v[at(k, j)] -= g * d[k];
                }
            }
        }
        for k in 0..=i {
            v[at(k, i + 1)] = 0.0;
        }
    }
    for j in 0..n {
        d[j] = v[at(n - 1, j)];
        v[at(n - 1, j)] = 0.0;
    }
    v[at(n - 1, n - 1)] = 1.0;
    e[0] = 0.0;
}

/// Implicit QL on the tridiagonal `(d, e)`; `e[1..]` is the subdiagonal on
/// entry. Eigenvalues land in `d` (unsorted).
fn ql_implicit(n: usize, d: &mut [f64], e: &mut [f64], mut v: Option<&mut [f64]>) -> Result<(), String> {
    if n <= 1 {
        return Ok(());
    }
    for i in 1..n {
        e[i - 1] = e[i];
    }
    e[n - 1] = 0.0;
    let max_iter = 60 * n.max(8);
    let mut f = 0.0;
    let mut tst1: f64 = 0.0;
    let eps = f64::EPSILON;
    for l in 0..n {
        tst1 = tst1.max(d[l].abs() + e[l].abs());
        let mut m = l;
        while m < n {
            if e[m].abs() <= eps * tst1 {
                break;
            }
            m += 1;
        }
        if m > l {
            let mut iter = 0;
            loop {
                iter += 1;
                if iter > max_iter {
                    return Err(format!("no convergence for eigenvalue {l} after {max_iter} sweeps"));
                }
                let mut g = d[l];
                let mut p = (d[l + 1] - g) / (2.0 * e[l]);
                let mut r = p.hypot(1.0);
                if p < 0.0 {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                let dl1 = d[l + 1];
                let mut h = g - d[l];
                for di in d.iter_mut().take(n).skip(l + 2) {
                    *di -= h;
                }
                f += h;

                p = d[m];
                let mut c = 1.0;
                let mut c2 = c;
                let mut c3 = c;
                let el1 = e[l + 1];
                let mut s = 0.0;
                let mut s2 = 0.0;
                for i in (l..m).rev() {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[i];
                    h = c * p;
                    r = p.hypot(e[i]);
                    e[i + 1] = s * r;
                    s = e[i] / r;
                    c = p / r;
                    p = c * d[i] - s * g;
                    d[i + 1] = h + s * (c * g + s * d[i]);
                    if let Some(v) = v.as_deref_mut() {
                        let (left, right) = v.split_at_mut((i + 1) * n);
                        let col_i = &mut left[i * n..];
                        let col_i1 = &mut right[..n];
                        for k in 0..n {
                            let hk = col_i1[k];
                            col_i1[k] = s * col_i[k] + c * hk;
                            col_i[k] = c * col_i[k] - s * hk;
                        }
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
                if e[l].abs() <= eps * tst1 {
                    break;
                }
            }
        }
        d[l] += f;
        e[l] = 0.0;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(a: &SymMatrix, lambda: f64, x: &[f64]) -> f64 {
        let ax = a.mul_vec(x);
        ax.iter()
            .zip(x)
            .map(|(y, xi)| (y - lambda * xi).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    #[test]
    fn diagonal_and_tiny_cases() {
        let mut a = SymMatrix::zeros(1);
        a.set_sym(0, 0, 2.5);
        assert_eq!(eigenvalues(&a).unwrap(), vec![2.5]);
        let mut b = SymMatrix::zeros(2);
        b.set_sym(0, 1, 1.0);
        let ev = eigenvalues(&b).unwrap();
        assert!((ev[0] - 1.0).abs() < 1e-15 && (ev[1] + 1.0).abs() < 1e-15);
        assert_eq!(eigenvalues(&SymMatrix::zeros(4)).unwrap(), vec![0.0; 4]);
    }

    #[test]
    fn path_graph_closed_form() {
        // Path on n vertices: 2 cos(k pi / (n + 1)), k = 1..n.
        let n = 25;
        let mut a = SymMatrix::zeros(n);
        for i in 1..n {
            a.set_sym(i - 1, i, 1.0);
        }
        let ev = eigenvalues(&a).unwrap();
        for (k, &x) in ev.iter().enumerate() {
            let exact = 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((x - exact).abs() < 1e-12, "k={k}: {x} vs {exact}");
        }
    }

    #[test]
    fn vectors_have_small_residuals_and_are_orthonormal() {
        let n = 12;
        let mut a = SymMatrix::zeros(n);
        let mut x = 0.3f64;
        for r in 0..n {
            for c in r..n {
                x = (x * 997.0 + 0.1).fract();
                a.set_sym(r, c, x - 0.5);
            }
        }
        let dec = eigen_decomposition(&a).unwrap();
        let vals = eigenvalues(&a).unwrap();
        for j in 0..n {
            assert!((dec.values[j] - vals[j]).abs() < 1e-12);
            assert!(residual(&a, dec.values[j], dec.vector(j)) < 1e-12);
            for k in 0..n {
                let dot: f64 = dec.vector(j).iter().zip(dec.vector(k)).map(|(p, q)| p * q).sum();
                let want = if j == k { 1.0 } else { 0.0 };
                assert!((dot - want).abs() < 1e-12);
            }
        }
    }
}
