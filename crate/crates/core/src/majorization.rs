//! Weak majorization and p-norms.

/// `y ≺_w x`: every prefix sum of `y` sorted descending is at most the
/// matching prefix sum of `x`. The shorter vector is padded with zeros.
pub fn weakly_majorizes(x: &[f64], y: &[f64]) -> bool {
    weakly_majorizes_tol(x, y, 0.0)
}

/// As [`weakly_majorizes`], allowing each prefix comparison to fail by `tol`.
pub fn weakly_majorizes_tol(x: &[f64], y: &[f64], tol: f64) -> bool {
    let len = x.len().max(y.len());
    let (xs, ys) = (descending(x, len), descending(y, len));
    let (mut sx, mut sy) = (0.0, 0.0);
    for (a, b) in xs.iter().zip(&ys) {
        sx += a;
        sy += b;
        if sy > sx + tol {
            return false;
        }
    }
    true
}

fn descending(v: &[f64], len: usize) -> Vec<f64> {
    let mut out = v.to_vec();
    out.resize(len, 0.0);
    out.sort_by(|a, b| b.total_cmp(a));
    out
}

/// `(Σ |xᵢ|^p)^{1/p}`.
pub fn p_norm(x: &[f64], p: f64) -> f64 {
    x.iter().map(|v| v.abs().powf(p)).sum::<f64>().powf(1.0 / p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        assert!(weakly_majorizes(&[3.0, 1.0], &[2.0, 2.0]));
        assert!(!weakly_majorizes(&[2.0, 2.0], &[3.0, 1.0]));
        assert!(weakly_majorizes(&[2.0, 2.0], &[2.0, 2.0]));
        assert!(weakly_majorizes(&[3.0], &[2.0, 1.0]));
        assert!(!weakly_majorizes(&[2.0, 1.0], &[3.0]));
        assert!((p_norm(&[3.0, 4.0], 2.0) - 5.0).abs() < 1e-15);
        assert_eq!(p_norm(&[1.0, -2.0], 1.0), 3.0);
    }
}
