//! Weighted quadratic forms `F(x) = xᵀWx` on the standard simplex and their
//! maximisation by replicator dynamics.
//!
//! For the 0/1 adjacency matrix the maximum is `1 - 1/ω`. The two local
//! schemes put `c(v)`-dependent weights on the edges and keep the maximum at
//! most 1, with equality at a uniform distribution on a maximum clique.

use rand::Rng;
use serde::Serialize;

use crate::cliques::max_clique;
use crate::error::{Error, Result};
use crate::generate::stream_rng;
use crate::graph::{bit, Bits, Graph};
use crate::weights::EdgeWeights;

#[derive(Clone, Debug, PartialEq)]
pub enum WeightScheme {
    /// `w = 1` on every edge.
    Classical,
    /// `w_uv = ½ (c(u)/(c(u)-1) + c(v)/(c(v)-1))`.
    AvgLocal,
    /// `w_uv = sqrt(c(u) c(v) / ((c(u)-1)(c(v)-1)))`.
    GeoLocal,
    Custom(EdgeWeights),
}

impl WeightScheme {
    pub fn id(&self) -> &'static str {
        match self {
            WeightScheme::Classical => "classical",
            WeightScheme::AvgLocal => "avg_local",
            WeightScheme::GeoLocal => "geo_local",
            WeightScheme::Custom(_) => "custom",
        }
    }

    /// Parses the three built-in scheme names.
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "classical" => Ok(WeightScheme::Classical),
            "avg_local" => Ok(WeightScheme::AvgLocal),
            "geo_local" => Ok(WeightScheme::GeoLocal),
            "custom" => Err(Error::param("the custom scheme needs a weight CSV")),
            other => Err(Error::param(format!(
                "unknown weight scheme `{other}`; expected classical, avg_local, geo_local or custom"
            ))),
        }
    }

    /// Edge weights for `g` given its vertex clique numbers.
    pub fn edge_weights(&self, g: &Graph, c_v: &[u32]) -> Result<EdgeWeights> {
        let ratio = |v: usize| {
            let c = c_v[v] as f64;
            c / (c - 1.0)
        };
        match self {
            WeightScheme::Classical => EdgeWeights::uniform(g, 1.0),
            WeightScheme::AvgLocal => EdgeWeights::new(
                g,
                g.edges()
                    .iter()
                    .map(|&(u, v)| 0.5 * (ratio(u) + ratio(v)))
                    .collect(),
            ),
            WeightScheme::GeoLocal => EdgeWeights::new(
                g,
                g.edges()
                    .iter()
                    .map(|&(u, v)| (ratio(u) * ratio(v)).sqrt())
                    .collect(),
            ),
            WeightScheme::Custom(w) => {
                if w.values().len() != g.size() {
                    return Err(Error::Weights("custom weights do not match the graph".into()));
                }
                Ok(w.clone())
            }
        }
    }
}

/// A point of the standard simplex.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(transparent)]
pub struct SimplexPoint {
    x: Vec<f64>,
}

const SIMPLEX_TOL: f64 = 1e-12;

impl SimplexPoint {
    pub fn new(x: Vec<f64>) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::param("simplex point needs at least one coordinate"));
        }
        if let Some(bad) = x.iter().find(|v| !(v.is_finite() && **v >= 0.0)) {
            return Err(Error::param(format!("simplex coordinate {bad} is negative or not finite")));
        }
        let sum: f64 = x.iter().sum();
        if (sum - 1.0).abs() > SIMPLEX_TOL {
            return Err(Error::param(format!("coordinates sum to {sum}, not 1")));
        }
        Ok(SimplexPoint { x })
    }

    /// Uniform distribution on the vertices of `mask`.
    pub fn uniform_on(n: usize, mask: u64) -> Result<Self> {
        let k = mask.count_ones();
        if k == 0 || (n < 64 && mask >> n != 0) {
            return Err(Error::param("support must be a nonempty subset of the vertices"));
        }
        let mut x = vec![0.0; n];
        for v in Bits(mask) {
            x[v] = 1.0 / k as f64;
        }
        Ok(SimplexPoint { x })
    }

    pub fn indicator(n: usize, v: usize) -> Result<Self> {
        Self::uniform_on(n, bit(v))
    }

    pub fn coords(&self) -> &[f64] {
        &self.x
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.x.len()).filter(|&v| self.x[v] > 0.0).collect()
    }
}

/// `Σ_{uv ∈ E} 2 w_uv x_u x_v`.
pub fn quad_form(g: &Graph, w: &EdgeWeights, x: &SimplexPoint) -> Result<f64> {
    if x.x.len() != g.order() {
        return Err(Error::param(format!(
            "point has {} coordinates but the graph has {} vertices",
            x.x.len(),
            g.order()
        )));
    }
    Ok(form(g, w, &x.x))
}

fn form(g: &Graph, w: &EdgeWeights, x: &[f64]) -> f64 {
    g.edges()
        .iter()
        .zip(w.values())
        .map(|(&(u, v), &wv)| 2.0 * wv * x[u] * x[v])
        .sum()
}

fn gradient_half(g: &Graph, w: &EdgeWeights, x: &[f64], out: &mut [f64]) {
    out.iter_mut().for_each(|o| *o = 0.0);
    for (&(u, v), &wv) in g.edges().iter().zip(w.values()) {
        out[u] += wv * x[v];
        out[v] += wv * x[u];
    }
}

#[derive(Clone, Debug)]
pub struct MsOptions {
    /// Random Dirichlet(1) starts.
    pub restarts: usize,
    pub iters: usize,
    /// Stop when successive objective values differ by less than this.
    pub tol: f64,
    pub seed: u64,
    /// Cap on maximal cliques used as extra starting points.
    pub clique_starts: usize,
}

impl Default for MsOptions {
    fn default() -> Self {
        MsOptions {
            restarts: 32,
            iters: 10_000,
            tol: 1e-12,
            seed: 0,
            clique_starts: 64,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MsResult {
    pub x: SimplexPoint,
    pub value: f64,
    /// Largest single-step decrease of the objective seen over all runs.
    pub max_decrease: f64,
    pub starts: usize,
}

/// One replicator run from `x`; returns (final value, largest decrease).
pub fn replicator(g: &Graph, w: &EdgeWeights, x: &mut [f64], iters: usize, tol: f64) -> (f64, f64) {
    let mut grad = vec![0.0; x.len()];
    gradient_half(g, w, x, &mut grad);
    let mut value: f64 = x.iter().zip(&grad).map(|(a, b)| a * b).sum();
    let mut max_decrease: f64 = 0.0;
    for _ in 0..iters {
        if value <= 0.0 {
            break;
        }
        for (xi, gi) in x.iter_mut().zip(&grad) {
            *xi *= gi / value;
        }
        let s: f64 = x.iter().sum();
        x.iter_mut().for_each(|xi| *xi /= s);
        gradient_half(g, w, x, &mut grad);
        let next: f64 = x.iter().zip(&grad).map(|(a, b)| a * b).sum();
        max_decrease = max_decrease.max(value - next);
        let done = (next - value).abs() < tol;
        value = next;
        if done {
            break;
        }
    }
    (value, max_decrease)
}

/// Maximal cliques by Bron–Kerbosch with pivoting, at most `cap` of them,
/// maximum clique first.
pub fn maximal_cliques(g: &Graph, cap: usize) -> Vec<u64> {
    let mut out = vec![max_clique(g).vertices];
    fn bk(g: &Graph, r: u64, mut p: u64, mut x: u64, cap: usize, out: &mut Vec<u64>) {
        if out.len() >= cap {
            return;
        }
        if p == 0 {
            if x == 0 && !out.contains(&r) {
                out.push(r);
            }
            return;
        }
        let pivot = Bits(p | x)
            .max_by_key(|&u| (g.neighbors(u) & p).count_ones())
            .expect("p is nonempty");
        for v in Bits(p & !g.neighbors(pivot)) {
            bk(g, r | bit(v), p & g.neighbors(v), x & g.neighbors(v), cap, out);
            p &= !bit(v);
            x |= bit(v);
        }
    }
    bk(g, 0, g.vertex_mask(), 0, cap, &mut out);
    out
}

fn lex_less(a: &[f64], b: &[f64]) -> bool {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            std::cmp::Ordering::Less => return true,
            std::cmp::Ordering::Greater => return false,
            std::cmp::Ordering::Equal => {}
        }
    }
    false
}

/// Best value of `xᵀWx` found from random interior starts plus uniform
/// starts on maximal cliques. Ties keep the lexicographically smaller point.
pub fn maximize_simplex(g: &Graph, w: &EdgeWeights, opts: &MsOptions) -> Result<MsResult> {
    if opts.restarts == 0 {
        return Err(Error::param("restarts must be at least 1"));
    }
    if w.values().len() != g.size() {
        return Err(Error::Weights("weights do not match the graph".into()));
    }
    let n = g.order();
    let mut active = 0u64;
    for (&(u, v), &wv) in g.edges().iter().zip(w.values()) {
        if wv > 0.0 {
            active |= bit(u) | bit(v);
        }
    }
    if active == 0 {
        return Ok(MsResult {
            x: SimplexPoint::indicator(n, 0)?,
            value: 0.0,
            max_decrease: 0.0,
            starts: 0,
        });
    }

    let mut starts: Vec<Vec<f64>> = maximal_cliques(g, opts.clique_starts)
        .into_iter()
        .filter(|&c| c.count_ones() >= 2)
        .map(|c| SimplexPoint::uniform_on(n, c).map(|p| p.x))
        .collect::<Result<_>>()?;
    let mut rng = stream_rng(opts.seed, 0);
    for _ in 0..opts.restarts {
        let mut x = vec![0.0; n];
        for v in Bits(active) {
            x[v] = -(1.0 - rng.gen::<f64>()).ln();
        }
        let s: f64 = x.iter().sum();
        x.iter_mut().for_each(|xi| *xi /= s);
        starts.push(x);
    }

    let count = starts.len();
    let mut best: Option<(f64, Vec<f64>)> = None;
    let mut max_decrease: f64 = 0.0;
    for mut x in starts {
        let (value, dec) = replicator(g, w, &mut x, opts.iters, opts.tol);
        max_decrease = max_decrease.max(dec);
        let better = match &best {
            None => true,
            Some((bv, bx)) => value > *bv || (value == *bv && lex_less(&x, bx)),
        };
        if better {
            best = Some((value, x));
        }
    }
    let (value, x) = best.expect("at least one start");
    Ok(MsResult {
        x: SimplexPoint { x },
        value,
        max_decrease,
        starts: count,
    })
}

/// Uniform distribution on a maximum clique: one vertex per class of a
/// complete ω-partite support, each class carrying mass 1/ω.
pub fn clique_witness(g: &Graph) -> SimplexPoint {
    let c = max_clique(g);
    SimplexPoint::uniform_on(g.order(), c.vertices).expect("maximum clique is nonempty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::vertex_clique_numbers;
    use crate::named;

    fn weights(g: &Graph, s: &WeightScheme) -> EdgeWeights {
        s.edge_weights(g, &vertex_clique_numbers(g)).unwrap()
    }

    #[test]
    fn quad_form_fixtures() {
        let k4 = named::complete(4).unwrap();
        let uni = SimplexPoint::uniform_on(4, 0b1111).unwrap();
        let v = quad_form(&k4, &weights(&k4, &WeightScheme::Classical), &uni).unwrap();
        assert!((v - 0.75).abs() < 1e-15);
        let d = named::diamond().unwrap();
        for s in [WeightScheme::Classical, WeightScheme::AvgLocal, WeightScheme::GeoLocal] {
            let e = SimplexPoint::indicator(4, 2).unwrap();
            assert_eq!(quad_form(&d, &weights(&d, &s), &e).unwrap(), 0.0);
        }
        // Triangle {0,1,2}: c = 3 everywhere so w = 3/2; 3 * 2 * 1.5 / 9 = 1.
        let tri = SimplexPoint::uniform_on(4, 0b0111).unwrap();
        let v = quad_form(&d, &weights(&d, &WeightScheme::AvgLocal), &tri).unwrap();
        assert!((v - 1.0).abs() < 1e-15);
        assert!(quad_form(&d, &weights(&d, &WeightScheme::AvgLocal), &SimplexPoint::indicator(3, 0).unwrap()).is_err());
    }

    #[test]
    fn simplex_validation() {
        assert!(SimplexPoint::new(vec![0.5, 0.5]).is_ok());
        assert!(SimplexPoint::new(vec![0.5, 0.6]).is_err());
        assert!(SimplexPoint::new(vec![1.5, -0.5]).is_err());
        assert!(SimplexPoint::new(vec![]).is_err());
        assert_eq!(SimplexPoint::new(vec![0.0, 1.0]).unwrap().support(), vec![1]);
    }

    #[test]
    fn maximisation_fixtures() {
        let opts = MsOptions::default();
        let k4 = named::complete(4).unwrap();
        let r = maximize_simplex(&k4, &weights(&k4, &WeightScheme::Classical), &opts).unwrap();
        assert!((r.value - 0.75).abs() < 1e-6);
        let p = named::petersen().unwrap();
        let r = maximize_simplex(&p, &weights(&p, &WeightScheme::Classical), &opts).unwrap();
        assert!((r.value - 0.5).abs() < 1e-6);
        assert!(r.max_decrease <= 1e-12);
        let d = named::diamond().unwrap();
        let r = maximize_simplex(&d, &weights(&d, &WeightScheme::GeoLocal), &opts).unwrap();
        assert!(r.value <= 1.0 + 1e-6 && r.value >= 1.0 - 1e-6);
    }

    #[test]
    fn edgeless_graph_has_value_zero() {
        let g = Graph::empty(3).unwrap();
        let r = maximize_simplex(&g, &EdgeWeights::uniform(&g, 1.0).unwrap(), &MsOptions::default()).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(maximize_simplex(&g, &EdgeWeights::uniform(&g, 1.0).unwrap(), &MsOptions { restarts: 0, ..Default::default() }).is_err());
    }

    #[test]
    fn geo_weights_never_exceed_avg_weights() {
        let g = named::bowtie().unwrap().disjoint_union(&named::complete(4).unwrap()).unwrap();
        let avg = weights(&g, &WeightScheme::AvgLocal);
        let geo = weights(&g, &WeightScheme::GeoLocal);
        for (a, b) in avg.values().iter().zip(geo.values()) {
            assert!(b <= a);
        }
    }

    #[test]
    fn maximal_clique_enumeration() {
        let c = maximal_cliques(&named::cycle(5).unwrap(), 100);
        assert_eq!(c.len(), 5);
        let d = maximal_cliques(&named::diamond().unwrap(), 100);
        assert_eq!(d.len(), 2);
        assert_eq!(maximal_cliques(&named::petersen().unwrap(), 3).len(), 3);
    }

    #[test]
    fn scheme_parsing() {
        assert_eq!(WeightScheme::parse("geo_local").unwrap(), WeightScheme::GeoLocal);
        assert!(WeightScheme::parse("custom").is_err());
        assert!(WeightScheme::parse("nope").is_err());
    }
}
