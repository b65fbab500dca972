//! The inequality catalogue. Each entry compares a spectral left-hand side
//! with a clique-based right-hand side on one graph and reports the slack
//! `rhs - lhs` together with whether the entry's hypotheses are met.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cliques::CliqueProfile;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{self, Spectrum};
use crate::weights::EdgeWeights;

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_EQ_TOL: f64 = 1e-8;
pub const MAX_WALK_R: u32 = 10;
pub const DEFAULT_WALK_R: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    TuranEdges,
    Wilf,
    SpectralTuran,
    EdgeLocalSpectralTuran,
    WeightedEdgeLocalTuran,
    SplusWilf,
    VertexLocalSplusWilf,
    SplusTriangle,
    SplusWeak,
    SplusHalfLocal,
    SplusRegularLocal,
    Bn,
    LocalBn,
    BnTriangle,
    BnTriangleDiamond,
    BnDiamond,
    LocalBnDiamond,
    TriangleLowerSMinus,
    TriangleLowerBn,
    WilfDiamondFree,
    WalkNikiforov,
    WalkLocalMixed,
    WalkLocalConj,
    WalkRecursion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Theorem,
    Conjecture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    NotComplete,
    Connected,
    DiamondFree,
    Regular,
    TriangleCountNotOneToFour,
    OrderAtLeast42,
}

impl Hypothesis {
    pub fn describe(self) -> &'static str {
        match self {
            Hypothesis::NotComplete => "G != K_n",
            Hypothesis::Connected => "connected",
            Hypothesis::DiamondFree => "diamond-free",
            Hypothesis::Regular => "regular",
            Hypothesis::TriangleCountNotOneToFour => "t not in {1,2,3,4}",
            Hypothesis::OrderAtLeast42 => "n >= 42",
        }
    }
}

/// Static description of one catalogue entry.
#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub kind: Kind,
    pub key: &'static str,
    pub name: &'static str,
    pub statement: &'static str,
    pub status: Status,
    pub hypotheses: &'static [Hypothesis],
    pub strict: bool,
    /// Takes a walk length `r`.
    pub walk: bool,
}

use Hypothesis::*;
use Status::*;

macro_rules! entry {
    ($kind:ident, $key:literal, $name:literal, $stmt:literal, $status:ident, [$($h:ident),*]) => {
        entry!($kind, $key, $name, $stmt, $status, [$($h),*], false, false)
    };
    ($kind:ident, $key:literal, $name:literal, $stmt:literal, $status:ident, [$($h:ident),*], $strict:expr, $walk:expr) => {
        Entry {
            kind: Kind::$kind,
            key: $key,
            name: $name,
            statement: $stmt,
            status: $status,
            hypotheses: &[$($h),*],
            strict: $strict,
            walk: $walk,
        }
    };
}

pub const CATALOGUE: &[Entry] = &[
    entry!(TuranEdges, "turan_edges", "Turán's theorem", "m <= n^2/2 (1 - 1/ω)", Theorem, []),
    entry!(Wilf, "wilf", "Wilf's inequality", "λ₁ <= n (1 - 1/ω)", Theorem, []),
    entry!(SpectralTuran, "spectral_turan", "spectral Turán theorem", "λ₁² <= 2m (1 - 1/ω)", Theorem, []),
    entry!(EdgeLocalSpectralTuran, "edge_local_spectral_turan", "edge-localized spectral Turán theorem",
        "λ₁² <= Σ_e 2(1 - 1/c(e))", Theorem, []),
    entry!(WeightedEdgeLocalTuran, "weighted_edge_local_turan", "weighted edge-localized spectral Turán theorem",
        "λ₁(W)² <= Σ_e 2(1 - 1/c(e)) w(e)²", Theorem, [Connected]),
    entry!(SplusWilf, "splus_wilf", "positive square energy Wilf bound", "√s⁺ <= n (1 - 1/ω)", Conjecture, []),
    entry!(VertexLocalSplusWilf, "vertex_local_splus_wilf", "vertex-localized positive square energy bound",
        "√s⁺ <= Σ_v (1 - 1/c(v))", Conjecture, []),
    entry!(SplusTriangle, "splus_triangle", "positive square energy triangle bound",
        "√s⁺ <= n/2 + 3t/λ₁²", Theorem, []),
    entry!(SplusWeak, "splus_weak", "weak positive square energy bound",
        "√s⁺ <= n √(1 - 1/ω - 1/ω²)", Theorem, []),
    entry!(SplusHalfLocal, "splus_half_local", "half-localized positive square energy bound",
        "√s⁺ <= Σ_v (1 - 1/(2c(v)))", Theorem, []),
    entry!(SplusRegularLocal, "splus_regular_local", "regular localized positive square energy bound",
        "√s⁺ <= Σ_v (1 - 1/(2c(v) - 2))", Theorem, [Regular]),
    entry!(Bn, "bn", "Bollobás-Nikiforov conjecture", "λ₁² + λ₂² <= 2m (1 - 1/ω)", Conjecture, [NotComplete]),
    entry!(LocalBn, "local_bn", "edge-localized Bollobás-Nikiforov bound",
        "λ₁² + λ₂² <= Σ_e 2(1 - 1/c(e))", Conjecture, [NotComplete]),
    entry!(BnTriangle, "bn_triangle", "triangle bound on λ₁² + λ₂²", "λ₁² + λ₂² < m + (3t)^(2/3)",
        Theorem, [NotComplete], true, false),
    entry!(BnTriangleDiamond, "bn_triangle_diamond", "diamond-free triangle bound on λ₁² + λ₂²",
        "λ₁² + λ₂² <= m + ((3/√2) t)^(2/3)", Theorem, [DiamondFree, NotComplete]),
    entry!(BnDiamond, "bn_diamond", "diamond-free Bollobás-Nikiforov bound",
        "λ₁² + λ₂² <= 2m (1 - 1/ω)", Theorem, [DiamondFree, NotComplete]),
    entry!(LocalBnDiamond, "local_bn_diamond", "diamond-free edge-localized Bollobás-Nikiforov bound",
        "λ₁² + λ₂² <= Σ_e 2(1 - 1/c(e))", Theorem, [DiamondFree, NotComplete, TriangleCountNotOneToFour]),
    entry!(TriangleLowerSMinus, "triangle_lower_s_minus", "triangle lower bound via s⁻",
        "λ₁ (λ₁² - s⁻) / 6 <= t", Theorem, []),
    entry!(TriangleLowerBn, "triangle_lower_bn", "triangle lower bound via m",
        "λ₁ (λ₁² - m) / 3 <= t", Theorem, []),
    entry!(WilfDiamondFree, "wilf_diamond_free", "diamond-free vertex-localized positive square energy bound",
        "√s⁺ <= Σ_v (1 - 1/c(v))", Theorem, [DiamondFree, OrderAtLeast42]),
    entry!(WalkNikiforov, "walk_nikiforov", "Nikiforov's walk inequality", "λ₁^r <= w_r(G) (1 - 1/ω)",
        Theorem, [], false, true),
    entry!(WalkLocalMixed, "walk_local_mixed", "localized walk inequality",
        "λ₁^r <= Σ_v w_r(v) √(1 - 1/c(v)) √(1 - 1/ω)", Theorem, [], false, true),
    entry!(WalkLocalConj, "walk_local_conj", "fully localized walk bound",
        "λ₁^r <= Σ_v w_r(v) (c(v) - 1)/c(v)", Conjecture, [], false, true),
    entry!(WalkRecursion, "walk_recursion", "walk recursion bound",
        "w_2r(G) <= (Σ_v w_r(v) √((c(v) - 1)/c(v)))²", Theorem, [], false, true),
];

impl Kind {
    pub fn entry(self) -> &'static Entry {
        CATALOGUE.iter().find(|e| e.kind == self).expect("every kind is catalogued")
    }
}

/// A catalogue entry together with its walk length, if it takes one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CheckId {
    pub kind: Kind,
    pub r: Option<u32>,
}

impl CheckId {
    pub fn new(kind: Kind) -> Self {
        CheckId { kind, r: None }
    }

    pub fn walk(kind: Kind, r: u32) -> Result<Self> {
        if !kind.entry().walk {
            return Err(Error::param(format!("{} takes no walk length", kind.entry().key)));
        }
        if !(1..=MAX_WALK_R).contains(&r) {
            return Err(Error::param(format!("walk length r = {r} outside 1..={MAX_WALK_R}")));
        }
        Ok(CheckId { kind, r: Some(r) })
    }

    pub fn entry(&self) -> &'static Entry {
        self.kind.entry()
    }

    /// Largest walk length whose table the check reads.
    fn walk_len(&self) -> u32 {
        match (self.kind, self.r) {
            (Kind::WalkRecursion, Some(r)) => 2 * r,
            (_, Some(r)) => r,
            _ => 0,
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.r {
            Some(r) => write!(f, "{}:{r}", self.entry().key),
            None => f.write_str(self.entry().key),
        }
    }
}

impl FromStr for CheckId {
    type Err = Error;

    /// Accepts `key`, `key:r` and `key(r)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (key, r) = if let Some((k, r)) = s.split_once(':') {
            (k, Some(r))
        } else if let Some(k) = s.strip_suffix(')').and_then(|x| x.split_once('(')) {
            (k.0, Some(k.1))
        } else {
            (s, None)
        };
        let unknown = || Error::UnknownCheck {
            id: s.to_string(),
            known: CATALOGUE.iter().map(|e| e.key).collect::<Vec<_>>().join(", "),
        };
        let entry = CATALOGUE.iter().find(|e| e.key == key).ok_or_else(unknown)?;
        match (entry.walk, r) {
            (false, None) => Ok(CheckId::new(entry.kind)),
            (false, Some(_)) => Err(Error::param(format!("{key} takes no walk length"))),
            (true, None) => Err(Error::param(format!("{key} needs a walk length, e.g. {key}:3"))),
            (true, Some(r)) => {
                let r = r
                    .trim()
                    .parse()
                    .map_err(|_| Error::param(format!("bad walk length in `{s}`")))?;
                CheckId::walk(entry.kind, r)
            }
        }
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Every entry, walk entries for `r = 1..=walk_r_max`, sorted by id.
pub fn all_checks(walk_r_max: u32) -> Vec<CheckId> {
    let mut ids = Vec::new();
    for e in CATALOGUE {
        if e.walk {
            ids.extend((1..=walk_r_max.min(MAX_WALK_R)).map(|r| CheckId { kind: e.kind, r: Some(r) }));
        } else {
            ids.push(CheckId::new(e.kind));
        }
    }
    sort_checks(&mut ids);
    ids
}

pub fn sort_checks(ids: &mut Vec<CheckId>) {
    ids.sort_by(|a, b| (a.entry().key, a.r).cmp(&(b.entry().key, b.r)));
    ids.dedup();
}

/// Resolves a comma-separated list, or one of `all`, `theorems`,
/// `conjectures`, into sorted check ids.
pub fn parse_checks(spec: &str, walk_r_max: u32) -> Result<Vec<CheckId>> {
    let by_status = |s: Status| {
        all_checks(walk_r_max)
            .into_iter()
            .filter(|c| c.entry().status == s)
            .collect::<Vec<_>>()
    };
    let mut ids = match spec.trim() {
        "all" => all_checks(walk_r_max),
        "theorems" => by_status(Theorem),
        "conjectures" => by_status(Conjecture),
        list => list
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>>>()?,
    };
    if ids.is_empty() {
        return Err(Error::param("no checks selected"));
    }
    sort_checks(&mut ids);
    Ok(ids)
}

#[derive(Clone, Debug)]
pub struct CheckOptions {
    /// Relative violation tolerance.
    pub tol: f64,
    /// Relative equality tolerance.
    pub eq_tol: f64,
    /// Weights for `weighted_edge_local_turan`; unit weights when absent.
    pub weights: Option<EdgeWeights>,
    /// Walk lengths included by [`check_all`].
    pub walk_r_max: u32,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            tol: DEFAULT_TOL,
            eq_tol: DEFAULT_EQ_TOL,
            weights: None,
            walk_r_max: DEFAULT_WALK_R,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InequalityResult {
    pub id: CheckId,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub holds: bool,
    pub applicable: bool,
    pub equality: bool,
    pub status: Status,
    pub notes: String,
}

impl InequalityResult {
    /// A failure that counts: hypotheses met and the inequality broken.
    pub fn is_violation(&self) -> bool {
        self.applicable && !self.holds
    }
}

/// Walk counts `w_r(v)` for `r = 1..=r_max`, as floats. `exact` is false
/// when 64-bit integer counts overflowed and floats were accumulated instead.
#[derive(Clone, Debug, PartialEq)]
pub struct Walks {
    pub per_vertex: Vec<Vec<f64>>,
    pub totals: Vec<f64>,
    pub exact: bool,
}

impl Walks {
    pub fn new(g: &Graph, r_max: u32) -> Result<Self> {
        match spectra::walk_tables(g, r_max) {
            Ok(tables) => Ok(Walks {
                totals: tables.iter().map(|t| t.total as f64).collect(),
                per_vertex: tables
                    .into_iter()
                    .map(|t| t.per_vertex.into_iter().map(|x| x as f64).collect())
                    .collect(),
                exact: true,
            }),
            Err(Error::WalkOverflow { .. }) => {
                let mut per_vertex = vec![vec![1.0; g.order()]];
                for _ in 1..r_max {
                    let prev = per_vertex.last().expect("nonempty");
                    let next = (0..g.order())
                        .map(|v| crate::graph::Bits(g.neighbors(v)).map(|u| prev[u]).sum())
                        .collect();
                    per_vertex.push(next);
                }
                Ok(Walks {
                    totals: per_vertex.iter().map(|w| w.iter().sum()).collect(),
                    per_vertex,
                    exact: false,
                })
            }
            Err(e) => Err(e),
        }
    }

    pub fn r_max(&self) -> u32 {
        self.per_vertex.len() as u32
    }
}

/// Everything the catalogue reads from one graph.
#[derive(Clone, Debug)]
pub struct GraphContext<'a> {
    /// Needed only for non-unit weighted checks.
    pub graph: Option<&'a Graph>,
    pub n: usize,
    pub m: usize,
    pub t: u64,
    pub spectrum: Spectrum,
    pub omega: u32,
    pub c_v: Vec<u32>,
    pub c_e: Vec<u32>,
    pub complete: bool,
    pub connected: bool,
    pub diamond_free: bool,
    pub regular: bool,
    pub walks: Option<Walks>,
}

impl<'a> GraphContext<'a> {
    /// Computes spectrum, clique profile and walk tables up to `walk_r_max`.
    pub fn new(g: &'a Graph, walk_r_max: u32) -> Result<Self> {
        let spectrum = Spectrum::of(g)?;
        Self::with_spectrum(g, spectrum, walk_r_max)
    }

    pub fn with_spectrum(g: &'a Graph, spectrum: Spectrum, walk_r_max: u32) -> Result<Self> {
        let profile = CliqueProfile::new(g);
        Ok(GraphContext {
            graph: Some(g),
            n: g.order(),
            m: g.size(),
            t: profile.t,
            spectrum,
            omega: profile.omega,
            complete: profile.predicates.complete,
            diamond_free: profile.predicates.diamond_free,
            regular: profile.predicates.regular,
            connected: g.is_connected(),
            c_v: profile.c_v,
            c_e: profile.c_e,
            walks: if walk_r_max > 0 { Some(Walks::new(g, walk_r_max)?) } else { None },
        })
    }

    /// Context sized for `ids`.
    pub fn for_checks(g: &'a Graph, ids: &[CheckId]) -> Result<Self> {
        Self::new(g, ids.iter().map(CheckId::walk_len).max().unwrap_or(0))
    }

    fn edge_local_sum(&self) -> f64 {
        self.c_e.iter().map(|&c| 2.0 * (1.0 - 1.0 / c as f64)).sum()
    }

    fn vertex_local_sum(&self) -> f64 {
        self.c_v.iter().map(|&c| 1.0 - 1.0 / c as f64).sum()
    }

    fn omega_factor(&self) -> f64 {
        1.0 - 1.0 / self.omega as f64
    }

    fn walk_table(&self, r: u32) -> Result<(&[f64], f64)> {
        let w = self
            .walks
            .as_ref()
            .filter(|w| w.r_max() >= r)
            .ok_or_else(|| Error::Capability(format!("walk counts up to r = {r} were not computed")))?;
        let i = (r - 1) as usize;
        Ok((&w.per_vertex[i], w.totals[i]))
    }
}

/// Evaluates one entry against a prepared context.
pub fn check(id: CheckId, ctx: &GraphContext, opts: &CheckOptions) -> Result<InequalityResult> {
    let e = id.entry();
    if e.walk != id.r.is_some() {
        return Err(Error::param(format!("{} walk length mismatch", e.key)));
    }
    let s = &ctx.spectrum;
    let (n, m, t) = (ctx.n as f64, ctx.m as f64, ctx.t as f64);
    let (l1, l2) = (s.lambda1(), s.lambda2());
    let bn_lhs = l1 * l1 + l2 * l2;
    let sqrt_sp = s.s_plus.sqrt();
    let mut notes: Vec<String> = Vec::new();

    let (lhs, rhs) = match id.kind {
        Kind::TuranEdges => (m, n * n / 2.0 * ctx.omega_factor()),
        Kind::Wilf => (l1, n * ctx.omega_factor()),
        Kind::SpectralTuran => (l1 * l1, 2.0 * m * ctx.omega_factor()),
        Kind::EdgeLocalSpectralTuran => (l1 * l1, ctx.edge_local_sum()),
        Kind::WeightedEdgeLocalTuran => match &opts.weights {
            None => (l1 * l1, ctx.edge_local_sum()),
            Some(w) => {
                let g = ctx
                    .graph
                    .ok_or_else(|| Error::Capability("weighted check needs the graph itself".into()))?;
                weighted_sides(g, w, &ctx.c_e)?
            }
        },
        Kind::SplusWilf => (sqrt_sp, n * ctx.omega_factor()),
        Kind::VertexLocalSplusWilf | Kind::WilfDiamondFree => (sqrt_sp, ctx.vertex_local_sum()),
        Kind::SplusTriangle => {
            let tri = if ctx.m == 0 { 0.0 } else { 3.0 * t / (l1 * l1) };
            (sqrt_sp, n / 2.0 + tri)
        }
        Kind::SplusWeak => {
            let w = ctx.omega as f64;
            (sqrt_sp, n * (1.0 - 1.0 / w - 1.0 / (w * w)).max(0.0).sqrt())
        }
        Kind::SplusHalfLocal => (sqrt_sp, ctx.c_v.iter().map(|&c| 1.0 - 1.0 / (2.0 * c as f64)).sum()),
        Kind::SplusRegularLocal => (
            sqrt_sp,
            ctx.c_v
                .iter()
                .map(|&c| if c <= 1 { 0.0 } else { 1.0 - 1.0 / (2.0 * c as f64 - 2.0) })
                .sum(),
        ),
        Kind::Bn | Kind::BnDiamond => (bn_lhs, 2.0 * m * ctx.omega_factor()),
        Kind::LocalBn => (bn_lhs, ctx.edge_local_sum()),
        Kind::BnTriangle => (bn_lhs, m + (3.0 * t).powf(2.0 / 3.0)),
        Kind::BnTriangleDiamond => (bn_lhs, diamond_triangle_bound(m, t)),
        Kind::LocalBnDiamond => {
            if ctx.diamond_free && (1..=4).contains(&ctx.t) {
                notes.push(format!(
                    "m + ((3/√2) t)^(2/3) = {}",
                    crate::report::round_sig(diamond_triangle_bound(m, t))
                ));
            }
            (bn_lhs, ctx.edge_local_sum())
        }
        Kind::TriangleLowerSMinus => (l1 * (l1 * l1 - s.s_minus) / 6.0, t),
        Kind::TriangleLowerBn => (l1 * (l1 * l1 - m) / 3.0, t),
        Kind::WalkNikiforov | Kind::WalkLocalMixed | Kind::WalkLocalConj | Kind::WalkRecursion => {
            let r = id.r.expect("walk entries carry r");
            let (wr, total) = ctx.walk_table(r)?;
            if !ctx.walks.as_ref().is_none_or(|w| w.exact) {
                notes.push("walk counts exceed 64 bits; floating point".into());
            }
            let lr = l1.powi(r as i32);
            let frac = |c: u32| (c as f64 - 1.0) / c as f64;
            match id.kind {
                Kind::WalkNikiforov => (lr, total * ctx.omega_factor()),
                Kind::WalkLocalMixed => (
                    lr,
                    wr.iter().zip(&ctx.c_v).map(|(w, &c)| w * frac(c).sqrt()).sum::<f64>()
                        * ctx.omega_factor().sqrt(),
                ),
                Kind::WalkLocalConj => (lr, wr.iter().zip(&ctx.c_v).map(|(w, &c)| w * frac(c)).sum()),
                _ => {
                    let (_, total2) = ctx.walk_table(2 * r)?;
                    let sum: f64 = wr.iter().zip(&ctx.c_v).map(|(w, &c)| w * frac(c).sqrt()).sum();
                    (total2, sum * sum)
                }
            }
        }
    };

    let mut applicable = true;
    for &h in e.hypotheses {
        let ok = match h {
            NotComplete => !ctx.complete,
            Connected => ctx.connected,
            DiamondFree => ctx.diamond_free,
            Regular => ctx.regular,
            TriangleCountNotOneToFour => !(1..=4).contains(&ctx.t),
            OrderAtLeast42 => ctx.n >= 42,
        };
        if !ok {
            applicable = false;
            notes.push(format!("hypothesis fails: {}", h.describe()));
        }
    }
    if matches!(id.kind, Kind::Bn | Kind::LocalBn) && !ctx.connected {
        notes.push("disconnected".into());
    }
    if e.strict {
        notes.push("strict".into());
    }

    let slack = rhs - lhs;
    let scale = 1f64.max(lhs.abs()).max(rhs.abs());
    let tol = opts.tol * scale;
    let holds = if e.strict { slack > -tol } else { slack >= -tol };
    Ok(InequalityResult {
        id,
        lhs,
        rhs,
        slack,
        holds,
        applicable,
        equality: slack.abs() <= opts.eq_tol * scale,
        status: e.status,
        notes: notes.join("; "),
    })
}

fn diamond_triangle_bound(m: f64, t: f64) -> f64 {
    m + (3.0 / 2f64.sqrt() * t).powf(2.0 / 3.0)
}

fn weighted_sides(g: &Graph, w: &EdgeWeights, c_e: &[u32]) -> Result<(f64, f64)> {
    let lw = spectra::weighted_spectral_radius(g, w)?;
    let rhs = c_e
        .iter()
        .zip(w.values())
        .map(|(&c, x)| 2.0 * (1.0 - 1.0 / c as f64) * x * x)
        .sum();
    Ok((lw * lw, rhs))
}

/// Evaluates `ids` on `g`.
pub fn check_graph(g: &Graph, ids: &[CheckId], opts: &CheckOptions) -> Result<Vec<InequalityResult>> {
    let ctx = GraphContext::for_checks(g, ids)?;
    ids.iter().map(|&id| check(id, &ctx, opts)).collect()
}

/// Every catalogue entry on `g`, sorted by id.
pub fn check_all(g: &Graph, opts: &CheckOptions) -> Result<Vec<InequalityResult>> {
    check_graph(g, &all_checks(opts.walk_r_max), opts)
}

/// The weighted edge-localized bound for explicit weights.
pub fn weighted_edge_local_check(g: &Graph, weights: &EdgeWeights) -> Result<InequalityResult> {
    let ctx = GraphContext::new(g, 0)?;
    let opts = CheckOptions {
        weights: Some(weights.clone()),
        ..CheckOptions::default()
    };
    check(CheckId::new(Kind::WeightedEdgeLocalTuran), &ctx, &opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named;

    fn run(id: &str, g: &Graph) -> InequalityResult {
        let id: CheckId = id.parse().unwrap();
        check_graph(g, &[id], &CheckOptions::default()).unwrap().remove(0)
    }

    #[test]
    fn id_parsing() {
        assert_eq!("walk_nikiforov(3)".parse::<CheckId>().unwrap().to_string(), "walk_nikiforov:3");
        assert!("walk_nikiforov".parse::<CheckId>().is_err());
        assert!("walk_nikiforov:11".parse::<CheckId>().is_err());
        assert!("wilf:2".parse::<CheckId>().is_err());
        assert!(matches!("nope".parse::<CheckId>(), Err(Error::UnknownCheck { .. })));
        let all = all_checks(6);
        assert_eq!(all.len(), 20 + 4 * 6);
        let th = parse_checks("theorems", 6).unwrap();
        let cj = parse_checks("conjectures", 6).unwrap();
        assert_eq!(th.len() + cj.len(), all.len());
        assert_eq!(cj.len(), 4 + 6);
    }

    #[test]
    fn worked_examples() {
        let r = run("wilf", &named::octahedron().unwrap());
        assert!((r.lhs - 4.0).abs() < 1e-12 && (r.rhs - 4.0).abs() < 1e-12 && r.equality);
        let u = named::parse("kab:2,2+kab:3,3").unwrap();
        let r = run("local_bn", &u);
        assert!((r.lhs - 13.0).abs() < 1e-10 && r.rhs == 13.0 && r.equality && r.applicable);
        let r = run("vertex_local_splus_wilf", &named::diamond().unwrap());
        assert!((r.lhs - 2.5615528128).abs() < 1e-9 && (r.rhs - 8.0 / 3.0).abs() < 1e-12);
        let r = run("bn", &named::complete(4).unwrap());
        assert!(!r.applicable && !r.holds && (r.slack + 1.0).abs() < 1e-10 && !r.is_violation());
        let r = run("splus_triangle", &named::complete_bipartite(3, 3).unwrap());
        assert!((r.lhs - 3.0).abs() < 1e-12 && (r.rhs - 3.0).abs() < 1e-12 && r.equality);
        let r = run("walk_local_conj:3", &named::cycle(5).unwrap());
        assert!((r.lhs - 8.0).abs() < 1e-10 && (r.rhs - 10.0).abs() < 1e-12);
    }

    #[test]
    fn single_vertex_is_degenerate() {
        let g = Graph::empty(1).unwrap();
        for r in check_all(&g, &CheckOptions::default()).unwrap() {
            assert!(r.holds, "{r:?}");
            assert_eq!(r.lhs, 0.0, "{r:?}");
        }
    }

    #[test]
    fn petersen_holds_everywhere() {
        let g = named::petersen().unwrap();
        let all = check_all(&g, &CheckOptions::default()).unwrap();
        assert!(all.iter().all(|r| r.holds), "{all:?}");
        let local = all.iter().find(|r| r.id.kind == Kind::LocalBn).unwrap();
        assert!((local.lhs - 10.0).abs() < 1e-10 && local.rhs == 15.0);
    }

    #[test]
    fn weighted_check() {
        let k3 = named::complete(3).unwrap();
        let w = EdgeWeights::new(&k3, vec![1.0, 2.0, 3.0]).unwrap();
        let r = weighted_edge_local_check(&k3, &w).unwrap();
        assert!(r.holds && r.applicable);
        assert!((r.rhs - 4.0 / 3.0 * 14.0).abs() < 1e-12);
        let p = named::petersen().unwrap();
        let unit = weighted_edge_local_check(&p, &EdgeWeights::uniform(&p, 1.0).unwrap()).unwrap();
        let plain = run("edge_local_spectral_turan", &p);
        assert!((unit.lhs - plain.lhs).abs() < 1e-10 && unit.rhs == plain.rhs);
        let scaled = weighted_edge_local_check(&p, &EdgeWeights::uniform(&p, 3.0).unwrap()).unwrap();
        assert!((scaled.lhs - 9.0 * unit.lhs).abs() < 1e-9 && (scaled.rhs - 9.0 * unit.rhs).abs() < 1e-9);
        let split = named::parse("k:3+k:2").unwrap();
        assert!(!weighted_edge_local_check(&split, &EdgeWeights::uniform(&split, 1.0).unwrap()).unwrap().applicable);
    }

    #[test]
    fn local_bn_diamond_informational_row() {
        let g = named::bowtie().unwrap();
        let r = run("local_bn_diamond", &g);
        assert!(!r.applicable);
        assert!(r.notes.contains("m + ((3/√2) t)^(2/3)"), "{}", r.notes);
    }
}
