//! Batch evaluation of catalogue checks over graph sources, and random-graph
//! experiments.
//!
//! Work is split into contiguous index chunks, one per worker, and the
//! per-chunk accumulators are merged in chunk order. Every merged quantity
//! is either a count, an ordered concatenation or a top-k under the total
//! order `(slack, graph6, index)`, so the report does not depend on the
//! number of workers.

use std::io::BufRead;
use std::ops::Range;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bbclique::{DenseCliqueProfile, SearchBudget};
use crate::dense::MAX_DENSE_ORDER;
use crate::error::{Error, Result};
use crate::generate::{random_gnp_dense, random_gnp_stream, LabeledEnumeration};
use crate::graph::Graph;
use crate::inequalities::{check, CheckId, CheckOptions, GraphContext, InequalityResult, Kind, Status};
use crate::spectra::Spectrum;

/// Where graphs come from.
#[derive(Clone, Debug)]
pub enum GraphSource {
    /// Labeled graphs on `n` vertices, optionally a slice of the index range.
    Enumeration { n: usize, range: Option<Range<u64>> },
    /// graph6 lines; `name` is echoed into reports.
    Graph6 { name: String, lines: Vec<String> },
    /// `trials` samples of G(n, p), trial `i` drawn from stream `i` of `seed`.
    Random { n: usize, p: f64, trials: u64, seed: u64 },
    Graphs(Vec<Graph>),
}

/// Serializable summary of a [`GraphSource`].
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SourceDescriptor {
    Enumeration { n: usize, lo: u64, hi: u64 },
    Graph6 { name: String, lines: u64 },
    Random { n: usize, p: f64, trials: u64, seed: u64 },
    Graphs { count: u64 },
}

impl GraphSource {
    pub fn enumeration(n: usize) -> Result<Self> {
        LabeledEnumeration::new(n)?;
        Ok(GraphSource::Enumeration { n, range: None })
    }

    /// Reads every line of `reader` up front.
    pub fn graph6_reader<R: BufRead>(name: impl Into<String>, reader: R) -> Result<Self> {
        let lines = reader.lines().collect::<std::io::Result<Vec<_>>>()?;
        Ok(GraphSource::Graph6 {
            name: name.into(),
            lines,
        })
    }

    pub fn graph6_text(name: impl Into<String>, text: &str) -> Self {
        GraphSource::Graph6 {
            name: name.into(),
            lines: text.lines().map(str::to_string).collect(),
        }
    }

    fn enumeration_range(&self) -> Option<Result<LabeledEnumeration>> {
        match self {
            GraphSource::Enumeration { n, range } => Some(LabeledEnumeration::new(*n).map(|e| match range {
                Some(r) => e.with_range(r.clone()),
                None => e,
            })),
            _ => None,
        }
    }

    pub fn len(&self) -> u64 {
        match self {
            GraphSource::Enumeration { .. } => {
                let r = self.enumeration_range().expect("enumeration").map(|e| e.range()).unwrap_or(0..0);
                r.end - r.start
            }
            GraphSource::Graph6 { lines, .. } => lines.len() as u64,
            GraphSource::Random { trials, .. } => *trials,
            GraphSource::Graphs(g) => g.len() as u64,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn descriptor(&self) -> SourceDescriptor {
        match self {
            GraphSource::Enumeration { n, .. } => {
                let r = self.enumeration_range().expect("enumeration").map(|e| e.range()).unwrap_or(0..0);
                SourceDescriptor::Enumeration {
                    n: *n,
                    lo: r.start,
                    hi: r.end,
                }
            }
            GraphSource::Graph6 { name, lines } => SourceDescriptor::Graph6 {
                name: name.clone(),
                lines: lines.len() as u64,
            },
            GraphSource::Random { n, p, trials, seed } => SourceDescriptor::Random {
                n: *n,
                p: *p,
                trials: *trials,
                seed: *seed,
            },
            GraphSource::Graphs(g) => SourceDescriptor::Graphs { count: g.len() as u64 },
        }
    }
}

/// One position of a source: its reported index and the graph, or `None`
/// for a blank graph6 line.
type Item = (u64, Result<Option<Graph>>);

struct Cursor<'a> {
    source: &'a GraphSource,
    enumeration: Option<LabeledEnumeration>,
}

impl<'a> Cursor<'a> {
    fn new(source: &'a GraphSource) -> Result<Self> {
        Ok(Cursor {
            source,
            enumeration: source.enumeration_range().transpose()?,
        })
    }

    /// Item at offset `i` within the source.
    fn item(&self, i: u64) -> Item {
        match self.source {
            GraphSource::Enumeration { .. } => {
                let e = self.enumeration.as_ref().expect("enumeration cursor");
                let idx = e.range().start + i;
                (idx, Ok(Some(e.graph_at(idx))))
            }
            GraphSource::Graph6 { lines, .. } => {
                let line = lines[i as usize].trim();
                let parsed = if line.is_empty() || line == ">>graph6<<" {
                    Ok(None)
                } else {
                    Graph::from_graph6(line).map(Some)
                };
                (i + 1, parsed)
            }
            GraphSource::Random { n, p, seed, .. } => (i, random_gnp_stream(*n, *p, *seed, i).map(Some)),
            GraphSource::Graphs(g) => (i, Ok(Some(g[i as usize].clone()))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub checks: Vec<CheckId>,
    pub connected_only: bool,
    /// Stop after the first graph with a binding violation. Forces a single
    /// worker.
    pub stop_on_violation: bool,
    pub top_k: usize,
    pub check: CheckOptions,
    pub workers: usize,
    /// Abort on a malformed graph6 line instead of recording it.
    pub strict: bool,
    /// Violations listed in the report; counts stay exact beyond this.
    pub max_listed_violations: usize,
}

impl ScanOptions {
    pub fn new(checks: Vec<CheckId>) -> Self {
        ScanOptions {
            checks,
            connected_only: false,
            stop_on_violation: false,
            top_k: 5,
            check: CheckOptions::default(),
            workers: 1,
            strict: false,
            max_listed_violations: 1000,
        }
    }
}

/// Options echoed into the report. The worker count is deliberately absent.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanConfig {
    pub checks: Vec<CheckId>,
    pub connected_only: bool,
    pub stop_on_violation: bool,
    pub top_k: usize,
    pub tol: f64,
    pub eq_tol: f64,
    pub custom_weights: bool,
    pub strict: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Extremal {
    pub index: u64,
    pub graph6: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
}

impl Extremal {
    fn key_cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.slack
            .total_cmp(&other.slack)
            .then_with(|| self.graph6.cmp(&other.graph6))
            .then(self.index.cmp(&other.index))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckSummary {
    pub id: CheckId,
    pub status: Status,
    pub evaluated: u64,
    pub applicable: u64,
    /// Applicable and failing.
    pub violations: u64,
    /// Failing where the hypotheses do not hold.
    pub nonbinding_failures: u64,
    pub equalities: u64,
    /// Smallest slack over applicable evaluations.
    pub min_slack: Option<f64>,
    pub argmin_graph6: Option<String>,
    /// Smallest-slack applicable evaluations, by `(slack, graph6, index)`.
    pub top_k: Vec<Extremal>,
}

impl CheckSummary {
    fn new(id: CheckId) -> Self {
        CheckSummary {
            id,
            status: id.entry().status,
            evaluated: 0,
            applicable: 0,
            violations: 0,
            nonbinding_failures: 0,
            equalities: 0,
            min_slack: None,
            argmin_graph6: None,
            top_k: Vec::new(),
        }
    }

    fn merge(&mut self, other: CheckSummary, k: usize) {
        self.evaluated += other.evaluated;
        self.applicable += other.applicable;
        self.violations += other.violations;
        self.nonbinding_failures += other.nonbinding_failures;
        self.equalities += other.equalities;
        self.top_k.extend(other.top_k);
        self.top_k.sort_by(Extremal::key_cmp);
        self.top_k.truncate(k);
        self.refresh_argmin(other.min_slack, other.argmin_graph6);
    }

    fn refresh_argmin(&mut self, slack: Option<f64>, graph6: Option<String>) {
        if let (Some(s), Some(g)) = (slack, graph6) {
            let better = match (&self.min_slack, &self.argmin_graph6) {
                (Some(cur), Some(cg)) => s.total_cmp(cur).then_with(|| g.cmp(cg)).is_lt(),
                _ => true,
            };
            if better {
                self.min_slack = Some(s);
                self.argmin_graph6 = Some(g);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub index: u64,
    pub graph6: String,
    pub id: CheckId,
    pub status: Status,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ParseFailure {
    pub line: u64,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub source: SourceDescriptor,
    pub config: ScanConfig,
    pub graphs_read: u64,
    pub graphs_processed: u64,
    pub binding_violations: u64,
    pub theorem_violations: u64,
    pub checks: Vec<CheckSummary>,
    pub violations: Vec<Violation>,
    pub violations_truncated: bool,
    pub parse_errors: Vec<ParseFailure>,
    pub stopped_early: bool,
}

impl ScanReport {
    fn empty(source: &GraphSource, opts: &ScanOptions) -> Self {
        ScanReport {
            source: source.descriptor(),
            config: ScanConfig {
                checks: opts.checks.clone(),
                connected_only: opts.connected_only,
                stop_on_violation: opts.stop_on_violation,
                top_k: opts.top_k,
                tol: opts.check.tol,
                eq_tol: opts.check.eq_tol,
                custom_weights: opts.check.weights.is_some(),
                strict: opts.strict,
            },
            graphs_read: 0,
            graphs_processed: 0,
            binding_violations: 0,
            theorem_violations: 0,
            checks: opts.checks.iter().map(|&id| CheckSummary::new(id)).collect(),
            violations: Vec::new(),
            violations_truncated: false,
            parse_errors: Vec::new(),
            stopped_early: false,
        }
    }

    /// Appends a report covering later indices of the same source.
    pub fn merge(&mut self, other: ScanReport) {
        self.graphs_read += other.graphs_read;
        self.graphs_processed += other.graphs_processed;
        self.binding_violations += other.binding_violations;
        self.theorem_violations += other.theorem_violations;
        for (a, b) in self.checks.iter_mut().zip(other.checks) {
            a.merge(b, self.config.top_k);
        }
        self.violations.extend(other.violations);
        self.violations_truncated |= other.violations_truncated;
        self.parse_errors.extend(other.parse_errors);
        self.stopped_early |= other.stopped_early;
    }

    pub fn has_binding_violation(&self) -> bool {
        self.binding_violations > 0
    }

    /// Per-check CSV summary.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "id",
            "status",
            "evaluated",
            "applicable",
            "violations",
            "nonbinding_failures",
            "equalities",
            "min_slack",
            "argmin_graph6",
        ])?;
        for c in &self.checks {
            w.write_record([
                c.id.to_string(),
                format!("{:?}", c.status).to_lowercase(),
                c.evaluated.to_string(),
                c.applicable.to_string(),
                c.violations.to_string(),
                c.nonbinding_failures.to_string(),
                c.equalities.to_string(),
                c.min_slack.map(crate::report::format_float).unwrap_or_default(),
                c.argmin_graph6.clone().unwrap_or_default(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

fn scan_range(cursor: &Cursor, range: Range<u64>, opts: &ScanOptions) -> Result<ScanReport> {
    let mut rep = ScanReport::empty(cursor.source, opts);
    let k = opts.top_k;
    for i in range {
        let (index, item) = cursor.item(i);
        let g = match item {
            Ok(Some(g)) => g,
            Ok(None) => continue,
            Err(e) => {
                if opts.strict {
                    return Err(Error::param(format!("line {index}: {e}")));
                }
                rep.parse_errors.push(ParseFailure {
                    line: index,
                    message: e.to_string(),
                });
                continue;
            }
        };
        rep.graphs_read += 1;
        if opts.connected_only && !g.is_connected() {
            continue;
        }
        rep.graphs_processed += 1;
        let ctx = GraphContext::for_checks(&g, &opts.checks)?;
        let mut graph6: Option<String> = None;
        let mut violated = false;
        for (summary, &id) in rep.checks.iter_mut().zip(&opts.checks) {
            let r = check(id, &ctx, &opts.check)?;
            summary.evaluated += 1;
            if !r.applicable {
                summary.nonbinding_failures += !r.holds as u64;
                continue;
            }
            summary.applicable += 1;
            summary.equalities += r.equality as u64;
            let worst = summary.top_k.last().map(|e| e.slack);
            let qualifies = summary.top_k.len() < k || worst.is_some_and(|w| r.slack <= w);
            let beats_min = summary.min_slack.is_none_or(|m| r.slack <= m);
            if !r.holds || qualifies || beats_min {
                let g6 = graph6.get_or_insert_with(|| g.to_graph6()).clone();
                if !r.holds {
                    violated = true;
                    summary.violations += 1;
                    rep.binding_violations += 1;
                    rep.theorem_violations += (r.status == Status::Theorem) as u64;
                    if rep.violations.len() < opts.max_listed_violations {
                        rep.violations.push(violation(index, &g6, &r));
                    } else {
                        rep.violations_truncated = true;
                    }
                }
                if k > 0 && qualifies {
                    summary.top_k.push(Extremal {
                        index,
                        graph6: g6.clone(),
                        lhs: r.lhs,
                        rhs: r.rhs,
                        slack: r.slack,
                    });
                    summary.top_k.sort_by(Extremal::key_cmp);
                    summary.top_k.truncate(k);
                }
                summary.refresh_argmin(Some(r.slack), Some(g6));
            }
        }
        if violated && opts.stop_on_violation {
            rep.stopped_early = true;
            break;
        }
    }
    Ok(rep)
}

fn violation(index: u64, graph6: &str, r: &InequalityResult) -> Violation {
    Violation {
        index,
        graph6: graph6.to_string(),
        id: r.id,
        status: r.status,
        lhs: r.lhs,
        rhs: r.rhs,
        slack: r.slack,
    }
}

/// Evaluates every check on every graph of `source`.
pub fn scan(source: &GraphSource, opts: &ScanOptions) -> Result<ScanReport> {
    if opts.checks.is_empty() {
        return Err(Error::param("no checks selected"));
    }
    let cursor = Cursor::new(source)?;
    let len = source.len();
    let workers = if opts.stop_on_violation { 1 } else { opts.workers.max(1) };
    let chunks = split(len, workers);
    let parts: Vec<Result<ScanReport>> = if chunks.len() <= 1 {
        vec![scan_range(&cursor, 0..len, opts)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|r| {
                    let cursor = &cursor;
                    let r = r.clone();
                    s.spawn(move || scan_range(cursor, r, opts))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("scan worker panicked")).collect()
        })
    };
    let mut report = ScanReport::empty(source, opts);
    for part in parts {
        report.merge(part?);
    }
    if report.violations.len() > opts.max_listed_violations {
        report.violations.truncate(opts.max_listed_violations);
        report.violations_truncated = true;
    }
    Ok(report)
}

/// `len` split into at most `workers` contiguous nonempty ranges.
fn split(len: u64, workers: usize) -> Vec<Range<u64>> {
    let w = (workers as u64).min(len).max(1);
    (0..w).map(|i| len * i / w..len * (i + 1) / w).filter(|r| !r.is_empty()).collect()
}

/// The `k` smallest-slack graphs for one check.
pub fn extremal_search(source: &GraphSource, id: CheckId, k: usize, connected_only: bool) -> Result<Vec<Extremal>> {
    if k == 0 {
        return Err(Error::param("k must be at least 1"));
    }
    let mut opts = ScanOptions::new(vec![id]);
    opts.top_k = k;
    opts.connected_only = connected_only;
    Ok(scan(source, &opts)?.checks.remove(0).top_k)
}

/// Checks evaluated on every random-experiment trial.
pub const RANDOM_CHECKS: [Kind; 3] = [Kind::SplusWilf, Kind::VertexLocalSplusWilf, Kind::LocalBn];

#[derive(Clone, Debug)]
pub struct ExperimentOptions {
    pub n: usize,
    pub p: f64,
    pub trials: u64,
    pub seed: u64,
    pub workers: usize,
    /// Local clique search caps for orders above 64.
    pub budget: SearchBudget,
    /// Trials not started within this time are skipped and the report is
    /// marked partial.
    pub time_limit: Option<Duration>,
    pub check: CheckOptions,
}

impl ExperimentOptions {
    pub fn new(n: usize, p: f64, trials: u64, seed: u64) -> Self {
        ExperimentOptions {
            n,
            p,
            trials,
            seed,
            workers: 1,
            budget: SearchBudget::default(),
            time_limit: None,
            check: CheckOptions::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialResult {
    pub trial: u64,
    pub m: usize,
    pub t: u64,
    pub lambda1: f64,
    pub lambda2: f64,
    pub s_plus: f64,
    pub s_minus: f64,
    pub omega: u32,
    pub mean_c_v: f64,
    /// 0 for an edgeless sample.
    pub mean_c_e: f64,
    /// False when some clique number is only a lower bound.
    pub clique_numbers_exact: bool,
    pub checks: Vec<InequalityResult>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Stat {
    pub mean: f64,
    /// Sample standard deviation; 0 for a single trial.
    pub stddev: f64,
}

impl Stat {
    fn of(xs: impl Iterator<Item = f64> + Clone) -> Stat {
        let k = xs.clone().count() as f64;
        let mean = xs.clone().sum::<f64>() / k;
        let var = if k > 1.0 {
            xs.map(|x| (x - mean).powi(2)).sum::<f64>() / (k - 1.0)
        } else {
            0.0
        };
        Stat {
            mean,
            stddev: var.sqrt(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RandomStats {
    pub lambda1_over_n: Stat,
    pub lambda2_over_sqrt_n: Stat,
    pub s_plus_over_n2: Stat,
    pub s_minus_over_n2: Stat,
    pub omega: Stat,
    pub mean_c_v: Stat,
    pub mean_c_e: Stat,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RandomExperiment {
    pub n: usize,
    pub p: f64,
    pub trials: u64,
    pub seed: u64,
    pub budget: SearchBudget,
    pub completed: u64,
    /// Some trials were skipped by the time limit.
    pub partial: bool,
    pub clique_numbers_exact: bool,
    /// Over the completed trials.
    pub stats: Option<RandomStats>,
    pub binding_violations: u64,
    pub trial_results: Vec<TrialResult>,
}

fn run_trial(opts: &ExperimentOptions, trial: u64) -> Result<TrialResult> {
    let ids: Vec<CheckId> = RANDOM_CHECKS.iter().map(|&k| CheckId::new(k)).collect();
    let (ctx, exact);
    let owned;
    if opts.n <= crate::graph::MAX_ORDER {
        owned = random_gnp_stream(opts.n, opts.p, opts.seed, trial)?;
        ctx = GraphContext::new(&owned, 0)?;
        exact = true;
    } else {
        let d = random_gnp_dense(opts.n, opts.p, opts.seed, trial)?;
        let spectrum = Spectrum::of_dense(&d)?;
        let prof = DenseCliqueProfile::new(&d, opts.budget);
        exact = prof.exact();
        ctx = GraphContext {
            graph: None,
            n: d.order(),
            m: d.size(),
            t: prof.t,
            spectrum,
            omega: prof.omega,
            c_v: prof.c_v,
            c_e: prof.c_e,
            complete: prof.complete,
            connected: prof.connected,
            diamond_free: prof.diamond_free,
            regular: prof.regular,
            walks: None,
        };
    }
    let mut checks = ids
        .iter()
        .map(|&id| check(id, &ctx, &opts.check))
        .collect::<Result<Vec<_>>>()?;
    if !exact {
        for r in &mut checks {
            let sep = if r.notes.is_empty() { "" } else { "; " };
            r.notes = format!("{}{sep}right-hand side uses lower bounds on clique numbers", r.notes);
        }
    }
    let mean = |xs: &[u32]| {
        if xs.is_empty() {
            0.0
        } else {
            xs.iter().map(|&x| x as f64).sum::<f64>() / xs.len() as f64
        }
    };
    Ok(TrialResult {
        trial,
        m: ctx.m,
        t: ctx.t,
        lambda1: ctx.spectrum.lambda1(),
        lambda2: ctx.spectrum.lambda2(),
        s_plus: ctx.spectrum.s_plus,
        s_minus: ctx.spectrum.s_minus,
        omega: ctx.omega,
        mean_c_v: mean(&ctx.c_v),
        mean_c_e: mean(&ctx.c_e),
        clique_numbers_exact: exact,
        checks,
    })
}

/// Samples G(n, p) `trials` times and aggregates spectral and clique
/// statistics.
pub fn random_experiment(opts: &ExperimentOptions) -> Result<RandomExperiment> {
    if opts.trials == 0 {
        return Err(Error::param("trials must be at least 1"));
    }
    if opts.n > MAX_DENSE_ORDER {
        return Err(Error::OrderTooLarge {
            n: opts.n,
            max: MAX_DENSE_ORDER,
        });
    }
    if !(opts.p > 0.0 && opts.p < 1.0) {
        return Err(Error::param(format!("edge probability {} outside (0, 1)", opts.p)));
    }
    let start = Instant::now();
    let run_chunk = |r: Range<u64>| -> Result<Vec<TrialResult>> {
        let mut out = Vec::new();
        for trial in r {
            if opts.time_limit.is_some_and(|lim| start.elapsed() > lim) {
                break;
            }
            out.push(run_trial(opts, trial)?);
        }
        Ok(out)
    };
    let chunks = split(opts.trials, opts.workers.max(1));
    let parts: Vec<Result<Vec<TrialResult>>> = if chunks.len() <= 1 {
        vec![run_chunk(0..opts.trials)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|r| {
                    let r = r.clone();
                    let run_chunk = &run_chunk;
                    s.spawn(move || run_chunk(r))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("trial worker panicked")).collect()
        })
    };
    let mut trial_results = Vec::new();
    for p in parts {
        trial_results.extend(p?);
    }
    let completed = trial_results.len() as u64;
    let n = opts.n as f64;
    let stats = (completed > 0).then(|| {
        let t = &trial_results;
        RandomStats {
            lambda1_over_n: Stat::of(t.iter().map(|r| r.lambda1 / n)),
            lambda2_over_sqrt_n: Stat::of(t.iter().map(|r| r.lambda2 / n.sqrt())),
            s_plus_over_n2: Stat::of(t.iter().map(|r| r.s_plus / (n * n))),
            s_minus_over_n2: Stat::of(t.iter().map(|r| r.s_minus / (n * n))),
            omega: Stat::of(t.iter().map(|r| r.omega as f64)),
            mean_c_v: Stat::of(t.iter().map(|r| r.mean_c_v)),
            mean_c_e: Stat::of(t.iter().map(|r| r.mean_c_e)),
        }
    });
    Ok(RandomExperiment {
        n: opts.n,
        p: opts.p,
        trials: opts.trials,
        seed: opts.seed,
        budget: opts.budget,
        completed,
        partial: completed < opts.trials,
        clique_numbers_exact: trial_results.iter().all(|r| r.clique_numbers_exact),
        binding_violations: trial_results
            .iter()
            .flat_map(|r| &r.checks)
            .filter(|c| c.is_violation())
            .count() as u64,
        stats,
        trial_results,
    })
}
