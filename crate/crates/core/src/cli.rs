//! The `turanlab` command line.
//!
//! Exit codes: 0 when no binding violation was found, 1 when one was, 2 on
//! any operational error.

use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::Path;
use std::time::Duration;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bbclique::SearchBudget;
use crate::cliques::CliqueProfile;
use crate::error::{Error, Result};
use crate::generate::random_gnp;
use crate::graph::Graph;
use crate::inequalities::{self, check, parse_checks, CheckOptions, GraphContext, CATALOGUE};
use crate::motzkin::{self, MsOptions, WeightScheme};
use crate::named;
use crate::report;
use crate::scan::{self, ExperimentOptions, GraphSource, ScanOptions};
use crate::spectra::{self, Spectrum};
use crate::weights::EdgeWeights;

#[derive(Parser, Debug)]
#[command(name = "turanlab", version, about = "Spectral and clique-local graph invariants and Turán-type inequality checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Adjacency spectrum, square energies and inertia.
    Spectrum {
        #[command(flatten)]
        input: GraphInput,
        /// Relative threshold below which an eigenvalue counts as zero.
        #[arg(long, default_value_t = spectra::DEFAULT_SIGN_THRESHOLD)]
        threshold: f64,
    },
    /// Clique number, local clique numbers, triangle count and predicates.
    Profile {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Evaluate catalogue checks on one graph.
    Check {
        #[command(flatten)]
        input: GraphInput,
        /// A single check id (e.g. `wilf`, `walk_nikiforov:3`).
        #[arg(long, conflicts_with = "checks")]
        id: Option<String>,
        #[command(flatten)]
        common: CheckArgs,
        /// Edge weights (CSV with header u,v,w) for the weighted check.
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Evaluate checks over an enumeration, a graph6 stream or random graphs.
    Scan {
        /// Every labeled graph on N vertices (N <= 7).
        #[arg(long, value_name = "N", group = "source")]
        enumerate: Option<usize>,
        /// graph6 file, or `-` for stdin.
        #[arg(long, value_name = "FILE|-", group = "source")]
        g6: Option<String>,
        /// Random graphs G(n, p); see --trials.
        #[arg(long, value_name = "n,p", group = "source")]
        gnp: Option<String>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Enumeration index slice LO:HI.
        #[arg(long, value_name = "LO:HI")]
        range: Option<String>,
        #[command(flatten)]
        common: CheckArgs,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, default_value_t = 5)]
        top_k: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        stop_on_violation: bool,
        /// Abort on malformed graph6 lines.
        #[arg(long)]
        strict: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Random-graph experiment on G(n, p) with n up to 4096.
    Random {
        #[arg(long, value_name = "n,p")]
        gnp: String,
        #[arg(long, default_value_t = 5)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Branch-and-bound node cap per vertex clique search (n > 64).
        #[arg(long, default_value_t = SearchBudget::default().vertex_nodes)]
        vertex_budget: u64,
        /// Branch-and-bound node cap per edge clique search (n > 64).
        #[arg(long, default_value_t = SearchBudget::default().edge_nodes)]
        edge_budget: u64,
        /// Skip trials not started within this many seconds.
        #[arg(long)]
        time_limit: Option<u64>,
    },
    /// Maximise a weighted quadratic form over the simplex.
    Ms {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value = "classical")]
        scheme: String,
        /// Weight CSV for `--scheme custom`.
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, default_value_t = MsOptions::default().restarts)]
        restarts: usize,
        #[arg(long, default_value_t = MsOptions::default().iters)]
        iters: usize,
    },
    /// Walk counts w_r(v) and w_r(G).
    Walks {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        r: u32,
    },
}

#[derive(Args, Debug)]
struct GraphInput {
    /// graph6 string, a file holding one, or `-` for stdin.
    #[arg(long, group = "graph")]
    g6: Option<String>,
    /// Named graph, e.g. `petersen`, `complete:4`, `cmp:2,2,2`, `kab:2,2+kab:3,3`.
    #[arg(long, group = "graph")]
    named: Option<String>,
    /// Random graph G(n, p) with n <= 64.
    #[arg(long, value_name = "n,p", group = "graph")]
    gnp: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct CheckArgs {
    /// Comma-separated ids, or `all`, `theorems`, `conjectures`.
    #[arg(long, default_value = "all")]
    checks: String,
    /// Relative violation tolerance.
    #[arg(long, default_value_t = inequalities::DEFAULT_TOL)]
    tol: f64,
    /// Relative equality tolerance.
    #[arg(long, default_value_t = inequalities::DEFAULT_EQ_TOL)]
    eq_tol: f64,
    /// Largest walk length r included by `all`, `theorems` and `conjectures`.
    #[arg(long, default_value_t = inequalities::DEFAULT_WALK_R)]
    walk_r: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn catalogue_help() -> String {
    let width = CATALOGUE.iter().map(|e| e.key.len()).max().unwrap_or(0);
    let mut s = String::from("Catalogue (walk entries take :r with 1 <= r <= 10):\n");
    for e in CATALOGUE {
        let status = match e.status {
            inequalities::Status::Theorem => "theorem",
            inequalities::Status::Conjecture => "conjecture",
        };
        let hyp = if e.hypotheses.is_empty() {
            String::new()
        } else {
            format!("; needs {}", e.hypotheses.iter().map(|h| h.describe()).collect::<Vec<_>>().join(", "))
        };
        s.push_str(&format!("  {:width$}  {}  [{}{}; {}]\n", e.key, e.statement, status, hyp, e.name));
    }
    s
}

fn parse_pair(s: &str) -> Result<(usize, f64)> {
    let (n, p) = s
        .split_once(',')
        .ok_or_else(|| Error::param(format!("expected n,p, got `{s}`")))?;
    let n = n.trim().parse().map_err(|_| Error::param(format!("bad order in `{s}`")))?;
    let p = p.trim().parse().map_err(|_| Error::param(format!("bad probability in `{s}`")))?;
    Ok((n, p))
}

fn parse_range(s: &str) -> Result<std::ops::Range<u64>> {
    let bad = || Error::param(format!("expected LO:HI, got `{s}`"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..hi)
}

fn read_text(arg: &str, stdin: &mut dyn BufRead) -> Result<String> {
    let mut s = String::new();
    if arg == "-" {
        stdin.read_to_string(&mut s)?;
    } else {
        s = std::fs::read_to_string(arg)?;
    }
    Ok(s)
}

impl GraphInput {
    fn load(&self, stdin: &mut dyn BufRead) -> Result<Graph> {
        if let Some(spec) = &self.named {
            return named::parse(spec);
        }
        if let Some(pair) = &self.gnp {
            let (n, p) = parse_pair(pair)?;
            return random_gnp(n, p, self.seed);
        }
        let g6 = self
            .g6
            .as_deref()
            .ok_or_else(|| Error::param("give one graph with --g6, --named or --gnp"))?;
        let text = if g6 == "-" || Path::new(g6).is_file() {
            read_text(g6, stdin)?
        } else {
            g6.to_string()
        };
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && *l != ">>graph6<<")
            .ok_or_else(|| Error::param("no graph6 line found"))?;
        Graph::from_graph6(line)
    }
}

impl CheckArgs {
    fn options(&self) -> CheckOptions {
        CheckOptions {
            tol: self.tol,
            eq_tol: self.eq_tol,
            weights: None,
            walk_r_max: self.walk_r,
        }
    }
}

fn load_weights(g: &Graph, path: &str, stdin: &mut dyn BufRead) -> Result<EdgeWeights> {
    EdgeWeights::from_csv(g, read_text(path, stdin)?.as_bytes())
}

#[derive(Serialize)]
struct SpectrumOut {
    graph6: String,
    n: usize,
    m: usize,
    lambda1: f64,
    lambda2: f64,
    #[serde(flatten)]
    spectrum: Spectrum,
}

#[derive(Serialize)]
struct ProfileOut {
    graph6: String,
    n: usize,
    m: usize,
    edges: Vec<(usize, usize)>,
    #[serde(flatten)]
    profile: CliqueProfile,
}

#[derive(Serialize)]
struct MsOut {
    graph6: String,
    scheme: &'static str,
    omega: u32,
    value: f64,
    classical_bound: f64,
    witness_value: f64,
    #[serde(flatten)]
    result: motzkin::MsResult,
}

#[derive(Serialize)]
struct WalksOut {
    graph6: String,
    #[serde(flatten)]
    table: spectra::WalkTable,
}

fn write_json<T: Serialize>(out: &mut dyn Write, x: &T) -> Result<()> {
    writeln!(out, "{}", report::to_json_pretty(x)?)?;
    Ok(())
}

/// Runs the command line on `args` (program name first) and returns the
/// exit code. Errors are reported on `err`.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cmd = Cli::command().after_help(catalogue_help());
    let matches = match cmd.try_get_matches_from(args) {
        Ok(m) => m,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return 2;
        }
    };
    match execute(cli.command, stdin, out, err) {
        Ok(code) => code,
        // Reader went away, e.g. piped into `head`.
        Err(Error::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn execute(command: Command, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Spectrum { input, threshold } => {
            let g = input.load(stdin)?;
            let s = Spectrum::with_threshold(&g, threshold)?;
            write_json(
                out,
                &SpectrumOut {
                    graph6: g.to_graph6(),
                    n: g.order(),
                    m: g.size(),
                    lambda1: s.lambda1(),
                    lambda2: s.lambda2(),
                    spectrum: s,
                },
            )?;
            Ok(0)
        }
        Command::Profile { input } => {
            let g = input.load(stdin)?;
            write_json(
                out,
                &ProfileOut {
                    graph6: g.to_graph6(),
                    n: g.order(),
                    m: g.size(),
                    edges: g.edges().to_vec(),
                    profile: CliqueProfile::new(&g),
                },
            )?;
            Ok(0)
        }
        Command::Check {
            input,
            id,
            common,
            weights,
            format,
        } => {
            let g = input.load(stdin)?;
            let ids = parse_checks(id.as_deref().unwrap_or(&common.checks), common.walk_r)?;
            let mut opts = common.options();
            if let Some(path) = &weights {
                opts.weights = Some(load_weights(&g, path, stdin)?);
            }
            let ctx = GraphContext::for_checks(&g, &ids)?;
            let results = ids
                .iter()
                .map(|&id| check(id, &ctx, &opts))
                .collect::<Result<Vec<_>>>()?;
            match format {
                Format::Json => write_json(out, &results)?,
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["id", "status", "lhs", "rhs", "slack", "holds", "applicable", "equality", "notes"])?;
                    for r in &results {
                        w.write_record([
                            r.id.to_string(),
                            format!("{:?}", r.status).to_lowercase(),
                            report::format_float(r.lhs),
                            report::format_float(r.rhs),
                            report::format_float(r.slack),
                            r.holds.to_string(),
                            r.applicable.to_string(),
                            r.equality.to_string(),
                            r.notes.clone(),
                        ])?;
                    }
                    out.write_all(&w.into_inner().map_err(|e| Error::Io(e.into_error()))?)?;
                }
            }
            Ok(results.iter().any(|r| r.is_violation()) as i32)
        }
        Command::Scan {
            enumerate,
            g6,
            gnp,
            trials,
            seed,
            range,
            common,
            workers,
            top_k,
            connected,
            stop_on_violation,
            strict,
            format,
        } => {
            let source = if let Some(n) = enumerate {
                let range = range.as_deref().map(parse_range).transpose()?;
                GraphSource::enumeration(n)?;
                GraphSource::Enumeration { n, range }
            } else if let Some(path) = g6 {
                if path == "-" {
                    GraphSource::graph6_reader("stdin", stdin)?
                } else {
                    GraphSource::graph6_reader(path.clone(), std::io::BufReader::new(std::fs::File::open(&path)?))?
                }
            } else if let Some(pair) = gnp {
                let (n, p) = parse_pair(&pair)?;
                GraphSource::Random { n, p, trials, seed }
            } else {
                return Err(Error::param("give a source with --enumerate, --g6 or --gnp"));
            };
            if range.is_some() && enumerate.is_none() {
                return Err(Error::param("--range applies to --enumerate only"));
            }
            let mut opts = ScanOptions::new(parse_checks(&common.checks, common.walk_r)?);
            opts.check = common.options();
            opts.workers = workers;
            opts.top_k = top_k;
            opts.connected_only = connected;
            opts.stop_on_violation = stop_on_violation;
            opts.strict = strict;
            let rep = scan::scan(&source, &opts)?;
            match format {
                Format::Json => {
                    for v in &rep.violations {
                        writeln!(out, "{}", report::to_json_line(&serde_json::json!({ "violation": v }))?)?;
                    }
                    writeln!(out, "{}", report::to_json_line(&serde_json::json!({ "summary": rep }))?)?;
                }
                Format::Csv => out.write_all(rep.to_csv()?.as_bytes())?,
            }
            for p in &rep.parse_errors {
                writeln!(err, "warning: line {}: {}", p.line, p.message)?;
            }
            Ok(rep.has_binding_violation() as i32)
        }
        Command::Random {
            gnp,
            trials,
            seed,
            workers,
            vertex_budget,
            edge_budget,
            time_limit,
        } => {
            let (n, p) = parse_pair(&gnp)?;
            let mut opts = ExperimentOptions::new(n, p, trials, seed);
            opts.workers = workers;
            opts.budget = SearchBudget {
                vertex_nodes: vertex_budget,
                edge_nodes: edge_budget,
            };
            opts.time_limit = time_limit.map(Duration::from_secs);
            let exp = scan::random_experiment(&opts)?;
            write_json(out, &exp)?;
            Ok((exp.binding_violations > 0) as i32)
        }
        Command::Ms {
            input,
            scheme,
            weights,
            restarts,
            iters,
        } => {
            let g = input.load(stdin)?;
            let scheme = match (scheme.as_str(), &weights) {
                ("custom", Some(path)) => WeightScheme::Custom(load_weights(&g, path, stdin)?),
                (_, Some(_)) => return Err(Error::param("--weights needs --scheme custom")),
                (name, None) => WeightScheme::parse(name)?,
            };
            let profile = CliqueProfile::new(&g);
            let w = scheme.edge_weights(&g, &profile.c_v)?;
            let opts = MsOptions {
                restarts,
                iters,
                seed: input.seed,
                ..MsOptions::default()
            };
            let result = motzkin::maximize_simplex(&g, &w, &opts)?;
            let witness_value = motzkin::quad_form(&g, &w, &motzkin::clique_witness(&g))?;
            write_json(
                out,
                &MsOut {
                    graph6: g.to_graph6(),
                    scheme: scheme.id(),
                    omega: profile.omega,
                    value: result.value,
                    classical_bound: 1.0 - 1.0 / profile.omega as f64,
                    witness_value,
                    result,
                },
            )?;
            Ok(0)
        }
        Command::Walks { input, r } => {
            let g = input.load(stdin)?;
            let table = spectra::walk_counts(&g, r)?;
            write_json(
                out,
                &WalksOut {
                    graph6: g.to_graph6(),
                    table,
                },
            )?;
            Ok(0)
        }
    }
}

/// Entry point for the binary.
pub fn main() -> std::process::ExitCode {
    let stdin = std::io::stdin();
    let mut lock = stdin.lock();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = run(std::env::args_os(), &mut lock, &mut out, &mut std::io::stderr());
    let _ = out.flush();
    std::process::ExitCode::from(code as u8)
}
