//! Scans every labeled connected graph of a given order against the
//! conjectures, split across worker threads.
//!
//! `cargo run --release --example exhaustive_scan -- 6 4`

use std::time::Instant;

use turanlab::inequalities::parse_checks;
use turanlab::scan::{scan, GraphSource, ScanOptions};

fn main() -> turanlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(6);
    let workers: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(4);

    let mut opts = ScanOptions::new(parse_checks("conjectures", 6)?);
    opts.connected_only = true;
    opts.workers = workers;
    let start = Instant::now();
    let report = scan(&GraphSource::enumeration(n)?, &opts)?;
    println!(
        "n = {n}: {} labeled graphs, {} connected, {:.1}s",
        report.graphs_read,
        report.graphs_processed,
        start.elapsed().as_secs_f64()
    );
    for c in &report.checks {
        println!(
            "  {:<24} violations {:>3}  equalities {:>6}  min slack {:>10.3e} at {}",
            c.id.to_string(),
            c.violations,
            c.equalities,
            c.min_slack.unwrap_or(f64::NAN),
            c.argmin_graph6.as_deref().unwrap_or("-"),
        );
    }
    Ok(())
}
