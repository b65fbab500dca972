//! Checks a graph6 stream from stdin (or a built-in sample) and prints the
//! JSON report.
//!
//! `geng -c 8 | cargo run --release --example graph6_stream -- -`

use std::io::BufReader;

use turanlab::inequalities::parse_checks;
use turanlab::report::to_json_pretty;
use turanlab::scan::{scan, GraphSource, ScanOptions};

const SAMPLE: &str = ">>graph6<<Cr\nCz\nC~\nDhc\nnot a graph\nIheA@GUAo\n";

fn main() -> turanlab::Result<()> {
    let source = if std::env::args().nth(1).as_deref() == Some("-") {
        GraphSource::graph6_reader("stdin", BufReader::new(std::io::stdin()))?
    } else {
        GraphSource::graph6_text("sample", SAMPLE)
    };
    let mut opts = ScanOptions::new(parse_checks("wilf,local_bn,vertex_local_splus_wilf", 6)?);
    opts.top_k = 2;
    let report = scan(&source, &opts)?;
    println!("{}", to_json_pretty(&report)?);
    Ok(())
}
