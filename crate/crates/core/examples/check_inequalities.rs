//! Evaluates the whole catalogue on one graph and prints a table.
//!
//! `cargo run --example check_inequalities -- bipartite:3,3`

use turanlab::inequalities::{check_all, CheckOptions};
use turanlab::named;

fn main() -> turanlab::Result<()> {
    let spec = std::env::args().nth(1).unwrap_or_else(|| "octahedron".into());
    let g = named::parse(&spec)?;
    println!("{spec} ({})", g.to_graph6());
    println!("{:<28} {:>12} {:>12} {:>12}  flags", "id", "lhs", "rhs", "slack");
    for r in check_all(&g, &CheckOptions::default())? {
        let mut flags = Vec::new();
        if !r.applicable {
            flags.push("n/a");
        }
        if r.equality {
            flags.push("equality");
        }
        if r.is_violation() {
            flags.push("VIOLATION");
        }
        println!(
            "{:<28} {:>12.6} {:>12.6} {:>12.3e}  {}",
            r.id.to_string(),
            r.lhs,
            r.rhs,
            r.slack,
            flags.join(",")
        );
    }
    Ok(())
}
