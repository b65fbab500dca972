//! Graphs closest to equality for one inequality, over all labeled graphs
//! of a given order.
//!
//! `cargo run --release --example extremal_search -- splus_wilf 6`

use turanlab::inequalities::CheckId;
use turanlab::scan::{extremal_search, GraphSource};
use turanlab::Graph;

fn main() -> turanlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let id: CheckId = args.next().unwrap_or_else(|| "wilf".into()).parse()?;
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(5);

    let best = extremal_search(&GraphSource::enumeration(n)?, id, 5, true)?;
    println!("{id} on connected graphs of order {n}:");
    for e in best {
        let g = Graph::from_graph6(&e.graph6)?;
        println!(
            "  {:<8} m = {:<2} slack {:>10.3e}  (lhs {:.6}, rhs {:.6})",
            e.graph6,
            g.size(),
            e.slack,
            e.lhs,
            e.rhs
        );
    }
    Ok(())
}
