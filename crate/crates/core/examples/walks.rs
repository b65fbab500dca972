//! Walk counts w_r(v) and the walk inequalities for r = 1..6.

use turanlab::inequalities::{check_graph, CheckId, CheckOptions, Kind};
use turanlab::named;
use turanlab::spectra::walk_tables;

fn main() -> turanlab::Result<()> {
    let g = named::parse("path:5")?;
    for t in walk_tables(&g, 6)? {
        println!("r = {}: {:?} total {}", t.r, t.per_vertex, t.total);
    }
    let kinds = [Kind::WalkNikiforov, Kind::WalkLocalMixed, Kind::WalkLocalConj, Kind::WalkRecursion];
    let ids = kinds
        .iter()
        .flat_map(|&k| (1..=6).map(move |r| CheckId::walk(k, r)))
        .collect::<turanlab::Result<Vec<_>>>()?;
    for r in check_graph(&g, &ids, &CheckOptions::default())? {
        println!("{:<20} {:>14.4} <= {:<14.4} {}", r.id.to_string(), r.lhs, r.rhs, if r.holds { "ok" } else { "fails" });
    }
    Ok(())
}
