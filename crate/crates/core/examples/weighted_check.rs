//! Weighted edge-localized bound with weights read from CSV.

use turanlab::inequalities::weighted_edge_local_check;
use turanlab::named;
use turanlab::spectra::weighted_spectral_radius;
use turanlab::weights::EdgeWeights;

const WEIGHTS: &str = "u,v,w
0,1,1.0
0,2,2.0
1,2,3.0
2,3,0.5
";

fn main() -> turanlab::Result<()> {
    // A triangle with a pendant edge.
    let g = named::parse("complete:3+complete:1")?.with_edge(2, 3)?;
    let w = EdgeWeights::from_csv(&g, WEIGHTS.as_bytes())?;
    println!("λ₁(W) = {:.6}", weighted_spectral_radius(&g, &w)?);
    let r = weighted_edge_local_check(&g, &w)?;
    println!("{}: {:.6} <= {:.6}, slack {:.6}", r.id, r.lhs, r.rhs, r.slack);
    let doubled = weighted_edge_local_check(&g, &w.scaled(2.0))?;
    println!("doubled weights: {:.6} <= {:.6}", doubled.lhs, doubled.rhs);
    Ok(())
}
