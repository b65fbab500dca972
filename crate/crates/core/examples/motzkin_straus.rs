//! Maximizes xᵀWx over the simplex for the classical and the two local
//! weightings, next to the value at the clique witness.

use turanlab::cliques::{max_clique, vertex_clique_numbers};
use turanlab::motzkin::{clique_witness, maximize_simplex, quad_form, MsOptions, WeightScheme};
use turanlab::named;

fn main() -> turanlab::Result<()> {
    for spec in ["petersen", "diamond", "bowtie", "cmp:1,2,3"] {
        let g = named::parse(spec)?;
        let omega = max_clique(&g).size as f64;
        let c_v = vertex_clique_numbers(&g);
        println!("{spec}: ω = {omega}, 1 - 1/ω = {:.6}", 1.0 - 1.0 / omega);
        for scheme in [WeightScheme::Classical, WeightScheme::AvgLocal, WeightScheme::GeoLocal] {
            let w = scheme.edge_weights(&g, &c_v)?;
            let best = maximize_simplex(&g, &w, &MsOptions::default())?;
            let witness = quad_form(&g, &w, &clique_witness(&g))?;
            println!(
                "  {:<10} max {:.9}  witness {:.9}  support {:?}",
                scheme.id(),
                best.value,
                witness,
                best.x.support()
            );
        }
    }
    Ok(())
}
