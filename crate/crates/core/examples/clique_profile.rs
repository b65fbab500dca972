//! Local clique numbers c(v), c(e) and the structural predicates the
//! inequality hypotheses depend on.

use turanlab::cliques::CliqueProfile;
use turanlab::named;

fn main() -> turanlab::Result<()> {
    for spec in ["diamond", "bowtie", "bipartite:2,2+complete:4"] {
        let g = named::parse(spec)?;
        let p = CliqueProfile::new(&g);
        println!("{spec}: n = {}, m = {}, ω = {}, t = {}", g.order(), g.size(), p.omega, p.t);
        println!("  c(v) {:?}", p.c_v);
        for (&(u, v), c) in g.edges().iter().zip(&p.c_e) {
            println!("  c({u}{v}) = {c}");
        }
        println!("  {:?}", p.predicates);
    }
    Ok(())
}
