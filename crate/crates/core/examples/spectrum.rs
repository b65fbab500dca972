//! Adjacency spectrum and square energies of a few named graphs.
//!
//! `cargo run --example spectrum -- petersen cmp:2,2,2`

use turanlab::named;
use turanlab::spectra::Spectrum;

fn main() -> turanlab::Result<()> {
    let mut specs: Vec<String> = std::env::args().skip(1).collect();
    if specs.is_empty() {
        specs = vec!["petersen".into(), "octahedron".into(), "cycle:5".into()];
    }
    for spec in specs {
        let g = named::parse(&spec)?;
        let s = Spectrum::of(&g)?;
        let shown: Vec<String> = s.eigenvalues.iter().map(|l| format!("{l:.4}")).collect();
        println!("{spec} ({})", g.to_graph6());
        println!("  eigenvalues  {}", shown.join(" "));
        println!("  λ₁ {:.6}  λ₂ {:.6}  λ_min {:.6}", s.lambda1(), s.lambda2(), s.lambda_min());
        println!("  s⁺ {:.6}  s⁻ {:.6}  inertia ({}, {})", s.s_plus, s.s_minus, s.n_plus, s.n_minus);
    }
    Ok(())
}
