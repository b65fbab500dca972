//! Spectral and clique statistics of G(n, p). Orders above 64 use the
//! dense path with budgeted clique search.
//!
//! `cargo run --release --example random_experiment -- 300 0.5 3`

use turanlab::scan::{random_experiment, ExperimentOptions};

fn main() -> turanlab::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n = args.first().and_then(|a| a.parse().ok()).unwrap_or(200);
    let p = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(0.5);
    let trials = args.get(2).and_then(|a| a.parse().ok()).unwrap_or(3);

    let mut opts = ExperimentOptions::new(n, p, trials, 7);
    opts.workers = 2;
    let exp = random_experiment(&opts)?;
    for t in &exp.trial_results {
        println!(
            "trial {}: m {} t {} λ₁ {:.3} λ₂ {:.3} ω {}",
            t.trial, t.m, t.t, t.lambda1, t.lambda2, t.omega
        );
    }
    if let Some(s) = &exp.stats {
        println!("λ₁/n   {:.4} ± {:.4}", s.lambda1_over_n.mean, s.lambda1_over_n.stddev);
        println!("λ₂/√n  {:.4} ± {:.4}", s.lambda2_over_sqrt_n.mean, s.lambda2_over_sqrt_n.stddev);
        println!("s⁺/n²  {:.4}   s⁻/n² {:.4}", s.s_plus_over_n2.mean, s.s_minus_over_n2.mean);
    }
    println!(
        "clique numbers {}, binding violations {}",
        if exp.clique_numbers_exact { "exact" } else { "lower bounds" },
        exp.binding_violations
    );
    Ok(())
}
