//! Weak majorization and the p-norm order it implies.

use turanlab::majorization::{p_norm, weakly_majorizes};

fn main() {
    let x = [4.0, 2.0, 1.0];
    for y in [[3.0, 3.0, 1.0], [2.0, 2.0, 2.0], [4.0, 2.0, 1.5], [1.0, 2.0, 4.0]] {
        let ok = weakly_majorizes(&x, &y);
        let norms: Vec<String> = [1.5, 2.0, 3.0]
            .iter()
            .map(|&p| format!("p={p}: {:.4} vs {:.4}", p_norm(&y, p), p_norm(&x, p)))
            .collect();
        println!("y = {y:?} ≺_w x: {ok:<5}  {}", norms.join("  "));
    }
}
