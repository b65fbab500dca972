//! Cross-checks against independent oracles: exact integer characteristic
//! polynomials, trace identities, integer matrix powers and brute force.

use approx::assert_abs_diff_eq;

use turanlab::cliques::{edge_clique_numbers, max_clique, triangle_count, vertex_clique_numbers};
use turanlab::generate::random_gnp_stream;
use turanlab::named;
use turanlab::spectra::{walk_counts, Spectrum};
use turanlab::Graph;

fn adjacency(g: &Graph) -> Vec<Vec<i128>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v) as i128).collect())
        .collect()
}

fn matmul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = a.len();
    let mut c = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    c
}

/// det(xI - A) by Faddeev-LeVerrier, coefficients from x^0 up.
fn char_poly(a: &[Vec<i128>]) -> Vec<i128> {
    let n = a.len();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += c[n - k + 1];
        }
        m = matmul(a, &m);
        let trace: i128 = (0..n).map(|i| m[i][i]).sum();
        assert_eq!(trace % k as i128, 0, "exact division");
        c[n - k] = -trace / k as i128;
    }
    c
}

/// Expands Π (x - rᵢ) for integer roots.
fn from_roots(roots: &[i128]) -> Vec<i128> {
    let mut p = vec![1i128];
    for &r in roots {
        let mut next = vec![0i128; p.len() + 1];
        for (i, &c) in p.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= r * c;
        }
        p = next;
    }
    p
}

fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("petersen", named::petersen().unwrap()),
        ("K5", named::complete(5).unwrap()),
        ("C7", named::cycle(7).unwrap()),
        ("P6", named::path(6).unwrap()),
        ("star5", named::star(5).unwrap()),
        ("K33", named::complete_bipartite(3, 3).unwrap()),
        ("octahedron", named::octahedron().unwrap()),
        ("diamond", named::diamond().unwrap()),
        ("bowtie", named::bowtie().unwrap()),
        ("K2222", named::regular_multipartite(4, 2).unwrap()),
        ("empty4", named::empty(4).unwrap()),
    ]
}

#[test]
fn petersen_characteristic_polynomial() {
    let g = named::petersen().unwrap();
    let exact = char_poly(&adjacency(&g));
    let mut roots = vec![3];
    roots.extend([1; 5]);
    roots.extend([-2; 4]);
    assert_eq!(exact, from_roots(&roots));

    let s = Spectrum::of(&g).unwrap();
    for (got, want) in s.eigenvalues.iter().zip([3.0, 1.0, 1.0, 1.0, 1.0, 1.0, -2.0, -2.0, -2.0, -2.0]) {
        assert_abs_diff_eq!(*got, want, epsilon = 1e-10);
    }
    assert_abs_diff_eq!(s.s_plus, 14.0, epsilon = 1e-9);
    assert_abs_diff_eq!(s.s_minus, 16.0, epsilon = 1e-9);
}

#[test]
fn numeric_spectrum_reproduces_integer_characteristic_polynomial() {
    for (name, g) in fixtures() {
        let exact = char_poly(&adjacency(&g));
        let s = Spectrum::of(&g).unwrap();
        // Expand Π (x - λ) in floats and round.
        let mut p = vec![1.0f64];
        for &l in &s.eigenvalues {
            let mut next = vec![0.0; p.len() + 1];
            for (i, &c) in p.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= l * c;
            }
            p = next;
        }
        for (i, (&e, &f)) in exact.iter().zip(&p).enumerate() {
            assert_abs_diff_eq!(e as f64, f, epsilon = 1e-6 * (1.0 + f.abs()));
            assert_eq!(e, f.round() as i128, "{name}: coefficient {i}");
        }
    }
}

fn check_traces(g: &Graph, label: &str) {
    let s = Spectrum::of(g).unwrap();
    let (n, m, t) = (g.order() as f64, g.size() as f64, triangle_count(g) as f64);
    assert!(s.power_sum(1).abs() <= 1e-8 * n, "{label}: trace");
    assert!((s.power_sum(2) - 2.0 * m).abs() <= 1e-7 * m.max(1.0), "{label}: second moment");
    assert!((s.power_sum(3) - 6.0 * t).abs() <= 1e-6 * (1.0 + t), "{label}: third moment");
    assert_eq!((s.power_sum(3) / 6.0).round() as u64, triangle_count(g), "{label}");
    if n > 0.0 {
        let avg = 2.0 * m / n;
        assert!(s.lambda1() >= avg - 1e-9, "{label}: λ₁ below average degree");
        assert!(avg >= s.lambda_min() - 1e-9, "{label}");
    }
    assert_abs_diff_eq!(s.s_plus + s.s_minus, 2.0 * m, epsilon = 1e-7 * (1.0 + m));
}

#[test]
fn trace_identities_on_fixtures() {
    for (name, g) in fixtures() {
        check_traces(&g, name);
    }
}

#[test]
fn trace_identities_on_random_graphs() {
    for i in 0..1000 {
        check_traces(&random_gnp_stream(30, 0.4, 11, i).unwrap(), &format!("G(30,0.4) #{i}"));
    }
}

#[test]
fn walk_counts_match_integer_matrix_powers() {
    for (name, g) in fixtures() {
        let a = adjacency(&g);
        let n = g.order();
        let mut power: Vec<Vec<i128>> = (0..n)
            .map(|i| (0..n).map(|j| (i == j) as i128).collect())
            .collect();
        for r in 1..=8u32 {
            // Walks with r vertices have r - 1 steps.
            let table = walk_counts(&g, r).unwrap();
            let rows: Vec<u64> = power.iter().map(|row| row.iter().sum::<i128>() as u64).collect();
            assert_eq!(table.per_vertex, rows, "{name}, r = {r}");
            assert_eq!(table.total, rows.iter().sum::<u64>());
            power = matmul(&power, &a);
        }
    }
}

/// Largest clique through a vertex set by brute force over subsets.
fn brute_clique(g: &Graph, must: u64) -> u32 {
    let n = g.order();
    let mut best = 0;
    for s in 0u64..(1 << n) {
        if s & must != must {
            continue;
        }
        let is_clique = (0..n).all(|v| s >> v & 1 == 0 || g.neighbors(v) & s == s & !(1 << v));
        if is_clique {
            best = best.max(s.count_ones());
        }
    }
    best
}

#[test]
fn clique_numbers_match_brute_force() {
    let mut graphs: Vec<Graph> = fixtures().into_iter().map(|(_, g)| g).collect();
    graphs.extend((0..40).map(|i| random_gnp_stream(10, 0.55, 5, i).unwrap()));
    for g in graphs {
        assert_eq!(max_clique(&g).size as u32, brute_clique(&g, 0));
        let c_v = vertex_clique_numbers(&g);
        for (v, &c) in c_v.iter().enumerate() {
            assert_eq!(c, brute_clique(&g, 1 << v));
        }
        for (&(u, v), &c) in g.edges().iter().zip(&edge_clique_numbers(&g)) {
            assert_eq!(c, brute_clique(&g, (1 << u) | (1 << v)));
        }
        let t = (0..g.order())
            .flat_map(|a| (a + 1..g.order()).map(move |b| (a, b)))
            .filter(|&(a, b)| g.has_edge(a, b))
            .map(|(a, b)| (b + 1..g.order()).filter(|&c| g.has_edge(a, c) && g.has_edge(b, c)).count() as u64)
            .sum::<u64>();
        assert_eq!(triangle_count(&g), t);
    }
}
