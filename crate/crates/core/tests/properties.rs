use proptest::prelude::*;

use turanlab::cliques::{edge_clique_numbers, vertex_clique_numbers};
use turanlab::inequalities::{check_graph, weighted_edge_local_check, CheckId, CheckOptions, Kind};
use turanlab::majorization::{p_norm, weakly_majorizes};
use turanlab::motzkin::{quad_form, SimplexPoint, WeightScheme};
use turanlab::scan::{scan, GraphSource, ScanOptions};
use turanlab::weights::EdgeWeights;
use turanlab::Graph;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn simplex_point(n: usize) -> impl Strategy<Value = SimplexPoint> {
    proptest::collection::vec(0.0f64..1.0, n).prop_map(|mut x| {
        x[0] += 1e-3;
        let s: f64 = x.iter().sum();
        x.iter_mut().for_each(|v| *v /= s);
        let drift = 1.0 - x.iter().sum::<f64>();
        x[0] += drift;
        SimplexPoint::new(x).unwrap()
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in graph(64)) {
        let text = g.to_graph6();
        prop_assert_eq!(Graph::from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn clique_numbers_grow_under_edge_addition(g in graph(12), pick in any::<prop::sample::Index>()) {
        let non_edges: Vec<(usize, usize)> = (0..g.order())
            .flat_map(|u| (u + 1..g.order()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!non_edges.is_empty());
        let (u, v) = non_edges[pick.index(non_edges.len())];
        let h = g.with_edge(u, v).unwrap();
        let (before, after) = (vertex_clique_numbers(&g), vertex_clique_numbers(&h));
        for (b, a) in before.iter().zip(&after) {
            prop_assert!(a >= b);
        }
        let after_e = edge_clique_numbers(&h);
        for (&(x, y), &c) in g.edges().iter().zip(&edge_clique_numbers(&g)) {
            prop_assert!(after_e[h.edge_index(x, y).unwrap()] >= c);
        }
    }

    #[test]
    fn geometric_weights_below_arithmetic(
        (g, points) in graph(10).prop_flat_map(|g| {
            let n = g.order();
            (Just(g), proptest::collection::vec(simplex_point(n), 8))
        }),
    ) {
        prop_assume!(g.size() > 0);
        let c_v = vertex_clique_numbers(&g);
        let avg = WeightScheme::AvgLocal.edge_weights(&g, &c_v).unwrap();
        let geo = WeightScheme::GeoLocal.edge_weights(&g, &c_v).unwrap();
        for (a, b) in avg.values().iter().zip(geo.values()) {
            prop_assert!(*b <= *a + 1e-12);
        }
        for x in &points {
            prop_assert!(quad_form(&g, &geo, x).unwrap() <= quad_form(&g, &avg, x).unwrap() + 1e-12);
            prop_assert!(quad_form(&g, &avg, x).unwrap() <= 1.0 + 1e-9);
        }
    }

    #[test]
    fn weighted_check_is_homogeneous(
        (g, values) in graph(9).prop_flat_map(|g| {
            let m = g.size();
            (Just(g), proptest::collection::vec(0.0f64..3.0, m))
        }),
        scale in 0.1f64..10.0,
    ) {
        prop_assume!(g.size() > 0);
        let w = EdgeWeights::new(&g, values).unwrap();
        let base = weighted_edge_local_check(&g, &w).unwrap();
        let scaled = weighted_edge_local_check(&g, &w.scaled(scale)).unwrap();
        // Both sides are quadratic in w.
        let s2 = scale * scale;
        prop_assert!((scaled.lhs - s2 * base.lhs).abs() <= 1e-9 * (1.0 + scaled.lhs.abs()));
        prop_assert!((scaled.rhs - s2 * base.rhs).abs() <= 1e-9 * (1.0 + scaled.rhs.abs()));
        prop_assert_eq!(scaled.holds, base.holds);
    }

    #[test]
    fn unit_weights_reduce_to_edge_local_bound(g in graph(9)) {
        prop_assume!(g.size() > 0);
        let opts = CheckOptions::default();
        let plain = check_graph(&g, &[CheckId::new(Kind::EdgeLocalSpectralTuran)], &opts).unwrap().remove(0);
        let weighted = weighted_edge_local_check(&g, &EdgeWeights::uniform(&g, 1.0).unwrap()).unwrap();
        prop_assert!((plain.lhs - weighted.lhs).abs() <= 1e-9 * (1.0 + plain.lhs));
        prop_assert!((plain.rhs - weighted.rhs).abs() <= 1e-9 * (1.0 + plain.rhs));
    }

    #[test]
    fn weak_majorization_orders_norms(
        x in proptest::collection::vec(0.0f64..5.0, 1..10),
        shrink in proptest::collection::vec(0.0f64..=1.0, 10),
        p in 1.0f64..4.0,
    ) {
        let y: Vec<f64> = x.iter().zip(&shrink).map(|(a, s)| a * s).collect();
        prop_assert!(weakly_majorizes(&x, &y));
        prop_assert!(p_norm(&y, p) <= p_norm(&x, p) * (1.0 + 1e-12));
        let mut rev = x.clone();
        rev.reverse();
        prop_assert!(weakly_majorizes(&x, &rev) && weakly_majorizes(&rev, &x));
    }

    #[test]
    fn scan_partition_is_sound(n in 3usize..=5, workers in 1usize..=6) {
        let checks = vec![CheckId::new(Kind::Wilf), CheckId::new(Kind::LocalBn)];
        let source = GraphSource::enumeration(n).unwrap();
        let mut opts = ScanOptions::new(checks);
        let single = scan(&source, &opts).unwrap();
        opts.workers = workers;
        prop_assert_eq!(scan(&source, &opts).unwrap(), single);
    }
}
