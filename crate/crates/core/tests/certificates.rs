use proptest::prelude::*;

use fiedler_core::embeddings::{
    balanced_circle_placement, certify, embedding_quotient, three_point_placement, Embedding, PlanarPoint,
};
use fiedler_core::families;
use fiedler_core::graph::{Graph, VertexSet};
use fiedler_core::spectra::DEFAULT_TOL;

fn weighted_sum(weights: &[f64], pts: &[PlanarPoint]) -> f64 {
    let (x, y) = weights
        .iter()
        .zip(pts)
        .fold((0.0, 0.0), |(x, y), (w, p)| (x + w * p.x, y + w * p.y));
    x.hypot(y)
}

/// Integer weights `1..=50`, `2..=20` of them, none above half the total.
fn balanced_weights() -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(1u32..=50, 2..=20)
        .prop_filter("no weight above half", |w| {
            let total: u32 = w.iter().sum();
            w.iter().all(|&x| 2 * x <= total)
        })
        .prop_map(|w| w.into_iter().map(f64::from).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn placement_residuals(weights in balanced_weights()) {
        let pts = balanced_circle_placement(&weights).unwrap();
        prop_assert_eq!(pts.len(), weights.len());
        prop_assert!(weighted_sum(&weights, &pts) <= 1e-9);
        for p in &pts {
            prop_assert!((p.norm_sq() - 1.0).abs() <= 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn three_point_scale_invariance(a in 1u32..100, b in 1u32..100, c in 1u32..100, k in -20i32..20) {
        let (a, b, c) = (f64::from(a), f64::from(b), f64::from(c));
        prop_assume!(a < b + c && b < a + c && c < a + b);
        // power-of-two scaling is exact
        let t = 2f64.powi(k);
        let base = three_point_placement(a, b, c).unwrap();
        let scaled = three_point_placement(t * a, t * b, t * c).unwrap();
        prop_assert_eq!(base, scaled);
        prop_assert!(weighted_sum(&[a, b, c], &base) <= 1e-9 * (a + b + c));
    }

    #[test]
    fn three_point_general_scaling(a in 1u32..100, b in 1u32..100, c in 1u32..100, t in 0.01f64..100.0) {
        let (a, b, c) = (f64::from(a), f64::from(b), f64::from(c));
        // strict inequalities survive the rounding of an arbitrary scale
        prop_assume!(a < b + c && b < a + c && c < a + b);
        let base = three_point_placement(a, b, c).unwrap();
        let scaled = three_point_placement(t * a, t * b, t * c).unwrap();
        for (p, q) in base.iter().zip(&scaled) {
            prop_assert!(p.dist_sq(q).sqrt() <= 1e-12);
        }
    }

    #[test]
    fn three_point_rejects_degenerate(a in 1u32..100, b in 1u32..100, extra in 0u32..3) {
        let (a, b, e) = (f64::from(a), f64::from(b), f64::from(extra));
        // flat triangles included
        prop_assert!(three_point_placement(a, b, a + b + e).is_err());
        prop_assert!(three_point_placement(a + b + e, a, b).is_err());
    }
}

#[test]
fn quotient_examples() {
    let k2 = families::path(2).unwrap();
    let emb = Embedding::new(vec![PlanarPoint::new(1.0, 0.0), PlanarPoint::new(-1.0, 0.0)], 1e-9);
    assert!((embedding_quotient(&k2, &emb).unwrap() - 2.0).abs() <= 1e-15);
    let c4 = families::cycle(4).unwrap();
    let roots = (0..4)
        .map(|k| PlanarPoint::on_circle(std::f64::consts::FRAC_PI_2 * k as f64))
        .collect();
    let emb = Embedding::new(roots, 1e-9);
    assert!((embedding_quotient(&c4, &emb).unwrap() - 2.0).abs() <= 1e-12);
}

#[test]
fn star_and_diamond_certificates() {
    let s = families::star(7).unwrap();
    let cert = certify(&s, &VertexSet::new([0])).unwrap();
    assert_eq!(cert.bound_fraction(), "6/6");
    assert!((cert.quotient - 1.0).abs() <= 1e-12);
    assert!(cert.soundness(&s, DEFAULT_TOL).unwrap().ok());

    let diamond = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap();
    let cert = certify(&diamond, &VertexSet::new([0, 2])).unwrap();
    assert_eq!(cert.bound_fraction(), "4/2");
    let sound = cert.soundness(&diamond, DEFAULT_TOL).unwrap();
    assert!(sound.ok());
    // diamond: λ2 = 2, bound 2 is tight
    assert!((sound.lambda2 - 2.0).abs() <= 1e-12);
}

#[test]
fn certificate_text_lists_every_vertex() {
    let g = families::path(5).unwrap();
    let cert = certify(&g, &VertexSet::new([2])).unwrap().with_origin("manual");
    let text = cert.to_text();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "vertices: 5");
    assert!(lines.contains(&"origin: manual"));
    assert!(lines.contains(&"bound: 2/4"));
    let coordinates = lines.iter().position(|l| *l == "coordinates:").unwrap();
    assert_eq!(lines.len() - coordinates - 1, 5);
}
