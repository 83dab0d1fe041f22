mod common;

use common::*;
use noverlap::geometry::{hull_corners, ConvexHull};
use noverlap::metrics::{compute_metrics, el_metrics, nm_metrics, oo_metrics, MetricOptions};
use noverlap::{
    adjust, AdjustParams, AdjustmentPair, Algorithm, Embedding, Metric, MetricClass, Point,
};
use proptest::prelude::*;

fn cases(n: u32) -> ProptestConfig {
    ProptestConfig::with_cases(n)
}

fn shifted(e: &Embedding, g: &noverlap::SizedGraph, f: impl Fn(Point) -> Point) -> Embedding {
    Embedding::new(g, e.positions().iter().map(|&p| f(p)).collect()).unwrap()
}

proptest! {
    #![proptest_config(cases(256))]

    #[test]
    fn ordering_matches_brute_force(inst in instances(1, 12, true)) {
        let pair = AdjustmentPair::new(&inst.graph, &inst.initial, &inst.adjusted).unwrap();
        let m = oo_metrics(&pair);
        let o = oo_oracle(inst.initial.positions(), inst.adjusted.positions());
        prop_assert_eq!(m.oo_o, o.oo_o);
        prop_assert_eq!(m.oo_kt, o.oo_kt);
        prop_assert_eq!(m.oo_ni, o.oo_ni);
        prop_assert_eq!(m.oo_nni, o.oo_nni);
    }

    #[test]
    fn movement_matches_brute_force(inst in instances(2, 12, true), k in 1usize..6) {
        let pair = AdjustmentPair::new(&inst.graph, &inst.initial, &inst.adjusted).unwrap();
        let m = nm_metrics(&pair, k);
        let o = nm_oracle(inst.initial.positions(), inst.adjusted.positions(), &inst.graph.sizes(), k);
        prop_assert_eq!(m.nm_mn, o.nm_mn);
        prop_assert_eq!(m.nm_dm_me, o.nm_dm_me);
        prop_assert_eq!(m.nm_dm_ne, o.nm_dm_ne);
        prop_assert_eq!(m.nm_dm_se, o.nm_dm_se);
        prop_assert_eq!(m.nm_dm_h, o.nm_dm_h);
        prop_assert_eq!(m.nm_dm_imse, o.nm_dm_imse);
        prop_assert_eq!(m.nm_knn, o.nm_knn);
    }

    #[test]
    fn edge_lengths_match_brute_force(inst in instances(3, 12, false)) {
        let pair = AdjustmentPair::new(&inst.graph, &inst.initial, &inst.adjusted).unwrap();
        let m = el_metrics(&pair);
        let (r, rsdd) = el_oracle(&inst.graph, inst.initial.positions(), inst.adjusted.positions());
        prop_assert_eq!(m.el_r, r);
        prop_assert_eq!(m.el_rsdd, rsdd);
    }

    #[test]
    fn structural_ranges_hold_for_any_pair(inst in instances(1, 12, true)) {
        let pair = AdjustmentPair::new(&inst.graph, &inst.initial, &inst.adjusted).unwrap();
        let report = compute_metrics(&pair, &MetricOptions::default());
        for (metric, value) in report.iter() {
            // Spread ranges assume the layout does not shrink, and a node can
            // travel farther than the adjusted box diagonal.
            if metric.descriptor().class == MetricClass::Spread || metric == Metric::NmDmNe {
                continue;
            }
            if let Some(v) = value {
                prop_assert!(metric.descriptor().contains(v, pair.n()),
                    "{} = {} outside its range", metric.abbreviation(), v);
            }
        }
    }

    #[test]
    fn ranges_hold_for_adjustments((g, e) in crowded(2, 14), alg in 0usize..8) {
        let algorithm = Algorithm::ALL[alg];
        let out = adjust(&g, &e, &AdjustParams::new(algorithm)).unwrap();
        let pair = AdjustmentPair::new(&g, &e, &out.adjusted).unwrap();
        let report = compute_metrics(&pair, &MetricOptions::default());
        for (metric, value) in report.iter() {
            // Only scaling is guaranteed never to shrink the layout.
            let spread = metric.descriptor().class == MetricClass::Spread;
            if metric == Metric::NmDmNe || (spread && algorithm != Algorithm::Scaling) {
                continue;
            }
            if let Some(v) = value {
                prop_assert!(metric.descriptor().contains(v, pair.n()),
                    "{algorithm}: {} = {} outside its range", metric.abbreviation(), v);
            }
        }
    }

    #[test]
    fn identity_hits_targets(inst in instances(1, 12, false)) {
        let pair = AdjustmentPair::new(&inst.graph, &inst.initial, &inst.initial).unwrap();
        let n = pair.n();
        let report = compute_metrics(&pair, &MetricOptions::default());
        for (metric, value) in report.iter() {
            if metric == Metric::ElR {
                // Not a ratio of before and after; equals the spread of the
                // initial edge lengths.
                continue;
            }
            let Some(v) = value else {
                prop_assert!(matches!(metric, Metric::NmKnn | Metric::ElRsdd | Metric::SpChA | Metric::GsChSd));
                continue;
            };
            let target = metric.descriptor().target;
            let exact = matches!(metric, Metric::OoO | Metric::OoKt | Metric::OoNi | Metric::OoNni
                | Metric::NmMn | Metric::NmDmMe | Metric::NmDmNe | Metric::NmDmH | Metric::NmDmSe
                | Metric::NmKnn | Metric::SpBbL1ml | Metric::SpBbA | Metric::SpBbNa | Metric::SpChA
                | Metric::GsBbAr | Metric::GsBbIar);
            let tol = if exact { 0.0 } else { 1e-12 };
            prop_assert!((v - target).abs() <= tol, "{} = {}", metric.abbreviation(), v);
        }
        for k in 1..n {
            prop_assert_eq!(nm_metrics(&pair, k).nm_knn, Some(0.0));
        }
    }

    #[test]
    fn shared_translation_changes_nothing(inst in instances(3, 10, false), tx in -50.0..50.0f64, ty in -50.0..50.0f64) {
        let g = &inst.graph;
        let t = Point::new(tx, ty);
        let a2 = shifted(&inst.initial, g, |p| p + t);
        let b2 = shifted(&inst.adjusted, g, |p| p + t);
        let base = compute_metrics(&AdjustmentPair::new(g, &inst.initial, &inst.adjusted).unwrap(), &MetricOptions::default());
        let moved = compute_metrics(&AdjustmentPair::new(g, &a2, &b2).unwrap(), &MetricOptions::default());
        let invariant = [
            Metric::OoO, Metric::OoKt, Metric::OoNi, Metric::OoNni,
            Metric::SpBbL1ml, Metric::SpBbA, Metric::SpBbNa, Metric::SpChA,
            Metric::GsBbAr, Metric::GsBbIar, Metric::GsChSd,
            Metric::NmDmImse, Metric::ElRsdd,
        ];
        for m in invariant {
            match (base.get(m), moved.get(m)) {
                (Some(x), Some(y)) => prop_assert!((x - y).abs() <= 1e-6 * x.abs().max(1.0), "{}: {} vs {}", m.abbreviation(), x, y),
                (x, y) => prop_assert_eq!(x, y),
            }
        }
    }

    #[test]
    fn translation_as_adjustment_has_no_imse(inst in instances(1, 12, false), tx in -50.0..50.0f64, ty in -50.0..50.0f64) {
        let g = &inst.graph;
        let b = shifted(&inst.initial, g, |p| p + Point::new(tx, ty));
        let m = nm_metrics(&AdjustmentPair::new(g, &inst.initial, &b).unwrap(), 1);
        prop_assert!(m.nm_dm_imse <= 1e-9);
    }

    #[test]
    fn center_scaling_keeps_order_and_ratios(inst in instances(3, 12, false), s in 1.0..5.0f64) {
        let g = &inst.graph;
        let b = shifted(&inst.initial, g, |p| p * s);
        let pair = AdjustmentPair::new(g, &inst.initial, &b).unwrap();
        let oo = oo_metrics(&pair);
        prop_assert_eq!((oo.oo_o, oo.oo_nni), (1.0, 0.0));
        let el = el_metrics(&pair);
        prop_assert!(el.el_rsdd.unwrap() <= 1e-12);
    }

    #[test]
    fn hull_area_matches_gift_wrapping(inst in instances(1, 6, true)) {
        let sizes = inst.graph.sizes();
        let corners = hull_corners(inst.initial.positions(), &sizes);
        let hull = ConvexHull::from_points(&corners);
        let oracle = jarvis_area(&corners);
        prop_assert!((hull.area - oracle).abs() <= 1e-9, "{} vs {}", hull.area, oracle);
    }
}

#[test]
fn hand_checked_examples() {
    // A single node moved by (3, 4).
    let g = graph_from(&[(1.0, 1.0)], &[]);
    let (a, b) = (embed(&g, &[(0.0, 0.0)]), embed(&g, &[(3.0, 4.0)]));
    let m = nm_metrics(&AdjustmentPair::new(&g, &a, &b).unwrap(), 1);
    assert_eq!(
        (m.nm_dm_se, m.nm_dm_h, m.nm_dm_me, m.nm_dm_imse),
        (25.0, 7.0, 5.0, 0.0)
    );

    // Translating every node by (10, -2).
    let g = graph_from(&[(1.0, 1.0); 3], &[]);
    let a = embed(&g, &[(0.0, 0.0), (2.0, 1.0), (-1.0, 3.0)]);
    let b = embed(&g, &[(10.0, -2.0), (12.0, -1.0), (9.0, 1.0)]);
    let m = nm_metrics(&AdjustmentPair::new(&g, &a, &b).unwrap(), 1);
    assert_eq!((m.nm_mn, m.nm_dm_se, m.nm_dm_imse), (1.0, 312.0, 0.0));

    // x-order swapped, y preserved.
    let g = graph_from(&[(1.0, 1.0); 2], &[]);
    let a = embed(&g, &[(0.0, 0.0), (1.0, 5.0)]);
    let b = embed(&g, &[(1.0, 0.0), (0.0, 5.0)]);
    let m = oo_metrics(&AdjustmentPair::new(&g, &a, &b).unwrap());
    assert_eq!((m.oo_o, m.oo_kt, m.oo_ni, m.oo_nni), (0.0, 1.0, 1.0, 0.5));
    let b = embed(&g, &[(1.0, 5.0), (0.0, 0.0)]);
    let m = oo_metrics(&AdjustmentPair::new(&g, &a, &b).unwrap());
    assert_eq!((m.oo_ni, m.oo_nni), (2.0, 1.0));

    // Path 0-1-3 stretched to 0-2-6.
    let g = graph_from(&[(0.5, 0.5); 3], &[(0, 1), (1, 2)]);
    let a = embed(&g, &[(0.0, 0.0), (1.0, 0.0), (3.0, 0.0)]);
    let b = embed(&g, &[(0.0, 0.0), (2.0, 0.0), (6.0, 0.0)]);
    let m = el_metrics(&AdjustmentPair::new(&g, &a, &b).unwrap());
    assert_eq!((m.el_r, m.el_rsdd), (Some(2.0), Some(0.0)));
}
