//! Three worked examples and the consistency index table, checked to four decimals.

#![allow(clippy::approx_constant)]

use mbwm_core::{
    best_modified_pcs, best_weight_set, consistency_index, consistency_ratio, consistent_weights, deviation_profile,
    diagnostics, fixed_reference_values, interval_weights, oracle, Case, CrScale, Pcs,
};

const PRINTED: f64 = 1e-4;

fn assert_close(label: &str, got: &[f64], want: &[f64]) {
    assert_eq!(got.len(), want.len(), "{label}: length");
    for (k, (g, w)) in got.iter().zip(want).enumerate() {
        assert!((g - w).abs() <= PRINTED, "{label}[{k}]: got {g}, want {w}");
    }
}

fn example1() -> Pcs {
    Pcs::from_one_based(2, 5, &[2., 1., 5., 3., 8.], &[4., 8., 3., 3., 1.]).unwrap()
}

fn example2() -> Pcs {
    Pcs::from_one_based(2, 5, &[2., 1., 4., 5., 9.], &[3., 9., 2., 2., 1.]).unwrap()
}

fn example3() -> Pcs {
    Pcs::from_one_based(2, 4, &[1., 1., 3., 4.], &[2., 4., 4., 1.]).unwrap()
}

#[test]
fn example1_full() {
    let pcs = example1();
    let d = diagnostics(&pcs);
    assert!(d.d1.is_empty());
    assert_eq!(d.j0, Some(2));
    assert_eq!(d.case, Case::J0);
    assert_close("eps_star", &[d.eps_star], &[1.2331]);
    assert_close("a_bw*", &[fixed_reference_values(&pcs, &d).a_bw], &[9.8648]);

    let iw = interval_weights(&pcs, &d);
    assert_close("w_lower", &iw.lower, &[0.1905, 0.4498, 0.1109, 0.1276, 0.0456]);
    assert_close("w_upper", &iw.upper, &[0.2360, 0.4941, 0.1219, 0.1762, 0.0501]);

    let m = best_modified_pcs(&pcs, &d);
    assert_close("A_bo*", m.best_to_other(), &[2.2209, 1., 4.0548, 3.1408, 9.8648]);
    assert_close("A_ow*", m.other_to_worst(), &[4.4418, 9.8648, 2.4329, 3.1408, 1.]);

    let w = best_weight_set(&pcs);
    assert_close("weights", w.as_slice(), &[0.2127, 0.4724, 0.1165, 0.1504, 0.0479]);
    assert_close(
        "eta",
        &deviation_profile(&pcs, &w),
        &[1.1104, 1.2331, 1.2331, 1.0469, 1.2331],
    );
    assert_close("CR", &[consistency_ratio(&pcs, CrScale::Ratio)], &[1.2331 / 8f64.sqrt()]);
    assert_close("CR 4dp", &[consistency_ratio(&pcs, CrScale::Ratio)], &[0.4360]);
}

#[test]
fn example2_full() {
    let pcs = example2();
    let d = diagnostics(&pcs);
    assert_eq!((d.i0, d.j0), (Some(0), Some(3)));
    assert_eq!(d.case, Case::I0);
    assert_close(
        "candidates",
        &[d.eps_i0.unwrap(), d.eps_j0.unwrap(), d.eps_i0_j0.unwrap()],
        &[1.1447, 1.0357, 1.1362],
    );
    assert_close("eps_star", &[d.eps_star], &[1.1447]);
    assert_close("a_bw*", &[fixed_reference_values(&pcs, &d).a_bw], &[7.8622]);

    let iw = interval_weights(&pcs, &d);
    assert_close("w_lower", &iw.lower, &[0.2101, 0.4810, 0.1103, 0.1072, 0.0612]);
    assert_close("w_upper", &iw.upper, &[0.2175, 0.4979, 0.1381, 0.1136, 0.0633]);

    let m = best_modified_pcs(&pcs, &d);
    assert_close("A_ow*", m.other_to_worst(), &[3.4341, 7.8622, 1.9827, 1.7734, 1.]);
    // 1.0357 is sometimes quoted for c4, but that is ε_{j0} rather than an
    // entry of the modified system: 1.0357 · 1.7734 != 7.8622.
    // The consistent value certified below is 7.8622 / 1.7734 = 4.4335.
    assert_close("A_bo* (c1,c2,c3,c5)", &[m.a_b(0), m.a_b(1), m.a_b(2), m.a_b(4)], &[2.2894, 1., 3.9654, 7.8622]);
    assert_close("A_bo*[c4]", &[m.a_b(3)], &[4.4335]);
    assert!((1.0357f64 * 1.7734 - 7.8622).abs() > 1.0);
    let r = oracle::entry_range(&pcs, d.eps_star * (1.0 + 1e-12), 3, 1e-13).unwrap();
    assert!(r.0 - 1e-6 <= m.a_b(3) && m.a_b(3) <= r.1 + 1e-6, "{r:?}");
    assert!(!(r.0 - 1e-6..=r.1 + 1e-6).contains(&1.0357));

    let w = best_weight_set(&pcs);
    assert_close("weights", w.as_slice(), &[0.2139, 0.4898, 0.1235, 0.1105, 0.0623]);
    assert_close(
        "eta",
        &deviation_profile(&pcs, &w),
        &[1.1447, 1.1447, 1.0087, 1.1278, 1.1447],
    );
}

#[test]
fn example3_full() {
    let pcs = example3();
    let d = diagnostics(&pcs);
    assert_eq!((d.i0, d.j0), (Some(0), Some(2)));
    assert_eq!(d.case, Case::I0J0);
    assert_close(
        "candidates",
        &[d.eps_i0.unwrap(), d.eps_j0.unwrap(), d.eps_i0_j0.unwrap()],
        &[1.2599, 1.4422, 1.5651],
    );
    assert_close("a_bw*", &[fixed_reference_values(&pcs, &d).a_bw], &[4.8990]);

    let iw = interval_weights(&pcs, &d);
    for i in 0..4 {
        assert!((iw.lower[i] - iw.upper[i]).abs() < 1e-12, "criterion {i} interval is not a point");
    }
    assert_close("w", &iw.lower, &[0.2701, 0.4228, 0.2206, 0.0863]);

    let m = best_modified_pcs(&pcs, &d);
    assert_close("A_bo*", m.best_to_other(), &[1.5651, 1., 1.9168, 4.8990]);
    assert_close("A_ow*", m.other_to_worst(), &[3.1302, 4.8990, 2.5558, 1.]);
    let w = best_weight_set(&pcs);
    assert_close("weights", w.as_slice(), &[0.2701, 0.4228, 0.2206, 0.0863]);
    assert_close("eta", &deviation_profile(&pcs, &w), &[1.5651, 1.2247, 1.5651, 1.2247]);
    assert_close("CR", &[consistency_ratio(&pcs, CrScale::Ratio)], &[1.5651 / 2.0]);
}

#[test]
fn consistency_index_table() {
    let ci = [1., 1.4142, 1.7320, 2., 2.2361, 2.4494, 2.6457, 2.8284, 3.];
    let ln_ci = [0., 0.3466, 0.5493, 0.6931, 0.8047, 0.8959, 0.9729, 1.0397, 1.0986];
    for a_bw in 1..=9 {
        let got = consistency_index(a_bw as f64).unwrap();
        assert!((got - ci[a_bw - 1]).abs() <= PRINTED, "CI({a_bw}) = {got}");
        assert!((got.ln() - ln_ci[a_bw - 1]).abs() <= PRINTED, "ln CI({a_bw})");
    }
}

#[test]
fn consistent_weights_from_rounded_modified_systems() {
    // Modified systems rounded to four decimals are consistent only to that precision.
    let loose = |pcs: &Pcs| {
        let total: f64 = pcs.other_to_worst().iter().sum();
        pcs.other_to_worst().iter().map(|v| v / total).collect::<Vec<_>>()
    };
    let ex3 = Pcs::from_one_based(2, 4, &[1.5651, 1., 1.9168, 4.8990], &[3.1302, 4.8990, 2.5558, 1.]).unwrap();
    assert_close("ex3", &loose(&ex3), &[0.2701, 0.4228, 0.2206, 0.0863]);
    let ex1 = Pcs::from_one_based(
        2,
        5,
        &[2.2209, 1., 4.0548, 3.1408, 9.8648],
        &[4.4418, 9.8648, 2.4329, 3.1408, 1.],
    )
    .unwrap();
    assert_close("ex1", &loose(&ex1), &[0.2127, 0.4724, 0.1165, 0.1504, 0.0479]);
    // four decimals do not meet the 1e-9 consistency precondition
    assert!(consistent_weights(&ex1).is_err());

    // computed to full precision they do
    let d = diagnostics(&example1());
    let m = best_modified_pcs(&example1(), &d);
    assert_close("ex1 exact", consistent_weights(&m).unwrap().as_slice(), &[0.2127, 0.4724, 0.1165, 0.1504, 0.0479]);
}
