use super::*;
use crate::exp_sum::ExpSum;
use crate::function::{exponential, gaussian};
use crate::strip::Point;
use proptest::prelude::*;
use std::f64::consts::{E, PI};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn line() -> Strip {
    Strip::real_axis()
}

fn small_ladder() -> TLadder {
    TLadder::new(3.0, 3.0, 3).unwrap()
}

#[test]
fn identical_functions_are_at_distance_zero() {
    let f = gaussian(1.0, 0.2).add(&exponential(0.7));
    let s = Strip::closed(-0.5, 0.5).unwrap();
    let grid = SupShiftGrid::over(&s, -1.0, 1.0, 0.1, 2).unwrap();
    let q = QuadratureSpec::default();
    assert_eq!(uniform_distance(&f, &f, &s, &grid).unwrap(), 0.0);
    assert_eq!(stepanov_distance(&f, &f, 2.0, &s, &grid, &q).unwrap(), 0.0);
    let w = weyl_distance(&f, &f, 1.0, &s, &grid, &small_ladder(), &q).unwrap();
    assert!(w.values().iter().all(|&v| v == 0.0));
    let b = besicovitch_distance(&f, &f, 3.0, &s, &grid.y, &small_ladder(), &q).unwrap();
    assert!(b.values().iter().all(|&v| v == 0.0));
}

#[test]
fn uniform_of_exponential() {
    let s = Strip::closed(0.0, 1.0).unwrap();
    let grid = SupShiftGrid::over(&s, 0.0, 2.0 * PI, 0.01, 100).unwrap();
    let d = uniform_distance(&exponential(1.0), &Func::zero(), &s, &grid).unwrap();
    assert!((d - 1.0).abs() < 1e-12);
}

#[test]
fn stepanov_of_unimodular_functions() {
    let q = QuadratureSpec::default();
    let grid = SupShiftGrid::over(&line(), 0.0, 5.0, 0.1, 1).unwrap();
    for p in [1.0, 2.0, 3.5] {
        let d = stepanov_distance(&Func::constant(c(1.0)), &Func::zero(), p, &line(), &grid, &q).unwrap();
        assert!((d - 1.0).abs() < 1e-12, "p = {p}: {d}");
    }
    let d = stepanov_distance(&exponential(1.0), &Func::zero(), 1.0, &line(), &grid, &q).unwrap();
    assert!((d - 1.0).abs() < 1e-12);
}

#[test]
fn gaussian_is_weyl_null() {
    let s = Strip::closed(-1.0, 1.0).unwrap();
    let grid = SupShiftGrid::over(&s, -1.0, 1.0, 0.1, 8).unwrap();
    let ladder = TLadder::new(10.0, 10.0, 3).unwrap();
    let w = weyl_distance(&gaussian(1.0, 0.0), &Func::zero(), 1.0, &s, &grid, &ladder, &QuadratureSpec::default())
        .unwrap();
    for r in &w.rungs {
        assert!(r.value <= E * PI.sqrt() / (2.0 * r.t) + 1e-9, "{r:?}");
    }
    assert!(w.rungs[2].value <= 2.42e-3);
    assert!(w.values().windows(2).all(|p| p[1] < p[0]));
    assert!(w.surrogate <= E * PI.sqrt() / 200.0 + 1e-9);
}

#[test]
fn besicovitch_is_below_weyl_on_shared_nodes() {
    let f = gaussian(0.3, 2.0).add(&exponential(0.5).scale(c(0.3)));
    let s = Strip::closed(-0.5, 0.5).unwrap();
    let grid = SupShiftGrid::over(&s, -2.0, 2.0, 0.1, 4).unwrap();
    let q = QuadratureSpec::default();
    for p in [1.0, 2.0] {
        let w = weyl_distance(&f, &Func::zero(), p, &s, &grid, &small_ladder(), &q).unwrap();
        let b = besicovitch_distance(&f, &Func::zero(), p, &s, &grid.y, &small_ladder(), &q).unwrap();
        for (rb, rw) in b.rungs.iter().zip(&w.rungs) {
            assert!(rb.value <= rw.value + 1e-12, "{rb:?} {rw:?}");
        }
    }
}

#[test]
fn mean_of_constant_and_of_pure_frequency() {
    let q = QuadratureSpec::default();
    let ladder = TLadder::new(3.0, 3.0, 5).unwrap();
    let shifts = ArithGrid::span(0.0, 1.0, 0.1).unwrap();
    let m = mean_value(&Func::constant(Complex64::new(2.0, -1.0)), 0.0, &ladder, &q, &shifts).unwrap();
    for (_, v) in &m.rungs {
        assert!((v - Complex64::new(2.0, -1.0)).norm() < 1e-12);
    }
    let m = mean_value(&exponential(1.0), 0.0, &ladder, &q, &shifts).unwrap();
    for (t, v) in &m.rungs {
        assert!((v - c(t.sin() / t)).norm() < 1e-8, "T = {t}: {v}");
    }
    assert!(m.surrogate.norm() < 1.0 / 243.0 + 1e-8);
}

#[test]
fn interior_bound_examples() {
    assert!((interior_sup_bound(PI, 1.0, 1.0).unwrap() - 2.0).abs() < 1e-15);
    assert!(interior_sup_bound(1.0, 1.0, 2.0).unwrap() < interior_sup_bound(1.0, 1.0, 1.0).unwrap());
    assert!(interior_sup_bound(0.0, 1.0, 1.0).is_err());
    assert!(interior_sup_bound(1.0, -1.0, 1.0).is_err());
}

#[test]
fn interior_bound_dominates_exponential() {
    // e^{iz} on [-1, 1]: windowed L1 mean with T0 = 1 is at most e (at y = -1).
    let outer = Strip::closed(-1.0, 1.0).unwrap();
    let q = QuadratureSpec::default();
    let f = exponential(1.0);
    let heights = ArithGrid::linspace(-1.0, 1.0, 9).unwrap();
    let mut c_mean = 0.0f64;
    for y in heights.points() {
        let v = crate::quadrature::window_integral(&f, Point::new(0.0, y), 1.0, 1.0, &q).unwrap() / 2.0;
        c_mean = c_mean.max(v);
    }
    assert!((c_mean - E).abs() < 1e-9);
    let bound = interior_sup_bound(c_mean, 1.0, 0.5).unwrap();
    assert!((bound - 8.0 * E / PI).abs() < 1e-8);
    let inner = outer.substrip(-0.5, 0.5).unwrap();
    let sup = crate::quadrature::grid_sup(&f, &inner, (0.0, 2.0 * PI), 0.01, 0.01).unwrap().value;
    assert!((sup - 0.5f64.exp()).abs() < 1e-12);
    assert!(bound >= sup);
}

#[test]
fn open_substrip_rejected() {
    let s = Strip::open(-1.0, 1.0).unwrap();
    let grid = SupShiftGrid::over(&Strip::real_axis(), 0.0, 1.0, 0.5, 1).unwrap();
    assert!(uniform_distance(&Func::zero(), &Func::zero(), &s, &grid).is_err());
}

#[test]
fn grid_outside_substrip_rejected() {
    let s = Strip::closed(0.0, 1.0).unwrap();
    let grid = SupShiftGrid::over(&Strip::closed(-1.0, 1.0).unwrap(), 0.0, 1.0, 0.5, 2).unwrap();
    assert!(uniform_distance(&Func::zero(), &Func::zero(), &s, &grid).is_err());
}

fn arb_sum() -> impl Strategy<Value = ExpSum> {
    prop::collection::btree_map(-12i32..12, (-2.0f64..2.0, -2.0f64..2.0), 1..5).prop_map(|m| {
        let terms: Vec<_> = m.into_iter().map(|(k, (re, im))| (k as f64 * 0.61, Complex64::new(re, im))).collect();
        ExpSum::from_constants(&terms).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn exponent_ordering_on_shared_nodes(s in arb_sum(), b in -1.0f64..1.0) {
        let f = Func::new(s).add(&gaussian(1.0, b));
        let strip = Strip::closed(-0.25, 0.25).unwrap();
        let grid = SupShiftGrid::over(&strip, -1.0, 1.0, 0.2, 2).unwrap();
        let q = QuadratureSpec::default();
        let ladder = TLadder::new(1.0, 3.0, 3).unwrap();
        let mut prev: Option<(f64, MetricEstimate, MetricEstimate)> = None;
        for p in [1.0, 2.0, 4.0] {
            let st = stepanov_distance(&f, &Func::zero(), p, &strip, &grid, &q).unwrap();
            let w = weyl_distance(&f, &Func::zero(), p, &strip, &grid, &ladder, &q).unwrap();
            let bz = besicovitch_distance(&f, &Func::zero(), p, &strip, &grid.y, &ladder, &q).unwrap();
            if let Some((pst, pw, pb)) = &prev {
                prop_assert!(*pst <= st + 1e-9);
                for (a, b) in pw.rungs.iter().zip(&w.rungs) { prop_assert!(a.value <= b.value + 1e-9); }
                for (a, b) in pb.rungs.iter().zip(&bz.rungs) { prop_assert!(a.value <= b.value + 1e-9); }
            }
            prev = Some((st, w, bz));
        }
    }

    #[test]
    fn exp_sum_means_converge_at_closed_form_rate(s in arb_sum(), y in -0.5f64..0.5) {
        let ladder = TLadder::new(3.0, 3.0, 4).unwrap();
        let q = QuadratureSpec::default();
        let m = mean_value(&Func::new(s.clone()), y, &ladder, &q, &ArithGrid::single(0.0)).unwrap();
        let c0 = s.mean_coefficient().eval(y);
        let leak: f64 = s.terms().iter().filter(|t| t.lambda != 0.0)
            .map(|t| t.coeff.eval(y).norm() / t.lambda.abs()).sum();
        for (t, v) in &m.rungs {
            prop_assert!((v - c0).norm() <= 2.0 * leak / (2.0 * t) + 1e-9, "T = {}", t);
        }
    }
}
