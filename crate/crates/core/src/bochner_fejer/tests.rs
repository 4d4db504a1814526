use super::*;
use crate::error::Error;
use crate::exp_sum::{CoefficientProfile, ExpSum, Term};
use crate::function::{exponential, Func};
use crate::grid::TLadder;
use crate::metrics::{uniform_distance, weyl_distance, SupShiftGrid};
use crate::quadrature::QuadratureSpec;
use crate::strip::Strip;
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::{PI, SQRT_2};

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn unit_kernel(n: u32) -> BochnerFejerKernel {
    build_kernel(RationalBasis::new(vec![1.0]).unwrap(), &[n]).unwrap()
}

fn two_dim(n1: u32, n2: u32) -> BochnerFejerKernel {
    build_kernel(RationalBasis::new(vec![1.0, SQRT_2]).unwrap(), &[n1, n2]).unwrap()
}

/// `Π_j F_{N_j}(β_j t)` with `F_N(s) = 1 + 2 Σ_{r=1}^{N} (1 - r/(N+1)) cos(r s)`.
fn product_form(basis: &[f64], degrees: &[u32], t: f64) -> f64 {
    basis
        .iter()
        .zip(degrees)
        .map(|(&b, &n)| {
            1.0 + 2.0
                * (1..=n)
                    .map(|r| (1.0 - r as f64 / (n as f64 + 1.0)) * (r as f64 * b * t).cos())
                    .sum::<f64>()
        })
        .product()
}

#[test]
fn degree_one_weights() {
    let k = unit_kernel(1);
    let table: Vec<(i32, f64)> = k.entries().iter().map(|e| (e.tuple[0], e.weight)).collect();
    assert_eq!(table, vec![(-1, 0.5), (0, 1.0), (1, 0.5)]);
}

#[test]
fn degree_two_weights() {
    let k = unit_kernel(2);
    for (r, w) in [(0, 1.0), (1, 2.0 / 3.0), (-1, 2.0 / 3.0), (2, 1.0 / 3.0), (-2, 1.0 / 3.0)] {
        assert!((k.coefficient(&[r]) - w).abs() < 1e-15, "r = {r}");
    }
    assert_eq!(k.coefficient(&[3]), 0.0);
}

#[test]
fn structural_properties() {
    for k in [unit_kernel(3), two_dim(2, 3), two_dim(1, 1)] {
        assert_eq!(k.entries().len(), k.degrees().iter().map(|&n| 2 * n as usize + 1).product::<usize>());
        for e in k.entries() {
            assert!((0.0..=1.0).contains(&e.weight));
            let neg: Vec<i32> = e.tuple.iter().map(|r| -r).collect();
            assert_eq!(k.coefficient(&neg), e.weight);
        }
        let zero = vec![0; k.degrees().len()];
        assert_eq!(k.coefficient(&zero), 1.0);
        assert_eq!(k.weight_at(0.0), 1.0);
    }
}

#[test]
fn weights_grow_toward_one() {
    let basis = RationalBasis::new(vec![1.0, SQRT_2]).unwrap();
    let tuple = [2, -1];
    let mut last = 0.0;
    for n in [2, 4, 8, 16, 32, 64] {
        let w = build_kernel(basis.clone(), &[n, n]).unwrap().coefficient(&tuple);
        assert!(w > last);
        last = w;
    }
    assert!(last > 0.95 && last < 1.0);
}

#[test]
fn eval_examples() {
    let k = unit_kernel(1);
    assert!((k.eval(0.0).unwrap() - 2.0).abs() < 1e-15);
    assert!(k.eval(PI).unwrap().abs() < 1e-15);
}

#[test]
fn eval_is_even_and_nonnegative() {
    let k = two_dim(3, 2);
    for i in -10_000..=10_000 {
        let t = i as f64 * 0.01;
        let v = k.eval(t).unwrap();
        assert!(v >= -1e-9, "K({t}) = {v}");
        if i > 0 {
            assert!((v - k.eval(-t).unwrap()).abs() < 1e-9);
        }
    }
}

#[test]
fn eval_matches_product_form() {
    let basis = [1.0, SQRT_2, PI];
    let k = build_kernel(RationalBasis::new(basis.to_vec()).unwrap(), &[2, 3, 1]).unwrap();
    for i in 0..200 {
        let t = -7.3 + i as f64 * 0.0731;
        let want = product_form(&basis, &[2, 3, 1], t);
        assert!((k.eval(t).unwrap() - want).abs() < 1e-10, "t = {t}");
    }
}

#[test]
fn oversized_kernel_rejected() {
    let basis = RationalBasis::new(vec![1.0, SQRT_2, PI]).unwrap();
    assert!(matches!(build_kernel(basis.clone(), &[200, 200, 200]), Err(Error::KernelTooLarge(_))));
    assert!(build_kernel(basis.clone(), &[1, 0, 1]).is_err());
    assert!(build_kernel(basis, &[1, 1]).is_err());
}

#[test]
fn convolve_examples() {
    let k = unit_kernel(1);
    let s = ExpSum::from_constants(&[(0.0, c(5.0))]).unwrap();
    assert_eq!(k.convolve_exact(&s), s);
    let s = ExpSum::from_constants(&[(1.0, c(1.0))]).unwrap();
    assert_eq!(k.convolve_exact(&s), ExpSum::from_constants(&[(1.0, c(0.5))]).unwrap());
    let s = ExpSum::from_constants(&[(2.0, c(1.0))]).unwrap();
    assert!(k.convolve_exact(&s).is_empty());
}

#[test]
fn csv_table() {
    let csv = two_dim(1, 1).to_csv();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("r,lambda,weight"));
    assert_eq!(lines.count(), 9);
    assert!(csv.contains("0;0,0,1\n"));
}

fn sample_sum() -> ExpSum {
    ExpSum::from_constants(&[
        (1.0, c(1.0)),
        (SQRT_2, c(0.5)),
        (1.0 + SQRT_2, Complex64::new(0.0, -0.3)),
        (-2.0 * SQRT_2, c(0.25)),
    ])
    .unwrap()
}

fn leakage(s: &ExpSum, lambda: f64, t: f64) -> f64 {
    s.terms().iter().filter(|term| term.lambda != lambda).map(|term| term.coeff.eval(0.0).norm() / (term.lambda - lambda).abs()).sum::<f64>() / t
}

#[test]
fn approximation_matches_exact_convolution() {
    let k = two_dim(2, 2);
    let s = sample_sum();
    let ladder = TLadder::new(3.0, 3.0, 4).unwrap();
    let opts = ApproxOptions { family: ProfileFamily::Constant, ..ApproxOptions::default() };
    let approx = bf_approximate(&Func::from(s.clone()), &k, &[-0.5, 0.0, 0.5], &ladder, &QuadratureSpec::default(), &opts)
        .unwrap();
    let exact = k.convolve_exact(&s);
    for e in k.entries() {
        let got = approx.fourier_coefficient(e.lambda).eval(0.0);
        let want = exact.fourier_coefficient(e.lambda).eval(0.0);
        let bound = leakage(&s, e.lambda, ladder.last()) + 1e-9;
        assert!((got - want).norm() <= bound, "λ = {}: {} vs {} (bound {bound})", e.lambda, got, want);
    }
}

#[test]
fn constant_function_keeps_its_mean() {
    let k = unit_kernel(2);
    let ladder = TLadder::new(3.0, 3.0, 5).unwrap();
    let opts = ApproxOptions { family: ProfileFamily::Constant, ..ApproxOptions::default() };
    let approx =
        bf_approximate(&Func::constant(c(2.5)), &k, &[0.0, 1.0], &ladder, &QuadratureSpec::default(), &opts).unwrap();
    assert!((approx.mean_coefficient().eval(0.3) - c(2.5)).norm() < 1e-12);
    for lambda in [-2.0, -1.0, 1.0, 2.0] {
        assert!(approx.fourier_coefficient(lambda).eval(0.0).norm() <= 2.5 / (lambda.abs() * ladder.last()));
    }
}

#[test]
fn holomorphic_profiles_are_recovered() {
    let k = unit_kernel(2);
    let f = exponential(1.0).add(&exponential(-2.0).scale(c(0.5)));
    // windows that hold whole periods remove leakage
    let ladder = TLadder::new(PI, 3.0, 3).unwrap();
    let approx =
        bf_approximate(&f, &k, &[-0.3, 0.0, 0.4], &ladder, &QuadratureSpec::default(), &ApproxOptions::default())
            .unwrap();
    assert_eq!(approx.strip(), &Strip::closed(-0.3, 0.4).unwrap());
    let a1 = approx.fourier_coefficient(1.0);
    assert!(matches!(a1, CoefficientProfile::Exponential { .. }));
    assert!((a1.eval(0.2) - c(2.0 / 3.0 * (-0.2f64).exp())).norm() < 1e-9);
    let a2 = approx.fourier_coefficient(-2.0);
    assert!((a2.eval(-0.1) - c(0.5 / 3.0 * (-0.2f64).exp())).norm() < 1e-9);
}

#[test]
fn fit_residual_is_reported() {
    let k = unit_kernel(1);
    let f = Func::from_fn(|z| c(z.y * z.y));
    let ladder = TLadder::new(PI, 3.0, 2).unwrap();
    let err = bf_approximate(&f, &k, &[0.0, 0.5, 1.0], &ladder, &QuadratureSpec::default(), &ApproxOptions::default());
    assert!(matches!(err, Err(Error::FitResidual { .. })));
    let opts = ApproxOptions { family: ProfileFamily::Polynomial { degree: 2 }, ..ApproxOptions::default() };
    let ok = bf_approximate(&f, &k, &[0.0, 0.5, 1.0], &ladder, &QuadratureSpec::default(), &opts).unwrap();
    assert!((ok.mean_coefficient().eval(0.7) - c(0.49)).norm() < 1e-9);
}

#[test]
fn empty_heights_rejected() {
    let k = unit_kernel(1);
    let r = bf_approximate(&Func::zero(), &k, &[], &TLadder::default(), &QuadratureSpec::default(), &ApproxOptions::default());
    assert!(matches!(r, Err(Error::EmptyGrid)));
}

fn arb_sum() -> impl Strategy<Value = ExpSum> {
    prop::collection::vec((-2i32..=2, -2i32..=2, -1.0..1.0f64, -1.0..1.0f64), 1..6).prop_map(|raw| {
        let mut seen = std::collections::BTreeSet::new();
        let terms: Vec<Term> = raw
            .into_iter()
            .filter(|(a, b, _, _)| seen.insert((*a, *b)))
            .map(|(a, b, re, im)| {
                Term::new(a as f64 + b as f64 * SQRT_2, CoefficientProfile::constant(Complex64::new(re, im)))
            })
            .collect();
        ExpSum::new(terms, Strip::plane()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn convolution_contracts_uniform_norm(s in arb_sum(), n1 in 1u32..4, n2 in 1u32..4) {
        let k = two_dim(n1, n2);
        let line = Strip::real_axis();
        let grid = SupShiftGrid::over(&line, -20.0, 20.0, 0.05, 1).unwrap();
        let conv = k.convolve_exact(&s);
        let before = uniform_distance(&Func::from(s), &Func::zero(), &line, &grid).unwrap();
        let after = uniform_distance(&Func::from(conv), &Func::zero(), &line, &grid).unwrap();
        // the sampled sup of s can miss its true sup by one grid step of slope
        let slack = 0.05 * 5.0 * 4.0;
        prop_assert!(after <= before + slack, "{after} > {before}");
    }

    #[test]
    fn convolution_contracts_weyl_norm(s in arb_sum()) {
        let k = two_dim(2, 1);
        let line = Strip::real_axis();
        let grid = SupShiftGrid::over(&line, 0.0, 2.0, 0.5, 1).unwrap();
        let ladder = TLadder::new(9.0, 3.0, 2).unwrap();
        let q = QuadratureSpec::default();
        let conv = k.convolve_exact(&s);
        let before = weyl_distance(&Func::from(s), &Func::zero(), 2.0, &line, &grid, &ladder, &q).unwrap();
        let after = weyl_distance(&Func::from(conv), &Func::zero(), 2.0, &line, &grid, &ladder, &q).unwrap();
        for (a, b) in after.values().iter().zip(before.values()) {
            // cross terms of |s|^2 average out at rate 1/T
            let tol = 4.0 * 5.0 * 5.0 / (2.0 * 9.0 * (SQRT_2 - 1.0));
            prop_assert!(a <= &(b + tol));
        }
    }

    #[test]
    fn kernel_is_nonnegative(n1 in 1u32..6, n2 in 1u32..6, t in -100.0..100.0f64) {
        prop_assert!(two_dim(n1, n2).eval(t).unwrap() >= -1e-9);
    }
}
