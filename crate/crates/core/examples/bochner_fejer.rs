//! Bochner-Fejér kernels over a rational basis and the approximation of an
//! exponential sum through estimated Fourier coefficients.

use apstrip::bochner_fejer::{bf_approximate, build_kernel, ApproxOptions, ProfileFamily, RationalBasis};
use apstrip::exp_sum::{CoefficientProfile, ExpSum, Term};
use apstrip::{Func, QuadratureSpec, Strip, TLadder};
use std::f64::consts::{PI, SQRT_2};

fn holomorphic_sum(lambdas: &[f64], strip: Strip) -> apstrip::Result<ExpSum> {
    let terms = lambdas.iter().map(|&l| Term::new(l, CoefficientProfile::exponential(1.0, -l))).collect();
    ExpSum::new(terms, strip)
}

fn main() -> apstrip::Result<()> {
    let quad = QuadratureSpec::default();
    let kernel = build_kernel(RationalBasis::new(vec![1.0, SQRT_2])?, &[2, 2])?;
    println!("{} frequencies in the support", kernel.entries().len());
    print!("{}", kernel.to_csv());
    for t in [0.0, 0.5, 1.0, 3.0] {
        println!("K({t}) = {:.6}", kernel.eval(t)?);
    }

    // integer frequencies and windows T = kπ: the mean values are exact, so
    // the holomorphic profiles a·e^{-λy} are recovered across heights
    let strip = Strip::closed(-1.0, 1.0)?;
    let s = holomorphic_sum(&[0.0, 1.0, 2.0, 3.0], strip)?;
    let integer = build_kernel(RationalBasis::new(vec![1.0])?, &[4])?;
    let exact = integer.convolve_exact(&s);
    let ladder = TLadder::new(PI, 3.0, 3)?;
    let heights = [-1.0, -0.5, 0.0, 0.5, 1.0];
    let approx = bf_approximate(&Func::from(s), &integer, &heights, &ladder, &quad, &ApproxOptions::default())?;
    for t in exact.terms() {
        println!(
            "λ = {:>2}: exact {:.6}  approximated {:.6} (at y = 0.5)",
            t.lambda,
            t.coeff.eval(0.5),
            approx.fourier_coefficient(t.lambda).eval(0.5)
        );
    }

    // incommensurate frequencies: coefficients at a single height, with the
    // leakage of neighbouring frequencies decaying like 1/T
    let s = holomorphic_sum(&[0.0, 1.0, SQRT_2, 1.0 + SQRT_2], strip)?;
    let exact = kernel.convolve_exact(&s);
    let constant = ApproxOptions { family: ProfileFamily::Constant, ..ApproxOptions::default() };
    for last in [81.0, 729.0] {
        let approx = bf_approximate(&Func::from(s.clone()), &kernel, &[0.0], &TLadder::new(last, 3.0, 1)?, &quad, &constant)?;
        let worst = kernel
            .entries()
            .iter()
            .map(|e| (approx.fourier_coefficient(e.lambda).eval(0.0) - exact.fourier_coefficient(e.lambda).eval(0.0)).norm())
            .fold(0.0, f64::max);
        println!("T = {last:>3}: max coefficient error {worst:.3e}");
    }
    Ok(())
}
