//! Exponential sums with y-dependent coefficients: evaluation, algebra,
//! Fourier coefficients, mean values and JSON.

use apstrip::exp_sum::{CoefficientProfile, ExpSum, Term};
use apstrip::metrics::mean_value;
use apstrip::{ArithGrid, Complex64, Func, Point, QuadratureSpec, Strip, TLadder};

fn main() -> apstrip::Result<()> {
    let strip = Strip::closed(-1.0, 1.0)?;
    // a holomorphic sum: coefficient a·e^{-λy} for frequency λ
    let s = ExpSum::new(
        vec![
            Term::new(0.0, CoefficientProfile::constant(0.5)),
            Term::new(1.0, CoefficientProfile::exponential(1.0, -1.0)),
            Term::new(std::f64::consts::SQRT_2, CoefficientProfile::exponential(Complex64::new(0.0, 2.0), -std::f64::consts::SQRT_2)),
        ],
        strip,
    )?;
    for z in [Point::real(0.0), Point::new(1.5, 0.5), Point::new(-3.0, -1.0)] {
        println!("f({:+}{:+}i) = {:.6}", z.x, z.y, s.eval(z)?);
    }

    let shifted = s.shift(std::f64::consts::PI);
    println!("a(√2) after shift by π at y=0: {:.6}", shifted.fourier_coefficient(std::f64::consts::SQRT_2).eval(0.0));
    let doubled = s.add(&s)?;
    println!("terms in f + f: {}, mean coefficient {:?}", doubled.len(), doubled.mean_coefficient().eval(0.0));

    let ladder = TLadder::new(10.0, 3.0, 4)?;
    let m = mean_value(&Func::from(s.clone()), 0.5, &ladder, &QuadratureSpec::default(), &ArithGrid::span(0.0, 5.0, 1.0)?)?;
    for (t, v) in &m.rungs {
        println!("T = {t:>5}: mean along y=0.5 = {v:.6}");
    }

    let json = s.to_json()?;
    println!("{json}");
    let back = ExpSum::from_json(&json, strip)?;
    assert_eq!(back, s);
    Ok(())
}
