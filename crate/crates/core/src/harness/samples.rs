use crate::exp_sum::{CoefficientProfile, ExpSum, Term};
use crate::strip::Strip;
use num_complex::Complex64;
use rand::Rng;

/// A sum of `terms` exponentials with distinct frequencies drawn from
/// `[-max_frequency, max_frequency]` and coefficients from the unit square.
/// With `holomorphic` set each coefficient is `c e^{-λy}`, so the sum is
/// `Σ c e^{iλz}`; otherwise coefficients are constant in `y`.
pub fn random_exp_sum<R: Rng>(rng: &mut R, terms: usize, max_frequency: f64, holomorphic: bool) -> ExpSum {
    let mut out: Vec<Term> = Vec::with_capacity(terms);
    while out.len() < terms {
        let lambda = rng.gen_range(-max_frequency..=max_frequency);
        if out.iter().any(|t| (t.lambda - lambda).abs() < 1e-3) {
            continue;
        }
        let c = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let coeff = if holomorphic {
            CoefficientProfile::exponential(c, Complex64::new(-lambda, 0.0))
        } else {
            CoefficientProfile::constant(c)
        };
        out.push(Term::new(lambda, coeff));
    }
    ExpSum::new(out, Strip::plane()).expect("distinct finite frequencies")
}
