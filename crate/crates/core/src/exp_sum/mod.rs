//! Finite exponential sums `Σ c_n(y) e^{i λ_n x}` with distinct real
//! frequencies and closed-form coefficient profiles.

mod profile;

pub use profile::CoefficientProfile;

use crate::error::{Error, Result};
use crate::function::Evaluable;
use crate::strip::{Point, Strip};
use crate::summation::ComplexSum;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// One term `c(y) e^{i λ x}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Term {
    pub lambda: f64,
    pub coeff: CoefficientProfile,
}

impl Term {
    pub fn new(lambda: f64, coeff: CoefficientProfile) -> Self {
        Self { lambda, coeff }
    }
}

/// A finite exponential sum on a strip, terms sorted by ascending frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpSum {
    terms: Vec<Term>,
    strip: Strip,
}

impl ExpSum {
    /// Builds a sum; frequencies must be finite and pairwise distinct.
    pub fn new(mut terms: Vec<Term>, strip: Strip) -> Result<Self> {
        if let Some(t) = terms.iter().find(|t| !t.lambda.is_finite()) {
            return Err(Error::param("lambda", format!("frequency {} is not finite", t.lambda)));
        }
        terms.sort_by(|a, b| a.lambda.total_cmp(&b.lambda));
        if let Some(w) = terms.windows(2).find(|w| w[0].lambda == w[1].lambda) {
            return Err(Error::DuplicateFrequency(w[0].lambda));
        }
        Ok(Self { terms, strip })
    }

    /// Sum with constant coefficients on the whole plane.
    pub fn from_constants(terms: &[(f64, Complex64)]) -> Result<Self> {
        let terms = terms.iter().map(|&(l, c)| Term::new(l, CoefficientProfile::constant(c))).collect();
        Self::new(terms, Strip::plane())
    }

    pub fn empty(strip: Strip) -> Self {
        Self { terms: Vec::new(), strip }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn strip(&self) -> &Strip {
        &self.strip
    }

    pub fn frequencies(&self) -> impl Iterator<Item = f64> + '_ {
        self.terms.iter().map(|t| t.lambda)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn with_strip(mut self, strip: Strip) -> Self {
        self.strip = strip;
        self
    }

    fn eval_unchecked(&self, z: Point) -> Complex64 {
        let mut acc = ComplexSum::new();
        for t in &self.terms {
            acc.add(t.coeff.eval(z.y) * Complex64::cis(t.lambda * z.x));
        }
        acc.total()
    }

    /// `Σ c_n(y) e^{i λ_n x}`; fails outside the strip.
    pub fn eval(&self, z: Point) -> Result<Complex64> {
        self.strip.check(z)?;
        Ok(self.eval_unchecked(z))
    }

    /// The coefficient at `e^{i 0 x}`, i.e. the mean value in `x`.
    pub fn mean_coefficient(&self) -> CoefficientProfile {
        self.fourier_coefficient(0.0)
    }

    /// The coefficient at `e^{i λ x}`, zero when `λ` is not a frequency.
    pub fn fourier_coefficient(&self, lambda: f64) -> CoefficientProfile {
        self.terms
            .binary_search_by(|t| t.lambda.total_cmp(&lambda))
            .ok()
            // -0.0 and 0.0 compare unequal under total_cmp
            .or_else(|| self.terms.iter().position(|t| t.lambda == lambda))
            .map(|i| self.terms[i].coeff.clone())
            .unwrap_or_else(CoefficientProfile::zero)
    }

    /// The sum of `z -> s(z + τ)`: each coefficient picks up `e^{i λ τ}`.
    pub fn shift(&self, tau: f64) -> ExpSum {
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(t.lambda, t.coeff.scale(Complex64::cis(t.lambda * tau))))
            .collect();
        ExpSum { terms, strip: self.strip }
    }

    pub fn scale(&self, s: Complex64) -> ExpSum {
        let terms = self.terms.iter().map(|t| Term::new(t.lambda, t.coeff.scale(s))).collect();
        ExpSum { terms, strip: self.strip }
    }

    /// Termwise sum; the strip is kept from `self`.
    pub fn add(&self, other: &ExpSum) -> Result<ExpSum> {
        let mut terms = self.terms.clone();
        for t in &other.terms {
            match terms.iter_mut().find(|u| u.lambda == t.lambda) {
                Some(u) => u.coeff = u.coeff.add(&t.coeff)?,
                None => terms.push(t.clone()),
            }
        }
        ExpSum::new(terms, self.strip)
    }

    /// Serialises the terms as a JSON array of `{lambda, coeff: {kind, parameters}}`.
    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string(&self.terms).map_err(|e| Error::Json(e.to_string()))
    }

    pub fn from_json(text: &str, strip: Strip) -> Result<Self> {
        let terms: Vec<Term> = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        ExpSum::new(terms, strip)
    }
}

impl Evaluable for ExpSum {
    /// NaN outside the strip.
    fn eval(&self, z: Point) -> Complex64 {
        if self.strip.contains(z) {
            self.eval_unchecked(z)
        } else {
            Complex64::new(f64::NAN, f64::NAN)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eval_examples() {
        let s = ExpSum::from_constants(&[(0.0, c(2.0, 0.0))]).unwrap();
        assert_eq!(s.eval(Point::new(7.0, 0.0)).unwrap(), c(2.0, 0.0));
        let s = ExpSum::from_constants(&[(1.0, c(1.0, 0.0))]).unwrap();
        assert!((s.eval(Point::new(PI / 2.0, 0.0)).unwrap() - c(0.0, 1.0)).norm() < 1e-15);
        let s = ExpSum::from_constants(&[(0.0, c(2.0, 0.0)), (1.0, c(3.0, 0.0))]).unwrap();
        assert_eq!(s.eval(Point::new(0.0, 0.0)).unwrap(), c(5.0, 0.0));
    }

    #[test]
    fn eval_outside_strip_is_domain_error() {
        let s = ExpSum::from_constants(&[(1.0, c(1.0, 0.0))]).unwrap().with_strip(Strip::closed(0.0, 1.0).unwrap());
        assert!(matches!(s.eval(Point::new(0.0, 2.0)), Err(Error::OutsideStrip { .. })));
        assert!(Evaluable::eval(&s, Point::new(0.0, 2.0)).re.is_nan());
    }

    #[test]
    fn duplicate_frequencies_rejected() {
        let err = ExpSum::from_constants(&[(1.0, c(1.0, 0.0)), (1.0, c(2.0, 0.0))]).unwrap_err();
        assert_eq!(err, Error::DuplicateFrequency(1.0));
    }

    #[test]
    fn canonical_order() {
        let a = ExpSum::from_constants(&[(2.0, c(1.0, 0.0)), (-1.0, c(2.0, 0.0))]).unwrap();
        let b = ExpSum::from_constants(&[(-1.0, c(2.0, 0.0)), (2.0, c(1.0, 0.0))]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.frequencies().collect::<Vec<_>>(), vec![-1.0, 2.0]);
    }

    #[test]
    fn mean_coefficient_examples() {
        let s = ExpSum::from_constants(&[(0.0, c(2.0, 0.0)), (1.0, c(3.0, 0.0))]).unwrap();
        assert_eq!(s.mean_coefficient(), CoefficientProfile::constant(2.0));
        let s = ExpSum::from_constants(&[(1.0, c(3.0, 0.0))]).unwrap();
        assert!(s.mean_coefficient().is_zero());
        let sq = CoefficientProfile::polynomial(vec![0.0.into(), 0.0.into(), 1.0.into()]);
        let s = ExpSum::new(vec![Term::new(0.0, sq.clone())], Strip::plane()).unwrap();
        assert_eq!(s.mean_coefficient(), sq);
    }

    #[test]
    fn fourier_coefficient_examples() {
        let s = ExpSum::from_constants(&[(2.0, c(5.0, 0.0))]).unwrap();
        assert_eq!(s.fourier_coefficient(2.0), CoefficientProfile::constant(5.0));
        assert!(s.fourier_coefficient(3.0).is_zero());
        let s = ExpSum::from_constants(&[(0.0, c(1.0, 0.0)), (1.0, c(1.0, 0.0))]).unwrap();
        assert_eq!(s.fourier_coefficient(0.0), CoefficientProfile::constant(1.0));
        assert_eq!(s.fourier_coefficient(-0.0), CoefficientProfile::constant(1.0));
    }

    #[test]
    fn shift_examples() {
        let s = ExpSum::from_constants(&[(0.0, c(2.0, 0.0))]).unwrap();
        assert_eq!(s.shift(5.0), s);
        let s = ExpSum::from_constants(&[(1.0, c(1.0, 0.0))]).unwrap().shift(PI);
        assert!((s.terms()[0].coeff.eval(0.0) - c(-1.0, 0.0)).norm() < 1e-15);
        let s = ExpSum::from_constants(&[(2.0, c(0.0, 1.0))]).unwrap().shift(PI / 4.0);
        assert!((s.terms()[0].coeff.eval(0.0) - c(-1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn json_layout() {
        let s = ExpSum::from_constants(&[(0.5, c(1.0, -2.0))]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&s.to_json().unwrap()).unwrap();
        assert_eq!(v[0]["lambda"], 0.5);
        assert_eq!(v[0]["coeff"]["kind"], "constant");
        assert_eq!(v[0]["coeff"]["parameters"]["value"][1], -2.0);
    }

    fn arb_sum() -> impl Strategy<Value = ExpSum> {
        prop::collection::btree_map(-50i32..50, (-10.0f64..10.0, -10.0f64..10.0), 0..8).prop_map(|m| {
            let terms: Vec<_> = m.into_iter().map(|(k, (re, im))| (k as f64 * 0.37, c(re, im))).collect();
            ExpSum::from_constants(&terms).unwrap()
        })
    }

    proptest! {
        #[test]
        fn constant_json_round_trip_is_bit_exact(s in arb_sum()) {
            let back = ExpSum::from_json(&s.to_json().unwrap(), Strip::plane()).unwrap();
            for (a, b) in s.terms().iter().zip(back.terms()) {
                prop_assert_eq!(a.lambda.to_bits(), b.lambda.to_bits());
                let (ca, cb) = (a.coeff.eval(0.0), b.coeff.eval(0.0));
                prop_assert_eq!(ca.re.to_bits(), cb.re.to_bits());
                prop_assert_eq!(ca.im.to_bits(), cb.im.to_bits());
            }
            prop_assert_eq!(back.len(), s.len());
        }

        #[test]
        fn shift_commutes_with_evaluation(s in arb_sum(), tau in -20.0f64..20.0, x in -20.0f64..20.0) {
            let lhs = s.shift(tau).eval(Point::real(x)).unwrap();
            let rhs = s.eval(Point::real(x + tau)).unwrap();
            prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + s.len() as f64 * 15.0));
        }

        #[test]
        fn mean_coefficient_is_shift_invariant(s in arb_sum(), tau in -100.0f64..100.0) {
            prop_assert_eq!(s.shift(tau).mean_coefficient(), s.mean_coefficient());
        }

        #[test]
        fn fourier_coefficient_is_linear(a in arb_sum(), b in arb_sum(), k in -50i32..50, re in -3.0f64..3.0) {
            let lambda = k as f64 * 0.37;
            let s = c(re, 0.5);
            let combined = a.scale(s).add(&b).unwrap();
            let lhs = combined.fourier_coefficient(lambda).eval(0.0);
            let rhs = s * a.fourier_coefficient(lambda).eval(0.0) + b.fourier_coefficient(lambda).eval(0.0);
            prop_assert!((lhs - rhs).norm() < 1e-12);
        }

        #[test]
        fn zero_frequency_term_is_constant_in_x(v in -5.0f64..5.0, x in -1e3f64..1e3) {
            let s = ExpSum::from_constants(&[(0.0, c(v, 1.0))]).unwrap();
            prop_assert_eq!(s.eval(Point::real(x)).unwrap(), c(v, 1.0));
        }
    }
}
