use super::kernel::BochnerFejerKernel;
use crate::error::{Error, Result};
use crate::exp_sum::{CoefficientProfile, ExpSum, Term};
use crate::function::Func;
use crate::grid::TLadder;
use crate::quadrature::QuadratureSpec;
use crate::strip::{Point, Strip};
use crate::summation::ComplexSum;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rayon::prelude::*;

/// Family the estimated coefficients `a_λ(y)` are fitted to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProfileFamily {
    Constant,
    Polynomial { degree: usize },
    /// `a e^{-λ y}`: the shape every coefficient of a holomorphic function has.
    Holomorphic,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxOptions {
    pub family: ProfileFamily,
    /// Largest accepted least-squares residual, relative to the largest
    /// estimated coefficient.
    pub tolerance: f64,
}

impl Default for ApproxOptions {
    fn default() -> Self {
        Self { family: ProfileFamily::Holomorphic, tolerance: 1e-6 }
    }
}

/// Bohr-Fourier coefficient estimates `(1/2T) ∫_{-T}^{T} f(t + iy) e^{-iλt} dt`
/// for every `λ`, at one height. `f` is evaluated once per node.
pub fn fourier_estimates(f: &Func, y: f64, lambdas: &[f64], t: f64, quad: &QuadratureSpec) -> Result<Vec<Complex64>> {
    let rule = quad.window_rule(2.0 * t);
    let nodes: Vec<(f64, Complex64)> = rule
        .offsets
        .par_iter()
        .zip(&rule.weights)
        .map(|(off, &w)| {
            let x = -t + off;
            let v = f.eval(Point::new(x, y));
            if v.re.is_finite() && v.im.is_finite() {
                Ok((x, v * w))
            } else {
                Err(Error::NonFinite { x, y })
            }
        })
        .collect::<Result<_>>()?;
    Ok(lambdas
        .par_iter()
        .map(|&lambda| {
            let mut acc = ComplexSum::new();
            for &(x, wv) in &nodes {
                acc.add(wv * Complex64::cis(-lambda * x));
            }
            acc.total() / (2.0 * t)
        })
        .collect())
}

fn basis_row(family: ProfileFamily, lambda: f64, y: f64) -> Vec<f64> {
    match family {
        ProfileFamily::Constant => vec![1.0],
        ProfileFamily::Polynomial { degree } => (0..=degree).map(|k| y.powi(k as i32)).collect(),
        ProfileFamily::Holomorphic => vec![(-lambda * y).exp()],
    }
}

/// Least-squares fit of complex samples; returns the profile and the
/// absolute residual `||A c - a||`.
pub fn fit_profile(family: ProfileFamily, lambda: f64, ys: &[f64], samples: &[Complex64]) -> (CoefficientProfile, f64) {
    let rows: Vec<Vec<f64>> = ys.iter().map(|&y| basis_row(family, lambda, y)).collect();
    let cols = rows[0].len();
    let a = DMatrix::from_fn(ys.len(), cols, |i, j| rows[i][j]);
    let solve = |b: DVector<f64>| -> DVector<f64> {
        a.clone().svd(true, true).solve(&b, 1e-14).unwrap_or_else(|_| DVector::zeros(cols))
    };
    let re = solve(DVector::from_iterator(ys.len(), samples.iter().map(|s| s.re)));
    let im = solve(DVector::from_iterator(ys.len(), samples.iter().map(|s| s.im)));
    let coeffs: Vec<Complex64> = re.iter().zip(im.iter()).map(|(&r, &i)| Complex64::new(r, i)).collect();
    let mut err = 0.0;
    for (row, s) in rows.iter().zip(samples) {
        let fitted: Complex64 = row.iter().zip(&coeffs).map(|(b, c)| c * b).sum();
        err += (fitted - s).norm_sqr();
    }
    let residual = err.sqrt();
    let profile = match family {
        ProfileFamily::Constant => CoefficientProfile::constant(coeffs[0]),
        ProfileFamily::Polynomial { .. } => CoefficientProfile::polynomial(coeffs),
        ProfileFamily::Holomorphic => CoefficientProfile::exponential(coeffs[0], Complex64::new(-lambda, 0.0)),
    };
    (profile, residual)
}

/// The Bochner-Fejér approximant `f * K`: for each kernel frequency `λ`,
/// estimate `a_λ(y) = M_t{f(t + iy) e^{-iλt}}` on the last rung of the
/// ladder at every sample height, fit the profile family, and weight by
/// `k(λ)`. A fit fails when its residual exceeds `tolerance` times the
/// largest `||a_μ||` over the kernel frequencies, floored at 1e-9. The
/// result lives on the closed strip spanned by the heights.
pub fn bf_approximate(
    f: &Func,
    kernel: &BochnerFejerKernel,
    y_samples: &[f64],
    ladder: &TLadder,
    quad: &QuadratureSpec,
    options: &ApproxOptions,
) -> Result<ExpSum> {
    if y_samples.is_empty() {
        return Err(Error::EmptyGrid);
    }
    ladder.validate()?;
    quad.validate()?;
    let t = ladder.last();
    let lambdas: Vec<f64> = kernel.entries().iter().map(|e| e.lambda).collect();
    let per_height: Vec<Vec<Complex64>> = y_samples
        .iter()
        .map(|&y| fourier_estimates(f, y, &lambdas, t, quad))
        .collect::<Result<_>>()?;
    let column = |i: usize| -> Vec<Complex64> { per_height.iter().map(|row| row[i]).collect() };
    let scale = (0..lambdas.len())
        .map(|i| column(i).iter().map(|s| s.norm_sqr()).sum::<f64>().sqrt())
        .fold(1e-9, f64::max);
    let mut terms = Vec::with_capacity(lambdas.len());
    for (i, entry) in kernel.entries().iter().enumerate() {
        let (profile, err) = fit_profile(options.family, entry.lambda, y_samples, &column(i));
        let residual = err / scale;
        if residual > options.tolerance {
            return Err(Error::FitResidual { lambda: entry.lambda, residual, tolerance: options.tolerance });
        }
        terms.push(Term::new(entry.lambda, profile.scale(Complex64::new(entry.weight, 0.0))));
    }
    let lo = y_samples.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = y_samples.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    ExpSum::new(terms, Strip::closed(lo, hi)?)
}
