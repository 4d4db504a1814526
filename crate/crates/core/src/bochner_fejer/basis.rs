use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Positive reals `β_1, ..., β_q` that are linearly independent over the
/// rationals, as far as a bounded continued-fraction test can tell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RationalBasis {
    betas: Vec<f64>,
}

pub const DEFAULT_MAX_DENOMINATOR: i64 = 64;

/// The first convergent `p/q` of `x` with `q <= max_den` that matches `x` to
/// relative precision 1e-12, if any.
fn rational_match(x: f64, max_den: i64) -> Option<(i64, i64)> {
    let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1i64, 1i64, 0i64);
    let mut rest = x;
    for _ in 0..64 {
        let a = rest.floor();
        if a.abs() > 1e15 {
            return None;
        }
        let a = a as i64;
        let (p2, q2) = (a.checked_mul(p1)?.checked_add(p0)?, a.checked_mul(q1)?.checked_add(q0)?);
        if q2 > max_den {
            return None;
        }
        if ((p2 as f64) / (q2 as f64) - x).abs() <= 1e-12 * x.abs().max(1.0) {
            return Some((p2, q2));
        }
        let frac = rest - a as f64;
        if frac <= 0.0 {
            return None;
        }
        rest = 1.0 / frac;
        (p0, q0, p1, q1) = (p1, q1, p2, q2);
    }
    None
}

impl RationalBasis {
    pub fn new(betas: Vec<f64>) -> Result<Self> {
        Self::with_max_denominator(betas, DEFAULT_MAX_DENOMINATOR)
    }

    pub fn with_max_denominator(betas: Vec<f64>, max_den: i64) -> Result<Self> {
        if betas.is_empty() {
            return Err(Error::param("basis", "needs at least one element"));
        }
        if let Some(b) = betas.iter().find(|b| !(**b > 0.0) || !b.is_finite()) {
            return Err(Error::param("basis", format!("elements must be positive and finite, got {b}")));
        }
        for i in 0..betas.len() {
            for j in i + 1..betas.len() {
                let ratio = betas[i] / betas[j];
                if let Some((num, den)) = rational_match(ratio, max_den) {
                    return Err(Error::RationalBasis { ratio, num, den });
                }
            }
        }
        Ok(Self { betas })
    }

    pub fn betas(&self) -> &[f64] {
        &self.betas
    }

    pub fn dim(&self) -> usize {
        self.betas.len()
    }

    /// `Σ r_j β_j`.
    pub fn frequency(&self, tuple: &[i32]) -> f64 {
        tuple.iter().zip(&self.betas).map(|(&r, &b)| r as f64 * b).sum()
    }
}
