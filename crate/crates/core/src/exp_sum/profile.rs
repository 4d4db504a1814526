use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A coefficient `c(y)` of an exponential sum, in one of three closed forms.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "parameters", rename_all = "lowercase")]
pub enum CoefficientProfile {
    /// `c(y) = value`
    Constant { value: Complex64 },
    /// `c(y) = Σ coeffs[k] y^k`
    Polynomial { coeffs: Vec<Complex64> },
    /// `c(y) = amplitude · e^{rate · y}`
    Exponential { amplitude: Complex64, rate: Complex64 },
}

impl CoefficientProfile {
    pub fn constant(value: impl Into<Complex64>) -> Self {
        CoefficientProfile::Constant { value: value.into() }
    }

    pub fn zero() -> Self {
        Self::constant(0.0)
    }

    pub fn polynomial(coeffs: Vec<Complex64>) -> Self {
        CoefficientProfile::Polynomial { coeffs }
    }

    pub fn exponential(amplitude: impl Into<Complex64>, rate: impl Into<Complex64>) -> Self {
        CoefficientProfile::Exponential { amplitude: amplitude.into(), rate: rate.into() }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CoefficientProfile::Constant { .. } => "constant",
            CoefficientProfile::Polynomial { .. } => "polynomial",
            CoefficientProfile::Exponential { .. } => "exponential",
        }
    }

    pub fn eval(&self, y: f64) -> Complex64 {
        match self {
            CoefficientProfile::Constant { value } => *value,
            CoefficientProfile::Polynomial { coeffs } => {
                coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * y + c)
            }
            CoefficientProfile::Exponential { amplitude, rate } => amplitude * (rate * y).exp(),
        }
    }

    /// True when the profile is identically zero.
    pub fn is_zero(&self) -> bool {
        let zero = Complex64::new(0.0, 0.0);
        match self {
            CoefficientProfile::Constant { value } => *value == zero,
            CoefficientProfile::Polynomial { coeffs } => coeffs.iter().all(|c| *c == zero),
            CoefficientProfile::Exponential { amplitude, .. } => *amplitude == zero,
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        match self {
            CoefficientProfile::Constant { value } => CoefficientProfile::Constant { value: value * s },
            CoefficientProfile::Polynomial { coeffs } => {
                CoefficientProfile::Polynomial { coeffs: coeffs.iter().map(|c| c * s).collect() }
            }
            CoefficientProfile::Exponential { amplitude, rate } => {
                CoefficientProfile::Exponential { amplitude: amplitude * s, rate: *rate }
            }
        }
    }

    fn as_polynomial(&self) -> Option<Vec<Complex64>> {
        match self {
            CoefficientProfile::Constant { value } => Some(vec![*value]),
            CoefficientProfile::Polynomial { coeffs } => Some(coeffs.clone()),
            CoefficientProfile::Exponential { amplitude, rate } if *rate == Complex64::new(0.0, 0.0) => {
                Some(vec![*amplitude])
            }
            CoefficientProfile::Exponential { .. } => None,
        }
    }

    /// Pointwise sum, when it stays inside one of the three families.
    pub fn add(&self, other: &Self) -> Result<Self> {
        use CoefficientProfile::*;
        match (self, other) {
            (Constant { value: a }, Constant { value: b }) => Ok(Constant { value: a + b }),
            (Exponential { amplitude: a, rate: r }, Exponential { amplitude: b, rate: s }) if r == s => {
                Ok(Exponential { amplitude: a + b, rate: *r })
            }
            _ if self.is_zero() => Ok(other.clone()),
            _ if other.is_zero() => Ok(self.clone()),
            _ => match (self.as_polynomial(), other.as_polynomial()) {
                (Some(a), Some(b)) => {
                    let n = a.len().max(b.len());
                    let zero = Complex64::new(0.0, 0.0);
                    let coeffs = (0..n)
                        .map(|k| a.get(k).copied().unwrap_or(zero) + b.get(k).copied().unwrap_or(zero))
                        .collect();
                    Ok(Polynomial { coeffs })
                }
                _ => Err(Error::IncompatibleProfiles(self.kind(), other.kind())),
            },
        }
    }
}
