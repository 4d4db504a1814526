use super::series::{Separator, SeparatorSpec, Variant};
use crate::error::{Error, Result};
use crate::function::Func;
use crate::quadrature::{window_integral, QuadratureSpec};
use crate::strip::Point;
use serde::Serialize;
use std::f64::consts::PI;

/// `∫_{-T0}^{T0} e^{-4 p t^2} dt = (√π / (2√p)) erf(2√p T0)`.
pub fn gauss_window(p: f64, t0: f64) -> f64 {
    let s = p.sqrt();
    PI.sqrt() / (2.0 * s) * libm::erf(2.0 * s * t0)
}

/// `Σ_{l > m} term(l)`, stopped once a term falls below 1e-15 of the sum.
fn tail_series(m: u32, term: impl Fn(f64) -> f64) -> f64 {
    let mut sum = 0.0;
    let mut l = m + 1;
    loop {
        let t = term(f64::from(l));
        sum += t;
        if (t <= 1e-15 * sum && l > m + 2) || l > m + 2000 {
            return sum;
        }
        l += 1;
    }
}

/// Closed-form bounds used by the separation theorems.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "bound")]
pub enum TheoremBound {
    /// `(3√π/2) 3^{-m} e^{4H²}`: Weyl-1 distance between the T2 separator and
    /// its level-`m` partial sum.
    T2 { m: u32, h: f64 },
    /// The same distance at a finite window `T`: `e^{4H²}(√π/2)(3·3^{-m} + 1/(2T))`.
    T2Finite { m: u32, h: f64, t: f64 },
    /// `2^{p-1} 9√π Σ_{l>m} l^{2p} / 3^l`.
    T3Tail { m: u32, p: f64 },
    /// `2^{p-1} 9√π Σ_{l>m} l^p / 3^{l(1 - 1/p0)}`.
    T4Tail { m: u32, p: f64, p0: f64 },
    /// `l^p ∫_{-T0}^{T0} e^{-4pt²} dt`.
    T3Window { l: u32, p: f64, t0: f64 },
    /// `3^{lp/p0} ∫_{-1/2}^{1/2} e^{-4pt²} dt`.
    T4Window { l: u32, p: f64, p0: f64 },
}

impl TheoremBound {
    pub fn validate(&self) -> Result<()> {
        let check_p = |p: f64| {
            if p >= 1.0 && p.is_finite() {
                Ok(())
            } else {
                Err(Error::param("p", format!("must be at least 1, got {p}")))
            }
        };
        match *self {
            TheoremBound::T2 { m, h } | TheoremBound::T2Finite { m, h, .. } => {
                if m < 1 {
                    return Err(Error::param("m", "must be at least 1"));
                }
                if !(h >= 0.0) || !h.is_finite() {
                    return Err(Error::param("H", "must be finite and nonnegative"));
                }
                if let TheoremBound::T2Finite { t, .. } = self {
                    if !(*t > 0.0) {
                        return Err(Error::param("T", "must be positive"));
                    }
                }
                Ok(())
            }
            TheoremBound::T3Tail { p, .. } => check_p(p),
            TheoremBound::T4Tail { p, p0, .. } | TheoremBound::T4Window { p, p0, .. } => {
                check_p(p)?;
                if !(p0 > 1.0) || !p0.is_finite() {
                    return Err(Error::param("p0", format!("must exceed 1, got {p0}")));
                }
                Ok(())
            }
            TheoremBound::T3Window { l, p, t0 } => {
                check_p(p)?;
                if l < 1 {
                    return Err(Error::param("l", "must be at least 1"));
                }
                if !(t0 > 0.0) {
                    return Err(Error::param("T0", "must be positive"));
                }
                Ok(())
            }
        }
    }

    pub fn value(&self) -> Result<f64> {
        self.validate()?;
        let sqrt_pi = PI.sqrt();
        Ok(match *self {
            TheoremBound::T2 { m, h } => 1.5 * sqrt_pi * 3f64.powi(-(m as i32)) * (4.0 * h * h).exp(),
            TheoremBound::T2Finite { m, h, t } => {
                (4.0 * h * h).exp() * sqrt_pi / 2.0 * (3.0 * 3f64.powi(-(m as i32)) + 1.0 / (2.0 * t))
            }
            TheoremBound::T3Tail { m, p } => {
                2f64.powf(p - 1.0) * 9.0 * sqrt_pi * tail_series(m, |l| l.powf(2.0 * p) / 3f64.powf(l))
            }
            TheoremBound::T4Tail { m, p, p0 } => {
                2f64.powf(p - 1.0)
                    * 9.0
                    * sqrt_pi
                    * tail_series(m, |l| l.powf(p) / 3f64.powf(l * (1.0 - 1.0 / p0)))
            }
            TheoremBound::T3Window { l, p, t0 } => f64::from(l).powf(p) * gauss_window(p, t0),
            TheoremBound::T4Window { l, p, p0 } => 3f64.powf(f64::from(l) * p / p0) * gauss_window(p, 0.5),
        })
    }
}

/// Envelope for the Besicovitch-`p` distance between the T3 separator and its
/// level-`m` partial sum on the real line:
/// `T3Tail^{1/p} (Σ_{l>m} l^{-q})^{1/q}`, `1/p + 1/q = 1` (`1/(m+1)` at `p = 1`).
pub fn t3_besicovitch_envelope(m: u32, p: f64) -> Result<f64> {
    let tail = TheoremBound::T3Tail { m, p }.value()?;
    let holder = if p == 1.0 {
        1.0 / f64::from(m + 1)
    } else {
        let q = p / (p - 1.0);
        tail_series(m, |l| l.powf(-q)).powf(1.0 / q)
    };
    Ok(tail.powf(1.0 / p) * holder)
}

/// The level beyond which a single window of half-width `T0` at a level-`l`
/// center carries `2c`: `max((2c / ∫e^{-4pt²})^{1/p}, log(2T0)/log 3)`.
pub fn level_threshold(c: f64, p: f64, t0: f64) -> f64 {
    (2.0 * c / gauss_window(p, t0)).powf(1.0 / p).max((2.0 * t0).ln() / 3f64.ln())
}

/// `x_n = 3^l n + 3^{l-1}`, a level-`l` center.
pub fn level_center(l: u32, n: i64) -> f64 {
    3f64.powi(l as i32) * n as f64 + 3f64.powi(l as i32 - 1)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WindowedNorm {
    pub variant: &'static str,
    pub l: u32,
    pub n: i64,
    pub p: f64,
    #[serde(rename = "T0")]
    pub t0: f64,
    pub value: f64,
    pub bound: f64,
}

impl WindowedNorm {
    pub const CSV_COLUMNS: [&'static str; 7] = ["variant", "l", "n", "p", "T0", "value", "bound"];

    pub fn csv_row(&self) -> Vec<String> {
        vec![
            self.variant.to_string(),
            self.l.to_string(),
            self.n.to_string(),
            self.p.to_string(),
            self.t0.to_string(),
            self.value.to_string(),
            self.bound.to_string(),
        ]
    }

    pub fn to_csv(rows: &[WindowedNorm]) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(Self::CSV_COLUMNS).expect("in-memory write");
        for r in rows {
            w.write_record(r.csv_row()).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}

/// `∫_{-T0}^{T0} |f(x_n + t)|^p dt` at the level-`l` centers `x_n`, `n` in
/// `n_range` (inclusive), each with the lower bound `w_l^p ∫e^{-4pt²}`.
pub fn windowed_norm_at_centers(
    spec: &SeparatorSpec,
    l: u32,
    n_range: (i64, i64),
    p: f64,
    t0: f64,
    quad: &QuadratureSpec,
) -> Result<Vec<WindowedNorm>> {
    if l < 1 || spec.level_cap().is_some_and(|cap| l > cap) {
        return Err(Error::param("l", format!("must lie in 1..=l_max, got {l}")));
    }
    if n_range.0 > n_range.1 {
        return Err(Error::param("n_range", "empty range"));
    }
    if !(t0 > 0.0) {
        return Err(Error::param("T0", "must be positive"));
    }
    if !(p >= 1.0) {
        return Err(Error::param("p", "must be at least 1"));
    }
    let f: Func = Separator::new(*spec)?.into_func();
    let bound = spec.variant.weight(l).powf(p) * gauss_window(p, t0);
    let variant = match spec.variant {
        Variant::T2 => "T2",
        Variant::T3 => "T3",
        Variant::T4 { .. } => "T4",
    };
    (n_range.0..=n_range.1)
        .map(|n| {
            let value = window_integral(&f, Point::real(level_center(l, n)), t0, p, quad)?;
            Ok(WindowedNorm { variant, l, n, p, t0, value, bound })
        })
        .collect()
}
