use super::ternary::level;
use crate::error::{Error, Result};
use crate::function::{Evaluable, Func};
use crate::strip::Point;
use crate::summation::ComplexSum;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Which separating series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "variant", rename_all = "lowercase")]
pub enum Variant {
    /// `Σ_{n ∈ I} e^{-4(z - n)^2}`.
    T2,
    /// `Σ_l l φ_l(z)`.
    T3,
    /// `Σ_l 3^{l/p0} φ_l(z)`.
    T4 { p0: f64 },
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::T2 => "T2",
            Variant::T3 => "T3",
            Variant::T4 { .. } => "T4",
        }
    }

    /// Weight of the level-`l` bumps.
    pub fn weight(&self, l: u32) -> f64 {
        match self {
            Variant::T2 => 1.0,
            Variant::T3 => f64::from(l),
            Variant::T4 { p0 } => 3f64.powf(f64::from(l) / p0),
        }
    }
}

/// A separator with its truncation: levels up to `l_max` (T3, T4) and bumps
/// within `w` of the evaluation point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeparatorSpec {
    pub variant: Variant,
    pub l_max: u32,
    pub w: f64,
}

pub const DEFAULT_L_MAX: u32 = 12;
pub const DEFAULT_W: f64 = 8.0;

impl SeparatorSpec {
    pub fn new(variant: Variant, l_max: u32, w: f64) -> Result<Self> {
        let spec = Self { variant, l_max, w };
        spec.validate()?;
        Ok(spec)
    }

    pub fn t2() -> Self {
        Self { variant: Variant::T2, l_max: DEFAULT_L_MAX, w: DEFAULT_W }
    }

    pub fn t3() -> Self {
        Self { variant: Variant::T3, l_max: DEFAULT_L_MAX, w: DEFAULT_W }
    }

    pub fn t4(p0: f64) -> Result<Self> {
        Self::new(Variant::T4 { p0 }, DEFAULT_L_MAX, DEFAULT_W)
    }

    pub fn validate(&self) -> Result<()> {
        if self.l_max < 1 || self.l_max > 30 {
            return Err(Error::param("l_max", format!("must lie in 1..=30, got {}", self.l_max)));
        }
        if !(self.w >= 6.0) || !self.w.is_finite() {
            return Err(Error::param("W", format!("must be at least 6, got {}", self.w)));
        }
        if let Variant::T4 { p0 } = self.variant {
            if !(p0 > 1.0) || !p0.is_finite() {
                return Err(Error::param("p0", format!("must exceed 1, got {p0}")));
            }
        }
        Ok(())
    }

    /// Highest level summed; T2 keeps every level.
    pub fn level_cap(&self) -> Option<u32> {
        match self.variant {
            Variant::T2 => None,
            _ => Some(self.l_max),
        }
    }

    /// Bound on the bumps dropped by the `w` window at height `y`, scaled by
    /// the largest weight in play.
    pub fn window_truncation_bound(&self, y: f64) -> f64 {
        let top = self.level_cap().map_or(1.0, |l| self.variant.weight(l));
        top * (4.0 * y * y).exp() * 2.0 * (-4.0 * (self.w - 1.0).powi(2)).exp()
    }

    /// Bound on the levels above `l_max` on `|y| <= h`, valid for
    /// `|x| <= 3^{l_max - 1}`: `Σ_{l > l_max} w_l (9√π e^{4h²}/2) / 3^l`.
    pub fn level_truncation_bound(&self, h: f64) -> f64 {
        if matches!(self.variant, Variant::T2) {
            return 0.0;
        }
        let c = 9.0 * PI.sqrt() * (4.0 * h * h).exp() / 2.0;
        let mut sum = 0.0;
        let mut l = self.l_max + 1;
        loop {
            let term = self.variant.weight(l) * 3f64.powi(-(l as i32));
            sum += term;
            if term < 1e-17 * sum || l > 400 {
                break;
            }
            l += 1;
        }
        c * sum
    }
}

#[inline]
fn bump(z: Point, center: f64) -> Complex64 {
    let d = z.x - center;
    let re = -4.0 * (d * d - z.y * z.y);
    let im = -8.0 * d * z.y;
    Complex64::from_polar(re.exp(), im)
}

/// `φ_l(z) = Σ_k e^{-4(z - 3^{l-1}(3k+1))^2}` over the centers within `w` of `x`.
pub fn phi_l(z: Point, l: u32, w: f64) -> Complex64 {
    let scale = 3f64.powi(l as i32 - 1);
    let stride = 3.0 * scale;
    let k_lo = ((z.x - w - scale) / stride).ceil() as i64;
    let k_hi = ((z.x + w - scale) / stride).floor() as i64;
    let mut acc = ComplexSum::new();
    for k in k_lo..=k_hi {
        acc.add(bump(z, scale + stride * k as f64));
    }
    acc.total()
}

/// Separator restricted to levels `<= max_level`, evaluated by scanning the
/// integers within `w` of `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Separator {
    spec: SeparatorSpec,
    max_level: Option<u32>,
}

impl Separator {
    pub fn new(spec: SeparatorSpec) -> Result<Self> {
        spec.validate()?;
        Ok(Self { spec, max_level: spec.level_cap() })
    }

    /// The partial sum over levels `1..=m`, periodic with period `3^m`.
    pub fn partial(spec: SeparatorSpec, m: u32) -> Result<Self> {
        spec.validate()?;
        if m < 1 {
            return Err(Error::param("m", "must be at least 1"));
        }
        if let Some(cap) = spec.level_cap() {
            if m > cap {
                return Err(Error::param("m", format!("must not exceed l_max = {cap}, got {m}")));
            }
        }
        Ok(Self { spec, max_level: Some(m) })
    }

    pub fn spec(&self) -> &SeparatorSpec {
        &self.spec
    }

    pub fn max_level(&self) -> Option<u32> {
        self.max_level
    }

    pub fn into_func(self) -> Func {
        Func::new(self)
    }
}

impl Evaluable for Separator {
    fn eval(&self, z: Point) -> Complex64 {
        let lo = (z.x - self.spec.w).ceil() as i64;
        let hi = (z.x + self.spec.w).floor() as i64;
        let mut acc = ComplexSum::new();
        for n in lo..=hi {
            let Some(l) = level(n) else { continue };
            if self.max_level.is_some_and(|cap| l > cap) {
                continue;
            }
            acc.add(bump(z, n as f64) * self.spec.variant.weight(l));
        }
        acc.total()
    }
}

/// Value of the (truncated) separator at `z`.
pub fn separator_eval(spec: &SeparatorSpec, z: Point) -> Result<Complex64> {
    Ok(Separator::new(*spec)?.eval(z))
}

/// The level-`<= m` partial sum as a function.
pub fn partial_sum_f_m(spec: &SeparatorSpec, m: u32) -> Result<Func> {
    Ok(Separator::partial(*spec, m)?.into_func())
}
