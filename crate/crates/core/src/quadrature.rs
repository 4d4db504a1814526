//! Composite quadrature on horizontal windows and sampled suprema.
//!
//! Two evaluation routes exist. [`window_integral`] lays out nodes for one
//! window and evaluates the function on them. [`LineSamples`] evaluates a
//! function once on a uniform lattice along a horizontal line; windows whose
//! endpoints fall on lattice points are then integrated from the stored
//! samples. Both routes use the same node layout, so they agree to rounding.

use crate::error::{Error, Result};
use crate::function::Func;
use crate::grid::ArithGrid;
use crate::strip::{Point, Strip};
use crate::summation::{ComplexSum, NeumaierSum};
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Composite rule family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    Midpoint,
    Trapezoid,
    Simpson,
}

/// Node spacing, rule and weight normalisation.
///
/// With `normalized` set the interval count is `ceil(len / h)` (rounded up to
/// even for Simpson) and weights are rescaled to sum to the window length.
/// Without it the spacing is exactly `h` and the nodes stop at the last whole
/// step inside the window.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub h: f64,
    pub rule: Rule,
    pub normalized: bool,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { h: 0.02, rule: Rule::Simpson, normalized: true }
    }
}

/// Nodes `lo + offsets[i]` with weights `weights[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct WindowRule {
    pub offsets: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureSpec {
    pub fn new(h: f64, rule: Rule, normalized: bool) -> Result<Self> {
        let spec = Self { h, rule, normalized };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.h > 0.0) || !self.h.is_finite() {
            return Err(Error::param("h", format!("node spacing must be positive, got {}", self.h)));
        }
        Ok(())
    }

    fn interval_count(&self, len: f64) -> usize {
        let ratio = len / self.h;
        let mut n = if self.normalized {
            (ratio - 1e-9).ceil().max(1.0) as usize
        } else {
            (ratio + 1e-9).floor().max(1.0) as usize
        };
        if self.rule == Rule::Simpson && n % 2 == 1 {
            n = if self.normalized || n == 1 { n + 1 } else { n - 1 };
        }
        n
    }

    /// Node offsets and weights for a window of length `len`.
    pub fn window_rule(&self, len: f64) -> WindowRule {
        let n = self.interval_count(len);
        let s = if self.normalized { len / n as f64 } else { self.h };
        let (offsets, mut weights): (Vec<f64>, Vec<f64>) = match self.rule {
            Rule::Midpoint => (0..n).map(|i| ((i as f64 + 0.5) * s, s)).unzip(),
            Rule::Trapezoid => (0..=n)
                .map(|i| {
                    let w = if i == 0 || i == n { 0.5 * s } else { s };
                    (i as f64 * s, w)
                })
                .unzip(),
            Rule::Simpson => (0..=n)
                .map(|i| {
                    let c = if i == 0 || i == n {
                        1.0
                    } else if i % 2 == 1 {
                        4.0
                    } else {
                        2.0
                    };
                    (i as f64 * s, c * s / 3.0)
                })
                .unzip(),
        };
        if self.normalized {
            let total: NeumaierSum = weights.iter().copied().collect();
            let scale = len / total.total();
            for w in &mut weights {
                *w *= scale;
            }
        }
        WindowRule { offsets, weights }
    }

    /// Number of lattice steps spanning `len`, when a window of that length
    /// can be integrated from lattice samples spaced `h` apart.
    pub fn lattice_steps(&self, len: f64) -> Option<usize> {
        if self.rule == Rule::Midpoint {
            return None;
        }
        let ratio = len / self.h;
        let n = ratio.round();
        if n < 1.0 || (ratio - n).abs() > 1e-9 * ratio.max(1.0) {
            return None;
        }
        let n = n as usize;
        if self.rule == Rule::Simpson && n % 2 == 1 {
            return None;
        }
        Some(n)
    }

    /// Sum of `w_i * values[start + i]` over a lattice window of `n` steps.
    fn lattice_sum<T, A>(&self, values: &[T], start: usize, n: usize, len: f64) -> A::Output
    where
        T: Copy,
        A: Accumulate<T>,
    {
        let window = &values[start..=start + n];
        let mut ends = A::default();
        let mut odd = A::default();
        let mut even = A::default();
        ends.push(window[0]);
        ends.push(window[n]);
        for (i, &v) in window.iter().enumerate().take(n).skip(1) {
            if i % 2 == 1 {
                odd.push(v);
            } else {
                even.push(v);
            }
        }
        let step = len / n as f64;
        match self.rule {
            Rule::Simpson => A::combine(&[(ends, step / 3.0), (odd, 4.0 * step / 3.0), (even, 2.0 * step / 3.0)]),
            _ => A::combine(&[(ends, step / 2.0), (odd, step), (even, step)]),
        }
    }
}

trait Accumulate<T>: Default {
    type Output;
    fn push(&mut self, v: T);
    fn combine(parts: &[(Self, f64)]) -> Self::Output
    where
        Self: Sized;
}

impl Accumulate<f64> for NeumaierSum {
    type Output = f64;
    fn push(&mut self, v: f64) {
        self.add(v);
    }
    fn combine(parts: &[(Self, f64)]) -> f64 {
        let mut acc = NeumaierSum::new();
        for (s, w) in parts {
            acc.add(s.total() * w);
        }
        acc.total()
    }
}

impl Accumulate<Complex64> for ComplexSum {
    type Output = Complex64;
    fn push(&mut self, v: Complex64) {
        self.add(v);
    }
    fn combine(parts: &[(Self, f64)]) -> Complex64 {
        let mut acc = ComplexSum::new();
        for (s, w) in parts {
            acc.add(s.total() * *w);
        }
        acc.total()
    }
}

fn check_finite(v: Complex64, x: f64, y: f64) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { x, y })
    }
}

fn check_window(t: f64, p: f64) -> Result<()> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::param("T", format!("window half-width must be positive, got {t}")));
    }
    if !(p >= 1.0) || !p.is_finite() {
        return Err(Error::param("p", format!("exponent must be >= 1, got {p}")));
    }
    Ok(())
}

/// `|v|^p`, with the common exponents special-cased so that `p = 1` and
/// `p = 2` do not go through `powf`.
#[inline]
pub(crate) fn abs_pow(v: Complex64, p: f64) -> f64 {
    if p == 1.0 {
        v.norm()
    } else if p == 2.0 {
        v.norm_sqr()
    } else {
        v.norm().powf(p)
    }
}

/// Quadrature approximation of `∫_{-T}^{T} |f(center + t)|^p dt`.
pub fn window_integral(f: &Func, center: Point, t: f64, p: f64, quad: &QuadratureSpec) -> Result<f64> {
    check_window(t, p)?;
    quad.validate()?;
    let rule = quad.window_rule(2.0 * t);
    let lo = center.x - t;
    let mut acc = NeumaierSum::new();
    for (off, w) in rule.offsets.iter().zip(&rule.weights) {
        let x = lo + off;
        let v = check_finite(f.eval(Point::new(x, center.y)), x, center.y)?;
        acc.add(w * abs_pow(v, p));
    }
    Ok(acc.total())
}

/// Quadrature approximation of `∫_{-T}^{T} f(center + t) dt` (complex).
pub fn window_integral_complex(f: &Func, center: Point, t: f64, quad: &QuadratureSpec) -> Result<Complex64> {
    check_window(t, 1.0)?;
    quad.validate()?;
    let rule = quad.window_rule(2.0 * t);
    let lo = center.x - t;
    let mut acc = ComplexSum::new();
    for (off, w) in rule.offsets.iter().zip(&rule.weights) {
        let x = lo + off;
        let v = check_finite(f.eval(Point::new(x, center.y)), x, center.y)?;
        acc.add(v * *w);
    }
    Ok(acc.total())
}

/// Samples of a function on the lattice `origin + j h`, `Im z = y`.
#[derive(Debug, Clone)]
pub struct LineSamples {
    pub y: f64,
    pub origin: f64,
    pub h: f64,
    pub values: Vec<Complex64>,
}

impl LineSamples {
    /// Samples covering `[lo, hi]`; the lattice starts at `lo`.
    pub fn sample(f: &Func, y: f64, lo: f64, hi: f64, h: f64) -> Result<Self> {
        if !(h > 0.0) || !(hi >= lo) {
            return Err(Error::param("lattice", format!("invalid lattice [{lo}, {hi}] step {h}")));
        }
        let n = ((hi - lo) / h - 1e-9).ceil().max(0.0) as usize;
        let values = (0..=n)
            .into_par_iter()
            .map(|j| {
                let x = lo + j as f64 * h;
                check_finite(f.eval(Point::new(x, y)), x, y)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { y, origin: lo, h, values })
    }

    pub fn x(&self, j: usize) -> f64 {
        self.origin + j as f64 * self.h
    }

    /// Lattice index of `x`, if `x` sits on the lattice.
    pub fn index_of(&self, x: f64) -> Option<usize> {
        let r = (x - self.origin) / self.h;
        let j = r.round();
        if j < 0.0 || (r - j).abs() > 1e-6 || j as usize >= self.values.len() {
            None
        } else {
            Some(j as usize)
        }
    }

    pub fn powered(&self, p: f64) -> Vec<f64> {
        self.values.iter().map(|&v| abs_pow(v, p)).collect()
    }
}

/// Window integrals over lattice samples.
#[derive(Debug, Clone, Copy)]
pub struct LatticeWindows<'a> {
    quad: &'a QuadratureSpec,
    origin: f64,
    h: f64,
}

impl<'a> LatticeWindows<'a> {
    pub fn new(quad: &'a QuadratureSpec, samples: &LineSamples) -> Self {
        Self { quad, origin: samples.origin, h: samples.h }
    }

    fn locate(&self, center: f64, t: f64, len_samples: usize) -> Option<(usize, usize)> {
        let n = self.quad.lattice_steps(2.0 * t)?;
        let r = (center - t - self.origin) / self.h;
        let s = r.round();
        if s < 0.0 || (r - s).abs() > 1e-6 {
            return None;
        }
        let s = s as usize;
        (s + n < len_samples).then_some((s, n))
    }

    /// `∫ |f|^p` over `[center - t, center + t]` from powered samples, or
    /// `None` when the window is not aligned with the lattice.
    pub fn integral(&self, powered: &[f64], center: f64, t: f64) -> Option<f64> {
        let (s, n) = self.locate(center, t, powered.len())?;
        Some(self.quad.lattice_sum::<f64, NeumaierSum>(powered, s, n, 2.0 * t))
    }

    pub fn integral_complex(&self, values: &[Complex64], center: f64, t: f64) -> Option<Complex64> {
        let (s, n) = self.locate(center, t, values.len())?;
        Some(self.quad.lattice_sum::<Complex64, ComplexSum>(values, s, n, 2.0 * t))
    }
}

/// Location and value of a sampled supremum of `|f|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupSample {
    pub value: f64,
    pub at: Point,
}

fn better(a: (f64, usize), b: (f64, usize)) -> (f64, usize) {
    if b.0 > a.0 || (b.0 == a.0 && b.1 < a.1) {
        b
    } else {
        a
    }
}

/// Maximum of `|f|` over the product grid `xs × ys` (a lower bound of the
/// true supremum). Ties resolve to the lowest grid index.
pub fn sup_over(f: &Func, xs: &ArithGrid, ys: &ArithGrid) -> Result<SupSample> {
    if xs.is_empty() || ys.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let total = xs.count * ys.count;
    let (value, idx) = (0..total)
        .into_par_iter()
        .map(|k| {
            let (iy, ix) = (k / xs.count, k % xs.count);
            let (x, y) = (xs.point(ix), ys.point(iy));
            check_finite(f.eval(Point::new(x, y)), x, y).map(|v| (v.norm(), k))
        })
        .try_reduce(|| (f64::NEG_INFINITY, usize::MAX), |a, b| Ok(better(a, b)))?;
    let (iy, ix) = (idx / xs.count, idx % xs.count);
    Ok(SupSample { value, at: Point::new(xs.point(ix), ys.point(iy)) })
}

/// Sampled supremum of `|f|` over `x_range × [y_min, y_max]` of a closed strip.
pub fn grid_sup(f: &Func, strip: &Strip, x_range: (f64, f64), x_step: f64, y_step: f64) -> Result<SupSample> {
    if !strip.is_closed() {
        return Err(Error::param("strip", "sampling needs a closed substrip"));
    }
    let xs = ArithGrid::span(x_range.0, x_range.1, x_step)?;
    let ys = ArithGrid::span(strip.y_min(), strip.y_max(), y_step)?;
    sup_over(f, &xs, &ys)
}

/// [`grid_sup`] followed by a golden-section search in `x` within one step of
/// the best node, at the best node's `y`.
pub fn grid_sup_refined(
    f: &Func,
    strip: &Strip,
    x_range: (f64, f64),
    x_step: f64,
    y_step: f64,
) -> Result<SupSample> {
    let coarse = grid_sup(f, strip, x_range, x_step, y_step)?;
    let y = coarse.at.y;
    let modulus = |x: f64| f.eval(Point::new(x, y)).norm();
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = ((coarse.at.x - x_step).max(x_range.0), (coarse.at.x + x_step).min(x_range.1));
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (modulus(c), modulus(d));
    for _ in 0..60 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = modulus(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = modulus(d);
        }
    }
    let (x, v) = if fc > fd { (c, fc) } else { (d, fd) };
    if v.is_finite() && v > coarse.value {
        Ok(SupSample { value: v, at: Point::new(x, y) })
    } else {
        Ok(coarse)
    }
}
