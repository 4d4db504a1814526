//! Finite-window estimators of the uniform, Stepanov, Weyl and Besicovitch
//! distances, the mean value, and the interior supremum bound for holomorphic
//! functions with bounded windowed `L^1` means.
//!
//! For `p >= 1` and functions `f`, `g` on a closed substrip `[α, β]`:
//!
//! * uniform: `sup_z |f - g|`
//! * Stepanov: `sup_z (∫_0^1 |f - g|^p (z + t) dt)^{1/p}`
//! * Weyl: `limsup_T sup_z ((1/2T) ∫_{-T}^{T} |f - g|^p (z + t) dt)^{1/p}`
//! * Besicovitch: `limsup_T sup_y ((1/2T) ∫_{-T}^{T} |f - g|^p (t + iy) dt)^{1/p}`
//!
//! Suprema are taken over a [`SupShiftGrid`]; `limsup` over a [`TLadder`].

mod estimate;
mod windows;

pub use estimate::{tail_surrogate, MetricEstimate, MetricKind, MetricTag, Rung, SupShiftGrid};

use crate::error::{Error, Result};
use crate::function::Func;
use crate::grid::{ArithGrid, TLadder};
use crate::quadrature::{sup_over, QuadratureSpec};
use crate::strip::Strip;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use windows::{max_of, WindowBatch};

fn check_substrip(substrip: &Strip) -> Result<()> {
    if substrip.is_closed() {
        Ok(())
    } else {
        Err(Error::param("substrip", "distances are measured on closed substrips"))
    }
}

/// Sampled `sup |f - g|` over the grid.
pub fn uniform_distance(f: &Func, g: &Func, substrip: &Strip, grid: &SupShiftGrid) -> Result<f64> {
    check_substrip(substrip)?;
    grid.check_inside(substrip)?;
    Ok(sup_over(&f.sub(g), &grid.x, &grid.y)?.value)
}

/// Per-height maxima over shifts of each window family, then the max over
/// heights, for every half-width.
fn sup_window_means(
    diff: &Func,
    heights: &ArithGrid,
    batch: &WindowBatch<'_>,
    p: f64,
) -> Result<Vec<f64>> {
    let per_line: Vec<Vec<f64>> = heights
        .points()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|y| {
            let table = batch.integrals(diff, y, p)?;
            Ok(table
                .iter()
                .zip(batch.half_widths)
                .map(|(row, &t)| max_of(row) / (2.0 * t))
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok((0..batch.half_widths.len())
        .map(|r| per_line.iter().map(|line| line[r]).fold(f64::NEG_INFINITY, f64::max).max(0.0))
        .collect())
}

fn root(mean: f64, p: f64) -> f64 {
    if p == 1.0 {
        mean
    } else {
        mean.powf(1.0 / p)
    }
}

/// Sampled `sup_z (∫_0^1 |f - g|^p (z + t) dt)^{1/p}`.
pub fn stepanov_distance(
    f: &Func,
    g: &Func,
    p: f64,
    substrip: &Strip,
    grid: &SupShiftGrid,
    quad: &QuadratureSpec,
) -> Result<f64> {
    MetricKind::new(MetricTag::Stepanov, p)?;
    check_substrip(substrip)?;
    grid.check_inside(substrip)?;
    let batch = WindowBatch { shifts: &grid.x, offset: 0.5, half_widths: &[0.5], quad };
    let means = sup_window_means(&f.sub(g), &grid.y, &batch, p)?;
    // the unit window has 2T = 1, so the mean is the integral
    Ok(root(means[0], p))
}

/// Weyl distance on every rung of the ladder.
pub fn weyl_distance(
    f: &Func,
    g: &Func,
    p: f64,
    substrip: &Strip,
    grid: &SupShiftGrid,
    ladder: &TLadder,
    quad: &QuadratureSpec,
) -> Result<MetricEstimate> {
    let kind = MetricKind::new(MetricTag::Weyl, p)?;
    check_substrip(substrip)?;
    grid.check_inside(substrip)?;
    ladder.validate()?;
    let ts = ladder.values();
    let batch = WindowBatch { shifts: &grid.x, offset: 0.0, half_widths: &ts, quad };
    let means = sup_window_means(&f.sub(g), &grid.y, &batch, p)?;
    let rungs = ts.iter().zip(means).map(|(&t, m)| Rung { t, value: root(m, p) }).collect();
    Ok(MetricEstimate::from_rungs(kind, substrip, rungs))
}

/// Besicovitch distance on every rung: windows centred at `x = 0`, supremum
/// over the given heights only.
pub fn besicovitch_distance(
    f: &Func,
    g: &Func,
    p: f64,
    substrip: &Strip,
    heights: &ArithGrid,
    ladder: &TLadder,
    quad: &QuadratureSpec,
) -> Result<MetricEstimate> {
    let kind = MetricKind::new(MetricTag::Besicovitch, p)?;
    check_substrip(substrip)?;
    SupShiftGrid::new(ArithGrid::single(0.0), *heights)?.check_inside(substrip)?;
    ladder.validate()?;
    let ts = ladder.values();
    let origin = ArithGrid::single(0.0);
    let batch = WindowBatch { shifts: &origin, offset: 0.0, half_widths: &ts, quad };
    let means = sup_window_means(&f.sub(g), heights, &batch, p)?;
    let rungs = ts.iter().zip(means).map(|(&t, m)| Rung { t, value: root(m, p) }).collect();
    Ok(MetricEstimate::from_rungs(kind, substrip, rungs))
}

/// Ladder of horizontal means `(1/2T) ∫_{-T}^{T} f(t + iy) dt`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeanValueEstimate {
    pub y: f64,
    /// `(T, mean)` per rung.
    pub rungs: Vec<(f64, Complex64)>,
    /// The last rung's mean.
    pub surrogate: Complex64,
    /// Per rung, `max_x |(1/2T) ∫ f(x + t + iy) dt - surrogate|` over the
    /// shift grid: how far shifted windows are from the mean.
    pub shift_residuals: Vec<f64>,
}

/// Mean value of `f` along `Im z = y` on every rung, plus the shift-uniformity
/// residual over `shifts`.
pub fn mean_value(
    f: &Func,
    y: f64,
    ladder: &TLadder,
    quad: &QuadratureSpec,
    shifts: &ArithGrid,
) -> Result<MeanValueEstimate> {
    ladder.validate()?;
    if shifts.is_empty() {
        return Err(Error::EmptyGrid);
    }
    let ts = ladder.values();
    let origin = ArithGrid::single(0.0);
    let centred = WindowBatch { shifts: &origin, offset: 0.0, half_widths: &ts, quad }.complex_integrals(f, y)?;
    let rungs: Vec<(f64, Complex64)> = ts.iter().zip(&centred).map(|(&t, row)| (t, row[0] / (2.0 * t))).collect();
    let surrogate = rungs.last().expect("ladder has rungs").1;
    let shifted = WindowBatch { shifts, offset: 0.0, half_widths: &ts, quad }.complex_integrals(f, y)?;
    let shift_residuals = ts
        .iter()
        .zip(&shifted)
        .map(|(&t, row)| row.iter().map(|v| (v / (2.0 * t) - surrogate).norm()).fold(0.0, f64::max))
        .collect();
    Ok(MeanValueEstimate { y, rungs, surrogate, shift_residuals })
}

/// `2 T_0 C / (π r^2)`: the bound on `|f|` in the interior of a strip for a
/// holomorphic `f` whose windowed means `(1/2T_0) ∫_{-T_0}^{T_0} |f(z + u)| du`
/// are at most `C`, at distance `r` from the boundary.
pub fn interior_sup_bound(c: f64, t0: f64, r: f64) -> Result<f64> {
    for (name, v) in [("C", c), ("T0", t0), ("r", r)] {
        if !(v > 0.0) || !v.is_finite() {
            return Err(Error::param(name, format!("must be positive, got {v}")));
        }
    }
    Ok(2.0 * t0 * c / (std::f64::consts::PI * r * r))
}

#[cfg(test)]
mod tests;
