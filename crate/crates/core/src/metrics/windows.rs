//! Batched window integrals along horizontal lines.

use crate::error::Result;
use crate::function::Func;
use crate::grid::ArithGrid;
use crate::quadrature::{window_integral, window_integral_complex, LatticeWindows, LineSamples, QuadratureSpec};
use crate::strip::Point;
use num_complex::Complex64;
use rayon::prelude::*;

/// Windows `[x + offset - T, x + offset + T]` for every shift `x` and every
/// half-width `T`.
pub(crate) struct WindowBatch<'a> {
    pub shifts: &'a ArithGrid,
    pub offset: f64,
    pub half_widths: &'a [f64],
    pub quad: &'a QuadratureSpec,
}

impl WindowBatch<'_> {
    fn lattice_fits(&self) -> bool {
        let q = self.quad;
        let steps_ok = self.half_widths.iter().all(|&t| q.lattice_steps(2.0 * t).is_some());
        let shift_ok = self.shifts.count <= 1 || {
            let r = self.shifts.step / q.h;
            (r - r.round()).abs() < 1e-9 * r.max(1.0) && r.round() >= 1.0
        };
        steps_ok && shift_ok
    }

    fn sample(&self, f: &Func, y: f64) -> Result<Option<LineSamples>> {
        if !self.lattice_fits() {
            return Ok(None);
        }
        let t_max = self.half_widths.iter().copied().fold(0.0, f64::max);
        let lo = self.shifts.start + self.offset - t_max;
        let hi = self.shifts.last() + self.offset + t_max;
        LineSamples::sample(f, y, lo, hi, self.quad.h).map(Some)
    }

    /// `out[r][s] = ∫ |f|^p` over the window for half-width `r`, shift `s`.
    pub fn integrals(&self, f: &Func, y: f64, p: f64) -> Result<Vec<Vec<f64>>> {
        let samples = self.sample(f, y)?;
        let powered = samples.as_ref().map(|s| s.powered(p));
        self.half_widths
            .iter()
            .map(|&t| {
                (0..self.shifts.count)
                    .into_par_iter()
                    .map(|s| {
                        let c = self.shifts.point(s) + self.offset;
                        let fast = samples
                            .as_ref()
                            .zip(powered.as_ref())
                            .and_then(|(smp, pw)| LatticeWindows::new(self.quad, smp).integral(pw, c, t));
                        match fast {
                            Some(v) => Ok(v),
                            None => window_integral(f, Point::new(c, y), t, p, self.quad),
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `out[r][s] = ∫ f` (complex) over the window for half-width `r`, shift `s`.
    pub fn complex_integrals(&self, f: &Func, y: f64) -> Result<Vec<Vec<Complex64>>> {
        let samples = self.sample(f, y)?;
        self.half_widths
            .iter()
            .map(|&t| {
                (0..self.shifts.count)
                    .into_par_iter()
                    .map(|s| {
                        let c = self.shifts.point(s) + self.offset;
                        let fast = samples
                            .as_ref()
                            .and_then(|smp| LatticeWindows::new(self.quad, smp).integral_complex(&smp.values, c, t));
                        match fast {
                            Some(v) => Ok(v),
                            None => window_integral_complex(f, Point::new(c, y), t, self.quad),
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

pub(crate) fn max_of(values: &[f64]) -> f64 {
    values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}
