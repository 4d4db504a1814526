//! Arithmetic sample grids and ladders of window half-widths.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Points `start + i * step` for `i` in `0..count`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArithGrid {
    pub start: f64,
    pub step: f64,
    pub count: usize,
}

impl ArithGrid {
    /// Every lattice point `lo + i * step` that does not exceed `hi`
    /// (up to a relative slack of 1e-9 steps).
    pub fn span(lo: f64, hi: f64, step: f64) -> Result<Self> {
        if !(step > 0.0) || !step.is_finite() {
            return Err(Error::param("step", format!("must be positive, got {step}")));
        }
        if !lo.is_finite() || !hi.is_finite() || hi < lo {
            return Err(Error::param("range", format!("invalid range [{lo}, {hi}]")));
        }
        let count = ((hi - lo) / step + 1e-9).floor() as usize + 1;
        Ok(Self { start: lo, step, count })
    }

    /// `count` equally spaced points covering `[lo, hi]` inclusive.
    pub fn linspace(lo: f64, hi: f64, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::EmptyGrid);
        }
        if count == 1 || hi == lo {
            return Ok(Self { start: lo, step: 1.0, count: 1 });
        }
        if hi < lo {
            return Err(Error::param("range", format!("invalid range [{lo}, {hi}]")));
        }
        Ok(Self { start: lo, step: (hi - lo) / (count - 1) as f64, count })
    }

    pub fn single(value: f64) -> Self {
        Self { start: value, step: 1.0, count: 1 }
    }

    pub fn point(&self, i: usize) -> f64 {
        self.start + i as f64 * self.step
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(move |i| self.point(i))
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn last(&self) -> f64 {
        self.point(self.count.saturating_sub(1))
    }
}

/// Geometric ladder of window half-widths `T_k = t0 * growth^k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TLadder {
    pub t0: f64,
    pub growth: f64,
    pub rungs: usize,
}

impl TLadder {
    pub fn new(t0: f64, growth: f64, rungs: usize) -> Result<Self> {
        let ladder = Self { t0, growth, rungs };
        ladder.validate()?;
        Ok(ladder)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.t0 > 0.0) || !self.t0.is_finite() {
            return Err(Error::param("t0", format!("must be positive, got {}", self.t0)));
        }
        if !(self.growth > 1.0) || !self.growth.is_finite() {
            return Err(Error::param("growth", format!("must exceed 1, got {}", self.growth)));
        }
        if self.rungs == 0 {
            return Err(Error::param("rungs", "need at least one rung"));
        }
        Ok(())
    }

    pub fn rung(&self, k: usize) -> f64 {
        self.t0 * self.growth.powi(k as i32)
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.rungs).map(|k| self.rung(k)).collect()
    }

    pub fn last(&self) -> f64 {
        self.rung(self.rungs - 1)
    }
}

impl Default for TLadder {
    /// `T = 3, 9, ..., 729`: windows aligned with the `3^l` periods of the
    /// separating functions.
    fn default() -> Self {
        Self { t0: 3.0, growth: 3.0, rungs: 6 }
    }
}
