//! Horizontal strips `{a <= Im z <= b}` and points of the complex plane.

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A point `x + iy`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn real(x: f64) -> Self {
        Self { x, y: 0.0 }
    }

    pub fn as_complex(self) -> Complex64 {
        Complex64::new(self.x, self.y)
    }

    /// The point moved horizontally by `tau`.
    pub fn shifted(self, tau: f64) -> Self {
        Self { x: self.x + tau, y: self.y }
    }
}

impl From<Complex64> for Point {
    fn from(z: Complex64) -> Self {
        Self { x: z.re, y: z.im }
    }
}

/// Whether the strip contains its boundary lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Boundary {
    Closed,
    Open,
}

/// A horizontal strip. Bounds may be infinite for open strips.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Strip {
    y_min: f64,
    y_max: f64,
    boundary: Boundary,
}

impl Strip {
    /// Closed strip `a <= y <= b`; both bounds must be finite.
    pub fn closed(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::param("strip", "closed strips need finite bounds"));
        }
        if a > b {
            return Err(Error::param("strip", format!("y_min {a} exceeds y_max {b}")));
        }
        Ok(Self { y_min: a, y_max: b, boundary: Boundary::Closed })
    }

    /// Open strip `a < y < b`; `a` may be `-inf` and `b` may be `+inf`.
    pub fn open(a: f64, b: f64) -> Result<Self> {
        if a.is_nan() || b.is_nan() || a == f64::INFINITY || b == f64::NEG_INFINITY {
            return Err(Error::param("strip", "invalid open strip bounds"));
        }
        if a >= b {
            return Err(Error::param("strip", format!("open strip needs {a} < {b}")));
        }
        Ok(Self { y_min: a, y_max: b, boundary: Boundary::Open })
    }

    /// The whole complex plane.
    pub fn plane() -> Self {
        Self { y_min: f64::NEG_INFINITY, y_max: f64::INFINITY, boundary: Boundary::Open }
    }

    /// The real axis, `Im z = 0`.
    pub fn real_axis() -> Self {
        Self { y_min: 0.0, y_max: 0.0, boundary: Boundary::Closed }
    }

    pub fn y_min(&self) -> f64 {
        self.y_min
    }

    pub fn y_max(&self) -> f64 {
        self.y_max
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    pub fn is_closed(&self) -> bool {
        self.boundary == Boundary::Closed
    }

    pub fn contains_y(&self, y: f64) -> bool {
        match self.boundary {
            Boundary::Closed => self.y_min <= y && y <= self.y_max,
            Boundary::Open => self.y_min < y && y < self.y_max,
        }
    }

    pub fn contains(&self, z: Point) -> bool {
        z.x.is_finite() && self.contains_y(z.y)
    }

    /// A closed substrip `[alpha, beta]`. For open strips the substrip has to
    /// stay strictly inside.
    pub fn substrip(&self, alpha: f64, beta: f64) -> Result<Strip> {
        let inside = match self.boundary {
            Boundary::Closed => self.y_min <= alpha && beta <= self.y_max,
            Boundary::Open => self.y_min < alpha && beta < self.y_max,
        };
        if !inside {
            return Err(Error::param(
                "substrip",
                format!(
                    "[{alpha}, {beta}] is not inside the strip ({}, {})",
                    self.y_min, self.y_max
                ),
            ));
        }
        Strip::closed(alpha, beta)
    }

    pub(crate) fn check(&self, z: Point) -> Result<()> {
        if self.contains(z) {
            Ok(())
        } else {
            Err(Error::OutsideStrip { x: z.x, y: z.y, y_min: self.y_min, y_max: self.y_max })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_requires_order() {
        assert!(Strip::closed(1.0, 0.0).is_err());
        assert!(Strip::closed(0.0, 0.0).is_ok());
        assert!(Strip::closed(f64::NEG_INFINITY, 0.0).is_err());
    }

    #[test]
    fn open_substrip_must_be_interior() {
        let s = Strip::open(-1.0, 1.0).unwrap();
        assert!(s.substrip(-1.0, 0.5).is_err());
        assert!(s.substrip(-0.5, 1.0).is_err());
        let sub = s.substrip(-0.5, 0.5).unwrap();
        assert!(sub.is_closed());
        assert!(sub.contains_y(0.5));
        assert!(!s.contains_y(1.0));
    }

    #[test]
    fn infinite_open_strip() {
        let p = Strip::plane();
        assert!(p.contains(Point::new(0.0, 1e300)));
        assert!(p.substrip(-10.0, 10.0).is_ok());
        let half = Strip::open(f64::NEG_INFINITY, 0.0).unwrap();
        assert!(half.substrip(-3.0, -1.0).is_ok());
        assert!(half.substrip(-3.0, 0.0).is_err());
    }
}
