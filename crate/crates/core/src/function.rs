//! Evaluable functions on strips and their algebra.
//!
//! Every function the crate analyses (exponential sums, separators, test
//! Gaussians, differences of these) is a [`Func`]: a cheap-to-clone handle
//! around an [`Evaluable`]. Evaluation never fails; a function evaluated
//! outside its domain returns NaN, and the integrators report that as an
//! [`Error::NonFinite`](crate::Error::NonFinite).

use crate::strip::Point;
use num_complex::Complex64;
use std::fmt;
use std::sync::Arc;

/// Deterministic map from points of a strip to complex values.
pub trait Evaluable: Send + Sync {
    fn eval(&self, z: Point) -> Complex64;
}

/// Shared handle to an evaluable function.
#[derive(Clone)]
pub struct Func(Arc<dyn Evaluable>);

impl fmt::Debug for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Func(..)")
    }
}

struct FromFn<F>(F);

impl<F> Evaluable for FromFn<F>
where
    F: Fn(Point) -> Complex64 + Send + Sync,
{
    fn eval(&self, z: Point) -> Complex64 {
        (self.0)(z)
    }
}

struct Sum(Func, Func);
struct Difference(Func, Func);
struct Scaled(Func, Complex64);
struct Shifted(Func, f64);
struct Modulated(Func, f64);

impl Evaluable for Sum {
    fn eval(&self, z: Point) -> Complex64 {
        self.0.eval(z) + self.1.eval(z)
    }
}

impl Evaluable for Difference {
    fn eval(&self, z: Point) -> Complex64 {
        self.0.eval(z) - self.1.eval(z)
    }
}

impl Evaluable for Scaled {
    fn eval(&self, z: Point) -> Complex64 {
        self.1 * self.0.eval(z)
    }
}

impl Evaluable for Shifted {
    fn eval(&self, z: Point) -> Complex64 {
        self.0.eval(z.shifted(self.1))
    }
}

impl Evaluable for Modulated {
    fn eval(&self, z: Point) -> Complex64 {
        Complex64::cis(self.1 * z.x) * self.0.eval(z)
    }
}

impl Func {
    pub fn new(inner: impl Evaluable + 'static) -> Self {
        Func(Arc::new(inner))
    }

    pub fn from_fn<F>(f: F) -> Self
    where
        F: Fn(Point) -> Complex64 + Send + Sync + 'static,
    {
        Func::new(FromFn(f))
    }

    pub fn constant(c: Complex64) -> Self {
        Func::from_fn(move |_| c)
    }

    pub fn zero() -> Self {
        Func::constant(Complex64::new(0.0, 0.0))
    }

    #[inline]
    pub fn eval(&self, z: Point) -> Complex64 {
        self.0.eval(z)
    }

    pub fn add(&self, other: &Func) -> Func {
        Func::new(Sum(self.clone(), other.clone()))
    }

    pub fn sub(&self, other: &Func) -> Func {
        Func::new(Difference(self.clone(), other.clone()))
    }

    pub fn scale(&self, c: Complex64) -> Func {
        Func::new(Scaled(self.clone(), c))
    }

    /// `z -> f(z + tau)`.
    pub fn shift(&self, tau: f64) -> Func {
        Func::new(Shifted(self.clone(), tau))
    }

    /// `z -> e^{i lambda x} f(z)`.
    pub fn modulate(&self, lambda: f64) -> Func {
        Func::new(Modulated(self.clone(), lambda))
    }
}

impl<E: Evaluable + 'static> From<E> for Func {
    fn from(e: E) -> Self {
        Func::new(e)
    }
}

/// `e^{-a (z - c)^2}` for real `a`, `c`.
pub fn gaussian(a: f64, center: f64) -> Func {
    Func::from_fn(move |z| {
        let w = Complex64::new(z.x - center, z.y);
        (-a * w * w).exp()
    })
}

/// `e^{i mu z}` for real `mu`; modulus `e^{-mu y}`.
pub fn exponential(mu: f64) -> Func {
    Func::from_fn(move |z| (Complex64::i() * mu * z.as_complex()).exp())
}
