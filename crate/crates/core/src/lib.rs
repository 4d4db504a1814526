//! Numerical analysis of almost-periodic functions on horizontal strips.
//!
//! The crate estimates uniform, Stepanov, Weyl and Besicovitch distances on
//! finite window ladders, builds Bochner-Fejér kernels and the exponential
//! sums they produce, and evaluates the explicit separating functions built
//! from Gaussian bumps on the ternary set
//! `I = {3^(l-1) (3k + 1)}`, together with the quantitative bounds they
//! satisfy.
//!
//! Every supremum is a sampled lower bound and every `limsup` is replaced by
//! a ladder of window sizes with a tail-max surrogate; nothing here certifies
//! a true supremum or limit.
//!
//! The `examples/` directory has one runnable program per capability, and
//! the `apstrip` binary runs the config-driven experiments in [`harness`].

pub mod bochner_fejer;
pub mod error;
pub mod exp_sum;
pub mod function;
pub mod grid;
pub mod harness;
pub mod metrics;
pub mod quadrature;
pub mod separators;
pub mod strip;
pub mod summation;

pub use error::{Error, Result};
pub use function::{Evaluable, Func};
pub use grid::{ArithGrid, TLadder};
pub use num_complex::Complex64;
pub use quadrature::{grid_sup, window_integral, QuadratureSpec, Rule};
pub use strip::{Point, Strip};
