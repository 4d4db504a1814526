//! Bochner-Fejér kernels over a rational frequency basis and the exponential
//! sums obtained by convolving with them.
//!
//! For an exponential sum the convolution is exact: each coefficient is
//! multiplied by the kernel weight at its frequency. For a general function
//! the Bohr-Fourier coefficients are estimated by long-window means and then
//! weighted the same way.

mod approx;
mod basis;
mod kernel;

pub use approx::{bf_approximate, fit_profile, fourier_estimates, ApproxOptions, ProfileFamily};
pub use basis::{RationalBasis, DEFAULT_MAX_DENOMINATOR};
pub use kernel::{fejer_weight, BochnerFejerKernel, KernelEntry};

use crate::error::Result;

/// Shorthand for [`BochnerFejerKernel::build`].
pub fn build_kernel(basis: RationalBasis, degrees: &[u32]) -> Result<BochnerFejerKernel> {
    BochnerFejerKernel::build(basis, degrees)
}

#[cfg(test)]
mod tests;
