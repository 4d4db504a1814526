use thiserror::Error;

/// Errors raised by the numerical operations in this crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("point {x} + {y}i lies outside the strip [{y_min}, {y_max}]")]
    OutsideStrip { x: f64, y: f64, y_min: f64, y_max: f64 },

    #[error("non-finite value at node x = {x}, y = {y}")]
    NonFinite { x: f64, y: f64 },

    #[error("empty sample grid")]
    EmptyGrid,

    #[error("duplicate frequency {0} in exponential sum")]
    DuplicateFrequency(f64),

    #[error("coefficient profiles of kinds `{0}` and `{1}` cannot be combined in closed form")]
    IncompatibleProfiles(&'static str, &'static str),

    #[error("kernel would need {0} coefficient tuples (limit 10^7)")]
    KernelTooLarge(u128),

    #[error("basis ratio {ratio} is rational ({num}/{den}) within the independence check")]
    RationalBasis { ratio: f64, num: i64, den: i64 },

    #[error("kernel symmetry violated: imaginary residue {residue} at t = {t}")]
    KernelAsymmetry { t: f64, residue: f64 },

    #[error("profile fit at frequency {lambda} left relative residual {residual} (tolerance {tolerance})")]
    FitResidual { lambda: f64, residual: f64, tolerance: f64 },

    #[error("no discrepancy point above gamma = {gamma} found for tau = {tau} in [{lo}, {hi}]")]
    DiscrepancyNotFound { tau: f64, gamma: f64, lo: f64, hi: f64 },

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn param(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { name, reason: reason.into() }
    }
}
