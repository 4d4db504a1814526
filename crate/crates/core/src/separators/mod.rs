//! The separating functions built from Gaussian bumps on the ternary set
//! `I = {3^{l-1}(3k + 1)}` and the combinatorics and bounds around them.
//!
//! * T2: `Σ_{n ∈ I} e^{-4(z - n)^2}`
//! * T3: `Σ_l l φ_l(z)`
//! * T4: `Σ_l 3^{l/p0} φ_l(z)`
//!
//! where `φ_l` collects the bumps centered on the level-`l` members of `I`.

mod bounds;
mod lemmas;
mod series;
mod ternary;

pub use bounds::{
    gauss_window, level_center, level_threshold, t3_besicovitch_envelope, windowed_norm_at_centers, TheoremBound,
    WindowedNorm,
};
pub use lemmas::{
    continuity_index, discrepancy_search, gamma, lemma1_bounds, lemma4_check, lipschitz_constant, member_gap,
    modulus_delta, pigeonhole, DiscrepancyReport, Lemma1Bounds, Lemma4Check,
};
pub use series::{
    partial_sum_f_m, phi_l, separator_eval, Separator, SeparatorSpec, Variant, DEFAULT_L_MAX, DEFAULT_W,
};
pub use ternary::{is_in_i, level, progression_for_shift, ProgressionIq};
