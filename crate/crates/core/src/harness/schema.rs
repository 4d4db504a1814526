use super::config::{ExperimentConfig, ExperimentId, Kind, ParamDef};
use crate::error::{Error, Result};

const fn def(name: &'static str, kind: Kind, default: &'static str, doc: &'static str) -> ParamDef {
    ParamDef { name, kind, default, doc }
}

use Kind::{Int, Ints, Real, Reals};

const LADDER_T0: ParamDef = def("t0", Real, "3", "first window half-width");
const LADDER_GROWTH: ParamDef = def("growth", Real, "3", "ratio between successive half-widths");
const QUAD_H: ParamDef = def("h", Real, "0.02", "quadrature node spacing");

const METRICS_ORDERING: &[ParamDef] = &[
    def("pairs", Int, "20", "number of exponential-sum pairs"),
    def("terms", Int, "3", "terms per exponential sum"),
    def("max_frequency", Real, "3", "frequencies drawn from [-max, max]"),
    def("H", Real, "0.5", "substrip half-height"),
    def("y_divisions", Int, "2", "height divisions of the substrip"),
    def("t0", Real, "1.5", "first window half-width"),
    LADDER_GROWTH,
    def("rungs", Int, "3", "ladder length"),
    def("shift_max", Real, "6", "shifts run over [0, shift_max]"),
    def("x_step", Real, "0.1", "shift spacing"),
    def("p", Reals, "1,2,4", "exponents for the p-monotonicity check"),
    def("bridge_L", Reals, "1.5,10.5", "window lengths for the Stepanov-Weyl bridge"),
    QUAD_H,
];

const KERNEL_PROPERTIES: &[ParamDef] = &[
    def("max_degree", Int, "8", "kernels are built for degrees 1..=max_degree"),
    def("t_max", Real, "100", "K(t) is sampled on [-t_max, t_max]"),
    def("t_step", Real, "0.01", "sampling step for K(t)"),
];

const THEOREM1_APPROX: &[ParamDef] = &[
    def("m", Int, "2", "basis {2π/3^m}"),
    def("degrees", Ints, "4,16,64", "kernel degrees, increasing"),
    def("fit_T", Real, "729", "mean-value window half-width for the coefficients"),
    LADDER_T0,
    LADDER_GROWTH,
    def("rungs", Int, "5", "Weyl ladder length"),
    def("x_step", Real, "0.1", "shift spacing over one period 3^m"),
    QUAD_H,
];

const LEMMA1: &[ParamDef] = &[
    def("R", Int, "100", "integers in [-R, R] are scanned"),
    def("dense_step", Real, "0.01", "spacing of the dense real-line scan"),
];

const LEMMA2: &[ParamDef] = &[
    def("q_max", Int, "50", "shifts q in [-q_max, q_max] without 0"),
    def("j_max", Int, "200", "progression indices j in [-j_max, j_max]"),
];

const LEMMA3: &[ParamDef] = &[
    def("tau", Reals, "1,1.4142135623730951,3.141592653589793,2.5", "shifts, |tau| >= 1"),
    def("a", Real, "0", "left end of the search window"),
];

const LEMMA4: &[ParamDef] = &[
    def("x_min", Real, "0", "scan start"),
    def("x_max", Real, "3", "scan end"),
    def("x_step", Real, "0.001", "scan spacing"),
    def("p", Reals, "1,1.5,2,3", "exponents, each >= 1"),
];

const THEOREM2_RATE: &[ParamDef] = &[
    def("m", Ints, "1,2,3,4", "partial-sum levels"),
    def("H", Reals, "0,0.5", "substrip half-heights"),
    LADDER_T0,
    LADDER_GROWTH,
    def("rungs", Int, "6", "ladder length"),
    def("shift_periods", Int, "3", "shifts cover [0, shift_periods * 3^m]"),
    def("x_step", Real, "0.1", "shift spacing"),
    def("y_divisions", Int, "8", "height divisions of the substrip"),
    QUAD_H,
];

const THEOREM3_SEPARATION: &[ParamDef] = &[
    def("p", Real, "2", "exponent"),
    def("T0", Real, "0.5", "window half-width at the centers"),
    def("l_min", Int, "2", "first level"),
    def("l_max", Int, "6", "last level"),
    def("n_min", Int, "-2", "first center index"),
    def("n_max", Int, "2", "last center index"),
    LADDER_T0,
    LADDER_GROWTH,
    def("rungs", Int, "6", "Besicovitch ladder length"),
    def("tail_m", Int, "6", "level of the tail bound used for the cap"),
    def("cap_factor", Real, "10", "cap = cap_factor * tail bound"),
    QUAD_H,
];

const THEOREM4_SEPARATION: &[ParamDef] = &[
    def("p", Real, "1", "Besicovitch exponent"),
    def("p_prime", Real, "2", "window exponent p' (also accepted as p')"),
    def("p0", Real, "1.5", "series exponent, p < p0 < p'"),
    def("l_min", Int, "2", "first level"),
    def("l_max", Int, "8", "last level"),
    def("n", Int, "1", "center index"),
    def("T0", Real, "0.5", "window half-width at the centers"),
    LADDER_T0,
    LADDER_GROWTH,
    def("rungs", Int, "6", "Besicovitch ladder length"),
    QUAD_H,
];

const MEAN_VALUE: &[ParamDef] = &[
    LADDER_T0,
    LADDER_GROWTH,
    def("rungs", Int, "8", "ladder length; the last rung is the surrogate"),
    def("sums", Int, "10", "exponential sums checked against their mean coefficient"),
    def("shift_max", Real, "100", "window shifts in [0, shift_max] for the uniformity residual"),
    def("shift_step", Real, "0.5", "spacing of those shifts"),
    QUAD_H,
];

pub(super) fn params(id: ExperimentId) -> &'static [ParamDef] {
    match id {
        ExperimentId::MetricsOrdering => METRICS_ORDERING,
        ExperimentId::KernelProperties => KERNEL_PROPERTIES,
        ExperimentId::Theorem1Approx => THEOREM1_APPROX,
        ExperimentId::Lemma1 => LEMMA1,
        ExperimentId::Lemma2 => LEMMA2,
        ExperimentId::Lemma3 => LEMMA3,
        ExperimentId::Lemma4 => LEMMA4,
        ExperimentId::Theorem2Rate => THEOREM2_RATE,
        ExperimentId::Theorem3Separation => THEOREM3_SEPARATION,
        ExperimentId::Theorem4Separation => THEOREM4_SEPARATION,
        ExperimentId::MeanValue => MEAN_VALUE,
    }
}

fn positive(cfg: &ExperimentConfig, names: &[&'static str]) -> Result<()> {
    for &n in names {
        if !(cfg.real(n) > 0.0) {
            return Err(Error::param(n, format!("must be positive, got {}", cfg.real(n))));
        }
    }
    Ok(())
}

fn at_least(cfg: &ExperimentConfig, name: &'static str, min: i64) -> Result<()> {
    if cfg.int(name) < min {
        return Err(Error::param(name, format!("must be at least {min}, got {}", cfg.int(name))));
    }
    Ok(())
}

fn ladder(cfg: &ExperimentConfig) -> Result<()> {
    positive(cfg, &["t0", "h"])?;
    if !(cfg.real("growth") > 1.0) {
        return Err(Error::param("growth", "must exceed 1"));
    }
    at_least(cfg, "rungs", 1)
}

pub(super) fn validate(cfg: &ExperimentConfig) -> Result<()> {
    match cfg.experiment {
        ExperimentId::MetricsOrdering => {
            ladder(cfg)?;
            at_least(cfg, "pairs", 1)?;
            at_least(cfg, "terms", 1)?;
            at_least(cfg, "y_divisions", 1)?;
            positive(cfg, &["max_frequency", "shift_max", "x_step"])?;
            if !(cfg.real("H") >= 0.0) {
                return Err(Error::param("H", "must be nonnegative"));
            }
            if cfg.reals("p").iter().any(|&p| !(p >= 1.0)) {
                return Err(Error::param("p", "every exponent must be at least 1"));
            }
            if cfg.reals("bridge_L").iter().any(|&l| !(l >= 1.0)) {
                return Err(Error::param("bridge_L", "window lengths must be at least 1"));
            }
        }
        ExperimentId::KernelProperties => {
            at_least(cfg, "max_degree", 1)?;
            if cfg.int("max_degree") > 64 {
                return Err(Error::param("max_degree", "must not exceed 64"));
            }
            positive(cfg, &["t_max", "t_step"])?;
        }
        ExperimentId::Theorem1Approx => {
            ladder(cfg)?;
            positive(cfg, &["fit_T", "x_step"])?;
            if !(1..=8).contains(&cfg.int("m")) {
                return Err(Error::param("m", "must lie in 1..=8"));
            }
            let d = cfg.ints("degrees");
            if d.iter().any(|&n| n < 1) || d.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::param("degrees", "must be positive and strictly increasing"));
            }
        }
        ExperimentId::Lemma1 => {
            at_least(cfg, "R", 10)?;
            positive(cfg, &["dense_step"])?;
        }
        ExperimentId::Lemma2 => {
            at_least(cfg, "q_max", 1)?;
            at_least(cfg, "j_max", 0)?;
        }
        ExperimentId::Lemma3 => {
            if cfg.reals("tau").iter().any(|t| !(t.abs() >= 1.0)) {
                return Err(Error::param("tau", "every shift must satisfy |tau| >= 1"));
            }
        }
        ExperimentId::Lemma4 => {
            positive(cfg, &["x_step"])?;
            if cfg.real("x_max") < cfg.real("x_min") {
                return Err(Error::param("x_max", "must not be below x_min"));
            }
            if cfg.reals("p").iter().any(|&p| !(p >= 1.0)) {
                return Err(Error::param("p", "every exponent must be at least 1"));
            }
        }
        ExperimentId::Theorem2Rate => {
            ladder(cfg)?;
            positive(cfg, &["x_step"])?;
            at_least(cfg, "shift_periods", 1)?;
            at_least(cfg, "y_divisions", 1)?;
            if cfg.ints("m").iter().any(|m| !(1..=12).contains(m)) {
                return Err(Error::param("m", "levels must lie in 1..=12"));
            }
            if cfg.reals("H").iter().any(|&h| !(h >= 0.0)) {
                return Err(Error::param("H", "half-heights must be nonnegative"));
            }
        }
        ExperimentId::Theorem3Separation => {
            ladder(cfg)?;
            positive(cfg, &["T0", "cap_factor"])?;
            if !(cfg.real("p") >= 1.0) {
                return Err(Error::param("p", "must be at least 1"));
            }
            at_least(cfg, "l_min", 1)?;
            at_least(cfg, "tail_m", 1)?;
            if cfg.int("l_max") < cfg.int("l_min") || cfg.int("l_max") > 12 {
                return Err(Error::param("l_max", "must lie in l_min..=12"));
            }
            if cfg.int("n_max") < cfg.int("n_min") {
                return Err(Error::param("n_max", "must not be below n_min"));
            }
        }
        ExperimentId::Theorem4Separation => {
            ladder(cfg)?;
            positive(cfg, &["T0"])?;
            let (p, pp, p0) = (cfg.real("p"), cfg.real("p_prime"), cfg.real("p0"));
            if !(p >= 1.0) {
                return Err(Error::param("p", "must be at least 1"));
            }
            if !(pp > p) {
                return Err(Error::param("p_prime", "p' must exceed p"));
            }
            if !(p0 > p && p0 < pp) {
                return Err(Error::param("p0", "p0 must lie strictly between p and p'"));
            }
            at_least(cfg, "l_min", 1)?;
            if cfg.int("l_max") < cfg.int("l_min") + 1 || cfg.int("l_max") > 12 {
                return Err(Error::param("l_max", "must lie in l_min+1..=12"));
            }
        }
        ExperimentId::MeanValue => {
            ladder(cfg)?;
            at_least(cfg, "sums", 1)?;
            positive(cfg, &["shift_step"])?;
            if !(cfg.real("shift_max") >= 0.0) {
                return Err(Error::param("shift_max", "must be nonnegative"));
            }
        }
    }
    Ok(())
}
