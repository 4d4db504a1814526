use super::series::{Separator, SeparatorSpec};
use super::ternary::{is_in_i, progression_for_shift};
use crate::error::{Error, Result};
use crate::function::Evaluable;
use crate::strip::Point;
use crate::summation::NeumaierSum;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::PI;
use std::sync::OnceLock;

/// `1 - √π/2`, the gap between members and nonmembers of `I`.
pub fn member_gap() -> f64 {
    1.0 - PI.sqrt() / 2.0
}

fn t2_real(x: f64) -> f64 {
    Separator::new(SeparatorSpec::t2()).expect("default spec").eval(Point::real(x)).re
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Lemma1Bounds {
    pub r: i64,
    pub sup_nonmembers: f64,
    pub argsup_nonmembers: i64,
    pub inf_members: f64,
    pub arginf_members: i64,
    /// Sampled sup over the whole interval `[-R, R]`.
    pub dense_sup: f64,
}

/// Sup of the T2 separator over nonmembers and inf over members of `I` in
/// `[-R, R]`, plus a dense sampled sup at spacing `dense_step`.
pub fn lemma1_bounds(r: i64, dense_step: f64) -> Result<Lemma1Bounds> {
    if r < 10 {
        return Err(Error::param("R", format!("must be at least 10, got {r}")));
    }
    if !(dense_step > 0.0) {
        return Err(Error::param("dense_step", "must be positive"));
    }
    let mut out = Lemma1Bounds {
        r,
        sup_nonmembers: f64::NEG_INFINITY,
        argsup_nonmembers: 0,
        inf_members: f64::INFINITY,
        arginf_members: 0,
        dense_sup: f64::NEG_INFINITY,
    };
    for n in -r..=r {
        let v = t2_real(n as f64);
        if is_in_i(n) {
            if v < out.inf_members {
                out.inf_members = v;
                out.arginf_members = n;
            }
        } else if v > out.sup_nonmembers {
            out.sup_nonmembers = v;
            out.argsup_nonmembers = n;
        }
    }
    let steps = (2.0 * r as f64 / dense_step).floor() as usize;
    out.dense_sup = (0..=steps)
        .into_par_iter()
        .map(|i| t2_real(-(r as f64) + i as f64 * dense_step))
        .reduce(|| f64::NEG_INFINITY, f64::max);
    Ok(out)
}

/// `sup_x Σ_n 8|x - n| e^{-4(x - n)^2}` on a 1e-5 grid of `[0, 1]`, a
/// Lipschitz constant of the T2 separator on the real line.
pub fn lipschitz_constant() -> f64 {
    static LIP: OnceLock<f64> = OnceLock::new();
    *LIP.get_or_init(|| {
        (0..=100_000)
            .into_par_iter()
            .map(|i| {
                let x = i as f64 * 1e-5;
                (-9..=10)
                    .map(|n| {
                        let d = x - n as f64;
                        8.0 * d.abs() * (-4.0 * d * d).exp()
                    })
                    .collect::<NeumaierSum>()
                    .total()
            })
            .reduce(|| 0.0, f64::max)
    })
}

/// Smallest `N` with `Lip / N < (1 - √π/2) / 2`.
pub fn continuity_index() -> u32 {
    let half_gap = member_gap() / 2.0;
    let mut n = 1;
    while lipschitz_constant() / f64::from(n) >= half_gap {
        n += 1;
    }
    n
}

/// `γ = (1 - √π/2) / (2N)`.
pub fn gamma(n: u32) -> f64 {
    member_gap() / (2.0 * f64::from(n))
}

/// `δ = γ / (5 Lip)`: shifts shorter than `δ` move the separator by at most `γ/5`.
pub fn modulus_delta(gamma: f64) -> f64 {
    gamma / (5.0 * lipschitz_constant())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiscrepancyReport {
    pub tau: f64,
    #[serde(rename = "N")]
    pub n: u32,
    pub gamma: f64,
    #[serde(rename = "M")]
    pub m: u32,
    pub q: i64,
    pub x: f64,
    pub delta_f: f64,
    /// The element of `I(q)` the scan started from.
    pub start: i64,
    /// Difference `L` of the progression `I(q)`.
    pub difference: i64,
}

impl DiscrepancyReport {
    pub const CSV_COLUMNS: [&'static str; 7] = ["tau", "N", "gamma", "M", "q", "x", "delta_f"];

    pub fn csv_row(&self) -> Vec<String> {
        vec![
            self.tau.to_string(),
            self.n.to_string(),
            self.gamma.to_string(),
            self.m.to_string(),
            self.q.to_string(),
            self.x.to_string(),
            self.delta_f.to_string(),
        ]
    }

    pub fn to_csv(reports: &[DiscrepancyReport]) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(Self::CSV_COLUMNS).expect("in-memory write");
        for r in reports {
            w.write_record(r.csv_row()).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string(self).map_err(|e| Error::Json(e.to_string()))
    }

    /// `|Mτ - q| <= 1/N`.
    pub fn certificate_holds(&self) -> bool {
        (f64::from(self.m) * self.tau - self.q as f64).abs() <= 1.0 / f64::from(self.n)
    }

    /// `x` lies in `[a, a + L + Nτ]` (for negative `τ` the window extends left).
    pub fn within_window(&self, a: f64) -> bool {
        let reach = f64::from(self.n) * self.tau;
        let (lo, hi) = (a + reach.min(0.0), a + self.difference as f64 + reach.max(0.0));
        self.x >= lo && self.x <= hi
    }
}

/// First `M` in `1..=N` with `|Mτ - round(Mτ)| <= 1/N`, and that rounding.
pub fn pigeonhole(tau: f64, n: u32) -> (u32, i64) {
    (1..=n)
        .map(|m| (m, (f64::from(m) * tau).round()))
        .find(|&(m, q)| (f64::from(m) * tau - q).abs() <= 1.0 / f64::from(n))
        .map(|(m, q)| (m, q as i64))
        .expect("N + 1 multiples cannot all be 1/N apart")
}

/// A point `x` with `|f(x + τ) - f(x)| > γ` for the T2 separator, found by
/// scanning `x = n + k τ`, `0 <= k <= M`, from the first `n ∈ I(q)` at or
/// after `a`.
pub fn discrepancy_search(tau: f64, a: f64) -> Result<DiscrepancyReport> {
    if !(tau.abs() >= 1.0) || !tau.is_finite() {
        return Err(Error::param("tau", format!("|tau| must be at least 1, got {tau}")));
    }
    if !a.is_finite() {
        return Err(Error::param("a", "must be finite"));
    }
    let n_idx = continuity_index();
    let gamma = gamma(n_idx);
    let (m, q) = pigeonhole(tau, n_idx);
    let prog = progression_for_shift(q)?;
    let start = prog.first_at_or_after(a);
    for k in 0..=m {
        let x = start as f64 + f64::from(k) * tau;
        let delta_f = (t2_real(x + tau) - t2_real(x)).abs();
        if delta_f > gamma {
            return Ok(DiscrepancyReport { tau, n: n_idx, gamma, m, q, x, delta_f, start, difference: prog.difference });
        }
    }
    Err(Error::DiscrepancyNotFound { tau, gamma, lo: a, hi: a + prog.difference as f64 + f64::from(n_idx) * tau })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Lemma4Check {
    pub x: f64,
    pub p: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub ok: bool,
}

/// `(Σ κ_n(x))^p` against `2^{p-1} Σ κ_n(x)`, `κ_n(x) = e^{-4(x - 3n)^2}`,
/// summed over the `n` with `|x - 3n| <= 9`.
pub fn lemma4_check(x: f64, p: f64) -> Result<Lemma4Check> {
    if !(p >= 1.0) || !p.is_finite() {
        return Err(Error::param("p", format!("must be at least 1, got {p}")));
    }
    let lo = ((x - 9.0) / 3.0).ceil() as i64;
    let hi = ((x + 9.0) / 3.0).floor() as i64;
    let s: f64 = (lo..=hi)
        .map(|n| (-4.0 * (x - 3.0 * n as f64).powi(2)).exp())
        .collect::<NeumaierSum>()
        .total();
    let lhs = s.powf(p);
    let rhs = 2f64.powf(p - 1.0) * s;
    Ok(Lemma4Check { x, p, lhs, rhs, ok: lhs <= rhs + 1e-12 })
}
