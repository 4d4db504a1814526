use super::config::{ExperimentConfig, ExperimentId};
use super::samples::random_exp_sum;
use super::table::{Cell, Check, ResultTable};
use crate::bochner_fejer::{bf_approximate, build_kernel, ApproxOptions, ProfileFamily, RationalBasis};
use crate::error::Result;
use crate::exp_sum::ExpSum;
use crate::function::Func;
use crate::grid::{ArithGrid, TLadder};
use crate::metrics::{
    besicovitch_distance, mean_value, stepanov_distance, uniform_distance, weyl_distance, SupShiftGrid,
};
use crate::quadrature::{QuadratureSpec, Rule};
use crate::separators::{
    continuity_index, discrepancy_search, gamma, is_in_i, lemma1_bounds, lemma4_check, member_gap,
    progression_for_shift, windowed_norm_at_centers, Separator, SeparatorSpec, TheoremBound,
};
use crate::strip::Strip;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::f64::consts::{PI, SQRT_2};

const PAIR_SEED: u64 = 0x5eed_0001;
const MEAN_SEED: u64 = 0x5eed_0002;

fn ladder(cfg: &ExperimentConfig) -> Result<TLadder> {
    TLadder::new(cfg.real("t0"), cfg.real("growth"), cfg.int("rungs") as usize)
}

fn simpson(cfg: &ExperimentConfig) -> Result<QuadratureSpec> {
    QuadratureSpec::new(cfg.real("h"), Rule::Simpson, true)
}

fn t2() -> Func {
    Separator::new(SeparatorSpec::t2()).expect("default spec").into_func()
}

fn blank() -> Cell {
    Cell::Text(String::new())
}

pub(super) fn run(cfg: &ExperimentConfig) -> Result<ResultTable> {
    match cfg.experiment {
        ExperimentId::MetricsOrdering => metrics_ordering(cfg),
        ExperimentId::KernelProperties => kernel_properties(cfg),
        ExperimentId::Theorem1Approx => theorem1_approx(cfg),
        ExperimentId::Lemma1 => lemma1(cfg),
        ExperimentId::Lemma2 => lemma2(cfg),
        ExperimentId::Lemma3 => lemma3(cfg),
        ExperimentId::Lemma4 => lemma4(cfg),
        ExperimentId::Theorem2Rate => theorem2_rate(cfg),
        ExperimentId::Theorem3Separation => theorem3_separation(cfg),
        ExperimentId::Theorem4Separation => theorem4_separation(cfg),
        ExperimentId::MeanValue => mean_value_experiment(cfg),
    }
}

fn metrics_ordering(cfg: &ExperimentConfig) -> Result<ResultTable> {
    let mut table = ResultTable::new(cfg, &["relation", "pair", "p", "T", "lhs", "rhs"]);
    let ladder = ladder(cfg)?;
    let quad = simpson(cfg)?;
    let h = cfg.real("H");
    let strip = Strip::closed(-h, h)?;
    let shift_max = cfg.real("shift_max");
    let grid = SupShiftGrid::over(&strip, 0.0, shift_max, cfg.real("x_step"), cfg.int("y_divisions") as usize)?;
    let reach = ladder.last();
    let dense = SupShiftGrid::new(ArithGrid::span(-reach, shift_max + reach, quad.h)?, grid.y)?;
    let mut ps = cfg.reals("p").to_vec();
    ps.sort_by(f64::total_cmp);
    let mut rng = ChaCha8Rng::seed_from_u64(PAIR_SEED);
    let terms = cfg.int("terms") as usize;
    let max_freq = cfg.real("max_frequency");
    let trapezoid = QuadratureSpec::new(quad.h, Rule::Trapezoid, true)?;
    let mut worst = [f64::NEG_INFINITY; 4];
    let names = ["B<=W", "W<=U", "Wp<=Wq", "bridge"];
    for pair in 0..cfg.int("pairs") {
        let f = Func::from(random_exp_sum(&mut rng, terms, max_freq, true));
        let g = Func::from(random_exp_sum(&mut rng, terms, max_freq, true));
        let uniform = uniform_distance(&f, &g, &strip, &dense)?;
        let mut previous: Option<(f64, Vec<f64>)> = None;
        for &p in &ps {
            let w = weyl_distance(&f, &g, p, &strip, &grid, &ladder, &quad)?;
            let b = besicovitch_distance(&f, &g, p, &strip, &grid.y, &ladder, &quad)?;
            for ((rw, rb), t) in w.values().iter().zip(b.values()).zip(ladder.values()) {
                table.push(vec!["B<=W".into(), pair.into(), p.into(), t.into(), rb.into(), (*rw).into()]);
                table.push(vec!["W<=U".into(), pair.into(), p.into(), t.into(), (*rw).into(), uniform.into()]);
                worst[0] = worst[0].max(rb - rw);
                worst[1] = worst[1].max(rw - uniform);
            }
            if let Some((_, prev)) = &previous {
                for ((lo, hi), t) in prev.iter().zip(w.values()).zip(ladder.values()) {
                    table.push(vec!["Wp<=Wq".into(), pair.into(), p.into(), t.into(), (*lo).into(), hi.into()]);
                    worst[2] = worst[2].max(lo - hi);
                }
            }
            previous = Some((p, w.values()));
        }
        for &len in cfg.reals("bridge_L") {
            let p = ps[0];
            let half = len / 2.0;
            let single = TLadder::new(half, 2.0, 1)?;
            let w = weyl_distance(&f, &g, p, &strip, &grid, &single, &trapezoid)?.values()[0];
            let sgrid = SupShiftGrid::new(ArithGrid::span(-half, shift_max + half, cfg.real("x_step"))?, grid.y)?;
            let s = stepanov_distance(&f, &g, p, &strip, &sgrid, &trapezoid)?;
            let lhs = w.powf(p);
            let rhs = (len.floor() + 1.0) / len * s.powf(p);
            table.push(vec!["bridge".into(), pair.into(), p.into(), half.into(), lhs.into(), rhs.into()]);
            worst[3] = worst[3].max(lhs - rhs);
        }
    }
    for (name, w) in names.iter().zip(worst) {
        table.check(Check::at_most(format!("max({name} excess)"), w, 1e-9));
    }
    Ok(table)
}

fn kernel_properties(cfg: &ExperimentConfig) -> Result<ResultTable> {
    let mut table = ResultTable::new(
        cfg,
        &["basis", "N", "entries", "min_weight", "max_weight", "zero_weight", "symmetric", "min_eval", "probe_weight"],
    );
    let t_max = cfg.real("t_max");
    let ts = ArithGrid::span(-t_max, t_max, cfg.real("t_step"))?;
    let mut ok_range = true;
    let mut ok_sym = true;
    let mut ok_zero = true;
    let mut ok_count = true;
    let mut min_eval = f64::INFINITY;
    let mut monotone = true;
    for (label, betas) in [("1", vec![1.0]), ("1;sqrt2", vec![1.0, SQRT_2])] {
        let basis = RationalBasis::new(betas)?;
        let mut last_probe = 0.0;
        for n in 1..=cfg.int("max_degree") as u32 {
            let degrees = vec![n; basis.dim()];
            let k = build_kernel(basis.clone(), &degrees)?;
            let weights: Vec<f64> = k.entries().iter().map(|e| e.weight).collect();
            let lo = weights.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = weights.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let symmetric = k.entries().iter().all(|e| {
                let neg: Vec<i32> = e.tuple.iter().map(|r| -r).collect();
                k.coefficient(&neg) == e.weight
            });
            let zero = k.coefficient(&vec![0; basis.dim()]);
            let evals: Vec<f64> =
                (0..ts.count).into_par_iter().map(|i| k.eval(ts.point(i))).collect::<Result<_>>()?;
            let low = evals.iter().copied().fold(f64::INFINITY, f64::min);
            let probe = k.coefficient(&vec![1; basis.dim()]);
            ok_range &= lo >= 0.0 && hi <= 1.0;
            ok_sym &= symmetric;
            ok_zero &= zero == 1.0;
            ok_count &= k.entries().len() == (2 * n as usize + 1).pow(basis.dim() as u32);
            min_eval = min_eval.min(low);
            monotone &= probe > last_probe && probe < 1.0;
            last_probe = probe;
            table.push(vec![
                label.into(),
                n.into(),
                k.entries().len().into(),
                lo.into(),
                hi.into(),
                zero.into(),
                symmetric.into(),
                low.into(),
                probe.into(),
            ]);
        }
    }
    table.check(Check::holds("0 <= k <= 1", ok_range));
    table.check(Check::holds("k(r) = k(-r)", ok_sym));
    table.check(Check::holds("k(0) = 1", ok_zero));
    table.check(Check::holds("finite support of size Π(2N_j+1)", ok_count));
    table.check(Check::at_least("min K(t)", min_eval, -1e-9));
    table.check(Check::holds("fixed-tuple weight increases toward 1", monotone));
    Ok(table)
}

fn theorem1_approx(cfg: &ExperimentConfig) -> Result<ResultTable> {
    let mut table = ResultTable::new(cfg, &["N", "terms", "T", "weyl1"]);
    let m = cfg.int("m") as i32;
    let period = 3f64.powi(m);
    let basis = RationalBasis::new(vec![2.0 * PI / period])?;
    let quad = simpson(cfg)?;
    let fit = TLadder::new(cfg.real("fit_T"), 2.0, 1)?;
    let ladder = ladder(cfg)?;
    let line = Strip::closed(0.0, 0.0)?;
    let grid = SupShiftGrid::over(&line, 0.0, period, cfg.real("x_step"), 1)?;
    let f = t2();
    let options = ApproxOptions { family: ProfileFamily::Holomorphic, tolerance: 1e-6 };
    let mut previous: Option<Vec<f64>> = None;
    let mut decreasing = true;
    for &n in cfg.ints("degrees") {
        let k = build_kernel(basis.clone(), &[n as u32])?;
        let approx = bf_approximate(&f, &k, &[0.0], &fit, &quad, &options)?;
        let w = weyl_distance(&f, &Func::from(approx.clone()), 1.0, &line, &grid, &ladder, &quad)?;
        let values = w.values();
        for (t, v) in ladder.values().into_iter().zip(&values) {
            table.push(vec![n.into(), approx.len().into(), t.into(), (*v).into()]);
        }
        if let Some(prev) = &previous {
            decreasing &= prev.iter().zip(&values).all(|(a, b)| b < a);
        }
        previous = Some(values);
    }
    table.check(Check::holds("Weyl-1 rungs decrease as the degree grows", decreasing));
    Ok(table)
}

fn lemma1(cfg: &ExperimentConfig) -> Result<ResultTable> {
    let mut table = ResultTable::new(
        cfg,
        &["R", "sup_nonmembers", "argsup_nonmembers", "inf_members", "arginf_members", "dense_sup"],
    );
    let b = lemma1_bounds(cfg.int("R"), cfg.real("dense_step"))?;
    table.push(vec![
        b.r.into(),
        b.sup_nonmembers.into(),
        b.argsup_nonmembers.into(),
        b.inf_members.into(),
        b.arginf_members.into(),
        b.dense_sup.into(),
    ]);
    table.check(Check::at_most("sup over nonmembers", b.sup_nonmembers, PI.sqrt() / 2.0 + 1e-6));
    table.check(Check::at_least("inf over members", b.inf_members, 1.0 - 1e-9));
    table.check(Check::at_least("sup over nonmembers (witness at 0)", b.sup_nonmembers, (-4f64).exp()));
    Ok(table)
}

fn lemma2(cfg: &ExperimentConfig) -> Result<ResultTable> {
    let mut table = ResultTable::new(cfg, &["q", "start", "difference", "outside_I", "shift_inside_I"]);
    let q_max = cfg.int("q_max");
    let j_max = cfg.int("j_max");
    let mut total = 0usize;
    for q in (-q_max..=q_max).filter(|&q| q != 0) {
        let prog = progression_for_shift(q)?;
        let (mut outside, mut inside) = (0usize, 0usize);
        for j in -j_max..=j_max {
            let n = prog.element(j);
            outside += usize::from(!is_in_i(n));
            inside += usize::from(is_in_i(n + q));
        }
        total += outside + inside;
        table.push(vec![q.into(), prog.start.into(), prog.difference.into(), outside.into(), inside.into()]);
    }
    table.check(Check::at_most("membership violations", total as f64, 0.0));
    Ok(table)
}

fn lemma3(cfg: &ExperimentConfig) -> Result<ResultTable> {
    let mut table = ResultTable::new(cfg, &["tau", "N", "gamma", "M", "q", "x", "delta_f"]);
    let a = cfg.real("a");
    for &tau in cfg.reals("tau") {
        let r = discrepancy_search(tau, a)?;
        table.push(r.csv_row().into_iter().map(Cell::Text).collect());
        table.check(Check::above(format!("tau={tau}: delta_f > gamma"), r.delta_f, r.gamma));
        table.check(Check::at_most(
            format!("tau={tau}: |M tau - q|"),
            (f64::from(r.m) * tau - r.q as f64).abs(),
            1.0 / f64::from(r.n),
        ));
        table.check(Check::holds(format!("tau={tau}: 1 <= M <= N"), r.m >= 1 && r.m <= r.n));
        table.check(Check::holds(format!("tau={tau}: x in [a, a + L + N tau]"), r.within_window(a)));
        if tau == 1.0 {
            table.check(Check::at_least("tau=1: delta_f >= 1 - √π/2", r.delta_f, member_gap() - 1e-6));
        }
    }
    debug_assert_eq!(gamma(continuity_index()), member_gap() / (2.0 * f64::from(continuity_index())));
    Ok(table)
}

fn lemma4(cfg: &ExperimentConfig) -> Result<ResultTable> {
    let mut table = ResultTable::new(cfg, &["p", "points", "max_lhs_minus_rhs", "max_lhs", "violations"]);
    let xs = ArithGrid::span(cfg.real("x_min"), cfg.real("x_max"), cfg.real("x_step"))?;
    let mut total = 0usize;
    for &p in cfg.reals("p") {
        let mut worst = f64::NEG_INFINITY;
        let mut max_lhs = 0.0f64;
        let mut bad = 0usize;
        for x in xs.points() {
            let c = lemma4_check(x, p)?;
            worst = worst.max(c.lhs - c.rhs);
            max_lhs = max_lhs.max(c.lhs);
            bad += usize::from(!c.ok);
        }
        total += bad;
        table.push(vec![p.into(), xs.count.into(), worst.into(), max_lhs.into(), bad.into()]);
    }
    table.check(Check::at_most("points with lhs > rhs + 1e-12", total as f64, 0.0));
    Ok(table)
}

fn theorem2_rate(cfg: &ExperimentConfig) -> Result<ResultTable> {
    let mut table = ResultTable::new(cfg, &["m", "H", "T", "weyl1", "bound", "finite_T_bound"]);
    let ladder = ladder(cfg)?;
    let quad = simpson(cfg)?;
    let f = t2();
    let spec = SeparatorSpec::t2();
    for &m in cfg.ints("m") {
        let m = m as u32;
        let g = Separator::partial(spec, m)?.into_func();
        let span = cfg.int("shift_periods") as f64 * 3f64.powi(m as i32);
        for &h in cfg.reals("H") {
            let strip = Strip::closed(-h, h)?;
            let grid = SupShiftGrid::over(&strip, 0.0, span, cfg.real("x_step"), cfg.int("y_divisions") as usize)?;
            let w = weyl_distance(&f, &g, 1.0, &strip, &grid, &ladder, &quad)?;
            let bound = TheoremBound::T2 { m, h }.value()?;
            let mut worst = f64::NEG_INFINITY;
            let mut worst_finite = f64::NEG_INFINITY;
            for r in &w.rungs {
                let finite = TheoremBound::T2Finite { m, h, t: r.t }.value()?;
                worst = worst.max(r.value);
                worst_finite = worst_finite.max(r.value - finite);
                table.push(vec![m.into(), h.into(), r.t.into(), r.value.into(), bound.into(), finite.into()]);
            }
            table.check(Check::at_most(format!("m={m} H={h}: max Weyl-1 rung vs (3√π/2)3^-m e^(4H²)"), worst, bound + 1e-6));
            table.check(Check::at_most(format!("m={m} H={h}: max rung excess over finite-T bound"), worst_finite, 1e-6));
            table.check(Check::at_most(format!("m={m} H={h}: tail surrogate vs (3√π/2)3^-m e^(4H²)"), w.surrogate, bound + 1e-6));
        }
    }
    Ok(table)
}

fn theorem3_separation(cfg: &ExperimentConfig) -> Result<ResultTable> {
    let mut table = ResultTable::new(cfg, &["quantity", "l", "n", "T", "value", "bound"]);
    let p = cfg.real("p");
    let t0 = cfg.real("T0");
    let quad = simpson(cfg)?;
    let ladder = ladder(cfg)?;
    let spec = SeparatorSpec::t3();
    let mut minima = Vec::new();
    let mut worst_gap = f64::INFINITY;
    for l in cfg.int("l_min")..=cfg.int("l_max") {
        let rows = windowed_norm_at_centers(&spec, l as u32, (cfg.int("n_min"), cfg.int("n_max")), p, t0, &quad)?;
        let mut lowest = f64::INFINITY;
        for r in &rows {
            table.push(vec!["window".into(), r.l.into(), r.n.into(), t0.into(), r.value.into(), r.bound.into()]);
            worst_gap = worst_gap.min(r.value - r.bound);
            lowest = lowest.min(r.value);
        }
        minima.push((l, lowest));
    }
    let f = Separator::new(spec)?.into_func();
    let line = Strip::closed(0.0, 0.0)?;
    let b = besicovitch_distance(&f, &Func::zero(), p, &line, &ArithGrid::single(0.0), &ladder, &quad)?;
    let cap = cfg.real("cap_factor") * TheoremBound::T3Tail { m: cfg.int("tail_m") as u32, p }.value()?;
    let mut top = 0.0f64;
    for r in &b.rungs {
        let powered = r.value.powf(p);
        top = top.max(powered);
        table.push(vec!["besicovitch^p".into(), blank(), blank(), r.t.into(), powered.into(), cap.into()]);
    }
    table.check(Check::at_least("min(window - l^p ∫e^{-4pt²})", worst_gap, -1e-6));
    table.check(Check::holds("window minima strictly increase in l", minima.windows(2).all(|w| w[1].1 > w[0].1)));
    table.check(Check::at_most("max Besicovitch rung^p", top, cap));
    if let Some(&(_, at5)) = minima.iter().find(|(l, _)| *l == 5) {
        table.check(Check::above("level-5 window / max Besicovitch rung^p", at5 / top, 10.0));
    }
    Ok(table)
}

fn theorem4_separation(cfg: &ExperimentConfig) -> Result<ResultTable> {
    let mut table = ResultTable::new(cfg, &["quantity", "l", "n", "T", "value", "bound"]);
    let (p, pp, p0) = (cfg.real("p"), cfg.real("p_prime"), cfg.real("p0"));
    let t0 = cfg.real("T0");
    let quad = simpson(cfg)?;
    let ladder = ladder(cfg)?;
    let spec = SeparatorSpec::t4(p0)?;
    let n = cfg.int("n");
    let mut points = Vec::new();
    let mut worst_gap = f64::INFINITY;
    for l in cfg.int("l_min")..=cfg.int("l_max") {
        let r = &windowed_norm_at_centers(&spec, l as u32, (n, n), pp, t0, &quad)?[0];
        table.push(vec!["window".into(), r.l.into(), r.n.into(), t0.into(), r.value.into(), r.bound.into()]);
        worst_gap = worst_gap.min(r.value - r.bound);
        points.push((l as f64, r.value.ln()));
    }
    let count = points.len() as f64;
    let mean_l = points.iter().map(|q| q.0).sum::<f64>() / count;
    let mean_v = points.iter().map(|q| q.1).sum::<f64>() / count;
    let slope = points.iter().map(|q| (q.0 - mean_l) * (q.1 - mean_v)).sum::<f64>()
        / points.iter().map(|q| (q.0 - mean_l).powi(2)).sum::<f64>();
    let target = pp / p0 * 3f64.ln();
    let f = Separator::new(spec)?.into_func();
    let line = Strip::closed(0.0, 0.0)?;
    let b = besicovitch_distance(&f, &Func::zero(), p, &line, &ArithGrid::single(0.0), &ladder, &quad)?;
    let cap = TheoremBound::T4Tail { m: 0, p, p0 }.value()?;
    let mut top = 0.0f64;
    for r in &b.rungs {
        let powered = r.value.powf(p);
        top = top.max(powered);
        table.push(vec!["besicovitch^p".into(), blank(), blank(), r.t.into(), powered.into(), cap.into()]);
    }
    table.push(vec!["slope".into(), blank(), blank(), blank(), slope.into(), target.into()]);
    table.check(Check::at_least("min(window - 3^{lp'/p0} ∫e^{-4p't²})", worst_gap, -1e-6));
    table.check(Check::at_most("|slope / ((p'/p0) ln 3) - 1|", (slope / target - 1.0).abs(), 0.1));
    table.check(Check::at_most("max Besicovitch rung^p", top, cap));
    Ok(table)
}

fn mean_value_experiment(cfg: &ExperimentConfig) -> Result<ResultTable> {
    let mut table = ResultTable::new(cfg, &["function", "y", "T", "mean_re", "mean_im", "target", "tolerance"]);
    let ladder = ladder(cfg)?;
    let quad = simpson(cfg)?;
    let shift_grid = ArithGrid::span(0.0, cfg.real("shift_max"), cfg.real("shift_step"))?;
    let est = mean_value(&t2(), 0.0, &ladder, &quad, &shift_grid)?;
    let target = PI.sqrt() / 4.0;
    let t_last = ladder.last();
    let members = (-(t_last.floor() as i64)..=t_last.floor() as i64).filter(|&n| is_in_i(n)).count();
    let oracle = PI.sqrt() / 2.0 * members as f64 / (2.0 * t_last);
    for (t, v) in &est.rungs {
        table.push(vec!["T2".into(), 0.0.into(), (*t).into(), v.re.into(), v.im.into(), target.into(), 2e-3.into()]);
    }
    table.push(vec!["T2 member count".into(), 0.0.into(), t_last.into(), oracle.into(), 0.0.into(), target.into(), 2e-3.into()]);
    let residual = *est.shift_residuals.last().expect("ladder has rungs");
    table.push(vec!["T2 shift residual".into(), 0.0.into(), t_last.into(), residual.into(), 0.0.into(), 0.0.into(), blank()]);
    table.check(Check::at_most("|surrogate - √π/4|", (est.surrogate - target).norm(), 2e-3));
    table.check(Check::at_most("|surrogate - member-count mean|", (est.surrogate.re - oracle).abs(), PI.sqrt() / t_last));
    let mut rng = ChaCha8Rng::seed_from_u64(MEAN_SEED);
    let y = 0.3;
    let mut worst = f64::NEG_INFINITY;
    for i in 0..cfg.int("sums") {
        let mut s = random_exp_sum(&mut rng, 4, 3.0, true);
        let c0 = Complex64::new(0.5 + i as f64 * 0.1, -0.2);
        s = s.add(&ExpSum::from_constants(&[(0.0, c0)])?)?;
        let target = s.mean_coefficient().eval(y);
        let f = Func::from(s.clone());
        let est = mean_value(&f, y, &ladder, &quad, &ArithGrid::single(0.0))?;
        for (t, v) in &est.rungs {
            let rate: f64 = s
                .terms()
                .iter()
                .filter(|term| term.lambda != 0.0)
                .map(|term| term.coeff.eval(y).norm() / (term.lambda.abs() * t))
                .sum();
            let tol = rate + 1e-9;
            table.push(vec![
                format!("sum{i}").into(),
                y.into(),
                (*t).into(),
                v.re.into(),
                v.im.into(),
                target.re.into(),
                tol.into(),
            ]);
            worst = worst.max((v - target).norm() - tol);
        }
    }
    table.check(Check::at_most("max(|M_T - c_0| - Σ|c_λ|/(|λ|T))", worst, 1e-9));
    Ok(table)
}
