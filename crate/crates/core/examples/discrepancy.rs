//! Shift witnesses: for each τ, a point where the T2 separator and its shift
//! by τ (|τ| >= 1) differ by more than the continuity threshold.

use apstrip::separators::{continuity_index, discrepancy_search, gamma, lipschitz_constant, DiscrepancyReport};

fn main() -> apstrip::Result<()> {
    let n = continuity_index();
    println!("Lipschitz constant {:.4}, N = {n}, γ = {:.4e}", lipschitz_constant(), gamma(n));
    let mut reports = Vec::new();
    for tau in [1.0, 2.0, std::f64::consts::SQRT_2, std::f64::consts::PI, 100.5] {
        let r = discrepancy_search(tau, 0.0)?;
        println!("τ = {tau:<10.6}: x = {:<12} |f(x+τ) - f(x)| = {:.4} (certificate holds: {})", r.x, r.delta_f, r.certificate_holds());
        reports.push(r);
    }
    print!("{}", DiscrepancyReport::to_csv(&reports));
    Ok(())
}
