//! Uniform, Stepanov, Weyl and Besicovitch distances on a T-ladder.
//!
//! A Gaussian bump is far from zero uniformly and in Stepanov norm but has
//! Weyl and Besicovitch distance zero; the ladder shows the decay.

use apstrip::function::gaussian;
use apstrip::metrics::{besicovitch_distance, stepanov_distance, uniform_distance, weyl_distance, SupShiftGrid};
use apstrip::{ArithGrid, Func, QuadratureSpec, Strip, TLadder};

fn main() -> apstrip::Result<()> {
    let quad = QuadratureSpec::default();
    let strip = Strip::closed(-1.0, 1.0)?;
    let grid = SupShiftGrid::over(&strip, -5.0, 5.0, 0.1, 8)?;
    let ladder = TLadder::new(10.0, 10.0, 3)?;
    let g = gaussian(1.0, 0.0);
    let zero = Func::zero();

    println!("uniform:      {:.6}", uniform_distance(&g, &zero, &strip, &grid)?);
    for p in [1.0, 2.0] {
        println!("Stepanov-{p}:   {:.6}", stepanov_distance(&g, &zero, p, &strip, &grid, &quad)?);
    }
    let w = weyl_distance(&g, &zero, 1.0, &strip, &grid, &ladder, &quad)?;
    for r in &w.rungs {
        println!("Weyl-1       T = {:>6}: {:.3e}  (e√π/2T = {:.3e})", r.t, r.value, std::f64::consts::E * std::f64::consts::PI.sqrt() / (2.0 * r.t));
    }
    let heights = ArithGrid::linspace(-1.0, 1.0, 9)?;
    let b = besicovitch_distance(&g, &zero, 2.0, &strip, &heights, &ladder, &quad)?;
    for r in &b.rungs {
        println!("Besicovitch-2 T = {:>5}: {:.3e}", r.t, r.value);
    }
    println!("Weyl surrogate {:.3e}", w.surrogate);
    print!("{}", w.to_csv()?);
    Ok(())
}
