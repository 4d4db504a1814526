//! Weyl-1 distance between the T2 separator and its level-m partial sums,
//! next to the asymptotic and finite-window bounds.

use apstrip::metrics::{weyl_distance, SupShiftGrid};
use apstrip::separators::{Separator, SeparatorSpec, TheoremBound};
use apstrip::{QuadratureSpec, Strip, TLadder};

fn main() -> apstrip::Result<()> {
    let quad = QuadratureSpec::default();
    let strip = Strip::closed(0.0, 0.0)?;
    let full = Separator::new(SeparatorSpec::t2())?.into_func();
    let ladder = TLadder::new(9.0, 3.0, 3)?;
    let grid = SupShiftGrid::over(&strip, 0.0, 27.0, 0.25, 1)?;
    for m in 1..=3 {
        let partial = Separator::partial(SeparatorSpec::t2(), m)?.into_func();
        let w = weyl_distance(&full, &partial, 1.0, &strip, &grid, &ladder, &quad)?;
        let asymptotic = TheoremBound::T2 { m, h: 0.0 }.value()?;
        for r in &w.rungs {
            let finite = TheoremBound::T2Finite { m, h: 0.0, t: r.t }.value()?;
            println!("m = {m} T = {:>4}: {:.4}  (asymptotic {:.4}, finite-T {:.4})", r.t, r.value, asymptotic, finite);
        }
    }
    Ok(())
}
