//! Windowed norms of the T3 and T4 separators at level centres, against their
//! lower bounds, and the tail bounds for their truncations.

use apstrip::separators::{t3_besicovitch_envelope, windowed_norm_at_centers, SeparatorSpec, TheoremBound, WindowedNorm};
use apstrip::QuadratureSpec;

fn main() -> apstrip::Result<()> {
    let quad = QuadratureSpec::default();
    let mut rows = Vec::new();
    for l in 2..=5 {
        rows.extend(windowed_norm_at_centers(&SeparatorSpec::t3(), l, (0, 1), 2.0, 0.5, &quad)?);
    }
    for l in 2..=5 {
        rows.extend(windowed_norm_at_centers(&SeparatorSpec::t4(1.5)?, l, (0, 0), 2.0, 0.5, &quad)?);
    }
    print!("{}", WindowedNorm::to_csv(&rows));

    for m in [4, 6, 8] {
        println!(
            "m = {m}: T3 tail {:.3e}, T4 tail {:.3e}, Besicovitch-2 envelope {:.3}",
            TheoremBound::T3Tail { m, p: 2.0 }.value()?,
            TheoremBound::T4Tail { m, p: 2.0, p0: 1.5 }.value()?,
            t3_besicovitch_envelope(m, 2.0)?
        );
    }
    Ok(())
}
