//! Windowed integrals and sampled suprema on a strip.

use apstrip::function::gaussian;
use apstrip::quadrature::window_integral_complex;
use apstrip::{grid_sup, window_integral, Func, Point, QuadratureSpec, Strip};

fn main() -> apstrip::Result<()> {
    let quad = QuadratureSpec::default();
    let g = gaussian(1.0, 0.0);

    // ∫_{-T}^{T} |e^{-t²}| dt → √π
    for t in [1.0, 3.0, 10.0] {
        let v = window_integral(&g, Point::real(0.0), t, 1.0, &quad)?;
        println!("T = {t:>4}: ∫|g| = {v:.12}  (√π = {:.12})", std::f64::consts::PI.sqrt());
    }

    // along Im z = 1 the modulus grows by e^{y²}
    let v = window_integral(&g, Point::new(0.0, 1.0), 10.0, 1.0, &quad)?;
    println!("y = 1:     ∫|g| = {v:.12}  (e√π = {:.12})", std::f64::consts::E * std::f64::consts::PI.sqrt());

    let wave = Func::from_fn(|z| (apstrip::Complex64::i() * z.as_complex()).exp());
    let mean = window_integral_complex(&wave, Point::real(0.0), 50.0, &quad)? / 100.0;
    println!("mean of e^(iz) over [-50, 50]: {mean:.3e}");

    let s = grid_sup(&g, &Strip::closed(-0.5, 0.5)?, (-3.0, 3.0), 0.01, 0.1)?;
    println!("sup |g| on |y| <= 1/2: {:.6} at {:?}", s.value, s.at);
    Ok(())
}
