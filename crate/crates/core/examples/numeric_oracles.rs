// The numeric engines side by side on a smooth function: Jumarie by
// quadrature and by GL, Caputo from the exact derivative, and the
// Riemann–Liouville derivative with its constant offset.

use fracknot::numeric::{
    caputo_derivative, gl_derivative, jumarie_left_numeric, rl_integral, rl_left_derivative, FnOnInterval,
};
use fracknot::QuadSpec;

pub fn run_example() -> fracknot::Result<()> {
    let spec = QuadSpec::default();
    let alpha = 0.5;
    let f = FnOnInterval::new((0.0, 1.0), |x: f64| 3.0 * x * x - 2.0 * x + 1.0);
    let df = FnOnInterval::new((0.0, 1.0), |x: f64| 6.0 * x - 2.0);

    println!("x     jumarie(quad)  jumarie(gl)    caputo         rl");
    for x in [0.3, 0.5, 0.7] {
        println!(
            "{x:<5} {:<14.10} {:<14.10} {:<14.10} {:<14.10}",
            jumarie_left_numeric(&f, alpha, 0.0, x, &spec)?,
            gl_derivative(&f, alpha, 0.0, x, 1e-4)?,
            caputo_derivative(&df, alpha, 0.0, x, &spec)?,
            rl_left_derivative(&f, alpha, 0.0, x, &spec)?,
        );
    }

    let one = FnOnInterval::new((0.0, 1.0), |_| 1.0);
    println!(
        "half integral of 1 over [0, 1]: {:.10}",
        rl_integral(&one, 0.5, 0.0, 1.0, &spec)?
    );
    Ok(())
}

fn main() -> fracknot::Result<()> {
    run_example()
}
