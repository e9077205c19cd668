// Grünwald–Letnikov sums against the power rule for (t − a)^γ.

use fracknot::numeric::{gl_derivative, FnOnInterval};
use fracknot::power_rule;

pub fn run_example() -> fracknot::Result<()> {
    println!("gamma  alpha  gl(h=1e-4)     exact          rel.err");
    for gamma_exp in [0.5, 1.0, 2.0] {
        let f = FnOnInterval::new((0.0, 1.0), move |t: f64| t.powf(gamma_exp));
        for alpha in [0.25, 0.5, 0.75] {
            let gl = gl_derivative(&f, alpha, 0.0, 1.0, 1e-4)?;
            let exact = power_rule(gamma_exp, alpha, 0.0, 1.0)?;
            println!(
                "{gamma_exp:<6} {alpha:<6} {gl:<14.10} {exact:<14.10} {:.2e}",
                ((gl - exact) / exact).abs()
            );
        }
    }
    Ok(())
}

fn main() -> fracknot::Result<()> {
    run_example()
}
