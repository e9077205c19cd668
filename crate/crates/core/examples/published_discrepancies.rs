// Published closed forms that do not match an independent recomputation,
// checked against the knot-jump expansion and both numeric engines.

use fracknot::catalog::{self, published_discrepancies};
use fracknot::closedform::{jumarie_left_closed, jumarie_right_closed, FractionalOrder, Side};
use fracknot::numeric::{gl_left_anywhere, gl_right_anywhere, jumarie_left_anywhere, jumarie_right_anywhere};
use fracknot::{phase_indicator_numeric, Engine, QuadSpec};

pub fn run_example() -> fracknot::Result<()> {
    let alpha = 0.5;
    let order = FractionalOrder::derivative(alpha)?;
    let spec = QuadSpec::default();
    for d in published_discrepancies() {
        let f = catalog::example(d.example).expect("built-in example");
        let closed = match d.side {
            Side::Left => jumarie_left_closed(&f, order)?,
            Side::Right => jumarie_right_closed(&f, order)?,
        }
        .eval(d.x)?;
        let quad = if f.knots().contains(&d.x) {
            let k = phase_indicator_numeric(&f, alpha, d.x, &Engine::Quadrature(spec))?;
            if d.side == Side::Left {
                k.left_value
            } else {
                k.right_value
            }
        } else if d.side == Side::Left {
            jumarie_left_anywhere(&f, alpha, d.x, &spec)?
        } else {
            jumarie_right_anywhere(&f, alpha, d.x, &spec)?
        };
        let gl = if f.knots().contains(&d.x) {
            let k = phase_indicator_numeric(&f, alpha, d.x, &Engine::GrunwaldLetnikov { h: 1e-4 })?;
            if d.side == Side::Left {
                k.left_value
            } else {
                k.right_value
            }
        } else if d.side == Side::Left {
            gl_left_anywhere(&f, alpha, d.x, 1e-4)?
        } else {
            gl_right_anywhere(&f, alpha, d.x, 1e-4)?
        };
        println!("example {} ({} at x = {}):", d.example, d.quantity, d.x);
        println!(
            "  published {:<60} = {:.10}",
            d.published_formula,
            d.published_value(alpha)
        );
        println!("  closed {closed:.10}   gl {gl:.10}   quad {quad:.10}");
    }
    Ok(())
}

fn main() -> fracknot::Result<()> {
    run_example()
}
