// Left and right Jumarie derivatives at the kink of each built-in example,
// and their difference.

use fracknot::{catalog, jumarie_left_closed, phase_indicator, FractionalOrder};

pub fn run_example() -> fracknot::Result<()> {
    let alpha = 0.5;
    println!("alpha = {alpha}");
    for n in 1..=5 {
        let f = catalog::example(n).expect("built-in example");
        let k = phase_indicator(&f, alpha, f.knots()[0])?;
        println!(
            "example {n}: {:<48} left {:>12.8}  right {:>12.8}  indicator {:>12.8}",
            catalog::example_description(n),
            k.left_value,
            k.right_value,
            k.indicator
        );
    }

    // the expression itself, region by region
    let expr = jumarie_left_closed(&catalog::example1(), FractionalOrder::derivative(alpha)?)?;
    println!("{}", expr.to_json());
    Ok(())
}

fn main() -> fracknot::Result<()> {
    run_example()
}
