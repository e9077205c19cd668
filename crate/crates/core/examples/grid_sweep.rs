// Plot data for a family of orders: the left derivative of |x − ½| sampled
// on a grid for several α, one CSV column per order.

use fracknot::numeric::sample_grid;
use fracknot::{catalog, jumarie_left_closed, FractionalOrder, GridSpec};

pub fn run_example() -> fracknot::Result<()> {
    let f = catalog::example1();
    let grid = GridSpec::parse("0:1:0.05")?;
    let alphas = [0.25, 0.5, 0.75, 0.9];

    let mut columns = Vec::new();
    for alpha in alphas {
        let expr = jumarie_left_closed(&f, FractionalOrder::derivative(alpha)?)?;
        columns.push(sample_grid(|x| expr.eval(x), &grid)?);
    }

    let header: Vec<String> = alphas.iter().map(|a| format!("dL_{a}")).collect();
    println!("x,{}", header.join(","));
    for (i, x) in grid.points().iter().enumerate() {
        let row: Vec<String> = columns.iter().map(|c| fracknot::format::sig(c[i].1)).collect();
        println!("{},{}", fracknot::format::sig(*x), row.join(","));
    }
    Ok(())
}

fn main() -> fracknot::Result<()> {
    run_example()
}
