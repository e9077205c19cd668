//! Built-in test functions: the five kinked examples, plus a few smooth
//! reference functions.

use crate::closedform::Side;
use crate::piecewise::PiecewiseFunction;
use crate::specialfn::gamma_unchecked;

/// |x − ½| on [0, 1].
pub fn example1() -> PiecewiseFunction {
    build((0.0, 1.0), 0.5, vec![0.5, -1.0], vec![-0.5, 1.0])
}

/// The V5 ECG lead approximation on its original interval [2, 3].
pub fn example2_raw() -> PiecewiseFunction {
    build((2.0, 3.0), 2.5, vec![-16.0, 10.0], vec![49.0, -16.0])
}

/// [`example2_raw`] translated onto [0, 1]: 10x + 4, then 17 − 16x.
pub fn example2() -> PiecewiseFunction {
    build((0.0, 1.0), 0.5, vec![4.0, 10.0], vec![17.0, -16.0])
}

/// 30x + 4, then 34 − 30x.
pub fn example3() -> PiecewiseFunction {
    build((0.0, 1.0), 0.5, vec![4.0, 30.0], vec![34.0, -30.0])
}

/// 4x² + 2x + 2, then 5 − 2x.
pub fn example4() -> PiecewiseFunction {
    build((0.0, 1.0), 0.5, vec![2.0, 2.0, 4.0], vec![5.0, -2.0])
}

/// 4x² + 3, then 5 − 4x².
pub fn example5() -> PiecewiseFunction {
    build((0.0, 1.0), 0.5, vec![3.0, 0.0, 4.0], vec![5.0, 0.0, -4.0])
}

/// The example by number, 1 through 5.
pub fn example(n: u32) -> Option<PiecewiseFunction> {
    match n {
        1 => Some(example1()),
        2 => Some(example2()),
        3 => Some(example3()),
        4 => Some(example4()),
        5 => Some(example5()),
        _ => None,
    }
}

pub fn example_description(n: u32) -> &'static str {
    match n {
        1 => "|x - 1/2| on [0, 1]",
        2 => "10x + 4 on [0, 0.5], 17 - 16x on [0.5, 1] (translated from [2, 3])",
        3 => "30x + 4 on [0, 0.5], 34 - 30x on [0.5, 1]",
        4 => "4x^2 + 2x + 2 on [0, 0.5], 5 - 2x on [0.5, 1]",
        5 => "4x^2 + 3 on [0, 0.5], 5 - 4x^2 on [0.5, 1]",
        _ => "unknown",
    }
}

/// x − c on [a, b].
pub fn linear(c: f64, a: f64, b: f64) -> PiecewiseFunction {
    PiecewiseFunction::polynomial((a, b), vec![-c, 1.0]).expect("valid linear function")
}

/// x − c on [a, b] with a zero-jump knot at the midpoint.
pub fn linear_with_midpoint_knot(c: f64, a: f64, b: f64) -> PiecewiseFunction {
    build((a, b), 0.5 * (a + b), vec![-c, 1.0], vec![-c, 1.0])
}

pub fn constant(value: f64, a: f64, b: f64) -> PiecewiseFunction {
    PiecewiseFunction::polynomial((a, b), vec![value]).expect("valid constant")
}

/// A published closed-form value for one of the examples that disagrees with
/// the function it claims to differentiate.
#[derive(Debug, Clone, Copy)]
pub struct PublishedDiscrepancy {
    pub example: u32,
    pub side: Side,
    /// Point at which the published and recomputed values are compared.
    pub x: f64,
    pub quantity: &'static str,
    pub published_formula: &'static str,
    published: fn(f64, f64) -> f64,
}

impl PublishedDiscrepancy {
    /// The published formula evaluated at `alpha` and [`Self::x`].
    pub fn published_value(&self, alpha: f64) -> f64 {
        (self.published)(alpha, self.x)
    }
}

/// The four published values that independent recomputation does not reproduce.
pub fn published_discrepancies() -> [PublishedDiscrepancy; 4] {
    [
        PublishedDiscrepancy {
            example: 1,
            side: Side::Left,
            x: 0.5,
            quantity: "left derivative at the knot",
            published_formula: "-(1/2)^(2-a)/G(2-a)",
            published: |a, _| -(0.5f64).powf(2.0 - a) / gamma_unchecked(2.0 - a),
        },
        PublishedDiscrepancy {
            example: 2,
            side: Side::Left,
            x: 0.75,
            quantity: "left derivative right of the knot",
            published_formula: "(10x^(1-a) - 6(x-1/2)^(1-a))/G(2-a)",
            published: |a, x| (10.0 * x.powf(1.0 - a) - 6.0 * (x - 0.5).powf(1.0 - a)) / gamma_unchecked(2.0 - a),
        },
        PublishedDiscrepancy {
            example: 4,
            side: Side::Right,
            x: 0.5,
            quantity: "right derivative at the knot",
            published_formula: "-2(1/2)^(1-a)/G(3-a)",
            published: |a, _| -2.0 * (0.5f64).powf(1.0 - a) / gamma_unchecked(3.0 - a),
        },
        PublishedDiscrepancy {
            example: 5,
            side: Side::Left,
            x: 0.75,
            quantity: "left derivative right of the knot",
            published_formula: "8x^(2-a)/G(3-a) - 8(x-1/2)^(1-a)/G(2-a) - 16(x-1/2)^(2-a)(a^2-3a+3)/G(3-a)",
            published: |a, x| {
                8.0 * x.powf(2.0 - a) / gamma_unchecked(3.0 - a)
                    - 8.0 * (x - 0.5).powf(1.0 - a) / gamma_unchecked(2.0 - a)
                    - 16.0 * (x - 0.5).powf(2.0 - a) * (a * a - 3.0 * a + 3.0) / gamma_unchecked(3.0 - a)
            },
        },
    ]
}

fn build(domain: (f64, f64), knot: f64, left: Vec<f64>, right: Vec<f64>) -> PiecewiseFunction {
    PiecewiseFunction::new(domain, vec![knot], vec![left, right]).expect("catalog functions are continuous")
}
