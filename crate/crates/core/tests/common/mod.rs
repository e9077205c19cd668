#![allow(dead_code)]

use fracknot::PiecewiseFunction;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A continuous piecewise polynomial on [0, 1] with 1..=3 segments of degree
/// <= 3. Non-constant coefficients are uniform in [-5, 5]; each constant term
/// is then fixed up for continuity. Knots are at least 0.1 apart.
pub fn random_piecewise(rng: &mut ChaCha8Rng) -> PiecewiseFunction {
    let segments = rng.gen_range(1..=3usize);
    let mut knots: Vec<f64> = Vec::new();
    while knots.len() < segments - 1 {
        let k: f64 = (rng.gen_range(0.15..0.85f64) * 100.0).round() / 100.0;
        if knots.iter().all(|&q| (q - k).abs() >= 0.1) {
            knots.push(k);
        }
    }
    knots.sort_by(f64::total_cmp);
    random_on_knots(rng, knots)
}

/// A continuous piecewise polynomial on [0, 1] with the given knots.
pub fn random_on_knots(rng: &mut ChaCha8Rng, knots: Vec<f64>) -> PiecewiseFunction {
    let segments = knots.len() + 1;
    let mut polys: Vec<Vec<f64>> = Vec::new();
    for i in 0..segments {
        let degree = rng.gen_range(0..=3usize);
        let mut c: Vec<f64> = (0..=degree).map(|_| rng.gen_range(-5.0..5.0)).collect();
        if i > 0 {
            let k = knots[i - 1];
            let prev = eval(&polys[i - 1], k);
            let here = eval(&c, k);
            c[0] += prev - here;
        }
        polys.push(c);
    }
    PiecewiseFunction::new((0.0, 1.0), knots, polys).expect("continuous by construction")
}

pub fn eval(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ci| acc * x + ci)
}

/// Classical first derivative from the segment containing x (left segment at knots).
pub fn slope(f: &PiecewiseFunction, x: f64) -> f64 {
    f.segments()[f.segment_index(x)].derivative_at(1, x)
}

pub fn rel_close(got: f64, want: f64, tol: f64) -> bool {
    (got - want).abs() <= tol * want.abs()
}
