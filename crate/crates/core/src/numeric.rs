//! Numerical fractional-derivative engines.
//!
//! These are deliberately independent of the closed-form knot expansion:
//! the Grünwald–Letnikov sum works on raw function values, and the quadrature
//! engines integrate the singular kernels directly after a change of variables
//! that makes the kernel bounded. Together they act as oracles for
//! [`crate::closedform`] and as evaluators for arbitrary callables.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::piecewise::PiecewiseFunction;
use crate::specialfn::{gamma_unchecked, gl_weights};

/// Anything that can be evaluated on a closed interval.
///
/// `breakpoints` lists interior points where the function (or one of its
/// derivatives) is not smooth; quadrature splits there.
pub trait Evaluatable: Sync {
    fn value(&self, x: f64) -> f64;
    fn domain(&self) -> (f64, f64);
    fn breakpoints(&self) -> &[f64] {
        &[]
    }
}

impl Evaluatable for PiecewiseFunction {
    fn value(&self, x: f64) -> f64 {
        self.eval_unchecked(x)
    }

    fn domain(&self) -> (f64, f64) {
        PiecewiseFunction::domain(self)
    }

    fn breakpoints(&self) -> &[f64] {
        self.knots()
    }
}

impl<T: Evaluatable + ?Sized> Evaluatable for &T {
    fn value(&self, x: f64) -> f64 {
        (**self).value(x)
    }

    fn domain(&self) -> (f64, f64) {
        (**self).domain()
    }

    fn breakpoints(&self) -> &[f64] {
        (**self).breakpoints()
    }
}

/// A plain closure on an interval.
pub struct FnOnInterval<F> {
    f: F,
    domain: (f64, f64),
    breakpoints: Vec<f64>,
}

impl<F: Fn(f64) -> f64 + Sync> FnOnInterval<F> {
    pub fn new(domain: (f64, f64), f: F) -> Self {
        FnOnInterval {
            f,
            domain,
            breakpoints: Vec::new(),
        }
    }

    pub fn with_breakpoints(mut self, mut points: Vec<f64>) -> Self {
        points.sort_by(f64::total_cmp);
        self.breakpoints = points;
        self
    }
}

impl<F: Fn(f64) -> f64 + Sync> Evaluatable for FnOnInterval<F> {
    fn value(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    fn domain(&self) -> (f64, f64) {
        self.domain
    }

    fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }
}

/// The segment-wise first derivative of a piecewise polynomial (left segment
/// at knots). Discontinuous at kinks, which is fine for Caputo quadrature
/// because integration splits at the knots.
pub struct PiecewiseDerivative<'a>(pub &'a PiecewiseFunction);

impl Evaluatable for PiecewiseDerivative<'_> {
    fn value(&self, x: f64) -> f64 {
        let f = self.0;
        f.segments()[f.segment_index(x)].derivative_at(1, x)
    }

    fn domain(&self) -> (f64, f64) {
        self.0.domain()
    }

    fn breakpoints(&self) -> &[f64] {
        self.0.knots()
    }
}

/// Quadrature resolution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadSpec {
    /// Composite-rule panels per smooth region.
    pub panels: usize,
    /// Outer finite-difference step as a fraction of the domain length.
    pub diff_step: f64,
}

impl Default for QuadSpec {
    fn default() -> Self {
        QuadSpec {
            panels: 256,
            diff_step: 1e-4,
        }
    }
}

impl QuadSpec {
    pub fn new(panels: usize, diff_step: f64) -> Result<Self> {
        let spec = QuadSpec { panels, diff_step };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.panels < 16 {
            return Err(Error::domain(format!(
                "quadrature needs at least 16 panels, got {}",
                self.panels
            )));
        }
        if !(1e-8..=1e-2).contains(&self.diff_step) {
            return Err(Error::domain(format!(
                "diff_step must lie in [1e-8, 1e-2], got {}",
                self.diff_step
            )));
        }
        Ok(())
    }
}

/// Inclusive-start, non-overshooting sampling grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

pub const MAX_GRID_POINTS: f64 = 1e7;

impl GridSpec {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self> {
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return Err(Error::domain("grid bounds must be finite"));
        }
        if !(start < stop) || !(step > 0.0) {
            return Err(Error::domain(format!(
                "grid needs start < stop and step > 0, got {start}:{stop}:{step}"
            )));
        }
        if (stop - start) / step > MAX_GRID_POINTS {
            return Err(Error::domain(format!(
                "grid {start}:{stop}:{step} has more than {MAX_GRID_POINTS} points"
            )));
        }
        Ok(GridSpec { start, stop, step })
    }

    /// Parses `start:stop:step`.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("grid must be start:stop:step, got {s:?}")));
        }
        let num = |p: &str| {
            p.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("grid component {p:?} is not a number")))
        };
        Self::new(num(parts[0])?, num(parts[1])?, num(parts[2])?)
    }

    pub fn points(&self) -> Vec<f64> {
        let n = ((self.stop - self.start) / self.step + 1e-9).floor() as usize;
        (0..=n)
            .map(|i| (self.start + i as f64 * self.step).min(self.stop))
            .collect()
    }
}

/// Evaluates `f` at every grid point, in parallel, ordered by x.
pub fn sample_grid<F>(f: F, grid: &GridSpec) -> Result<Vec<(f64, f64)>>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    grid.points().into_par_iter().map(|x| f(x).map(|v| (x, v))).collect()
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "derivative order must satisfy 0 < alpha < 1, got {alpha}"
        )))
    }
}

// ---------------------------------------------------------------------------
// Grünwald–Letnikov

/// Minimum number of GL steps between the anchor and the evaluation point.
pub const GL_MIN_STEPS: usize = 32;

/// Left Jumarie derivative by the GL sum h^{−α} Σ w_r [f(t − rh) − f(a)].
///
/// The step is adjusted to (t − a)/n with n = round((t − a)/h) so the last
/// sample lands exactly on `a`.
pub fn gl_derivative(f: &impl Evaluatable, alpha: f64, a: f64, t: f64, h: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(h > 0.0) || !(t > a) {
        return Err(Error::domain(format!(
            "need h > 0 and t > a, got h = {h}, a = {a}, t = {t}"
        )));
    }
    let n = ((t - a) / h).round() as usize;
    if n < GL_MIN_STEPS {
        return Err(Error::domain(format!(
            "GL needs at least {GL_MIN_STEPS} steps, got {n}"
        )));
    }
    let h = (t - a) / n as f64;
    let w = gl_weights(alpha, n)?;
    let fa = f.value(a);
    let sum: f64 = w
        .iter()
        .enumerate()
        .map(|(r, wr)| {
            let x = if r == n { a } else { t - r as f64 * h };
            wr * (f.value(x) - fa)
        })
        .sum();
    Ok(sum * h.powf(-alpha))
}

/// Right Jumarie derivative by the mirrored GL sum
/// −h^{−α} Σ w_r [f(x + rh) − f(b)].
pub fn gl_right_derivative(f: &impl Evaluatable, alpha: f64, x: f64, b: f64, h: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(h > 0.0) || !(b > x) {
        return Err(Error::domain(format!(
            "need h > 0 and b > x, got h = {h}, x = {x}, b = {b}"
        )));
    }
    let n = ((b - x) / h).round() as usize;
    if n < GL_MIN_STEPS {
        return Err(Error::domain(format!(
            "GL needs at least {GL_MIN_STEPS} steps, got {n}"
        )));
    }
    let h = (b - x) / n as f64;
    let w = gl_weights(alpha, n)?;
    let fb = f.value(b);
    let sum: f64 = w
        .iter()
        .enumerate()
        .map(|(r, wr)| {
            let xi = if r == n { b } else { x + r as f64 * h };
            wr * (f.value(xi) - fb)
        })
        .sum();
    Ok(-sum * h.powf(-alpha))
}

// ---------------------------------------------------------------------------
// Quadrature

const GL_NODES: usize = 10;
const GRADING_LEVELS: usize = 40;

/// Gauss–Legendre nodes and weights on [−1, 1] by Newton iteration on P_n.
fn gauss_legendre() -> &'static (Vec<f64>, Vec<f64>) {
    static RULE: OnceLock<(Vec<f64>, Vec<f64>)> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = GL_NODES;
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (mut p0, mut p1) = (1.0, x);
                for k in 2..=n {
                    let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        (nodes, weights)
    })
}

fn gauss_panel(g: &impl Fn(f64) -> f64, lo: f64, hi: f64) -> f64 {
    let (nodes, weights) = gauss_legendre();
    let mid = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    nodes
        .iter()
        .zip(weights)
        .map(|(x, w)| w * g(mid + half * x))
        .sum::<f64>()
        * half
}

/// Composite Gauss–Legendre over `[lo, hi]`: `panels` uniform panels, with the
/// two end panels refined geometrically toward the endpoints, where the
/// transformed integrands carry fractional-power behaviour.
fn composite(g: &impl Fn(f64) -> f64, lo: f64, hi: f64, panels: usize) -> f64 {
    if hi <= lo {
        return 0.0;
    }
    let h = (hi - lo) / panels as f64;
    let mut total = 0.0;
    for i in 1..panels - 1 {
        total += gauss_panel(g, lo + i as f64 * h, lo + (i + 1) as f64 * h);
    }
    let mut width = h;
    for _ in 0..GRADING_LEVELS {
        let inner = 0.5 * width;
        total += gauss_panel(g, lo + inner, lo + width);
        total += gauss_panel(g, hi - width, hi - inner);
        width = inner;
    }
    total += gauss_panel(g, lo, lo + width);
    total += gauss_panel(g, hi - width, hi);
    total
}

/// Integrates over `[0, upper]` in u, split at the given u-breakpoints.
fn integrate_split(g: &impl Fn(f64) -> f64, upper: f64, mut cuts: Vec<f64>, panels: usize) -> f64 {
    cuts.retain(|&u| u > 0.0 && u < upper);
    cuts.sort_by(f64::total_cmp);
    let mut bounds = Vec::with_capacity(cuts.len() + 2);
    bounds.push(0.0);
    bounds.extend(cuts);
    bounds.push(upper);
    bounds.windows(2).map(|w| composite(g, w[0], w[1], panels)).sum()
}

/// (1/Γ(1+β)) ∫ over s ∈ [0, L] of β s^{β−1} g(s) ds after u = s^β, i.e.
/// ∫₀^{L^β} g(u^{1/β}) du / Γ(1+β). `s_cuts` are breakpoints in s.
fn kernel_integral(g: impl Fn(f64) -> f64, beta: f64, length: f64, s_cuts: Vec<f64>, panels: usize) -> f64 {
    if length <= 0.0 {
        return 0.0;
    }
    let p = 1.0 / beta;
    let upper = length.powf(beta);
    let cuts = s_cuts.into_iter().map(|s| s.powf(beta)).collect();
    let h = |u: f64| g(u.powf(p));
    integrate_split(&h, upper, cuts, panels) / gamma_unchecked(1.0 + beta)
}

/// (1/Γ(1−α)) ∫_a^y (y − ξ)^{−α} [f(ξ) − f(a)] dξ, the fractional integral
/// whose derivative is the left Jumarie derivative.
pub fn left_offset_integral(f: &impl Evaluatable, alpha: f64, a: f64, y: f64, panels: usize) -> f64 {
    let fa = f.value(a);
    let cuts = f
        .breakpoints()
        .iter()
        .filter(|&&k| k > a && k < y)
        .map(|&k| y - k)
        .collect();
    kernel_integral(|s| f.value(y - s) - fa, 1.0 - alpha, y - a, cuts, panels)
}

/// (1/Γ(1−α)) ∫_y^b (ξ − y)^{−α} [f(ξ) − f(b)] dξ.
pub fn right_offset_integral(f: &impl Evaluatable, alpha: f64, b: f64, y: f64, panels: usize) -> f64 {
    let fb = f.value(b);
    let cuts = f
        .breakpoints()
        .iter()
        .filter(|&&k| k > y && k < b)
        .map(|&k| k - y)
        .collect();
    kernel_integral(|s| f.value(y + s) - fb, 1.0 - alpha, b - y, cuts, panels)
}

fn check_quad(f: &impl Evaluatable, alpha: f64, spec: &QuadSpec) -> Result<f64> {
    check_alpha(alpha)?;
    spec.validate()?;
    let (lo, hi) = f.domain();
    Ok(spec.diff_step * (hi - lo))
}

/// Which side of a singular point the differenced function is smooth on.
#[derive(Clone, Copy)]
enum SmoothSide {
    Below,
    Above,
}

/// Derivative of `big_f` at `x` by finite differences.
///
/// `big_f` may be evaluated on `[lo, hi]` and is smooth between consecutive
/// `singular` points. The stencil never straddles a singular point: at one it
/// is one-sided toward `at_singular`, and near one the step shrinks to a
/// quarter of the distance. Away from all of them this is the plain central
/// difference with step `delta`.
fn difference(
    big_f: impl Fn(f64) -> f64,
    x: f64,
    delta: f64,
    (lo, hi): (f64, f64),
    singular: &[f64],
    at_singular: SmoothSide,
) -> f64 {
    let eps = 1e-12 * (hi - lo);
    let on_point = singular.iter().any(|&s| (s - x).abs() <= eps);
    let below = singular
        .iter()
        .filter(|&&s| s < x - eps)
        .map(|&s| x - s)
        .fold(x - lo, f64::min);
    let above = singular
        .iter()
        .filter(|&&s| s > x + eps)
        .map(|&s| s - x)
        .fold(hi - x, f64::min);
    let backward = |d: f64| (3.0 * big_f(x) - 4.0 * big_f(x - d) + big_f(x - 2.0 * d)) / (2.0 * d);
    let forward = |d: f64| (-3.0 * big_f(x) + 4.0 * big_f(x + d) - big_f(x + 2.0 * d)) / (2.0 * d);

    if on_point {
        return match at_singular {
            SmoothSide::Below => backward(delta.min(below / 4.0)),
            SmoothSide::Above => forward(delta.min(above / 4.0)),
        };
    }
    let nearest_singular = singular.iter().map(|&s| (s - x).abs()).fold(f64::INFINITY, f64::min);
    let d = delta.min(nearest_singular / 4.0);
    if x - d >= lo && x + d <= hi {
        (big_f(x + d) - big_f(x - d)) / (2.0 * d)
    } else if x + d > hi {
        backward(d.min(below / 2.0))
    } else {
        forward(d.min(above / 2.0))
    }
}

fn left_singular_points(f: &impl Evaluatable, a: f64) -> Vec<f64> {
    let mut s = vec![a];
    s.extend(f.breakpoints().iter().copied().filter(|&k| k > a));
    s
}

fn right_singular_points(f: &impl Evaluatable, b: f64) -> Vec<f64> {
    let mut s: Vec<f64> = f.breakpoints().iter().copied().filter(|&k| k < b).collect();
    s.push(b);
    s
}

/// Left Jumarie derivative: d/dx of [`left_offset_integral`] by central
/// difference with step `diff_step·(b − a)`, switching to a one-sided stencil
/// when x sits on or next to a knot.
pub fn jumarie_left_numeric(f: &impl Evaluatable, alpha: f64, a: f64, x: f64, spec: &QuadSpec) -> Result<f64> {
    let delta = check_quad(f, alpha, spec)?;
    let b = f.domain().1;
    if x - delta <= a || x + delta > b {
        return Err(Error::domain(format!(
            "x = {x} too close to [{a}, {b}] for difference step {delta}"
        )));
    }
    Ok(difference(
        |y| left_offset_integral(f, alpha, a, y, spec.panels),
        x,
        delta,
        (a, b),
        &left_singular_points(f, a),
        SmoothSide::Below,
    ))
}

/// Right Jumarie derivative: d/dx of [`right_offset_integral`], the sign
/// convention under which f = x − c has right derivative (b − x)^{1−α}/Γ(2−α).
pub fn jumarie_right_numeric(f: &impl Evaluatable, alpha: f64, x: f64, b: f64, spec: &QuadSpec) -> Result<f64> {
    let delta = check_quad(f, alpha, spec)?;
    let a = f.domain().0;
    if x - delta < a || x + delta >= b {
        return Err(Error::domain(format!(
            "x = {x} too close to [{a}, {b}] for difference step {delta}"
        )));
    }
    Ok(difference(
        |y| right_offset_integral(f, alpha, b, y, spec.panels),
        x,
        delta,
        (a, b),
        &right_singular_points(f, b),
        SmoothSide::Above,
    ))
}

/// Riemann–Liouville fractional integral of order `alpha > 0`:
/// (1/Γ(α)) ∫_a^t (t − τ)^{α−1} f(τ) dτ.
pub fn rl_integral(f: &impl Evaluatable, alpha: f64, a: f64, t: f64, spec: &QuadSpec) -> Result<f64> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::domain(format!("integration order must be > 0, got {alpha}")));
    }
    spec.validate()?;
    if !(t > a) {
        return Err(Error::domain(format!("need t > a, got a = {a}, t = {t}")));
    }
    let cuts = f
        .breakpoints()
        .iter()
        .filter(|&&k| k > a && k < t)
        .map(|&k| t - k)
        .collect();
    Ok(kernel_integral(|s| f.value(t - s), alpha, t - a, cuts, spec.panels))
}

/// Left Riemann–Liouville derivative through the exact offset relation
/// D_RL f = D_Jumarie f + f(a)(x − a)^{−α}/Γ(1 − α).
pub fn rl_left_derivative(f: &impl Evaluatable, alpha: f64, a: f64, x: f64, spec: &QuadSpec) -> Result<f64> {
    let jumarie = jumarie_left_numeric(f, alpha, a, x, spec)?;
    Ok(jumarie + f.value(a) * (x - a).powf(-alpha) / gamma_unchecked(1.0 - alpha))
}

/// Right Riemann–Liouville derivative:
/// D_Jumarie f + f(b)(b − x)^{−α}/Γ(1 − α).
pub fn rl_right_derivative(f: &impl Evaluatable, alpha: f64, x: f64, b: f64, spec: &QuadSpec) -> Result<f64> {
    let jumarie = jumarie_right_numeric(f, alpha, x, b, spec)?;
    Ok(jumarie + f.value(b) * (b - x).powf(-alpha) / gamma_unchecked(1.0 - alpha))
}

/// Caputo derivative (1/Γ(1−α)) ∫_a^t (t − τ)^{−α} f′(τ) dτ with a
/// caller-supplied f′.
pub fn caputo_derivative(f_prime: &impl Evaluatable, alpha: f64, a: f64, t: f64, spec: &QuadSpec) -> Result<f64> {
    check_alpha(alpha)?;
    spec.validate()?;
    if !(t > a) {
        return Err(Error::domain(format!("need t > a, got a = {a}, t = {t}")));
    }
    let cuts = f_prime
        .breakpoints()
        .iter()
        .filter(|&&k| k > a && k < t)
        .map(|&k| t - k)
        .collect();
    Ok(kernel_integral(
        |s| f_prime.value(t - s),
        1.0 - alpha,
        t - a,
        cuts,
        spec.panels,
    ))
}

// ---------------------------------------------------------------------------
// Boundary-tolerant evaluation for grid sweeps

/// Left Jumarie derivative anywhere in `[a, b]`, including the endpoints
/// (0 at `a`).
pub fn jumarie_left_anywhere(f: &impl Evaluatable, alpha: f64, x: f64, spec: &QuadSpec) -> Result<f64> {
    let delta = check_quad(f, alpha, spec)?;
    let (a, b) = f.domain();
    if !(x >= a && x <= b) {
        return Err(Error::domain(format!("x = {x} outside [{a}, {b}]")));
    }
    if x == a {
        return Ok(0.0);
    }
    Ok(difference(
        |y| left_offset_integral(f, alpha, a, y, spec.panels),
        x,
        delta,
        (a, b),
        &left_singular_points(f, a),
        SmoothSide::Below,
    ))
}

/// Right counterpart of [`jumarie_left_anywhere`]; 0 at `b`.
pub fn jumarie_right_anywhere(f: &impl Evaluatable, alpha: f64, x: f64, spec: &QuadSpec) -> Result<f64> {
    let delta = check_quad(f, alpha, spec)?;
    let (a, b) = f.domain();
    if !(x >= a && x <= b) {
        return Err(Error::domain(format!("x = {x} outside [{a}, {b}]")));
    }
    if x == b {
        return Ok(0.0);
    }
    Ok(difference(
        |y| right_offset_integral(f, alpha, b, y, spec.panels),
        x,
        delta,
        (a, b),
        &right_singular_points(f, b),
        SmoothSide::Above,
    ))
}

/// GL left derivative anywhere in `[a, b]`; the step shrinks to keep at least
/// [`GL_MIN_STEPS`] steps.
pub fn gl_left_anywhere(f: &impl Evaluatable, alpha: f64, x: f64, h: f64) -> Result<f64> {
    let a = f.domain().0;
    if x == a {
        check_alpha(alpha)?;
        return Ok(0.0);
    }
    let h = h.min((x - a) / GL_MIN_STEPS as f64);
    gl_derivative(f, alpha, a, x, h)
}

/// GL right derivative anywhere in `[a, b]`.
pub fn gl_right_anywhere(f: &impl Evaluatable, alpha: f64, x: f64, h: f64) -> Result<f64> {
    let b = f.domain().1;
    if x == b {
        check_alpha(alpha)?;
        return Ok(0.0);
    }
    let h = h.min((b - x) / GL_MIN_STEPS as f64);
    gl_right_derivative(f, alpha, x, b, h)
}
