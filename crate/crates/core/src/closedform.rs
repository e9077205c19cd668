//! Exact left and right Jumarie derivatives of piecewise polynomials.
//!
//! The derivative of order 0 < α < 1 is assembled by a knot-jump expansion.
//! Near the anchor endpoint the function is its first (left form) or last
//! (right form) polynomial, whose Taylor terms transform by the power rule.
//! Each knot then contributes the jumps of the first three derivatives as
//! extra power terms centred on the knot. The value f(a) (or f(b)) drops out
//! entirely, so constants have zero derivative.
//!
//! Left form, region containing x:
//!
//! ```text
//! Σ_j p₀⁽ʲ⁾(a)/Γ(j+1−α)·(x−a)^{j−α} + Σ_{k ≤ x} Σ_j Δ_k⁽ʲ⁾/Γ(j+1−α)·(x−k)^{j−α}
//! ```
//!
//! Right form, region containing x:
//!
//! ```text
//! Σ_j (−1)^{j+1} q⁽ʲ⁾(b)/Γ(j+1−α)·(b−x)^{j−α} + Σ_{k ≥ x} Σ_j (−1)^{j+1}(−Δ_k⁽ʲ⁾)/Γ(j+1−α)·(k−x)^{j−α}
//! ```

use serde::Serialize;

use crate::error::{Error, Result};
use crate::format::serialize_sig;
use crate::piecewise::{PiecewiseFunction, MAX_DEGREE};
use crate::specialfn::{gamma, gamma_unchecked};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Role {
    /// 0 < α < 1
    Derivative,
    /// α < 0
    Integral,
}

/// A validated fractional order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionalOrder {
    alpha: f64,
    role: Role,
}

impl FractionalOrder {
    pub fn derivative(alpha: f64) -> Result<Self> {
        if alpha > 0.0 && alpha < 1.0 {
            Ok(FractionalOrder {
                alpha,
                role: Role::Derivative,
            })
        } else {
            Err(Error::domain(format!(
                "derivative order must satisfy 0 < alpha < 1, got {alpha}"
            )))
        }
    }

    pub fn integral(alpha: f64) -> Result<Self> {
        if alpha < 0.0 && alpha.is_finite() {
            Ok(FractionalOrder {
                alpha,
                role: Role::Integral,
            })
        } else {
            Err(Error::domain(format!(
                "integration order must satisfy alpha < 0, got {alpha}"
            )))
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn role(&self) -> Role {
        self.role
    }
}

/// Γ(γ+1)/Γ(γ+1−α)·(t−a)^{γ−α}: the fractional derivative (α > 0) or
/// integral (α < 0) of (t−a)^γ.
pub fn power_rule(gamma_exp: f64, alpha: f64, a: f64, t: f64) -> Result<f64> {
    if !(gamma_exp > -1.0) {
        return Err(Error::domain(format!("power rule needs gamma > -1, got {gamma_exp}")));
    }
    if !(gamma_exp + 1.0 - alpha > 0.0) {
        return Err(Error::domain(format!(
            "power rule needs gamma + 1 - alpha > 0, got {}",
            gamma_exp + 1.0 - alpha
        )));
    }
    if !(t > a) {
        return Err(Error::domain(format!("power rule needs t > a, got a = {a}, t = {t}")));
    }
    Ok(gamma(gamma_exp + 1.0)? / gamma(gamma_exp + 1.0 - alpha)? * (t - a).powf(gamma_exp - alpha))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// coefficient · |x − center|^exponent, with center ≤ x (left) or ≥ x (right).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Term {
    #[serde(rename = "c", serialize_with = "serialize_sig")]
    pub coefficient: f64,
    #[serde(serialize_with = "serialize_sig")]
    pub center: f64,
    #[serde(rename = "exp", serialize_with = "serialize_sig")]
    pub exponent: f64,
}

impl Term {
    fn eval(&self, x: f64, side: Side) -> f64 {
        let dist = match side {
            Side::Left => x - self.center,
            Side::Right => self.center - x,
        };
        // rounding can leave a knot-centred term a hair on the wrong side
        self.coefficient * dist.max(0.0).powf(self.exponent)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FracRegion {
    #[serde(serialize_with = "serialize_sig")]
    pub from: f64,
    #[serde(serialize_with = "serialize_sig")]
    pub to: f64,
    pub terms: Vec<Term>,
}

impl FracRegion {
    /// Coefficient of the term with this center and exponent, 0 if absent.
    pub fn coefficient_of(&self, center: f64, exponent: f64) -> f64 {
        self.terms
            .iter()
            .filter(|t| t.center == center && t.exponent == exponent)
            .map(|t| t.coefficient)
            .sum()
    }
}

/// Closed-form fractional derivative: one term list per inter-knot region.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FracExpression {
    pub side: Side,
    #[serde(serialize_with = "serialize_sig")]
    pub alpha: f64,
    pub regions: Vec<FracRegion>,
}

impl FracExpression {
    pub fn domain(&self) -> (f64, f64) {
        (self.regions[0].from, self.regions[self.regions.len() - 1].to)
    }

    /// Region used at `x`; the left region at a shared boundary.
    pub fn region_index(&self, x: f64) -> usize {
        self.regions[..self.regions.len() - 1].partition_point(|r| r.to < x)
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        let (a, b) = self.domain();
        if !(x >= a && x <= b) {
            return Err(Error::domain(format!("x = {x} outside [{a}, {b}]")));
        }
        Ok(self.eval_region(self.region_index(x), x))
    }

    /// Evaluates a specific region's term sum, regardless of where x lies.
    pub fn eval_region(&self, region: usize, x: f64) -> f64 {
        self.regions[region].terms.iter().map(|t| t.eval(x, self.side)).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain numeric document")
    }
}

/// Free-function form of [`FracExpression::eval`].
pub fn eval_expression(e: &FracExpression, x: f64) -> Result<f64> {
    e.eval(x)
}

fn require_derivative(order: &FractionalOrder) -> Result<f64> {
    match order.role {
        Role::Derivative => Ok(order.alpha),
        Role::Integral => Err(Error::domain(format!(
            "closed forms cover derivative orders 0 < alpha < 1, got integral order {}",
            order.alpha
        ))),
    }
}

fn push_term(terms: &mut Vec<Term>, coefficient: f64, center: f64, exponent: f64) {
    if coefficient != 0.0 {
        terms.push(Term {
            coefficient,
            center,
            exponent,
        });
    }
}

fn region_bounds(f: &PiecewiseFunction) -> Vec<f64> {
    let (a, b) = f.domain();
    let mut bounds = Vec::with_capacity(f.knots().len() + 2);
    bounds.push(a);
    bounds.extend_from_slice(f.knots());
    bounds.push(b);
    bounds
}

/// 1/Γ(j+1−α) for j = 1..=3.
fn inverse_gammas(alpha: f64) -> [f64; MAX_DEGREE] {
    std::array::from_fn(|i| 1.0 / gamma_unchecked(i as f64 + 2.0 - alpha))
}

/// Jumps of orders 1..=3 at every knot.
fn all_jumps(f: &PiecewiseFunction) -> Vec<[f64; MAX_DEGREE]> {
    (0..f.knots().len())
        .map(|k| std::array::from_fn(|j| f.derivative_jump(k, j + 1).expect("valid knot and order")))
        .collect()
}

/// Left Jumarie derivative of `f` as an exact piecewise expression.
pub fn jumarie_left_closed(f: &PiecewiseFunction, order: FractionalOrder) -> Result<FracExpression> {
    let alpha = require_derivative(&order)?;
    let inv_g = inverse_gammas(alpha);
    let (a, _) = f.domain();
    let bounds = region_bounds(f);
    let jumps = all_jumps(f);

    let mut anchor = Vec::new();
    for j in 1..=MAX_DEGREE {
        let d = f.first_segment().derivative_at(j, a);
        push_term(&mut anchor, d * inv_g[j - 1], a, j as f64 - alpha);
    }

    let mut regions = Vec::with_capacity(f.segments().len());
    let mut terms = anchor;
    for i in 0..f.segments().len() {
        if i > 0 {
            let k = f.knots()[i - 1];
            for j in 1..=MAX_DEGREE {
                push_term(&mut terms, jumps[i - 1][j - 1] * inv_g[j - 1], k, j as f64 - alpha);
            }
        }
        regions.push(FracRegion {
            from: bounds[i],
            to: bounds[i + 1],
            terms: terms.clone(),
        });
    }
    Ok(FracExpression {
        side: Side::Left,
        alpha,
        regions,
    })
}

/// Right Jumarie derivative of `f` as an exact piecewise expression.
pub fn jumarie_right_closed(f: &PiecewiseFunction, order: FractionalOrder) -> Result<FracExpression> {
    let alpha = require_derivative(&order)?;
    let inv_g = inverse_gammas(alpha);
    let (_, b) = f.domain();
    let bounds = region_bounds(f);
    let jumps = all_jumps(f);
    let sign = |j: usize| if j % 2 == 1 { 1.0 } else { -1.0 }; // (−1)^{j+1}

    let mut anchor = Vec::new();
    for j in 1..=MAX_DEGREE {
        let d = f.last_segment().derivative_at(j, b);
        push_term(&mut anchor, sign(j) * d * inv_g[j - 1], b, j as f64 - alpha);
    }

    let n = f.segments().len();
    let mut regions = vec![None; n];
    let mut terms = anchor;
    for i in (0..n).rev() {
        if i + 1 < n {
            let k = f.knots()[i];
            for j in 1..=MAX_DEGREE {
                push_term(
                    &mut terms,
                    -sign(j) * jumps[i][j - 1] * inv_g[j - 1],
                    k,
                    j as f64 - alpha,
                );
            }
        }
        regions[i] = Some(FracRegion {
            from: bounds[i],
            to: bounds[i + 1],
            terms: terms.clone(),
        });
    }
    Ok(FracExpression {
        side: Side::Right,
        alpha,
        regions: regions.into_iter().map(|r| r.expect("filled")).collect(),
    })
}
