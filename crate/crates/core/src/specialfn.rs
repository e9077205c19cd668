//! Gamma and beta on the positive real axis, plus Grünwald–Letnikov weights.
//!
//! Every gamma evaluation in this crate happens at a strictly positive
//! argument, so the kernel has no pole handling at all.

#![allow(clippy::excessive_precision)]

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// A validated, strictly positive gamma argument.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct GammaArg(f64);

impl GammaArg {
    pub fn new(x: f64) -> Result<Self> {
        if x > 0.0 && x.is_finite() {
            Ok(GammaArg(x))
        } else {
            Err(Error::domain(format!(
                "gamma argument must be positive and finite, got {x}"
            )))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    pub fn gamma(self) -> f64 {
        gamma_positive(self.0)
    }
}

/// Γ(x) for x > 0.
pub fn gamma(x: f64) -> Result<f64> {
    GammaArg::new(x).map(GammaArg::gamma)
}

/// Lanczos series, valid for x >= 0.5; smaller arguments are lifted with
/// Γ(x) = Γ(x+1)/x.
fn gamma_positive(x: f64) -> f64 {
    if x.fract() == 0.0 && x <= 20.0 {
        return (1..x as u64).map(|k| k as f64).product();
    }
    if x < 0.5 {
        return gamma_positive(x + 1.0) / x;
    }
    let z = x - 1.0;
    let mut sum = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        sum += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * std::f64::consts::PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * sum
}

/// Infallible gamma for internal call sites whose argument is positive by
/// construction (j + 1 − α with 0 < α < 1, and the like).
pub(crate) fn gamma_unchecked(x: f64) -> f64 {
    debug_assert!(x > 0.0, "gamma_unchecked called with {x}");
    gamma_positive(x)
}

/// B(p, q) = Γ(p)Γ(q)/Γ(p+q).
pub fn beta(p: f64, q: f64) -> Result<f64> {
    let gp = gamma(p)?;
    let gq = gamma(q)?;
    Ok(gp * gq / gamma_positive(p + q))
}

/// Signed Grünwald–Letnikov weights w_r = (−1)^r C(α, r) for r = 0..=n.
///
/// Built from the product recurrence w_r = w_{r−1}(r − 1 − α)/r, which never
/// touches gamma at a negative argument.
pub fn gl_weights(alpha: f64, n: usize) -> Result<Vec<f64>> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!("GL weights need 0 < alpha < 1, got {alpha}")));
    }
    let mut w = Vec::with_capacity(n + 1);
    w.push(1.0);
    for r in 1..=n {
        let prev = w[r - 1];
        w.push(prev * (r as f64 - 1.0 - alpha) / r as f64);
    }
    Ok(w)
}
