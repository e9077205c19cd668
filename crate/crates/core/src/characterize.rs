//! Kink detection and the left/right phase-transition indicator.
//!
//! At a point where f is continuous but not differentiable, the left and right
//! Jumarie derivatives both exist yet disagree. Their difference
//! (left − right) quantifies the kink; for a differentiable point it is zero.

use rayon::prelude::*;
use serde::Serialize;

use crate::closedform::{jumarie_left_closed, jumarie_right_closed, FractionalOrder};
use crate::error::{Error, Result};
use crate::format::serialize_sig;
use crate::numeric::{gl_left_anywhere, gl_right_anywhere, jumarie_left_anywhere, jumarie_right_anywhere, QuadSpec};
use crate::piecewise::{PiecewiseFunction, SampleSeries};

/// Default α for characterization.
pub const DEFAULT_ALPHA: f64 = 0.5;

/// Relative factor applied to the largest slope magnitude for the default
/// detection threshold.
pub const DEFAULT_THRESHOLD_FACTOR: f64 = 1e-6;

/// Offset, as a fraction of the domain, of the first point used for one-sided
/// extrapolation of the numeric engines onto a knot.
pub const EXTRAPOLATION_OFFSET: f64 = 0.02;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct KnotFinding {
    #[serde(serialize_with = "serialize_sig")]
    pub x: f64,
    #[serde(serialize_with = "serialize_sig")]
    pub slope_jump: f64,
    #[serde(rename = "left", serialize_with = "serialize_sig")]
    pub left_value: f64,
    #[serde(rename = "right", serialize_with = "serialize_sig")]
    pub right_value: f64,
    /// left_value − right_value
    #[serde(serialize_with = "serialize_sig")]
    pub indicator: f64,
}

impl KnotFinding {
    fn new(x: f64, slope_jump: f64, left_value: f64, right_value: f64) -> Self {
        KnotFinding {
            x,
            slope_jump,
            left_value,
            right_value,
            indicator: left_value - right_value,
        }
    }
}

/// How knot values are computed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Engine {
    ClosedForm,
    /// Singularity-removed quadrature, extrapolated onto the knot.
    Quadrature(QuadSpec),
    /// Grünwald–Letnikov with step `h`, extrapolated onto the knot.
    GrunwaldLetnikov {
        h: f64,
    },
}

impl Engine {
    pub fn label(&self) -> &'static str {
        match self {
            Engine::ClosedForm => "closed-form",
            Engine::Quadrature(_) | Engine::GrunwaldLetnikov { .. } => "numeric",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransitionReport {
    #[serde(serialize_with = "serialize_sig")]
    pub alpha: f64,
    pub source: String,
    pub engine: &'static str,
    pub findings: Vec<KnotFinding>,
}

impl TransitionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain document")
    }
}

/// 1e-6 × the largest |f'| at any segment endpoint.
pub fn default_threshold(f: &PiecewiseFunction) -> f64 {
    DEFAULT_THRESHOLD_FACTOR * f.max_slope_magnitude()
}

/// Knots whose slope jump exceeds `threshold` in magnitude, ascending.
pub fn detect_knots(f: &PiecewiseFunction, threshold: f64) -> Vec<f64> {
    f.knots()
        .iter()
        .enumerate()
        .filter(|(i, _)| f.derivative_jump(*i, 1).expect("valid knot").abs() > threshold)
        .map(|(_, &k)| k)
        .collect()
}

fn knot_index(f: &PiecewiseFunction, x: f64) -> Result<usize> {
    f.knots()
        .iter()
        .position(|&k| (k - x).abs() <= 1e-12 * (1.0 + x.abs()))
        .ok_or_else(|| Error::domain(format!("x = {x} is not a knot of the function")))
}

/// Left and right closed-form Jumarie derivatives at knot `x`.
pub fn phase_indicator(f: &PiecewiseFunction, alpha: f64, x: f64) -> Result<KnotFinding> {
    let order = FractionalOrder::derivative(alpha)?;
    let i = knot_index(f, x)?;
    let k = f.knots()[i];
    let left = jumarie_left_closed(f, order)?.eval(k)?;
    let right = jumarie_right_closed(f, order)?.eval(k)?;
    Ok(KnotFinding::new(k, f.derivative_jump(i, 1)?, left, right))
}

type SideEval<'a> = Box<dyn Fn(f64) -> Result<f64> + 'a>;

/// Knot values from a numeric engine: each side is evaluated at two points
/// on its own side of the knot (offsets d and 2d) and linearly extrapolated
/// onto the knot, since the outer finite difference cannot straddle it.
pub fn phase_indicator_numeric(f: &PiecewiseFunction, alpha: f64, x: f64, engine: &Engine) -> Result<KnotFinding> {
    FractionalOrder::derivative(alpha)?;
    let i = knot_index(f, x)?;
    let k = f.knots()[i];
    let (a, b) = f.domain();
    let d = (EXTRAPOLATION_OFFSET * (b - a)).min((k - a) / 3.0).min((b - k) / 3.0);

    let (left_at, right_at): (SideEval<'_>, SideEval<'_>) = match *engine {
        Engine::ClosedForm => return phase_indicator(f, alpha, x),
        Engine::Quadrature(spec) => (
            Box::new(move |t| jumarie_left_anywhere(f, alpha, t, &spec)),
            Box::new(move |t| jumarie_right_anywhere(f, alpha, t, &spec)),
        ),
        Engine::GrunwaldLetnikov { h } => (
            Box::new(move |t| gl_left_anywhere(f, alpha, t, h)),
            Box::new(move |t| gl_right_anywhere(f, alpha, t, h)),
        ),
    };
    let left = 2.0 * left_at(k - d)? - left_at(k - 2.0 * d)?;
    let right = 2.0 * right_at(k + d)? - right_at(k + 2.0 * d)?;
    Ok(KnotFinding::new(k, f.derivative_jump(i, 1)?, left, right))
}

/// Detects kinks in `f` and computes the indicator at each.
pub fn characterize(
    f: &PiecewiseFunction,
    alpha: f64,
    threshold: f64,
    engine: &Engine,
    source: impl Into<String>,
) -> Result<TransitionReport> {
    FractionalOrder::derivative(alpha)?;
    if !(threshold >= 0.0) {
        return Err(Error::domain(format!("threshold must be >= 0, got {threshold}")));
    }
    let findings = detect_knots(f, threshold)
        .into_par_iter()
        .map(|k| phase_indicator_numeric(f, alpha, k, engine))
        .collect::<Result<Vec<_>>>()?;
    Ok(TransitionReport {
        alpha,
        source: source.into(),
        engine: engine.label(),
        findings,
    })
}

/// Signal pipeline: piecewise-linear reconstruction, kink detection, and
/// closed-form indicators. `threshold = None` uses [`default_threshold`].
pub fn characterize_signal(
    s: &SampleSeries,
    alpha: f64,
    threshold: Option<f64>,
    slope_tolerance: f64,
) -> Result<TransitionReport> {
    let f = PiecewiseFunction::from_samples(s, slope_tolerance)?;
    let threshold = threshold.unwrap_or_else(|| default_threshold(&f));
    let pts = s.points();
    let source = format!(
        "signal: {} samples on [{}, {}]",
        pts.len(),
        crate::format::sig(pts[0].0),
        crate::format::sig(pts[pts.len() - 1].0)
    );
    characterize(&f, alpha, threshold, &Engine::ClosedForm, source)
}
