//! Left- and right-sided fractional derivatives of piecewise polynomials and
//! sampled signals, and characterization of kinks by the difference of the
//! two one-sided Jumarie derivatives.
//!
//! Three independent routes compute the same quantities:
//!
//! - [`closedform`]: exact knot-jump expansions of the Jumarie derivatives.
//! - [`numeric`]: Grünwald–Letnikov sums and singularity-removed quadrature,
//!   also covering Riemann–Liouville and Caputo derivatives.
//! - [`characterize`]: kink detection and the left − right indicator built on
//!   either of the above.

// negated comparisons are how NaN inputs get rejected
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod catalog;
pub mod characterize;
pub mod cli;
pub mod closedform;
pub mod error;
pub mod format;
pub mod numeric;
pub mod piecewise;
pub mod specialfn;

pub use characterize::{
    characterize, characterize_signal, detect_knots, phase_indicator, phase_indicator_numeric, Engine, KnotFinding,
    TransitionReport,
};
pub use closedform::{
    eval_expression, jumarie_left_closed, jumarie_right_closed, power_rule, FracExpression, FractionalOrder, Side,
};
pub use error::{Error, Result};
pub use numeric::{Evaluatable, FnOnInterval, GridSpec, QuadSpec};
pub use piecewise::{PiecewiseFunction, SampleSeries};
