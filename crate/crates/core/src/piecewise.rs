//! Continuous piecewise polynomials on a closed interval, and sampled signals.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Highest polynomial degree a segment may carry.
pub const MAX_DEGREE: usize = 3;

const CONTINUITY_TOL: f64 = 1e-9;

/// A polynomial in the global monomial basis: value = Σ c_j x^j.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Poly {
    coeffs: Vec<f64>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::invalid("polynomial coefficients must be finite"));
        }
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.len() > MAX_DEGREE + 1 {
            return Err(Error::invalid(format!(
                "segment degree {} exceeds the maximum of {MAX_DEGREE}",
                coeffs.len() - 1
            )));
        }
        Ok(Poly { coeffs })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    /// Value of the `order`-th derivative at `x`.
    pub fn derivative_at(&self, order: usize, x: f64) -> f64 {
        let mut acc = 0.0;
        for (j, c) in self.coeffs.iter().enumerate().skip(order).rev() {
            let falling: f64 = ((j - order + 1)..=j).map(|k| k as f64).product();
            acc = acc * x + c * falling;
        }
        acc
    }

    /// q(x) = p(x + shift), re-expanded in the monomial basis.
    pub fn shifted(&self, shift: f64) -> Poly {
        let n = self.coeffs.len();
        let mut out = vec![0.0; n];
        for (j, &c) in self.coeffs.iter().enumerate() {
            let mut binom = 1.0;
            for (i, slot) in out.iter_mut().enumerate().take(j + 1) {
                *slot += c * binom * shift.powi((j - i) as i32);
                binom = binom * (j - i) as f64 / (i + 1) as f64;
            }
        }
        Poly { coeffs: out }
    }

    fn scaled(&self, factor: f64) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }
}

/// A continuous piecewise polynomial on `[a, b]`.
///
/// Segment `i` is active on `[knots[i-1], knots[i]]`; at a knot the left
/// segment is used for evaluation. Continuity across every knot is enforced at
/// construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseFunction {
    domain: (f64, f64),
    knots: Vec<f64>,
    segments: Vec<Poly>,
}

impl PiecewiseFunction {
    pub fn new(domain: (f64, f64), knots: Vec<f64>, segments: Vec<Vec<f64>>) -> Result<Self> {
        let segments = segments.into_iter().map(Poly::new).collect::<Result<Vec<_>>>()?;
        Self::from_polys(domain, knots, segments)
    }

    pub fn from_polys(domain: (f64, f64), knots: Vec<f64>, segments: Vec<Poly>) -> Result<Self> {
        let (a, b) = domain;
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::invalid(format!("domain [{a}, {b}] must satisfy a < b")));
        }
        if segments.len() != knots.len() + 1 {
            return Err(Error::invalid(format!(
                "{} knots need {} segments, got {}",
                knots.len(),
                knots.len() + 1,
                segments.len()
            )));
        }
        let mut prev = a;
        for &k in &knots {
            if !(k > prev && k < b) {
                return Err(Error::invalid(format!(
                    "knots must be strictly increasing and inside ({a}, {b}); offending knot {k}"
                )));
            }
            prev = k;
        }
        for (i, &k) in knots.iter().enumerate() {
            let left = segments[i].eval(k);
            let right = segments[i + 1].eval(k);
            if (left - right).abs() > CONTINUITY_TOL * (1.0 + left.abs()) {
                return Err(Error::invalid(format!(
                    "discontinuity at knot {k}: left value {left}, right value {right}"
                )));
            }
        }
        Ok(PiecewiseFunction {
            domain,
            knots,
            segments,
        })
    }

    /// A single polynomial on `[a, b]`.
    pub fn polynomial(domain: (f64, f64), coeffs: Vec<f64>) -> Result<Self> {
        Self::new(domain, Vec::new(), vec![coeffs])
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    pub fn segments(&self) -> &[Poly] {
        &self.segments
    }

    pub fn first_segment(&self) -> &Poly {
        &self.segments[0]
    }

    pub fn last_segment(&self) -> &Poly {
        self.segments.last().expect("at least one segment")
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.domain.0 && x <= self.domain.1
    }

    /// Index of the segment used at `x` (left segment at a knot).
    pub fn segment_index(&self, x: f64) -> usize {
        self.knots.partition_point(|&k| k < x)
    }

    pub fn evaluate(&self, x: f64) -> Result<f64> {
        if !self.contains(x) {
            let (a, b) = self.domain;
            return Err(Error::domain(format!("x = {x} outside [{a}, {b}]")));
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: f64) -> f64 {
        self.segments[self.segment_index(x)].eval(x)
    }

    /// Jump p_right^(order)(k) − p_left^(order)(k) across knot `knot_index`.
    pub fn derivative_jump(&self, knot_index: usize, order: usize) -> Result<f64> {
        let k = *self.knots.get(knot_index).ok_or_else(|| {
            Error::Index(format!(
                "knot index {knot_index} out of range ({} knots)",
                self.knots.len()
            ))
        })?;
        if !(1..=MAX_DEGREE).contains(&order) {
            return Err(Error::domain(format!("derivative order must be in 1..=3, got {order}")));
        }
        let left = self.segments[knot_index].derivative_at(order, k);
        let right = self.segments[knot_index + 1].derivative_at(order, k);
        Ok(right - left)
    }

    /// g(x) = f(x + shift) on `[a − shift, b − shift]`.
    pub fn translate(&self, shift: f64) -> PiecewiseFunction {
        PiecewiseFunction {
            domain: (self.domain.0 - shift, self.domain.1 - shift),
            knots: self.knots.iter().map(|k| k - shift).collect(),
            segments: self.segments.iter().map(|p| p.shifted(shift)).collect(),
        }
    }

    /// c·f, used for covariance checks.
    pub fn scaled(&self, factor: f64) -> PiecewiseFunction {
        PiecewiseFunction {
            domain: self.domain,
            knots: self.knots.clone(),
            segments: self.segments.iter().map(|p| p.scaled(factor)).collect(),
        }
    }

    /// Largest |f'| over all segment endpoints.
    pub fn max_slope_magnitude(&self) -> f64 {
        let (a, b) = self.domain;
        let mut bounds = Vec::with_capacity(self.knots.len() + 2);
        bounds.push(a);
        bounds.extend_from_slice(&self.knots);
        bounds.push(b);
        self.segments
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                [
                    p.derivative_at(1, bounds[i]).abs(),
                    p.derivative_at(1, bounds[i + 1]).abs(),
                ]
            })
            .fold(0.0, f64::max)
    }

    /// Piecewise-linear interpolant of `samples`, merging consecutive intervals
    /// whose slope differs from the run's first slope by at most
    /// `slope_tolerance`. Knots sit at the sample abscissae where a run ends.
    pub fn from_samples(samples: &SampleSeries, slope_tolerance: f64) -> Result<Self> {
        if !(slope_tolerance >= 0.0) {
            return Err(Error::domain(format!(
                "slope tolerance must be >= 0, got {slope_tolerance}"
            )));
        }
        let pts = samples.points();
        let slope = |i: usize| (pts[i + 1].1 - pts[i].1) / (pts[i + 1].0 - pts[i].0);

        let mut breaks = vec![0usize];
        let mut run_slope = slope(0);
        for i in 1..pts.len() - 1 {
            let s = slope(i);
            if (s - run_slope).abs() > slope_tolerance {
                breaks.push(i);
                run_slope = s;
            }
        }
        breaks.push(pts.len() - 1);

        let mut knots = Vec::with_capacity(breaks.len() - 2);
        let mut segments = Vec::with_capacity(breaks.len() - 1);
        for w in breaks.windows(2) {
            let (x0, y0) = pts[w[0]];
            let (x1, y1) = pts[w[1]];
            let m = (y1 - y0) / (x1 - x0);
            segments.push(vec![y0 - m * x0, m]);
        }
        for &i in &breaks[1..breaks.len() - 1] {
            knots.push(pts[i].0);
        }
        let domain = (pts[0].0, pts[pts.len() - 1].0);
        Self::new(domain, knots, segments)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let doc: FunctionDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::new((doc.domain[0], doc.domain[1]), doc.knots, doc.segments)
    }

    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json_str(&text)
    }

    pub fn to_json(&self) -> String {
        let doc = FunctionDoc {
            domain: [self.domain.0, self.domain.1],
            knots: self.knots.clone(),
            segments: self.segments.iter().map(|p| p.coeffs.clone()).collect(),
        };
        serde_json::to_string(&doc).expect("plain numeric document")
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct FunctionDoc {
    domain: [f64; 2],
    knots: Vec<f64>,
    segments: Vec<Vec<f64>>,
}

/// Strictly increasing `(x, y)` samples, at least two of them.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSeries {
    points: Vec<(f64, f64)>,
}

impl SampleSeries {
    pub fn new(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.len() < 2 {
            return Err(Error::invalid(format!("need at least 2 samples, got {}", points.len())));
        }
        if points.iter().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
            return Err(Error::invalid("samples must be finite"));
        }
        if let Some(w) = points.windows(2).find(|w| w[1].0 <= w[0].0) {
            return Err(Error::invalid(format!(
                "sample x values must be strictly increasing ({} then {})",
                w[0].0, w[1].0
            )));
        }
        Ok(SampleSeries { points })
    }

    /// Samples of `f` at the given abscissae.
    pub fn sample(f: impl Fn(f64) -> f64, xs: &[f64]) -> Result<Self> {
        Self::new(xs.iter().map(|&x| (x, f(x))).collect())
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    /// Parses `x,y` CSV: exact header line, one sample per record.
    pub fn from_csv_reader(reader: impl Read) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(true)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let headers = rdr.headers().map_err(|e| Error::Parse(e.to_string()))?;
        if headers.len() != 2 || &headers[0] != "x" || &headers[1] != "y" {
            return Err(Error::Parse(format!(
                "expected header \"x,y\", got {:?}",
                headers.iter().collect::<Vec<_>>()
            )));
        }
        let mut points = Vec::new();
        for (i, rec) in rdr.records().enumerate() {
            let line = i + 2;
            let rec = rec.map_err(|e| Error::Parse(format!("line {line}: {e}")))?;
            if rec.len() != 2 {
                return Err(Error::Parse(format!(
                    "line {line}: expected 2 fields, got {}",
                    rec.len()
                )));
            }
            let parse = |s: &str| {
                s.parse::<f64>()
                    .map_err(|_| Error::Parse(format!("line {line}: not a number: {s:?}")))
            };
            points.push((parse(&rec[0])?, parse(&rec[1])?));
        }
        Self::new(points)
    }

    pub fn from_csv_file(path: &Path) -> Result<Self> {
        let file = std::fs::File::open(path)?;
        Self::from_csv_reader(file)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use approx::assert_relative_eq;

    #[test]
    fn evaluate_examples() {
        assert_eq!(catalog::example1().evaluate(0.25).unwrap(), 0.25);
        assert_eq!(catalog::example2().evaluate(0.0).unwrap(), 4.0);
        let ex5 = catalog::example5();
        assert_eq!(ex5.evaluate(0.5).unwrap(), 4.0);
        assert!(matches!(ex5.evaluate(1.5), Err(Error::Domain(_))));
        assert!(ex5.evaluate(-1e-12).is_err());
    }

    #[test]
    fn knot_uses_left_segment() {
        let f = PiecewiseFunction::new((0.0, 2.0), vec![1.0], vec![vec![0.0, 1.0], vec![2.0, -1.0]]).unwrap();
        assert_eq!(f.segment_index(1.0), 0);
        assert_eq!(f.segment_index(1.0 + 1e-15), 1);
        assert_eq!(f.evaluate(1.0).unwrap(), 1.0);
    }

    #[test]
    fn derivative_jump_examples() {
        assert_eq!(catalog::example1().derivative_jump(0, 1).unwrap(), 2.0);
        assert_eq!(catalog::example2().derivative_jump(0, 1).unwrap(), -26.0);
        assert_eq!(catalog::example5().derivative_jump(0, 2).unwrap(), -16.0);
        let ex1 = catalog::example1();
        assert!(matches!(ex1.derivative_jump(1, 1), Err(Error::Index(_))));
        assert!(matches!(ex1.derivative_jump(0, 0), Err(Error::Domain(_))));
        assert!(matches!(ex1.derivative_jump(0, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn construction_rejects_bad_input() {
        // discontinuous
        assert!(PiecewiseFunction::new((0.0, 1.0), vec![0.5], vec![vec![0.0], vec![1.0]]).is_err());
        // knot on the boundary
        assert!(PiecewiseFunction::new((0.0, 1.0), vec![1.0], vec![vec![0.0], vec![0.0]]).is_err());
        // unsorted knots
        assert!(PiecewiseFunction::new((0.0, 1.0), vec![0.6, 0.4], vec![vec![0.0]; 3]).is_err());
        // degree 4
        assert!(PiecewiseFunction::polynomial((0.0, 1.0), vec![0.0, 0.0, 0.0, 0.0, 1.0]).is_err());
        // segment count mismatch
        assert!(PiecewiseFunction::new((0.0, 1.0), vec![0.5], vec![vec![0.0]]).is_err());
        // empty domain
        assert!(PiecewiseFunction::polynomial((1.0, 1.0), vec![1.0]).is_err());
        // trailing zeros are not degree
        assert!(PiecewiseFunction::polynomial((0.0, 1.0), vec![1.0, 0.0, 0.0, 0.0, 0.0]).is_ok());
    }

    #[test]
    fn continuity_tolerance_is_relative() {
        let big = 1e6;
        let ok = PiecewiseFunction::new((0.0, 1.0), vec![0.5], vec![vec![big], vec![big + 1e-4]]);
        assert!(ok.is_ok());
        let bad = PiecewiseFunction::new((0.0, 1.0), vec![0.5], vec![vec![big], vec![big + 1e-2]]);
        assert!(bad.is_err());
    }

    #[test]
    fn from_samples_examples() {
        let s = SampleSeries::new(vec![(0.0, 0.0), (1.0, 1.0)]).unwrap();
        let f = PiecewiseFunction::from_samples(&s, 0.0).unwrap();
        assert!(f.knots().is_empty());
        assert_eq!(f.segments()[0].derivative_at(1, 0.0), 1.0);

        let xs = [0.0, 0.25, 0.5, 0.75, 1.0];
        let s = SampleSeries::sample(|x| (x - 0.5f64).abs(), &xs).unwrap();
        let f = PiecewiseFunction::from_samples(&s, 1e-9).unwrap();
        assert_eq!(f.knots(), &[0.5]);
        assert_relative_eq!(f.segments()[0].derivative_at(1, 0.0), -1.0);
        assert_relative_eq!(f.segments()[1].derivative_at(1, 0.0), 1.0);

        let s = SampleSeries::new(vec![(2.0, 4.0), (2.5, 9.0), (3.0, 1.0)]).unwrap();
        let f = PiecewiseFunction::from_samples(&s, 1e-9).unwrap();
        assert_eq!(f.knots(), &[2.5]);
        assert_relative_eq!(f.segments()[0].derivative_at(1, 0.0), 10.0);
        assert_relative_eq!(f.segments()[1].derivative_at(1, 0.0), -16.0);
    }

    #[test]
    fn sample_series_validation() {
        assert!(SampleSeries::new(vec![(0.0, 1.0)]).is_err());
        assert!(SampleSeries::new(vec![(0.0, 1.0), (0.0, 2.0)]).is_err());
        assert!(SampleSeries::new(vec![(1.0, 1.0), (0.0, 2.0)]).is_err());
        assert!(SampleSeries::new(vec![(0.0, f64::NAN), (1.0, 2.0)]).is_err());
    }

    #[test]
    fn translate_examples() {
        let raw = catalog::example2_raw();
        let g = raw.translate(2.0);
        assert_eq!(g.domain(), (0.0, 1.0));
        assert_eq!(g.knots(), &[0.5]);
        assert_relative_eq!(g.evaluate(0.0).unwrap(), 4.0, epsilon = 1e-12);
        assert_relative_eq!(g.evaluate(1.0).unwrap(), 1.0, epsilon = 1e-12);
        assert_eq!(g, catalog::example2());

        let f = catalog::example4();
        assert_eq!(f.translate(0.0), f);

        let sq = PiecewiseFunction::polynomial((0.0, 1.0), vec![0.0, 0.0, 1.0]).unwrap();
        let g = sq.translate(-1.0);
        assert_eq!(g.domain(), (1.0, 2.0));
        assert_relative_eq!(g.evaluate(1.5).unwrap(), 0.25, epsilon = 1e-14);
    }

    #[test]
    fn json_round_trip_and_validation() {
        let f = catalog::example4();
        assert_eq!(PiecewiseFunction::from_json_str(&f.to_json()).unwrap(), f);
        let doc = r#"{"domain": [0, 1], "knots": [0.5], "segments": [[0.5, -1], [-0.5, 1]]}"#;
        assert_eq!(PiecewiseFunction::from_json_str(doc).unwrap(), catalog::example1());
        assert!(matches!(PiecewiseFunction::from_json_str("{"), Err(Error::Parse(_))));
        let discontinuous = r#"{"domain": [0, 1], "knots": [0.5], "segments": [[0], [1]]}"#;
        assert!(matches!(
            PiecewiseFunction::from_json_str(discontinuous),
            Err(Error::InvalidFunction(_))
        ));
    }

    #[test]
    fn csv_parsing() {
        let s = SampleSeries::from_csv_reader("x,y\n2,4\n2.5,9\n3,1\n".as_bytes()).unwrap();
        assert_eq!(s.points(), &[(2.0, 4.0), (2.5, 9.0), (3.0, 1.0)]);
        assert!(SampleSeries::from_csv_reader("a,b\n0,1\n1,2\n".as_bytes()).is_err());
        assert!(SampleSeries::from_csv_reader("x,y\n0,1\n1,zz\n".as_bytes()).is_err());
        assert!(SampleSeries::from_csv_reader("x,y\n0,1\n".as_bytes()).is_err());
        assert!(SampleSeries::from_csv_reader("x,y\n1,1\n0,1\n".as_bytes()).is_err());
    }

    #[test]
    fn poly_derivatives() {
        let p = Poly::new(vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(p.derivative_at(0, 2.0), 1.0 + 4.0 + 12.0 + 32.0);
        assert_eq!(p.derivative_at(1, 2.0), 2.0 + 12.0 + 48.0);
        assert_eq!(p.derivative_at(2, 2.0), 6.0 + 48.0);
        assert_eq!(p.derivative_at(3, 2.0), 24.0);
        assert_eq!(p.derivative_at(4, 2.0), 0.0);
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        fn arb_function() -> impl Strategy<Value = PiecewiseFunction> {
            (
                prop::collection::vec(-5.0f64..5.0, 4),
                prop::collection::vec(prop::collection::vec(-5.0f64..5.0, 1..4), 0..3),
                prop::collection::vec(0.05f64..0.95, 2),
            )
                .prop_map(|(first, tails, mut ks)| {
                    ks.sort_by(f64::total_cmp);
                    ks.dedup_by(|a, b| (*a - *b).abs() < 0.05);
                    let knots: Vec<f64> = ks.into_iter().take(tails.len()).collect();
                    let mut segs = vec![Poly::new(first).unwrap()];
                    for (k, tail) in knots.iter().zip(&tails) {
                        // new segment = previous + (x − k)-multiples, so continuity is exact in exact arithmetic
                        let prev = segs.last().unwrap().clone();
                        let mut c = prev.coeffs().to_vec();
                        c.resize(4, 0.0);
                        for (j, t) in tail.iter().enumerate() {
                            let p = j + 1;
                            // t·(x − k)^p expanded
                            let bump = Poly::new({
                                let mut v = vec![0.0; p + 1];
                                v[p] = *t;
                                v
                            })
                            .unwrap()
                            .shifted(-k);
                            for (i, b) in bump.coeffs().iter().enumerate() {
                                c[i] += b;
                            }
                        }
                        segs.push(Poly::new(c).unwrap());
                    }
                    segs.truncate(knots.len() + 1);
                    PiecewiseFunction::from_polys((0.0, 1.0), knots, segs).unwrap()
                })
        }

        proptest! {
            #[test]
            fn translate_is_pointwise_shift(f in arb_function(), s in -3.0f64..3.0, x in 0.0f64..1.0) {
                let g = f.translate(s);
                let lhs = g.evaluate(x - s).unwrap_or_else(|_| g.eval_unchecked(x - s));
                let rhs = f.evaluate(x).unwrap();
                prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs.abs()) * 10.0);
            }

            #[test]
            fn jumps_invariant_under_translate(f in arb_function(), s in -3.0f64..3.0) {
                let g = f.translate(s);
                for i in 0..f.knots().len() {
                    for order in 1..=3 {
                        let a = f.derivative_jump(i, order).unwrap();
                        let b = g.derivative_jump(i, order).unwrap();
                        prop_assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()));
                    }
                }
            }

            #[test]
            fn from_samples_reconstructs_piecewise_linear(
                slopes in prop::collection::vec(-5.0f64..5.0, 1..5),
                y0 in -3.0f64..3.0,
                fills in 1usize..4,
            ) {
                // make consecutive slopes distinct enough to be real knots
                let mut sl = vec![slopes[0]];
                for s in &slopes[1..] {
                    let last = *sl.last().unwrap();
                    sl.push(if (s - last).abs() < 0.1 { last + 1.0 } else { *s });
                }
                let n = sl.len();
                let knots: Vec<f64> = (1..n).map(|i| i as f64 / n as f64).collect();
                let mut segs = Vec::new();
                let mut x0 = 0.0;
                let mut yk = y0;
                for (i, m) in sl.iter().enumerate() {
                    segs.push(vec![yk - m * x0, *m]);
                    let x1 = if i + 1 < n { knots[i] } else { 1.0 };
                    yk += m * (x1 - x0);
                    x0 = x1;
                }
                let f = PiecewiseFunction::new((0.0, 1.0), knots.clone(), segs).unwrap();
                let mut xs = Vec::new();
                let step = 1.0 / (n * (fills + 1)) as f64;
                for i in 0..=(n * (fills + 1)) {
                    xs.push(i as f64 * step);
                }
                let s = SampleSeries::sample(|x| f.evaluate(x.min(1.0)).unwrap(), &xs).unwrap();
                let g = PiecewiseFunction::from_samples(&s, 1e-9).unwrap();
                prop_assert_eq!(g.knots().len(), knots.len());
                for (a, b) in g.knots().iter().zip(&knots) {
                    prop_assert!((a - b).abs() <= 1e-9);
                }
                for (p, m) in g.segments().iter().zip(&sl) {
                    prop_assert!((p.derivative_at(1, 0.0) - m).abs() <= 1e-9);
                }
            }
        }
    }
}
