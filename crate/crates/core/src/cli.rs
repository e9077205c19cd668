//! Command-line front end.
//!
//! Three subcommands share one flat set of flags; each subcommand accepts only
//! the flags it uses and rejects the rest before doing any work.
//!
//! Exit codes: 0 success, 1 input or output error, 2 flag error, 3 no kinks
//! found by `characterize`.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog;
use crate::characterize::{characterize, default_threshold, phase_indicator_numeric, Engine, KnotFinding};
use crate::closedform::{jumarie_left_closed, jumarie_right_closed, FracExpression, FractionalOrder, Side};
use crate::error::Error;
use crate::format::{round_sig, serialize_sig, sig};
use crate::numeric::{gl_left_anywhere, gl_right_anywhere, jumarie_left_anywhere, jumarie_right_anywhere};
use crate::numeric::{sample_grid, GridSpec, QuadSpec};
use crate::piecewise::{PiecewiseFunction, SampleSeries};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_FLAGS: i32 = 2;
pub const EXIT_NO_FINDINGS: i32 = 3;

pub const DEFAULT_GL_STEP: f64 = 1e-4;
pub const DEFAULT_SLOPE_TOLERANCE: f64 = 1e-9;
/// Orders swept by `paper` when `--alpha` is not given.
pub const REFERENCE_ALPHAS: [f64; 4] = [0.25, 0.5, 0.75, 0.9];
const DEFAULT_GRID_INTERVALS: f64 = 100.0;

#[derive(Parser, Debug)]
#[command(
    name = "fracknot",
    version,
    about = "Left/right Jumarie fractional derivatives and kink characterization"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate f and its left/right derivatives on a grid.
    Deriv(Flags),
    /// Reconstruct a sampled signal and report every kink.
    Characterize(Flags),
    /// Reproduce the five built-in examples and list unreproducible published values.
    Paper(Flags),
}

#[derive(Args, Debug)]
struct Flags {
    /// Derivative order, 0 < alpha < 1 [default: 0.5]
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, value_enum)]
    side: Option<SideFlag>,
    #[arg(long, value_enum)]
    engine: Option<EngineFlag>,
    /// start:stop:step
    #[arg(long)]
    grid: Option<String>,
    #[arg(long)]
    input: Option<PathBuf>,
    /// File (deriv, characterize) or directory (paper); stdout when absent
    #[arg(long)]
    output: Option<PathBuf>,
    /// Minimum |slope jump| for a kink [default: 1e-6 x max |slope|]
    #[arg(long)]
    threshold: Option<f64>,
    /// Maximum slope difference for merging sample intervals [default: 1e-9]
    #[arg(long = "slope-tolerance")]
    slope_tolerance: Option<f64>,
    #[arg(long, value_enum)]
    format: Option<FormatFlag>,
    /// Built-in example 1..5
    #[arg(long)]
    example: Option<u32>,
    /// Grünwald–Letnikov step [default: 1e-4]
    #[arg(long)]
    h: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideFlag {
    Left,
    Right,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineFlag {
    Closed,
    Gl,
    Quad,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatFlag {
    Csv,
    Json,
}

/// A failure carrying its exit code and a one-line message.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn flags(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_FLAGS,
            message: message.into(),
        }
    }

    fn input(e: impl std::fmt::Display) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (program name first), runs the subcommand, and returns the
/// process exit code. Diagnostics go to stderr.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("fracknot: {}", line.trim_start_matches("error: "));
            return EXIT_FLAGS;
        }
    };
    let result = match cli.command {
        Command::Deriv(f) => cmd_deriv(&f),
        Command::Characterize(f) => cmd_characterize(&f),
        Command::Paper(f) => cmd_reference(&f),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("fracknot: {}", f.message);
            f.code
        }
    }
}

fn reject(present: bool, flag: &str, command: &str) -> Result<(), Failure> {
    if present {
        Err(Failure::flags(format!("{flag} is not accepted by {command}")))
    } else {
        Ok(())
    }
}

fn alpha_of(flags: &Flags) -> Result<f64, Failure> {
    let alpha = flags.alpha.unwrap_or(crate::characterize::DEFAULT_ALPHA);
    if alpha > 0.0 && alpha < 1.0 {
        Ok(alpha)
    } else {
        Err(Failure::flags(format!(
            "--alpha must satisfy 0 < alpha < 1, got {alpha}"
        )))
    }
}

fn gl_step_of(flags: &Flags, engine: EngineFlag) -> Result<f64, Failure> {
    match (flags.h, engine) {
        (Some(_), EngineFlag::Closed | EngineFlag::Quad) => Err(Failure::flags("--h requires --engine gl")),
        (Some(h), EngineFlag::Gl) if !(h > 0.0 && h < 1.0) => {
            Err(Failure::flags(format!("--h must lie in (0, 1), got {h}")))
        }
        (h, _) => Ok(h.unwrap_or(DEFAULT_GL_STEP)),
    }
}

fn engine_of(flag: EngineFlag, h: f64) -> Engine {
    match flag {
        EngineFlag::Closed => Engine::ClosedForm,
        EngineFlag::Quad => Engine::Quadrature(QuadSpec::default()),
        EngineFlag::Gl => Engine::GrunwaldLetnikov { h },
    }
}

// ---------------------------------------------------------------------------
// deriv

#[derive(Serialize)]
struct DerivRow {
    #[serde(serialize_with = "serialize_sig")]
    x: f64,
    #[serde(serialize_with = "serialize_sig")]
    f: f64,
    #[serde(
        rename = "dL",
        skip_serializing_if = "Option::is_none",
        serialize_with = "serialize_opt_sig"
    )]
    left: Option<f64>,
    #[serde(
        rename = "dR",
        skip_serializing_if = "Option::is_none",
        serialize_with = "serialize_opt_sig"
    )]
    right: Option<f64>,
}

fn serialize_opt_sig<S: serde::Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.serialize_f64(round_sig(*v)),
        None => s.serialize_none(),
    }
}

#[derive(Serialize)]
struct DerivDoc<'a> {
    #[serde(serialize_with = "serialize_sig")]
    alpha: f64,
    side: &'a str,
    engine: &'a str,
    points: Vec<DerivRow>,
}

fn cmd_deriv(flags: &Flags) -> Outcome {
    const CMD: &str = "deriv";
    reject(flags.threshold.is_some(), "--threshold", CMD)?;
    reject(flags.slope_tolerance.is_some(), "--slope-tolerance", CMD)?;
    reject(flags.example.is_some(), "--example", CMD)?;
    let alpha = alpha_of(flags)?;
    let side = flags.side.unwrap_or(SideFlag::Both);
    let engine = flags.engine.unwrap_or(EngineFlag::Closed);
    let h = gl_step_of(flags, engine)?;
    let format = flags.format.unwrap_or(FormatFlag::Csv);
    let grid = flags
        .grid
        .as_deref()
        .map(GridSpec::parse)
        .transpose()
        .map_err(Failure::flags_from)?;
    let input = flags
        .input
        .as_ref()
        .ok_or_else(|| Failure::flags("deriv requires --input"))?;

    let f = PiecewiseFunction::from_json_file(input).map_err(Failure::input)?;
    let (a, b) = f.domain();
    let grid = match grid {
        Some(g) if g.start < a || g.stop > b => {
            return Err(Failure::flags(format!(
                "--grid {}:{}:{} leaves the function domain [{}, {}]",
                sig(g.start),
                sig(g.stop),
                sig(g.step),
                sig(a),
                sig(b)
            )))
        }
        Some(g) => g,
        None => GridSpec::new(a, b, (b - a) / DEFAULT_GRID_INTERVALS).map_err(Failure::input)?,
    };

    let rows = deriv_rows(&f, alpha, side, engine, h, &grid).map_err(Failure::input)?;
    let text = match format {
        FormatFlag::Csv => deriv_csv(&rows, side),
        FormatFlag::Json => {
            let doc = DerivDoc {
                alpha,
                side: match side {
                    SideFlag::Left => "left",
                    SideFlag::Right => "right",
                    SideFlag::Both => "both",
                },
                engine: match engine {
                    EngineFlag::Closed => "closed",
                    EngineFlag::Gl => "gl",
                    EngineFlag::Quad => "quad",
                },
                points: rows,
            };
            serde_json::to_string_pretty(&doc).expect("plain document") + "\n"
        }
    };
    emit(flags.output.as_deref(), &text)?;
    Ok(EXIT_OK)
}

fn deriv_rows(
    f: &PiecewiseFunction,
    alpha: f64,
    side: SideFlag,
    engine: EngineFlag,
    h: f64,
    grid: &GridSpec,
) -> crate::Result<Vec<DerivRow>> {
    let want_left = side != SideFlag::Right;
    let want_right = side != SideFlag::Left;
    let order = FractionalOrder::derivative(alpha)?;
    let left_expr = jumarie_left_closed(f, order)?;
    let right_expr = jumarie_right_closed(f, order)?;
    let spec = QuadSpec::default();

    let one_side = |left: bool, x: f64| -> crate::Result<f64> {
        match (engine, left) {
            (EngineFlag::Closed, true) => left_expr.eval(x),
            (EngineFlag::Closed, false) => right_expr.eval(x),
            (EngineFlag::Quad, true) => jumarie_left_anywhere(f, alpha, x, &spec),
            (EngineFlag::Quad, false) => jumarie_right_anywhere(f, alpha, x, &spec),
            (EngineFlag::Gl, true) => gl_left_anywhere(f, alpha, x, h),
            (EngineFlag::Gl, false) => gl_right_anywhere(f, alpha, x, h),
        }
    };
    let lefts = if want_left {
        Some(sample_grid(|x| one_side(true, x), grid)?)
    } else {
        None
    };
    let rights = if want_right {
        Some(sample_grid(|x| one_side(false, x), grid)?)
    } else {
        None
    };

    grid.points()
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            Ok(DerivRow {
                x,
                f: f.evaluate(x)?,
                left: lefts.as_ref().map(|v| v[i].1),
                right: rights.as_ref().map(|v| v[i].1),
            })
        })
        .collect()
}

fn deriv_csv(rows: &[DerivRow], side: SideFlag) -> String {
    let mut out = String::from(match side {
        SideFlag::Left => "x,f,dL\n",
        SideFlag::Right => "x,f,dR\n",
        SideFlag::Both => "x,f,dL,dR\n",
    });
    for r in rows {
        out.push_str(&sig(r.x));
        out.push(',');
        out.push_str(&sig(r.f));
        for v in [r.left, r.right].into_iter().flatten() {
            out.push(',');
            out.push_str(&sig(v));
        }
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// characterize

fn cmd_characterize(flags: &Flags) -> Outcome {
    const CMD: &str = "characterize";
    reject(flags.side.is_some(), "--side", CMD)?;
    reject(flags.grid.is_some(), "--grid", CMD)?;
    reject(flags.example.is_some(), "--example", CMD)?;
    let alpha = alpha_of(flags)?;
    let engine = flags.engine.unwrap_or(EngineFlag::Closed);
    let h = gl_step_of(flags, engine)?;
    let format = flags.format.unwrap_or(FormatFlag::Json);
    if let Some(t) = flags.threshold {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(Failure::flags(format!("--threshold must be >= 0, got {t}")));
        }
    }
    let tolerance = flags.slope_tolerance.unwrap_or(DEFAULT_SLOPE_TOLERANCE);
    if !(tolerance >= 0.0 && tolerance.is_finite()) {
        return Err(Failure::flags(format!(
            "--slope-tolerance must be >= 0, got {tolerance}"
        )));
    }
    let input = flags
        .input
        .as_ref()
        .ok_or_else(|| Failure::flags("characterize requires --input"))?;

    let samples = SampleSeries::from_csv_file(input).map_err(Failure::input)?;
    let f = PiecewiseFunction::from_samples(&samples, tolerance).map_err(Failure::input)?;
    let threshold = flags.threshold.unwrap_or_else(|| default_threshold(&f));
    let pts = samples.points();
    let source = format!(
        "signal: {} samples on [{}, {}]",
        pts.len(),
        sig(pts[0].0),
        sig(pts[pts.len() - 1].0)
    );
    let report = characterize(&f, alpha, threshold, &engine_of(engine, h), source).map_err(Failure::input)?;

    let text = match format {
        FormatFlag::Json => report.to_json() + "\n",
        FormatFlag::Csv => findings_csv(&report.findings),
    };
    emit(flags.output.as_deref(), &text)?;
    Ok(if report.findings.is_empty() {
        EXIT_NO_FINDINGS
    } else {
        EXIT_OK
    })
}

fn findings_csv(findings: &[KnotFinding]) -> String {
    let mut out = String::from("x,slope_jump,left,right,indicator\n");
    for k in findings {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            sig(k.x),
            sig(k.slope_jump),
            sig(k.left_value),
            sig(k.right_value),
            sig(k.indicator)
        );
    }
    out
}

// ---------------------------------------------------------------------------
// paper (built-in reference examples)

#[derive(Serialize)]
struct SidePair {
    #[serde(serialize_with = "serialize_sig")]
    left: f64,
    #[serde(serialize_with = "serialize_sig")]
    right: f64,
    #[serde(serialize_with = "serialize_sig")]
    indicator: f64,
}

impl From<KnotFinding> for SidePair {
    fn from(k: KnotFinding) -> Self {
        SidePair {
            left: k.left_value,
            right: k.right_value,
            indicator: k.indicator,
        }
    }
}

#[derive(Serialize)]
struct ExampleEntry {
    example: u32,
    function: &'static str,
    #[serde(serialize_with = "serialize_sig")]
    alpha: f64,
    #[serde(serialize_with = "serialize_sig")]
    knot: f64,
    #[serde(serialize_with = "serialize_sig")]
    slope_jump: f64,
    closed: SidePair,
    gl: SidePair,
    quad: SidePair,
}

#[derive(Serialize)]
struct DiscrepancyEntry {
    example: u32,
    quantity: &'static str,
    side: Side,
    #[serde(serialize_with = "serialize_sig")]
    x: f64,
    #[serde(serialize_with = "serialize_sig")]
    alpha: f64,
    published_formula: &'static str,
    #[serde(serialize_with = "serialize_sig")]
    published: f64,
    #[serde(serialize_with = "serialize_sig")]
    closed: f64,
    #[serde(serialize_with = "serialize_sig")]
    gl: f64,
    #[serde(serialize_with = "serialize_sig")]
    quad: f64,
    reproducible: bool,
}

#[derive(Serialize)]
struct ReferenceSummary {
    examples: Vec<ExampleEntry>,
    discrepancies: Vec<DiscrepancyEntry>,
}

/// Files produced by `paper`, in write order.
struct ReferenceOutput {
    files: Vec<(String, String)>,
    summary: String,
}

fn cmd_reference(flags: &Flags) -> Outcome {
    const CMD: &str = "paper";
    reject(flags.side.is_some(), "--side", CMD)?;
    reject(flags.engine.is_some(), "--engine", CMD)?;
    reject(flags.input.is_some(), "--input", CMD)?;
    reject(flags.threshold.is_some(), "--threshold", CMD)?;
    reject(flags.slope_tolerance.is_some(), "--slope-tolerance", CMD)?;
    reject(flags.format.is_some(), "--format", CMD)?;
    let alphas: Vec<f64> = match flags.alpha {
        Some(_) => vec![alpha_of(flags)?],
        None => REFERENCE_ALPHAS.to_vec(),
    };
    let examples: Vec<u32> = match flags.example {
        Some(n @ 1..=5) => vec![n],
        Some(n) => return Err(Failure::flags(format!("--example must be 1..5, got {n}"))),
        None => (1..=5).collect(),
    };
    let h = match flags.h {
        Some(h) if !(h > 0.0 && h < 1.0) => return Err(Failure::flags(format!("--h must lie in (0, 1), got {h}"))),
        h => h.unwrap_or(DEFAULT_GL_STEP),
    };
    let grid = match flags.grid.as_deref() {
        Some(g) => {
            let g = GridSpec::parse(g).map_err(Failure::flags_from)?;
            if g.start < 0.0 || g.stop > 1.0 {
                return Err(Failure::flags(
                    "--grid must stay inside [0, 1] for the built-in examples",
                ));
            }
            g
        }
        None => GridSpec::new(0.0, 1.0, 0.01).expect("valid default grid"),
    };

    let out = reference_output(&examples, &alphas, h, &grid).map_err(Failure::input)?;
    match flags.output.as_deref() {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(Failure::input)?;
            for (name, text) in &out.files {
                write_atomic(&dir.join(name), text)?;
            }
            write_atomic(&dir.join("summary.json"), &out.summary)?;
        }
        None => emit(None, &out.summary)?,
    }
    Ok(EXIT_OK)
}

fn alpha_label(alpha: f64) -> String {
    format!("alpha{}", sig(alpha))
}

fn reference_output(examples: &[u32], alphas: &[f64], h: f64, grid: &GridSpec) -> crate::Result<ReferenceOutput> {
    let mut files = Vec::new();
    let mut entries = Vec::new();
    let quad = Engine::Quadrature(QuadSpec::default());
    let gl = Engine::GrunwaldLetnikov { h };

    for &n in examples {
        let f = catalog::example(n).expect("examples 1..5 exist");
        let knot = f.knots()[0];
        for &alpha in alphas {
            let order = FractionalOrder::derivative(alpha)?;
            let left = jumarie_left_closed(&f, order)?;
            let right = jumarie_right_closed(&f, order)?;
            let stem = format!("example{n}_{}", alpha_label(alpha));
            files.push((format!("{stem}_left.json"), left.to_json() + "\n"));
            files.push((format!("{stem}_right.json"), right.to_json() + "\n"));
            files.push((format!("{stem}_grid.csv"), closed_grid_csv(&f, &left, &right, grid)?));

            let closed = phase_indicator_numeric(&f, alpha, knot, &Engine::ClosedForm)?;
            entries.push(ExampleEntry {
                example: n,
                function: catalog::example_description(n),
                alpha,
                knot,
                slope_jump: closed.slope_jump,
                closed: closed.into(),
                gl: phase_indicator_numeric(&f, alpha, knot, &gl)?.into(),
                quad: phase_indicator_numeric(&f, alpha, knot, &quad)?.into(),
            });
        }
    }

    let mut discrepancies = Vec::new();
    for d in catalog::published_discrepancies() {
        if !examples.contains(&d.example) {
            continue;
        }
        let f = catalog::example(d.example).expect("examples 1..5 exist");
        for &alpha in alphas {
            let (closed, gl_v, quad_v) = recomputed(&f, alpha, d.side, d.x, h)?;
            let published = d.published_value(alpha);
            discrepancies.push(DiscrepancyEntry {
                example: d.example,
                quantity: d.quantity,
                side: d.side,
                x: d.x,
                alpha,
                published_formula: d.published_formula,
                published,
                closed,
                gl: gl_v,
                quad: quad_v,
                reproducible: (published - closed).abs() <= 5e-3 * closed.abs().max(1e-12),
            });
        }
    }

    let summary = ReferenceSummary {
        examples: entries,
        discrepancies,
    };
    Ok(ReferenceOutput {
        files,
        summary: serde_json::to_string_pretty(&summary).expect("plain document") + "\n",
    })
}

/// Closed-form, GL, and quadrature values of one side at `x`; knots use the
/// one-sided extrapolation protocol for the numeric engines.
fn recomputed(f: &PiecewiseFunction, alpha: f64, side: Side, x: f64, h: f64) -> crate::Result<(f64, f64, f64)> {
    let order = FractionalOrder::derivative(alpha)?;
    let pick = |k: KnotFinding| match side {
        Side::Left => k.left_value,
        Side::Right => k.right_value,
    };
    if f.knots().contains(&x) {
        let closed = pick(phase_indicator_numeric(f, alpha, x, &Engine::ClosedForm)?);
        let gl = pick(phase_indicator_numeric(f, alpha, x, &Engine::GrunwaldLetnikov { h })?);
        let quad = pick(phase_indicator_numeric(
            f,
            alpha,
            x,
            &Engine::Quadrature(QuadSpec::default()),
        )?);
        return Ok((closed, gl, quad));
    }
    let spec = QuadSpec::default();
    Ok(match side {
        Side::Left => (
            jumarie_left_closed(f, order)?.eval(x)?,
            gl_left_anywhere(f, alpha, x, h)?,
            jumarie_left_anywhere(f, alpha, x, &spec)?,
        ),
        Side::Right => (
            jumarie_right_closed(f, order)?.eval(x)?,
            gl_right_anywhere(f, alpha, x, h)?,
            jumarie_right_anywhere(f, alpha, x, &spec)?,
        ),
    })
}

fn closed_grid_csv(
    f: &PiecewiseFunction,
    left: &FracExpression,
    right: &FracExpression,
    grid: &GridSpec,
) -> crate::Result<String> {
    let rows = grid
        .points()
        .into_iter()
        .map(|x| {
            Ok(DerivRow {
                x,
                f: f.evaluate(x)?,
                left: Some(left.eval(x)?),
                right: Some(right.eval(x)?),
            })
        })
        .collect::<crate::Result<Vec<_>>>()?;
    Ok(deriv_csv(&rows, SideFlag::Both))
}

// ---------------------------------------------------------------------------
// output

impl Failure {
    fn flags_from(e: Error) -> Self {
        Failure::flags(e.to_string())
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => write_atomic(p, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(Failure::input)
        }
    }
}

/// Writes `text` to a temporary file next to `path` and renames it into place,
/// so a failed run never leaves a partial file behind.
fn write_atomic(path: &Path, text: &str) -> Result<(), Failure> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let fail = |e: &dyn std::fmt::Display| Failure::input(format!("cannot write {}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| fail(&e))?;
    tmp.write_all(text.as_bytes()).map_err(|e| fail(&e))?;
    tmp.persist(path).map_err(|e| fail(&e.error))?;
    Ok(())
}
