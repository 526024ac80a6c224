//! Command-line front end.
//!
//! Every command produces a human-readable text and a JSON value; `--json`
//! selects the latter. Exit codes: 0 success, 1 a check failed (theorem
//! suites, `foset verify`), 2 bad input. In JSON mode errors are printed to
//! stdout as `{"error": {"code": ..., "message": ...}}`.
//!
//! Spaces are given as a JSON file, inline JSON, or the shorthand
//! `pointwise:<dim>:<c>` / `lex:<c>`. Handles are a JSON file, inline JSON,
//! a pointwise support such as `{1,3}` or `1,3`, or one of `zero`, `axis`,
//! `full` on the plane. Matrices are a JSON file, inline JSON, or rows
//! separated by `;`, e.g. `1,0;0,0`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::convergence::{Certified, DEFAULT_HORIZON};
use crate::error::{Error, Result};
use crate::foset::{self, MembershipMatrix};
use crate::ideals::{
    band_generated, disjoint_complement, ideal_generated, ideal_intersection, ideal_sum, is_order_dense,
    principal_band_contains, Handle, LexKind,
};
use crate::mutation::{with_mutant, Mutant};
use crate::projections::{
    absolute_bound_check, band_projection_operator, classify_band_projection, compare_projections, interval_sup,
    is_fuzzy_positive, principal_projection_traced, OperatorMatrix,
};
use crate::rational::parse_rational;
use crate::sample::Sampler;
use crate::space::{is_nx_bounded, riesz_decompose, space_properties, Family, RationalVector, SpaceSpec};
use crate::suites::{run_suite, Suite, SuiteConfig, DEFAULT_CASES, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Random samples drawn by commands that cross-check a closed form.
const CLI_SAMPLES: usize = 16;

#[derive(Parser, Debug)]
#[command(name = "fuzzy-riesz", version, about = "Fuzzy ordered sets and fuzzy Riesz spaces over exact rationals")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Random cases per law in the theorem suites.
    #[arg(long, global = true, default_value_t = DEFAULT_CASES)]
    cases: u64,
    /// Number of sequence terms checked by convergence certificates.
    #[arg(long, global = true, default_value_t = DEFAULT_HORIZON)]
    horizon: u64,
    #[arg(long, global = true, hide = true, value_enum)]
    mutant: Option<MutantArg>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MutantArg {
    LiteralPositivePart,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Finite fuzzy ordered sets loaded from JSON.
    Foset {
        #[command(subcommand)]
        action: FosetAction,
    },
    /// Order, lattice operations and Archimedean checks in a preset space.
    Space {
        #[command(subcommand)]
        action: SpaceAction,
    },
    /// Ideals of a preset space.
    Ideal {
        #[command(subcommand)]
        action: IdealAction,
    },
    /// Bands, disjoint complements and band projections.
    Band {
        #[command(subcommand)]
        action: BandAction,
    },
    /// Operators: band projections, positivity and comparison.
    Project {
        #[command(subcommand)]
        action: ProjectAction,
    },
    /// Runs the executable theorem suites.
    Theorems {
        #[arg(default_value = "all", value_parser = parse_suite)]
        suite: Suite,
    },
}

#[derive(Subcommand, Debug)]
enum FosetAction {
    /// Checks reflexivity, antisymmetry and max-min transitivity.
    Verify {
        file: PathBuf,
    },
    Sup {
        file: PathBuf,
        #[arg(required = true)]
        elements: Vec<String>,
    },
    Inf {
        file: PathBuf,
        #[arg(required = true)]
        elements: Vec<String>,
    },
    Join {
        file: PathBuf,
        x: String,
        y: String,
    },
    Meet {
        file: PathBuf,
        x: String,
        y: String,
    },
    /// Whether every pair has a join and a meet.
    Lattice {
        file: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum SpaceAction {
    Mu {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    Join {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    Meet {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    Abs {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Positive and negative parts.
    Parts {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Splits x along y_1, ..., y_n when |x| lies below |y_1 + ... + y_n|.
    Decompose {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(required = true, allow_hyphen_values = true)]
        ys: Vec<String>,
    },
    /// Archimedean property; with x and y, whether n x stays below y.
    Archimedean {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(allow_hyphen_values = true)]
        y: Option<String>,
    },
    /// Checks a convergence certificate file on the horizon.
    Converge { spec: String, certificate: PathBuf },
}

#[derive(Subcommand, Debug)]
enum IdealAction {
    /// Ideal generated by the given vectors.
    Generate {
        spec: String,
        #[arg(required = true, allow_hyphen_values = true)]
        vectors: Vec<String>,
    },
    Contains {
        spec: String,
        handle: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    Sum {
        spec: String,
        first: String,
        second: String,
    },
    Intersect {
        spec: String,
        first: String,
        second: String,
    },
    /// Order density: every nonzero positive element dominates a nonzero member.
    Dense {
        spec: String,
        handle: String,
    },
    /// Every ideal of the space.
    List {
        spec: String,
    },
}

#[derive(Subcommand, Debug)]
enum BandAction {
    /// Band generated by the given vectors.
    Generate {
        spec: String,
        #[arg(required = true, allow_hyphen_values = true)]
        vectors: Vec<String>,
    },
    Contains {
        spec: String,
        handle: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Disjoint complement.
    Complement { spec: String, handle: String },
    /// Band projection of x.
    Project {
        spec: String,
        handle: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Membership of y in the band generated by x, with the stabilizing meets.
    Principal {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
}

#[derive(Subcommand, Debug)]
enum ProjectAction {
    /// Matrix of the band projection.
    Operator { spec: String, handle: String },
    /// P_B x by the matrix and by the supremum of B+ within [0, x].
    Apply {
        spec: String,
        handle: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Principal projection P_x y.
    Principal {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Fuzzy positivity of a matrix, optionally into a different space.
    Positive {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        #[arg(long)]
        to: Option<String>,
    },
    /// Whether a matrix is a band projection, by three characterizations.
    Classify {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Inclusion, absorption and operator order of two band projections.
    Compare { spec: String, first: String, second: String },
    /// |T x| below T |x| for a positive T.
    Bound {
        spec: String,
        #[arg(allow_hyphen_values = true)]
        matrix: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// What a command prints, in both modes.
struct Output {
    text: String,
    json: Value,
    passed: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output { text: text.into(), json, passed: true }
    }

    fn failing(mut self, failed: bool) -> Self {
        self.passed = !failed;
        self
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Inline JSON, an existing file, or `None` to let the caller try shorthand.
fn json_source(text: &str) -> Result<Option<String>> {
    let t = text.trim();
    if (t.starts_with('{') && t.contains('"')) || t.starts_with("[[") {
        return Ok(Some(t.to_string()));
    }
    let path = Path::new(t);
    if path.is_file() {
        return read(path).map(Some);
    }
    Ok(None)
}

pub fn parse_space(text: &str) -> Result<SpaceSpec> {
    if let Some(src) = json_source(text)? {
        return SpaceSpec::from_json(&src);
    }
    let parts: Vec<&str> = text.trim().split(':').collect();
    match parts.as_slice() {
        ["pointwise", dim, c] => {
            let dim = dim.parse().map_err(|_| Error::Parse(format!("bad dimension {dim:?}")))?;
            SpaceSpec::pointwise(dim, parse_rational(c)?)
        }
        ["lex", c] | ["lex", "2", c] => SpaceSpec::lex(parse_rational(c)?),
        _ => Err(Error::Parse(format!("space {text:?} is neither a file, JSON, pointwise:<dim>:<c> nor lex:<c>"))),
    }
}

pub fn parse_handle(s: &SpaceSpec, text: &str) -> Result<Handle> {
    let h = match json_source(text)? {
        Some(src) => Handle::from_json(&src)?,
        None => {
            let t = text.trim();
            match (s.family(), t) {
                (Family::Lex, "zero") => Handle::lex(LexKind::Zero),
                (Family::Lex, "axis") => Handle::lex(LexKind::Axis),
                (Family::Lex, "full") => Handle::lex(LexKind::Full),
                (Family::Lex, _) => {
                    return Err(Error::Parse(format!("lex handle must be zero, axis or full, got {t:?}")))
                }
                (Family::Pointwise, _) => {
                    let inner = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')).unwrap_or(t);
                    let support = inner
                        .split(',')
                        .map(str::trim)
                        .filter(|p| !p.is_empty())
                        .map(|p| p.parse::<usize>().map_err(|_| Error::Parse(format!("bad coordinate {p:?}"))))
                        .collect::<Result<Vec<_>>>()?;
                    Handle::pointwise(support)
                }
            }
        }
    };
    h.validate(s)?;
    Ok(h)
}

pub fn parse_matrix(text: &str) -> Result<OperatorMatrix> {
    if let Some(src) = json_source(text)? {
        return OperatorMatrix::from_json(&src);
    }
    let rows = text
        .split(';')
        .map(|row| row.split(',').map(|c| parse_rational(c.trim())).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    OperatorMatrix::new(rows)
}

fn vector(s: &SpaceSpec, text: &str) -> Result<RationalVector> {
    let x = RationalVector::parse(text)?;
    s.check(&x)?;
    Ok(x)
}

fn vectors(s: &SpaceSpec, texts: &[String]) -> Result<Vec<RationalVector>> {
    texts.iter().map(|t| vector(s, t)).collect()
}

fn load_foset(path: &Path) -> Result<MembershipMatrix> {
    MembershipMatrix::from_json(&read(path)?).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

fn label_or_none(m: &MembershipMatrix, z: Option<usize>) -> (String, Value) {
    match z {
        Some(i) => (m.label(i).to_string(), json!(m.label(i))),
        None => ("none".into(), Value::Null),
    }
}

fn cmd_foset(action: &FosetAction) -> Result<Output> {
    Ok(match action {
        FosetAction::Verify { file } => {
            let m = load_foset(file)?;
            let report = foset::validate_fuzzy_order(&m);
            let mut lines = Vec::new();
            if report.is_empty() {
                lines.push("valid fuzzy order".to_string());
            }
            for x in &report.reflexivity_violations {
                lines.push(format!("reflexivity violation: mu({x}, {x}) is not 1"));
            }
            for v in &report.antisymmetry_violations {
                lines.push(format!(
                    "antisymmetry violation: mu({0}, {1}) + mu({1}, {0}) = {2} exceeds 1",
                    v.x, v.y, v.sum
                ));
            }
            for v in &report.transitivity_violations {
                lines.push(format!(
                    "transitivity violation: mu({}, {}) = {} is below {} through {}",
                    v.x, v.z, v.actual, v.required, v.y
                ));
            }
            Output::new(lines.join("\n"), json!({ "valid": report.is_empty(), "report": report }))
                .failing(!report.is_empty())
        }
        FosetAction::Sup { file, elements } | FosetAction::Inf { file, elements } => {
            let m = load_foset(file)?;
            let a = m.indices_of(elements)?;
            let z = match action {
                FosetAction::Sup { .. } => foset::supremum(&m, &a)?,
                _ => foset::infimum(&m, &a)?,
            };
            let (text, value) = label_or_none(&m, z);
            Output::new(text, json!({ "elements": elements, "result": value }))
        }
        FosetAction::Join { file, x, y } | FosetAction::Meet { file, x, y } => {
            let m = load_foset(file)?;
            let (i, j) = (m.index_of(x)?, m.index_of(y)?);
            let z = match action {
                FosetAction::Join { .. } => foset::join(&m, i, j)?,
                _ => foset::meet(&m, i, j)?,
            };
            let (text, value) = label_or_none(&m, z);
            Output::new(text, json!({ "x": x, "y": y, "result": value }))
        }
        FosetAction::Lattice { file } => {
            let m = load_foset(file)?;
            let lattice = foset::is_lattice(&m)?;
            Output::new(if lattice { "lattice" } else { "not a lattice" }, json!({ "lattice": lattice }))
        }
    })
}

fn cmd_space(action: &SpaceAction, horizon: u64) -> Result<Output> {
    Ok(match action {
        SpaceAction::Mu { spec, x, y } => {
            let s = parse_space(spec)?;
            let g = s.mu(&vector(&s, x)?, &vector(&s, y)?)?;
            Output::new(g.to_string(), json!({ "mu": g }))
        }
        SpaceAction::Join { spec, x, y } | SpaceAction::Meet { spec, x, y } => {
            let s = parse_space(spec)?;
            let (x, y) = (vector(&s, x)?, vector(&s, y)?);
            let z = match action {
                SpaceAction::Join { .. } => s.join(&x, &y)?,
                _ => s.meet(&x, &y)?,
            };
            Output::new(z.to_string(), json!({ "result": z }))
        }
        SpaceAction::Abs { spec, x } => {
            let s = parse_space(spec)?;
            let z = s.abs(&vector(&s, x)?)?;
            Output::new(z.to_string(), json!({ "result": z }))
        }
        SpaceAction::Parts { spec, x } => {
            let s = parse_space(spec)?;
            let x = vector(&s, x)?;
            let (p, n) = (s.pos_part(&x)?, s.neg_part(&x)?);
            Output::new(format!("x+ = {p}\nx- = {n}"), json!({ "positive": p, "negative": n }))
        }
        SpaceAction::Decompose { spec, x, ys } => {
            let s = parse_space(spec)?;
            let d = riesz_decompose(&s, &vector(&s, x)?, &vectors(&s, ys)?)?;
            let text = d.parts.iter().map(ToString::to_string).collect::<Vec<_>>().join(" + ");
            Output::new(text, to_value(&d))
        }
        SpaceAction::Archimedean { spec, x, y } => {
            let s = parse_space(spec)?;
            match (x, y) {
                (Some(x), Some(y)) => {
                    let r = is_nx_bounded(&s, &vector(&s, x)?, &vector(&s, y)?, horizon)?;
                    let text = match r.first_failure {
                        None => format!("n x below y for n = 1..{}", r.horizon),
                        Some(n) => format!("n x not below y at n = {n}"),
                    };
                    Output::new(text, to_value(&r))
                }
                (None, None) => {
                    let p = space_properties(&s);
                    let text = match &p.witness {
                        Some((x, y)) => format!("{}; witness x={x} bounded by {y}", p.archimedean),
                        None => p.archimedean.to_string(),
                    };
                    Output::new(text, to_value(&p))
                }
                _ => return Err(Error::Parse("archimedean takes either no vectors or both x and y".into())),
            }
        }
        SpaceAction::Converge { spec, certificate } => {
            let s = parse_space(spec)?;
            let file: CertificateFile = serde_json::from_str(&read(certificate)?)?;
            let r = file.certified.check(&s, file.horizon.unwrap_or(horizon))?;
            let mut text = format!(
                "{} on n = 1..{}; dominating family tail {:?}",
                if r.establishes_limit() { "limit established" } else { "limit not established" },
                r.verified_horizon,
                r.inf_zero_status
            );
            if let Some(v) = r.violations.first() {
                text.push_str(&format!("\nfirst violation at n = {} with grade {}", v.index, v.grade));
            }
            if !r.monotone_ok {
                text.push_str("\ndominating family is not positive and decreasing");
            }
            Output::new(text, json!({ "establishes_limit": r.establishes_limit(), "report": r }))
        }
    })
}

/// Certificate on disk; a `horizon` field overrides `--horizon`.
#[derive(serde::Deserialize)]
struct CertificateFile {
    #[serde(flatten)]
    certified: Certified,
    horizon: Option<u64>,
}

fn handles_text(hs: &[Handle]) -> String {
    hs.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
}

fn cmd_ideal(action: &IdealAction) -> Result<Output> {
    Ok(match action {
        IdealAction::Generate { spec, vectors: vs } => {
            let s = parse_space(spec)?;
            let h = ideal_generated(&s, &vectors(&s, vs)?)?;
            Output::new(h.to_string(), json!({ "handle": h }))
        }
        IdealAction::Contains { spec, handle, x } => {
            let s = parse_space(spec)?;
            let inside = parse_handle(&s, handle)?.contains(&s, &vector(&s, x)?)?;
            Output::new(inside.to_string(), json!({ "contains": inside }))
        }
        IdealAction::Sum { spec, first, second } | IdealAction::Intersect { spec, first, second } => {
            let s = parse_space(spec)?;
            let (a, b) = (parse_handle(&s, first)?, parse_handle(&s, second)?);
            let h = match action {
                IdealAction::Sum { .. } => ideal_sum(&s, &a, &b)?,
                _ => ideal_intersection(&s, &a, &b)?,
            };
            Output::new(h.to_string(), json!({ "handle": h }))
        }
        IdealAction::Dense { spec, handle } => {
            let s = parse_space(spec)?;
            let dense = is_order_dense(&s, &parse_handle(&s, handle)?)?;
            Output::new(dense.to_string(), json!({ "order_dense": dense }))
        }
        IdealAction::List { spec } => {
            let s = parse_space(spec)?;
            let all = Handle::all(&s);
            Output::new(handles_text(&all), json!({ "handles": all }))
        }
    })
}

fn cmd_band(action: &BandAction) -> Result<Output> {
    Ok(match action {
        BandAction::Generate { spec, vectors: vs } => {
            let s = parse_space(spec)?;
            let h = band_generated(&s, &vectors(&s, vs)?)?;
            Output::new(h.to_string(), json!({ "handle": h }))
        }
        BandAction::Contains { spec, handle, y } => {
            let s = parse_space(spec)?;
            let inside = parse_handle(&s, handle)?.contains(&s, &vector(&s, y)?)?;
            Output::new(inside.to_string(), json!({ "contains": inside }))
        }
        BandAction::Complement { spec, handle } => {
            let s = parse_space(spec)?;
            let c = disjoint_complement(&s, &parse_handle(&s, handle)?)?;
            Output::new(c.to_string(), json!({ "handle": c }))
        }
        BandAction::Project { spec, handle, x } => {
            let s = parse_space(spec)?;
            let p = band_projection_operator(&s, &parse_handle(&s, handle)?)?;
            let z = p.apply(&vector(&s, x)?)?;
            Output::new(z.to_string(), json!({ "result": z }))
        }
        BandAction::Principal { spec, x, y } => {
            let s = parse_space(spec)?;
            let t = principal_band_contains(&s, &vector(&s, x)?, &vector(&s, y)?)?;
            let settled = match t.stabilized_at {
                Some(n) => format!("meets settle at n = {n} (bound {})", t.bound),
                None => format!("meets still increasing at n = {}", t.bound),
            };
            Output::new(format!("{}; {settled}", t.contains), to_value(&t))
        }
    })
}

fn cmd_project(action: &ProjectAction, seed: u64) -> Result<Output> {
    let mut smp = Sampler::new(seed);
    Ok(match action {
        ProjectAction::Operator { spec, handle } => {
            let s = parse_space(spec)?;
            let p = band_projection_operator(&s, &parse_handle(&s, handle)?)?;
            Output::new(p.to_string(), json!({ "matrix": p }))
        }
        ProjectAction::Apply { spec, handle, x } => {
            let s = parse_space(spec)?;
            let b = parse_handle(&s, handle)?;
            let x = vector(&s, x)?;
            let by_matrix = band_projection_operator(&s, &b)?.apply(&x)?;
            let sup = if s.is_positive(&x)? { interval_sup(&s, &b, &x)? } else { None };
            let mut text = by_matrix.to_string();
            if let Some(z) = &sup {
                text.push_str(&format!("\nsupremum of B+ within [0, x] = {z}"));
            }
            Output::new(text, json!({ "result": by_matrix, "interval_sup": sup }))
        }
        ProjectAction::Principal { spec, x, y } => {
            let s = parse_space(spec)?;
            let p = principal_projection_traced(&s, &vector(&s, x)?, &vector(&s, y)?)?;
            Output::new(format!("{}; settled at n = {} (bound {})", p.value, p.stabilized_at, p.bound), to_value(&p))
        }
        ProjectAction::Positive { spec, matrix, to } => {
            let s_in = parse_space(spec)?;
            let s_out = match to {
                Some(t) => parse_space(t)?,
                None => s_in.clone(),
            };
            let c = is_fuzzy_positive(&s_in, &s_out, &parse_matrix(matrix)?)?;
            let text = match &c.witness {
                Some((x, tx)) => format!("false; witness x = {x} maps to {tx}"),
                None => "true".into(),
            };
            Output::new(text, to_value(&c))
        }
        ProjectAction::Classify { spec, matrix } => {
            let s = parse_space(spec)?;
            let v = classify_band_projection(&s, &parse_matrix(matrix)?, &mut smp, CLI_SAMPLES)?;
            let text = match &v.mask_of {
                Some(h) => format!("band projection onto {h}"),
                None => format!(
                    "not a band projection (idempotent {}, positive {}, below identity {}, disjoint ranges {})",
                    v.idempotent, v.positive, v.below_identity, v.disjoint_ranges
                ),
            };
            Output::new(text, to_value(&v))
        }
        ProjectAction::Compare { spec, first, second } => {
            let s = parse_space(spec)?;
            let (a, b) = (parse_handle(&s, first)?, parse_handle(&s, second)?);
            let c = compare_projections(&s, &a, &b, &mut smp, CLI_SAMPLES)?;
            let text = format!("included {}, absorbs {}, precedes {}", c.included, c.absorbs, c.precedes);
            Output::new(text, to_value(&c))
        }
        ProjectAction::Bound { spec, matrix, x } => {
            let s = parse_space(spec)?;
            let b = absolute_bound_check(&s, &parse_matrix(matrix)?, &vector(&s, x)?)?;
            let text = format!("{}; |T x| = {}, T |x| = {}", b.holds, b.abs_of_image, b.image_of_abs);
            Output::new(text, to_value(&b))
        }
    })
}

fn cmd_theorems(suite: Suite, cfg: &SuiteConfig) -> Output {
    let results = run_suite(suite, cfg);
    let mut lines = Vec::new();
    let (mut checks, mut failures) = (0, 0);
    for r in &results {
        lines.push(format!("suite {}", r.suite));
        for c in &r.checks {
            checks += 1;
            failures += c.failures;
            if c.failures == 0 {
                lines.push(format!("  PASS {} ({} cases)", c.tag, c.cases));
            } else {
                lines.push(format!("  FAIL {} ({} cases, {} failures)", c.tag, c.cases, c.failures));
                if let Some(ce) = &c.counterexample {
                    lines.push(format!("       counterexample: {ce}"));
                }
            }
        }
    }
    lines.push(format!(
        "{checks} checks, {failures} failures (seed {}, cases {}, horizon {})",
        cfg.seed, cfg.cases, cfg.horizon
    ));
    let value = json!({
        "seed": cfg.seed,
        "cases": cfg.cases,
        "horizon": cfg.horizon,
        "failures": failures,
        "suites": results,
    });
    Output::new(lines.join("\n"), value).failing(failures > 0)
}

fn dispatch(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Foset { action } => cmd_foset(action),
        Command::Space { action } => cmd_space(action, cli.horizon),
        Command::Ideal { action } => cmd_ideal(action),
        Command::Band { action } => cmd_band(action),
        Command::Project { action } => cmd_project(action, cli.seed),
        Command::Theorems { suite } => {
            if cli.cases == 0 || cli.horizon == 0 {
                return Err(Error::Spec("--cases and --horizon must be positive".into()));
            }
            Ok(cmd_theorems(*suite, &SuiteConfig { seed: cli.seed, cases: cli.cases, horizon: cli.horizon }))
        }
    }
}

fn error_json(code: &str, message: &str) -> String {
    serde_json::to_string_pretty(&json!({ "error": { "code": code, "message": message } })).expect("json")
}

/// Moves global flags in front of the subcommand. Vector lists accept values
/// starting with `-`, so a trailing `--json` would otherwise be read as one.
fn hoist_globals(args: Vec<OsString>) -> Vec<OsString> {
    const SWITCHES: [&str; 1] = ["--json"];
    const VALUED: [&str; 4] = ["--seed", "--cases", "--horizon", "--mutant"];
    let mut globals = Vec::new();
    let mut rest = Vec::new();
    let mut it = args.into_iter();
    rest.extend(it.next());
    while let Some(a) = it.next() {
        let text = a.to_string_lossy();
        let name = text.split('=').next().unwrap_or_default();
        if SWITCHES.contains(&name) || (VALUED.contains(&name) && text.contains('=')) {
            globals.push(a);
        } else if VALUED.contains(&name) {
            globals.push(a);
            globals.extend(it.next());
        } else {
            rest.push(a);
        }
    }
    let at = rest.len().min(1);
    rest.splice(at..at, globals);
    rest
}

/// Runs the CLI on `args` (program name first), writing to `out` and `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = hoist_globals(args.into_iter().map(Into::into).collect());
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            if args.iter().any(|a| a == "--json") {
                let message = e.kind().to_string();
                let _ = writeln!(out, "{}", error_json("usage_error", &message));
            } else {
                let _ = write!(err, "{}", e.render());
            }
            return EXIT_INPUT;
        }
    };
    let result = match cli.mutant {
        Some(MutantArg::LiteralPositivePart) => with_mutant(Mutant::LiteralPositivePart, || dispatch(&cli)),
        None => dispatch(&cli),
    };
    match result {
        Ok(o) => {
            if cli.json {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&o.json).expect("json"));
            } else {
                let _ = writeln!(out, "{}", o.text);
            }
            if o.passed {
                EXIT_OK
            } else {
                EXIT_FAILED
            }
        }
        Err(e) => {
            if cli.json {
                let _ = writeln!(out, "{}", error_json(e.code(), &e.to_string()));
            } else {
                let _ = writeln!(err, "error: {e}");
            }
            EXIT_INPUT
        }
    }
}

/// Entry point for the binary; returns the exit code.
pub fn run() -> i32 {
    let (stdout, stderr) = (std::io::stdout(), std::io::stderr());
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
