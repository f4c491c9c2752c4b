//! Command-line front end. Every verb writes one JSON document to stdout and a
//! short human summary to stderr.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage error, 3 budget truncation.

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::braid::{orbit_enumerate, OrbitConfig, OrbitMode, OrbitReport};
use crate::degrees::{counts, deg_ll, segre_degree_for, stokes_class_count};
use crate::error::Error;
use crate::lattice::coxeter_dynkin;
use crate::llmap::{
    critical_values_numeric, discriminant, ll_exact_a, ll_fiber_count, roots_match, wall_walk_a, NumericConfig,
    NumericLLPoint, WallConfig, C64,
};
use crate::singdata::{kappa_data, load_seed_file, seed_stokes, symmetry_data, SeedRecord, SingularityClass};
use crate::verify::{
    check_kappa_extension, check_simple_symmetry, check_unfolding_identity, jacobi_dimension, CheckOutcome,
    LambdaMode,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_TRUNCATED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "stokeslab", version, about = "Distinguished bases, Stokes matrices and Lyashko–Looijenga maps")]
pub struct Cli {
    /// Only print JSON; suppress the human summary on stderr.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for orbit enumeration and independent checks.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct SeedArgs {
    /// Read the seed Stokes matrix from this JSON file instead of the shipped data.
    #[arg(long)]
    pub seed_file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct BudgetArgs {
    #[arg(long, default_value = "stokes")]
    pub mode: OrbitMode,
    #[arg(long)]
    pub budget_states: Option<u64>,
    /// Approximate memory budget in bytes.
    #[arg(long)]
    pub budget_mem: Option<u64>,
    /// Allow the long-running targets E8, Ẽ7 and Ẽ8.
    #[arg(long)]
    pub extended: bool,
    /// Write restartable snapshots to this file.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Resume from a snapshot written by --checkpoint.
    #[arg(long)]
    pub resume: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate the braid/sign orbit of the seed.
    Orbit {
        class: SingularityClass,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        seed: SeedArgs,
    },
    /// Stokes-mode orbit compared with the closed-form count.
    StokesCount {
        class: SingularityClass,
        #[command(flatten)]
        budget: BudgetArgs,
        #[command(flatten)]
        seed: SeedArgs,
    },
    /// Degree of the LL map (with the Segre route for elliptic classes).
    Degree { class: SingularityClass },
    /// Count table row: Stokes classes, bases, group orders.
    Counts { class: SingularityClass },
    /// Check the symmetry identities available for the class.
    VerifySymmetry {
        class: SingularityClass,
        /// Restrict to one symmetry (psi2, psi3, phi2, phi3).
        #[arg(long)]
        which: Option<String>,
    },
    /// Check the κ-extension of an elliptic family.
    VerifyKappa { class: SingularityClass },
    /// Dimension of the Jacobi algebra.
    JacobiDim {
        class: SingularityClass,
        /// `symbolic` or a rational value such as `3/7`.
        #[arg(long, default_value = "symbolic")]
        lambda: LambdaMode,
    },
    /// Exact LL map of A_μ at a rational parameter point.
    LlEval {
        class: SingularityClass,
        /// JSON list of rationals, e.g. `[1, "-3/4", "2/5"]`.
        #[arg(long)]
        t: String,
    },
    /// Count the fiber of the LL map of A2/A3 over a generic target.
    LlFiber {
        class: SingularityClass,
        /// JSON list of the target's roots (numbers or [re, im] pairs).
        #[arg(long, conflicts_with = "coeffs")]
        roots: Option<String>,
        /// JSON list of the coefficients s_1..s_μ (numbers or [re, im] pairs).
        #[arg(long)]
        coeffs: Option<String>,
        #[arg(long, default_value_t = 2000)]
        starts: usize,
        #[arg(long, default_value_t = 11)]
        seed: u64,
        #[arg(long, default_value_t = 1e-6)]
        tol_dedup: f64,
    },
    /// Walk a path of A_μ parameters and emit the braid word of Stokes-wall crossings.
    WallWalk {
        class: SingularityClass,
        /// JSON list of parameter vectors (entries numbers or [re, im] pairs).
        #[arg(long)]
        path: String,
        #[arg(long, default_value_t = 16)]
        steps: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol_wall: f64,
        #[arg(long, default_value_t = 1e-7)]
        tol_collision: f64,
        /// Use the opposite sign convention for emitted letters.
        #[arg(long)]
        flip_sign: bool,
    },
    /// Coxeter–Dynkin diagram of the seed (DOT, or JSON with --json).
    Diagram {
        class: SingularityClass,
        #[command(flatten)]
        seed: SeedArgs,
    },
    /// Run the verification batch and print a scorecard.
    Scorecard {
        /// Only the fast orbits (A2..A5, D4, E6) and the exact checks.
        #[arg(long)]
        quick: bool,
        /// Also run the long orbit targets.
        #[arg(long)]
        extended: bool,
    },
}

/// The result of one command: exit code, JSON document and human summary.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub json: Value,
    /// Non-JSON payload (DOT text) printed instead of the JSON when present.
    pub text: Option<String>,
    pub summary: String,
}

impl Outcome {
    fn ok(json: Value, summary: impl Into<String>) -> Self {
        Outcome { code: EXIT_OK, json, text: None, summary: summary.into() }
    }

    fn with_code(mut self, code: i32) -> Self {
        self.code = code;
        self
    }

    fn usage(msg: impl Into<String>) -> Self {
        let msg = msg.into();
        Outcome { code: EXIT_USAGE, json: json!({ "error": msg }), text: None, summary: msg }
    }
}

fn error_outcome(e: Error) -> Outcome {
    let code = match e {
        Error::Invalid(_) | Error::Parse(_) | Error::UnknownClass(_) | Error::Unsupported(..) => EXIT_USAGE,
        Error::Unseeded(..) | Error::Io(_) | Error::Json(_) => EXIT_USAGE,
        _ => EXIT_CHECK_FAILED,
    };
    let msg = e.to_string();
    Outcome { code, json: json!({ "error": msg }), text: None, summary: msg }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable output")
}

/// Orbit report without the wall-clock time, so stdout stays byte-deterministic.
fn report_value(r: &OrbitReport) -> Value {
    let mut v = to_value(r);
    if let Some(o) = v.as_object_mut() {
        o.remove("seconds");
    }
    v
}

fn load_seed(class: SingularityClass, args: &SeedArgs) -> crate::Result<SeedRecord> {
    match &args.seed_file {
        Some(p) => load_seed_file(p, Some(class)),
        None => seed_stokes(class),
    }
}

fn is_extended(class: SingularityClass) -> bool {
    matches!(class, SingularityClass::E8 | SingularityClass::Et7 | SingularityClass::Et8)
}

fn run_orbit(
    class: SingularityClass,
    mode: OrbitMode,
    budget: &BudgetArgs,
    seed: &SeedArgs,
    jobs: Option<usize>,
) -> Result<OrbitReport, Outcome> {
    if is_extended(class) && !budget.extended && budget.budget_states.is_none() && budget.budget_mem.is_none() {
        return Err(Outcome::usage(format!("{class} is a long-running target: pass --extended or a budget")));
    }
    if class.is_elliptic() && mode == OrbitMode::Bases && budget.budget_states.is_none() {
        return Err(Outcome::usage(format!("the bases-mode orbit of {class} is infinite: pass --budget-states")));
    }
    let record = load_seed(class, seed).map_err(error_outcome)?;
    let mut cfg = OrbitConfig::new(mode).label(class.to_string());
    cfg.budget_states = budget.budget_states;
    cfg.budget_mem = budget.budget_mem;
    cfg.jobs = jobs;
    cfg.checkpoint = budget.checkpoint.clone();
    cfg.resume = budget.resume.clone();
    orbit_enumerate(&record.stokes, &cfg).map_err(error_outcome)
}

fn parse_json(text: &str) -> Result<Value, Outcome> {
    serde_json::from_str(text).map_err(|e| Outcome::usage(format!("invalid JSON argument: {e}")))
}

fn complex_of(v: &Value) -> Option<C64> {
    match v {
        Value::Number(n) => Some(C64::new(n.as_f64()?, 0.0)),
        Value::Array(a) if a.len() == 2 => Some(C64::new(a[0].as_f64()?, a[1].as_f64()?)),
        Value::Object(o) => Some(C64::new(o.get("re")?.as_f64()?, o.get("im").and_then(Value::as_f64).unwrap_or(0.0))),
        _ => None,
    }
}

fn complex_list(v: &Value) -> Result<Vec<C64>, Outcome> {
    v.as_array()
        .ok_or_else(|| Outcome::usage("expected a JSON list"))?
        .iter()
        .map(|x| complex_of(x).ok_or_else(|| Outcome::usage(format!("not a complex number: {x}"))))
        .collect()
}

fn rational_list(v: &Value) -> Result<Vec<BigRational>, Outcome> {
    v.as_array()
        .ok_or_else(|| Outcome::usage("expected a JSON list of rationals"))?
        .iter()
        .map(|x| {
            let s = match x {
                Value::Number(n) if n.is_i64() => n.to_string(),
                Value::String(s) => s.clone(),
                _ => return Err(Outcome::usage(format!("not an exact rational: {x}"))),
            };
            BigRational::from_str(s.trim()).map_err(|_| Outcome::usage(format!("not a rational: {s:?}")))
        })
        .collect()
}

fn require_a(class: SingularityClass) -> Result<usize, Outcome> {
    match class {
        SingularityClass::A(mu) => Ok(mu),
        other => Err(Outcome::usage(format!("this verb needs an A_μ class, got {other}"))),
    }
}

fn checks_outcome(class: SingularityClass, checks: Vec<CheckOutcome>) -> Outcome {
    let passed = checks.iter().all(|c| c.passed);
    let summary = checks.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\n");
    Outcome::ok(json!({ "class": class.to_string(), "passed": passed, "checks": to_value(&checks) }), summary)
        .with_code(if passed { EXIT_OK } else { EXIT_CHECK_FAILED })
}

/// Execute a parsed command.
pub fn execute(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(o) | Err(o) => o,
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Outcome> {
    let jobs = cli.jobs;
    Ok(match &cli.command {
        Command::Orbit { class, budget, seed } => {
            let r = run_orbit(*class, budget.mode, budget, seed, jobs)?;
            let code = if r.truncated { EXIT_TRUNCATED } else { EXIT_OK };
            let summary = format!(
                "{class} {} orbit: {} states{} in {:.2}s",
                r.mode,
                r.count,
                if r.truncated { " (truncated)" } else { "" },
                r.seconds
            );
            Outcome::ok(report_value(&r), summary).with_code(code)
        }
        Command::StokesCount { class, budget, seed } => {
            let r = run_orbit(*class, OrbitMode::Stokes, budget, seed, jobs)?;
            let formula = stokes_class_count(*class).map_err(error_outcome)?;
            let matches = !r.truncated && BigInt::from(r.count) == formula;
            let code = if r.truncated {
                EXIT_TRUNCATED
            } else if matches {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            let summary = format!("{class}: orbit {} vs formula {formula}", r.count);
            Outcome::ok(
                json!({ "class": class.to_string(), "orbit": report_value(&r), "formula": formula.to_string(), "match": matches }),
                summary,
            )
            .with_code(code)
        }
        Command::Degree { class } => {
            let d = deg_ll(*class).map_err(error_outcome)?;
            let mut v = to_value(&d);
            if class.is_elliptic() {
                let seg = segre_degree_for(*class).map_err(error_outcome)?;
                v["segre_degree"] = Value::String(seg.to_string());
            }
            Outcome::ok(v, format!("deg LL({class}) = {} = {}", d.deg_ll, d.factorization_string()))
        }
        Command::Counts { class } => {
            let c = counts(*class).map_err(error_outcome)?;
            Outcome::ok(to_value(&c), format!("{class}: {} Stokes classes", c.stokes_class_count))
        }
        Command::VerifySymmetry { class, which } => {
            let names: Vec<String> = match which {
                Some(w) => vec![w.clone()],
                None => symmetry_data(*class).into_iter().map(|d| d.label).collect(),
            };
            if names.is_empty() {
                return Err(Outcome::usage(format!("no symmetry data for {class}")));
            }
            let checks = names
                .iter()
                .map(|w| {
                    if class.is_elliptic() {
                        check_unfolding_identity(*class, w)
                    } else {
                        check_simple_symmetry(*class, w)
                    }
                })
                .collect::<crate::Result<Vec<_>>>()
                .map_err(error_outcome)?;
            checks_outcome(*class, checks)
        }
        Command::VerifyKappa { class } => {
            if kappa_data(*class).is_none() {
                return Err(Outcome::usage(format!("verify-kappa needs an elliptic class, got {class}")));
            }
            let c = check_kappa_extension(*class).map_err(error_outcome)?;
            checks_outcome(*class, vec![c])
        }
        Command::JacobiDim { class, lambda } => {
            let dim = jacobi_dimension(*class, lambda).map_err(error_outcome)?;
            let passed = dim == class.mu();
            let mode = match lambda {
                LambdaMode::Symbolic => "symbolic".to_string(),
                LambdaMode::Value(q) => q.to_string(),
            };
            Outcome::ok(
                json!({ "class": class.to_string(), "lambda": mode, "dimension": dim, "mu": class.mu(), "passed": passed }),
                format!("dim Jac({class}) = {dim}, μ = {}", class.mu()),
            )
            .with_code(if passed { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::LlEval { class, t } => {
            let mu = require_a(*class)?;
            let t = rational_list(&parse_json(t)?)?;
            let p = ll_exact_a(mu, &t).map_err(error_outcome)?;
            let disc = discriminant(&p);
            Outcome::ok(
                json!({
                    "class": class.to_string(),
                    "coefficients": to_value(&p)["s"].clone(),
                    "discriminant": disc.to_string(),
                    "on_discriminant": num_traits::Zero::is_zero(&disc),
                }),
                format!("LL = {p}"),
            )
        }
        Command::LlFiber { class, roots, coeffs, starts, seed, tol_dedup } => {
            let mu = require_a(*class)?;
            let p = match (roots, coeffs) {
                (Some(r), _) => NumericLLPoint::from_roots(&complex_list(&parse_json(r)?)?),
                (None, Some(c)) => NumericLLPoint { s: complex_list(&parse_json(c)?)? },
                (None, None) => return Err(Outcome::usage("pass --roots or --coeffs")),
            };
            let cfg = NumericConfig { starts: *starts, seed: *seed, dedup_tol: *tol_dedup, ..NumericConfig::fiber() };
            let r = ll_fiber_count(*class, &p, &cfg).map_err(error_outcome)?;
            let expected = (mu as u64 + 1).pow(mu as u32 - 1) as usize;
            let code = if !r.saturated {
                EXIT_TRUNCATED
            } else if r.count == expected {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            let mut v = to_value(&r);
            v["expected"] = json!(expected);
            Outcome::ok(v, format!("{class}: {} preimages (saturated: {})", r.count, r.saturated)).with_code(code)
        }
        Command::WallWalk { class, path, steps, tol_wall, tol_collision, flip_sign } => {
            let mu = require_a(*class)?;
            let raw = parse_json(path)?;
            let path = raw
                .as_array()
                .ok_or_else(|| Outcome::usage("--path must be a JSON list of parameter vectors"))?
                .iter()
                .map(complex_list)
                .collect::<Result<Vec<_>, _>>()?;
            let cfg = WallConfig { wall_tol: *tol_wall, collision_tol: *tol_collision, flip_sign: *flip_sign, ..WallConfig::default() };
            let w = wall_walk_a(mu, &path, *steps, &cfg).map_err(error_outcome)?;
            Outcome::ok(json!({ "class": class.to_string(), "word": w.letters }), format!("word {w}"))
        }
        Command::Diagram { class, seed } => {
            let record = load_seed(*class, seed).map_err(error_outcome)?;
            let g = coxeter_dynkin(&record.stokes);
            let mut o = Outcome::ok(to_value(&g), format!("{class}: {} vertices, {} edges", g.vertices, g.edges.len()));
            if !cli.json {
                o.text = Some(g.to_dot());
            }
            o
        }
        Command::Scorecard { quick, extended } => {
            let rows = scorecard(*quick, *extended, jobs);
            let passed = rows.iter().all(|r| r.passed);
            let truncated = rows.iter().any(|r| r.truncated);
            let summary = rows.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
            let code = if !passed {
                EXIT_CHECK_FAILED
            } else if truncated {
                EXIT_TRUNCATED
            } else {
                EXIT_OK
            };
            Outcome::ok(json!({ "passed": passed, "rows": to_value(&rows) }), summary).with_code(code)
        }
    })
}

/// One line of the scorecard.
#[derive(Clone, Debug, Serialize)]
pub struct ScoreRow {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub passed: bool,
    /// Budget truncation (counts as passed when truncation itself was the target).
    pub truncated: bool,
    #[serde(skip)]
    pub seconds: f64,
}

impl std::fmt::Display for ScoreRow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:<36} expected {:<14} got {:<14} ({:.2}s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.expected,
            self.got,
            self.seconds
        )
    }
}

fn row(name: impl Into<String>, expected: impl ToString, got: crate::Result<String>, start: Instant) -> ScoreRow {
    let expected = expected.to_string();
    let (got, passed) = match got {
        Ok(g) => {
            let p = g == expected;
            (g, p)
        }
        Err(e) => (format!("error: {e}"), false),
    };
    ScoreRow { name: name.into(), expected, got, passed, truncated: false, seconds: start.elapsed().as_secs_f64() }
}

/// Published table values used by the scorecard: (class, bases-mode count,
/// Stokes-mode count). Bases-mode counts equal deg LL for simple classes.
pub const ORBIT_TABLE: &[(&str, u64, u64)] = &[
    ("A2", 3, 1),
    ("A3", 16, 4),
    ("A4", 125, 25),
    ("A5", 1296, 216),
    ("D4", 162, 9),
    ("E6", 41472, 3456),
    ("E7", 1_062_882, 118_098),
    ("E8", 37_968_750, 2_531_250),
];

/// Degrees of the LL map per family.
pub const DEGREE_TABLE: &[(&str, u64)] = &[
    ("A4", 125),
    ("D5", 2048),
    ("E6", 41472),
    ("E7", 1_062_882),
    ("E8", 37_968_750),
    ("Et6", 24_800_580),
    ("Et7", 688_128_000),
    ("Et8", 21_374_793_216),
];

/// Stokes-class counts of the elliptic families.
pub const ELLIPTIC_STOKES_TABLE: &[(&str, u64)] = &[("Et6", 76_545), ("Et7", 7_168_000), ("Et8", 593_744_256)];

fn orbit_row(class: SingularityClass, mode: OrbitMode, expected: u64, jobs: Option<usize>) -> ScoreRow {
    let start = Instant::now();
    let mut cfg = OrbitConfig::new(mode).label(class.to_string());
    cfg.jobs = jobs;
    let got = seed_stokes(class).and_then(|r| orbit_enumerate(&r.stokes, &cfg)).map(|r| r.count.to_string());
    row(format!("orbit {class} {mode}"), expected, got, start)
}

/// Run the verification batch. `quick` keeps to the fast orbits; `extended`
/// adds E7, E8 and Ẽ7 orbits.
pub fn scorecard(quick: bool, extended: bool, jobs: Option<usize>) -> Vec<ScoreRow> {
    let mut rows = Vec::new();
    for &(name, bases, stokes) in ORBIT_TABLE {
        let class: SingularityClass = name.parse().expect("table class");
        let long = matches!(class, SingularityClass::E7 | SingularityClass::E8);
        if long && !extended {
            continue;
        }
        rows.push(orbit_row(class, OrbitMode::Bases, bases, jobs));
        rows.push(orbit_row(class, OrbitMode::Stokes, stokes, jobs));
    }
    if !quick {
        rows.push(orbit_row(SingularityClass::Et6, OrbitMode::Stokes, 76_545, jobs));
    }
    if extended {
        rows.push(orbit_row(SingularityClass::Et7, OrbitMode::Stokes, 7_168_000, jobs));
    }
    // The Ẽ8 Stokes orbit is out of desk scale: only truncation is exercised.
    {
        let start = Instant::now();
        let cfg = OrbitConfig::new(OrbitMode::Stokes).label("Et8").budget_states(20_000);
        let got = seed_stokes(SingularityClass::Et8).and_then(|r| orbit_enumerate(&r.stokes, &cfg));
        let mut r = row("orbit Et8 stokes (budget 20000)", "truncated", got.map(|r| if r.truncated { "truncated".into() } else { r.count.to_string() }), start);
        r.truncated = false;
        rows.push(r);
    }
    for &(name, deg) in DEGREE_TABLE {
        let class: SingularityClass = name.parse().expect("table class");
        let start = Instant::now();
        rows.push(row(format!("deg LL {class}"), deg, deg_ll(class).map(|d| d.deg_ll.to_string()), start));
    }
    for class in SingularityClass::elliptic() {
        let start = Instant::now();
        let expected = deg_ll(class).map(|d| d.deg_ll.to_string()).unwrap_or_default();
        rows.push(row(format!("Segre degree {class}"), expected, segre_degree_for(class).map(|q| q.to_string()), start));
    }
    for &(name, n) in ELLIPTIC_STOKES_TABLE {
        let class: SingularityClass = name.parse().expect("table class");
        let start = Instant::now();
        rows.push(row(format!("Stokes classes {class}"), n, stokes_class_count(class).map(|c| c.to_string()), start));
    }
    for &(name, _, stokes) in ORBIT_TABLE {
        let class: SingularityClass = name.parse().expect("table class");
        let start = Instant::now();
        rows.push(row(format!("Stokes classes {class}"), stokes, stokes_class_count(class).map(|c| c.to_string()), start));
    }
    for class in SingularityClass::catalogue(8) {
        for d in symmetry_data(class) {
            let start = Instant::now();
            let got = if class.is_elliptic() {
                check_unfolding_identity(class, &d.label)
            } else {
                check_simple_symmetry(class, &d.label)
            };
            rows.push(row(format!("symmetry {class} {}", d.label), "pass", got.map(pass_word), start));
        }
    }
    for class in SingularityClass::elliptic() {
        let start = Instant::now();
        rows.push(row(format!("kappa extension {class}"), "pass", check_kappa_extension(class).map(pass_word), start));
    }
    for class in SingularityClass::catalogue(8) {
        let start = Instant::now();
        let got = jacobi_dimension(class, &LambdaMode::Symbolic).map(|d| d.to_string());
        rows.push(row(format!("Jacobi dimension {class}"), class.mu(), got, start));
    }
    if !quick {
        rows.push(ll_cross_check_row());
        for (mu, roots) in [(2usize, vec![C64::new(0.4, 0.9), C64::new(-1.1, 0.3)]), (3, vec![C64::new(0.3, 0.7), C64::new(-1.1, 0.2), C64::new(0.5, -0.9)])] {
            let start = Instant::now();
            let expected = (mu as u64 + 1).pow(mu as u32 - 1);
            let got = ll_fiber_count(SingularityClass::A(mu), &NumericLLPoint::from_roots(&roots), &NumericConfig::fiber())
                .map(|r| if r.saturated { r.count.to_string() } else { format!("{} (unsaturated)", r.count) });
            rows.push(row(format!("LL fiber A{mu}"), expected, got, start));
        }
    }
    rows
}

fn pass_word(c: CheckOutcome) -> String {
    if c.passed { "pass".into() } else { format!("fail: {}", c.notes.join("; ")) }
}

fn ll_cross_check_row() -> ScoreRow {
    let start = Instant::now();
    let t: Vec<BigRational> = [(1, 3), (-5, 4), (2, 7)].iter().map(|&(n, d)| BigRational::new(n.into(), d.into())).collect();
    let got = ll_exact_a(3, &t).and_then(|p| {
        let tc: Vec<C64> = t.iter().map(|q| C64::new(num_traits::ToPrimitive::to_f64(q).unwrap_or(0.0), 0.0)).collect();
        let d = critical_values_numeric(SingularityClass::A(3), &tc, &NumericConfig::critical())?;
        Ok(if roots_match(&d.values, &p.roots()?, 1e-10) { "match".to_string() } else { "mismatch".to_string() })
    });
    row("LL exact vs numeric A3", "match", got, start)
}

/// Parse the process arguments, run, print, and return the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let out = execute(&cli);
    // A closed pipe (e.g. `| head`) is not an error worth a panic.
    let mut stdout = std::io::stdout().lock();
    let _ = match &out.text {
        Some(t) => write!(stdout, "{t}"),
        None => writeln!(stdout, "{}", out.json),
    };
    if !cli.json && !out.summary.is_empty() {
        let _ = writeln!(std::io::stderr(), "{}", out.summary);
    }
    out.code
}
