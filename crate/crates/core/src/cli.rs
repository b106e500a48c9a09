//! Command-line front end: `verify`, `sample` and `families`.
//!
//! Exit codes: 0 pass, 1 verification failure (the report is still written),
//! 2 usage error, 3 build or runtime error.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::algebra::{j_apply, ComplexVector};
use crate::ambient::{horizontality_residual, membership_residual, AmbientSpace};
use crate::calculus::{lemma32_residuals, mean_curvature_components, FramePoint};
use crate::diff::expr::{parse_expr, Expr};
use crate::diff::fd::FdScheme;
use crate::error::{FamilyError, VerifyError};
use crate::families::{self, FamilyId, FamilyParams};
use crate::grid::GridSpec;
use crate::immersion::{Domain, Immersion};
use crate::report::{format_sig17, ParamValue, ReportBuilder, ResidualReport};
use crate::verifier::{
    self, normal_curvature_direct, record_dependency, DependencyBound, FrameFault,
    FrameField, PointAnalysis,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RUNTIME: i32 = 3;

/// Environment variable overriding the worker count.
pub const THREADS_ENV: &str = "MINFLAT_THREADS";

#[derive(Debug, Parser)]
#[command(name = "minflat", version, about = "Build and verify minimal flat Lorentzian surfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sweep a grid and check every structure residual against its tolerance.
    Verify(VerifyArgs),
    /// Write frame data on a grid as CSV.
    Sample(SurfaceArgs),
    /// List the available families and their parameters.
    Families,
}

#[derive(Debug, Clone, Args)]
pub struct SurfaceArgs {
    /// One of geodesic_plane, thm51, cor51, thm61, thm71.
    #[arg(long)]
    pub family: String,
    /// Wirtinger angle α(y) (thm51).
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Free function f(y) (thm51, cor51).
    #[arg(long, allow_hyphen_values = true)]
    pub f: Option<String>,
    /// Constant slant angle (cor51).
    #[arg(long, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    /// Nonzero scale parameter (thm61, thm71).
    #[arg(long, allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Grid as "xmin:xmax:nx,ymin:ymax:ny".
    #[arg(long, default_value = GridSpec::DEFAULT, allow_hyphen_values = true)]
    pub grid: String,
    /// Base finite-difference step.
    #[arg(long, default_value_t = 1e-3)]
    pub step: f64,
    /// Richardson levels (1 = plain central differences).
    #[arg(long, default_value_t = 2)]
    pub levels: usize,
    /// Absolute tolerance of the thm51 integrals.
    #[arg(long, default_value_t = families::DEFAULT_QUAD_TOL)]
    pub quad_tol: f64,
    /// Output file; standard output when omitted.
    #[arg(long, short)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub surface: SurfaceArgs,
    /// Tolerance override NAME=VALUE (repeatable).
    #[arg(long = "tol", value_name = "NAME=VALUE")]
    pub tolerances: Vec<String>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Runtime(_) => EXIT_RUNTIME,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Runtime(m) => m,
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        match e {
            FamilyError::Parameter(_) | FamilyError::Parse(_) => CliError::Usage(e.to_string()),
            FamilyError::Eval(_) | FamilyError::Quadrature(_) => CliError::Runtime(e.to_string()),
        }
    }
}

/// A validated request.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub params: FamilyParams,
    /// Parameter values as given, for the report.
    pub bindings: BTreeMap<String, ParamValue>,
    pub grid: GridSpec,
    pub tolerances: BTreeMap<String, f64>,
    pub output: Option<PathBuf>,
}

fn parse_expression(name: &str, source: &str) -> Result<Expr, CliError> {
    parse_expr(source).map_err(|e| {
        CliError::Usage(format!(
            "cannot parse --{name} \"{source}\" at byte {}: {e}",
            e.offset()
        ))
    })
}

impl RunConfig {
    pub fn from_surface_args(args: &SurfaceArgs) -> Result<Self, CliError> {
        let id = FamilyId::from_name(&args.family).ok_or_else(|| {
            let known: Vec<&str> = FamilyId::ALL.iter().map(|f| f.name()).collect();
            CliError::Usage(format!("unknown family `{}` (known: {})", args.family, known.join(", ")))
        })?;
        let scheme = FdScheme::new(args.step, args.levels).map_err(|e| CliError::Usage(e.to_string()))?;
        let grid = GridSpec::parse(&args.grid, scheme).map_err(|e| CliError::Usage(e.to_string()))?;
        if !(args.quad_tol.is_finite() && args.quad_tol > 0.0) {
            return Err(CliError::Usage(format!("--quad-tol must be positive, got {}", args.quad_tol)));
        }

        let mut params = FamilyParams::new(id);
        params.quad_tol = args.quad_tol;
        params.domain = Domain::new((grid.x.min, grid.x.max), (grid.y.min, grid.y.max));
        let mut bindings = BTreeMap::new();
        let required = id.required_params();
        let check_param = |name: &str, given: bool| -> Result<(), CliError> {
            if given && !required.contains(&name) {
                return Err(CliError::Usage(format!("family {id} does not take --{name}")));
            }
            if !given && required.contains(&name) {
                return Err(CliError::Usage(format!("family {id} requires --{name}")));
            }
            Ok(())
        };
        check_param("alpha", args.alpha.is_some())?;
        check_param("f", args.f.is_some())?;
        check_param("theta", args.theta.is_some())?;
        check_param("a", args.a.is_some())?;
        if let Some(s) = &args.alpha {
            params.alpha_expr = Some(parse_expression("alpha", s)?);
            bindings.insert("alpha".into(), ParamValue::Text(s.clone()));
        }
        if let Some(s) = &args.f {
            params.f_expr = Some(parse_expression("f", s)?);
            bindings.insert("f".into(), ParamValue::Text(s.clone()));
        }
        if let Some(t) = args.theta {
            if !t.is_finite() {
                return Err(CliError::Usage(format!("theta must be finite, got {t}")));
            }
            params.theta = Some(t);
            bindings.insert("theta".into(), ParamValue::Number(t));
        }
        if let Some(a) = args.a {
            if a == 0.0 {
                return Err(CliError::Usage("a must be nonzero".into()));
            }
            if !a.is_finite() {
                return Err(CliError::Usage(format!("a must be finite, got {a}")));
            }
            params.a = Some(a);
            bindings.insert("a".into(), ParamValue::Number(a));
        }
        if id == FamilyId::Thm51 {
            bindings.insert("quad_tol".into(), ParamValue::Number(args.quad_tol));
        }
        Ok(Self {
            tolerances: default_tolerances(id),
            params,
            bindings,
            grid,
            output: args.out.clone(),
        })
    }

    pub fn from_verify_args(args: &VerifyArgs) -> Result<Self, CliError> {
        let mut cfg = Self::from_surface_args(&args.surface)?;
        for item in &args.tolerances {
            let (name, value) = item
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("--tol expects NAME=VALUE, got `{item}`")))?;
            if !cfg.tolerances.contains_key(name) {
                return Err(CliError::Usage(format!("unknown tolerance `{name}` for family {}", cfg.params.id)));
            }
            let v: f64 = value
                .parse()
                .map_err(|_| CliError::Usage(format!("tolerance `{value}` is not a number")))?;
            if !(v.is_finite() && v > 0.0) {
                return Err(CliError::Usage(format!("tolerance {name} must be positive, got {value}")));
            }
            cfg.tolerances.insert(name.to_string(), v);
        }
        Ok(cfg)
    }

    pub fn family(&self) -> FamilyId {
        self.params.id
    }

    pub fn build(&self) -> Result<Immersion, CliError> {
        Ok(families::build(&self.params)?)
    }
}

pub mod entry {
    pub const METRIC_E1E1: &str = "metric_e1e1";
    pub const METRIC_E2E2: &str = "metric_e2e2";
    pub const METRIC_E1E2: &str = "metric_e1e2";
    pub const NORMAL_FRAME: &str = "normal_frame";
    pub const COMPLEX_STRUCTURE: &str = "complex_structure";
    pub const MEAN_CURVATURE: &str = "mean_curvature";
    pub const WIRTINGER_ANGLE: &str = "wirtinger_angle";
    pub const CHART_CONNECTION: &str = "chart_connection";
    pub const FRAME_IDENTITIES: &str = "frame_identities";
    pub const ALPHA_COEFFICIENTS: &str = "alpha_coefficients";
    pub const NORMAL_CONNECTION: &str = "normal_connection";
    pub const RICCI_TWO_PATH: &str = "ricci_two_path";
    pub const C21_RELATION: &str = "c21_relation";
    pub const MEMBERSHIP: &str = "membership";
    pub const HORIZONTALITY: &str = "horizontality";
    pub const LIFT_ODE_XX: &str = "lift_ode_xx";
    pub const LIFT_ODE_XY: &str = "lift_ode_xy";
    pub const LIFT_ODE_YY: &str = "lift_ode_yy";
    pub const GAMMA_LAMBDA: &str = "gamma_lambda";
    pub const SCALING_GAMMA: &str = "scaling_gamma";
    pub const SCALING_LAMBDA: &str = "scaling_lambda";
}

/// Default tolerance of every entry a `verify` run of `id` produces.
pub fn default_tolerances(id: FamilyId) -> BTreeMap<String, f64> {
    use entry::*;
    let lift = matches!(id, FamilyId::Thm61 | FamilyId::Thm71);
    let mut t: Vec<(&str, f64)> = vec![
        (METRIC_E1E1, 1e-8),
        (METRIC_E2E2, 1e-8),
        (METRIC_E1E2, 1e-8),
        (NORMAL_FRAME, 1e-7),
        (COMPLEX_STRUCTURE, 1e-7),
        (MEAN_CURVATURE, 1e-7),
        (WIRTINGER_ANGLE, if id == FamilyId::Thm51 { 1e-7 } else { 1e-8 }),
        (CHART_CONNECTION, 1e-7),
        (FRAME_IDENTITIES, 1e-6),
        (ALPHA_COEFFICIENTS, 1e-6),
        (NORMAL_CONNECTION, 1e-6),
        (verifier::GAUSS, if lift { 1e-5 } else { 1e-6 }),
        (verifier::CODAZZI_BETA, 1e-5),
        (verifier::CODAZZI_GAMMA, 1e-5),
        (verifier::CODAZZI_LAMBDA, 1e-5),
        (verifier::CODAZZI_MU, 1e-5),
        (verifier::PDE, 1e-6),
        (verifier::RICCI, 1e-5),
        (RICCI_TWO_PATH, 1e-5),
        (verifier::RICCI_DEPENDENCY, 1.0),
    ];
    if lift {
        t.extend([
            (MEMBERSHIP, 1e-12),
            (HORIZONTALITY, 1e-8),
            (LIFT_ODE_XX, 1e-6),
            (LIFT_ODE_XY, 1e-6),
            (LIFT_ODE_YY, 1e-6),
            (GAMMA_LAMBDA, 1e-5),
            (SCALING_GAMMA, 1e-4),
            (SCALING_LAMBDA, 1e-4),
        ]);
    } else {
        t.push((C21_RELATION, 1e-7));
    }
    t.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

/// Residuals at one grid node, as `(entry name, value)` pairs.
type PointRecord = Result<Vec<(&'static str, f64)>, String>;

fn expected_alpha(cfg: &RunConfig, y: f64) -> Result<f64, String> {
    match cfg.params.id {
        FamilyId::Thm51 => cfg
            .params
            .alpha_expr
            .as_ref()
            .expect("validated")
            .eval(y)
            .map_err(|e| e.to_string()),
        FamilyId::Cor51 => Ok(cfg.params.theta.expect("validated")),
        _ => Ok(0.0),
    }
}

fn frame_checks(ambient: &AmbientSpace, f: &FramePoint, out: &mut Vec<(&'static str, f64)>) {
    use entry::*;
    let p = f.frame_products(ambient);
    out.push((METRIC_E1E1, p[0]));
    out.push((METRIC_E2E2, p[1]));
    out.push((METRIC_E1E2, p[2]));
    out.push((NORMAL_FRAME, p[3].abs().max(p[4].abs()).max(p[5].abs()).max(p[6])));

    // J e3 = -cosh α e1 - sinh α e3, J e4 = -cosh α e2 + sinh α e4
    let (sh, ch) = (f.alpha.sinh(), f.alpha.cosh());
    let r3 = add_terms(&j_apply(&f.e3), &[(ch, &f.e1), (sh, &f.e3)]);
    let r4 = add_terms(&j_apply(&f.e4), &[(ch, &f.e2), (-sh, &f.e4)]);
    let mut js = 0.0_f64;
    for r in [&r3, &r4] {
        for e in [&f.e1, &f.e2, &f.e3, &f.e4] {
            js = js.max(ambient.g(r, e).abs());
        }
    }
    out.push((COMPLEX_STRUCTURE, js));

    let h = mean_curvature_components(f);
    out.push((MEAN_CURVATURE, h[0].abs().max(h[1].abs())));
    out.push((
        CHART_CONNECTION,
        f.omega
            .iter()
            .chain(f.omega_off.iter())
            .fold(0.0_f64, |m, v| m.max(v.abs())),
    ));
    out.push((FRAME_IDENTITIES, lemma32_residuals(f, f.alpha_x, f.alpha_y).max()));
    out.push((
        ALPHA_COEFFICIENTS,
        (f.beta + f.alpha_x).abs().max((f.mu - f.alpha_y).abs()),
    ));
    let th = f.alpha.tanh();
    out.push((
        NORMAL_CONNECTION,
        (f.phi[0] - f.alpha_x * th).abs().max((f.phi[1] + f.alpha_y * th).abs()),
    ));
}

/// `v + Σ c_k w_k`.
fn add_terms(v: &ComplexVector, terms: &[(f64, &ComplexVector)]) -> ComplexVector {
    terms.iter().fold(v.clone(), |acc, (c, w)| acc.axpy(*c, w))
}

fn analyze_point(cfg: &RunConfig, field: &FrameField, at: (f64, f64)) -> PointRecord {
    use entry::*;
    let ambient = field.immersion().ambient();
    let a = PointAnalysis::compute_unchecked(field, at).map_err(|e| e.to_string())?;
    let f = &a.frame;
    let mut out = Vec::with_capacity(32);
    frame_checks(ambient, f, &mut out);
    let want = expected_alpha(cfg, at.1)?;
    let wirtinger = if ambient.kind().is_lift() {
        f.alpha.sinh().abs()
    } else {
        (f.alpha - want).abs()
    };
    out.push((WIRTINGER_ANGLE, wirtinger));

    out.push((verifier::GAUSS, a.gauss()));
    let cz = a.codazzi();
    out.push((verifier::CODAZZI_BETA, cz.beta));
    out.push((verifier::CODAZZI_GAMMA, cz.gamma));
    out.push((verifier::CODAZZI_LAMBDA, cz.lambda));
    out.push((verifier::CODAZZI_MU, cz.mu));
    out.push((verifier::PDE, a.pde()));
    out.push((verifier::RICCI, a.ricci()));
    let direct = normal_curvature_direct(field, at).map_err(|e| e.to_string())?;
    out.push((RICCI_TWO_PATH, (a.normal_curvature() - direct).abs()));

    if ambient.kind().is_lift() {
        let c = ambient.c();
        let scale = cfg.params.a.expect("validated");
        let j = &a.jet;
        let m = membership_residual(ambient, &j.value).map_err(|e| e.to_string())?;
        out.push((MEMBERSHIP, m));
        let hx = horizontality_residual(ambient, &j.value, &j.x).map_err(|e| e.to_string())?;
        let hy = horizontality_residual(ambient, &j.value, &j.y).map_err(|e| e.to_string())?;
        out.push((HORIZONTALITY, hx.abs().max(hy.abs())));
        let [rxx, rxy, ryy] = families::lift_ode_residuals(j, scale, c);
        out.push((LIFT_ODE_XX, rxx.max_abs_component()));
        out.push((LIFT_ODE_XY, rxy.max_abs_component()));
        out.push((LIFT_ODE_YY, ryy.max_abs_component()));
        out.push((GAMMA_LAMBDA, f.gamma * f.lambda + c));
        let (g, l) = families::lift_expected_gamma_lambda(scale, c);
        out.push((SCALING_GAMMA, f.gamma - g));
        out.push((SCALING_LAMBDA, f.lambda - l));
    } else {
        out.push((C21_RELATION, a.c21_relation()));
    }
    Ok(out)
}

/// Runs every check of `cfg` on `imm`, optionally with a fault injected into
/// every second-order frame.
pub fn verify_immersion(cfg: &RunConfig, imm: &Immersion, fault: Option<FrameFault>) -> ResidualReport {
    let mut field = FrameField::new(imm.clone(), cfg.grid.scheme);
    if let Some(f) = fault {
        field = field.with_fault(f);
    }
    let records = verifier::map_grid(&cfg.grid, |at| (at, analyze_point(cfg, &field, at)));

    let mut b = ReportBuilder::new();
    for (name, tol) in &cfg.tolerances {
        b.tolerance(name, *tol);
    }
    let mut notes = Vec::new();
    let mut applicable = true;
    for (at, rec) in &records {
        match rec {
            Ok(values) => {
                for (name, v) in values {
                    b.record(name, *v, *at);
                }
            }
            Err(msg) => {
                applicable = false;
                notes.push(format!("({}, {}): {msg}", at.0, at.1));
            }
        }
    }
    if applicable {
        record_dependency(&mut b, DependencyBound::default());
    }
    b.finish(
        cfg.params.id.name(),
        cfg.bindings.clone(),
        cfg.grid,
        applicable,
        notes,
    )
}

pub fn run_verify(cfg: &RunConfig) -> Result<ResidualReport, CliError> {
    let imm = cfg.build()?;
    Ok(verify_immersion(cfg, &imm, None))
}

/// CSV header for an ambient of complex dimension `dim`.
pub fn sample_header(dim: usize) -> String {
    let mut cols = vec!["x".to_string(), "y".to_string()];
    for k in 1..=dim {
        cols.push(format!("z{k}_re"));
        cols.push(format!("z{k}_im"));
    }
    for c in ["alpha", "h3_11", "h3_12", "h3_22", "h4_11", "h4_12", "h4_22", "H_norm_indicator"] {
        cols.push(c.to_string());
    }
    cols.join(",")
}

/// Frame data at every grid node, one CSV row per node in grid order.
/// `H_norm_indicator` is the largest absolute component of the mean
/// curvature vector in the normal frame.
pub fn run_sample(cfg: &RunConfig) -> Result<String, CliError> {
    let imm = cfg.build()?;
    let field = FrameField::new(imm.clone(), cfg.grid.scheme);
    let rows = verifier::map_grid(&cfg.grid, |at| -> Result<String, String> {
        let f = field.frame(at).map_err(|e| e.to_string())?;
        let v = imm.eval(at.0, at.1).map_err(|e| e.to_string())?;
        let h = mean_curvature_components(&f);
        let mut vals = vec![at.0, at.1];
        for z in v.iter() {
            vals.push(z.re);
            vals.push(z.im);
        }
        vals.extend([
            f.alpha,
            f.h3[0][0],
            f.h3[0][1],
            f.h3[1][1],
            f.h4[0][0],
            f.h4[0][1],
            f.h4[1][1],
            h[0].abs().max(h[1].abs()),
        ]);
        Ok(vals.iter().map(|v| format_sig17(*v)).collect::<Vec<_>>().join(","))
    });
    let mut out = sample_header(imm.ambient().dim());
    out.push('\n');
    for r in rows {
        out.push_str(&r.map_err(CliError::Runtime)?);
        out.push('\n');
    }
    Ok(out)
}

pub fn run_families() -> String {
    let mut out = String::new();
    for id in FamilyId::ALL {
        let params = id.required_params();
        let params = if params.is_empty() {
            "(none)".to_string()
        } else {
            params.join(", ")
        };
        writeln!(out, "{:<15} {:<38} params: {:<10} {}", id.name(), id.theorem(), params, id.description())
            .expect("writing to a String");
    }
    out
}

fn write_output(path: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", p.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Runtime(format!("cannot write output: {e}"))),
    }
}

/// Configures the global worker pool from [`THREADS_ENV`].
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(v) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got `{v}`")))?;
    // A pool may already exist when called more than once in-process.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn summary(report: &ResidualReport) -> String {
    let mut s = String::new();
    let status = if report.pass { "PASS" } else { "FAIL" };
    writeln!(s, "{status} {} on {} ({} nodes)", report.family, report.grid, report.grid.len())
        .expect("writing to a String");
    for name in report.failures() {
        let e = report.entry(name).expect("failure names an entry");
        let tol = report.tolerances.get(name).copied().unwrap_or(f64::NAN);
        writeln!(
            s,
            "  {name}: max {:e} > {:e} at ({}, {})",
            e.max, tol, e.worst_point.0, e.worst_point.1
        )
        .expect("writing to a String");
    }
    for n in &report.notes {
        writeln!(s, "  note: {n}").expect("writing to a String");
    }
    s
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code. Reports go to `--out` or `stdout`; diagnostics to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match dispatch(cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message());
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    configure_threads()?;
    match cli.command {
        Command::Families => {
            write_output(&None, &run_families(), stdout)?;
            Ok(EXIT_PASS)
        }
        Command::Sample(args) => {
            let cfg = RunConfig::from_surface_args(&args)?;
            let csv = run_sample(&cfg)?;
            write_output(&cfg.output, &csv, stdout)?;
            Ok(EXIT_PASS)
        }
        Command::Verify(args) => {
            let cfg = RunConfig::from_verify_args(&args)?;
            let report = run_verify(&cfg)?;
            write_output(&cfg.output, &report.to_json(), stdout)?;
            let _ = stderr.write_all(summary(&report).as_bytes());
            Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::InvalidGrid(_) => CliError::Usage(e.to_string()),
            _ => CliError::Runtime(e.to_string()),
        }
    }
}
