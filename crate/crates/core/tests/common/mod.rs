#![allow(dead_code)]

use minflat::cli::{RunConfig, SurfaceArgs};
use minflat::diff::expr::{BinOp, Expr, Func};
use minflat::report::ResidualReport;
use minflat::ComplexVector;
use num_complex::Complex64;
use rand::Rng;

pub fn surface_args(family: &str) -> SurfaceArgs {
    SurfaceArgs {
        family: family.to_string(),
        alpha: None,
        f: None,
        theta: None,
        a: None,
        grid: minflat::GridSpec::DEFAULT.to_string(),
        step: 1e-3,
        levels: 2,
        quad_tol: minflat::families::DEFAULT_QUAD_TOL,
        out: None,
    }
}

pub fn thm51_args(alpha: &str, f: &str) -> SurfaceArgs {
    SurfaceArgs {
        alpha: Some(alpha.into()),
        f: Some(f.into()),
        ..surface_args("thm51")
    }
}

pub fn cor51_args(theta: f64, f: &str) -> SurfaceArgs {
    SurfaceArgs {
        theta: Some(theta),
        f: Some(f.into()),
        ..surface_args("cor51")
    }
}

pub fn lift_args(family: &str, a: f64) -> SurfaceArgs {
    SurfaceArgs {
        a: Some(a),
        ..surface_args(family)
    }
}

pub fn config(args: &SurfaceArgs) -> RunConfig {
    RunConfig::from_surface_args(args).expect("valid configuration")
}

pub fn verify(args: &SurfaceArgs) -> ResidualReport {
    minflat::cli::run_verify(&config(args)).expect("family builds")
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize) -> ComplexVector {
    ComplexVector::new(
        (0..n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect(),
    )
}

/// A random expression tree in `y` of depth at most `depth`, drawn from
/// operations that are smooth away from isolated points.
pub fn random_expr<R: Rng>(rng: &mut R, depth: u32) -> Expr {
    if depth == 0 || rng.gen_bool(0.25) {
        return if rng.gen_bool(0.6) {
            Expr::Var
        } else {
            Expr::constant((rng.gen_range(-2.0..2.0) * 1000.0_f64).round() / 1000.0)
        };
    }
    let sub = |rng: &mut R| random_expr(rng, depth - 1);
    match rng.gen_range(0..9) {
        0 => Expr::negate(sub(rng)),
        1 => Expr::binary(BinOp::Add, sub(rng), sub(rng)),
        2 => Expr::binary(BinOp::Sub, sub(rng), sub(rng)),
        3 | 4 => Expr::binary(BinOp::Mul, sub(rng), sub(rng)),
        5 => Expr::binary(BinOp::Div, sub(rng), sub(rng)),
        6 => Expr::binary(BinOp::Pow, sub(rng), Expr::constant(rng.gen_range(2..4) as f64)),
        _ => {
            let f = Func::ALL[rng.gen_range(0..Func::ALL.len())];
            Expr::call(f, sub(rng))
        }
    }
}

/// Central difference with two Richardson levels.
pub fn central_derivative(e: &Expr, y: f64, h: f64) -> Option<f64> {
    let d = |h: f64| -> Option<f64> { Some((e.eval(y + h).ok()? - e.eval(y - h).ok()?) / (2.0 * h)) };
    let (coarse, fine) = (d(h)?, d(h / 2.0)?);
    Some((4.0 * fine - coarse) / 3.0)
}

/// `|dual - fd| / max(1, |dual|)` for `e` at `y`, or `None` where `e` is not
/// smooth and moderate on `[y - 1e-2, y + 1e-2]`.
pub fn dual_vs_central(e: &Expr, y: f64) -> Option<f64> {
    let (v, d) = e.eval_dual(y).ok()?;
    if !(v.abs() < 1e3 && d.abs() < 1e3) {
        return None;
    }
    // reject points near singularities: the derivative must be stable nearby
    for k in [-1.0, 1.0] {
        let (v2, d2) = e.eval_dual(y + k * 1e-2).ok()?;
        if !(v2.abs() < 1e3 && (d2 - d).abs() < 1e2 * (1.0 + d.abs())) {
            return None;
        }
    }
    let fd = central_derivative(e, y, 1e-3)?;
    Some((fd - d).abs() / d.abs().max(1.0))
}
