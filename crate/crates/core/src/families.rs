//! Closed-form and quadrature-based constructions of the classified minimal
//! flat Lorentzian surfaces.
//!
//! * `geodesic_plane`: `(x + y/2, x - y/2)` in `C²₁`.
//! * `thm51`: for free data `α(y)`, `f(y)`,
//!   `ψ = (x + i f + K - G, x - y + i f + K - G - i S)` with
//!   `K = ½∫₀^y cosh²α`, `G = ∫₀^y f' sinh α`, `S = ∫₀^y sinh α`.
//! * `cor51`: the constant-angle case `α ≡ θ`, in closed form.
//! * `thm61`, `thm71`: horizontal lifts `L̃` into the quadrics
//!   `b(z, z) = 1` (in `C³₂`, `c = 1`) and `b(z, z) = -1` (`c = -1`).

use std::f64::consts::SQRT_2;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::algebra::ComplexVector;
use crate::ambient::AmbientSpace;
use crate::diff::expr::Expr;
use crate::diff::fd::Jet;
use crate::error::{EvalError, FamilyError, ImmersionError};
use crate::immersion::{Domain, Immersion};
use crate::quadrature::CumulativeIntegral;

/// Default absolute tolerance of the cumulative integrals.
pub const DEFAULT_QUAD_TOL: f64 = 1e-10;

/// Extra margin around the requested `y` range covered by precomputed anchors,
/// so that finite-difference stencils near the boundary stay on cached data.
const Y_PADDING: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    GeodesicPlane,
    Thm51,
    Cor51,
    Thm61,
    Thm71,
}

impl FamilyId {
    pub const ALL: [FamilyId; 5] = [
        FamilyId::GeodesicPlane,
        FamilyId::Thm51,
        FamilyId::Cor51,
        FamilyId::Thm61,
        FamilyId::Thm71,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::GeodesicPlane => "geodesic_plane",
            FamilyId::Thm51 => "thm51",
            FamilyId::Cor51 => "cor51",
            FamilyId::Thm61 => "thm61",
            FamilyId::Thm71 => "thm71",
        }
    }

    pub fn from_name(name: &str) -> Option<FamilyId> {
        Self::ALL.into_iter().find(|f| f.name() == name)
    }

    /// Names of the parameters the family requires.
    pub fn required_params(self) -> &'static [&'static str] {
        match self {
            FamilyId::GeodesicPlane => &[],
            FamilyId::Thm51 => &["alpha", "f"],
            FamilyId::Cor51 => &["theta", "f"],
            FamilyId::Thm61 | FamilyId::Thm71 => &["a"],
        }
    }

    pub fn theorem(self) -> &'static str {
        match self {
            FamilyId::GeodesicPlane => "Theorem 5.1 (totally geodesic case)",
            FamilyId::Thm51 => "Theorem 5.1",
            FamilyId::Cor51 => "Corollary 5.1",
            FamilyId::Thm61 => "Theorem 6.1",
            FamilyId::Thm71 => "Theorem 7.1",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            FamilyId::GeodesicPlane => "totally geodesic Lorentzian plane in C^2_1",
            FamilyId::Thm51 => "minimal flat Lorentzian surface in C^2_1 with Wirtinger angle alpha(y)",
            FamilyId::Cor51 => "minimal flat theta-slant surface in C^2_1",
            FamilyId::Thm61 => "minimal flat Lagrangian surface in CP^2_1(4), horizontal lift",
            FamilyId::Thm71 => "minimal flat Lagrangian surface in CH^2_1(-4), horizontal lift",
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Free data of a family. Fields not used by `id` are ignored.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyParams {
    pub id: FamilyId,
    pub alpha_expr: Option<Expr>,
    pub f_expr: Option<Expr>,
    pub theta: Option<f64>,
    pub a: Option<f64>,
    pub quad_tol: f64,
    pub domain: Domain,
}

impl FamilyParams {
    pub fn new(id: FamilyId) -> Self {
        Self {
            id,
            alpha_expr: None,
            f_expr: None,
            theta: None,
            a: None,
            quad_tol: DEFAULT_QUAD_TOL,
            domain: Domain::default(),
        }
    }
}

fn missing(id: FamilyId, name: &str) -> FamilyError {
    FamilyError::Parameter(format!("family {id} requires parameter `{name}`"))
}

/// Builds the immersion described by `params`.
pub fn build(params: &FamilyParams) -> Result<Immersion, FamilyError> {
    let id = params.id;
    match id {
        FamilyId::GeodesicPlane => Ok(build_geodesic_plane()),
        FamilyId::Thm51 => build_thm51_with_tol(
            params.alpha_expr.as_ref().ok_or_else(|| missing(id, "alpha"))?,
            params.f_expr.as_ref().ok_or_else(|| missing(id, "f"))?,
            params.domain,
            params.quad_tol,
        ),
        FamilyId::Cor51 => build_cor51(
            params.theta.ok_or_else(|| missing(id, "theta"))?,
            params.f_expr.as_ref().ok_or_else(|| missing(id, "f"))?,
            params.domain,
        ),
        FamilyId::Thm61 => build_thm61(params.a.ok_or_else(|| missing(id, "a"))?),
        FamilyId::Thm71 => build_thm71(params.a.ok_or_else(|| missing(id, "a"))?),
    }
}

pub fn build_geodesic_plane() -> Immersion {
    Immersion::from_fn(AmbientSpace::flat_c21(), FamilyId::GeodesicPlane.name(), |x, y| {
        ComplexVector::from_reals(&[x + 0.5 * y, x - 0.5 * y])
    })
}

fn immersion_error(x: f64, y: f64, reason: impl fmt::Display) -> ImmersionError {
    ImmersionError::Evaluation {
        x,
        y,
        reason: reason.to_string(),
    }
}

/// Evaluates `e` on a uniform sample of `[lo, hi]` so domain errors surface
/// at build time rather than mid-sweep.
fn probe(e: &Expr, lo: f64, hi: f64) -> Result<(), EvalError> {
    const SAMPLES: usize = 129;
    for k in 0..SAMPLES {
        let y = lo + (hi - lo) * k as f64 / (SAMPLES - 1) as f64;
        e.eval_dual(y)?;
    }
    Ok(())
}

pub fn build_thm51(alpha: &Expr, f: &Expr, domain: Domain) -> Result<Immersion, FamilyError> {
    build_thm51_with_tol(alpha, f, domain, DEFAULT_QUAD_TOL)
}

pub fn build_thm51_with_tol(
    alpha: &Expr,
    f: &Expr,
    domain: Domain,
    tol: f64,
) -> Result<Immersion, FamilyError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(FamilyError::Parameter(format!("quadrature tolerance must be positive, got {tol}")));
    }
    let (lo, hi) = (domain.y.0 - Y_PADDING, domain.y.1 + Y_PADDING);
    probe(alpha, lo, hi)?;
    probe(f, lo, hi)?;
    let a = Arc::new(alpha.clone());
    let fe = Arc::new(f.clone());
    let integrand = {
        let (a, fe) = (Arc::clone(&a), Arc::clone(&fe));
        move |t: f64| -> Result<[f64; 3], EvalError> {
            let al = a.eval(t)?;
            let (_, df) = fe.eval_dual(t)?;
            let (sh, ch) = (al.sinh(), al.cosh());
            Ok([0.5 * ch * ch, df * sh, sh])
        }
    };
    let cum = Arc::new(CumulativeIntegral::new(integrand, lo, hi, tol)?);
    let label = format!("thm51(alpha={alpha}, f={f})");
    Ok(Immersion::new(AmbientSpace::flat_c21(), label, move |x: f64, y: f64| {
        let fy = fe.eval(y).map_err(|e| immersion_error(x, y, e))?;
        let [k, g, s] = cum.eval(y).map_err(|e| immersion_error(x, y, e))?;
        let re = k - g;
        Ok(ComplexVector::new(vec![
            Complex64::new(x + re, fy),
            Complex64::new(x - y + re, fy - s),
        ]))
    }))
}

pub fn build_cor51(theta: f64, f: &Expr, domain: Domain) -> Result<Immersion, FamilyError> {
    if !theta.is_finite() {
        return Err(FamilyError::Parameter(format!("theta must be finite, got {theta}")));
    }
    probe(f, domain.y.0, domain.y.1)?;
    let fe = f.clone();
    let (sh, ch) = (theta.sinh(), theta.cosh());
    let label = format!("cor51(theta={theta}, f={f})");
    Ok(Immersion::new(AmbientSpace::flat_c21(), label, move |x: f64, y: f64| {
        let fy = fe.eval(y).map_err(|e| immersion_error(x, y, e))?;
        let k = 0.5 * y * ch * ch;
        let w = Complex64::new(-sh, 1.0) * fy;
        Ok(ComplexVector::new(vec![
            Complex64::new(x + k, 0.0) + w,
            Complex64::new(x - y + k, -y * sh) + w,
        ]))
    }))
}

fn check_a(a: f64) -> Result<(), FamilyError> {
    if a == 0.0 {
        return Err(FamilyError::Parameter("a must be nonzero".into()));
    }
    if !a.is_finite() {
        return Err(FamilyError::Parameter(format!("a must be finite, got {a}")));
    }
    Ok(())
}

/// Horizontal lift into `S⁵₂(1) ⊂ C³₂`. The timelike coordinate is the third
/// component, which makes `b(L̃, L̃) = 1` for the printed component order.
pub fn build_thm61(a: f64) -> Result<Immersion, FamilyError> {
    check_a(a)?;
    let ambient = AmbientSpace::cp21_lift(1.0, 2).expect("valid lift ambient");
    let s3 = 3f64.sqrt();
    let norm = 1.0 / s3;
    let label = format!("thm61(a={a})");
    Ok(Immersion::from_fn(ambient, label, move |x, y| {
        let u = s3 / (2.0 * a) * (x + a * a * y);
        let phase = Complex64::from_polar(1.0, (x - a * a * y) / (2.0 * a));
        let second = Complex64::from_polar(1.0, (a * a * y - x) / a);
        ComplexVector::new(vec![
            phase * (SQRT_2 * u.cosh() * norm),
            second * norm,
            phase * (SQRT_2 * u.sinh() * norm),
        ])
    }))
}

/// Horizontal lift into `H⁵₂(-1) ⊂ C³₂` with the first two slots timelike.
pub fn build_thm71(a: f64) -> Result<Immersion, FamilyError> {
    check_a(a)?;
    let ambient = AmbientSpace::ch21_lift(-1.0).expect("valid lift ambient");
    let s3 = 3f64.sqrt();
    let norm = 1.0 / s3;
    let label = format!("thm71(a={a})");
    Ok(Immersion::from_fn(ambient, label, move |x, y| {
        let u = s3 / (2.0 * a) * (x - a * a * y);
        let phase = Complex64::from_polar(1.0, -(x + a * a * y) / (2.0 * a));
        let second = Complex64::from_polar(1.0, a * y + x / a);
        ComplexVector::new(vec![
            phase * (SQRT_2 * u.cosh() * norm),
            second * norm,
            phase * (SQRT_2 * u.sinh() * norm),
        ])
    }))
}

/// Residual vectors of the second-order system satisfied by the lifts,
/// `L̃_xx = (i/a³) L̃_y`, `L̃_xy = c L̃`, `L̃_yy = -c i a³ L̃_x`,
/// where `c = 1` for the projective and `c = -1` for the hyperbolic case.
pub fn lift_ode_residuals(jet: &Jet, a: f64, c: f64) -> [ComplexVector; 3] {
    let i = Complex64::i();
    let a3 = a * a * a;
    let xx = &jet.xx - &jet.y.scale_complex(i / a3);
    let xy = &jet.xy - &(&jet.value * c);
    let yy = &jet.yy + &jet.x.scale_complex(i * (c * a3));
    [xx, xy, yy]
}

/// Expected `(γ, λ)` of the lift families: `h(e1,e1) = J e2 / a³` and
/// `h(e2,e2) = -c a³ J e1`.
pub fn lift_expected_gamma_lambda(a: f64, c: f64) -> (f64, f64) {
    let a3 = a * a * a;
    (1.0 / a3, -c * a3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::membership_residual;
    use crate::calculus::{frame_at, full_frame_at};
    use crate::diff::expr::parse_expr;
    use crate::diff::fd::{jet, FdScheme};

    fn e(s: &str) -> Expr {
        parse_expr(s).unwrap()
    }

    fn close(a: &ComplexVector, b: &ComplexVector, tol: f64) -> bool {
        (a - b).max_abs_component() <= tol
    }

    #[test]
    fn thm51_trivial_data_is_the_geodesic_plane() {
        let s = build_thm51(&e("0"), &e("0"), Domain::default()).unwrap();
        let p = build_geodesic_plane();
        for &(x, y) in &[(0.3, -0.7), (1.0, 1.0), (-0.2, 0.4)] {
            assert!(close(&s.eval(x, y).unwrap(), &p.eval(x, y).unwrap(), 1e-14));
        }
    }

    #[test]
    fn thm51_vanishes_at_origin() {
        let s = build_thm51(&e("0.3*sin(y)"), &e("y^2"), Domain::default()).unwrap();
        let v = s.eval(0.0, 0.0).unwrap();
        assert_eq!(v.max_abs_component(), 0.0);
    }

    #[test]
    fn thm51_constant_alpha_matches_cor51() {
        let theta = 0.7;
        let f = e("sin(y)*y");
        let a = build_thm51(&e("0.7"), &f, Domain::default()).unwrap();
        let b = build_cor51(theta, &f, Domain::default()).unwrap();
        // the closed form assumes f(0) = 0
        for &(x, y) in &[(0.1, -0.9), (0.5, 0.33), (-1.0, 1.0), (0.0, -0.031)] {
            assert!(close(&a.eval(x, y).unwrap(), &b.eval(x, y).unwrap(), 1e-10));
        }
    }

    #[test]
    fn cor51_zero_is_plane() {
        let s = build_cor51(0.0, &e("0"), Domain::default()).unwrap();
        let v = s.eval(0.4, 0.6).unwrap();
        assert!(close(&v, &ComplexVector::from_reals(&[0.7, 0.1]), 1e-15));
    }

    #[test]
    fn thm51_wirtinger_angle() {
        let s = build_thm51(&e("0.3*sin(y)"), &e("y^2"), Domain::default()).unwrap();
        for &(x, y) in &[(0.2, 0.5), (-0.6, -0.8)] {
            let f = frame_at(&s, (x, y), &FdScheme::default()).unwrap();
            assert!((f.alpha - 0.3 * y.sin()).abs() < 1e-8, "{}", f.alpha);
        }
    }

    #[test]
    fn thm61_values_and_membership() {
        let s = build_thm61(1.0).unwrap();
        let v = s.eval(0.0, 0.0).unwrap();
        let want = ComplexVector::from_reals(&[(2.0f64 / 3.0).sqrt(), 1.0 / 3f64.sqrt(), 0.0]);
        assert!(close(&v, &want, 1e-15));
        for &(x, y) in &[(0.3, -0.2), (1.0, 1.0)] {
            let r = membership_residual(s.ambient(), &s.eval(x, y).unwrap()).unwrap();
            assert!(r.abs() < 1e-12);
        }
        assert_eq!(build_thm61(0.0).unwrap_err().to_string(), "a must be nonzero");
    }

    #[test]
    fn thm71_membership() {
        let s = build_thm71(1.0).unwrap();
        for &(x, y) in &[(0.0, 0.0), (0.7, -0.4)] {
            let r = membership_residual(s.ambient(), &s.eval(x, y).unwrap()).unwrap();
            assert!(r.abs() < 1e-12, "{r}");
        }
        assert!(build_thm71(0.0).is_err());
    }

    #[test]
    fn lift_systems_and_scaling() {
        let scheme = FdScheme::default();
        for (build, c) in [(build_thm61 as fn(f64) -> _, 1.0), (build_thm71, -1.0)] {
            for a in [0.8, 1.0, 1.25] {
                let s = build(a).unwrap();
                let j = jet(&s, (0.3, -0.2), &scheme).unwrap();
                for r in lift_ode_residuals(&j, a, c) {
                    assert!(r.max_abs_component() < 1e-6, "c={c} a={a} {r}");
                }
                let f = full_frame_at(&s, (0.3, -0.2), &scheme).unwrap();
                let (g, l) = lift_expected_gamma_lambda(a, c);
                assert!((f.gamma - g).abs() < 1e-4, "γ={} want {g}", f.gamma);
                assert!((f.lambda - l).abs() < 1e-4, "λ={} want {l}", f.lambda);
                assert!(f.alpha.abs() < 1e-8);
            }
        }
    }

    #[test]
    fn bad_expression_domain_fails_at_build() {
        let err = build_thm51(&e("log(y)"), &e("y"), Domain::default()).unwrap_err();
        assert!(matches!(err, FamilyError::Eval(_)), "{err:?}");
    }

    #[test]
    fn family_names_round_trip() {
        for id in FamilyId::ALL {
            assert_eq!(FamilyId::from_name(id.name()), Some(id));
        }
        assert_eq!(FamilyId::from_name("thm99"), None);
    }
}
