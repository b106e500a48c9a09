//! Residuals of the structure equations of a minimal flat Lorentzian surface
//! with Wirtinger angle `α` in a space of constant holomorphic sectional
//! curvature `4c`:
//!
//! ```text
//! Gauss     γλ - α_x α_y - c(3 sinh²α - 1)                      = 0
//! Codazzi   β_y + βΦ(e2) + 3c sinh α cosh α                      = 0
//!           γ_y - γΦ(e2)                                         = 0
//!           λ_x + λΦ(e1)                                         = 0
//!           μ_x - μΦ(e1) - 3c sinh α cosh α                      = 0
//! PDE       α_xy - α_x α_y tanh α - 3c sinh α cosh α             = 0
//! Ricci     ∂_y Φ(e1) - ∂_x Φ(e2) - c(3 sinh²α + 1) - (γλ + α_x α_y) = 0
//! ```
//!
//! In the flat ambient (`c = 0`) there is also the relation `γλ + βμ = 0`.
//!
//! First derivatives of pointwise quantities (`α_x`, `β`, `Φ`, ...) are taken
//! by Richardson-extrapolated central differences of full frames at step
//! [`FdScheme::field_step`].

use std::sync::Arc;

use rayon::prelude::*;

use crate::ambient::AmbientKind;
use crate::calculus::{self, FramePoint};
use crate::diff::fd::{self, FdScheme, Jet};
use crate::error::{GeometryError, VerifyError};
use crate::grid::GridSpec;
use crate::immersion::Immersion;
use crate::report::{ReportBuilder, ResidualReport};

/// Largest `|h(e1, e2)|` component for which a surface counts as minimal.
pub const MINIMALITY_PRECONDITION: f64 = 1e-4;

/// Mutation applied to every second-order frame a [`FrameField`] produces.
pub type FrameFault = Arc<dyn Fn(&mut FramePoint) + Send + Sync>;

/// Frames of one immersion, optionally perturbed by a fault.
#[derive(Clone)]
pub struct FrameField {
    immersion: Immersion,
    scheme: FdScheme,
    fault: Option<FrameFault>,
}

impl std::fmt::Debug for FrameField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FrameField")
            .field("immersion", &self.immersion)
            .field("scheme", &self.scheme)
            .field("fault", &self.fault.is_some())
            .finish()
    }
}

impl FrameField {
    pub fn new(immersion: Immersion, scheme: FdScheme) -> Self {
        Self {
            immersion,
            scheme,
            fault: None,
        }
    }

    pub fn with_fault(mut self, fault: FrameFault) -> Self {
        self.fault = Some(fault);
        self
    }

    pub fn immersion(&self) -> &Immersion {
        &self.immersion
    }

    pub fn scheme(&self) -> &FdScheme {
        &self.scheme
    }

    pub fn jet(&self, at: (f64, f64)) -> Result<Jet, GeometryError> {
        Ok(fd::jet(&self.immersion, at, &self.scheme)?)
    }

    pub fn frame_from_jet(&self, at: (f64, f64), jet: &Jet) -> Result<FramePoint, GeometryError> {
        let mut f = calculus::frame_from_jet(self.immersion.ambient(), at, jet)?;
        if let Some(fault) = &self.fault {
            fault(&mut f);
        }
        Ok(f)
    }

    pub fn frame(&self, at: (f64, f64)) -> Result<FramePoint, GeometryError> {
        let jet = self.jet(at)?;
        self.frame_from_jet(at, &jet)
    }

    /// `(∂_x q, ∂_y q)` for every component of `q` evaluated on frames.
    fn gradient<const N: usize>(
        &self,
        at: (f64, f64),
        q: impl Fn(&FramePoint) -> [f64; N],
    ) -> Result<([f64; N], [f64; N]), GeometryError> {
        let levels = self.scheme.richardson_levels;
        let step = self.scheme.field_step();
        let mut dx = Vec::with_capacity(levels);
        let mut dy = Vec::with_capacity(levels);
        for k in 0..levels {
            let h = step / 2f64.powi(k as i32);
            let xp = q(&self.frame((at.0 + h, at.1))?);
            let xm = q(&self.frame((at.0 - h, at.1))?);
            let yp = q(&self.frame((at.0, at.1 + h))?);
            let ym = q(&self.frame((at.0, at.1 - h))?);
            dx.push(std::array::from_fn(|i| (xp[i] - xm[i]) * (0.5 / h)));
            dy.push(std::array::from_fn(|i| (yp[i] - ym[i]) * (0.5 / h)));
        }
        let ex = fd::richardson(levels, |k| Ok(dx[k]))?;
        let ey = fd::richardson(levels, |k| Ok(dy[k]))?;
        Ok((ex, ey))
    }

    /// `Φ(e_j)` from finite differences of the normal field `e3` itself,
    /// independent of the product-rule expression used by full frames.
    fn phi_direct(&self, at: (f64, f64), j: usize) -> Result<f64, GeometryError> {
        let levels = self.scheme.richardson_levels;
        let step = self.scheme.field_step();
        let dir = if j == 0 { (1.0, 0.0) } else { (0.0, 1.0) };
        let center = calculus::frame_at(&self.immersion, at, &self.scheme)?;
        let g = self.immersion.ambient();
        let mut est = Vec::with_capacity(levels);
        for k in 0..levels {
            let h = step / 2f64.powi(k as i32);
            let p = calculus::frame_at(&self.immersion, (at.0 + h * dir.0, at.1 + h * dir.1), &self.scheme)?;
            let m = calculus::frame_at(&self.immersion, (at.0 - h * dir.0, at.1 - h * dir.1), &self.scheme)?;
            let de3 = &(&p.e3 - &m.e3) * (0.5 / h);
            est.push(-g.g(&de3, &center.e4));
        }
        Ok(fd::richardson(levels, |k| Ok(est[k]))?)
    }
}

/// Everything needed to evaluate the structure equations at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct PointAnalysis {
    pub frame: FramePoint,
    pub jet: Jet,
    pub c: f64,
    pub alpha_xy: f64,
    pub beta_y: f64,
    pub gamma_y: f64,
    pub lambda_x: f64,
    pub mu_x: f64,
    pub phi1_y: f64,
    pub phi2_x: f64,
}

/// The four Codazzi residuals in the order `β, γ, λ, μ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CodazziResiduals {
    pub beta: f64,
    pub gamma: f64,
    pub lambda: f64,
    pub mu: f64,
}

impl CodazziResiduals {
    pub fn max(&self) -> f64 {
        self.beta.abs().max(self.gamma.abs()).max(self.lambda.abs()).max(self.mu.abs())
    }
}

impl PointAnalysis {
    /// Computes the analysis at `at`, or `NotApplicable` if the frame is
    /// degenerate or the surface is not minimal there.
    pub fn compute(field: &FrameField, at: (f64, f64)) -> Result<Self, VerifyError> {
        let (jet, frame) = Self::center(field, at)?;
        let h12 = frame.h3[0][1].abs().max(frame.h4[0][1].abs());
        // NaN fails this check.
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(h12 <= MINIMALITY_PRECONDITION) {
            return Err(VerifyError::NotApplicable(format!(
                "surface is not minimal at ({}, {}): |h(e1,e2)| = {h12:e}",
                at.0, at.1
            )));
        }
        Self::around(field, at, jet, frame)
    }

    /// As [`PointAnalysis::compute`] without the minimality precondition, for
    /// sweeps that report the mean curvature as a residual of its own.
    pub fn compute_unchecked(field: &FrameField, at: (f64, f64)) -> Result<Self, VerifyError> {
        let (jet, frame) = Self::center(field, at)?;
        Self::around(field, at, jet, frame)
    }

    fn center(field: &FrameField, at: (f64, f64)) -> Result<(Jet, FramePoint), VerifyError> {
        let jet = field.jet(at).map_err(not_applicable_if_degenerate)?;
        let frame = field.frame_from_jet(at, &jet).map_err(not_applicable_if_degenerate)?;
        Ok((jet, frame))
    }

    fn around(field: &FrameField, at: (f64, f64), jet: Jet, frame: FramePoint) -> Result<Self, VerifyError> {
        let (dx, dy) = field.gradient(at, |f| {
            [f.alpha_x, f.beta, f.gamma, f.lambda, f.mu, f.phi[0], f.phi[1]]
        })?;
        Ok(Self {
            c: field.immersion().ambient().c(),
            frame,
            jet,
            alpha_xy: dy[0],
            beta_y: dy[1],
            gamma_y: dy[2],
            lambda_x: dx[3],
            mu_x: dx[4],
            phi1_y: dy[5],
            phi2_x: dx[6],
        })
    }

    fn sh_ch(&self) -> (f64, f64) {
        (self.frame.alpha.sinh(), self.frame.alpha.cosh())
    }

    pub fn gauss(&self) -> f64 {
        let f = &self.frame;
        let sh = f.alpha.sinh();
        (f.gamma * f.lambda - f.alpha_x * f.alpha_y - self.c * (3.0 * sh * sh - 1.0)).abs()
    }

    pub fn codazzi(&self) -> CodazziResiduals {
        let f = &self.frame;
        let (sh, ch) = self.sh_ch();
        let t = 3.0 * self.c * sh * ch;
        CodazziResiduals {
            beta: (self.beta_y + f.beta * f.phi[1] + t).abs(),
            gamma: (self.gamma_y - f.gamma * f.phi[1]).abs(),
            lambda: (self.lambda_x + f.lambda * f.phi[0]).abs(),
            mu: (self.mu_x - f.mu * f.phi[0] - t).abs(),
        }
    }

    pub fn pde(&self) -> f64 {
        let f = &self.frame;
        let (sh, ch) = self.sh_ch();
        (self.alpha_xy - f.alpha_x * f.alpha_y * f.alpha.tanh() - 3.0 * self.c * sh * ch).abs()
    }

    /// `∂_y Φ(e1) - ∂_x Φ(e2)` from full frames.
    pub fn normal_curvature(&self) -> f64 {
        self.phi1_y - self.phi2_x
    }

    /// The normal curvature predicted from `α`, `γ`, `λ` and `c`.
    pub fn predicted_normal_curvature(&self) -> f64 {
        let f = &self.frame;
        let sh = f.alpha.sinh();
        self.c * (3.0 * sh * sh + 1.0) + f.gamma * f.lambda + f.alpha_x * f.alpha_y
    }

    pub fn ricci(&self) -> f64 {
        (self.normal_curvature() - self.predicted_normal_curvature()).abs()
    }

    /// `|γλ + βμ|`; only meaningful in the flat ambient.
    pub fn c21_relation(&self) -> f64 {
        let f = &self.frame;
        (f.gamma * f.lambda + f.beta * f.mu).abs()
    }
}

fn not_applicable_if_degenerate(e: GeometryError) -> VerifyError {
    match e {
        GeometryError::FrameDegenerate { .. } => VerifyError::NotApplicable(e.to_string()),
        other => VerifyError::Geometry(other),
    }
}

fn analysis(imm: &Immersion, at: (f64, f64), scheme: &FdScheme) -> Result<PointAnalysis, VerifyError> {
    PointAnalysis::compute(&FrameField::new(imm.clone(), *scheme), at)
}

pub fn gauss_residual(imm: &Immersion, at: (f64, f64), scheme: &FdScheme) -> Result<f64, VerifyError> {
    Ok(analysis(imm, at, scheme)?.gauss())
}

pub fn codazzi_residuals(
    imm: &Immersion,
    at: (f64, f64),
    scheme: &FdScheme,
) -> Result<CodazziResiduals, VerifyError> {
    Ok(analysis(imm, at, scheme)?.codazzi())
}

pub fn pde_residual(imm: &Immersion, at: (f64, f64), scheme: &FdScheme) -> Result<f64, VerifyError> {
    Ok(analysis(imm, at, scheme)?.pde())
}

pub fn ricci_residual(imm: &Immersion, at: (f64, f64), scheme: &FdScheme) -> Result<f64, VerifyError> {
    Ok(analysis(imm, at, scheme)?.ricci())
}

/// `∂_y Φ(e1) - ∂_x Φ(e2)` computed two ways: from product-rule connection
/// forms on full frames, and from connection forms obtained by differencing
/// the normal field directly.
pub fn ricci_two_path(
    imm: &Immersion,
    at: (f64, f64),
    scheme: &FdScheme,
) -> Result<(f64, f64), VerifyError> {
    let field = FrameField::new(imm.clone(), *scheme);
    let a = PointAnalysis::compute(&field, at)?;
    Ok((a.normal_curvature(), normal_curvature_direct(&field, at)?))
}

/// Normal curvature from directly differenced connection forms.
pub fn normal_curvature_direct(field: &FrameField, at: (f64, f64)) -> Result<f64, VerifyError> {
    let levels = field.scheme().richardson_levels;
    let step = field.scheme().field_step();
    let mut est = Vec::with_capacity(levels);
    for k in 0..levels {
        let h = step / 2f64.powi(k as i32);
        let phi1_y = (field.phi_direct((at.0, at.1 + h), 0)? - field.phi_direct((at.0, at.1 - h), 0)?) * (0.5 / h);
        let phi2_x = (field.phi_direct((at.0 + h, at.1), 1)? - field.phi_direct((at.0 - h, at.1), 1)?) * (0.5 / h);
        est.push(phi1_y - phi2_x);
    }
    Ok(fd::richardson(levels, |k| Ok(est[k])).map_err(GeometryError::from)?)
}

pub fn c21_gauss_relation(imm: &Immersion, at: (f64, f64), scheme: &FdScheme) -> Result<f64, VerifyError> {
    if imm.ambient().kind() != AmbientKind::FlatC21 {
        return Err(VerifyError::NotApplicable(
            "the relation γλ + βμ = 0 holds only in the flat ambient".into(),
        ));
    }
    Ok(analysis(imm, at, scheme)?.c21_relation())
}

/// How strongly the Ricci residual must be controlled by the others.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DependencyBound {
    pub factor: f64,
    pub floor: f64,
}

impl Default for DependencyBound {
    fn default() -> Self {
        Self {
            factor: 10.0,
            floor: 1e-6,
        }
    }
}

impl DependencyBound {
    /// `ricci ≤ factor · (gauss + codazzi + pde) + floor`.
    pub fn holds(&self, ricci: f64, gauss: f64, codazzi: f64, pde: f64) -> bool {
        ricci <= self.bound(gauss, codazzi, pde)
    }

    pub fn bound(&self, gauss: f64, codazzi: f64, pde: f64) -> f64 {
        self.factor * (gauss + codazzi + pde) + self.floor
    }
}

/// Evaluates `f` at every grid node in parallel; results keep grid order.
pub fn map_grid<T, F>(grid: &GridSpec, f: F) -> Vec<T>
where
    T: Send,
    F: Fn((f64, f64)) -> T + Sync + Send,
{
    grid.points().into_par_iter().map(f).collect()
}

pub const GAUSS: &str = "gauss";
pub const CODAZZI_BETA: &str = "codazzi_beta";
pub const CODAZZI_GAMMA: &str = "codazzi_gamma";
pub const CODAZZI_LAMBDA: &str = "codazzi_lambda";
pub const CODAZZI_MU: &str = "codazzi_mu";
pub const PDE: &str = "sinh_gordon_pde";
pub const RICCI: &str = "ricci";
pub const RICCI_DEPENDENCY: &str = "ricci_dependency";
pub const CODAZZI: [&str; 4] = [CODAZZI_BETA, CODAZZI_GAMMA, CODAZZI_LAMBDA, CODAZZI_MU];

/// Records the structure-equation residuals of one point.
pub fn record_structure(b: &mut ReportBuilder, a: &PointAnalysis) {
    let at = a.frame.at;
    b.record(GAUSS, a.gauss(), at);
    let cz = a.codazzi();
    for (name, v) in CODAZZI.iter().zip([cz.beta, cz.gamma, cz.lambda, cz.mu]) {
        b.record(name, v, at);
    }
    b.record(PDE, a.pde(), at);
    b.record(RICCI, a.ricci(), at);
}

/// Records the dependency ratio `ricci_max / bound`, which must not exceed 1.
pub fn record_dependency(b: &mut ReportBuilder, bound: DependencyBound) -> Option<f64> {
    let gauss = b.max_of(GAUSS)?;
    let codazzi = CODAZZI
        .iter()
        .map(|n| b.max_of(n).unwrap_or(f64::INFINITY))
        .fold(0.0_f64, f64::max);
    let pde = b.max_of(PDE)?;
    let ricci = b.max_of(RICCI)?;
    let ratio = ricci / bound.bound(gauss, codazzi, pde);
    b.record(RICCI_DEPENDENCY, ratio, (f64::NAN, f64::NAN));
    b.tolerance(RICCI_DEPENDENCY, 1.0);
    Some(ratio)
}

/// Checks that, on the grid, the Ricci equation is implied by the Gauss,
/// Codazzi and PDE residuals. Non-minimal or degenerate surfaces yield a
/// report with `applicable = false`.
pub fn theorem41_check(imm: &Immersion, grid: &GridSpec) -> ResidualReport {
    theorem41_check_field(&FrameField::new(imm.clone(), grid.scheme), grid, DependencyBound::default())
}

pub fn theorem41_check_field(field: &FrameField, grid: &GridSpec, bound: DependencyBound) -> ResidualReport {
    let results = map_grid(grid, |at| PointAnalysis::compute(field, at));
    let mut b = ReportBuilder::new();
    let mut notes = Vec::new();
    let mut applicable = true;
    for r in &results {
        match r {
            Ok(a) => record_structure(&mut b, a),
            Err(e) => {
                applicable = false;
                notes.push(e.to_string());
                break;
            }
        }
    }
    if applicable {
        record_dependency(&mut b, bound);
    }
    let label = field.immersion().label().to_string();
    let mut report = b.finish(label, Default::default(), *grid, applicable, notes);
    if !applicable {
        report.entries.clear();
        report.recompute_pass();
    }
    report
}
