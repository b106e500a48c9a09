//! Pointwise extrinsic geometry of a Lorentzian surface in flat coordinates.
//!
//! The chart is assumed to carry the flat metric `-dx dy - dy dx`, so
//! `e1 = ψ_x`, `e2 = ψ_y` is a null frame with `<e1, e2> = -1`. The adapted
//! normal frame is `e3 = sech α (J e1 - sinh α e1)`, `e4 = sech α (J e2 + sinh α e2)`
//! where the Wirtinger angle satisfies `sinh α = -<J e1, e2>`.
//!
//! Every vector `V` expands in the frame through the pairings
//! `V = -<V,e2> e1 - <V,e1> e2 - <V,e4> e3 - <V,e3> e4`, plus, for lift
//! ambients, components along the position vector `L` and the fiber `iL`.

use crate::algebra::{j_apply, ComplexVector};
use crate::ambient::AmbientSpace;
use crate::diff::fd::{self, FdScheme, Jet, Partial};
use crate::error::GeometryError;
use crate::immersion::Immersion;

/// Allowed deviation of the frame products from their pseudo-orthonormal values.
pub const FRAME_TOLERANCE: f64 = 1e-4;

/// Below this `|sinh α|` the coth-based identity is not evaluated.
pub const LAGRANGIAN_CUTOFF: f64 = 1e-6;

/// All frame data at one point. Second-order fields are zero until
/// [`second_fundamental_form_at`] (or [`full_frame_at`]) fills them.
#[derive(Debug, Clone, PartialEq)]
pub struct FramePoint {
    pub at: (f64, f64),
    /// `L(x, y)`; only meaningful for lift ambients.
    pub position: ComplexVector,
    pub e1: ComplexVector,
    pub e2: ComplexVector,
    pub alpha: f64,
    pub e3: ComplexVector,
    pub e4: ComplexVector,
    /// `h(e_i, e_j) = h3[i][j] e3 + h4[i][j] e4`.
    pub h3: [[f64; 2]; 2],
    pub h4: [[f64; 2]; 2],
    pub omega: [f64; 2],
    pub phi: [f64; 2],
    pub beta: f64,
    pub gamma: f64,
    pub lambda: f64,
    pub mu: f64,
    /// `α_x, α_y` obtained by differentiating `sinh α = -<J ψ_x, ψ_y>`.
    pub alpha_x: f64,
    pub alpha_y: f64,
    /// Coefficients of `ψ_xx, ψ_xy, ψ_yy` along `L` (lift ambients only).
    pub position_coeff: [f64; 3],
    /// Coefficients of `ψ_xx, ψ_xy, ψ_yy` along `iL` (lift ambients only).
    pub vertical_coeff: [f64; 3],
    /// `A_{e3} e_j` in the basis `(e1, e2)`, computed from the Weingarten formula.
    pub shape_e3: [[f64; 2]; 2],
    /// `A_{e4} e_j` in the basis `(e1, e2)`.
    pub shape_e4: [[f64; 2]; 2],
    /// Tangential part of `∇_{e_j} e1` along `e2`; zero for a flat chart.
    pub omega_off: [f64; 2],
    pub second_order: bool,
}

impl FramePoint {
    pub fn is_minimal(&self, tol: f64) -> bool {
        self.h3[0][1].abs() <= tol && self.h4[0][1].abs() <= tol
    }

    /// Residuals of the products of the tangent and normal frames against
    /// their expected values, in the order
    /// `<e1,e1>, <e2,e2>, <e1,e2>+1, <e3,e3>, <e4,e4>, <e3,e4>+1`, plus the
    /// largest cross product `|<e_a, e_b>|` with `a ∈ {1,2}, b ∈ {3,4}`.
    pub fn frame_products(&self, ambient: &AmbientSpace) -> [f64; 7] {
        let g = |a: &ComplexVector, b: &ComplexVector| ambient.g(a, b);
        let cross = [
            g(&self.e1, &self.e3),
            g(&self.e1, &self.e4),
            g(&self.e2, &self.e3),
            g(&self.e2, &self.e4),
        ]
        .iter()
        .fold(0.0_f64, |m, v| m.max(v.abs()));
        [
            g(&self.e1, &self.e1),
            g(&self.e2, &self.e2),
            g(&self.e1, &self.e2) + 1.0,
            g(&self.e3, &self.e3),
            g(&self.e4, &self.e4),
            g(&self.e3, &self.e4) + 1.0,
            cross,
        ]
    }
}

/// Removes components along `L` and `iL`; returns `(remainder, along L, along iL)`.
fn split_off_fiber(
    ambient: &AmbientSpace,
    position: &ComplexVector,
    v: &ComplexVector,
) -> Result<(ComplexVector, f64, f64), GeometryError> {
    if !ambient.kind().is_lift() {
        return Ok((v.clone(), 0.0, 0.0));
    }
    let jl = j_apply(position);
    let norm = ambient.g(position, position);
    if norm.abs() < 1e-12 {
        return Err(GeometryError::Consistency(
            "position vector is null; cannot split off the fiber".into(),
        ));
    }
    // <iL, iL> = <L, L> and <L, iL> = 0
    let a = ambient.g(v, position) / norm;
    let b = ambient.g(v, &jl) / norm;
    let mut rest = v.axpy(-a, position);
    rest = rest.axpy(-b, &jl);
    Ok((rest, a, b))
}

fn check_tangent_frame(
    ambient: &AmbientSpace,
    at: (f64, f64),
    e1: &ComplexVector,
    e2: &ComplexVector,
) -> Result<(), GeometryError> {
    let products = [
        ("<e1,e1>", ambient.g(e1, e1)),
        ("<e2,e2>", ambient.g(e2, e2)),
        ("<e1,e2>+1", ambient.g(e1, e2) + 1.0),
    ];
    for (name, value) in products {
        // NaN fails this check.
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !(value.abs() <= FRAME_TOLERANCE) {
            return Err(GeometryError::FrameDegenerate {
                x: at.0,
                y: at.1,
                product: name,
                value,
            });
        }
    }
    Ok(())
}

/// First-order frame from `L`, `ψ_x`, `ψ_y`.
fn first_order_frame(
    ambient: &AmbientSpace,
    at: (f64, f64),
    position: ComplexVector,
    psi_x: &ComplexVector,
    psi_y: &ComplexVector,
) -> Result<FramePoint, GeometryError> {
    let (e1, _, _) = split_off_fiber(ambient, &position, psi_x)?;
    let (e2, _, _) = split_off_fiber(ambient, &position, psi_y)?;
    check_tangent_frame(ambient, at, &e1, &e2)?;
    let sinh_a = -ambient.g(&j_apply(&e1), &e2);
    let alpha = sinh_a.asinh();
    let sech = 1.0 / alpha.cosh();
    let e3 = &j_apply(&e1).axpy(-sinh_a, &e1) * sech;
    let e4 = &j_apply(&e2).axpy(sinh_a, &e2) * sech;
    let zero2 = [[0.0; 2]; 2];
    Ok(FramePoint {
        at,
        position,
        e1,
        e2,
        alpha,
        e3,
        e4,
        h3: zero2,
        h4: zero2,
        omega: [0.0; 2],
        phi: [0.0; 2],
        beta: 0.0,
        gamma: 0.0,
        lambda: 0.0,
        mu: 0.0,
        alpha_x: 0.0,
        alpha_y: 0.0,
        position_coeff: [0.0; 3],
        vertical_coeff: [0.0; 3],
        shape_e3: zero2,
        shape_e4: zero2,
        omega_off: [0.0; 2],
        second_order: false,
    })
}

/// Fills every second-order field of `frame` from `ψ_xx, ψ_xy, ψ_yy`.
fn enrich(
    ambient: &AmbientSpace,
    frame: &mut FramePoint,
    xx: &ComplexVector,
    xy: &ComplexVector,
    yy: &ComplexVector,
) -> Result<(), GeometryError> {
    let g = |a: &ComplexVector, b: &ComplexVector| ambient.g(a, b);
    let seconds = [xx, xy, yy];
    let mut rests = Vec::with_capacity(3);
    for (k, d) in seconds.iter().enumerate() {
        let (rest, along_l, along_il) = split_off_fiber(ambient, &frame.position, d)?;
        frame.position_coeff[k] = along_l;
        frame.vertical_coeff[k] = along_il;
        rests.push(rest);
    }
    let pair34 = g(&frame.e3, &frame.e4);
    if pair34.abs() < 0.5 {
        return Err(GeometryError::Consistency(format!(
            "normal pairing <e3,e4> = {pair34:e} is degenerate"
        )));
    }
    // (i, j) -> index into seconds: (0,0) xx, (0,1)/(1,0) xy, (1,1) yy
    let idx = [[0usize, 1], [1, 2]];
    for i in 0..2 {
        for j in 0..2 {
            let r = &rests[idx[i][j]];
            frame.h3[i][j] = -g(r, &frame.e4);
            frame.h4[i][j] = -g(r, &frame.e3);
        }
    }
    frame.beta = frame.h3[0][0];
    frame.gamma = frame.h4[0][0];
    frame.lambda = frame.h3[1][1];
    frame.mu = frame.h4[1][1];

    // ∂_j e1 = ψ_{x j}: coefficient on e1 is ω_j, coefficient on e2 should vanish
    for j in 0..2 {
        let d = &rests[idx[0][j]];
        frame.omega[j] = -g(d, &frame.e2);
        frame.omega_off[j] = -g(d, &frame.e1);
    }

    let cosh_a = frame.alpha.cosh();
    let tanh_a = frame.alpha.tanh();
    let sech = 1.0 / cosh_a;
    let je1 = j_apply(&frame.e1);
    let je2 = j_apply(&frame.e2);
    // cosh α ∂_j α = -<J ∂_j e1, e2> - <J e1, ∂_j e2>
    let d_e1 = [xx, xy];
    let d_e2 = [xy, yy];
    let mut dalpha = [0.0; 2];
    for j in 0..2 {
        dalpha[j] = (-g(&j_apply(d_e1[j]), &frame.e2) - g(&je1, d_e2[j])) / cosh_a;
    }
    frame.alpha_x = dalpha[0];
    frame.alpha_y = dalpha[1];

    for j in 0..2 {
        let a_j = dalpha[j];
        // ∂_j e3 = -sech tanh α_j J e1 + sech J ∂_j e1 - sech² α_j e1 - tanh ∂_j e1
        let de3 = ComplexVector::combination(
            &[-sech * tanh_a * a_j, sech, -sech * sech * a_j, -tanh_a],
            &[&je1, &j_apply(d_e1[j]), &frame.e1, d_e1[j]],
        );
        // ∂_j e4 = -sech tanh α_j J e2 + sech J ∂_j e2 + sech² α_j e2 + tanh ∂_j e2
        let de4 = ComplexVector::combination(
            &[-sech * tanh_a * a_j, sech, sech * sech * a_j, tanh_a],
            &[&je2, &j_apply(d_e2[j]), &frame.e2, d_e2[j]],
        );
        frame.phi[j] = -g(&de3, &frame.e4);
        // A_ξ e_j = -(∂_j ξ)^T
        frame.shape_e3[j] = [g(&de3, &frame.e2), g(&de3, &frame.e1)];
        frame.shape_e4[j] = [g(&de4, &frame.e2), g(&de4, &frame.e1)];
    }
    frame.second_order = true;
    Ok(())
}

fn position_or_empty(immersion: &Immersion, value: ComplexVector) -> ComplexVector {
    if immersion.ambient().kind().is_lift() {
        value
    } else {
        ComplexVector::zeros(0)
    }
}

/// Tangent frame, Wirtinger angle and adapted normal frame at `at`.
pub fn frame_at(
    immersion: &Immersion,
    at: (f64, f64),
    scheme: &FdScheme,
) -> Result<FramePoint, GeometryError> {
    let psi_x = fd::partial(immersion, Partial::X, at, scheme)?;
    let psi_y = fd::partial(immersion, Partial::Y, at, scheme)?;
    let position = position_or_empty(immersion, immersion.eval(at.0, at.1)?);
    first_order_frame(immersion.ambient(), at, position, &psi_x, &psi_y)
}

/// Builds a fully populated frame from a precomputed jet.
pub fn frame_from_jet(
    ambient: &AmbientSpace,
    at: (f64, f64),
    jet: &Jet,
) -> Result<FramePoint, GeometryError> {
    let position = if ambient.kind().is_lift() {
        jet.value.clone()
    } else {
        ComplexVector::zeros(0)
    };
    let mut frame = first_order_frame(ambient, at, position, &jet.x, &jet.y)?;
    enrich(ambient, &mut frame, &jet.xx, &jet.xy, &jet.yy)?;
    Ok(frame)
}

/// Frame with first- and second-order data from one shared stencil.
pub fn full_frame_at(
    immersion: &Immersion,
    at: (f64, f64),
    scheme: &FdScheme,
) -> Result<FramePoint, GeometryError> {
    let jet = fd::jet(immersion, at, scheme)?;
    frame_from_jet(immersion.ambient(), at, &jet)
}

/// Adds `h`, `β γ λ μ`, the connection forms and shape operators to `frame`.
pub fn second_fundamental_form_at(
    immersion: &Immersion,
    frame: &FramePoint,
    at: (f64, f64),
    scheme: &FdScheme,
) -> Result<FramePoint, GeometryError> {
    let xx = fd::partial(immersion, Partial::Xx, at, scheme)?;
    let xy = fd::partial(immersion, Partial::Xy, at, scheme)?;
    let yy = fd::partial(immersion, Partial::Yy, at, scheme)?;
    let mut out = frame.clone();
    enrich(immersion.ambient(), &mut out, &xx, &xy, &yy)?;
    Ok(out)
}

/// `H = ½ trace h = -h(e1, e2)`, returned as a vector in the ambient space.
pub fn mean_curvature_at(frame: &FramePoint) -> ComplexVector {
    let mut h = &frame.e3 * (-frame.h3[0][1]);
    h += &(&frame.e4 * (-frame.h4[0][1]));
    h
}

/// Components `(H^3, H^4)` of the mean curvature vector in the basis `(e3, e4)`.
pub fn mean_curvature_components(frame: &FramePoint) -> [f64; 2] {
    [-frame.h3[0][1], -frame.h4[0][1]]
}

/// Connection forms `(ω(e1), ω(e2), Φ(e1), Φ(e2))` at `at`.
pub fn connection_forms_at(
    immersion: &Immersion,
    at: (f64, f64),
    scheme: &FdScheme,
) -> Result<(f64, f64, f64, f64), GeometryError> {
    let f = full_frame_at(immersion, at, scheme)?;
    Ok((f.omega[0], f.omega[1], f.phi[0], f.phi[1]))
}

/// Residuals of the identities relating α, ω, Φ and h in an adapted frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lemma32Residuals {
    /// Shape operators from the Weingarten formula against the values
    /// predicted by `h` (worst component over `A_{e3}`, `A_{e4}`, `j = 1, 2`).
    pub shape_operator: f64,
    /// `|e1 α - (h⁴₁₂ - h³₁₁)|`.
    pub e1_alpha: f64,
    /// `|e2 α - (h⁴₂₂ - h³₁₂)|`.
    pub e2_alpha: f64,
    /// `|(ω_j - Φ_j) - (h³_{1j} + h⁴_{j2}) tanh α|`, `j = 1, 2`.
    pub omega_phi: [f64; 2],
    /// `|e_j α - (ω_j - Φ_j) coth α + 2 h³_{1j}|`; `None` near the Lagrangian locus.
    pub coth_form: Option<[f64; 2]>,
}

impl Lemma32Residuals {
    pub fn max(&self) -> f64 {
        let mut m = self
            .shape_operator
            .max(self.e1_alpha)
            .max(self.e2_alpha)
            .max(self.omega_phi[0])
            .max(self.omega_phi[1]);
        if let Some(c) = self.coth_form {
            m = m.max(c[0]).max(c[1]);
        }
        m
    }
}

pub fn lemma32_residuals(frame: &FramePoint, alpha_x: f64, alpha_y: f64) -> Lemma32Residuals {
    let (h3, h4) = (&frame.h3, &frame.h4);
    let mut shape = 0.0_f64;
    for j in 0..2 {
        let want_e3 = [h4[j][1], h4[0][j]];
        let want_e4 = [h3[j][1], h3[0][j]];
        for k in 0..2 {
            shape = shape
                .max((frame.shape_e3[j][k] - want_e3[k]).abs())
                .max((frame.shape_e4[j][k] - want_e4[k]).abs());
        }
    }
    let dalpha = [alpha_x, alpha_y];
    let tanh_a = frame.alpha.tanh();
    let omega_phi: [f64; 2] = std::array::from_fn(|j| {
        ((frame.omega[j] - frame.phi[j]) - (h3[0][j] + h4[j][1]) * tanh_a).abs()
    });
    let coth_form = (frame.alpha.sinh().abs() > LAGRANGIAN_CUTOFF).then(|| {
        std::array::from_fn(|j| {
            (dalpha[j] - (frame.omega[j] - frame.phi[j]) / tanh_a + 2.0 * h3[0][j]).abs()
        })
    });
    Lemma32Residuals {
        shape_operator: shape,
        e1_alpha: (alpha_x - (h4[0][1] - h3[0][0])).abs(),
        e2_alpha: (alpha_y - (h4[1][1] - h3[0][1])).abs(),
        omega_phi,
        coth_form,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::AmbientSpace;
    use num_complex::Complex64;

    fn plane() -> Immersion {
        Immersion::from_fn(AmbientSpace::flat_c21(), "plane", |x, y| {
            ComplexVector::from_reals(&[x + y / 2.0, x - y / 2.0])
        })
    }

    #[test]
    fn plane_frame() {
        let s = FdScheme::default();
        let f = frame_at(&plane(), (0.2, -0.4), &s).unwrap();
        assert!((&f.e1 - &ComplexVector::from_reals(&[1.0, 1.0])).max_abs_component() < 1e-12);
        assert!((&f.e2 - &ComplexVector::from_reals(&[0.5, -0.5])).max_abs_component() < 1e-12);
        assert!(f.alpha.abs() < 1e-12);
        for p in f.frame_products(&AmbientSpace::flat_c21()) {
            assert!(p.abs() < 1e-12);
        }
        let f = second_fundamental_form_at(&plane(), &f, (0.2, -0.4), &s).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!(f.h3[i][j].abs() < 1e-9 && f.h4[i][j].abs() < 1e-9);
            }
        }
        assert!(mean_curvature_at(&f).max_abs_component() < 1e-9);
    }

    #[test]
    fn degenerate_chart_is_rejected() {
        let stretched = Immersion::from_fn(AmbientSpace::flat_c21(), "stretched", |x, y| {
            ComplexVector::from_reals(&[2.0 * x + y / 2.0, x - y / 2.0])
        });
        match frame_at(&stretched, (0.0, 0.0), &FdScheme::default()) {
            Err(GeometryError::FrameDegenerate { product, .. }) => assert_eq!(product, "<e1,e1>"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn non_minimal_surface_has_mean_curvature() {
        // (x + y/2 + i x y, x - y/2) is in the flat chart at the origin with ψ_xy = (i, 0)
        let bent = Immersion::from_fn(AmbientSpace::flat_c21(), "bent", |x, y| {
            ComplexVector::new(vec![
                Complex64::new(x + y / 2.0, x * y),
                Complex64::new(x - y / 2.0, 0.0),
            ])
        });
        let f = full_frame_at(&bent, (0.0, 0.0), &FdScheme::default()).unwrap();
        let h = mean_curvature_components(&f);
        assert!(h[0].abs().max(h[1].abs()) > 1e-3, "{h:?}");
    }

    #[test]
    fn jet_and_partials_paths_agree() {
        let s = FdScheme::default();
        let imm = Immersion::from_fn(AmbientSpace::flat_c21(), "thm51-like", |x, y| {
            // constant-angle surface with θ = 0.4, f = sin y
            let t: f64 = 0.4;
            let (sh, ch) = (t.sinh(), t.cosh());
            let f = y.sin();
            let k = y * ch * ch / 2.0;
            ComplexVector::new(vec![
                Complex64::new(x + k - sh * f, f),
                Complex64::new(x - y + k - sh * f, f - y * sh),
            ])
        });
        let a = full_frame_at(&imm, (0.3, 0.1), &s).unwrap();
        let b0 = frame_at(&imm, (0.3, 0.1), &s).unwrap();
        let b = second_fundamental_form_at(&imm, &b0, (0.3, 0.1), &s).unwrap();
        assert!((a.alpha - 0.4).abs() < 1e-10);
        for i in 0..2 {
            for j in 0..2 {
                assert!((a.h3[i][j] - b.h3[i][j]).abs() < 1e-9);
                assert!((a.h4[i][j] - b.h4[i][j]).abs() < 1e-9);
            }
        }
    }
}
