//! The three Lorentzian complex space forms and their flat models.
//!
//! `CP^2_1(4c)` and `CH^2_1(4c)` are never represented by charts. Surfaces in
//! them are handled through horizontal lifts into the quadrics
//! `{ b(z, z) = 1/c }` of the flat total space `C^3`, so every ambient here
//! is a flat `C^n` with a signature form plus the constant `c`.

use serde::{Deserialize, Serialize};

use crate::algebra::{j_apply, ComplexVector, SignatureForm};
use crate::error::{AlgebraError, AmbientError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AmbientKind {
    /// The Lorentzian complex plane `C^2_1`.
    FlatC21,
    /// `CP^2_1(4c)` through the Hopf fibration of `S^5_2(c)` in `C^3_1`.
    Cp21Lift,
    /// `CH^2_1(4c)` through the Hopf fibration of `H^5_2(c)` in `C^3_2`.
    Ch21Lift,
}

impl AmbientKind {
    pub fn is_lift(self) -> bool {
        !matches!(self, AmbientKind::FlatC21)
    }

    pub fn name(self) -> &'static str {
        match self {
            AmbientKind::FlatC21 => "C^2_1",
            AmbientKind::Cp21Lift => "CP^2_1",
            AmbientKind::Ch21Lift => "CH^2_1",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AmbientSpace {
    kind: AmbientKind,
    c: f64,
    form: SignatureForm,
}

impl AmbientSpace {
    /// Validates the pairing of kind, curvature sign and form.
    pub fn new(kind: AmbientKind, c: f64, form: SignatureForm) -> Result<Self, AmbientError> {
        if !c.is_finite() {
            return Err(AmbientError::Inconsistent(format!("c = {c} is not finite")));
        }
        let (want_dim, want_index, sign_ok) = match kind {
            AmbientKind::FlatC21 => (2, 1, c == 0.0),
            AmbientKind::Cp21Lift => (3, 1, c > 0.0),
            AmbientKind::Ch21Lift => (3, 2, c < 0.0),
        };
        if !sign_ok {
            return Err(AmbientError::Inconsistent(format!(
                "c = {c} has the wrong sign for {}",
                kind.name()
            )));
        }
        if form.dim() != want_dim || form.index() != want_index {
            return Err(AmbientError::Inconsistent(format!(
                "{} needs a form on C^{want_dim} of index {want_index}, got C^{} of index {}",
                kind.name(),
                form.dim(),
                form.index()
            )));
        }
        Ok(Self { kind, c, form })
    }

    pub fn flat_c21() -> Self {
        Self {
            kind: AmbientKind::FlatC21,
            c: 0.0,
            form: SignatureForm::standard(1, 2).expect("index 1 fits in C^2"),
        }
    }

    /// `CP^2_1(4c)` lift model with the given timelike slot of `C^3_1`.
    pub fn cp21_lift(c: f64, negative_slot: usize) -> Result<Self, AmbientError> {
        let form = SignatureForm::with_negative_slots(3, &[negative_slot])?;
        Self::new(AmbientKind::Cp21Lift, c, form)
    }

    /// `CH^2_1(4c)` lift model with the first two slots of `C^3_2` negative.
    pub fn ch21_lift(c: f64) -> Result<Self, AmbientError> {
        Self::new(AmbientKind::Ch21Lift, c, SignatureForm::standard(2, 3)?)
    }

    pub fn kind(&self) -> AmbientKind {
        self.kind
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn form(&self) -> &SignatureForm {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.form.dim()
    }

    /// Shorthand for `g(z, w)` without dimension checks.
    pub(crate) fn g(&self, z: &ComplexVector, w: &ComplexVector) -> f64 {
        self.form.inner(z, w)
    }
}

/// The curvature tensor of a complex space form of constant holomorphic
/// sectional curvature `4c`:
///
/// `R(X,Y)Z = c{<Y,Z>X - <X,Z>Y + <JY,Z>JX - <JX,Z>JY + 2<X,JY>JZ}`.
pub fn curvature(
    c: f64,
    x: &ComplexVector,
    y: &ComplexVector,
    z: &ComplexVector,
    form: &SignatureForm,
) -> Result<ComplexVector, AlgebraError> {
    for v in [x, y, z] {
        if v.dim() != form.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: form.dim(),
                found: v.dim(),
            });
        }
    }
    Ok(curvature_unchecked(c, x, y, z, form))
}

pub(crate) fn curvature_unchecked(
    c: f64,
    x: &ComplexVector,
    y: &ComplexVector,
    z: &ComplexVector,
    form: &SignatureForm,
) -> ComplexVector {
    let jx = j_apply(x);
    let jy = j_apply(y);
    let jz = j_apply(z);
    let coeffs = [
        form.inner(y, z),
        -form.inner(x, z),
        form.inner(&jy, z),
        -form.inner(&jx, z),
        2.0 * form.inner(x, &jy),
    ];
    let out = ComplexVector::combination(&coeffs, &[x, y, &jx, &jy, &jz]);
    &out * c
}

/// `b(z, z) - 1/c`; zero exactly on the quadric `S^5_2(c)` or `H^5_2(c)`.
pub fn membership_residual(space: &AmbientSpace, z: &ComplexVector) -> Result<f64, AmbientError> {
    if !space.kind.is_lift() {
        return Err(AmbientError::NoMembershipConstraint);
    }
    let b = crate::algebra::hermitian_form(&space.form, z, z)?;
    Ok(b.re - 1.0 / space.c)
}

/// `g(v, iz)`; zero iff `v` is orthogonal to the Hopf fiber through `z`.
pub fn horizontality_residual(
    space: &AmbientSpace,
    z: &ComplexVector,
    v: &ComplexVector,
) -> Result<f64, AmbientError> {
    if !space.kind.is_lift() {
        return Err(AmbientError::NoMembershipConstraint);
    }
    Ok(crate::algebra::real_inner(&space.form, v, &j_apply(z))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curvature_examples() {
        let f = SignatureForm::standard(1, 2).unwrap();
        let x = ComplexVector::from_pairs(&[(0.3, -0.1), (1.0, 2.0)]);
        let z = ComplexVector::from_pairs(&[(0.7, 0.2), (-1.0, 0.5)]);
        let r = curvature(1.0, &x, &x, &z, &f).unwrap();
        assert!(r.max_abs_component() < 1e-14);
        let y = ComplexVector::from_pairs(&[(1.5, 0.0), (0.0, -2.0)]);
        assert_eq!(curvature(0.0, &x, &y, &z, &f).unwrap().max_abs_component(), 0.0);

        let e1 = ComplexVector::from_reals(&[1.0, 0.0]);
        let e2 = ComplexVector::from_reals(&[0.0, 1.0]);
        let r = curvature(1.0, &e1, &e2, &e2, &f).unwrap();
        assert_eq!(r, ComplexVector::from_reals(&[1.0, 0.0]));
    }

    #[test]
    fn curvature_rejects_bad_dimension() {
        let f = SignatureForm::standard(1, 2).unwrap();
        let a = ComplexVector::zeros(2);
        let b = ComplexVector::zeros(3);
        assert!(curvature(1.0, &a, &a, &b, &f).is_err());
    }

    #[test]
    fn membership_examples() {
        let cp = AmbientSpace::new(
            AmbientKind::Cp21Lift,
            1.0,
            SignatureForm::standard(1, 3).unwrap(),
        )
        .unwrap();
        let z = ComplexVector::from_reals(&[0.0, 1.0, 0.0]);
        assert_eq!(membership_residual(&cp, &z).unwrap(), 0.0);
        assert_eq!(membership_residual(&cp, &ComplexVector::zeros(3)).unwrap(), -1.0);

        let ch = AmbientSpace::ch21_lift(-1.0).unwrap();
        let z = ComplexVector::from_reals(&[1.0, 0.0, 0.0]);
        assert_eq!(membership_residual(&ch, &z).unwrap(), 0.0);

        let err = membership_residual(&AmbientSpace::flat_c21(), &ComplexVector::zeros(2));
        assert_eq!(err, Err(AmbientError::NoMembershipConstraint));
    }

    #[test]
    fn horizontality_examples() {
        let cp = AmbientSpace::cp21_lift(1.0, 0).unwrap();
        let z = ComplexVector::from_pairs(&[(0.0, 0.5), (1.0, 0.2), (0.3, -0.4)]);
        // Rescale so that b(z, z) = 1.
        let b = crate::algebra::hermitian_form(cp.form(), &z, &z).unwrap().re;
        let z = &z * (1.0 / b.sqrt());
        assert!(horizontality_residual(&cp, &z, &z).unwrap().abs() < 1e-15);
        let fiber = &j_apply(&z) * 2.0;
        let r = horizontality_residual(&cp, &z, &fiber).unwrap();
        assert!((r.abs() - 2.0).abs() < 1e-12);
        assert!(horizontality_residual(&AmbientSpace::flat_c21(), &z, &z).is_err());
    }

    #[test]
    fn descriptor_invariants() {
        let f3 = SignatureForm::standard(1, 3).unwrap();
        assert!(AmbientSpace::new(AmbientKind::Cp21Lift, -1.0, f3.clone()).is_err());
        assert!(AmbientSpace::new(AmbientKind::Ch21Lift, -1.0, f3).is_err());
        assert!(AmbientSpace::new(
            AmbientKind::FlatC21,
            0.5,
            SignatureForm::standard(1, 2).unwrap()
        )
        .is_err());
        assert!(AmbientSpace::cp21_lift(2.0, 2).is_ok());
        let flat = AmbientSpace::flat_c21();
        assert_eq!(flat.c(), 0.0);
        assert_eq!(flat.dim(), 2);
    }
}
