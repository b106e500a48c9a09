//! Central finite differences of immersions with Richardson extrapolation.
//!
//! Every stencil used here has an error expansion in even powers of the step,
//! so level `k` of the tableau combines steps `h` and `h/2` with the factor
//! `4^k`. `richardson_levels = 1` is the plain central difference.

use serde::{Deserialize, Serialize};

use crate::algebra::ComplexVector;
use crate::error::FdError;
use crate::immersion::Immersion;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FdScheme {
    pub base_step: f64,
    pub richardson_levels: usize,
}

impl FdScheme {
    pub fn new(base_step: f64, richardson_levels: usize) -> Result<Self, FdError> {
        let s = Self {
            base_step,
            richardson_levels,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), FdError> {
        if !(self.base_step.is_finite() && self.base_step > 0.0) {
            return Err(FdError::InvalidScheme(format!(
                "base_step must be positive, got {}",
                self.base_step
            )));
        }
        if !(1..=4).contains(&self.richardson_levels) {
            return Err(FdError::InvalidScheme(format!(
                "richardson_levels must be in [1, 4], got {}",
                self.richardson_levels
            )));
        }
        Ok(())
    }

    /// Step used when differentiating derived pointwise fields (frame
    /// coefficients, connection forms) rather than the immersion itself.
    pub fn field_step(&self) -> f64 {
        100.0 * self.base_step
    }

    /// The same scheme with a different base step.
    pub fn with_step(&self, base_step: f64) -> Self {
        Self {
            base_step,
            ..*self
        }
    }
}

impl Default for FdScheme {
    fn default() -> Self {
        Self {
            base_step: 1e-3,
            richardson_levels: 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Partial {
    X,
    Y,
    Xx,
    Xy,
    /// The mixed partial computed as nested first differences, y first.
    Yx,
    Yy,
}

/// Richardson extrapolation of a sequence of estimates at steps `h, h/2, h/4, ...`.
pub fn richardson<T, F>(levels: usize, mut estimate: F) -> Result<T, FdError>
where
    T: Clone + Extrapolate,
    F: FnMut(usize) -> Result<T, FdError>,
{
    let mut prev: Vec<T> = Vec::with_capacity(levels);
    for k in 0..levels {
        let mut row = Vec::with_capacity(k + 1);
        row.push(estimate(k)?);
        for j in 1..=k {
            let factor = 4f64.powi(j as i32);
            let improved = row[j - 1].extrapolate(&prev[j - 1], factor);
            row.push(improved);
        }
        prev = row;
    }
    Ok(prev.pop().expect("levels >= 1"))
}

/// `(factor * fine - coarse) / (factor - 1)`.
pub trait Extrapolate {
    fn extrapolate(&self, coarse: &Self, factor: f64) -> Self;
}

impl Extrapolate for f64 {
    fn extrapolate(&self, coarse: &f64, factor: f64) -> f64 {
        (factor * self - coarse) / (factor - 1.0)
    }
}

impl Extrapolate for ComplexVector {
    fn extrapolate(&self, coarse: &ComplexVector, factor: f64) -> ComplexVector {
        let d = self - coarse;
        self.axpy(1.0 / (factor - 1.0), &d)
    }
}

impl<const N: usize> Extrapolate for [f64; N] {
    fn extrapolate(&self, coarse: &[f64; N], factor: f64) -> [f64; N] {
        std::array::from_fn(|i| self[i].extrapolate(&coarse[i], factor))
    }
}

fn central_first(imm: &Immersion, at: (f64, f64), dir: (f64, f64), h: f64) -> Result<ComplexVector, FdError> {
    let p = imm.eval(at.0 + h * dir.0, at.1 + h * dir.1)?;
    let m = imm.eval(at.0 - h * dir.0, at.1 - h * dir.1)?;
    Ok(&(&p - &m) * (0.5 / h))
}

/// Finite-difference partial derivative of an immersion at `at`.
pub fn partial(
    immersion: &Immersion,
    which: Partial,
    at: (f64, f64),
    scheme: &FdScheme,
) -> Result<ComplexVector, FdError> {
    scheme.validate()?;
    let (x, y) = at;
    let h0 = scheme.base_step;
    let levels = scheme.richardson_levels;
    let step = |k: usize| h0 / 2f64.powi(k as i32);
    match which {
        Partial::X => richardson(levels, |k| central_first(immersion, at, (1.0, 0.0), step(k))),
        Partial::Y => richardson(levels, |k| central_first(immersion, at, (0.0, 1.0), step(k))),
        Partial::Xx | Partial::Yy => {
            let dir = if which == Partial::Xx { (1.0, 0.0) } else { (0.0, 1.0) };
            let c = immersion.eval(x, y)?;
            richardson(levels, |k| {
                let h = step(k);
                let p = immersion.eval(x + h * dir.0, y + h * dir.1)?;
                let m = immersion.eval(x - h * dir.0, y - h * dir.1)?;
                let mut s = &p + &m;
                s -= &(&c * 2.0);
                Ok(&s * (1.0 / (h * h)))
            })
        }
        Partial::Xy => richardson(levels, |k| {
            let h = step(k);
            let pp = immersion.eval(x + h, y + h)?;
            let pm = immersion.eval(x + h, y - h)?;
            let mp = immersion.eval(x - h, y + h)?;
            let mm = immersion.eval(x - h, y - h)?;
            let mut s = &pp - &pm;
            s -= &mp;
            s += &mm;
            Ok(&s * (0.25 / (h * h)))
        }),
        Partial::Yx => richardson(levels, |k| {
            let h = step(k);
            let inner = |xs: f64| {
                richardson(levels, |j| central_first(immersion, (xs, y), (0.0, 1.0), step(j)))
            };
            let p = inner(x + h)?;
            let m = inner(x - h)?;
            Ok(&(&p - &m) * (0.5 / h))
        }),
    }
}

/// Value and all partials up to second order at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct Jet {
    pub value: ComplexVector,
    pub x: ComplexVector,
    pub y: ComplexVector,
    pub xx: ComplexVector,
    pub xy: ComplexVector,
    pub yy: ComplexVector,
}

/// Computes a full second-order jet, sharing stencil evaluations between partials.
pub fn jet(immersion: &Immersion, at: (f64, f64), scheme: &FdScheme) -> Result<Jet, FdError> {
    scheme.validate()?;
    let (x, y) = at;
    let c = immersion.eval(x, y)?;
    let h0 = scheme.base_step;
    let mut rows: Vec<[ComplexVector; 5]> = Vec::with_capacity(scheme.richardson_levels);
    for k in 0..scheme.richardson_levels {
        let h = h0 / 2f64.powi(k as i32);
        let xp = immersion.eval(x + h, y)?;
        let xm = immersion.eval(x - h, y)?;
        let yp = immersion.eval(x, y + h)?;
        let ym = immersion.eval(x, y - h)?;
        let pp = immersion.eval(x + h, y + h)?;
        let pm = immersion.eval(x + h, y - h)?;
        let mp = immersion.eval(x - h, y + h)?;
        let mm = immersion.eval(x - h, y - h)?;
        let c2 = &c * 2.0;
        let mut dxx = &xp + &xm;
        dxx -= &c2;
        let mut dyy = &yp + &ym;
        dyy -= &c2;
        let mut dxy = &pp - &pm;
        dxy -= &mp;
        dxy += &mm;
        rows.push([
            &(&xp - &xm) * (0.5 / h),
            &(&yp - &ym) * (0.5 / h),
            &dxx * (1.0 / (h * h)),
            &dxy * (0.25 / (h * h)),
            &dyy * (1.0 / (h * h)),
        ]);
    }
    let out = (0..5)
        .map(|slot| richardson(scheme.richardson_levels, |k| Ok(rows[k][slot].clone())))
        .collect::<Result<Vec<ComplexVector>, _>>()?;
    let mut it = out.into_iter();
    Ok(Jet {
        value: c,
        x: it.next().expect("5 slots"),
        y: it.next().expect("5 slots"),
        xx: it.next().expect("5 slots"),
        xy: it.next().expect("5 slots"),
        yy: it.next().expect("5 slots"),
    })
}

/// Richardson-extrapolated central first derivative of a scalar-array field.
pub fn field_derivative<const N: usize, F>(
    field: F,
    at: (f64, f64),
    dir: (f64, f64),
    step: f64,
    levels: usize,
) -> Result<[f64; N], FdError>
where
    F: Fn(f64, f64) -> Result<[f64; N], FdError>,
{
    richardson(levels, |k| {
        let h = step / 2f64.powi(k as i32);
        let p = field(at.0 + h * dir.0, at.1 + h * dir.1)?;
        let m = field(at.0 - h * dir.0, at.1 - h * dir.1)?;
        Ok(std::array::from_fn(|i| (p[i] - m[i]) * (0.5 / h)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ambient::AmbientSpace;
    use num_complex::Complex64;

    fn affine() -> Immersion {
        Immersion::from_fn(AmbientSpace::flat_c21(), "affine", |x, y| {
            ComplexVector::from_reals(&[x, x - y])
        })
    }

    /// (e^{x+iy}, sin(xy)) with hand-computed partials.
    fn smooth() -> Immersion {
        Immersion::from_fn(AmbientSpace::flat_c21(), "smooth", |x, y| {
            ComplexVector::new(vec![
                Complex64::new(x, y).exp(),
                Complex64::new((x * y).sin(), 0.0),
            ])
        })
    }

    fn smooth_truth(which: Partial, x: f64, y: f64) -> ComplexVector {
        let e = Complex64::new(x, y).exp();
        let i = Complex64::new(0.0, 1.0);
        let (s, c) = (x * y).sin_cos();
        let (a, b) = match which {
            Partial::X => (e, y * c),
            Partial::Y => (i * e, x * c),
            Partial::Xx => (e, -y * y * s),
            Partial::Xy | Partial::Yx => (i * e, c - x * y * s),
            Partial::Yy => (-e, -x * x * s),
        };
        ComplexVector::new(vec![a, Complex64::new(b, 0.0)])
    }

    #[test]
    fn affine_partials_are_exact() {
        let imm = affine();
        let s = FdScheme::default();
        let dx = partial(&imm, Partial::X, (0.3, -0.7), &s).unwrap();
        assert!((&dx - &ComplexVector::from_reals(&[1.0, 1.0])).max_abs_component() < 1e-12);
        for w in [Partial::Xx, Partial::Xy, Partial::Yx, Partial::Yy] {
            assert!(partial(&imm, w, (0.3, -0.7), &s).unwrap().max_abs_component() < 1e-9);
        }
    }

    #[test]
    fn smooth_partials_match_truth() {
        let imm = smooth();
        let s = FdScheme::default();
        for w in [Partial::X, Partial::Y, Partial::Xx, Partial::Xy, Partial::Yx, Partial::Yy] {
            let est = partial(&imm, w, (0.4, -0.3), &s).unwrap();
            let err = (&est - &smooth_truth(w, 0.4, -0.3)).max_abs_component();
            assert!(err < 1e-8, "{w:?}: {err:e}");
        }
    }

    #[test]
    fn jet_agrees_with_partial() {
        let imm = smooth();
        let s = FdScheme::default();
        let j = jet(&imm, (0.1, 0.2), &s).unwrap();
        let pairs = [
            (&j.x, Partial::X),
            (&j.y, Partial::Y),
            (&j.xx, Partial::Xx),
            (&j.xy, Partial::Xy),
            (&j.yy, Partial::Yy),
        ];
        for (v, w) in pairs {
            let p = partial(&imm, w, (0.1, 0.2), &s).unwrap();
            assert!((v - &p).max_abs_component() < 1e-13);
        }
    }

    #[test]
    fn mixed_stencils_are_symmetric() {
        let imm = smooth();
        let s = FdScheme::default();
        for &(x, y) in &[(0.0, 0.0), (0.7, -0.2), (-0.9, 0.9)] {
            let a = partial(&imm, Partial::Xy, (x, y), &s).unwrap();
            let b = partial(&imm, Partial::Yx, (x, y), &s).unwrap();
            assert!((&a - &b).max_abs_component() < 1e-9);
        }
    }

    #[test]
    fn more_richardson_levels_do_not_hurt() {
        let imm = smooth();
        for w in [Partial::X, Partial::Y, Partial::Xx, Partial::Xy, Partial::Yy] {
            let mut prev = f64::INFINITY;
            for levels in 1..=4 {
                let s = FdScheme::new(0.1, levels).unwrap();
                let est = partial(&imm, w, (0.3, 0.5), &s).unwrap();
                let err = (&est - &smooth_truth(w, 0.3, 0.5)).max_abs_component();
                assert!(err <= prev || err < 1e-9, "{w:?} level {levels}: {err:e} > {prev:e}");
                prev = err;
            }
        }
    }

    #[test]
    fn evaluation_failure_carries_location() {
        let imm = Immersion::new(AmbientSpace::flat_c21(), "partial", |x, y| {
            if x > 0.5 {
                Err(crate::error::ImmersionError::Evaluation {
                    x,
                    y,
                    reason: "outside chart".into(),
                })
            } else {
                Ok(ComplexVector::from_reals(&[x, y]))
            }
        });
        let err = partial(&imm, Partial::X, (0.5, 0.0), &FdScheme::default()).unwrap_err();
        assert!(err.to_string().contains("outside chart"));
    }

    #[test]
    fn scheme_validation() {
        assert!(FdScheme::new(0.0, 2).is_err());
        assert!(FdScheme::new(1e-3, 0).is_err());
        assert!(FdScheme::new(1e-3, 5).is_err());
        assert!(FdScheme::new(1e-3, 4).is_ok());
    }
}
