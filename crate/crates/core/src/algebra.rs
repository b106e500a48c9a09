//! Complex linear algebra on `C^n` equipped with an indefinite Hermitian form.
//!
//! The Hermitian form of index `i` is
//!
//! ```text
//! b(z, w) = - sum_{k in negative slots} conj(z_k) w_k + sum_{j otherwise} conj(z_j) w_j
//! ```
//!
//! and the flat pseudo-Riemannian metric is its real part `g = Re b`. The
//! complex structure `J` is multiplication by `i` in every slot.

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use num_complex::Complex64;

use crate::error::AlgebraError;

/// Point or tangent vector of `C^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexVector(Vec<Complex64>);

impl ComplexVector {
    pub fn new(components: Vec<Complex64>) -> Self {
        Self(components)
    }

    pub fn zeros(n: usize) -> Self {
        Self(vec![Complex64::new(0.0, 0.0); n])
    }

    /// Builds a vector from `(re, im)` pairs.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Self {
        Self(pairs.iter().map(|&(re, im)| Complex64::new(re, im)).collect())
    }

    /// Builds a vector with purely real components.
    pub fn from_reals(values: &[f64]) -> Self {
        Self(values.iter().map(|&re| Complex64::new(re, 0.0)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Complex64] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &Complex64> {
        self.0.iter()
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    /// Multiplication by a complex scalar.
    pub fn scale_complex(&self, a: Complex64) -> Self {
        Self(self.0.iter().map(|c| a * c).collect())
    }

    /// Largest absolute value over all real and imaginary parts.
    pub fn max_abs_component(&self) -> f64 {
        self.0
            .iter()
            .fold(0.0_f64, |m, c| m.max(c.re.abs()).max(c.im.abs()))
    }

    /// Positive-definite Euclidean norm on `R^{2n}`; used only for error measurement.
    pub fn euclidean_norm(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `self + a * other`.
    pub fn axpy(&self, a: f64, other: &ComplexVector) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(u, v)| u + v * a)
                .collect(),
        )
    }

    /// Linear combination `sum coeffs[k] * vectors[k]`.
    pub fn combination(coeffs: &[f64], vectors: &[&ComplexVector]) -> Self {
        let n = vectors.first().map_or(0, |v| v.dim());
        let mut out = Self::zeros(n);
        for (&a, v) in coeffs.iter().zip(vectors) {
            out += &(*v * a);
        }
        out
    }
}

impl Index<usize> for ComplexVector {
    type Output = Complex64;
    fn index(&self, k: usize) -> &Complex64 {
        &self.0[k]
    }
}

impl IndexMut<usize> for ComplexVector {
    fn index_mut(&mut self, k: usize) -> &mut Complex64 {
        &mut self.0[k]
    }
}

impl fmt::Display for ComplexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}{:+}i", c.re, c.im)?;
        }
        write!(f, ")")
    }
}

impl Add<&ComplexVector> for &ComplexVector {
    type Output = ComplexVector;
    fn add(self, rhs: &ComplexVector) -> ComplexVector {
        ComplexVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&ComplexVector> for &ComplexVector {
    type Output = ComplexVector;
    fn sub(self, rhs: &ComplexVector) -> ComplexVector {
        ComplexVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl AddAssign<&ComplexVector> for ComplexVector {
    fn add_assign(&mut self, rhs: &ComplexVector) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl SubAssign<&ComplexVector> for ComplexVector {
    fn sub_assign(&mut self, rhs: &ComplexVector) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a -= b;
        }
    }
}

impl Mul<f64> for &ComplexVector {
    type Output = ComplexVector;
    fn mul(self, a: f64) -> ComplexVector {
        ComplexVector(self.0.iter().map(|c| c * a).collect())
    }
}

impl Neg for &ComplexVector {
    type Output = ComplexVector;
    fn neg(self) -> ComplexVector {
        ComplexVector(self.0.iter().map(|c| -c).collect())
    }
}

/// Indefinite Hermitian form on `C^n` with an explicit set of negative slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureForm {
    n: usize,
    negative: Vec<bool>,
}

impl SignatureForm {
    /// The form `b_{index,n}`: the first `index` slots are negative.
    pub fn standard(index: usize, n: usize) -> Result<Self, AlgebraError> {
        if index > n {
            return Err(AlgebraError::InvalidSignature { index, n });
        }
        Ok(Self {
            n,
            negative: (0..n).map(|k| k < index).collect(),
        })
    }

    /// A form with negative slots at the given zero-based positions.
    pub fn with_negative_slots(n: usize, slots: &[usize]) -> Result<Self, AlgebraError> {
        let mut negative = vec![false; n];
        for &s in slots {
            if s >= n || negative[s] {
                return Err(AlgebraError::InvalidSlot { slot: s, n });
            }
            negative[s] = true;
        }
        Ok(Self { n, negative })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Complex index: the number of negative slots.
    pub fn index(&self) -> usize {
        self.negative.iter().filter(|&&s| s).count()
    }

    pub fn negative_slots(&self) -> Vec<usize> {
        (0..self.n).filter(|&k| self.negative[k]).collect()
    }

    /// Signature `(negative, positive)` of the induced real metric on `R^{2n}`.
    pub fn real_signature(&self) -> (usize, usize) {
        let i = self.index();
        (2 * i, 2 * (self.n - i))
    }

    fn check(&self, z: &ComplexVector) -> Result<(), AlgebraError> {
        if z.dim() != self.n {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.n,
                found: z.dim(),
            });
        }
        Ok(())
    }

    /// Unchecked kernel for `b(z, w)`; callers guarantee matching dimensions.
    pub(crate) fn herm(&self, z: &ComplexVector, w: &ComplexVector) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..self.n {
            let t = z.0[k].conj() * w.0[k];
            if self.negative[k] {
                acc -= t;
            } else {
                acc += t;
            }
        }
        acc
    }

    /// Unchecked kernel for `g(z, w) = Re b(z, w)`.
    pub(crate) fn inner(&self, z: &ComplexVector, w: &ComplexVector) -> f64 {
        let mut acc = 0.0;
        for k in 0..self.n {
            let (a, b) = (z.0[k], w.0[k]);
            let t = a.re * b.re + a.im * b.im;
            if self.negative[k] {
                acc -= t;
            } else {
                acc += t;
            }
        }
        acc
    }
}

/// `b(z, w)`, conjugate-linear in `z`.
pub fn hermitian_form(
    form: &SignatureForm,
    z: &ComplexVector,
    w: &ComplexVector,
) -> Result<Complex64, AlgebraError> {
    form.check(z)?;
    form.check(w)?;
    Ok(form.herm(z, w))
}

/// `g(z, w) = Re b(z, w)`, symmetric and real bilinear.
pub fn real_inner(
    form: &SignatureForm,
    z: &ComplexVector,
    w: &ComplexVector,
) -> Result<f64, AlgebraError> {
    form.check(z)?;
    form.check(w)?;
    Ok(form.inner(z, w))
}

/// The complex structure `J`: multiply every component by `i`.
pub fn j_apply(z: &ComplexVector) -> ComplexVector {
    ComplexVector(z.0.iter().map(|c| Complex64::new(-c.im, c.re)).collect())
}
