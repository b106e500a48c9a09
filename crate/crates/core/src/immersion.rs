use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::ComplexVector;
use crate::ambient::AmbientSpace;
use crate::error::ImmersionError;

type EvalFn = dyn Fn(f64, f64) -> Result<ComplexVector, ImmersionError> + Send + Sync;

/// A parametrized surface `(x, y) -> C^n` together with its ambient geometry.
///
/// Cloning is cheap; the evaluator is shared.
#[derive(Clone)]
pub struct Immersion {
    ambient: AmbientSpace,
    label: String,
    eval: Arc<EvalFn>,
}

impl Immersion {
    pub fn new<F>(ambient: AmbientSpace, label: impl Into<String>, eval: F) -> Self
    where
        F: Fn(f64, f64) -> Result<ComplexVector, ImmersionError> + Send + Sync + 'static,
    {
        Self {
            ambient,
            label: label.into(),
            eval: Arc::new(eval),
        }
    }

    /// Wraps an infallible map.
    pub fn from_fn<F>(ambient: AmbientSpace, label: impl Into<String>, f: F) -> Self
    where
        F: Fn(f64, f64) -> ComplexVector + Send + Sync + 'static,
    {
        Self::new(ambient, label, move |x, y| Ok(f(x, y)))
    }

    pub fn ambient(&self) -> &AmbientSpace {
        &self.ambient
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, x: f64, y: f64) -> Result<ComplexVector, ImmersionError> {
        let z = (self.eval)(x, y)?;
        if z.dim() != self.ambient.dim() {
            return Err(ImmersionError::Evaluation {
                x,
                y,
                reason: format!(
                    "immersion returned {} components, ambient has {}",
                    z.dim(),
                    self.ambient.dim()
                ),
            });
        }
        if !z.is_finite() {
            return Err(ImmersionError::Evaluation {
                x,
                y,
                reason: "non-finite component".into(),
            });
        }
        Ok(z)
    }
}

impl fmt::Debug for Immersion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Immersion")
            .field("ambient", &self.ambient)
            .field("label", &self.label)
            .finish_non_exhaustive()
    }
}

/// Closed coordinate rectangle `[x_min, x_max] x [y_min, y_max]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Domain {
    pub x: (f64, f64),
    pub y: (f64, f64),
}

impl Domain {
    pub fn new(x: (f64, f64), y: (f64, f64)) -> Self {
        Self { x, y }
    }

    pub fn contains(&self, x: f64, y: f64) -> bool {
        self.x.0 <= x && x <= self.x.1 && self.y.0 <= y && y <= self.y.1
    }
}

impl Default for Domain {
    fn default() -> Self {
        Self::new((-1.0, 1.0), (-1.0, 1.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_and_finiteness_are_checked() {
        let bad = Immersion::from_fn(AmbientSpace::flat_c21(), "bad", |_, _| ComplexVector::zeros(3));
        assert!(bad.eval(0.0, 0.0).is_err());
        let nan = Immersion::from_fn(AmbientSpace::flat_c21(), "nan", |x, _| {
            ComplexVector::from_reals(&[1.0 / x, 0.0])
        });
        let err = nan.eval(0.0, 0.5).unwrap_err();
        assert!(err.to_string().contains("(0, 0.5)"));
        assert!(nan.eval(1.0, 0.5).is_ok());
    }

    #[test]
    fn domain_contains() {
        let d = Domain::default();
        assert!(d.contains(-1.0, 1.0));
        assert!(!d.contains(1.01, 0.0));
    }
}
