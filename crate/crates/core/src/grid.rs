use std::fmt;

use crate::diff::fd::FdScheme;
use crate::error::VerifyError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(min: f64, max: f64, count: usize) -> Result<Self, VerifyError> {
        if !(min.is_finite() && max.is_finite()) {
            return Err(VerifyError::InvalidGrid(format!("range {min}:{max} is not finite")));
        }
        if min >= max {
            return Err(VerifyError::InvalidGrid(format!("empty range {min}:{max}")));
        }
        if count < 2 {
            return Err(VerifyError::InvalidGrid(format!("count must be at least 2, got {count}")));
        }
        Ok(Self { min, max, count })
    }

    pub fn value(&self, i: usize) -> f64 {
        if i + 1 == self.count {
            return self.max;
        }
        self.min + (self.max - self.min) * i as f64 / (self.count - 1) as f64
    }

    fn parse(text: &str) -> Result<Self, VerifyError> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(VerifyError::InvalidGrid(format!(
                "axis `{text}` must look like min:max:count"
            )));
        }
        let num = |s: &str| {
            s.trim()
                .parse::<f64>()
                .map_err(|_| VerifyError::InvalidGrid(format!("`{s}` is not a number")))
        };
        let count = parts[2]
            .trim()
            .parse::<usize>()
            .map_err(|_| VerifyError::InvalidGrid(format!("`{}` is not a count", parts[2])))?;
        Axis::new(num(parts[0])?, num(parts[1])?, count)
    }
}

/// Rectangular sampling grid plus the finite-difference scheme used at each node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x: Axis,
    pub y: Axis,
    pub scheme: FdScheme,
}

impl GridSpec {
    pub const DEFAULT: &'static str = "-1:1:21,-1:1:21";

    /// Parses `"xmin:xmax:nx,ymin:ymax:ny"`.
    pub fn parse(text: &str, scheme: FdScheme) -> Result<Self, VerifyError> {
        let (xs, ys) = text.split_once(',').ok_or_else(|| {
            VerifyError::InvalidGrid(format!("grid `{text}` must look like xmin:xmax:nx,ymin:ymax:ny"))
        })?;
        scheme
            .validate()
            .map_err(|e| VerifyError::InvalidGrid(e.to_string()))?;
        Ok(Self {
            x: Axis::parse(xs)?,
            y: Axis::parse(ys)?,
            scheme,
        })
    }

    pub fn len(&self) -> usize {
        self.x.count * self.y.count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Grid nodes in row-major order: rows of constant `y` from `y.min` up,
    /// and within a row `x` from `x.min` up.
    pub fn points(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::with_capacity(self.len());
        for j in 0..self.y.count {
            let y = self.y.value(j);
            for i in 0..self.x.count {
                out.push((self.x.value(i), y));
            }
        }
        out
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        Self::parse(Self::DEFAULT, FdScheme::default()).expect("default grid parses")
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{},{}:{}:{}",
            self.x.min, self.x.max, self.x.count, self.y.min, self.y.max, self.y.count
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_default() {
        let g = GridSpec::default();
        assert_eq!(g.len(), 441);
        let pts = g.points();
        assert_eq!(pts[0], (-1.0, -1.0));
        assert_eq!(pts[1], (-0.9, -1.0));
        assert_eq!(pts[440], (1.0, 1.0));
        assert_eq!(g.to_string(), "-1:1:21,-1:1:21");
    }

    #[test]
    fn malformed_grids() {
        let s = FdScheme::default();
        assert!(GridSpec::parse("-1:1:1,-1:1:3", s).is_err());
        assert!(GridSpec::parse("-1:1:3", s).is_err());
        assert!(GridSpec::parse("1:-1:3,-1:1:3", s).is_err());
        assert!(GridSpec::parse("-1:1:3,a:1:3", s).is_err());
        assert!(GridSpec::parse("-1:1:3,-1:inf:3", s).is_err());
        assert!(GridSpec::parse("-1:1:3,-1:1", s).is_err());
        assert!(GridSpec::parse("-1:1:2.5,-1:1:3", s).is_err());
    }

    #[test]
    fn unicode_minus_is_rejected_cleanly() {
        assert!(GridSpec::parse("\u{2212}1:1:3,-1:1:3", FdScheme::default()).is_err());
    }
}
