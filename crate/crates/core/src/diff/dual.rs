//! First-order dual numbers `a + b·ε` with `ε² = 0`.

use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Dual {
    pub re: f64,
    pub eps: f64,
}

impl Dual {
    pub const fn new(re: f64, eps: f64) -> Self {
        Self { re, eps }
    }

    pub const fn constant(re: f64) -> Self {
        Self { re, eps: 0.0 }
    }

    /// The independent variable seeded with unit derivative.
    pub const fn variable(re: f64) -> Self {
        Self { re, eps: 1.0 }
    }

    /// Applies a scalar function with known derivative via the chain rule.
    #[inline]
    fn chain(self, value: f64, deriv: f64) -> Self {
        Self::new(value, deriv * self.eps)
    }

    pub fn sin(self) -> Self {
        self.chain(self.re.sin(), self.re.cos())
    }

    pub fn cos(self) -> Self {
        self.chain(self.re.cos(), -self.re.sin())
    }

    pub fn sinh(self) -> Self {
        self.chain(self.re.sinh(), self.re.cosh())
    }

    pub fn cosh(self) -> Self {
        self.chain(self.re.cosh(), self.re.sinh())
    }

    pub fn tanh(self) -> Self {
        let t = self.re.tanh();
        self.chain(t, 1.0 - t * t)
    }

    pub fn exp(self) -> Self {
        let e = self.re.exp();
        self.chain(e, e)
    }

    /// Natural log; the caller checks `re > 0`.
    pub fn ln(self) -> Self {
        self.chain(self.re.ln(), 1.0 / self.re)
    }

    /// Square root; the caller checks `re >= 0`.
    pub fn sqrt(self) -> Self {
        let s = self.re.sqrt();
        self.chain(s, 0.5 / s)
    }

    pub fn asinh(self) -> Self {
        self.chain(self.re.asinh(), 1.0 / (1.0 + self.re * self.re).sqrt())
    }

    pub fn atan(self) -> Self {
        self.chain(self.re.atan(), 1.0 / (1.0 + self.re * self.re))
    }

    /// `self^k` for a constant exponent.
    pub fn powf(self, k: f64) -> Self {
        let value = self.re.powf(k);
        let deriv = if k == 0.0 {
            0.0
        } else {
            k * self.re.powf(k - 1.0)
        };
        self.chain(value, deriv)
    }

    /// `self^other` for a variable exponent; the caller checks `self.re > 0`.
    pub fn pow(self, other: Dual) -> Self {
        let value = self.re.powf(other.re);
        Self::new(
            value,
            value * (other.eps * self.re.ln() + other.re * self.eps / self.re),
        )
    }

    pub fn is_finite(self) -> bool {
        self.re.is_finite() && self.eps.is_finite()
    }
}

impl Add for Dual {
    type Output = Dual;
    fn add(self, r: Dual) -> Dual {
        Dual::new(self.re + r.re, self.eps + r.eps)
    }
}

impl Sub for Dual {
    type Output = Dual;
    fn sub(self, r: Dual) -> Dual {
        Dual::new(self.re - r.re, self.eps - r.eps)
    }
}

impl Mul for Dual {
    type Output = Dual;
    fn mul(self, r: Dual) -> Dual {
        Dual::new(self.re * r.re, self.re * r.eps + self.eps * r.re)
    }
}

impl Div for Dual {
    type Output = Dual;
    fn div(self, r: Dual) -> Dual {
        Dual::new(
            self.re / r.re,
            (self.eps * r.re - self.re * r.eps) / (r.re * r.re),
        )
    }
}

impl Neg for Dual {
    type Output = Dual;
    fn neg(self) -> Dual {
        Dual::new(-self.re, -self.eps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_quotient_rules() {
        let x = Dual::variable(2.0);
        let p = x * x * x;
        assert_eq!(p, Dual::new(8.0, 12.0));
        let q = Dual::constant(1.0) / x;
        assert_eq!(q, Dual::new(0.5, -0.25));
    }

    #[test]
    fn elementary_functions() {
        let x = Dual::variable(0.0);
        assert_eq!(x.sinh(), Dual::new(0.0, 1.0));
        assert_eq!(x.cos(), Dual::new(1.0, -0.0));
        assert_eq!(x.tanh(), Dual::new(0.0, 1.0));
        let x = Dual::variable(4.0);
        assert_eq!(x.sqrt(), Dual::new(2.0, 0.25));
        assert!((x.ln().eps - 0.25).abs() < 1e-16);
        let e = Dual::variable(1.0).pow(Dual::variable(1.0));
        // d/dx x^x = x^x (ln x + 1) = 1 at x = 1
        assert!((e.eps - 1.0).abs() < 1e-15);
    }
}
