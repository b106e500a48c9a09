//! Adaptive Gauss–Kronrod (7/15) quadrature for small vector-valued integrands,
//! plus a cumulative integrator `y -> ∫_0^y` with precomputed anchors.

use std::collections::BinaryHeap;

use crate::error::{EvalError, QuadratureError};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

/// Gauss weights for the nodes `XGK[1], XGK[3], XGK[5], XGK[7]`.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

/// One 15-point Kronrod panel: `(kronrod estimate, |kronrod - gauss|)`.
pub fn gk15<const N: usize, F>(f: &F, a: f64, b: f64) -> Result<([f64; N], f64), EvalError>
where
    F: Fn(f64) -> Result<[f64; N], EvalError>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center)?;
    let mut kron = [0.0; N];
    let mut gauss = [0.0; N];
    for i in 0..N {
        kron[i] = WGK[7] * fc[i];
        gauss[i] = WG[3] * fc[i];
    }
    for (j, &node) in XGK.iter().enumerate().take(7) {
        let dx = half * node;
        let f1 = f(center - dx)?;
        let f2 = f(center + dx)?;
        for i in 0..N {
            let s = f1[i] + f2[i];
            kron[i] += WGK[j] * s;
            if j % 2 == 1 {
                gauss[i] += WG[j / 2] * s;
            }
        }
    }
    let mut err = 0.0_f64;
    for i in 0..N {
        kron[i] *= half;
        gauss[i] *= half;
        err = err.max((kron[i] - gauss[i]).abs());
    }
    Ok((kron, err))
}

#[derive(Debug, Clone, Copy)]
struct Panel<const N: usize> {
    a: f64,
    b: f64,
    value: [f64; N],
    err: f64,
}

impl<const N: usize> PartialEq for Panel<N> {
    fn eq(&self, other: &Self) -> bool {
        self.err.total_cmp(&other.err).is_eq()
    }
}

impl<const N: usize> Eq for Panel<N> {}

impl<const N: usize> PartialOrd for Panel<N> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<const N: usize> Ord for Panel<N> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.err.total_cmp(&other.err)
    }
}

/// Maximum number of panels before giving up.
pub const MAX_PANELS: usize = 4096;

/// Globally adaptive integration of `f` over `[a, b]` to absolute tolerance `tol`
/// (measured as the largest component error). Bisects the worst panel first.
pub fn integrate<const N: usize, F>(f: &F, a: f64, b: f64, tol: f64) -> Result<[f64; N], QuadratureError>
where
    F: Fn(f64) -> Result<[f64; N], EvalError>,
{
    if a == b {
        return Ok([0.0; N]);
    }
    let (value, err) = gk15(f, a, b)?;
    let mut heap = BinaryHeap::new();
    heap.push(Panel { a, b, value, err });
    let mut total_err = err;
    loop {
        if total_err <= tol {
            // The running total can cancel catastrophically after a huge panel
            // is split; only an exact resum may end the refinement.
            total_err = heap.iter().map(|p| p.err).sum();
            if total_err <= tol {
                break;
            }
        }
        if heap.len() >= MAX_PANELS {
            let worst = heap.peek().expect("non-empty");
            return Err(QuadratureError::NonConvergence {
                a: worst.a,
                b: worst.b,
                estimate: total_err,
            });
        }
        let worst = heap.pop().expect("non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a.min(worst.b) || mid >= worst.a.max(worst.b) {
            return Err(QuadratureError::NonConvergence {
                a: worst.a,
                b: worst.b,
                estimate: total_err,
            });
        }
        let (v1, e1) = gk15(f, worst.a, mid)?;
        let (v2, e2) = gk15(f, mid, worst.b)?;
        total_err += e1 + e2 - worst.err;
        heap.push(Panel { a: worst.a, b: mid, value: v1, err: e1 });
        heap.push(Panel { a: mid, b: worst.b, value: v2, err: e2 });
    }
    // Sum in a fixed order so results do not depend on heap internals.
    let mut panels = heap.into_vec();
    panels.sort_by(|p, q| p.a.total_cmp(&q.a));
    let mut out = [0.0; N];
    for p in &panels {
        for (o, v) in out.iter_mut().zip(p.value) {
            *o += v;
        }
    }
    Ok(out)
}

/// `y -> ∫_0^y f` over a fixed interval, with running sums stored at evenly
/// spaced anchors. Evaluation integrates only from the nearest anchor, which
/// keeps the result a smooth function of `y` between anchors.
#[derive(Debug, Clone)]
pub struct CumulativeIntegral<const N: usize, F> {
    f: F,
    tol: f64,
    lo: f64,
    spacing: f64,
    anchors: Vec<[f64; N]>,
}

impl<const N: usize, F> CumulativeIntegral<N, F>
where
    F: Fn(f64) -> Result<[f64; N], EvalError>,
{
    /// Anchor spacing used when covering the requested range.
    pub const SPACING: f64 = 1.0 / 16.0;

    /// Precomputes anchors covering `[lo, hi]` (extended to contain 0).
    pub fn new(f: F, lo: f64, hi: f64, tol: f64) -> Result<Self, QuadratureError> {
        let spacing = Self::SPACING;
        let lo = (lo.min(0.0) / spacing).floor() * spacing;
        let hi = (hi.max(0.0) / spacing).ceil() * spacing;
        let count = ((hi - lo) / spacing).round() as usize + 1;
        let zero_idx = (-lo / spacing).round() as usize;
        let seg_tol = tol / count.max(1) as f64;
        let mut anchors = vec![[0.0; N]; count];
        for k in zero_idx + 1..count {
            let a = lo + (k - 1) as f64 * spacing;
            let seg = integrate(&f, a, a + spacing, seg_tol)?;
            anchors[k] = std::array::from_fn(|i| anchors[k - 1][i] + seg[i]);
        }
        for k in (0..zero_idx).rev() {
            let a = lo + k as f64 * spacing;
            let seg = integrate(&f, a, a + spacing, seg_tol)?;
            anchors[k] = std::array::from_fn(|i| anchors[k + 1][i] - seg[i]);
        }
        Ok(Self {
            f,
            tol,
            lo,
            spacing,
            anchors,
        })
    }

    pub fn integrand(&self, t: f64) -> Result<[f64; N], EvalError> {
        (self.f)(t)
    }

    /// `∫_0^y f`.
    pub fn eval(&self, y: f64) -> Result<[f64; N], QuadratureError> {
        let last = self.anchors.len() - 1;
        let k = ((y - self.lo) / self.spacing).round().clamp(0.0, last as f64) as usize;
        let start = self.lo + k as f64 * self.spacing;
        let base = self.anchors[k];
        if y == start {
            return Ok(base);
        }
        let tail = if (y - start).abs() <= self.spacing {
            let (v, err) = gk15(&self.f, start, y)?;
            if err <= self.tol {
                v
            } else {
                integrate(&self.f, start, y, self.tol)?
            }
        } else {
            integrate(&self.f, start, y, self.tol)?
        };
        Ok(std::array::from_fn(|i| base[i] + tail[i]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_and_transcendental_integrals() {
        let f = |t: f64| Ok([t * t, t.cos(), (-t * t).exp()]);
        let v = integrate(&f, 0.0, 2.0, 1e-12).unwrap();
        assert!((v[0] - 8.0 / 3.0).abs() < 1e-13);
        assert!((v[1] - 2f64.sin()).abs() < 1e-13);
        // erf(2) * sqrt(pi) / 2
        assert!((v[2] - 0.882_081_390_762_421_4).abs() < 1e-12);
    }

    #[test]
    fn reversed_and_empty_intervals() {
        let f = |t: f64| Ok([t.exp()]);
        let fw = integrate(&f, 0.0, 1.0, 1e-12).unwrap()[0];
        let bw = integrate(&f, 1.0, 0.0, 1e-12).unwrap()[0];
        assert!((fw + bw).abs() < 1e-14);
        assert_eq!(integrate(&f, 0.3, 0.3, 1e-12).unwrap()[0], 0.0);
    }

    #[test]
    fn singular_integrand_reports_subinterval() {
        let f = |t: f64| Ok([1.0 / t.abs().max(1e-300)]);
        match integrate(&f, -1.0, 1.0, 1e-14) {
            Err(QuadratureError::NonConvergence { a, b, .. }) => {
                assert!(a.abs() < 1e-3 || b.abs() < 1e-3, "[{a}, {b}]");
            }
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }

    #[test]
    fn integrand_errors_propagate() {
        let f = |t: f64| {
            if t > 0.5 {
                Err(EvalError::Domain { node: "log(y)".into(), y: t })
            } else {
                Ok([t])
            }
        };
        assert!(matches!(integrate(&f, 0.0, 1.0, 1e-10), Err(QuadratureError::Integrand(_))));
    }

    #[test]
    fn cumulative_matches_direct_integration() {
        let f = |t: f64| Ok([(0.3 * t.sin()).cosh().powi(2), t.sin()]);
        let cum = CumulativeIntegral::new(f, -1.2, 1.2, 1e-10).unwrap();
        for &y in &[-1.2, -0.731, -0.03125, 0.0, 0.2, 0.999, 1.2, 1.7, -2.0] {
            let direct = integrate(&f, 0.0, y, 1e-13).unwrap();
            let v = cum.eval(y).unwrap();
            assert!((v[0] - direct[0]).abs() < 1e-12, "y={y}");
            assert!((v[1] - (1.0 - y.cos())).abs() < 1e-12, "y={y}");
        }
    }
}
