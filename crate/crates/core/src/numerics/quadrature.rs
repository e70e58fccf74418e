use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::Tolerances;
use crate::error::{Error, Result};
use crate::scalar::{c, Scalar};

/// Value and diagnostics of an adaptive quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult<T> {
    pub value: T,
    /// Absolute error estimate, always `>= 0`.
    pub error_estimate: T,
    pub evaluations: usize,
}

// 15-point Kronrod extension of the 7-point Gauss rule (nodes on the positive half).
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
// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

struct Segment<T> {
    a: T,
    b: T,
    value: T,
    error: T,
}

impl<T: Scalar> PartialEq for Segment<T> {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl<T: Scalar> Eq for Segment<T> {}
impl<T: Scalar> PartialOrd for Segment<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl<T: Scalar> Ord for Segment<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.partial_cmp(&other.error).unwrap_or(Ordering::Equal)
    }
}

fn kronrod<T: Scalar, F: FnMut(T) -> T>(f: &mut F, a: T, b: T) -> Result<(T, T)> {
    let half = c::<T>(0.5);
    let center = half * (a + b);
    let radius = half * (b - a);
    let fc = f(center);
    if !fc.is_finite() {
        return Err(Error::NonFiniteIntegrand { x: center.as_f64() });
    }
    let mut kron = fc * c(WGK[7]);
    let mut gauss = fc * c(WG[3]);
    for j in 0..7 {
        let dx = radius * c(XGK[j]);
        let (xl, xr) = (center - dx, center + dx);
        let (fl, fr) = (f(xl), f(xr));
        if !fl.is_finite() {
            return Err(Error::NonFiniteIntegrand { x: xl.as_f64() });
        }
        if !fr.is_finite() {
            return Err(Error::NonFiniteIntegrand { x: xr.as_f64() });
        }
        let sum = fl + fr;
        kron = kron + c::<T>(WGK[j]) * sum;
        if j % 2 == 1 {
            gauss = gauss + c::<T>(WG[j / 2]) * sum;
        }
    }
    let value = kron * radius;
    let error = ((kron - gauss) * radius).abs();
    Ok((value, error))
}

/// Globally adaptive Gauss–Kronrod (7/15) quadrature of `f` over `[a, b]`.
///
/// The interval with the largest error estimate is bisected until the summed
/// estimate drops below `max(abs_tol, rel_tol * |value|)`. Segments too narrow
/// to bisect in floating point are frozen with their current estimate.
pub fn integrate<T, F>(mut f: F, a: T, b: T, tol: &Tolerances<T>) -> Result<QuadratureResult<T>>
where
    T: Scalar,
    F: FnMut(T) -> T,
{
    tol.validate()?;
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidInput(format!(
            "integration interval [{a}, {b}] must be finite with a < b"
        )));
    }

    let (value, error) = kronrod(&mut f, a, b)?;
    let mut evaluations = 15;
    let mut total = value;
    let mut total_err = error;
    let mut frozen_err = T::zero();
    let mut heap = BinaryHeap::new();
    heap.push(Segment { a, b, value, error });

    let half = c::<T>(0.5);
    let min_width = c::<T>(16.0) * T::epsilon();
    loop {
        let target = tol.abs_tol.max(tol.rel_tol * total.abs());
        if total_err <= target {
            break;
        }
        let Some(worst) = heap.pop() else {
            // every remaining segment is frozen at round-off level
            break;
        };
        let mid = half * (worst.a + worst.b);
        let scale = worst.a.abs().max(worst.b.abs()).max(T::min_positive_value());
        if (worst.b - worst.a) <= min_width * scale || mid <= worst.a || mid >= worst.b {
            frozen_err = frozen_err + worst.error;
            continue;
        }
        if evaluations + 30 > tol.max_evals {
            return Err(Error::BudgetExhausted {
                max_evals: tol.max_evals,
                value: total.as_f64(),
                error_estimate: total_err.as_f64(),
            });
        }
        let (vl, el) = kronrod(&mut f, worst.a, mid)?;
        let (vr, er) = kronrod(&mut f, mid, worst.b)?;
        evaluations += 30;
        total = total - worst.value + vl + vr;
        total_err = total_err - worst.error + el + er;
        heap.push(Segment {
            a: worst.a,
            b: mid,
            value: vl,
            error: el,
        });
        heap.push(Segment {
            a: mid,
            b: worst.b,
            value: vr,
            error: er,
        });
        if heap.len() % 64 == 0 {
            // re-sum to keep cancellation drift out of the running totals
            total = heap.iter().fold(T::zero(), |acc, s| acc + s.value);
            total_err = heap.iter().fold(frozen_err, |acc, s| acc + s.error);
        }
    }

    Ok(QuadratureResult {
        value: total,
        error_estimate: total_err.max(T::zero()),
        evaluations,
    })
}

/// Quadrature of `f` over `[a, ∞)` through the substitution `s = a + u/(1-u)`,
/// `u ∈ [0, 1)`, which maps algebraically decaying tails onto a bounded
/// integrand near `u = 1`.
///
/// Before integrating, the transformed integrand is sampled at
/// `u = 1 - ε^{k/4}` (`k = 1, 2, 3`); growth at least as fast as `(1-u)^{-1}`
/// means a non-integrable tail and is reported as [`Error::DivergenceDetected`].
pub fn integrate_to_infinity<T, F>(mut f: F, a: T, tol: &Tolerances<T>) -> Result<QuadratureResult<T>>
where
    T: Scalar,
    F: FnMut(T) -> T,
{
    if !a.is_finite() {
        return Err(Error::InvalidInput(format!("lower limit {a} must be finite")));
    }
    let mut g = |u: T| -> T {
        let w = T::one() - u;
        if w <= T::zero() {
            // the point u = 1 carries no mass
            return T::zero();
        }
        let s = a + u / w;
        f(s) / (w * w)
    };

    let step = T::epsilon().powf(c(0.25));
    let probes: Vec<T> = (1..=3)
        .map(|k| {
            let u = T::one() - step.powi(k);
            g(u).abs()
        })
        .collect();
    let threshold = c::<T>(0.5) / step;
    if probes.iter().all(|p| p.is_finite())
        && probes[0] > T::zero()
        && probes[1] >= threshold * probes[0]
        && probes[2] >= threshold * probes[1]
    {
        return Err(Error::DivergenceDetected {
            growth: (probes[2] / probes[1]).as_f64(),
        });
    }

    integrate(g, T::zero(), T::one(), tol)
}
