use super::Tolerances;
use crate::error::{Error, Result};
use crate::scalar::{c, Scalar};

// Dormand–Prince 5(4) tableau.
const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;
// continuous extension
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

#[derive(Debug, Clone)]
struct Step<T, const N: usize> {
    t0: T,
    h: T,
    coeffs: [[T; N]; 5],
}

/// Solution of an initial value problem with continuous output on `[t0, t1]`.
#[derive(Debug, Clone)]
pub struct Trajectory<T, const N: usize> {
    t0: T,
    t1: T,
    y0: [T; N],
    y1: [T; N],
    steps: Vec<Step<T, N>>,
    evaluations: usize,
}

impl<T: Scalar, const N: usize> Trajectory<T, N> {
    pub fn t_start(&self) -> T {
        self.t0
    }

    pub fn t_end(&self) -> T {
        self.t1
    }

    pub fn initial_state(&self) -> [T; N] {
        self.y0
    }

    pub fn final_state(&self) -> [T; N] {
        self.y1
    }

    /// Number of accepted steps.
    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    pub fn evaluations(&self) -> usize {
        self.evaluations
    }

    /// Mesh of accepted step endpoints, starting at `t0`.
    pub fn mesh(&self) -> Vec<T> {
        let mut m: Vec<T> = self.steps.iter().map(|s| s.t0).collect();
        m.push(self.t1);
        m
    }

    /// State at any `t` between `t0` and `t1` (either orientation).
    pub fn eval(&self, t: T) -> Result<[T; N]> {
        let (lo, hi) = if self.t0 <= self.t1 {
            (self.t0, self.t1)
        } else {
            (self.t1, self.t0)
        };
        let slack = c::<T>(8.0) * T::epsilon() * lo.abs().max(hi.abs()).max(T::one());
        if !(t >= lo - slack && t <= hi + slack) {
            return Err(Error::OutOfDomain {
                what: "t",
                value: t.as_f64(),
                lo: lo.as_f64(),
                hi: hi.as_f64(),
            });
        }
        if self.steps.is_empty() {
            return Ok(self.y0);
        }
        let forward = self.t1 >= self.t0;
        // index of the step whose span contains t
        let idx = self
            .steps
            .partition_point(|s| if forward { s.t0 <= t } else { s.t0 >= t })
            .saturating_sub(1);
        let s = &self.steps[idx];
        let theta = (t - s.t0) / s.h;
        let theta1 = T::one() - theta;
        let mut y = [T::zero(); N];
        for i in 0..N {
            let k = &s.coeffs;
            y[i] = k[0][i] + theta * (k[1][i] + theta1 * (k[2][i] + theta * (k[3][i] + theta1 * k[4][i])));
        }
        Ok(y)
    }
}

fn axpy<T: Scalar, const N: usize>(y: &[T; N], h: T, terms: &[(f64, &[T; N])]) -> [T; N] {
    let mut out = *y;
    for (w, k) in terms {
        let w = c::<T>(*w) * h;
        for i in 0..N {
            out[i] = out[i] + w * k[i];
        }
    }
    out
}

fn finite<T: Scalar, const N: usize>(y: &[T; N]) -> bool {
    y.iter().all(|v| v.is_finite())
}

/// Integrates `y' = rhs(t, y)` from `(t0, y0)` to `t1` with the adaptive
/// Dormand–Prince 5(4) pair. `t1 < t0` integrates backwards.
///
/// Each accepted step satisfies `|err_i| ≤ abs_tol + rel_tol·max(|y_i|, |y_i^new|)`
/// componentwise. The returned trajectory carries the pair's fourth-order
/// continuous extension.
pub fn solve_ode<T, const N: usize, F>(
    mut rhs: F,
    t0: T,
    y0: [T; N],
    t1: T,
    tol: &Tolerances<T>,
) -> Result<Trajectory<T, N>>
where
    T: Scalar,
    F: FnMut(T, &[T; N]) -> [T; N],
{
    tol.validate()?;
    if !t0.is_finite() || !t1.is_finite() {
        return Err(Error::InvalidInput("ODE interval must be finite".into()));
    }
    if !finite(&y0) {
        return Err(Error::NonFiniteState { t: t0.as_f64() });
    }
    let mut traj = Trajectory {
        t0,
        t1,
        y0,
        y1: y0,
        steps: Vec::new(),
        evaluations: 0,
    };
    if t0 == t1 {
        return Ok(traj);
    }
    let dir = if t1 > t0 { T::one() } else { -T::one() };
    let span = (t1 - t0).abs();

    let scale = |y: &[T; N], z: &[T; N], i: usize| tol.abs_tol + tol.rel_tol * y[i].abs().max(z[i].abs());
    let norm = |v: &[T; N], y: &[T; N], z: &[T; N]| {
        v.iter()
            .enumerate()
            .fold(T::zero(), |m, (i, &x)| m.max((x / scale(y, z, i)).abs()))
    };

    let mut t = t0;
    let mut y = y0;
    let mut k1 = rhs(t, &y);
    let mut evals = 1;
    if !finite(&k1) {
        return Err(Error::NonFiniteState { t: t.as_f64() });
    }

    // starting step from the size of y and y'
    let d0 = norm(&y, &y, &y);
    let d1 = norm(&k1, &y, &y);
    let mut h = if d0 < c(1e-5) || d1 < c(1e-5) {
        c::<T>(1e-6)
    } else {
        c::<T>(0.01) * d0 / d1
    };
    h = h.min(span).max(span * c(1e-12));

    let fifth = c::<T>(0.2);
    let safety = c::<T>(0.9);
    let (fac_min, fac_max) = (c::<T>(0.2), c::<T>(5.0));
    let mut last_rejected = false;
    loop {
        let remaining = (t1 - t) * dir;
        if remaining <= T::zero() {
            break;
        }
        let mut last = false;
        if h >= remaining {
            h = remaining;
            last = true;
        }
        if h <= c::<T>(16.0) * T::epsilon() * t.abs().max(T::one()) {
            return Err(Error::StepUnderflow {
                t: t.as_f64(),
                h: h.as_f64(),
            });
        }
        if evals + 6 > tol.max_evals {
            return Err(Error::BudgetExhausted {
                max_evals: tol.max_evals,
                value: t.as_f64(),
                error_estimate: f64::NAN,
            });
        }
        let hs = h * dir;
        let k2 = rhs(t + hs * c(C2), &axpy(&y, hs, &[(A21, &k1)]));
        let k3 = rhs(t + hs * c(C3), &axpy(&y, hs, &[(A31, &k1), (A32, &k2)]));
        let k4 = rhs(t + hs * c(C4), &axpy(&y, hs, &[(A41, &k1), (A42, &k2), (A43, &k3)]));
        let k5 = rhs(
            t + hs * c(C5),
            &axpy(&y, hs, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]),
        );
        let k6 = rhs(
            t + hs,
            &axpy(&y, hs, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]),
        );
        let t_new = if last { t1 } else { t + hs };
        let y_new = axpy(&y, hs, &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)]);
        let k7 = rhs(t_new, &y_new);
        evals += 6;

        let stages_ok = [&k2, &k3, &k4, &k5, &k6, &k7].iter().all(|k| finite(k)) && finite(&y_new);
        let err = if stages_ok {
            let zero = [T::zero(); N];
            let e = axpy(
                &zero,
                hs,
                &[(E1, &k1), (E3, &k3), (E4, &k4), (E5, &k5), (E6, &k6), (E7, &k7)],
            );
            norm(&e, &y, &y_new)
        } else {
            T::infinity()
        };

        if err <= T::one() {
            let mut coeffs = [[T::zero(); N]; 5];
            let dense = axpy(
                &[T::zero(); N],
                hs,
                &[(D1, &k1), (D3, &k3), (D4, &k4), (D5, &k5), (D6, &k6), (D7, &k7)],
            );
            for i in 0..N {
                let ydiff = y_new[i] - y[i];
                let bspl = hs * k1[i] - ydiff;
                coeffs[0][i] = y[i];
                coeffs[1][i] = ydiff;
                coeffs[2][i] = bspl;
                coeffs[3][i] = ydiff - hs * k7[i] - bspl;
                coeffs[4][i] = dense[i];
            }
            traj.steps.push(Step { t0: t, h: hs, coeffs });
            t = t_new;
            y = y_new;
            k1 = k7;
            let mut fac = if err > T::zero() {
                safety * err.powf(-fifth)
            } else {
                fac_max
            };
            fac = fac.min(fac_max).max(fac_min);
            if last_rejected {
                fac = fac.min(T::one());
            }
            h = h * fac;
            last_rejected = false;
            if last {
                break;
            }
        } else {
            if !stages_ok && h <= span * c(1e-14) {
                return Err(Error::NonFiniteState { t: t.as_f64() });
            }
            let fac = if err.is_finite() {
                (safety * err.powf(-fifth)).max(fac_min)
            } else {
                fac_min
            };
            h = h * fac.min(T::one());
            last_rejected = true;
        }
    }
    traj.y1 = y;
    traj.evaluations = evals;
    Ok(traj)
}
