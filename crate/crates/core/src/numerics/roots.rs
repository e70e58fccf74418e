use super::Tolerances;
use crate::error::{Error, Result};
use crate::scalar::{c, Scalar};

/// Bracketed root of `f` on `[lo, hi]`.
///
/// Illinois-modified regula falsi, falling back to bisection whenever a step
/// fails to halve the bracket. Stops once the bracket is narrower than
/// `max(abs_tol, 4ε|x|)` or `f` vanishes exactly.
pub fn find_root<T, F>(mut f: F, lo: T, hi: T, tol: &Tolerances<T>) -> Result<T>
where
    T: Scalar,
    F: FnMut(T) -> T,
{
    tol.validate()?;
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut fa = f(a);
    let mut fb = f(b);
    let mut evals = 2;
    if !fa.is_finite() {
        return Err(Error::NonFiniteValue { x: a.as_f64() });
    }
    if !fb.is_finite() {
        return Err(Error::NonFiniteValue { x: b.as_f64() });
    }
    if fa == T::zero() {
        return Ok(a);
    }
    if fb == T::zero() {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoSignChange {
            lo: a.as_f64(),
            hi: b.as_f64(),
            f_lo: fa.as_f64(),
            f_hi: fb.as_f64(),
        });
    }

    let half = c::<T>(0.5);
    let four_eps = c::<T>(4.0) * T::epsilon();
    // which end was retained on the previous step (-1 left, 1 right)
    let mut side = 0i8;
    let mut bisect_next = false;
    loop {
        let width = b - a;
        let guess = if fa.abs() < fb.abs() { a } else { b };
        if width <= tol.abs_tol.max(four_eps * guess.abs()) {
            return Ok(guess);
        }
        if evals >= tol.max_evals {
            return Err(Error::BudgetExhausted {
                max_evals: tol.max_evals,
                value: guess.as_f64(),
                error_estimate: width.as_f64(),
            });
        }
        let mut x = if bisect_next {
            half * (a + b)
        } else {
            (a * fb - b * fa) / (fb - fa)
        };
        if !(x > a && x < b) {
            x = half * (a + b);
        }
        let fx = f(x);
        evals += 1;
        if !fx.is_finite() {
            return Err(Error::NonFiniteValue { x: x.as_f64() });
        }
        if fx == T::zero() {
            return Ok(x);
        }
        if fx.signum() == fa.signum() {
            a = x;
            fa = fx;
            if side == 1 {
                fb = fb * half;
            }
            side = 1;
        } else {
            b = x;
            fb = fx;
            if side == -1 {
                fa = fa * half;
            }
            side = -1;
        }
        bisect_next = !bisect_next && (b - a) > half * width;
    }
}
