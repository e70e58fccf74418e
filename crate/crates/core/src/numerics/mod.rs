//! Self-contained numerical kernel: adaptive Gauss–Kronrod quadrature on finite
//! and semi-infinite intervals, an embedded Runge–Kutta integrator with dense
//! output, bracketed root finding, finite differences and log-log slope fits.
//!
//! Every routine is a pure function of its inputs and is generic over
//! [`Scalar`](crate::Scalar).

mod diff;
mod fit;
mod ode;
mod quadrature;
mod roots;

pub use diff::{central_difference, second_difference};
pub use fit::fit_log_slope;
pub use ode::{solve_ode, Trajectory};
pub use quadrature::{integrate, integrate_to_infinity, QuadratureResult};
pub use roots::find_root;

use crate::error::{Error, Result};
use crate::scalar::{c, Scalar};

/// Accuracy targets and evaluation budget shared by every numerical routine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances<T> {
    pub abs_tol: T,
    pub rel_tol: T,
    pub max_evals: usize,
}

impl<T: Scalar> Tolerances<T> {
    pub fn new(abs_tol: T, rel_tol: T, max_evals: usize) -> Result<Self> {
        let tol = Self {
            abs_tol,
            rel_tol,
            max_evals,
        };
        tol.validate()?;
        Ok(tol)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > T::zero()) || !(self.rel_tol > T::zero()) || self.max_evals == 0 {
            return Err(Error::InvalidInput(format!(
                "tolerances must be positive (abs {}, rel {}, max_evals {})",
                self.abs_tol, self.rel_tol, self.max_evals
            )));
        }
        Ok(())
    }

    /// Smallest tolerance that is still meaningful for `T`.
    pub fn floor() -> T {
        c::<T>(64.0) * T::epsilon()
    }

    /// Same budget, both tolerances divided by `factor` (never below [`Self::floor`]).
    pub fn tightened(&self, factor: f64) -> Self {
        let f = c::<T>(factor);
        Self {
            abs_tol: (self.abs_tol / f).max(Self::floor()),
            rel_tol: (self.rel_tol / f).max(Self::floor()),
            max_evals: self.max_evals,
        }
    }

    pub fn with_abs_tol(mut self, abs_tol: T) -> Self {
        self.abs_tol = abs_tol;
        self
    }

    pub fn with_rel_tol(mut self, rel_tol: T) -> Self {
        self.rel_tol = rel_tol;
        self
    }
}

impl<T: Scalar> Default for Tolerances<T> {
    /// `1e-10` absolute and relative (clamped to the precision of `T`), `10^6` evaluations.
    fn default() -> Self {
        let t = c::<T>(1e-10).max(Self::floor());
        Self {
            abs_tol: t,
            rel_tol: t,
            max_evals: 1_000_000,
        }
    }
}
