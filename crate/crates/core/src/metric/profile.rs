use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{c, Scalar};

type ProfileFn<T> = Arc<dyn Fn(T) -> (T, T) + Send + Sync>;

/// Mean-curvature profile `r ↦ (H(r), H'(r))` of a warped metric on the
/// arclength chart.
///
/// Either an analytic closure supplied by the caller or a table of
/// `(r, H, H')` rows interpolated by cubic Hermite splines; in the latter case
/// `H'` is the derivative of the interpolant, so the pair stays consistent.
#[derive(Clone)]
pub struct HProfile<T> {
    eval: ProfileFn<T>,
    samples: Option<Arc<Vec<[T; 3]>>>,
}

impl<T: Scalar> HProfile<T> {
    pub fn analytic<F>(f: F) -> Self
    where
        F: Fn(T) -> (T, T) + Send + Sync + 'static,
    {
        Self {
            eval: Arc::new(f),
            samples: None,
        }
    }

    /// Interpolating profile through rows `[r, H, dH]` with strictly increasing `r`.
    pub fn sampled(rows: Vec<[T; 3]>) -> Result<Self> {
        if rows.len() < 2 {
            return Err(Error::InsufficientSamples {
                needed: 2,
                got: rows.len(),
            });
        }
        for (i, row) in rows.iter().enumerate() {
            if row.iter().any(|v| !v.is_finite()) {
                return Err(Error::InvalidInput(format!("h_samples row {i} is not finite")));
            }
            if i > 0 && !(row[0] > rows[i - 1][0]) {
                return Err(Error::InvalidInput(format!(
                    "h_samples radii must increase strictly (row {i})"
                )));
            }
        }
        let rows = Arc::new(rows);
        let table = Arc::clone(&rows);
        Ok(Self {
            eval: Arc::new(move |r| hermite(&table, r)),
            samples: Some(rows),
        })
    }

    pub fn eval(&self, r: T) -> (T, T) {
        (self.eval)(r)
    }

    /// Rows the profile was built from, if it is tabulated.
    pub fn samples(&self) -> Option<&[[T; 3]]> {
        self.samples.as_deref().map(|v| v.as_slice())
    }

    /// Tabulates the profile at `n` uniformly spaced radii on `[a, b]`.
    pub fn tabulate(&self, a: T, b: T, n: usize) -> Vec<[T; 3]> {
        let n = n.max(2);
        let last = T::from_usize(n - 1).unwrap();
        (0..n)
            .map(|i| {
                let r = if i + 1 == n {
                    b
                } else {
                    a + (b - a) * T::from_usize(i).unwrap() / last
                };
                let (h, dh) = self.eval(r);
                [r, h, dh]
            })
            .collect()
    }
}

impl<T> fmt::Debug for HProfile<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.samples {
            Some(rows) => write!(f, "HProfile::Sampled({} rows)", rows.len()),
            None => f.write_str("HProfile::Analytic"),
        }
    }
}

fn hermite<T: Scalar>(rows: &[[T; 3]], r: T) -> (T, T) {
    let n = rows.len();
    let i = rows.partition_point(|row| row[0] <= r).saturating_sub(1).min(n - 2);
    let [x0, y0, d0] = rows[i];
    let [x1, y1, d1] = rows[i + 1];
    let h = x1 - x0;
    let t = (r - x0) / h;
    let (two, three, six) = (c::<T>(2.0), c::<T>(3.0), c::<T>(6.0));
    let t2 = t * t;
    let t3 = t2 * t;
    let h00 = two * t3 - three * t2 + T::one();
    let h10 = t3 - two * t2 + t;
    let h01 = three * t2 - two * t3;
    let h11 = t3 - t2;
    let value = h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1;
    let dh00 = six * t2 - six * t;
    let dh10 = three * t2 - c::<T>(4.0) * t + T::one();
    let dh01 = six * t - six * t2;
    let dh11 = three * t2 - two * t;
    let deriv = (dh00 * y0 + dh01 * y1) / h + dh10 * d0 + dh11 * d1;
    (value, deriv)
}
