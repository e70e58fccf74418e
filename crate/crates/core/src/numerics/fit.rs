use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Least-squares slope of `ln ys` against `ln xs`.
pub fn fit_log_slope<T: Scalar>(xs: &[T], ys: &[T]) -> Result<T> {
    if xs.len() != ys.len() {
        return Err(Error::InvalidInput(format!(
            "xs and ys differ in length ({} vs {})",
            xs.len(),
            ys.len()
        )));
    }
    if xs.len() < 3 {
        return Err(Error::InsufficientPoints {
            needed: 3,
            got: xs.len(),
        });
    }
    for (i, (x, y)) in xs.iter().zip(ys).enumerate() {
        if !(*x > T::zero() && *y > T::zero() && x.is_finite() && y.is_finite()) {
            return Err(Error::NonPositiveData { index: i });
        }
    }
    let n = T::from_usize(xs.len()).unwrap();
    let lx: Vec<T> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<T> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().fold(T::zero(), |a, &b| a + b) / n;
    let my = ly.iter().fold(T::zero(), |a, &b| a + b) / n;
    let (mut sxy, mut sxx) = (T::zero(), T::zero());
    for (x, y) in lx.iter().zip(&ly) {
        sxy = sxy + (*x - mx) * (*y - my);
        sxx = sxx + (*x - mx) * (*x - mx);
    }
    if !(sxx > T::zero()) {
        return Err(Error::InvalidInput("xs must not all be equal".into()));
    }
    Ok(sxy / sxx)
}
