use crate::scalar::{c, Scalar};

/// Symmetric first difference `(f(x+h) - f(x-h)) / 2h`.
pub fn central_difference<T: Scalar, F: FnMut(T) -> T>(mut f: F, x: T, h: T) -> T {
    (f(x + h) - f(x - h)) / (c::<T>(2.0) * h)
}

/// Symmetric second difference `(f(x+h) - 2f(x) + f(x-h)) / h²`.
pub fn second_difference<T: Scalar, F: FnMut(T) -> T>(mut f: F, x: T, h: T) -> T {
    (f(x + h) - c::<T>(2.0) * f(x) + f(x - h)) / (h * h)
}
