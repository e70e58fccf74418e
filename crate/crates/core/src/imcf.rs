//! Inverse mean curvature flow of centered spheres and the volume bounds built on it.
//!
//! A centered sphere flows through centered spheres with area `e^t·A₀`, so the
//! flow is explicit; everything else is quadrature.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::RadialMetric;
use crate::numerics::{integrate, integrate_to_infinity, Tolerances};
use crate::quantities::{shell_volume, sphere_geometry};
use crate::scalar::{c, four_pi, Scalar};

/// Tolerance below which a drop in Hawking mass still counts as monotone.
pub const GEROCH_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FlowSample<T> {
    pub t: T,
    pub area: T,
    pub s: T,
    pub mean_curvature: T,
    pub hawking_mass: T,
    /// Volume between the initial sphere and this one.
    pub swept_volume: T,
    /// Swept-volume lower bound integrated up to `t`, with the initial Hawking mass.
    pub lower_bound: T,
}

/// `A_t / H_t` for a sphere of area `A_t = e^t·A` and Hawking mass `m`, written as
/// `e^{3t/2}A^{3/2}(4e^tA + 16π − e^{-t/2}A^{-1/2}(16π)^{3/2}m)^{-1/2}`.
/// `None` when the bracket is not positive.
fn sweep_rate<T: Scalar>(area: T, m: T, t: T) -> Option<T> {
    let at = t.exp() * area;
    let sixteen_pi = c::<T>(16.0) * T::PI();
    let bracket = c::<T>(4.0) * at + sixteen_pi - sixteen_pi.powf(c(1.5)) * m / at.sqrt();
    (bracket > T::zero()).then(|| at * (at / bracket).sqrt())
}

fn sweep_integral<T: Scalar>(area: T, m: T, a: T, b: T, tol: &Tolerances<T>) -> Result<T> {
    if b <= a {
        return Ok(T::zero());
    }
    for t in [a, b] {
        if sweep_rate(area, m, t).is_none() {
            return Err(Error::IntegrandNonPositive { t: t.as_f64() });
        }
    }
    let mut bad = None;
    let r = integrate(
        |t| {
            sweep_rate(area, m, t).unwrap_or_else(|| {
                bad.get_or_insert(t);
                T::zero()
            })
        },
        a,
        b,
        tol,
    )?;
    if let Some(t) = bad {
        return Err(Error::IntegrandNonPositive { t: t.as_f64() });
    }
    Ok(r.value)
}

/// Lower bound on the volume swept by the flow from a surface of area `area0`
/// and Hawking mass at least `m` up to time `tau`.
pub fn swept_volume_lower_bound<T: Scalar>(area0: T, m: T, tau: T) -> Result<T> {
    swept_volume_lower_bound_with(area0, m, tau, &Tolerances::default())
}

pub fn swept_volume_lower_bound_with<T: Scalar>(area0: T, m: T, tau: T, tol: &Tolerances<T>) -> Result<T> {
    if !(area0 > T::zero()) || !area0.is_finite() {
        return Err(Error::NonPositiveArea { area: area0.as_f64() });
    }
    if !(tau >= T::zero()) || !tau.is_finite() {
        return Err(Error::InvalidInput(format!(
            "flow time must be non-negative, got {tau}"
        )));
    }
    sweep_integral(area0, m, T::zero(), tau, tol)
}

/// Flow of the centered sphere of area `area0` sampled at `n + 1` uniform times in `[0, t_max]`.
pub fn flow_spheres<T: Scalar>(metric: &RadialMetric<T>, area0: T, t_max: T, n: usize) -> Result<Vec<FlowSample<T>>> {
    if n < 2 {
        return Err(Error::InsufficientSamples { needed: 2, got: n });
    }
    if !(t_max > T::zero()) || !t_max.is_finite() {
        return Err(Error::InvalidInput(format!("t_max must be positive, got {t_max}")));
    }
    let horizon = metric.horizon_area();
    let slack = c::<T>(1e-12) * horizon;
    if !(area0 > T::zero()) || !(area0 >= horizon - slack) || !area0.is_finite() {
        return Err(Error::OutOfDomain {
            what: "area0",
            value: area0.as_f64(),
            lo: horizon.as_f64(),
            hi: f64::INFINITY,
        });
    }
    let tol = metric.tolerances();
    let s0 = (area0 / four_pi::<T>()).sqrt().max(metric.inner_radius());
    let first = sphere_geometry(metric, s0)?;
    let m0 = first.hawking_mass;
    let half = c::<T>(0.5);
    let count = T::from_usize(n).unwrap();

    let mut samples = Vec::with_capacity(n + 1);
    samples.push(FlowSample {
        t: T::zero(),
        area: area0,
        s: s0,
        mean_curvature: first.mean_curvature,
        hawking_mass: m0,
        swept_volume: T::zero(),
        lower_bound: T::zero(),
    });
    let (mut swept, mut lower) = (T::zero(), T::zero());
    let (mut t_prev, mut s_prev) = (T::zero(), s0);
    for i in 1..=n {
        let t = t_max * T::from_usize(i).unwrap() / count;
        let s = s0 * (half * t).exp();
        let geo = sphere_geometry(metric, s)?;
        swept = swept + shell_volume(metric, s_prev, s)?;
        lower = lower + sweep_integral(area0, m0, t_prev, t, tol)?;
        samples.push(FlowSample {
            t,
            area: t.exp() * area0,
            s,
            mean_curvature: geo.mean_curvature,
            hawking_mass: geo.hawking_mass,
            swept_volume: swept,
            lower_bound: lower,
        });
        t_prev = t;
        s_prev = s;
    }
    Ok(samples)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GerochAudit<T> {
    /// Smallest change of Hawking mass between consecutive samples.
    pub min_increment: T,
    pub monotone: bool,
}

pub fn geroch_audit<T: Scalar>(samples: &[FlowSample<T>]) -> Result<GerochAudit<T>> {
    if samples.len() < 2 {
        return Err(Error::InsufficientSamples {
            needed: 2,
            got: samples.len(),
        });
    }
    let min_increment = samples
        .windows(2)
        .map(|w| w[1].hawking_mass - w[0].hawking_mass)
        .fold(T::infinity(), T::min);
    Ok(GerochAudit {
        min_increment,
        monotone: min_increment >= -c::<T>(GEROCH_TOL),
    })
}

/// Upper bound `log(1 + (A_J/A_Ω)e^{-T})` on the extra growth exponent after a jump at time `T`.
pub fn jump_growth_bound<T: Scalar>(area_omega: T, area_jump: T, jump_time: T) -> Result<T> {
    if !(area_omega >= T::one()) {
        return Err(Error::HypothesisViolated(format!(
            "area of ∂Ω must be at least 1, got {area_omega}"
        )));
    }
    if !(area_jump >= T::zero()) || !(jump_time >= T::zero()) {
        return Err(Error::InvalidInput(format!(
            "jump area and jump time must be non-negative (got {area_jump}, {jump_time})"
        )));
    }
    Ok((area_jump / area_omega * (-jump_time).exp()).ln_1p())
}

/// Uniform bound `½·A_J` on the extra volume attributable to one jump.
pub fn jump_volume_excess<T: Scalar>(area_jump: T) -> T {
    c::<T>(0.5) * area_jump
}

/// The sweep integral over the jump interval `[T, T + β]` with `β` at its bound
/// and Hawking mass `m`.
pub fn jump_interval_integral<T: Scalar>(area: T, area_jump: T, jump_time: T, m: T, tol: &Tolerances<T>) -> Result<T> {
    let beta = jump_growth_bound(area, area_jump, jump_time)?;
    sweep_integral(area, m, jump_time, jump_time + beta, tol)
}

/// `∫_0^∞ e^{3t/2}A^{3/2}[(4e^tA + 16π)^{-1/2} − (4e^tA + 16π(1 + e^{-t/2}/3))^{-1/2}] dt`.
pub fn coarse_error_integral<T: Scalar>(area: T) -> Result<T> {
    coarse_error_integral_with(area, &Tolerances::default())
}

pub fn coarse_error_integral_with<T: Scalar>(area: T, tol: &Tolerances<T>) -> Result<T> {
    if !(area > T::zero()) || !area.is_finite() {
        return Err(Error::NonPositiveArea { area: area.as_f64() });
    }
    let sixteen_pi = c::<T>(16.0) * T::PI();
    let third = c::<T>(1.0 / 3.0);
    // dividing through by (e^t A)^{3/2} keeps every factor bounded
    let r = integrate_to_infinity(
        |t: T| {
            let decay = (-t).exp() / area;
            let a = c::<T>(4.0) + sixteen_pi * decay;
            let d = sixteen_pi * third * (-c::<T>(0.5) * t).exp();
            let b = a + d * decay;
            let (ra, rb) = (a.sqrt(), b.sqrt());
            d / (ra * rb * (ra + rb))
        },
        T::zero(),
        tol,
    )?;
    Ok(r.value)
}
