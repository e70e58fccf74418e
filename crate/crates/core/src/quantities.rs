//! Scalar functionals of centered spheres and of whole metrics.
//!
//! Volumes are always measured outside the horizon.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::{inverse_root_difference, MetricKind, RadialMetric};
use crate::numerics::{integrate, integrate_to_infinity, Tolerances};
use crate::scalar::{c, four_pi, Scalar};

/// Geometry of the centered coordinate sphere of area radius `s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SphereGeom<T> {
    pub s: T,
    pub area: T,
    pub mean_curvature: T,
    pub hawking_mass: T,
    pub scalar_curvature: T,
    /// `|Å|²`, zero because coordinate spheres are umbilic.
    pub traceless_sff_norm_sq: T,
}

/// `area·(H² − 4)` of the sphere of area radius `s`, evaluated without
/// cancellation in the exact region, where it equals `16π(1 − 2m/s)`.
fn willmore_excess<T: Scalar>(metric: &RadialMetric<T>, s: T, h: T) -> T {
    let area = four_pi::<T>() * s * s;
    if s >= metric.tail_start() {
        let m = metric.mass();
        c::<T>(16.0) * T::PI() * (T::one() - c::<T>(2.0) * m / s)
    } else {
        let two = c::<T>(2.0);
        area * (h - two) * (h + two)
    }
}

/// Hawking mass `√A/(16π)^{3/2}·(16π − A(H² − 4))` of a constant-`H` sphere.
fn hawking_mass_from<T: Scalar>(area: T, excess: T) -> T {
    let sixteen_pi = c::<T>(16.0) * T::PI();
    area.sqrt() / sixteen_pi.powf(c(1.5)) * (sixteen_pi - excess)
}

pub fn sphere_geometry<T: Scalar>(metric: &RadialMetric<T>, s: T) -> Result<SphereGeom<T>> {
    let (h, _) = metric.mean_curvature(s)?;
    let s = s.max(metric.inner_radius());
    let area = four_pi::<T>() * s * s;
    let excess = willmore_excess(metric, s, h);
    Ok(SphereGeom {
        s,
        area,
        mean_curvature: h,
        hawking_mass: hawking_mass_from(area, excess),
        scalar_curvature: metric.scalar_curvature(s)?,
        traceless_sff_norm_sq: T::zero(),
    })
}

/// Hawking mass of the centered sphere of area radius `s`.
pub fn hawking_mass<T: Scalar>(metric: &RadialMetric<T>, s: T) -> Result<T> {
    let (h, _) = metric.mean_curvature(s)?;
    let s = s.max(metric.inner_radius());
    let area = four_pi::<T>() * s * s;
    Ok(hawking_mass_from(area, willmore_excess(metric, s, h)))
}

/// Volume of the hyperbolic ball of radius `R` (area radius), `2πR√(R²+1) − 2π sinh⁻¹R`.
///
/// Small balls use the power series of `4π∫_0^R σ²(1+σ²)^{-1/2}` to avoid the
/// cancellation between the two closed-form terms.
pub fn hyperbolic_ball_volume_radius<T: Scalar>(radius: T) -> T {
    let two_pi = c::<T>(2.0) * T::PI();
    if radius < c(0.5) {
        let x = radius * radius;
        let mut coeff = T::one();
        let mut power = radius * x;
        let mut sum = T::zero();
        for k in 0..60 {
            let kk = T::from_usize(k).unwrap();
            let term = coeff * power / (c::<T>(2.0) * kk + c(3.0));
            sum = sum + term;
            if term.abs() <= T::epsilon() * sum.abs() {
                break;
            }
            // binom(-1/2, k+1) / binom(-1/2, k)
            coeff = coeff * (-(kk + c(0.5))) / (kk + T::one());
            power = power * x;
        }
        return c::<T>(2.0) * two_pi * sum;
    }
    two_pi * radius * (radius * radius + T::one()).sqrt() - two_pi * radius.asinh()
}

/// Closed-form volume of the hyperbolic ball with boundary area `area`.
pub fn hyperbolic_ball_volume_exact<T: Scalar>(area: T) -> Result<T> {
    if !(area > T::zero()) || !area.is_finite() {
        return Err(Error::NonPositiveArea { area: area.as_f64() });
    }
    Ok(hyperbolic_ball_volume_radius((area / four_pi::<T>()).sqrt()))
}

/// `4π∫_a^b s²(f^{-1/2} − (1+s²)^{-1/2}) ds` for the potential of mass `m`.
fn density_difference<T: Scalar>(m: T, a: T, b: T, tol: &Tolerances<T>) -> Result<T> {
    if m == T::zero() || b <= a {
        return Ok(T::zero());
    }
    let r = integrate(|s| s * s * inverse_root_difference(m, s), a, b, tol)?;
    Ok(four_pi::<T>() * r.value)
}

/// `4π∫_a^∞ s²(f^{-1/2} − (1+s²)^{-1/2}) ds`: the volume an exact tail of
/// mass `m` beyond `a` holds in excess of hyperbolic space.
pub(crate) fn tail_density_difference<T: Scalar>(m: T, a: T, tol: &Tolerances<T>) -> Result<T> {
    if m == T::zero() {
        return Ok(T::zero());
    }
    let r = integrate_to_infinity(|s| s * s * inverse_root_difference(m, s), a, tol).map_err(|e| match e {
        Error::DivergenceDetected { .. } => Error::TailDivergence,
        other => other,
    })?;
    Ok(four_pi::<T>() * r.value)
}

/// Volume of the coordinate ball `{σ ≤ s}` outside the horizon.
pub fn ball_volume<T: Scalar>(metric: &RadialMetric<T>, s: T) -> Result<T> {
    let s = metric.chart_point(s)?.s;
    let tol = metric.tolerances();
    match metric.kind() {
        MetricKind::Hyperbolic => {
            if s == T::zero() {
                return Ok(T::zero());
            }
            let r = integrate(
                |x| four_pi::<T>() * x * x / (T::one() + x * x).sqrt(),
                T::zero(),
                s,
                tol,
            )?;
            Ok(r.value)
        }
        MetricKind::SchwarzschildAds => {
            let m = metric.mass();
            let sh = metric.inner_radius();
            Ok(hyperbolic_ball_volume_radius(s) - hyperbolic_ball_volume_radius(sh)
                + density_difference(m, sh, s, tol)?)
        }
        MetricKind::HProfile => {
            let s1 = metric.tail_start();
            let inner = metric.profile_volume(s).expect("profile metric")?;
            if s <= s1 {
                return Ok(inner);
            }
            Ok(
                inner + hyperbolic_ball_volume_radius(s) - hyperbolic_ball_volume_radius(s1)
                    + density_difference(metric.mass(), s1, s, tol)?,
            )
        }
    }
}

/// Volume between the spheres of area radius `a ≤ b`.
pub fn shell_volume<T: Scalar>(metric: &RadialMetric<T>, a: T, b: T) -> Result<T> {
    if b < a {
        return Ok(-shell_volume(metric, b, a)?);
    }
    let tol = metric.tolerances();
    let sa = metric.chart_point(a)?.s;
    let sb = metric.chart_point(b)?.s;
    let start = metric.tail_start();
    if metric.kind() != MetricKind::Hyperbolic && sa >= start {
        // exact region: closed-form hyperbolic part plus a decaying correction
        return Ok(hyperbolic_ball_volume_radius(sb) - hyperbolic_ball_volume_radius(sa)
            + density_difference(metric.mass(), sa, sb, tol)?);
    }
    Ok(ball_volume(metric, sb)? - ball_volume(metric, sa)?)
}

/// Renormalized volume: `lim_S [vol(B_S ∩ M) − vol_hyp(B_S)]`.
pub fn renormalized_volume<T: Scalar>(metric: &RadialMetric<T>) -> Result<T> {
    let tol = metric.tolerances();
    match metric.kind() {
        MetricKind::Hyperbolic => Ok(T::zero()),
        MetricKind::SchwarzschildAds => {
            let sh = metric.inner_radius();
            Ok(tail_density_difference(metric.mass(), sh, tol)? - hyperbolic_ball_volume_radius(sh))
        }
        MetricKind::HProfile => {
            let s1 = metric.tail_start();
            let inner = metric.profile_volume(s1).expect("profile metric")?;
            Ok(inner - hyperbolic_ball_volume_radius(s1) + tail_density_difference(metric.mass(), s1, tol)?)
        }
    }
}

/// `dV/dm = −16πm + 4π∫_{2m}^∞ s(1 + s² − 2m/s)^{-3/2} ds` for Schwarzschild-AdS.
pub fn renormalized_volume_derivative<T: Scalar>(mass: T) -> Result<T> {
    renormalized_volume_derivative_with(mass, &Tolerances::default())
}

pub fn renormalized_volume_derivative_with<T: Scalar>(mass: T, tol: &Tolerances<T>) -> Result<T> {
    if !(mass > T::zero()) || !mass.is_finite() {
        return Err(Error::NonPositiveMass { mass: mass.as_f64() });
    }
    let two = c::<T>(2.0);
    let integral = integrate_to_infinity(
        |s| {
            let f = T::one() + s * s - two * mass / s;
            s / (f * f.sqrt())
        },
        two * mass,
        tol,
    )?;
    Ok(-c::<T>(16.0) * T::PI() * mass + four_pi::<T>() * integral.value)
}

/// `V(M, g) + ½·(horizon area)`.
pub fn penrose_margin<T: Scalar>(metric: &RadialMetric<T>) -> Result<T> {
    if metric.horizon_radius().is_none() {
        return Err(Error::NoHorizon);
    }
    Ok(renormalized_volume(metric)? + c::<T>(0.5) * metric.horizon_area())
}

/// Christodoulou–Yau quantities of the coordinate sphere of area radius `s`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ChristodoulouYau<T> {
    /// `∫(R + 6) + |Å|²`, i.e. `area·(R + 6)` on umbilic spheres.
    pub lhs: T,
    /// `(3/2)·area^{-1/2}·(16π)^{3/2}·m_H`.
    pub rhs_genus0: T,
    /// `rhs_genus0 + 8π`.
    pub rhs_general: T,
    /// `(2/3)·lhs + area·(H² − 4)`, to be compared with `64π/3`.
    pub combined_lhs: T,
}

pub fn christodoulou_yau<T: Scalar>(metric: &RadialMetric<T>, s: T) -> Result<ChristodoulouYau<T>> {
    let g = sphere_geometry(metric, s)?;
    let lhs = g.area * (g.scalar_curvature + c(6.0));
    let sixteen_pi = c::<T>(16.0) * T::PI();
    let rhs_genus0 = c::<T>(1.5) * g.area.sqrt().recip() * sixteen_pi.powf(c(1.5)) * g.hawking_mass;
    let excess = willmore_excess(metric, g.s, g.mean_curvature);
    Ok(ChristodoulouYau {
        lhs,
        rhs_genus0,
        rhs_general: rhs_genus0 + c::<T>(8.0) * T::PI(),
        combined_lhs: c::<T>(2.0) / c(3.0) * lhs + excess,
    })
}

/// Upper bound `max(−2 Ric(ν,ν), 64π/(3A) + 4)` for `H²` of stable CMC spheres.
pub fn stable_cmc_h_bound<T: Scalar>(metric: &RadialMetric<T>, s: T) -> Result<T> {
    let ric = metric.ricci_normal(s)?;
    let s = s.max(metric.inner_radius());
    let area = four_pi::<T>() * s * s;
    let branch = c::<T>(64.0) * T::PI() / (c::<T>(3.0) * area) + c(4.0);
    Ok((-c::<T>(2.0) * ric).max(branch))
}
