//! Isoperimetric-profile comparisons between centered coordinate balls and the
//! horizon-plus-hyperbolic-ball competitor, and the large-area volume series.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::metric::{MetricKind, RadialMetric};
use crate::numerics::{find_root, fit_log_slope, integrate_to_infinity, Tolerances};
use crate::quantities::{ball_volume, hyperbolic_ball_volume_exact, renormalized_volume, shell_volume};
use crate::scalar::{c, four_pi, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Winner {
    CoordBall,
    Generalized,
}

impl Winner {
    pub fn as_str(self) -> &'static str {
        match self {
            Winner::CoordBall => "CoordBall",
            Winner::Generalized => "Generalized",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileSample<T> {
    pub area: T,
    pub vol_coord_ball: T,
    pub vol_generalized: T,
    pub winner: Winner,
    pub mean_curvature: T,
}

fn area_radius<T: Scalar>(area: T) -> T {
    (area / four_pi::<T>()).sqrt()
}

fn check_area<T: Scalar>(metric: &RadialMetric<T>, area: T) -> Result<()> {
    let horizon = metric.horizon_area();
    if !area.is_finite() || !(area >= horizon) || (horizon == T::zero() && !(area > T::zero())) {
        return Err(Error::OutOfDomain {
            what: "area",
            value: area.as_f64(),
            lo: horizon.as_f64(),
            hi: f64::INFINITY,
        });
    }
    Ok(())
}

/// Volume of the centered coordinate ball whose boundary has area `area`.
pub fn coordinate_profile<T: Scalar>(metric: &RadialMetric<T>, area: T) -> Result<T> {
    check_area(metric, area)?;
    if metric.kind() == MetricKind::Hyperbolic {
        return hyperbolic_ball_volume_exact(area);
    }
    if area == metric.horizon_area() {
        return Ok(T::zero());
    }
    ball_volume(metric, area_radius(area))
}

/// Volume enclosed by the horizon together with a hyperbolic ball of area
/// `area − horizon_area` placed far out.
pub fn generalized_competitor<T: Scalar>(metric: &RadialMetric<T>, area: T) -> Result<T> {
    let horizon = metric.horizon_area();
    if !area.is_finite() || !(area > horizon) {
        return Err(Error::AreaBelowHorizon {
            area: area.as_f64(),
            horizon_area: horizon.as_f64(),
        });
    }
    hyperbolic_ball_volume_exact(area - horizon)
}

pub fn compare_profile<T: Scalar>(metric: &RadialMetric<T>, areas: &[T]) -> Result<Vec<ProfileSample<T>>> {
    areas
        .iter()
        .map(|&area| {
            let vol_coord_ball = coordinate_profile(metric, area)?;
            let vol_generalized = generalized_competitor(metric, area)?;
            let (h, _) = metric.mean_curvature(area_radius(area))?;
            Ok(ProfileSample {
                area,
                vol_coord_ball,
                vol_generalized,
                winner: if vol_coord_ball >= vol_generalized {
                    Winner::CoordBall
                } else {
                    Winner::Generalized
                },
                mean_curvature: h,
            })
        })
        .collect()
}

/// `(dV/dA)^{-2}` by a central difference with step `A·1e-5`, next to
/// `4 + 16π/A − 64π^{3/2}·m·A^{-3/2}`.
pub fn profile_derivative_check<T: Scalar>(metric: &RadialMetric<T>, area: T) -> Result<(T, T)> {
    check_area(metric, area)?;
    let h = area * c(1e-5);
    let lo = area - h;
    if area_radius(lo) < metric.tail_start() || !(lo > metric.horizon_area()) {
        return Err(Error::OutOfDomain {
            what: "area",
            value: area.as_f64(),
            lo: (four_pi::<T>() * metric.tail_start().powi(2) / (T::one() - c(1e-5))).as_f64(),
            hi: f64::INFINITY,
        });
    }
    let dv = shell_volume(metric, area_radius(lo), area_radius(area + h))? / (c::<T>(2.0) * h);
    let pi = T::PI();
    let formula =
        c::<T>(4.0) + c::<T>(16.0) * pi / area - c::<T>(64.0) * pi.powf(c(1.5)) * metric.mass() / (area * area.sqrt());
    Ok((dv.powi(-2), formula))
}

/// Truncations of the large-area series for the volume of coordinate balls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExpansionVariant<T> {
    /// Hyperbolic space, through `−3π²/A`.
    HyperbolicBall,
    /// Schwarzschild-AdS, through `16π^{5/2}mA^{-3/2}`.
    SchwAdSFull,
    /// Schwarzschild-AdS, through `−8π^{3/2}mA^{-1/2}`; the remainder is `O(1/A)`
    /// uniformly while `m ≤ α√A`.
    SchwAdSUniform,
    /// A compact perturbation with the given renormalized volume, through `−3π²/A`.
    CompactPerturbation(T),
}

impl<T: Scalar> ExpansionVariant<T> {
    fn has_inverse_area_term(&self) -> bool {
        !matches!(self, ExpansionVariant::SchwAdSUniform)
    }

    fn has_mass_cubic_term(&self) -> bool {
        matches!(self, ExpansionVariant::SchwAdSFull)
    }
}

/// `π(1 + log π)`, the constant of the hyperbolic series.
pub fn hyperbolic_series_constant<T: Scalar>() -> T {
    T::PI() * (T::one() + T::PI().ln())
}

fn series_core<T: Scalar>(mass: T, area: T, inverse_area_term: bool, cubic_term: bool) -> T {
    let pi = T::PI();
    let mut v = c::<T>(0.5) * area - pi * area.ln() + hyperbolic_series_constant::<T>()
        - c::<T>(8.0) * pi.powf(c(1.5)) * mass / area.sqrt();
    if inverse_area_term {
        v = v - c::<T>(3.0) * pi * pi / area;
    }
    if cubic_term {
        v = v + c::<T>(16.0) * pi.powf(c(2.5)) * mass / (area * area.sqrt());
    }
    v
}

/// The truncated series at `area`. `renorm_volume` is the constant's
/// renormalized-volume part; it is ignored by the hyperbolic variant and
/// overridden by the perturbation variant's own value.
pub fn expansion_series<T: Scalar>(mass: T, renorm_volume: T, area: T, variant: ExpansionVariant<T>) -> T {
    match variant {
        ExpansionVariant::HyperbolicBall => series_core(T::zero(), area, true, false),
        ExpansionVariant::CompactPerturbation(v) => v + series_core(mass, area, true, false),
        _ => {
            renorm_volume
                + series_core(
                    mass,
                    area,
                    variant.has_inverse_area_term(),
                    variant.has_mass_cubic_term(),
                )
        }
    }
}

/// `hyp(R) − (2πR² − 2π log R + π(1 − log 4) − (3π/4)R^{-2})` evaluated without cancellation.
fn hyperbolic_remainder<T: Scalar>(radius: T) -> T {
    let pi = T::PI();
    let x = radius.powi(-2);
    let q = (T::one() + x).sqrt() + T::one();
    let root = (radius * radius + T::one()).sqrt();
    let l = (T::one() / (c::<T>(2.0) * radius * (radius + root))).ln_1p();
    -pi * x / (q * q) - c::<T>(2.0) * pi * l + c::<T>(0.75) * pi * x
}

/// `(1+y)^{-3/2} − 1 + 3y/2` for small `y ≥ 0`.
fn three_halves_remainder<T: Scalar>(y: T) -> T {
    if y > c(0.1) {
        return (T::one() + y).powf(c(-1.5)) - T::one() + c::<T>(1.5) * y;
    }
    // alternating binomial series from the y² term on
    let mut coeff = c::<T>(1.875);
    let mut power = y * y;
    let mut sum = T::zero();
    for k in 2..80 {
        let term = coeff * power;
        sum = sum + term;
        if term.abs() <= T::epsilon() * sum.abs() {
            break;
        }
        let kk = T::from_usize(k).unwrap();
        coeff = -coeff * (kk + c(1.5)) / (kk + T::one());
        power = power * y;
    }
    sum
}

/// `4π∫_R^∞ [s²(f^{-1/2} − (1+s²)^{-1/2}) − m/s² (+ 3m/(2s⁴))] ds`.
///
/// With `b = 1 + s²` and `z = 2m/(sb)`, `s²(f^{-1/2} − b^{-1/2}) = ms·b^{-3/2} + s²b^{-1/2}z²K(z)`
/// where `K = (1 + 1/(1+w))/(2w(1+w))`, `w = √(1−z)`; the first part is expanded in `s^{-2}`,
/// so nothing cancels.
fn tail_remainder<T: Scalar>(mass: T, radius: T, cubic_term: bool, tol: &Tolerances<T>) -> Result<T> {
    if mass == T::zero() {
        return Ok(T::zero());
    }
    let two = c::<T>(2.0);
    // s = R·u, scaled by the decay rate so the quadrature sees O(m) values
    let order = if cubic_term { 5 } else { 4 };
    let scale = radius.powi(order);
    let r = integrate_to_infinity(
        |u: T| {
            let s = radius * u;
            let y = (s * s).recip();
            let b = T::one() + s * s;
            let z = two * mass / (s * b);
            let w = (T::one() - z).sqrt();
            let k = (T::one() + (T::one() + w).recip()) / (two * w * (T::one() + w));
            let mut lead = three_halves_remainder(y);
            if !cubic_term {
                lead = lead - c::<T>(1.5) * y;
            }
            (mass * y * lead + s * s / b.sqrt() * z * z * k) * scale
        },
        T::one(),
        tol,
    )?;
    Ok(four_pi::<T>() * r.value / radius.powi(order - 1))
}

/// One point of an expansion check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionPoint<T> {
    pub area: T,
    pub exact: T,
    pub series: T,
    /// `exact − series`, computed from closed-form remainders so that it keeps
    /// its relative accuracy when both volumes are huge.
    pub residual: T,
}

fn exact_variant_metric<T: Scalar>(mass: T, variant: ExpansionVariant<T>) -> Result<RadialMetric<T>> {
    if matches!(variant, ExpansionVariant::HyperbolicBall) || mass == T::zero() {
        Ok(RadialMetric::hyperbolic())
    } else {
        RadialMetric::schwarzschild_ads(mass)
    }
}

/// Compares the truncated series with the coordinate-ball volume of `metric`,
/// whose sphere of area `area` must lie in its exact tail.
pub fn expansion_point<T: Scalar>(
    metric: &RadialMetric<T>,
    area: T,
    variant: ExpansionVariant<T>,
) -> Result<ExpansionPoint<T>> {
    check_area(metric, area)?;
    let radius = area_radius(area);
    if metric.kind() != MetricKind::Hyperbolic && !(radius > metric.tail_start()) {
        return Err(Error::OutOfDomain {
            what: "area",
            value: area.as_f64(),
            lo: (four_pi::<T>() * metric.tail_start().powi(2)).as_f64(),
            hi: f64::INFINITY,
        });
    }
    let mass = metric.mass();
    let renorm = renormalized_volume(metric)?;
    let exact = coordinate_profile(metric, area)?;
    let series = expansion_series(mass, renorm, area, variant);
    let inverse_term = variant.has_inverse_area_term();
    let mut residual = hyperbolic_remainder(radius);
    if !inverse_term {
        residual = residual - c::<T>(3.0) * T::PI() * T::PI() / area;
    }
    match variant {
        ExpansionVariant::HyperbolicBall => {
            // the hyperbolic series also misses the whole renormalized-volume and mass part
            if metric.kind() != MetricKind::Hyperbolic {
                residual = residual + (exact - hyperbolic_ball_volume_exact(area)?);
            }
        }
        _ => {
            residual = residual - tail_remainder(mass, radius, variant.has_mass_cubic_term(), metric.tolerances())?;
            if let ExpansionVariant::CompactPerturbation(v) = variant {
                residual = residual + (renorm - v);
            }
        }
    }
    Ok(ExpansionPoint {
        area,
        exact,
        series,
        residual,
    })
}

/// Same as [`expansion_point`] for exact Schwarzschild-AdS of mass `mass`
/// (hyperbolic space when the mass is zero or the variant is hyperbolic).
pub fn expansion_residual<T: Scalar>(mass: T, area: T, variant: ExpansionVariant<T>) -> Result<ExpansionPoint<T>> {
    expansion_point(&exact_variant_metric(mass, variant)?, area, variant)
}

/// Like [`expansion_series`] but with the `−3π²/A` term dropped from the
/// hyperbolic variant, so the remainder is led by that term.
pub fn hyperbolic_residual_without_inverse_area<T: Scalar>(area: T) -> Result<T> {
    if !(area > T::zero()) || !area.is_finite() {
        return Err(Error::NonPositiveArea { area: area.as_f64() });
    }
    Ok(hyperbolic_remainder(area_radius(area)) - c::<T>(3.0) * T::PI() * T::PI() / area)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpansionReport<T> {
    pub areas: Vec<T>,
    pub exact: Vec<T>,
    pub series: Vec<T>,
    /// `|exact − series|`.
    pub residuals: Vec<T>,
    pub fitted_order: T,
}

fn check_area_grid<T: Scalar>(areas: &[T]) -> Result<()> {
    if areas.len() < 4 {
        return Err(Error::InsufficientPoints {
            needed: 4,
            got: areas.len(),
        });
    }
    let lo = areas.iter().copied().fold(T::infinity(), T::min);
    let hi = areas.iter().copied().fold(T::neg_infinity(), T::max);
    if !(lo > T::zero()) || !(hi / lo >= c(1e3 * (1.0 - 1e-12))) {
        return Err(Error::InvalidInput(format!(
            "areas must be positive and span at least three decades (got {lo}..{hi})"
        )));
    }
    Ok(())
}

/// Residuals of the series against the coordinate-ball volumes of `metric`,
/// with the log-log slope of `|residual|` against the area.
pub fn expansion_report<T: Scalar>(
    metric: &RadialMetric<T>,
    areas: &[T],
    variant: ExpansionVariant<T>,
) -> Result<ExpansionReport<T>> {
    check_area_grid(areas)?;
    let mut report = ExpansionReport {
        areas: Vec::with_capacity(areas.len()),
        exact: Vec::with_capacity(areas.len()),
        series: Vec::with_capacity(areas.len()),
        residuals: Vec::with_capacity(areas.len()),
        fitted_order: T::nan(),
    };
    for &area in areas {
        let p = expansion_point(metric, area, variant)?;
        report.areas.push(area);
        report.exact.push(p.exact);
        report.series.push(p.series);
        report.residuals.push(p.residual.abs());
    }
    report.fitted_order = fit_log_slope(&report.areas, &report.residuals)?;
    Ok(report)
}

/// [`expansion_report`] on exact Schwarzschild-AdS of mass `mass`.
pub fn expansion_residual_order<T: Scalar>(
    mass: T,
    areas: &[T],
    variant: ExpansionVariant<T>,
) -> Result<ExpansionReport<T>> {
    expansion_report(&exact_variant_metric(mass, variant)?, areas, variant)
}

/// Inverts `f` (increasing) for the value `target`, starting from the guess `est`.
fn invert_increasing<T: Scalar>(
    f: impl Fn(T) -> Result<T>,
    target: T,
    est: T,
    floor: T,
    what: &'static str,
) -> Result<T> {
    let fail = || Error::InversionFailure {
        what,
        target: target.as_f64(),
    };
    let mut width = est.abs().max(T::one()) * c(1e-3);
    let (mut lo, mut hi) = ((est - width).max(floor), est + width);
    let mut expansions = 0;
    while f(lo)? > target || f(hi)? < target {
        expansions += 1;
        if expansions > 60 {
            return Err(fail());
        }
        width = width * c(4.0);
        lo = (est - width).max(floor);
        hi = est + width;
    }
    let tol = Tolerances::new(c::<T>(1e-12) * est.abs().max(T::one()), T::epsilon() * c(4.0), 10_000)?;
    let value = |a: T| f(a).map(|v| v - target).unwrap_or_else(|_| T::nan());
    find_root(value, lo, hi, &tol).map_err(|_| fail())
}

/// Area of the hyperbolic ball holding volume `volume`.
pub fn hyperbolic_area_for_volume<T: Scalar>(volume: T) -> Result<T> {
    if !(volume > T::zero()) || !volume.is_finite() {
        return Err(Error::InvalidInput(format!("volume must be positive, got {volume}")));
    }
    let est = if volume > c(10.0) {
        let v2 = c::<T>(2.0) * volume;
        v2 + c::<T>(2.0) * T::PI() * v2.ln() - c::<T>(2.0) * hyperbolic_series_constant::<T>()
    } else {
        // small balls are nearly Euclidean: V = A^{3/2}/(6√π)
        (c::<T>(6.0) * T::PI().sqrt() * volume).powf(c(2.0 / 3.0))
    };
    invert_increasing(
        hyperbolic_ball_volume_exact,
        volume,
        est,
        T::min_positive_value(),
        "hyperbolic area",
    )
}

/// For each volume `V`, the area `A_g(V)` of the coordinate ball of `metric`
/// holding it, the hyperbolic area `A(V)`, and `(A_g − A + 2·V(M, g))·√V`.
///
/// Whether coordinate balls are isoperimetric at these volumes is the caller's
/// responsibility.
pub fn profile_expansion_check<T: Scalar>(metric: &RadialMetric<T>, volumes: &[T]) -> Result<Vec<(T, T)>> {
    let renorm = renormalized_volume(metric)?;
    let horizon = metric.horizon_area();
    volumes
        .iter()
        .map(|&volume| {
            let a_hyp = hyperbolic_area_for_volume(volume)?;
            let est = (a_hyp - c::<T>(2.0) * renorm).max(horizon * c(1.0 + 1e-9));
            let a_g = invert_increasing(
                |a| coordinate_profile(metric, a),
                volume,
                est,
                horizon,
                "coordinate-ball area",
            )?;
            Ok((volume, (a_g - a_hyp + c::<T>(2.0) * renorm) * volume.sqrt()))
        })
        .collect()
}

/// `8√2·π^{3/2}`, the coefficient of `m·V^{-1/2}` in the large-volume profile.
pub fn profile_mass_coefficient<T: Scalar>() -> T {
    c::<T>(8.0) * c::<T>(2.0).sqrt() * T::PI().powf(c(1.5))
}
