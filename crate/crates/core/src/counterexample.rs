//! A compact perturbation of Schwarzschild-AdS whose scalar curvature dips far
//! below −6, and a verifier showing that its large coordinate balls hold less
//! volume than a horizon-plus-hyperbolic-ball competitor.
//!
//! On `[r0, r0 + 1]` the mean curvature is
//! `H = (1 − w)(2 + κρ² + a·b) + w·H_tail` with `ρ = r − r0`, a normalized
//! mollifier bump `b`, a quintic transition `w` on `[r0 + ½, r0 + 1]` and the
//! exact-tail mean curvature `H_tail`. The amplitude `a` makes `φ(r0 + 1) = s1`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::isoprofile::{compare_profile, coordinate_profile, ProfileSample, Winner};
use crate::metric::{chart_rhs, exact_dh, exact_h, internal_tol, HProfile, RadialMetric};
use crate::numerics::{find_root, integrate, solve_ode, Tolerances, Trajectory};
use crate::quantities::{hyperbolic_ball_volume_exact, penrose_margin, renormalized_volume};
use crate::scalar::{c, Scalar};

/// Slope of the quadratic lift `κρ²` that keeps `H > 2` between the bump and the transition.
pub const RAMP_SLOPE: f64 = 0.1;

/// Grid size for the scalar-curvature minimum in [`verify`].
pub const CURVATURE_GRID: usize = 1000;

/// Slack on the verdict thresholds.
pub const VERDICT_TOL: f64 = 1e-6;

const POSITIVITY_GRID: usize = 4000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleParams<T> {
    pub r0: T,
    /// Warp at `r0`; the horizon area is `4π·eps²`.
    pub eps: T,
    pub mass: T,
    /// Area radius reached at `r0 + 1`, where the exact tail begins.
    pub s1: T,
    pub bump_width: T,
}

impl<T: Scalar> CounterexampleParams<T> {
    /// Parameters with `s1 = sinh(r0 + 1)` and bump width `0.4`.
    pub fn new(r0: T, eps: T, mass: T) -> Self {
        Self {
            r0,
            eps,
            mass,
            s1: (r0 + T::one()).sinh(),
            bump_width: c(0.4),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidInput(msg));
        if !(self.r0 > T::zero()) || !self.r0.is_finite() {
            return bad(format!("r0 must be positive, got {}", self.r0));
        }
        if !(self.eps > T::zero()) || !self.eps.is_finite() {
            return bad(format!("eps must be positive, got {}", self.eps));
        }
        if !(self.mass > T::zero()) || !self.mass.is_finite() {
            return Err(Error::NonPositiveMass {
                mass: self.mass.as_f64(),
            });
        }
        if !(self.s1 > c::<T>(2.0) * self.mass) || !self.s1.is_finite() {
            return bad(format!("s1 = {} must exceed 2·mass", self.s1));
        }
        if !(self.bump_width > T::zero() && self.bump_width <= c(0.5)) {
            return bad(format!("bump width must lie in (0, 1/2], got {}", self.bump_width));
        }
        Ok(())
    }
}

impl<T: Scalar> Default for CounterexampleParams<T> {
    fn default() -> Self {
        Self::new(c(10.0), c(0.1), T::one())
    }
}

fn mollifier<T: Scalar>(x: T) -> T {
    if x <= T::zero() || x >= T::one() {
        T::zero()
    } else {
        (-(x * (T::one() - x)).recip()).exp()
    }
}

fn mollifier_deriv<T: Scalar>(x: T) -> T {
    if x <= T::zero() || x >= T::one() {
        T::zero()
    } else {
        let q = x * (T::one() - x);
        mollifier(x) * (T::one() - c::<T>(2.0) * x) / (q * q)
    }
}

fn smoothstep<T: Scalar>(x: T) -> (T, T) {
    if x <= T::zero() {
        return (T::zero(), T::zero());
    }
    if x >= T::one() {
        return (T::one(), T::zero());
    }
    let x2 = x * x;
    let value = x2 * x * (c::<T>(10.0) - c::<T>(15.0) * x + c::<T>(6.0) * x2);
    let y = T::one() - x;
    (value, c::<T>(30.0) * x2 * y * y)
}

/// `H` on `[r0, r0 + 1]` for a given amplitude.
struct Shape<T> {
    params: CounterexampleParams<T>,
    norm: T,
    // ln ψ of the exact tail, backwards from r0 + 1 to r0 + ½
    tail: Trajectory<T, 1>,
}

impl<T: Scalar> Shape<T> {
    fn bump(&self, r: T) -> (T, T) {
        let w = self.params.bump_width;
        let x = (r - self.params.r0) / w;
        (mollifier(x) / (self.norm * w), mollifier_deriv(x) / (self.norm * w * w))
    }

    fn blend(&self, r: T) -> (T, T) {
        let half = c::<T>(0.5);
        let (w, dw) = smoothstep((r - self.params.r0 - half) / half);
        (w, dw / half)
    }

    fn tail_h(&self, r: T) -> (T, T) {
        let start = self.params.r0 + c(0.5);
        let end = self.params.r0 + T::one();
        let r = r.max(start).min(end);
        let psi = self.tail.eval(r).map(|y| y[0].exp()).unwrap_or_else(|_| T::nan());
        (exact_h(self.params.mass, psi), exact_dh(self.params.mass, psi))
    }

    fn eval(&self, amplitude: T, r: T) -> (T, T) {
        let rho = r - self.params.r0;
        let kappa = c::<T>(RAMP_SLOPE);
        let (b, db) = self.bump(r);
        let (w, dw) = self.blend(r);
        let base = c::<T>(2.0) + kappa * rho * rho + amplitude * b;
        let dbase = c::<T>(2.0) * kappa * rho + amplitude * db;
        if w == T::zero() && dw == T::zero() {
            return (base, dbase);
        }
        let (ht, dht) = self.tail_h(r);
        let one_minus = T::one() - w;
        (
            one_minus * base + w * ht,
            -dw * base + one_minus * dbase + dw * ht + w * dht,
        )
    }
}

/// Builds the counterexample metric.
pub fn construct<T: Scalar>(params: CounterexampleParams<T>) -> Result<RadialMetric<T>> {
    construct_with_tolerances(params, Tolerances::default())
}

pub fn construct_with_tolerances<T: Scalar>(
    params: CounterexampleParams<T>,
    tol: Tolerances<T>,
) -> Result<RadialMetric<T>> {
    params.validate()?;
    tol.validate()?;
    let itol = internal_tol(&tol);
    let (r0, end) = (params.r0, params.r0 + T::one());
    // H > 2 on a unit interval grows the warp by more than a factor e
    if !(params.s1 > params.eps * T::one().exp()) {
        return Err(Error::InfeasibleParameters(format!(
            "s1 = {} must exceed e·eps = {}",
            params.s1,
            params.eps * T::one().exp()
        )));
    }

    let norm = integrate(mollifier, T::zero(), T::one(), &itol)?.value;
    let tail = solve_ode(chart_rhs(params.mass), end, [params.s1.ln()], r0 + c(0.5), &itol)
        .map_err(|e| Error::MatchingFailed(format!("exact tail does not reach back to r0 + 1/2: {e}")))?;
    let shape = Shape { params, norm, tail };

    // ∫H is affine in the amplitude
    let base = integrate(|r| shape.eval(T::zero(), r).0, r0, end, &itol)?.value;
    let slope = integrate(
        |r| shape.eval(T::one(), r).0 - shape.eval(T::zero(), r).0,
        r0,
        end,
        &itol,
    )?
    .value;
    let target = c::<T>(2.0) * (params.s1 / params.eps).ln();
    let excess = |a: T| base + a * slope - target;
    if !(excess(T::zero()) < T::zero()) {
        return Err(Error::InfeasibleParameters(format!(
            "the unbumped profile already grows the warp past s1 (∫H = {base}, need {target})"
        )));
    }
    let mut hi = T::one();
    while excess(hi) <= T::zero() {
        hi = hi * c(2.0);
        if hi > c(1e12) {
            return Err(Error::InfeasibleParameters("no amplitude reaches s1".into()));
        }
    }
    let root_tol = Tolerances::new(T::epsilon() * c(16.0) * hi, T::epsilon() * c(4.0), 10_000)?;
    let amplitude = find_root(excess, T::zero(), hi, &root_tol)
        .map_err(|e| Error::InfeasibleParameters(format!("amplitude solve failed: {e}")))?;

    let two = c::<T>(2.0);
    let n = T::from_usize(POSITIVITY_GRID).unwrap();
    for i in 1..=POSITIVITY_GRID {
        let r = r0 + T::from_usize(i).unwrap() / n;
        let (h, _) = shape.eval(amplitude, r);
        if !(h > two) {
            return Err(Error::PositivityFailed {
                r: r.as_f64(),
                h: h.as_f64(),
            });
        }
    }

    let shape = Arc::new(shape);
    let profile = HProfile::analytic(move |r| shape.eval(amplitude, r));
    RadialMetric::h_profile_with_tolerances(r0, params.eps, profile, end, params.mass, tol)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterexampleReport<T> {
    pub min_scalar_curvature: T,
    pub renorm_vol: T,
    pub horizon_area: T,
    pub penrose_margin: T,
    pub profile_samples: Vec<ProfileSample<T>>,
    #[serde(rename = "verdict_R_violated")]
    pub verdict_r_violated: bool,
    pub verdict_margin_negative: bool,
    pub verdict_balls_lose: bool,
}

/// Ten log-spaced areas from `1e3` to `1e12`.
pub fn default_areas<T: Scalar>() -> Vec<T> {
    (0..10).map(|k| c::<T>(10f64.powi(3 + k))).collect()
}

/// `hyp(A) − coordinate_profile(A) − ½·horizon_area` for each area.
pub fn margin_asymptote<T: Scalar>(metric: &RadialMetric<T>, areas: &[T]) -> Result<Vec<(T, T)>> {
    let half_horizon = c::<T>(0.5) * metric.horizon_area();
    areas
        .iter()
        .map(|&a| {
            Ok((
                a,
                hyperbolic_ball_volume_exact(a)? - coordinate_profile(metric, a)? - half_horizon,
            ))
        })
        .collect()
}

pub fn verify<T: Scalar>(metric: &RadialMetric<T>, areas: &[T]) -> Result<CounterexampleReport<T>> {
    if areas.is_empty() {
        return Err(Error::InsufficientSamples { needed: 1, got: 0 });
    }
    let (_, min_r) = metric.min_scalar_curvature(CURVATURE_GRID)?;
    let renorm = renormalized_volume(metric)?;
    let margin = penrose_margin(metric)?;
    let samples = compare_profile(metric, areas)?;
    let gaps = margin_asymptote(metric, areas)?;
    let tol = c::<T>(VERDICT_TOL);
    let balls_lose = match gaps.iter().position(|&(_, g)| g > T::zero()) {
        Some(first) => samples[first..].iter().all(|s| s.winner == Winner::Generalized),
        None => false,
    };
    Ok(CounterexampleReport {
        min_scalar_curvature: min_r,
        renorm_vol: renorm,
        horizon_area: metric.horizon_area(),
        penrose_margin: margin,
        profile_samples: samples,
        verdict_r_violated: min_r < c::<T>(-6.0) - tol,
        verdict_margin_negative: margin < -tol,
        verdict_balls_lose: balls_lose,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn mollifier_normalization() {
        let tol = Tolerances::<f64>::default();
        let z = integrate(mollifier, 0.0, 1.0, &tol).unwrap().value;
        assert_relative_eq!(z, 0.00702985840661, max_relative = 1e-10);
        // derivative is consistent with the value
        let x = 0.3;
        let fd = (mollifier(x + 1e-6) - mollifier(x - 1e-6)) / 2e-6;
        assert_relative_eq!(mollifier_deriv(x), fd, max_relative = 1e-6);
    }

    #[test]
    fn smoothstep_endpoints() {
        assert_eq!(smoothstep(0.0f64), (0.0, 0.0));
        assert_eq!(smoothstep(1.0f64), (1.0, 0.0));
        assert_eq!(smoothstep(0.5f64).0, 0.5);
    }

    #[test]
    fn default_metric_matches_and_is_exact_outside() {
        let p = CounterexampleParams::<f64>::default();
        let g = construct(p).unwrap();
        assert_relative_eq!(
            g.horizon_area(),
            4.0 * std::f64::consts::PI * 0.01,
            max_relative = 1e-14
        );
        assert_relative_eq!(g.tail_start(), p.s1, max_relative = 1e-9);
        for &r in &[11.5, 13.0, 20.0] {
            assert!((g.scalar_curvature_at_r(r).unwrap() + 6.0).abs() < 1e-8);
        }
    }

    #[test]
    fn equal_radii_are_infeasible() {
        let mut p = CounterexampleParams::<f64>::default();
        p.s1 = p.eps;
        // s1 must also exceed 2·mass
        p.mass = 0.01;
        assert!(matches!(construct(p), Err(Error::InfeasibleParameters(_))));
    }

    #[test]
    fn exact_metric_passes_verification() {
        let g = RadialMetric::schwarzschild_ads(1.0).unwrap();
        let rep = verify(&g, &default_areas()).unwrap();
        assert!(!rep.verdict_r_violated && !rep.verdict_margin_negative && !rep.verdict_balls_lose);
    }
}
