//! Rotationally symmetric asymptotically hyperbolic metrics.
//!
//! Two charts are used throughout: the area-radius chart
//! `g = f(s)⁻¹ ds² + s² g_{S²}` and the arclength chart `g = dr² + φ(r)² g_{S²}`.
//! Public evaluators take the area radius `s` unless they say otherwise;
//! [`RadialMetric::warp`] takes the metric's native arclength coordinate `r`
//! (`0` at the horizon or center for exact metrics, `r0` for profile metrics).

mod file;
mod profile;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use file::MetricFile;
pub use profile::HProfile;

use crate::error::{Error, Result};
use crate::numerics::{find_root, integrate, solve_ode, Tolerances, Trajectory};
use crate::scalar::{c, four_pi, Scalar};

/// Length of the arclength interval covered by numerically integrated charts.
/// The warp grows like `e^r`, so this reaches area radii far beyond `1e20`.
pub const CHART_SPAN: f64 = 60.0;

/// Grid used to certify `H > 2` beyond the horizon of a profile metric.
const POSITIVITY_GRID: usize = 2000;

/// Tolerance on `H(r0) = 2` and on the C¹ matching with the exact tail.
pub const MATCH_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricKind {
    Hyperbolic,
    SchwarzschildAds,
    HProfile,
}

/// Warp data at one arclength radius.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Warp<T> {
    pub phi: T,
    pub dphi: T,
    pub mean_curvature: T,
    /// `dH/dr`.
    pub dmean_curvature: T,
}

/// The same sphere in both charts: area radius `s` and native arclength `r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartPoint<T> {
    pub s: T,
    pub r: T,
}

pub(crate) struct ProfileData<T> {
    r0: T,
    phi0: T,
    match_r: T,
    tail_mass: T,
    s1: T,
    profile: HProfile<T>,
    // [½∫H, volume] on [r0, match_r]
    inner: Trajectory<T, 2>,
    // ln φ on [match_r, match_r + CHART_SPAN]
    tail: Trajectory<T, 1>,
}

type LazyChart<T> = Arc<OnceLock<Result<Trajectory<T, 1>>>>;

#[derive(Clone)]
enum Repr<T> {
    Hyperbolic,
    SchwarzschildAds { mass: T, chart: LazyChart<T> },
    HProfile(Arc<ProfileData<T>>),
}

/// A rotationally symmetric asymptotically hyperbolic metric.
///
/// Immutable once built; cloning is cheap and clones share their charts.
#[derive(Clone)]
pub struct RadialMetric<T> {
    repr: Repr<T>,
    tol: Tolerances<T>,
}

impl<T: Scalar> fmt::Debug for RadialMetric<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Hyperbolic => f.write_str("RadialMetric::Hyperbolic"),
            Repr::SchwarzschildAds { mass, .. } => {
                write!(f, "RadialMetric::SchwarzschildAds {{ mass: {mass} }}")
            }
            Repr::HProfile(p) => write!(
                f,
                "RadialMetric::HProfile {{ r0: {}, phi0: {}, match_r: {}, tail_mass: {}, profile: {:?} }}",
                p.r0, p.phi0, p.match_r, p.tail_mass, p.profile
            ),
        }
    }
}

pub(crate) fn exact_h<T: Scalar>(m: T, s: T) -> T {
    // 2√f/s, arranged so it stays accurate for huge s
    let inv = s.recip();
    c::<T>(2.0) * (inv * inv + T::one() - c::<T>(2.0) * m * inv * inv * inv).sqrt()
}

pub(crate) fn exact_dh<T: Scalar>(m: T, s: T) -> T {
    let inv = s.recip();
    (c::<T>(6.0) * m * inv - c::<T>(2.0)) * inv * inv
}

/// `f^{-1/2} - (1+s²)^{-1/2}` for the potential of mass `m`, without cancellation.
pub(crate) fn inverse_root_difference<T: Scalar>(m: T, s: T) -> T {
    let a = T::one() + s * s - c::<T>(2.0) * m / s;
    let b = T::one() + s * s;
    let (ra, rb) = (a.sqrt(), b.sqrt());
    c::<T>(2.0) * m / (s * ra * rb * (ra + rb))
}

pub(crate) fn chart_rhs<T: Scalar>(m: T) -> impl Fn(T, &[T; 1]) -> [T; 1] {
    move |_r, y| {
        let e = (-y[0]).exp();
        [(e * e + T::one() - c::<T>(2.0) * m * e * e * e).sqrt()]
    }
}

pub(crate) fn internal_tol<T: Scalar>(tol: &Tolerances<T>) -> Tolerances<T> {
    tol.tightened(100.0)
}

impl<T: Scalar> RadialMetric<T> {
    pub fn hyperbolic() -> Self {
        Self {
            repr: Repr::Hyperbolic,
            tol: Tolerances::default(),
        }
    }

    pub fn schwarzschild_ads(mass: T) -> Result<Self> {
        if !(mass > T::zero()) || !mass.is_finite() {
            return Err(Error::NonPositiveMass { mass: mass.as_f64() });
        }
        Ok(Self {
            repr: Repr::SchwarzschildAds {
                mass,
                chart: Arc::new(OnceLock::new()),
            },
            tol: Tolerances::default(),
        })
    }

    /// Metric with warp `φ = phi0·exp(½∫_{r0}^r H)` on `[r0, match_r]`
    /// continued by the exact Schwarzschild-AdS tail of mass `tail_mass`.
    pub fn h_profile(r0: T, phi0: T, profile: HProfile<T>, match_r: T, tail_mass: T) -> Result<Self> {
        Self::h_profile_with_tolerances(r0, phi0, profile, match_r, tail_mass, Tolerances::default())
    }

    pub fn h_profile_with_tolerances(
        r0: T,
        phi0: T,
        profile: HProfile<T>,
        match_r: T,
        tail_mass: T,
        tol: Tolerances<T>,
    ) -> Result<Self> {
        tol.validate()?;
        if !r0.is_finite() || !match_r.is_finite() || !(match_r > r0) {
            return Err(Error::InvalidInput(format!(
                "profile interval [{r0}, {match_r}] must be finite and non-empty"
            )));
        }
        if !(phi0 > T::zero()) || !phi0.is_finite() {
            return Err(Error::InvalidInput(format!("phi0 must be positive, got {phi0}")));
        }
        if !(tail_mass >= T::zero()) || !tail_mass.is_finite() {
            return Err(Error::InvalidInput(format!(
                "tail mass must be non-negative, got {tail_mass}"
            )));
        }
        let two = c::<T>(2.0);
        let match_tol = c::<T>(MATCH_TOL);

        let (h0, _) = profile.eval(r0);
        if !((h0 - two).abs() <= match_tol) {
            return Err(Error::HorizonConditionViolated(format!("H(r0) = {h0}, expected 2")));
        }
        let width = match_r - r0;
        let n = T::from_usize(POSITIVITY_GRID).unwrap();
        for i in 1..=POSITIVITY_GRID {
            let r = r0 + width * T::from_usize(i).unwrap() / n;
            let (h, dh) = profile.eval(r);
            if !h.is_finite() || !dh.is_finite() {
                return Err(Error::HorizonConditionViolated(format!(
                    "profile not finite at r = {r}"
                )));
            }
            if !(h > two) {
                return Err(Error::HorizonConditionViolated(format!("H({r}) = {h} is not above 2")));
            }
        }

        let itol = internal_tol(&tol);
        let half = c::<T>(0.5);
        let area_factor = four_pi::<T>() * phi0 * phi0;
        let inner = solve_ode(
            |r, y: &[T; 2]| {
                let (h, _) = profile.eval(r);
                [half * h, area_factor * (two * y[0]).exp()]
            },
            r0,
            [T::zero(), T::zero()],
            match_r,
            &itol,
        )?;
        let s1 = phi0 * inner.final_state()[0].exp();
        if !(s1 > two * tail_mass) {
            return Err(Error::MatchingFailed(format!(
                "warp reaches {s1} at match_r, not beyond 2·tail_mass = {}",
                two * tail_mass
            )));
        }
        let (h_end, _) = profile.eval(match_r);
        let h_tail = exact_h(tail_mass, s1);
        if !((h_end - h_tail).abs() <= match_tol * h_tail.max(T::one())) {
            return Err(Error::MatchingFailed(format!(
                "H(match_r) = {h_end} but the tail requires {h_tail} at s = {s1}"
            )));
        }
        let tail = solve_ode(chart_rhs(tail_mass), match_r, [s1.ln()], match_r + c(CHART_SPAN), &itol)?;
        Ok(Self {
            repr: Repr::HProfile(Arc::new(ProfileData {
                r0,
                phi0,
                match_r,
                tail_mass,
                s1,
                profile,
                inner,
                tail,
            })),
            tol,
        })
    }

    /// Replaces the tolerances used by later evaluations. Charts already
    /// integrated for profile metrics keep the accuracy they were built with.
    pub fn with_tolerances(mut self, tol: Tolerances<T>) -> Self {
        self.tol = tol;
        if let Repr::SchwarzschildAds { chart, .. } = &mut self.repr {
            *chart = Arc::new(OnceLock::new());
        }
        self
    }

    pub fn tolerances(&self) -> &Tolerances<T> {
        &self.tol
    }

    pub fn kind(&self) -> MetricKind {
        match self.repr {
            Repr::Hyperbolic => MetricKind::Hyperbolic,
            Repr::SchwarzschildAds { .. } => MetricKind::SchwarzschildAds,
            Repr::HProfile(_) => MetricKind::HProfile,
        }
    }

    /// Mass of the exact part: `0`, `m`, or the tail mass.
    pub fn mass(&self) -> T {
        match &self.repr {
            Repr::Hyperbolic => T::zero(),
            Repr::SchwarzschildAds { mass, .. } => *mass,
            Repr::HProfile(p) => p.tail_mass,
        }
    }

    pub fn horizon_radius(&self) -> Option<T> {
        match &self.repr {
            Repr::Hyperbolic => None,
            Repr::SchwarzschildAds { mass, .. } => Some(c::<T>(2.0) * *mass),
            Repr::HProfile(p) => Some(p.phi0),
        }
    }

    /// Smallest admissible area radius (the horizon, or the center).
    pub fn inner_radius(&self) -> T {
        self.horizon_radius().unwrap_or_else(T::zero)
    }

    pub fn horizon_area(&self) -> T {
        let s = self.inner_radius();
        four_pi::<T>() * s * s
    }

    /// Area radius from which the metric is exactly Schwarzschild-AdS of [`Self::mass`].
    pub fn tail_start(&self) -> T {
        match &self.repr {
            Repr::HProfile(p) => p.s1,
            _ => self.inner_radius(),
        }
    }

    pub fn r0(&self) -> Option<T> {
        self.profile_data().map(|p| p.r0)
    }

    pub fn phi0(&self) -> Option<T> {
        self.profile_data().map(|p| p.phi0)
    }

    pub fn match_r(&self) -> Option<T> {
        self.profile_data().map(|p| p.match_r)
    }

    pub fn h_profile_fn(&self) -> Option<&HProfile<T>> {
        self.profile_data().map(|p| &p.profile)
    }

    pub(crate) fn profile_data(&self) -> Option<&ProfileData<T>> {
        match &self.repr {
            Repr::HProfile(p) => Some(p),
            _ => None,
        }
    }

    /// `1 + s² − 2m/s` for the exact part of the metric.
    pub fn potential(&self, s: T) -> T {
        T::one() + s * s - c::<T>(2.0) * self.mass() / s
    }

    fn in_profile_region(&self, s: T) -> Option<&ProfileData<T>> {
        self.profile_data().filter(|p| s < p.s1)
    }

    fn check_s(&self, s: T, allow_center: bool) -> Result<T> {
        let lo = self.inner_radius();
        let slack = c::<T>(8.0) * T::epsilon() * lo;
        let ok = s.is_finite()
            && if lo > T::zero() {
                s >= lo - slack
            } else if allow_center {
                s >= T::zero()
            } else {
                s > T::zero()
            };
        if !ok {
            return Err(Error::OutOfDomain {
                what: "s",
                value: s.as_f64(),
                lo: lo.as_f64(),
                hi: f64::INFINITY,
            });
        }
        Ok(s.max(lo))
    }

    fn exact_chart(&self) -> Result<&Trajectory<T, 1>> {
        match &self.repr {
            Repr::SchwarzschildAds { mass, chart } => chart
                .get_or_init(|| {
                    solve_ode(
                        chart_rhs(*mass),
                        T::zero(),
                        [(c::<T>(2.0) * *mass).ln()],
                        c(CHART_SPAN),
                        &internal_tol(&self.tol),
                    )
                })
                .as_ref()
                .map_err(Clone::clone),
            _ => unreachable!("exact chart requested for a non-Schwarzschild metric"),
        }
    }

    /// Warp `φ`, `φ'`, `H = 2φ'/φ` and `H'` at native arclength `r`.
    pub fn warp(&self, r: T) -> Result<Warp<T>> {
        let two = c::<T>(2.0);
        let half = c::<T>(0.5);
        let out_of_domain = |lo: T, hi: T| Error::OutOfDomain {
            what: "r",
            value: r.as_f64(),
            lo: lo.as_f64(),
            hi: hi.as_f64(),
        };
        let exact = |m: T, phi: T| Warp {
            phi,
            dphi: half * phi * exact_h(m, phi),
            mean_curvature: exact_h(m, phi),
            dmean_curvature: exact_dh(m, phi),
        };
        match &self.repr {
            Repr::Hyperbolic => {
                if !(r > T::zero()) || !r.is_finite() {
                    return Err(out_of_domain(T::zero(), T::infinity()));
                }
                let (sh, ch) = (r.sinh(), r.cosh());
                Ok(Warp {
                    phi: sh,
                    dphi: ch,
                    mean_curvature: two * ch / sh,
                    dmean_curvature: -two / (sh * sh),
                })
            }
            Repr::SchwarzschildAds { mass, .. } => {
                let span = c::<T>(CHART_SPAN);
                if !(r >= T::zero() && r <= span) {
                    return Err(out_of_domain(T::zero(), span));
                }
                let y = self.exact_chart()?.eval(r)?[0];
                Ok(exact(*mass, y.exp()))
            }
            Repr::HProfile(p) => {
                let end = p.match_r + c(CHART_SPAN);
                if !(r >= p.r0 && r <= end) {
                    return Err(out_of_domain(p.r0, end));
                }
                if r <= p.match_r {
                    let phi = p.phi0 * p.inner.eval(r)?[0].exp();
                    let (h, dh) = p.profile.eval(r);
                    Ok(Warp {
                        phi,
                        dphi: half * h * phi,
                        mean_curvature: h,
                        dmean_curvature: dh,
                    })
                } else {
                    let y = p.tail.eval(r)?[0];
                    Ok(exact(p.tail_mass, y.exp()))
                }
            }
        }
    }

    /// Native arclength coordinate of the sphere of area radius `s` inside the profile region.
    fn profile_r(&self, p: &ProfileData<T>, s: T) -> Result<T> {
        if s <= p.phi0 {
            return Ok(p.r0);
        }
        let target = (s / p.phi0).ln();
        let span = p.r0.abs() + p.match_r.abs() + T::one();
        let rtol = Tolerances {
            abs_tol: c::<T>(16.0) * T::epsilon() * span,
            rel_tol: self.tol.rel_tol,
            max_evals: self.tol.max_evals,
        };
        find_root(
            |r| p.inner.eval(r).map(|y| y[0] - target).unwrap_or(T::nan()),
            p.r0,
            p.match_r,
            &rtol,
        )
        .map_err(|_| Error::InversionFailure {
            what: "warp",
            target: s.as_f64(),
        })
    }

    /// Both chart coordinates of the sphere of area radius `s`.
    pub fn chart_point(&self, s: T) -> Result<ChartPoint<T>> {
        let s = self.check_s(s, true)?;
        let r = match &self.repr {
            Repr::HProfile(p) if s < p.s1 => self.profile_r(p, s)?,
            Repr::HProfile(p) => p.r0 + self.arclength(s)?,
            _ => self.arclength(s)?,
        };
        Ok(ChartPoint { s, r })
    }

    /// Radial distance from the horizon (or the center) to the sphere of area radius `s`.
    pub fn arclength(&self, s: T) -> Result<T> {
        let s = self.check_s(s, true)?;
        // asinh carries the hyperbolic part exactly; only the decaying
        // correction of the mass term is integrated
        let exact_part = |m: T, a: T, b: T| -> Result<T> {
            if b <= a {
                return Ok(T::zero());
            }
            let corr = if m > T::zero() {
                integrate(|x| inverse_root_difference(m, x), a, b, &self.tol)?.value
            } else {
                T::zero()
            };
            Ok(b.asinh() - a.asinh() + corr)
        };
        match &self.repr {
            Repr::Hyperbolic => Ok(s.asinh()),
            Repr::SchwarzschildAds { mass, .. } => exact_part(*mass, c::<T>(2.0) * *mass, s),
            Repr::HProfile(p) => {
                if s < p.s1 {
                    Ok(self.profile_r(p, s)? - p.r0)
                } else {
                    Ok(p.match_r - p.r0 + exact_part(p.tail_mass, p.s1, s)?)
                }
            }
        }
    }

    /// Mean curvature `H` of the sphere of area radius `s` and its arclength derivative `H'`.
    pub fn mean_curvature(&self, s: T) -> Result<(T, T)> {
        let s = self.check_s(s, false)?;
        if let Some(p) = self.in_profile_region(s) {
            let r = self.profile_r(p, s)?;
            return Ok(p.profile.eval(r));
        }
        let m = self.mass();
        Ok((exact_h(m, s), exact_dh(m, s)))
    }

    /// Scalar curvature at area radius `s`, from closed forms in `f` or in `(H, H', φ)`.
    pub fn scalar_curvature(&self, s: T) -> Result<T> {
        let s = self.check_s(s, false)?;
        let two = c::<T>(2.0);
        if let Some(p) = self.in_profile_region(s) {
            let r = self.profile_r(p, s)?;
            let (h, dh) = p.profile.eval(r);
            return Ok(profile_scalar_curvature(h, dh, s));
        }
        let m = self.mass();
        let f = self.potential(s);
        let df = two * s + two * m / (s * s);
        Ok(-two * df / s + two * (T::one() - f) / (s * s))
    }

    /// Scalar curvature at native arclength `r`.
    pub fn scalar_curvature_at_r(&self, r: T) -> Result<T> {
        let w = self.warp(r)?;
        Ok(profile_scalar_curvature(w.mean_curvature, w.dmean_curvature, w.phi))
    }

    /// Radial Ricci eigenvalue `Ric(ν, ν) = −2φ''/φ` at area radius `s`.
    pub fn ricci_normal(&self, s: T) -> Result<T> {
        let s = self.check_s(s, false)?;
        let two = c::<T>(2.0);
        if let Some(p) = self.in_profile_region(s) {
            let r = self.profile_r(p, s)?;
            let (h, dh) = p.profile.eval(r);
            return Ok(-dh - c::<T>(0.5) * h * h);
        }
        let m = self.mass();
        Ok(-two - two * m / (s * s * s))
    }

    /// Minimum of the scalar curvature over `n` grid points and the location
    /// (area radius) where it occurs.
    ///
    /// Profile metrics are sampled uniformly in `r` over the profile region,
    /// exact metrics over `s ∈ [inner radius, inner radius + 10]`.
    pub fn min_scalar_curvature(&self, n: usize) -> Result<(T, T)> {
        let n = n.max(2);
        let last = T::from_usize(n - 1).unwrap();
        let mut best = (T::nan(), T::infinity());
        match &self.repr {
            Repr::HProfile(p) => {
                for i in 0..n {
                    let r = p.r0 + (p.match_r - p.r0) * T::from_usize(i).unwrap() / last;
                    let w = self.warp(r)?;
                    let rr = profile_scalar_curvature(w.mean_curvature, w.dmean_curvature, w.phi);
                    if rr < best.1 {
                        best = (w.phi, rr);
                    }
                }
                let tail = self.scalar_curvature(p.s1)?;
                if tail < best.1 {
                    best = (p.s1, tail);
                }
            }
            _ => {
                let lo = self.inner_radius().max(c(1e-3));
                for i in 0..n {
                    let s = lo + c::<T>(10.0) * T::from_usize(i).unwrap() / last;
                    let rr = self.scalar_curvature(s)?;
                    if rr < best.1 {
                        best = (s, rr);
                    }
                }
            }
        }
        Ok(best)
    }

    /// Volume between the horizon and the sphere of area radius `s ≤ s1`, from the profile chart.
    pub(crate) fn profile_volume(&self, s: T) -> Option<Result<T>> {
        let p = self.profile_data()?;
        if s >= p.s1 {
            return Some(Ok(p.inner.final_state()[1]));
        }
        Some(self.profile_r(p, s).and_then(|r| Ok(p.inner.eval(r)?[1])))
    }
}

fn profile_scalar_curvature<T: Scalar>(h: T, dh: T, phi: T) -> T {
    -c::<T>(2.0) * dh - c::<T>(1.5) * h * h + c::<T>(2.0) / (phi * phi)
}

/// Mean-curvature profile of the mass-ramp family: `f = 1 + s² − 2μ(s)/s`
/// where `μ` rises from `horizon_radius/2` to `mass` along a cubic smoothstep on
/// `[horizon_radius, ramp_end]`.
///
/// Its scalar curvature is `−6 + 4μ'/s² ≥ −6`. Returns the profile on the
/// arclength chart starting at `r = 0` together with the arclength `match_r`
/// of the sphere `s = ramp_end`.
pub fn mass_ramp_profile<T: Scalar>(
    horizon_radius: T,
    mass: T,
    ramp_end: T,
    tol: &Tolerances<T>,
) -> Result<(HProfile<T>, T)> {
    let (two, half) = (c::<T>(2.0), c::<T>(0.5));
    let sh = horizon_radius;
    let mh = half * sh;
    if !(sh > T::zero()) || !(mass >= mh) || !(ramp_end > sh) {
        return Err(Error::InvalidInput(format!(
            "mass ramp needs 0 < horizon radius < ramp end and mass ≥ horizon radius / 2 \
             (got {sh}, {ramp_end}, {mass})"
        )));
    }
    let width = ramp_end - sh;
    // the smoothstep slope peaks at 1.5 (mass − mh)/width; below ½ keeps H > 2
    if !(c::<T>(3.0) * (mass - mh) < width) {
        return Err(Error::InvalidInput(format!(
            "ramp end {ramp_end} too close to the horizon for mass {mass}"
        )));
    }
    let mu = move |s: T| -> (T, T) {
        if s >= ramp_end {
            return (mass, T::zero());
        }
        let x = ((s - sh) / width).max(T::zero());
        let step = x * x * (c::<T>(3.0) - two * x);
        let slope = c::<T>(6.0) * x * (T::one() - x) / width;
        (mh + (mass - mh) * step, (mass - mh) * slope)
    };
    let r_end = (ramp_end / sh).ln() + T::one();
    let chart = solve_ode(
        move |_r, y: &[T; 1]| {
            let e = (-y[0]).exp();
            let (m, _) = mu(y[0].exp());
            [(e * e + T::one() - two * m * e * e * e).sqrt()]
        },
        T::zero(),
        [sh.ln()],
        r_end,
        &internal_tol(tol),
    )?;
    let target = ramp_end.ln();
    let rtol = Tolerances {
        abs_tol: c::<T>(16.0) * T::epsilon() * r_end,
        ..*tol
    };
    let match_r = find_root(
        |r| chart.eval(r).map(|y| y[0] - target).unwrap_or(T::nan()),
        T::zero(),
        r_end,
        &rtol,
    )?;
    let chart = Arc::new(chart);
    let profile = HProfile::analytic(move |r: T| {
        let r = r.max(T::zero()).min(r_end);
        let s = chart.eval(r).map(|y| y[0].exp()).unwrap_or(T::nan());
        let (m, dm) = mu(s);
        let inv = s.recip();
        let h = two * (inv * inv + T::one() - two * m * inv * inv * inv).sqrt();
        let dh = (c::<T>(6.0) * m * inv - two - two * dm) * inv * inv;
        (h, dh)
    });
    Ok((profile, match_r))
}

/// Profile metric built from [`mass_ramp_profile`]; `R ≥ −6` everywhere.
pub fn make_mass_ramp<T: Scalar>(horizon_radius: T, mass: T, ramp_end: T) -> Result<RadialMetric<T>> {
    let tol = Tolerances::default();
    let (profile, match_r) = mass_ramp_profile(horizon_radius, mass, ramp_end, &tol)?;
    RadialMetric::h_profile(T::zero(), horizon_radius, profile, match_r, mass)
}

pub fn make_hyperbolic<T: Scalar>() -> RadialMetric<T> {
    RadialMetric::hyperbolic()
}

pub fn make_schwarzschild_ads<T: Scalar>(mass: T) -> Result<RadialMetric<T>> {
    RadialMetric::schwarzschild_ads(mass)
}

pub fn make_h_profile<T: Scalar>(
    r0: T,
    phi0: T,
    profile: HProfile<T>,
    match_r: T,
    tail_mass: T,
) -> Result<RadialMetric<T>> {
    RadialMetric::h_profile(r0, phi0, profile, match_r, tail_mass)
}

pub fn warp<T: Scalar>(metric: &RadialMetric<T>, r: T) -> Result<Warp<T>> {
    metric.warp(r)
}

pub fn scalar_curvature<T: Scalar>(metric: &RadialMetric<T>, s: T) -> Result<T> {
    metric.scalar_curvature(s)
}

pub fn ricci_normal<T: Scalar>(metric: &RadialMetric<T>, s: T) -> Result<T> {
    metric.ricci_normal(s)
}

pub fn arclength<T: Scalar>(metric: &RadialMetric<T>, s: T) -> Result<T> {
    metric.arclength(s)
}
