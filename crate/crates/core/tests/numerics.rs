use ahiso::numerics::{
    central_difference, find_root, fit_log_slope, integrate, integrate_to_infinity, second_difference, solve_ode,
    Tolerances,
};
use ahiso::quantities::hyperbolic_ball_volume_exact;
use ahiso::Error;
use approx::assert_relative_eq;
use proptest::prelude::*;

// Reference values below were computed once with 30-digit mpmath quadrature.
const DENSITY_2_10: f64 = 47.601_549_465_302_44;
const DERIVATIVE_INTEGRAL: f64 = 0.484_913_411_064_888_7;
const ARCLENGTH_100: f64 = 3.891_595_536_696_568_8;

fn potential(s: f64) -> f64 {
    1.0 + s * s - 2.0 / s
}

#[test]
fn polynomial_and_asinh() {
    let tol = Tolerances::default();
    assert_relative_eq!(
        integrate(|x: f64| x * x, 0.0, 1.0, &tol).unwrap().value,
        1.0 / 3.0,
        max_relative = 1e-14
    );
    let r = integrate(|x: f64| 1.0 / (1.0 + x * x).sqrt(), 0.0, 1.0, &tol).unwrap();
    assert_relative_eq!(r.value, 1f64.asinh(), max_relative = 1e-13);
    assert!(r.error_estimate >= 0.0 && r.evaluations >= 1);
}

#[test]
fn mass_one_volume_density() {
    let r = integrate(|s: f64| s * s / potential(s).sqrt(), 2.0, 10.0, &Tolerances::default()).unwrap();
    assert!((r.value - DENSITY_2_10).abs() < 1e-10 * DENSITY_2_10);
}

#[test]
fn improper_integrals() {
    let tol = Tolerances::default();
    assert_relative_eq!(
        integrate_to_infinity(|s: f64| s.powi(-2), 1.0, &tol).unwrap().value,
        1.0,
        max_relative = 1e-10
    );
    assert_relative_eq!(
        integrate_to_infinity(|s: f64| (-s).exp(), 0.0, &tol).unwrap().value,
        1.0,
        max_relative = 1e-10
    );
}

#[test]
fn derivative_integrand_against_truncation() {
    let tol = Tolerances::default();
    let g = |s: f64| s / potential(s).powf(1.5);
    let full = integrate_to_infinity(g, 2.0, &tol).unwrap().value;
    let cut = 1e6;
    let head = integrate(g, 2.0, cut, &tol).unwrap().value;
    // g(s) ≤ s^{-2}(1 − 2/s³)^{-3/2} beyond the cut, so the tail is below 1.000001/cut
    let tail_bound = 1.000_001 / cut;
    assert!(full >= head - 1e-8 && full <= head + tail_bound + 1e-8);
    assert!((full - DERIVATIVE_INTEGRAL).abs() < 1e-8);
}

#[test]
fn ode_exponential_and_constant() {
    let tol = Tolerances::default();
    let t = solve_ode(|_t, y: &[f64; 1]| [y[0]], 0.0, [1.0], 1.0, &tol).unwrap();
    assert!((t.final_state()[0] - 1f64.exp()).abs() < 1e-9);
    let k = solve_ode(|_t, _y: &[f64; 1]| [0.0], 0.0, [3.5], 2.0, &tol).unwrap();
    for &x in &[0.0, 0.7, 2.0] {
        assert_eq!(k.eval(x).unwrap()[0], 3.5);
    }
}

#[test]
fn ode_arclength_matches_quadrature() {
    let tol = Tolerances::default();
    let rhs = |s: f64, _y: &[f64; 1]| [1.0 / potential(s).sqrt()];
    let t = solve_ode(rhs, 2.0, [0.0], 100.0, &tol).unwrap();
    let q = integrate(|s: f64| 1.0 / potential(s).sqrt(), 2.0, 100.0, &tol)
        .unwrap()
        .value;
    assert!((t.final_state()[0] - q).abs() < 1e-9);
    assert!((q - ARCLENGTH_100).abs() < 1e-9);
    // dense output along the way
    let mid = integrate(|s: f64| 1.0 / potential(s).sqrt(), 2.0, 7.3, &tol)
        .unwrap()
        .value;
    assert!((t.eval(7.3).unwrap()[0] - mid).abs() < 1e-8);
    assert!(t.eval(101.0).is_err());
}

#[test]
fn roots() {
    let tol = Tolerances::default();
    assert!((find_root(|x: f64| x * x - 2.0, 1.0, 2.0, &tol).unwrap() - 2f64.sqrt()).abs() < 1e-10);
    assert!(find_root(|x: f64| x, -1.0, 1.0, &tol).unwrap().abs() < 1e-10);
    let a = find_root(
        |a: f64| hyperbolic_ball_volume_exact(a).unwrap() - 10.0,
        1.0,
        100.0,
        &tol,
    )
    .unwrap();
    assert!((hyperbolic_ball_volume_exact(a).unwrap() - 10.0).abs() < 1e-9);
    assert!((a - 29.510_955_306_494_17).abs() < 1e-9);
    assert!(matches!(
        find_root(|x: f64| x * x + 1.0, -1.0, 1.0, &tol),
        Err(Error::NoSignChange { .. })
    ));
}

#[test]
fn slopes() {
    let xs = [1.0, 10.0, 100.0, 1000.0];
    let inv_sq: Vec<f64> = xs.iter().map(|x: &f64| x.powi(-2)).collect();
    assert!((fit_log_slope(&xs, &inv_sq).unwrap() + 2.0).abs() < 1e-12);
    assert!(fit_log_slope(&xs, &[3.0; 4]).unwrap().abs() < 1e-12);
    assert!(matches!(
        fit_log_slope(&xs[..2], &inv_sq[..2]),
        Err(Error::InsufficientPoints { .. })
    ));
    assert!(matches!(
        fit_log_slope(&xs, &[1.0, 0.0, 1.0, 1.0]),
        Err(Error::NonPositiveData { index: 1 })
    ));
}

#[test]
fn differences() {
    assert_relative_eq!(
        central_difference(f64::sin, 0.3, 1e-5),
        0.3f64.cos(),
        max_relative = 1e-9
    );
    assert_relative_eq!(
        second_difference(f64::exp, 0.5, 1e-4),
        0.5f64.exp(),
        max_relative = 1e-6
    );
}

#[test]
fn single_precision() {
    let tol = Tolerances::<f32>::default();
    let r = integrate(|x: f32| x * x, 0.0, 1.0, &tol).unwrap();
    assert!((r.value - 1.0 / 3.0).abs() < 1e-6);
    let root = find_root(|x: f32| x * x - 2.0, 1.0, 2.0, &tol).unwrap();
    assert!((root - 2f32.sqrt()).abs() < 1e-6);
}

#[test]
fn tolerances_are_validated() {
    assert!(Tolerances::new(0.0, 1e-10, 10).is_err());
    assert!(Tolerances::new(1e-10, 1e-10, 0).is_err());
    assert!(integrate(|x: f64| x, 1.0, 0.0, &Tolerances::default()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quadrature_is_additive(a in -3.0f64..0.0, mid in 0.0f64..2.0, b in 2.0f64..5.0) {
        let tol = Tolerances::default();
        let f = |x: f64| (x * x + 1.0).sqrt() * (0.3 * x).cos();
        let whole = integrate(f, a, b, &tol).unwrap().value;
        let parts = integrate(f, a, mid.max(a + 1e-3), &tol).unwrap().value
            + integrate(f, mid.max(a + 1e-3), b, &tol).unwrap().value;
        prop_assert!((whole - parts).abs() <= 1e-9 * whole.abs().max(1.0));
    }

    #[test]
    fn improper_is_finite_plus_tail(t in 5.0f64..200.0) {
        let tol = Tolerances::default();
        let f = |s: f64| 1.0 / (1.0 + s * s);
        let whole = integrate_to_infinity(f, 0.0, &tol).unwrap().value;
        let head = integrate(f, 0.0, t, &tol).unwrap().value;
        let tail = std::f64::consts::FRAC_PI_2 - t.atan();
        prop_assert!((whole - head - tail).abs() < 1e-9);
        prop_assert!(head < whole);
    }

    #[test]
    fn ode_reproduces_quadrature(k in 0.1f64..3.0, t1 in 0.5f64..4.0) {
        let tol = Tolerances::default();
        let f = move |t: f64| (k * t).sin() + t * t;
        let traj = solve_ode(move |t, _y: &[f64; 1]| [f(t)], 0.0, [0.0], t1, &tol).unwrap();
        let q = integrate(f, 0.0, t1, &tol).unwrap().value;
        prop_assert!((traj.final_state()[0] - q).abs() < 1e-8 * q.abs().max(1.0));
    }

    #[test]
    fn roots_evaluate_near_zero(c in -5.0f64..5.0) {
        let tol = Tolerances::default();
        let f = move |x: f64| x * x * x + x - c;
        let x = find_root(f, -3.0, 3.0, &tol).unwrap();
        prop_assert!(f(x).abs() < 1e-8);
    }
}
