use std::f64::consts::PI;

use ahiso::imcf::{
    coarse_error_integral, flow_spheres, geroch_audit, jump_growth_bound, jump_interval_integral, jump_volume_excess,
    swept_volume_lower_bound, FlowSample,
};
use ahiso::metric::{make_hyperbolic, make_mass_ramp, make_schwarzschild_ads};
use ahiso::quantities::hyperbolic_ball_volume_exact;
use ahiso::{Error, Tolerances};
use approx::assert_relative_eq;

// regression bound, measured max ≈ 2.0944 over [1, 1e8]
const COARSE_BOUND: f64 = 2.1;

#[test]
fn area_law_and_initial_sample() {
    let g = make_schwarzschild_ads(1.0).unwrap();
    let flow = flow_spheres(&g, 20.0 * PI, 3.0, 30).unwrap();
    assert_eq!(flow.len(), 31);
    assert_eq!(flow[0].swept_volume, 0.0);
    assert_eq!(flow[0].area, 20.0 * PI);
    for w in flow.windows(2) {
        assert!(w[1].swept_volume >= w[0].swept_volume);
    }
    for f in &flow {
        assert_relative_eq!(f.area / flow[0].area, f.t.exp(), max_relative = 1e-15);
        assert_relative_eq!(4.0 * PI * f.s * f.s, f.area, max_relative = 1e-13);
    }
}

#[test]
fn equality_case_on_exact_metrics() {
    for &m in &[0.5, 1.0, 2.0] {
        let g = make_schwarzschild_ads(m).unwrap();
        for &a in &[16.0 * PI * m * m, 300.0] {
            let flow = flow_spheres(&g, a, 2.0, 8).unwrap();
            for f in &flow {
                assert!((f.hawking_mass - m).abs() < 1e-10);
                assert!((f.swept_volume - f.lower_bound).abs() < 1e-7 * f.swept_volume.max(1.0));
            }
            let direct = swept_volume_lower_bound(a, m, 2.0).unwrap();
            assert!((direct - flow.last().unwrap().swept_volume).abs() < 1e-7 * direct);
            assert!(geroch_audit(&flow).unwrap().min_increment.abs() < 1e-10);
        }
    }
}

#[test]
fn massless_bound_matches_hyperbolic_shells() {
    for &(a, tau) in &[(1.0, 0.5), (4.0 * PI, 2.0), (1e3, 4.0)] {
        let lb = swept_volume_lower_bound(a, 0.0, tau).unwrap();
        let shell = hyperbolic_ball_volume_exact(a * f64::exp(tau)).unwrap() - hyperbolic_ball_volume_exact(a).unwrap();
        assert!((lb - shell).abs() < 1e-8 * shell.max(1.0));
    }
    assert_eq!(swept_volume_lower_bound(5.0, 0.3, 0.0).unwrap(), 0.0);
    let h: ahiso::Metric = make_hyperbolic();
    let flow = flow_spheres(&h, 1.0, 3.0, 12).unwrap();
    let last = flow.last().unwrap();
    assert!((last.swept_volume - last.lower_bound).abs() < 1e-7 * last.swept_volume);
}

#[test]
fn flows_with_curvature_above_minus_six() {
    let g = make_mass_ramp(1.0, 0.8, 4.0).unwrap();
    let flow = flow_spheres(&g, g.horizon_area(), 4.0, 80).unwrap();
    let audit = geroch_audit(&flow).unwrap();
    assert!(audit.monotone, "{}", audit.min_increment);
    // the Hawking mass from the horizon is a valid lower mass along the flow
    let m_low = flow.iter().map(|f| f.hawking_mass).fold(f64::INFINITY, f64::min);
    for f in flow.iter().skip(1) {
        let lb = swept_volume_lower_bound(flow[0].area, m_low, f.t).unwrap();
        assert!(f.swept_volume >= lb - 1e-7);
    }
}

#[test]
fn geroch_audit_edge_cases() {
    let sample = |t: f64, m: f64| FlowSample {
        t,
        area: 1.0,
        s: 1.0,
        mean_curvature: 2.0,
        hawking_mass: m,
        swept_volume: 0.0,
        lower_bound: 0.0,
    };
    let constant = [sample(0.0, 0.4), sample(1.0, 0.4)];
    let a = geroch_audit(&constant).unwrap();
    assert_eq!(a.min_increment, 0.0);
    assert!(a.monotone);
    let dropping = [sample(0.0, 0.4), sample(1.0, 0.5), sample(2.0, 0.3)];
    assert!(!geroch_audit(&dropping).unwrap().monotone);
    assert!(matches!(
        geroch_audit(&constant[..1]),
        Err(Error::InsufficientSamples { .. })
    ));
}

#[test]
fn flow_rejections() {
    let g = make_schwarzschild_ads(1.0).unwrap();
    assert!(flow_spheres(&g, 10.0, 1.0, 10).is_err());
    assert!(flow_spheres(&g, 100.0, 0.0, 10).is_err());
    assert!(flow_spheres(&g, 100.0, 1.0, 1).is_err());
}

#[test]
fn jump_bounds() {
    assert_eq!(jump_growth_bound(5.0, 0.0, 1.0).unwrap(), 0.0);
    assert_relative_eq!(
        jump_growth_bound(3.0, 3.0, 0.0).unwrap(),
        2f64.ln(),
        max_relative = 1e-15
    );
    assert!(matches!(
        jump_growth_bound(0.5, 1.0, 0.0),
        Err(Error::HypothesisViolated(_))
    ));
    let mut prev = f64::INFINITY;
    for k in 0..30 {
        let b = jump_growth_bound(2.0, 7.0, k as f64).unwrap();
        assert!(b < prev);
        prev = b;
    }
    assert!(prev < 1e-11);
    assert!(jump_growth_bound(4.0, 7.0, 1.0).unwrap() < jump_growth_bound(2.0, 7.0, 1.0).unwrap());
    assert!(jump_growth_bound(2.0, 9.0, 1.0).unwrap() > jump_growth_bound(2.0, 7.0, 1.0).unwrap());

    assert_relative_eq!(jump_volume_excess(16.0 * PI), 8.0 * PI);
    assert_eq!(jump_volume_excess(0.0), 0.0);
    let tol = Tolerances::default();
    for &a in &[1e2, 1e4] {
        for &t in &[0.0, 1.0] {
            for &aj in &[1.0, a, 10.0 * a] {
                let extra = jump_interval_integral(a, aj, t, 0.0, &tol).unwrap();
                assert!(extra <= jump_volume_excess(aj) + 1e-8, "A={a} T={t} AJ={aj}: {extra}");
            }
        }
    }
}

#[test]
fn coarse_error_integral_is_bounded() {
    let mut max: f64 = 0.0;
    for k in 0..30 {
        let a = 10f64.powf(8.0 * k as f64 / 29.0);
        let v = coarse_error_integral(a).unwrap();
        assert!(v > 0.0);
        max = max.max(v);
    }
    assert!(max <= COARSE_BOUND, "{max}");
    let tiny = coarse_error_integral(1e-3).unwrap();
    assert!(tiny > 0.0 && tiny < coarse_error_integral(1.0).unwrap() * 0.1);
    assert!(coarse_error_integral(0.0).is_err());
}
