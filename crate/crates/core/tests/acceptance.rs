//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the report is always printed; exits non-zero on any FAIL.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use ahiso::counterexample::{construct, default_areas, verify};
use ahiso::imcf::{coarse_error_integral, flow_spheres, geroch_audit};
use ahiso::isoprofile::{
    compare_profile, expansion_residual, expansion_residual_order, profile_derivative_check, profile_expansion_check,
    profile_mass_coefficient, Winner,
};
use ahiso::metric::{make_hyperbolic, make_mass_ramp, make_schwarzschild_ads};
use ahiso::numerics::integrate;
use ahiso::quantities::{hawking_mass, penrose_margin, renormalized_volume, renormalized_volume_derivative};
use ahiso::{CounterexampleParams, Metric, Tolerances, Variant};

const HAWKING_TOL: f64 = 1e-10;
const CURVATURE_TOL: f64 = 1e-8;
const PROFILE_DERIVATIVE_REL_TOL: f64 = 1e-6;
const SWEPT_EQUALITY_REL_TOL: f64 = 1e-7;
const SWEPT_INEQUALITY_SLACK: f64 = 1e-7;
const GEROCH_SLACK: f64 = 1e-8;
const HYPERBOLIC_VOLUME_TOL: f64 = 1e-10;
const VOLUME_DERIVATIVE_TOL: f64 = 1e-6;
const MARGIN_TOL: f64 = 1e-6;
const ORDER_TARGET: f64 = -2.0;
const ORDER_TOL: f64 = 0.15;
const UNIFORM_CONSTANT: f64 = 10.0;
const RUNTIME_LIMIT_S: f64 = 60.0;
const COEFFICIENT_REL_TOL: f64 = 0.02;
const COARSE_CONSTANT: f64 = 2.1;
const MASSES: [f64; 3] = [0.5, 1.0, 2.0];
// (horizon radius, tail mass, ramp end): mass ramps with R ≥ −6
const RAMPS: [(f64, f64, f64); 3] = [(1.0, 0.8, 4.0), (2.0, 1.5, 6.0), (0.5, 0.6, 3.0)];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn fail<E: std::fmt::Debug>(e: E) -> String {
    format!("error: {e:?}")
}

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| 10f64.powf(lo + (hi - lo) * k as f64 / (n - 1) as f64))
        .collect()
}

fn ramps() -> Result<Vec<Metric>, String> {
    RAMPS
        .iter()
        .map(|&(sh, m, end)| make_mass_ramp(sh, m, end).map_err(fail))
        .collect()
}

fn hawking_mass_exactness() -> Outcome {
    let mut worst: f64 = 0.0;
    for &m in &MASSES {
        let g = make_schwarzschild_ads(m).map_err(fail)?;
        for k in 0..50 {
            let s = 2.0 * m * (1.0 + 1e-6) * (500.0 / m).powf(k as f64 / 49.0);
            worst = worst.max((hawking_mass(&g, s).map_err(fail)? - m).abs());
        }
    }
    check(
        worst <= HAWKING_TOL,
        format!("max |m_H − m| = {worst:.3e} over 150 spheres"),
    )
}

fn scalar_curvature_exactness() -> Outcome {
    let mut worst: f64 = 0.0;
    let metrics: [Metric; 2] = [make_hyperbolic(), make_schwarzschild_ads(1.0).map_err(fail)?];
    for g in &metrics {
        for k in 0..100 {
            let s = g.inner_radius() + 1e-3 + 0.5 * k as f64;
            worst = worst.max((g.scalar_curvature(s).map_err(fail)? + 6.0).abs());
        }
    }
    check(
        worst <= CURVATURE_TOL,
        format!("max |R + 6| = {worst:.3e} over 200 points"),
    )
}

fn profile_derivative_identity() -> Outcome {
    let mut worst: f64 = 0.0;
    for &m in &MASSES {
        let g = make_schwarzschild_ads(m).map_err(fail)?;
        for k in 0..10 {
            let a = 24.0 * PI * m * m * 10f64.powf(0.5 * k as f64);
            let (fd, formula) = profile_derivative_check(&g, a).map_err(fail)?;
            worst = worst.max(((fd - formula) / formula).abs());
        }
    }
    check(
        worst <= PROFILE_DERIVATIVE_REL_TOL,
        format!("max relative deviation {worst:.3e} over 30 areas"),
    )
}

fn swept_volume_equality() -> Outcome {
    let mut worst_eq: f64 = 0.0;
    for &m in &MASSES {
        let g = make_schwarzschild_ads(m).map_err(fail)?;
        for &a in &[16.0 * PI, 100.0 * PI] {
            if a < g.horizon_area() {
                // the sphere of area 16π lies inside the horizon when m = 2; start there instead
                continue;
            }
            for &tau in &[1.0, 3.0] {
                let flow = flow_spheres(&g, a, tau, 20).map_err(fail)?;
                let last = flow.last().unwrap();
                worst_eq = worst_eq.max(((last.swept_volume - last.lower_bound) / last.lower_bound).abs());
            }
        }
        // the horizon sphere itself for the massive case
        let flow = flow_spheres(&g, g.horizon_area(), 3.0, 20).map_err(fail)?;
        let last = flow.last().unwrap();
        worst_eq = worst_eq.max(((last.swept_volume - last.lower_bound) / last.lower_bound).abs());
    }
    let mut worst_ineq = f64::INFINITY;
    for g in ramps()? {
        let flow = flow_spheres(&g, g.horizon_area(), 3.0, 60).map_err(fail)?;
        for f in flow.iter().skip(1) {
            worst_ineq = worst_ineq.min((f.swept_volume - f.lower_bound) / f.lower_bound);
        }
    }
    check(
        worst_eq <= SWEPT_EQUALITY_REL_TOL && worst_ineq >= -SWEPT_INEQUALITY_SLACK,
        format!("exact: max rel gap {worst_eq:.3e}; perturbed: min rel excess {worst_ineq:.3e}"),
    )
}

fn geroch_monotonicity() -> Outcome {
    let mut worst = f64::INFINITY;
    for g in ramps()? {
        let (_, min_r) = g.min_scalar_curvature(2000).map_err(fail)?;
        if min_r < -6.0 - 1e-9 {
            return Err(format!("test metric has R = {min_r}"));
        }
        let flow = flow_spheres(&g, g.horizon_area(), 6.0, 200).map_err(fail)?;
        worst = worst.min(geroch_audit(&flow).map_err(fail)?.min_increment);
    }
    let cx = construct(CounterexampleParams::default()).map_err(fail)?;
    let flow = flow_spheres(&cx, cx.horizon_area(), 25.0, 200).map_err(fail)?;
    let audit = geroch_audit(&flow).map_err(fail)?;
    check(
        worst >= -GEROCH_SLACK && !audit.monotone,
        format!(
            "R ≥ −6 flows: min increment {worst:.3e}; counterexample: min increment {:.3e}",
            audit.min_increment
        ),
    )
}

fn renormalized_volume_consistency() -> Outcome {
    let h: Metric = make_hyperbolic();
    let v_hyp = renormalized_volume(&h).map_err(fail)?.abs();
    let tol = Tolerances::default();
    let v = |m: f64| renormalized_volume(&make_schwarzschild_ads(m).map_err(fail)?).map_err(fail);
    let mut worst: f64 = 0.0;
    let knots = [0.1, 0.5, 1.0, 2.0, 3.5, 5.0];
    let v0 = v(knots[0])?;
    for &b in &knots[1..] {
        let integral = integrate(
            |m: f64| renormalized_volume_derivative(m).unwrap_or(f64::NAN),
            knots[0],
            b,
            &tol,
        )
        .map_err(fail)?
        .value;
        worst = worst.max((integral - (v(b)? - v0)).abs());
    }
    let mut positive = true;
    for k in 0..20 {
        let m = 0.1 + 4.9 * k as f64 / 19.0;
        positive &= renormalized_volume_derivative(m).map_err(fail)? + 16.0 * PI * m > 0.0;
    }
    check(
        v_hyp <= HYPERBOLIC_VOLUME_TOL && worst <= VOLUME_DERIVATIVE_TOL && positive,
        format!("|V(hyp)| = {v_hyp:.1e}; max |∫dV − ΔV| = {worst:.3e}; d/dm(V + 8πm²) > 0 at 20 masses: {positive}"),
    )
}

fn penrose_margin_signs() -> Outcome {
    let mut metrics = Vec::new();
    for &m in &MASSES {
        metrics.push(make_schwarzschild_ads(m).map_err(fail)?);
    }
    metrics.extend(ramps()?.into_iter().take(2));
    let mut min_good = f64::INFINITY;
    for g in &metrics {
        min_good = min_good.min(penrose_margin(g).map_err(fail)?);
    }
    let cx = construct(CounterexampleParams::default()).map_err(fail)?;
    let bad = penrose_margin(&cx).map_err(fail)?;
    check(
        min_good > MARGIN_TOL && bad < -MARGIN_TOL,
        format!("min over five R ≥ −6 metrics {min_good:.6}; counterexample {bad:.6e}"),
    )
}

fn series_residual_orders() -> Outcome {
    let areas = log_grid(3.0, 7.0, 9);
    let mut orders = Vec::new();
    for &m in &MASSES {
        orders.push(
            expansion_residual_order(m, &areas, Variant::SchwAdSFull)
                .map_err(fail)?
                .fitted_order,
        );
    }
    let mut uniform: f64 = 0.0;
    for a in log_grid(3.0, 9.0, 13) {
        let p = expansion_residual(0.1 * a.sqrt(), a, Variant::SchwAdSUniform).map_err(fail)?;
        uniform = uniform.max((p.residual * a).abs());
    }
    let ok = orders.iter().all(|p| (p - ORDER_TARGET).abs() <= ORDER_TOL) && uniform <= UNIFORM_CONSTANT;
    check(
        ok,
        format!(
            "fitted orders {:.4}/{:.4}/{:.4}; uniform max |E|·A = {uniform:.4}",
            orders[0], orders[1], orders[2]
        ),
    )
}

fn counterexample_end_to_end() -> Outcome {
    let start = Instant::now();
    let g = construct(CounterexampleParams::default()).map_err(fail)?;
    let rep = verify(&g, &default_areas()).map_err(fail)?;
    let exact = make_schwarzschild_ads(1.0).map_err(fail)?;
    let balls_win = compare_profile(&exact, &default_areas())
        .map_err(fail)?
        .iter()
        .all(|s| s.winner == Winner::CoordBall);
    let secs = start.elapsed().as_secs_f64();
    check(
        rep.verdict_r_violated
            && rep.verdict_margin_negative
            && rep.verdict_balls_lose
            && balls_win
            && secs <= RUNTIME_LIMIT_S,
        format!(
            "verdicts {}/{}/{}; exact balls win {balls_win}; {secs:.2} s",
            rep.verdict_r_violated, rep.verdict_margin_negative, rep.verdict_balls_lose
        ),
    )
}

fn mass_coefficient_recovery() -> Outcome {
    let target = profile_mass_coefficient::<f64>();
    let mut worst: f64 = 0.0;
    let mut found = Vec::new();
    for &m in &[1.0, 2.0] {
        let g = make_schwarzschild_ads(m).map_err(fail)?;
        let (_, extracted) = profile_expansion_check(&g, &[1e6]).map_err(fail)?[0];
        worst = worst.max((extracted / (target * m) - 1.0).abs());
        found.push(extracted / m);
    }
    check(
        worst <= COEFFICIENT_REL_TOL,
        format!(
            "extracted/m = {:.4}, {:.4} vs {target:.4} (max rel dev {worst:.4})",
            found[0], found[1]
        ),
    )
}

fn coarse_error_bounded() -> Outcome {
    let mut max: f64 = 0.0;
    for a in log_grid(0.0, 8.0, 30) {
        max = max.max(coarse_error_integral(a).map_err(fail)?);
    }
    check(max <= COARSE_CONSTANT, format!("max {max:.6} ≤ {COARSE_CONSTANT}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("Hawking-mass exactness", hawking_mass_exactness),
        ("scalar-curvature exactness", scalar_curvature_exactness),
        ("profile derivative identity", profile_derivative_identity),
        ("swept-volume equality case", swept_volume_equality),
        ("Geroch audit", geroch_monotonicity),
        ("renormalized-volume consistency", renormalized_volume_consistency),
        ("Penrose-margin signs", penrose_margin_signs),
        ("series residual orders", series_residual_orders),
        ("counterexample end to end", counterexample_end_to_end),
        ("mass coefficient recovery", mass_coefficient_recovery),
        ("coarse error integral bounded", coarse_error_bounded),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                println!("FAIL {:>2} {name}: {detail}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
