use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use ahiso::counterexample::{self, CounterexampleParams};
use ahiso::imcf::{flow_spheres, geroch_audit};
use ahiso::isoprofile::{
    compare_profile, expansion_report, expansion_residual, profile_expansion_check, profile_mass_coefficient,
    ExpansionVariant,
};
use ahiso::metric::MetricFile;
use ahiso::quantities::{
    ball_volume, penrose_margin, renormalized_volume, renormalized_volume_derivative_with, sphere_geometry,
};
use ahiso::{Metric, Tolerances};
use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "ahiso",
    version,
    about = "Isoperimetric and IMCF computations on rotationally symmetric AH metrics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[arg(long, global = true)]
    abs_tol: Option<f64>,
    #[arg(long, global = true)]
    rel_tol: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Hyperbolic,
    Full,
    Uniform,
    Perturbation,
}

#[derive(Args)]
struct MetricArgs {
    /// Metric description as inline JSON or `@path`.
    #[arg(long, value_parser = parse_metric, conflicts_with = "mass")]
    metric: Option<MetricFile>,
    /// Shorthand for Schwarzschild-AdS of this mass (hyperbolic space for 0).
    #[arg(long)]
    mass: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Summary of a metric: horizon, mass, renormalized volume, curvature minimum.
    MetricInfo {
        #[command(flatten)]
        metric: MetricArgs,
    },
    /// Geometry of the centered sphere of a given area.
    Quantities {
        #[command(flatten)]
        metric: MetricArgs,
        #[arg(long, value_parser = parse_area)]
        area: f64,
    },
    /// Renormalized volume, and its mass derivative for Schwarzschild-AdS.
    RenormVol {
        #[command(flatten)]
        metric: MetricArgs,
    },
    /// Inverse mean curvature flow of a centered sphere.
    Imcf {
        #[command(flatten)]
        metric: MetricArgs,
        #[arg(long, value_parser = parse_area)]
        area: f64,
        #[arg(long, default_value_t = 5.0)]
        tmax: f64,
        #[arg(long, default_value_t = 200)]
        steps: usize,
    },
    /// Coordinate balls against the horizon-plus-ball competitor.
    Profile {
        #[command(flatten)]
        metric: MetricArgs,
        #[arg(long, value_parser = parse_areas)]
        areas: Option<Grid>,
    },
    /// Residuals of the large-area volume series.
    VerifyExpansion {
        #[command(flatten)]
        metric: MetricArgs,
        #[arg(long, value_parser = parse_areas)]
        areas: Option<Grid>,
        #[arg(long, value_enum, default_value = "full")]
        variant: VariantArg,
        /// Use the mass `alpha·√A` at each area instead of a fixed mass.
        #[arg(long, conflicts_with = "metric")]
        alpha: Option<f64>,
    },
    /// Mass term recovered from the inverted coordinate-ball profile.
    ProfileExpansion {
        #[command(flatten)]
        metric: MetricArgs,
        #[arg(long, value_parser = parse_areas)]
        volumes: Option<Grid>,
    },
    /// Build and verify the metric whose large coordinate balls are not isoperimetric.
    Counterexample {
        #[arg(long, default_value_t = 10.0)]
        r0: f64,
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        #[arg(long, default_value_t = 1.0)]
        mass: f64,
        /// Area radius at the start of the exact tail (default `sinh(r0 + 1)`).
        #[arg(long)]
        s1: Option<f64>,
        #[arg(long, default_value_t = 0.4)]
        bump_width: f64,
        #[arg(long, value_parser = parse_areas)]
        areas: Option<Grid>,
        /// Where to write the metric file (default `<out stem>.metric.json`).
        #[arg(long)]
        metric_out: Option<PathBuf>,
        /// Rows used to tabulate the profile in the metric file.
        #[arg(long, default_value_t = 2001)]
        samples: usize,
    },
}

fn parse_area(text: &str) -> Result<f64, String> {
    let text = text.trim();
    let value = match text.strip_suffix("pi") {
        Some("") => std::f64::consts::PI,
        Some(coeff) => coeff.parse::<f64>().map_err(|e| format!("bad area {text:?}: {e}"))? * std::f64::consts::PI,
        None => text.parse::<f64>().map_err(|e| format!("bad area {text:?}: {e}"))?,
    };
    if !value.is_finite() {
        return Err(format!("area {text:?} is not finite"));
    }
    Ok(value)
}

/// Values given as `lo:hi:n` (log-spaced, inclusive) or as a comma-separated list.
#[derive(Clone, Debug)]
struct Grid(Vec<f64>);

fn parse_areas(text: &str) -> Result<Grid, String> {
    parse_grid(text).map(Grid)
}

fn parse_grid(text: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() == 1 {
        return text.split(',').map(parse_area).collect();
    }
    if parts.len() != 3 {
        return Err(format!("expected lo:hi:n, got {text:?}"));
    }
    let lo = parse_area(parts[0])?;
    let hi = parse_area(parts[1])?;
    let n: usize = parts[2].parse().map_err(|e| format!("bad count {:?}: {e}", parts[2]))?;
    if !(lo > 0.0 && hi >= lo) || n == 0 {
        return Err(format!("need 0 < lo <= hi and n >= 1 in {text:?}"));
    }
    if n == 1 {
        return Ok(vec![lo]);
    }
    let (a, b) = (lo.log10(), hi.log10());
    Ok((0..n)
        .map(|i| match i {
            0 => lo,
            _ if i + 1 == n => hi,
            _ => 10f64.powf(a + (b - a) * i as f64 / (n - 1) as f64),
        })
        .collect())
}

fn parse_metric(text: &str) -> Result<MetricFile, String> {
    let body = match text.strip_prefix('@') {
        Some(path) => fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?,
        None => text.to_owned(),
    };
    MetricFile::from_json(&body).map_err(|e| e.to_string())
}

/// Rounds to 12 significant digits; the shortest representation of the result is printed.
fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn num(x: f64) -> String {
    let x = round12(x);
    if x == 0.0 || (1e-5..1e16).contains(&x.abs()) {
        x.to_string()
    } else {
        format!("{x:e}")
    }
}

fn round_json(v: Value) -> Value {
    match v {
        Value::Number(n) if !n.is_i64() && !n.is_u64() => n
            .as_f64()
            .and_then(|x| serde_json::Number::from_f64(round12(x)))
            .map_or(Value::Null, Value::Number),
        Value::Array(items) => Value::Array(items.into_iter().map(round_json).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, round_json(v))).collect()),
        other => other,
    }
}

fn to_json<S: Serialize>(value: &S) -> Value {
    round_json(serde_json::to_value(value).expect("serializable"))
}

struct Ctx {
    common: Common,
    tol: Tolerances,
}

impl Ctx {
    fn metric(&self, args: &MetricArgs) -> anyhow::Result<Metric> {
        let metric = match (&args.metric, args.mass) {
            (Some(file), _) => file.build()?,
            (None, Some(0.0)) => Metric::hyperbolic(),
            (None, Some(m)) => Metric::schwarzschild_ads(m)?,
            (None, None) => bail!("one of --metric or --mass is required"),
        };
        Ok(metric.with_tolerances(self.tol))
    }

    fn format(&self, default: Format) -> Format {
        self.common.format.unwrap_or(default)
    }

    fn emit(&self, text: &str) -> anyhow::Result<()> {
        match &self.common.out {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(text.as_bytes())?;
                Ok(out.flush()?)
            }
        }
    }

    fn emit_json(&self, value: &Value) -> anyhow::Result<()> {
        let mut text = serde_json::to_string_pretty(value)?;
        text.push('\n');
        self.emit(&text)
    }

    fn emit_csv(&self, header: &[&str], rows: &[Vec<String>]) -> anyhow::Result<()> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(header)?;
        for row in rows {
            w.write_record(row)?;
        }
        self.emit(&String::from_utf8(w.into_inner()?)?)
    }
}

fn require(grid: Option<Grid>, flag: &str) -> anyhow::Result<Vec<f64>> {
    match grid {
        Some(Grid(v)) => Ok(v),
        None => bail!("{flag} is required"),
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let mut tol = Tolerances::default();
    if let Some(a) = cli.common.abs_tol {
        tol = tol.with_abs_tol(a);
    }
    if let Some(r) = cli.common.rel_tol {
        tol = tol.with_rel_tol(r);
    }
    tol.validate()?;
    let ctx = Ctx {
        common: cli.common,
        tol,
    };

    match cli.command {
        Command::MetricInfo { metric } => {
            let g = ctx.metric(&metric).context("metric-info")?;
            let (s_min, r_min) = g.min_scalar_curvature(1000).context("metric-info")?;
            let renorm = renormalized_volume(&g).context("metric-info: renormalized volume")?;
            ctx.emit_json(&round_json(json!({
                "kind": format!("{:?}", g.kind()),
                "mass": g.mass(),
                "horizon_radius": g.horizon_radius(),
                "horizon_area": g.horizon_area(),
                "tail_start": g.tail_start(),
                "renormalized_volume": renorm,
                "penrose_margin": g.horizon_radius().map(|_| renorm + 0.5 * g.horizon_area()),
                "min_scalar_curvature": r_min,
                "min_scalar_curvature_at": s_min,
            })))
        }
        Command::Quantities { metric, area } => {
            let g = ctx.metric(&metric).context("quantities")?;
            let s = (area / (4.0 * std::f64::consts::PI)).sqrt();
            let geo = sphere_geometry(&g, s).context("quantities")?;
            let vol = ball_volume(&g, s).context("quantities: ball volume")?;
            let mut v = to_json(&geo);
            v["ball_volume"] = json!(round12(vol));
            ctx.emit_json(&v)
        }
        Command::RenormVol { metric } => {
            let g = ctx.metric(&metric).context("renorm-vol")?;
            let renorm = renormalized_volume(&g).context("renorm-vol")?;
            let mut v = json!({ "renormalized_volume": renorm });
            if g.horizon_radius().is_some() {
                v["penrose_margin"] = json!(penrose_margin(&g)?);
            }
            if g.kind() == ahiso::metric::MetricKind::SchwarzschildAds {
                let m = g.mass();
                v["derivative"] = json!(renormalized_volume_derivative_with(m, &ctx.tol).context("renorm-vol")?);
                v["monotone_combination_derivative"] =
                    json!(v["derivative"].as_f64().unwrap() + 16.0 * std::f64::consts::PI * m);
            }
            ctx.emit_json(&round_json(v))
        }
        Command::Imcf {
            metric,
            area,
            tmax,
            steps,
        } => {
            let g = ctx.metric(&metric).context("imcf")?;
            let flow = flow_spheres(&g, area, tmax, steps).context("imcf")?;
            let audit = geroch_audit(&flow).context("imcf")?;
            match ctx.format(Format::Csv) {
                Format::Json => ctx.emit_json(&round_json(json!({
                    "samples": to_json(&flow),
                    "min_mass_increment": audit.min_increment,
                    "monotone": audit.monotone,
                }))),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = flow
                        .iter()
                        .map(|f| {
                            [
                                f.t,
                                f.area,
                                f.s,
                                f.mean_curvature,
                                f.hawking_mass,
                                f.swept_volume,
                                f.lower_bound,
                            ]
                            .iter()
                            .map(|&x| num(x))
                            .collect()
                        })
                        .collect();
                    ctx.emit_csv(
                        &[
                            "t",
                            "area",
                            "s",
                            "mean_curvature",
                            "hawking_mass",
                            "swept_volume",
                            "lower_bound",
                        ],
                        &rows,
                    )
                }
            }
        }
        Command::Profile { metric, areas } => {
            let areas = require(areas, "--areas")?;
            let g = ctx.metric(&metric).context("profile")?;
            let samples = compare_profile(&g, &areas).context("profile")?;
            match ctx.format(Format::Csv) {
                Format::Json => ctx.emit_json(&to_json(&samples)),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = samples
                        .iter()
                        .map(|p| {
                            vec![
                                num(p.area),
                                num(p.vol_coord_ball),
                                num(p.vol_generalized),
                                p.winner.as_str().to_owned(),
                                num(p.mean_curvature),
                            ]
                        })
                        .collect();
                    ctx.emit_csv(
                        &["area", "vol_coord_ball", "vol_generalized", "winner", "mean_curvature"],
                        &rows,
                    )
                }
            }
        }
        Command::VerifyExpansion {
            metric,
            areas,
            variant,
            alpha,
        } => {
            let areas = require(areas, "--areas")?;
            let (area, exact, series, residual, order) = match alpha {
                Some(alpha) => {
                    let variant = match variant {
                        VariantArg::Full => ExpansionVariant::SchwAdSFull,
                        VariantArg::Uniform => ExpansionVariant::SchwAdSUniform,
                        _ => bail!("verify-expansion: --alpha needs --variant full or uniform"),
                    };
                    let mut cols = (vec![], vec![], vec![], vec![]);
                    for &a in &areas {
                        let p = expansion_residual(alpha * a.sqrt(), a, variant).context("verify-expansion")?;
                        cols.0.push(a);
                        cols.1.push(p.exact);
                        cols.2.push(p.series);
                        cols.3.push(p.residual.abs());
                    }
                    let order = ahiso::numerics::fit_log_slope(&cols.0, &cols.3).context("verify-expansion")?;
                    (cols.0, cols.1, cols.2, cols.3, order)
                }
                None => {
                    let g = ctx.metric(&metric).context("verify-expansion")?;
                    let variant = match variant {
                        VariantArg::Hyperbolic => ExpansionVariant::HyperbolicBall,
                        VariantArg::Full => ExpansionVariant::SchwAdSFull,
                        VariantArg::Uniform => ExpansionVariant::SchwAdSUniform,
                        VariantArg::Perturbation => {
                            ExpansionVariant::CompactPerturbation(renormalized_volume(&g).context("verify-expansion")?)
                        }
                    };
                    let rep = expansion_report(&g, &areas, variant).context("verify-expansion")?;
                    (rep.areas, rep.exact, rep.series, rep.residuals, rep.fitted_order)
                }
            };
            match ctx.format(Format::Csv) {
                Format::Json => ctx.emit_json(&round_json(json!({
                    "areas": area, "exact": exact, "series": series, "residuals": residual, "fitted_order": order,
                }))),
                Format::Csv => {
                    eprintln!("fitted_order = {}", num(order));
                    let rows: Vec<Vec<String>> = (0..area.len())
                        .map(|i| vec![num(area[i]), num(exact[i]), num(series[i]), num(residual[i])])
                        .collect();
                    ctx.emit_csv(&["area", "exact", "series", "residual"], &rows)
                }
            }
        }
        Command::ProfileExpansion { metric, volumes } => {
            let volumes = require(volumes, "--volumes")?;
            let g = ctx.metric(&metric).context("profile-expansion")?;
            let out = profile_expansion_check(&g, &volumes).context("profile-expansion")?;
            let predicted = profile_mass_coefficient::<f64>() * g.mass();
            match ctx.format(Format::Csv) {
                Format::Json => ctx.emit_json(&round_json(json!({
                    "volumes": out.iter().map(|p| p.0).collect::<Vec<_>>(),
                    "extracted": out.iter().map(|p| p.1).collect::<Vec<_>>(),
                    "predicted": predicted,
                }))),
                Format::Csv => {
                    let rows: Vec<Vec<String>> =
                        out.iter().map(|&(v, e)| vec![num(v), num(e), num(predicted)]).collect();
                    ctx.emit_csv(&["volume", "extracted", "predicted"], &rows)
                }
            }
        }
        Command::Counterexample {
            r0,
            eps,
            mass,
            s1,
            bump_width,
            areas,
            metric_out,
            samples,
        } => {
            let mut params = CounterexampleParams::new(r0, eps, mass);
            params.bump_width = bump_width;
            if let Some(s1) = s1 {
                params.s1 = s1;
            }
            let g = counterexample::construct_with_tolerances(params, ctx.tol).context("counterexample: construct")?;
            let areas = areas.map_or_else(counterexample::default_areas, |g| g.0);
            let report = counterexample::verify(&g, &areas).context("counterexample: verify")?;
            let metric_path = metric_out.or_else(|| ctx.common.out.as_deref().map(metric_path_for));
            if let Some(path) = &metric_path {
                let file = MetricFile::from_metric(&g, samples);
                fs::write(path, file.to_json() + "\n").with_context(|| format!("writing {}", path.display()))?;
            }
            let mut v = to_json(&report);
            v["params"] = to_json(&params);
            if let Some(path) = metric_path {
                v["metric_file"] = json!(path.display().to_string());
            }
            ctx.emit_json(&v)
        }
    }
}

fn metric_path_for(out: &Path) -> PathBuf {
    let stem = out
        .file_stem()
        .map_or_else(|| "counterexample".into(), |s| s.to_string_lossy().into_owned());
    out.with_file_name(format!("{stem}.metric.json"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
