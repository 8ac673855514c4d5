//! `pentamod` command line.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::area::{consistency_a2a4a8, elliptic_vs_quadrature, monte_carlo_area, part_areas};
use crate::moduli::curves::{gamma_samples, CurveKind, CurveSample, CurveSpec};
use crate::moduli::mchart::{gamma_m_samples, BoundaryCurve};
use crate::moduli::membership::analytic_in_moduli;
use crate::moduli::reduction::{reduction_samples, ReductionKind};
use crate::moduli::regions::region_of;
use crate::pentagon::{anchor_pentagon, is_simple};
use crate::projection::{chart_xi, to_chart, ChartId, ChartPoint, Solid};
use crate::render::{format_sig, render_svg, Layer, RenderOptions};
use crate::sphere::{UnitVec, ANGLE_TOL};
use crate::verify::{run_verify, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;
pub const EXIT_IO: i32 = 4;
pub const EXIT_VERIFY_FAILED: i32 = 5;

pub const SCHEMA: u32 = 1;

/// Digits in CSV output.
pub const CSV_DIGITS: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "pentamod", version, about = "Moduli of pentagonal subdivision tilings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one anchor point with the analytic predicate and the pentagon oracle.
    Check(CheckArgs),
    /// Sample a boundary or reduction curve.
    Curve(CurveArgs),
    /// Part areas and total area of the moduli.
    Area(AreaArgs),
    /// Write an SVG picture of the moduli.
    Render(RenderArgs),
    /// Compare the analytic predicate with the oracle on random points.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SolidArg {
    #[value(name = "3")]
    Three,
    #[value(name = "4")]
    Four,
    #[value(name = "5")]
    Five,
}

impl From<SolidArg> for Solid {
    fn from(s: SolidArg) -> Solid {
        match s {
            SolidArg::Three => Solid::Tetrahedron,
            SolidArg::Four => Solid::Octahedron,
            SolidArg::Five => Solid::Icosahedron,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ChartArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "M", alias = "m")]
    M,
}

impl From<ChartArg> for ChartId {
    fn from(c: ChartArg) -> ChartId {
        match c {
            ChartArg::A => ChartId::A,
            ChartArg::B => ChartId::B,
            ChartArg::M => ChartId::M,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
pub enum FormatArg {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CurveArg {
    #[value(name = "gammaA")]
    GammaA,
    #[value(name = "gammaB")]
    GammaB,
    #[value(name = "gammaC")]
    GammaC,
    #[value(name = "a=b")]
    AEqB,
    #[value(name = "a=c")]
    AEqC,
    #[value(name = "b=c")]
    BEqC,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub solid: SolidArg,
    #[arg(long, value_enum, default_value = "M")]
    pub chart: ChartArg,
    /// `x+yi` or polar `r@degrees`.
    #[arg(long, allow_hyphen_values = true)]
    pub point: String,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(value_enum)]
    pub which: CurveArg,
    #[arg(long, value_enum)]
    pub solid: SolidArg,
    #[arg(long, value_enum, default_value = "M")]
    pub chart: ChartArg,
    #[arg(long, default_value_t = 256)]
    pub samples: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct AreaArgs {
    #[arg(long, value_enum)]
    pub solid: SolidArg,
    /// Add a Monte-Carlo estimate from SAMPLES points drawn with SEED.
    #[arg(long, num_args = 2, value_names = ["SAMPLES", "SEED"])]
    pub mc: Option<Vec<u64>>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long, value_enum)]
    pub solid: SolidArg,
    #[arg(long, value_enum, default_value = "M")]
    pub chart: ChartArg,
    #[arg(long, default_value_t = 800)]
    pub width: u32,
    /// Comma-separated layers: moduli-boundary, region-arcs, reduction-curves, core-triangles, face-subdivision.
    #[arg(long, value_delimiter = ',', default_value = "moduli-boundary")]
    pub include: Vec<String>,
    #[arg(long, default_value_t = 256)]
    pub samples: usize,
    /// Face-subdivision anchor in the A-chart.
    #[arg(long, allow_hyphen_values = true)]
    pub anchor: Option<String>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub solid: SolidArg,
    #[arg(long, default_value_t = 20_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Boundary exclusion band in radians.
    #[arg(long, default_value_t = VerifyConfig::DEFAULT_BAND)]
    pub band: f64,
}

/// Parses `x+yi` (anything `Complex64` accepts) or `r@degrees`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t = s.trim();
    if let Some((r, deg)) = t.split_once('@') {
        let r: f64 = r.trim().parse().map_err(|_| format!("bad modulus in '{s}'"))?;
        let deg: f64 = deg.trim().parse().map_err(|_| format!("bad angle in '{s}'"))?;
        return Ok(Complex64::from_polar(r, deg.to_radians()));
    }
    let z: Complex64 = t.parse().map_err(|_| format!("cannot parse '{s}' as a complex number"))?;
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(format!("'{s}' is not finite"))
    }
}

struct Outcome {
    code: i32,
}

type CmdResult = Result<Outcome, (i32, String)>;

fn usage(msg: impl Into<String>) -> (i32, String) {
    (EXIT_USAGE, msg.into())
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<(), (i32, String)> {
    let text = serde_json::to_string_pretty(v).expect("json values serialise");
    writeln!(out, "{text}").map_err(|e| (EXIT_IO, e.to_string()))
}

fn cmd_check(a: &CheckArgs, out: &mut dyn Write) -> CmdResult {
    let solid: Solid = a.solid.into();
    let chart: ChartId = a.chart.into();
    let z = parse_complex(&a.point).map_err(usage)?;
    let p = ChartPoint::new(z, chart, solid).to_sphere();
    let analytic = analytic_in_moduli(solid, &p);
    let (oracle, violations, construction) = match anchor_pentagon(solid, p) {
        Ok(pent) => {
            let rep = is_simple(&pent, ANGLE_TOL);
            (rep.simple, serde_json::to_value(&rep.violations).expect("serialisable"), Value::Null)
        }
        Err(e) => (false, json!([]), json!(e.to_string())),
    };
    let region = region_of(solid, &p);
    let label = region.interior().map(|r| r.to_string());
    let agree = analytic == oracle;
    emit(
        out,
        &json!({
            "schema": SCHEMA,
            "n": solid.n(),
            "chart": chart.to_string(),
            "point": [z.re, z.im],
            "xi": p.to_array(),
            "in_moduli_analytic": analytic,
            "in_moduli_oracle": oracle,
            "agree": agree,
            "region": region,
            "region_label": label,
            "simplicity_violations": violations,
            "construction_error": construction,
        }),
    )?;
    Ok(Outcome { code: if agree { EXIT_OK } else { EXIT_DISAGREE } })
}

/// Curve samples in the requested chart: (θ, r, z).
fn curve_rows(which: CurveArg, solid: Solid, chart: ChartId, samples: usize) -> Vec<(f64, f64, Complex64)> {
    let native = |s: &CurveSample| (s.theta, s.r, s.z.z);
    let world: Vec<UnitVec> = match (which, chart) {
        (CurveArg::GammaA, ChartId::A) => {
            return gamma_samples(&CurveSpec::new(CurveKind::GammaA, solid), samples).iter().map(native).collect()
        }
        (CurveArg::GammaB, ChartId::B) => {
            return gamma_samples(&CurveSpec::new(CurveKind::GammaB, solid), samples).iter().map(native).collect()
        }
        (CurveArg::GammaC, ChartId::A) => {
            return gamma_samples(&CurveSpec::new(CurveKind::GammaCInA, solid), samples).iter().map(native).collect()
        }
        (CurveArg::GammaC, ChartId::B) => {
            return gamma_samples(&CurveSpec::new(CurveKind::GammaCInB, solid), samples).iter().map(native).collect()
        }
        (CurveArg::GammaA | CurveArg::GammaB | CurveArg::GammaC, _) => {
            let b = match which {
                CurveArg::GammaA => BoundaryCurve::GammaA,
                CurveArg::GammaB => BoundaryCurve::GammaB,
                _ => BoundaryCurve::GammaC,
            };
            let m = gamma_m_samples(b, solid, samples);
            if chart == ChartId::M {
                return m.iter().map(native).collect();
            }
            m.iter().map(|s| s.xi).collect()
        }
        (_, _) => {
            let kind = match which {
                CurveArg::AEqB => ReductionKind::AEqB,
                CurveArg::AEqC => ReductionKind::AEqC,
                _ => ReductionKind::BEqC,
            };
            let m = reduction_samples(kind, solid, samples);
            if chart == ChartId::M {
                return m.iter().map(|s| native(&s.sample)).collect();
            }
            m.iter().map(|s| s.sample.xi).collect()
        }
    };
    world.iter().filter_map(|p| to_chart(p, chart, solid).ok()).map(|c| (c.z.arg(), c.z.norm(), c.z)).collect()
}

fn cmd_curve(a: &CurveArgs, out: &mut dyn Write) -> CmdResult {
    if a.samples < 2 {
        return Err(usage("samples must be at least 2"));
    }
    let solid: Solid = a.solid.into();
    let chart: ChartId = a.chart.into();
    let rows = curve_rows(a.which, solid, chart, a.samples);
    let io = |e: std::io::Error| (EXIT_IO, e.to_string());
    match a.format {
        FormatArg::Csv => {
            writeln!(out, "theta,r,x,y,xi1,xi2,xi3").map_err(io)?;
            for (theta, r, z) in rows {
                let xi = chart_xi(z);
                let cells: Vec<String> =
                    [theta, r, z.re, z.im, xi.x, xi.y, xi.z].iter().map(|v| format_sig(*v, CSV_DIGITS)).collect();
                writeln!(out, "{}", cells.join(",")).map_err(io)?;
            }
        }
        FormatArg::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|(theta, r, z)| {
                    let xi = chart_xi(*z);
                    json!({"theta": theta, "r": r, "x": z.re, "y": z.im, "xi": [xi.x, xi.y, xi.z]})
                })
                .collect();
            emit(out, &json!({"schema": SCHEMA, "n": solid.n(), "chart": chart.to_string(), "samples": rows}))?;
        }
    }
    Ok(Outcome { code: EXIT_OK })
}

fn cmd_area(a: &AreaArgs, out: &mut dyn Write) -> CmdResult {
    let solid: Solid = a.solid.into();
    let report = part_areas(solid);
    let mut v = json!({
        "schema": SCHEMA,
        "n": solid.n(),
        "parts": {
            "A1": report.a1, "A2": report.a2, "A3": report.a3, "A7": report.a7,
            "A4": report.a4, "A5": report.a5, "A8": report.a8, "A13": report.a13,
        },
        "total": report.total,
        "total_over_pi": report.total_over_pi,
        "fraction_of_sphere": report.fraction_of_sphere,
        "consistency_a2a4a8": consistency_a2a4a8(solid),
        "elliptic_vs_quadrature": elliptic_vs_quadrature(solid),
    });
    if let Some(mc) = &a.mc {
        let est = monte_carlo_area(solid, mc[0], mc[1]).map_err(|e| usage(e.to_string()))?;
        v["monte_carlo"] = json!({
            "samples": est.samples,
            "seed": est.seed,
            "hits": est.hits,
            "estimate": est.estimate,
            "stderr": est.stderr,
            "deviation_in_stderr": (est.estimate - report.total) / est.stderr,
        });
    }
    emit(out, &v)?;
    Ok(Outcome { code: EXIT_OK })
}

fn cmd_render(a: &RenderArgs) -> CmdResult {
    let mut opts = RenderOptions::new(a.solid.into());
    opts.chart = a.chart.into();
    opts.width_px = a.width;
    opts.samples_per_curve = a.samples;
    opts.include = a
        .include
        .iter()
        .map(|s| s.trim().parse::<Layer>())
        .collect::<Result<BTreeSet<_>, _>>()
        .map_err(|e| usage(e.to_string()))?;
    if let Some(anchor) = &a.anchor {
        opts.anchor = Some(parse_complex(anchor).map_err(usage)?);
    }
    opts.validate().map_err(|e| usage(e.to_string()))?;
    let svg = render_svg(&opts).map_err(|e| usage(e.to_string()))?;
    std::fs::write(&a.out, svg).map_err(|e| (EXIT_IO, format!("{}: {e}", a.out.display())))?;
    Ok(Outcome { code: EXIT_OK })
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let cfg = VerifyConfig { solid: a.solid.into(), samples: a.samples, seed: a.seed, band: a.band };
    let report = run_verify(&cfg).map_err(|e| usage(e.to_string()))?;
    let mut v = serde_json::to_value(&report).expect("serialisable");
    v["schema"] = json!(SCHEMA);
    emit(out, &v)?;
    Ok(Outcome { code: if report.agree { EXIT_OK } else { EXIT_VERIFY_FAILED } })
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::Check(a) => cmd_check(a, out),
        Command::Curve(a) => cmd_curve(a, out),
        Command::Area(a) => cmd_area(a, out),
        Command::Render(a) => cmd_render(a),
        Command::Verify(a) => cmd_verify(a, out),
    };
    match result {
        Ok(o) => o.code,
        Err((code, msg)) => {
            let _ = writeln!(err, "pentamod: {msg}");
            code
        }
    }
}
