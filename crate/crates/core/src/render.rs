//! Deterministic SVG pictures of the moduli in any chart.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::moduli::curves::{gamma_samples, CurveKind, CurveSpec};
use crate::moduli::mchart::{gamma_m_samples, BoundaryCurve};
use crate::moduli::reduction::{reduction_samples, ReductionKind};
use crate::moduli::regions::DividingCircle;
use crate::pentagon::{anchor_pentagon, Edge};
use crate::projection::{to_chart, ChartId, ChartPoint, Solid};
use crate::sphere::{minor_arc, UnitVec};

/// Significant digits in SVG coordinates.
pub const SVG_DIGITS: usize = 9;

/// `v` rounded to `digits` significant digits, without exponent, trailing zeros or "-0".
pub fn format_sig(v: f64, digits: usize) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    if v == 0.0 {
        return "0".into();
    }
    let exp = v.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    let mut s = format!("{v:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    if s == "-0" {
        s = "0".into();
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Layer {
    ModuliBoundary,
    RegionArcs,
    ReductionCurves,
    CoreTriangles,
    FaceSubdivision,
}

impl Layer {
    pub const ALL: [Layer; 5] = [
        Layer::ModuliBoundary,
        Layer::RegionArcs,
        Layer::ReductionCurves,
        Layer::CoreTriangles,
        Layer::FaceSubdivision,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Layer::ModuliBoundary => "moduli-boundary",
            Layer::RegionArcs => "region-arcs",
            Layer::ReductionCurves => "reduction-curves",
            Layer::CoreTriangles => "core-triangles",
            Layer::FaceSubdivision => "face-subdivision",
        }
    }
}

impl FromStr for Layer {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Layer::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown layer '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub solid: Solid,
    pub chart: ChartId,
    pub width_px: u32,
    pub include: BTreeSet<Layer>,
    pub samples_per_curve: usize,
    /// Anchor for the face-subdivision layer, in the A-chart.
    pub anchor: Option<Complex64>,
}

impl RenderOptions {
    pub fn new(solid: Solid) -> Self {
        RenderOptions {
            solid,
            chart: ChartId::M,
            width_px: 800,
            include: BTreeSet::from([Layer::ModuliBoundary]),
            samples_per_curve: 256,
            anchor: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples_per_curve < 16 {
            return Err(Error::InvalidArgument("samples per curve must be at least 16".into()));
        }
        if self.width_px < 64 {
            return Err(Error::InvalidArgument("width must be at least 64 px".into()));
        }
        Ok(())
    }
}

/// Anchor of the sample subdivision picture, in the A-chart.
pub fn default_anchor(solid: Solid) -> Complex64 {
    Complex64::from_polar(0.595 * solid.constants().d_ab, 36.8f64.to_radians())
}

/// SVG coordinate: 9 significant digits, with values below 1e-12 written as 0.
pub fn format_coord(v: f64) -> String {
    format_sig(if v.abs() < 1e-12 { 0.0 } else { v }, SVG_DIGITS)
}

/// One polyline in chart coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    pub id: String,
    pub points: Vec<Complex64>,
    pub closed: bool,
}

/// Chart positions of sphere points; points at the antipode of the chart origin split the line.
fn project_runs(solid: Solid, chart: ChartId, pts: &[UnitVec], limit: f64) -> Vec<Vec<Complex64>> {
    let mut runs = Vec::new();
    let mut cur = Vec::new();
    for p in pts {
        match to_chart(p, chart, solid) {
            Ok(c) if c.z.norm() <= limit => cur.push(c.z),
            _ => {
                if cur.len() > 1 {
                    runs.push(std::mem::take(&mut cur));
                } else {
                    cur.clear();
                }
            }
        }
    }
    if cur.len() > 1 {
        runs.push(cur);
    }
    runs
}

fn project(solid: Solid, chart: ChartId, pts: &[UnitVec]) -> Vec<Complex64> {
    project_runs(solid, chart, pts, f64::INFINITY).into_iter().flatten().collect()
}

fn arc_points(u: &UnitVec, v: &UnitVec, samples: usize) -> Vec<UnitVec> {
    match minor_arc(*u, *v) {
        Ok(arc) => (0..samples).map(|k| arc.point_at(k as f64 / (samples - 1) as f64)).collect(),
        Err(_) => vec![*u],
    }
}

fn polygon_points(vertices: &[UnitVec], per_edge: usize) -> Vec<UnitVec> {
    let mut out = Vec::new();
    for (k, u) in vertices.iter().enumerate() {
        let v = &vertices[(k + 1) % vertices.len()];
        let mut pts = arc_points(u, v, per_edge);
        pts.pop();
        out.extend(pts);
    }
    out
}

/// Boundary pieces in order: γ_C (A→B), γ_B (B→A′), arc A′→M, arc M→B′, γ_A (B′→A).
pub fn boundary_polylines(opts: &RenderOptions) -> Vec<Polyline> {
    let (solid, chart, k) = (opts.solid, opts.chart, opts.samples_per_curve);
    let g = solid.geometry();
    let curve = |which: BoundaryCurve| -> Vec<Complex64> {
        let native = match (which, chart) {
            (BoundaryCurve::GammaA, ChartId::A) => Some(CurveKind::GammaA),
            (BoundaryCurve::GammaB, ChartId::B) => Some(CurveKind::GammaB),
            (BoundaryCurve::GammaC, ChartId::A) => Some(CurveKind::GammaCInA),
            (BoundaryCurve::GammaC, ChartId::B) => Some(CurveKind::GammaCInB),
            _ => None,
        };
        match native {
            Some(kind) => gamma_samples(&CurveSpec::new(kind, solid), k).iter().map(|s| s.z.z).collect(),
            None => {
                let world: Vec<UnitVec> = gamma_m_samples(which, solid, k).iter().map(|s| s.xi).collect();
                project(solid, chart, &world)
            }
        }
    };
    let arc = |u: &UnitVec, v: &UnitVec| project(solid, chart, &arc_points(u, v, k));
    vec![
        Polyline { id: "gammaC".into(), points: curve(BoundaryCurve::GammaC), closed: false },
        Polyline { id: "gammaB".into(), points: curve(BoundaryCurve::GammaB), closed: false },
        Polyline { id: "arc-ApM".into(), points: arc(&g.a_prime, &g.m), closed: false },
        Polyline { id: "arc-MBp".into(), points: arc(&g.m, &g.b_prime), closed: false },
        Polyline { id: "gammaA".into(), points: curve(BoundaryCurve::GammaA), closed: false },
    ]
}

fn region_arc_polylines(opts: &RenderOptions) -> Vec<Polyline> {
    const STEPS: usize = 720;
    let solid = opts.solid;
    let mut out = Vec::new();
    for circle in DividingCircle::all(solid) {
        let n = circle.normal(solid);
        let seed = if n.x.abs() < 0.9 { nalgebra::Vector3::x() } else { nalgebra::Vector3::y() };
        let t1 = n.cross(&seed).normalize();
        let t2 = n.cross(&t1);
        let pts: Vec<UnitVec> = (0..=STEPS)
            .map(|k| {
                let s = 2.0 * PI * k as f64 / STEPS as f64;
                UnitVec::from_vector(t1 * s.cos() + t2 * s.sin()).expect("unit circle point")
            })
            .collect();
        let name = match circle {
            DividingCircle::AB => "AB".to_string(),
            DividingCircle::AboutA(k) => format!("A{k}"),
            DividingCircle::AboutB(k) => format!("B{k}"),
        };
        for (j, run) in project_runs(solid, opts.chart, &pts, 2.5).into_iter().enumerate() {
            out.push(Polyline { id: format!("circle-{name}-{j}"), points: run, closed: false });
        }
    }
    out
}

fn reduction_polylines(opts: &RenderOptions) -> Vec<Polyline> {
    ReductionKind::ALL
        .iter()
        .map(|&kind| {
            let world: Vec<UnitVec> =
                reduction_samples(kind, opts.solid, opts.samples_per_curve).iter().map(|s| s.sample.xi).collect();
            Polyline { id: kind.to_string(), points: project(opts.solid, opts.chart, &world), closed: false }
        })
        .collect()
}

fn core_triangle_polylines(opts: &RenderOptions) -> Vec<Polyline> {
    let g = opts.solid.geometry();
    let per_edge = (opts.samples_per_curve / 4).max(2);
    [
        ("omega1", [g.a, g.b, g.m]),
        ("omega2", [g.a, g.c, g.b]),
        ("omega3", [g.a, g.m, g.b_prime]),
        ("omega7", [g.b, g.a_prime, g.m]),
    ]
    .iter()
    .map(|(id, tri)| Polyline {
        id: id.to_string(),
        points: project(opts.solid, opts.chart, &polygon_points(tri, per_edge)),
        closed: true,
    })
    .collect()
}

fn face_subdivision_polylines(opts: &RenderOptions) -> Result<Vec<Polyline>> {
    let solid = opts.solid;
    let g = solid.geometry();
    let z = opts.anchor.unwrap_or_else(|| default_anchor(solid));
    let v = ChartPoint::new(z, ChartId::A, solid).to_sphere();
    let base = anchor_pentagon(solid, v)?;
    let per_edge = (opts.samples_per_curve / 4).max(2);
    let turn = |k: f64| g.frame(ChartId::A).turn(k * 2.0 * PI / 3.0);
    let corners: Vec<UnitVec> = [0.0, 1.0, 2.0].iter().map(|&k| turn(k).apply(&g.b)).collect();
    let mut out = vec![Polyline {
        id: "face".into(),
        points: project(solid, opts.chart, &polygon_points(&corners, per_edge)),
        closed: true,
    }];
    for (k, label) in [(0.0, "pentagon-0"), (1.0, "pentagon-1"), (2.0, "pentagon-2")] {
        let p = base.rotated(&turn(k));
        let mut world = Vec::new();
        for e in Edge::ALL {
            let arc = p.edge(e);
            let mut pts = arc_points(&arc.u(), &arc.v(), per_edge);
            pts.pop();
            world.extend(pts);
        }
        out.push(Polyline { id: label.into(), points: project(solid, opts.chart, &world), closed: true });
    }
    Ok(out)
}

fn write_group(svg: &mut String, id: &str, stroke: &str, width: f64, lines: &[Polyline]) {
    let _ = writeln!(svg, "<g id=\"{id}\" stroke=\"{stroke}\" stroke-width=\"{}\">", format_sig(width, SVG_DIGITS));
    for line in lines {
        if line.points.is_empty() {
            continue;
        }
        let mut d = String::new();
        for (k, z) in line.points.iter().enumerate() {
            let _ = write!(d, "{}{} {}", if k == 0 { "M" } else { " L" }, format_coord(z.re), format_coord(z.im));
        }
        if line.closed {
            d.push_str(" Z");
        }
        let _ = writeln!(svg, "<path id=\"{}\" d=\"{d}\"/>", line.id);
    }
    svg.push_str("</g>\n");
}

/// The SVG document. Equal options give byte-identical output.
pub fn render_svg(opts: &RenderOptions) -> Result<String> {
    opts.validate()?;
    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{w}\" viewBox=\"-1.1 -1.1 2.2 2.2\">",
        w = opts.width_px
    );
    let _ = writeln!(svg, "<title>n={} {}-chart</title>", opts.solid.n(), opts.chart);
    svg.push_str("<g transform=\"scale(1,-1)\" fill=\"none\" stroke-linecap=\"round\" stroke-linejoin=\"round\">\n");
    svg.push_str("<circle id=\"equator\" cx=\"0\" cy=\"0\" r=\"1\" stroke=\"#999999\" stroke-width=\"0.002\"/>\n");
    for layer in &opts.include {
        match layer {
            Layer::RegionArcs => write_group(&mut svg, layer.name(), "#c8c8c8", 0.003, &region_arc_polylines(opts)),
            Layer::CoreTriangles => {
                write_group(&mut svg, layer.name(), "#4a7ab5", 0.004, &core_triangle_polylines(opts))
            }
            Layer::ReductionCurves => write_group(&mut svg, layer.name(), "#c0392b", 0.004, &reduction_polylines(opts)),
            Layer::FaceSubdivision => {
                write_group(&mut svg, layer.name(), "#2e8b57", 0.004, &face_subdivision_polylines(opts)?)
            }
            Layer::ModuliBoundary => write_group(&mut svg, layer.name(), "#000000", 0.006, &boundary_polylines(opts)),
        }
    }
    svg.push_str("</g>\n</svg>\n");
    Ok(svg)
}
