//! Reduction loci where two edge lengths coincide: a=b (a great circle), a=c and b=c
//! (sphere ∩ parabolic cylinder). All forms are in the M-chart frame.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::fmt;
use std::str::FromStr;

use nalgebra::Vector3;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::moduli::curves::CurveSample;
use crate::moduli::mchart::{gamma_m_chart, moduli_radius_m, BoundaryCurve};
use crate::projection::{ChartId, Solid};
use crate::roots::smallest_root;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ReductionKind {
    #[serde(rename = "a=b")]
    AEqB,
    #[serde(rename = "a=c")]
    AEqC,
    #[serde(rename = "b=c")]
    BEqC,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 3] = [ReductionKind::AEqB, ReductionKind::AEqC, ReductionKind::BEqC];
}

impl fmt::Display for ReductionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ReductionKind::AEqB => "a=b",
            ReductionKind::AEqC => "a=c",
            ReductionKind::BEqC => "b=c",
        };
        f.write_str(s)
    }
}

impl FromStr for ReductionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a=b" => Ok(ReductionKind::AEqB),
            "a=c" => Ok(ReductionKind::AEqC),
            "b=c" => Ok(ReductionKind::BEqC),
            _ => Err(Error::InvalidArgument(format!("unknown reduction '{s}'"))),
        }
    }
}

/// μ in the icosahedral a=b circle.
pub fn mu() -> f64 {
    (195.0 - 6.0 * 5f64.sqrt()).sqrt() / 58.0
}

/// Normal of the a=b plane (not normalised).
pub fn a_eq_b_plane(solid: Solid) -> Vector3<f64> {
    let (s2, s3, s5) = (2f64.sqrt(), 3f64.sqrt(), 5f64.sqrt());
    match solid {
        Solid::Tetrahedron => Vector3::new(1.0, -1.0, 0.0),
        Solid::Octahedron => Vector3::new(s2, -s3, -(s3 - 2.0)),
        Solid::Icosahedron => {
            let f5 = 5f64.powf(0.25);
            Vector3::new(2.0 * f5, -6f64.sqrt() * (s5 + 1.0).sqrt(), (s5 + 3.0) * f5 - s3 / s2 * (s5 + 1.0).powf(1.5))
        }
    }
}

/// Centre (−g, −f) of the a=b circle x² + y² + 2gx + 2fy − 1 = 0 in the M-chart.
/// `None` for the tetrahedron, where the circle degenerates to the line x = y.
pub fn a_eq_b_circle(solid: Solid) -> Option<(f64, f64)> {
    let (s2, s3, s5) = (2f64.sqrt(), 3f64.sqrt(), 5f64.sqrt());
    match solid {
        Solid::Tetrahedron => None,
        Solid::Octahedron => Some((-(s3 + 2.0) * s2, (s3 + 2.0) * s3)),
        Solid::Icosahedron => {
            let mu = mu();
            Some(((s5 - 11.0) * mu - s5, (5.0 * s5 + 3.0) * mu + 3.0))
        }
    }
}

/// Closed-form radius of the a=b circle.
pub fn a_eq_b_circle_radius(solid: Solid) -> Option<f64> {
    let (s3, s5) = (3f64.sqrt(), 5f64.sqrt());
    match solid {
        Solid::Tetrahedron => None,
        Solid::Octahedron => Some(2.0 * (9.0 + 5.0 * s3).sqrt()),
        Solid::Icosahedron => Some((4.0 * (13.0 * s5 + 2.0) * mu() + 30.0).sqrt()),
    }
}

/// Coefficients (k, c1, c0) of q² + k·q·u + c1·q + k·u + c0 with q = x² + y², u = x (a=c) or y (b=c).
pub fn quartic_coefficients(kind: ReductionKind, solid: Solid) -> Option<(f64, f64, f64)> {
    let (s2, s3, s5) = (2f64.sqrt(), 3f64.sqrt(), 5f64.sqrt());
    let s15 = 15f64.sqrt();
    let s6 = 6f64.sqrt();
    let f5 = 5f64.powf(0.25);
    match (kind, solid) {
        (ReductionKind::AEqB, _) => None,
        (ReductionKind::AEqC, Solid::Tetrahedron) => Some((s2 * (s3 - 1.0), -3.0 * s3 * (s3 - 1.0), 2.0 - s3)),
        (ReductionKind::AEqC, Solid::Octahedron) => Some((2.0 * (s3 - s2), -6.0 * s3 * (s3 - s2), 5.0 - 2.0 * s6)),
        (ReductionKind::AEqC, Solid::Icosahedron) => Some((
            (s5 - s3) * (s3 - 1.0),
            3.0 * (2.0 * s15 - 3.0 * s5 + 4.0 * s3 - 9.0),
            -2.0 * s15 + 3.0 * s5 - 4.0 * s3 + 8.0,
        )),
        (ReductionKind::BEqC, Solid::Tetrahedron) => Some((s2 * (s3 - 1.0), -3.0 * s3 * (s3 - 1.0), 2.0 - s3)),
        (ReductionKind::BEqC, Solid::Octahedron) => Some((2.0 * (s2 - 1.0), -6.0 * s2 * (s2 - 1.0), 3.0 - 2.0 * s2)),
        (ReductionKind::BEqC, Solid::Icosahedron) => {
            let p = (s5 + 1.0).powf(1.5) * f5 / s2;
            Some((s2 * (s5 + 1.0).sqrt() * f5 - s5 - 1.0, 3.0 * (p - s5 - 5.0), -p + s5 + 4.0))
        }
    }
}

/// Plane (a=b) or parabolic-cylinder (a=c, b=c) form at a world point.
pub fn reduction_residual(kind: ReductionKind, solid: Solid, p: &crate::sphere::UnitVec) -> f64 {
    let (x1, x2, x3) = (p.xi1(), p.xi2(), p.xi3());
    let (s2, s3, s5) = (2f64.sqrt(), 3f64.sqrt(), 5f64.sqrt());
    let f5 = 5f64.powf(0.25);
    match (kind, solid) {
        (ReductionKind::AEqB, _) => a_eq_b_plane(solid).dot(&Vector3::new(x1, x2, x3)),
        (ReductionKind::AEqC, Solid::Tetrahedron) => 2.0 * s3 * x3 * x3 + s2 * x1 + x3 - s3,
        (ReductionKind::AEqC, Solid::Octahedron) => 2.0 * s3 * x3 * x3 + x1 + s2 * x3 - s3,
        (ReductionKind::AEqC, Solid::Icosahedron) => 4.0 * s3 * x3 * x3 + (s5 - 1.0) * x1 + (s5 + 1.0) * x3 - 2.0 * s3,
        (ReductionKind::BEqC, Solid::Tetrahedron) => 2.0 * s3 * x3 * x3 + s2 * x2 + x3 - s3,
        (ReductionKind::BEqC, Solid::Octahedron) => 2.0 * s2 * x3 * x3 + x2 + x3 - s2,
        (ReductionKind::BEqC, Solid::Icosahedron) => {
            2.0 * s2 * f5 * x3 * x3 + (s5 - 1.0).sqrt() * x2 + (s5 + 1.0).sqrt() * x3 - s2 * f5
        }
    }
}

/// M-chart cartesian equation of a reduction locus.
pub fn reduction_m_cartesian(kind: ReductionKind, solid: Solid, x: f64, y: f64) -> f64 {
    let q = x * x + y * y;
    match kind {
        ReductionKind::AEqB => match a_eq_b_circle(solid) {
            None => x - y,
            Some((cx, cy)) => q - 2.0 * cx * x - 2.0 * cy * y - 1.0,
        },
        ReductionKind::AEqC | ReductionKind::BEqC => {
            let (k, c1, c0) = quartic_coefficients(kind, solid).expect("quartic locus");
            let u = if kind == ReductionKind::AEqC { x } else { y };
            q * q + k * q * u + c1 * q + k * u + c0
        }
    }
}

/// Polar form of the a=c / b=c quartic along the M-chart ray at angle θ.
pub fn reduction_polar(kind: ReductionKind, solid: Solid, r: f64, theta: f64) -> f64 {
    let (k, c1, c0) = quartic_coefficients(kind, solid).expect("quartic locus");
    let t = if kind == ReductionKind::AEqC { theta.cos() } else { theta.sin() };
    let r2 = r * r;
    r2 * r2 + c1 * r2 + c0 + k * r * (r2 + 1.0) * t
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReductionSample {
    pub sample: CurveSample,
    /// The tetrahedral a=b locus is the whole diagonal; the sample is its far end inside the moduli.
    pub line_locus: bool,
}

const ROOT_TOL: f64 = 1e-13;
const SCAN_PIECES: usize = 64;

/// Point of the locus on the M-chart ray at angle θ, with r ∈ (0, 1).
pub fn reduction_point(kind: ReductionKind, solid: Solid, theta: f64) -> Result<ReductionSample> {
    let sample = |r: f64| CurveSample::from_polar(solid, ChartId::M, theta, r);
    match kind {
        ReductionKind::AEqB => match a_eq_b_circle(solid) {
            None => {
                let t = theta.rem_euclid(PI);
                if (t - FRAC_PI_4).abs() > 1e-9 {
                    return Err(Error::NoRootInDisk(theta));
                }
                let r = moduli_radius_m(solid, theta);
                if r <= 0.0 {
                    return Err(Error::NoRootInDisk(theta));
                }
                Ok(ReductionSample { sample: sample(r), line_locus: true })
            }
            Some((cx, cy)) => {
                // r² − 2r(cx·cosθ + cy·sinθ) − 1 = 0; the roots have product −1.
                let b = -(cx * theta.cos() + cy * theta.sin());
                let h = (b * b + 1.0).sqrt();
                let r = if b >= 0.0 { 1.0 / (b + h) } else { h - b };
                if !(r > 0.0 && r < 1.0) {
                    return Err(Error::NoRootInDisk(theta));
                }
                Ok(ReductionSample { sample: sample(r), line_locus: false })
            }
        },
        ReductionKind::AEqC | ReductionKind::BEqC => {
            let f = |r: f64| reduction_polar(kind, solid, r, theta);
            let r = smallest_root(f, 0.0, 1.0, SCAN_PIECES, ROOT_TOL).ok_or(Error::NoRootInDisk(theta))?;
            Ok(ReductionSample { sample: sample(r), line_locus: false })
        }
    }
}

/// Whether the locus point on the ray at θ lies strictly inside the moduli.
fn inside_at(kind: ReductionKind, solid: Solid, theta: f64) -> bool {
    if !(theta > FRAC_PI_2 && theta < 2.0 * PI) {
        return false;
    }
    match reduction_point(kind, solid, theta) {
        Ok(s) => s.sample.r < moduli_radius_m(solid, theta),
        Err(_) => false,
    }
}

/// M-chart angular span over which the locus runs inside the moduli.
pub fn reduction_span(kind: ReductionKind, solid: Solid) -> Option<(f64, f64)> {
    if kind == ReductionKind::AEqB && solid == Solid::Tetrahedron {
        let t = 1.25 * PI;
        return Some((t, t));
    }
    const STEPS: usize = 4096;
    let (lo, hi) = (FRAC_PI_2, 2.0 * PI);
    let at = |k: usize| lo + (hi - lo) * k as f64 / STEPS as f64;
    let inside: Vec<bool> = (0..=STEPS).map(|k| inside_at(kind, solid, at(k))).collect();
    let first = inside.iter().position(|&b| b)?;
    let last = inside.iter().rposition(|&b| b)?;
    let refine = |a: f64, b: f64| {
        // a is inside, b is outside
        let (mut a, mut b) = (a, b);
        for _ in 0..60 {
            let m = 0.5 * (a + b);
            if inside_at(kind, solid, m) {
                a = m;
            } else {
                b = m;
            }
        }
        a
    };
    let start = if first == 0 { at(0) } else { refine(at(first), at(first - 1)) };
    let end = if last == STEPS { at(STEPS) } else { refine(at(last), at(last + 1)) };
    Some((start, end))
}

/// Samples of the locus inside the moduli, θ uniform over [`reduction_span`].
/// For the tetrahedral a=b line, r runs uniformly from M to the moduli boundary instead.
pub fn reduction_samples(kind: ReductionKind, solid: Solid, samples: usize) -> Vec<ReductionSample> {
    let Some((lo, hi)) = reduction_span(kind, solid) else {
        return Vec::new();
    };
    let last = samples.saturating_sub(1).max(1) as f64;
    if kind == ReductionKind::AEqB && solid == Solid::Tetrahedron {
        let r_max = moduli_radius_m(solid, lo);
        return (0..samples)
            .map(|k| ReductionSample {
                sample: CurveSample::from_polar(solid, ChartId::M, lo, r_max * k as f64 / last),
                line_locus: true,
            })
            .collect();
    }
    (0..samples).filter_map(|k| reduction_point(kind, solid, lo + (hi - lo) * k as f64 / last).ok()).collect()
}

/// Comparison of the b=c locus with γ_A over the γ_A range of the M-chart.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BcGapReport {
    pub n: u32,
    pub samples: usize,
    /// min over θ of r_γA(θ) − r_{b=c}(θ)
    pub min_gap: f64,
    pub min_gap_theta: f64,
    pub max_gap: f64,
    /// argmin of |gap|
    pub tangency_theta: f64,
    pub tangency_gap: f64,
}

impl BcGapReport {
    /// b=c touches γ_A (|gap| < 1e-6 somewhere) and never crosses above it (gap ≥ −1e-9).
    pub fn tangent_and_below(&self) -> bool {
        self.tangency_gap.abs() < 1e-6 && self.min_gap >= -1e-9
    }
}

pub fn check_bc_below_gamma_a(solid: Solid) -> Result<BcGapReport> {
    const SAMPLES: usize = 2049;
    let (lo, hi) = BoundaryCurve::GammaA.m_range();
    let mut report = BcGapReport {
        n: solid.n(),
        samples: SAMPLES,
        min_gap: f64::INFINITY,
        min_gap_theta: lo,
        max_gap: f64::NEG_INFINITY,
        tangency_theta: lo,
        tangency_gap: f64::INFINITY,
    };
    for k in 0..SAMPLES {
        let theta = lo + (hi - lo) * k as f64 / (SAMPLES - 1) as f64;
        let r_gamma = gamma_m_chart(BoundaryCurve::GammaA, solid, theta)?.r;
        let r_bc = reduction_point(ReductionKind::BEqC, solid, theta)?.sample.r;
        let gap = r_gamma - r_bc;
        if gap < report.min_gap {
            report.min_gap = gap;
            report.min_gap_theta = theta;
        }
        report.max_gap = report.max_gap.max(gap);
        if gap.abs() < report.tangency_gap.abs() {
            report.tangency_gap = gap;
            report.tangency_theta = theta;
        }
    }
    Ok(report)
}
