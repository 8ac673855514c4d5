//! Boundary curves γ_A, γ_B, γ_C in the A- and B-charts.
//!
//! Every curve is an instance of one generic quadric, written in a variable `v` related to
//! the chart coordinate `z` by a fixed map:
//!
//! * complex:   4λ|v|² + (v·e^{−iα} + v̄·e^{iα})(|v|² − 1) = 0
//! * spherical: λ(ξ1² + ξ2²) + (ξ1·cos α + ξ2·sin α)·ξ3 = 0
//! * polar:     r = √(1 + λ²sec²(φ−α)) − λ·sec(φ−α),  v = r·e^{iφ}

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, PI};
use std::fmt;

use nalgebra::Vector3;
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::projection::{ChartId, ChartPoint, Solid};
use crate::sphere::UnitVec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CurveKind {
    GammaA,
    GammaB,
    GammaCInA,
    GammaCInB,
}

impl CurveKind {
    pub const ALL: [CurveKind; 4] = [CurveKind::GammaA, CurveKind::GammaB, CurveKind::GammaCInA, CurveKind::GammaCInB];
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CurveKind::GammaA => "gammaA",
            CurveKind::GammaB => "gammaB",
            CurveKind::GammaCInA => "gammaC (A-chart)",
            CurveKind::GammaCInB => "gammaC (B-chart)",
        };
        f.write_str(s)
    }
}

/// How the chart coordinate z determines the generic variable v.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum VariableMap {
    /// v = z
    Identity,
    /// v = −z̄
    NegConj,
    /// v = z̄·e^{iπ/3}
    ConjRotate,
    /// v = −z̄·e^{iπ/n}
    NegConjRotate(f64),
}

impl VariableMap {
    pub fn apply(self, z: Complex64) -> Complex64 {
        match self {
            VariableMap::Identity => z,
            VariableMap::NegConj => -z.conj(),
            VariableMap::ConjRotate => z.conj() * Complex64::from_polar(1.0, FRAC_PI_3),
            VariableMap::NegConjRotate(a) => -z.conj() * Complex64::from_polar(1.0, a),
        }
    }

    /// arg v as a function of arg z.
    pub fn phi(self, theta: f64) -> f64 {
        match self {
            VariableMap::Identity => theta,
            VariableMap::NegConj => PI - theta,
            VariableMap::ConjRotate => FRAC_PI_3 - theta,
            VariableMap::NegConjRotate(a) => PI - theta + a,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveSpec {
    pub kind: CurveKind,
    pub solid: Solid,
    pub lambda: f64,
    pub alpha: f64,
    pub chart: ChartId,
    pub map: VariableMap,
}

impl CurveSpec {
    pub fn new(kind: CurveKind, solid: Solid) -> CurveSpec {
        let k = solid.constants();
        let alpha_b = PI / solid.n() as f64;
        let (lambda, alpha, chart, map) = match kind {
            CurveKind::GammaA => (k.lambda_a, FRAC_PI_3, ChartId::A, VariableMap::Identity),
            CurveKind::GammaB => (k.lambda_b, alpha_b, ChartId::B, VariableMap::NegConj),
            CurveKind::GammaCInA => (k.lambda_c, FRAC_PI_3, ChartId::A, VariableMap::ConjRotate),
            CurveKind::GammaCInB => (k.lambda_c, alpha_b, ChartId::B, VariableMap::NegConjRotate(alpha_b)),
        };
        CurveSpec { kind, solid, lambda, alpha, chart, map }
    }

    /// Admissible chart angles.
    pub fn theta_range(&self) -> (f64, f64) {
        let n = self.solid.n() as f64;
        match self.kind {
            CurveKind::GammaA => (2.0 * PI / 3.0, 5.0 * PI / 6.0),
            CurveKind::GammaB => ((0.5 - 1.0 / n) * PI, (1.0 - 2.0 / n) * PI),
            CurveKind::GammaCInA => (-FRAC_PI_2, 0.0),
            CurveKind::GammaCInB => (-PI, -FRAC_PI_2),
        }
    }

    /// The end of the range where sec(φ−α) blows up and the curve reaches the chart origin.
    pub fn singular_end(&self) -> f64 {
        let (lo, hi) = self.theta_range();
        match self.kind {
            CurveKind::GammaA | CurveKind::GammaCInB => hi,
            CurveKind::GammaB | CurveKind::GammaCInA => lo,
        }
    }
}

/// A point on a curve in a given chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurveSample {
    pub theta: f64,
    pub r: f64,
    pub z: ChartPoint,
    /// World coordinates.
    pub xi: UnitVec,
}

impl CurveSample {
    pub fn from_polar(solid: Solid, chart: ChartId, theta: f64, r: f64) -> CurveSample {
        let z = ChartPoint::new(Complex64::from_polar(r, theta), chart, solid);
        CurveSample { theta, r, z, xi: z.to_sphere() }
    }
}

const RANGE_SLACK: f64 = 1e-12;
const SINGULAR_CLAMP: f64 = 1e-9;

/// Generic polar solution, written without cancellation: r = cos x / (√(cos²x + λ²) + λ).
pub fn generic_radius(lambda: f64, x: f64) -> f64 {
    let c = x.cos();
    c / ((c * c + lambda * lambda).sqrt() + lambda)
}

pub fn gamma_point(spec: &CurveSpec, theta: f64) -> Result<CurveSample> {
    let (lo, hi) = spec.theta_range();
    if !(theta >= lo - RANGE_SLACK && theta <= hi + RANGE_SLACK) {
        return Err(Error::OutOfRange { theta, lo, hi });
    }
    let r = if (theta - spec.singular_end()).abs() <= SINGULAR_CLAMP {
        0.0
    } else {
        generic_radius(spec.lambda, spec.map.phi(theta) - spec.alpha)
    };
    Ok(CurveSample::from_polar(spec.solid, spec.chart, theta, r))
}

/// `samples` points with θ uniform over the admissible range, endpoints included.
pub fn gamma_samples(spec: &CurveSpec, samples: usize) -> Vec<CurveSample> {
    let (lo, hi) = spec.theta_range();
    let last = samples.saturating_sub(1).max(1) as f64;
    (0..samples)
        .map(|k| {
            let theta = if k + 1 == samples && samples > 1 { hi } else { lo + (hi - lo) * k as f64 / last };
            gamma_point(spec, theta).expect("theta in range")
        })
        .collect()
}

/// Spherical quadric of the curve in its chart frame; zero on the curve.
pub fn gamma_residual(spec: &CurveSpec, p: &UnitVec) -> f64 {
    let xi = spec.solid.geometry().frame(spec.chart).to_local(p);
    forms::spherical(spec, &xi)
}

/// The four specialised equations of each curve, written out per chart.
pub mod forms {
    use super::*;

    pub fn spherical(spec: &CurveSpec, xi: &Vector3<f64>) -> f64 {
        let (x1, x2, x3) = (xi.x, xi.y, xi.z);
        let q = x1 * x1 + x2 * x2;
        let l = spec.lambda;
        let a = PI / spec.solid.n() as f64;
        match spec.kind {
            CurveKind::GammaA => 2.0 * l * q + (x1 + 3f64.sqrt() * x2) * x3,
            CurveKind::GammaB => l * q - (x1 * a.cos() - x2 * a.sin()) * x3,
            CurveKind::GammaCInA => l * q + x1 * x3,
            CurveKind::GammaCInB => l * q - x1 * x3,
        }
    }

    pub fn complex(spec: &CurveSpec, z: Complex64) -> f64 {
        let q = z.norm_sqr();
        let l = spec.lambda;
        let a = PI / spec.solid.n() as f64;
        let e = |t: f64| Complex64::from_polar(1.0, t);
        let lin = match spec.kind {
            CurveKind::GammaA => z * e(-FRAC_PI_3) + z.conj() * e(FRAC_PI_3),
            CurveKind::GammaB => -(z * e(a) + z.conj() * e(-a)),
            CurveKind::GammaCInA => z + z.conj(),
            CurveKind::GammaCInB => -(z + z.conj()),
        };
        (4.0 * l * q + lin * (q - 1.0)).re
    }

    pub fn cartesian(spec: &CurveSpec, x: f64, y: f64) -> f64 {
        let q = x * x + y * y;
        let l = spec.lambda;
        let a = PI / spec.solid.n() as f64;
        match spec.kind {
            CurveKind::GammaA => 4.0 * l * q + (x + 3f64.sqrt() * y) * (q - 1.0),
            CurveKind::GammaB => 2.0 * l * q - (x * a.cos() - y * a.sin()) * (q - 1.0),
            CurveKind::GammaCInA => 2.0 * l * q + x * (q - 1.0),
            CurveKind::GammaCInB => 2.0 * l * q - x * (q - 1.0),
        }
    }

    /// Explicit polar radius in the chart angle θ; the limit r = 0 at the singular end.
    pub fn polar(spec: &CurveSpec, theta: f64) -> f64 {
        if (theta - spec.singular_end()).abs() <= SINGULAR_CLAMP {
            return 0.0;
        }
        let l = spec.lambda;
        let a = PI / spec.solid.n() as f64;
        // √(1 + λ²s²) − λs, rationalised when λs > 0
        let minus = |s: f64| {
            let h = (1.0 + l * l * s * s).sqrt();
            if s > 0.0 {
                1.0 / (h + l * s)
            } else {
                h - l * s
            }
        };
        let plus = |s: f64| minus(-s);
        let sec = |t: f64| 1.0 / t.cos();
        match spec.kind {
            CurveKind::GammaA => minus(sec(theta - FRAC_PI_3)),
            CurveKind::GammaB => plus(sec(theta + a)),
            CurveKind::GammaCInA => minus(sec(theta)),
            CurveKind::GammaCInB => plus(sec(theta)),
        }
    }
}
