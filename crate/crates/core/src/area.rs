//! Moduli area: closed elliptic formulas per part, direct fan quadrature, Monte-Carlo.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_6, PI};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::moduli::curves::{gamma_point, CurveKind, CurveSpec};
use crate::moduli::membership::analytic_in_moduli;
use crate::projection::Solid;
use crate::quadrature::integrate;
use crate::sampling::{SphereSampler, CHUNK};

/// F(t, i/λ) = ∫₀ᵗ du / √(1 + sin²u / λ²). NaN unless λ > 0.
pub fn elliptic_f_imag(t: f64, lambda: f64) -> f64 {
    if !(lambda > 0.0) {
        return f64::NAN;
    }
    let k2 = 1.0 / (lambda * lambda);
    integrate(|u| 1.0 / (1.0 + k2 * u.sin().powi(2)).sqrt(), 0.0, t).value
}

/// Spherical area of the fan {0 < |z| < r(θ), α < θ < β} around a chart origin.
pub fn fan_area_quadrature(r: impl Fn(f64) -> f64, alpha: f64, beta: f64) -> f64 {
    integrate(
        |t| {
            let r = r(t);
            let r2 = r * r;
            2.0 * r2 / (1.0 + r2)
        },
        alpha,
        beta,
    )
    .value
}

/// The four parts bounded by a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CurvedPart {
    A4,
    A5,
    A8,
    A13,
}

impl CurvedPart {
    pub const ALL: [CurvedPart; 4] = [CurvedPart::A4, CurvedPart::A5, CurvedPart::A8, CurvedPart::A13];

    fn half_turn_gap(solid: Solid) -> f64 {
        (0.5 - 1.0 / solid.n() as f64) * PI
    }

    pub fn elliptic(self, solid: Solid) -> f64 {
        let k = solid.constants();
        let l = Self::half_turn_gap(solid);
        match self {
            CurvedPart::A5 => FRAC_PI_6 - elliptic_f_imag(FRAC_PI_6, k.lambda_a),
            CurvedPart::A13 => l - elliptic_f_imag(l, k.lambda_b),
            CurvedPart::A4 => FRAC_PI_6 - elliptic_f_imag(FRAC_PI_6, k.lambda_c),
            CurvedPart::A8 => l - elliptic_f_imag(l, k.lambda_c),
        }
    }

    /// Curve and chart-angle range of the fan covering the part.
    pub fn fan(self, solid: Solid) -> (CurveKind, f64, f64) {
        let n = solid.n() as f64;
        match self {
            CurvedPart::A5 => (CurveKind::GammaA, 2.0 * FRAC_PI_3, 5.0 * FRAC_PI_6),
            CurvedPart::A13 => (CurveKind::GammaB, (0.5 - 1.0 / n) * PI, (1.0 - 2.0 / n) * PI),
            CurvedPart::A4 => (CurveKind::GammaCInA, -FRAC_PI_2, -FRAC_PI_3),
            CurvedPart::A8 => (CurveKind::GammaCInB, -(1.0 - 1.0 / n) * PI, -FRAC_PI_2),
        }
    }

    pub fn quadrature(self, solid: Solid) -> f64 {
        let (kind, lo, hi) = self.fan(solid);
        let spec = CurveSpec::new(kind, solid);
        fan_area_quadrature(|t| gamma_point(&spec, t).map(|s| s.r).unwrap_or(0.0), lo, hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PartResidual {
    pub part: CurvedPart,
    pub elliptic: f64,
    pub quadrature: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AreaReport {
    pub n: u32,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a7: f64,
    pub a4: f64,
    pub a5: f64,
    pub a8: f64,
    pub a13: f64,
    pub total: f64,
    pub total_over_pi: f64,
    pub fraction_of_sphere: f64,
}

impl AreaReport {
    pub fn triangle(&self) -> f64 {
        self.a1
    }
}

pub fn triangle_area(solid: Solid) -> f64 {
    4.0 * PI / (6.0 * solid.faces() as f64)
}

pub fn part_areas(solid: Solid) -> AreaReport {
    let t = triangle_area(solid);
    let [a4, a5, a8, a13] = CurvedPart::ALL.map(|p| p.elliptic(solid));
    let total = 4.0 * t + a4 + a5 + a8 + a13;
    AreaReport {
        n: solid.n(),
        a1: t,
        a2: t,
        a3: t,
        a7: t,
        a4,
        a5,
        a8,
        a13,
        total,
        total_over_pi: total / PI,
        fraction_of_sphere: total / (4.0 * PI),
    }
}

/// |A2 + A4 + A8 − (π/2 − F(π/2, i/λ_C))|
pub fn consistency_a2a4a8(solid: Solid) -> f64 {
    let r = part_areas(solid);
    let whole = FRAC_PI_2 - elliptic_f_imag(FRAC_PI_2, solid.constants().lambda_c);
    (r.a2 + r.a4 + r.a8 - whole).abs()
}

pub fn elliptic_vs_quadrature(solid: Solid) -> Vec<PartResidual> {
    CurvedPart::ALL
        .iter()
        .map(|&part| {
            let elliptic = part.elliptic(solid);
            let quadrature = part.quadrature(solid);
            PartResidual { part, elliptic, quadrature, residual: (elliptic - quadrature).abs() }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MonteCarloEstimate {
    pub samples: u64,
    pub seed: u64,
    pub hits: u64,
    pub estimate: f64,
    pub stderr: f64,
}

pub const MIN_MC_SAMPLES: u64 = 1000;

/// 4π times the fraction of uniform sphere points that are in the moduli.
/// The result depends only on (seed, samples).
pub fn monte_carlo_area(solid: Solid, samples: u64, seed: u64) -> Result<MonteCarloEstimate> {
    if samples < MIN_MC_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "monte carlo needs at least {MIN_MC_SAMPLES} samples, got {samples}"
        )));
    }
    let sampler = SphereSampler::new(seed);
    let chunks = samples.div_ceil(CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * CHUNK;
            let count = CHUNK.min(samples - start);
            sampler.points(start, count).filter(|p| analytic_in_moduli(solid, p)).count() as u64
        })
        .sum();
    let p = hits as f64 / samples as f64;
    Ok(MonteCarloEstimate {
        samples,
        seed,
        hits,
        estimate: 4.0 * PI * p,
        stderr: 4.0 * PI * (p * (1.0 - p) / samples as f64).sqrt(),
    })
}
