//! Boundary curves in the M-chart: polar forms r⁻¹ − r = R and cartesian quartics/cubics.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::moduli::curves::CurveSample;
use crate::projection::{ChartId, Solid};

/// A piece of the moduli boundary that is a curve (as opposed to an arc).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BoundaryCurve {
    GammaA,
    GammaB,
    GammaC,
}

impl BoundaryCurve {
    pub const ALL: [BoundaryCurve; 3] = [BoundaryCurve::GammaA, BoundaryCurve::GammaB, BoundaryCurve::GammaC];

    /// M-chart angular range; the curves run B′→A, A→C→B and B→A′ respectively.
    pub fn m_range(self) -> (f64, f64) {
        match self {
            BoundaryCurve::GammaA => (FRAC_PI_2, PI),
            BoundaryCurve::GammaC => (PI, 1.5 * PI),
            BoundaryCurve::GammaB => (1.5 * PI, 2.0 * PI),
        }
    }
}

impl fmt::Display for BoundaryCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BoundaryCurve::GammaA => "gammaA",
            BoundaryCurve::GammaB => "gammaB",
            BoundaryCurve::GammaC => "gammaC",
        };
        f.write_str(s)
    }
}

/// r from r⁻¹ − r = R, taking the root in (0, 1].
pub fn radius_from_r(big_r: f64) -> f64 {
    // (√(R²+4) − R)/2 without cancellation for large R
    2.0 / ((big_r * big_r + 4.0).sqrt() + big_r)
}

/// (K, L) with R² − K·R − L = 0, for γ_A and γ_B.
pub fn quadratic_kl(which: BoundaryCurve, solid: Solid, theta: f64) -> Option<(f64, f64)> {
    let (s2, s5) = (2f64.sqrt(), 5f64.sqrt());
    let (c, s) = (theta.cos(), theta.sin());
    match (which, solid) {
        (BoundaryCurve::GammaA, Solid::Tetrahedron) => Some((2.0 * s2 * c, 4.0 * c * c + 2.0)),
        (BoundaryCurve::GammaA, Solid::Octahedron) => Some((0.0, 4.0 * c * c + 4.0)),
        (BoundaryCurve::GammaA, Solid::Icosahedron) => Some((-2.0 * (s5 - 1.0) * c, 4.0 * c * c + 2.0 * s5 + 6.0)),
        (BoundaryCurve::GammaB, Solid::Tetrahedron) => Some((2.0 * s2 * s, 4.0 * s * s + 2.0)),
        (BoundaryCurve::GammaB, Solid::Octahedron) => Some((4.0 * s, 4.0 * s * s + 8.0)),
        (BoundaryCurve::GammaB, Solid::Icosahedron) => Some((2.0 * (s5 + 1.0) * s, 4.0 * s * s + 6.0 * s5 + 14.0)),
        (BoundaryCurve::GammaC, _) => None,
    }
}

/// Explicit R(θ) for each curve.
pub fn explicit_r(which: BoundaryCurve, solid: Solid, t: f64) -> f64 {
    let (s2, s5) = (2f64.sqrt(), 5f64.sqrt());
    let (c, s) = (t.cos(), t.sin());
    let c2 = (2.0 * t).cos();
    match (which, solid) {
        (BoundaryCurve::GammaA, Solid::Tetrahedron) => s2 * c + (5.0 + 3.0 * c2).sqrt(),
        (BoundaryCurve::GammaA, Solid::Octahedron) => (6.0 + 2.0 * c2).sqrt(),
        (BoundaryCurve::GammaA, Solid::Icosahedron) => (1.0 - s5) * c + (11.0 + s5 + (5.0 - s5) * c2).sqrt(),
        (BoundaryCurve::GammaB, Solid::Tetrahedron) => s2 * s + (5.0 - 3.0 * c2).sqrt(),
        (BoundaryCurve::GammaB, Solid::Octahedron) => 2.0 * s + 2.0 * (3.0 - c2).sqrt(),
        (BoundaryCurve::GammaB, Solid::Icosahedron) => (1.0 + s5) * s + (19.0 + 7.0 * s5 - (5.0 + s5) * c2).sqrt(),
        (BoundaryCurve::GammaC, Solid::Tetrahedron) => s2 * (2.0 * c * s - 1.0) / (c + s),
        (BoundaryCurve::GammaC, Solid::Octahedron) => 2.0 * (c * s - s2) / (c + s2 * s),
        (BoundaryCurve::GammaC, Solid::Icosahedron) => {
            2.0 * (s5 - 1.0) * (c * s - s5 - 2.0) / (2.0 * c + (s5 + 1.0) * s)
        }
    }
}

/// Boundary curve sample in the M-chart.
pub fn gamma_m_chart(which: BoundaryCurve, solid: Solid, theta: f64) -> Result<CurveSample> {
    let (lo, hi) = which.m_range();
    if !(theta >= lo - 1e-12 && theta <= hi + 1e-12) {
        return Err(Error::OutOfRange { theta, lo, hi });
    }
    let r = radius_from_r(explicit_r(which, solid, theta));
    Ok(CurveSample::from_polar(solid, ChartId::M, theta, r))
}

pub fn gamma_m_samples(which: BoundaryCurve, solid: Solid, samples: usize) -> Vec<CurveSample> {
    let (lo, hi) = which.m_range();
    let last = samples.saturating_sub(1).max(1) as f64;
    (0..samples)
        .map(|k| {
            let theta = if k + 1 == samples && samples > 1 { hi } else { lo + (hi - lo) * k as f64 / last };
            gamma_m_chart(which, solid, theta).expect("theta in range")
        })
        .collect()
}

/// M-chart cartesian equation of a boundary curve; zero on the curve.
pub fn m_cartesian(which: BoundaryCurve, solid: Solid, x: f64, y: f64) -> f64 {
    let (s2, s5) = (2f64.sqrt(), 5f64.sqrt());
    let q = x * x + y * y;
    match (which, solid) {
        (BoundaryCurve::GammaA, Solid::Tetrahedron) => {
            q * q + 2.0 * s2 * q * x - 8.0 * x * x - 4.0 * y * y - 2.0 * s2 * x + 1.0
        }
        (BoundaryCurve::GammaB, Solid::Tetrahedron) => {
            q * q + 2.0 * s2 * q * y - 4.0 * x * x - 8.0 * y * y - 2.0 * s2 * y + 1.0
        }
        (BoundaryCurve::GammaC, Solid::Tetrahedron) => (q - 1.0) * (x + y) - s2 * (x - y) * (x - y),
        (BoundaryCurve::GammaA, Solid::Octahedron) => q * q - 10.0 * x * x - 6.0 * y * y + 1.0,
        (BoundaryCurve::GammaB, Solid::Octahedron) => q * q + 4.0 * q * y - 10.0 * x * x - 14.0 * y * y - 4.0 * y + 1.0,
        (BoundaryCurve::GammaC, Solid::Octahedron) => (q - 1.0) * (x + s2 * y) - 2.0 * s2 * q + 2.0 * x * y,
        (BoundaryCurve::GammaA, Solid::Icosahedron) => {
            q * q - 2.0 * (s5 - 1.0) * q * x - 2.0 * (s5 + 6.0) * x * x - 2.0 * (s5 + 4.0) * y * y
                + 2.0 * (s5 - 1.0) * x
                + 1.0
        }
        (BoundaryCurve::GammaB, Solid::Icosahedron) => {
            q * q + 2.0 * (s5 + 1.0) * q * y
                - 2.0 * (3.0 * s5 + 8.0) * x * x
                - 2.0 * (3.0 * s5 + 10.0) * y * y
                - 2.0 * (s5 + 1.0) * y
                + 1.0
        }
        (BoundaryCurve::GammaC, Solid::Icosahedron) => {
            (q - 1.0) * (2.0 * x + (s5 + 1.0) * y) - 2.0 * (s5 + 3.0) * q + 2.0 * (s5 - 1.0) * x * y
        }
    }
}

/// Radial extent of the moduli along the M-chart ray at angle θ (0 where the ray misses it).
///
/// The moduli is star-shaped about M: it is bounded by the arcs MA′ (θ = 0) and MB′ (θ = π/2)
/// and by the three curves over θ ∈ [π/2, 2π].
pub fn moduli_radius_m(solid: Solid, theta: f64) -> f64 {
    let t = theta.rem_euclid(2.0 * PI);
    let which = if t <= FRAC_PI_2 {
        if t == 0.0 {
            BoundaryCurve::GammaB
        } else {
            return 0.0;
        }
    } else if t <= PI {
        BoundaryCurve::GammaA
    } else if t <= 1.5 * PI {
        BoundaryCurve::GammaC
    } else {
        BoundaryCurve::GammaB
    };
    let t = if t == 0.0 { 2.0 * PI } else { t };
    radius_from_r(explicit_r(which, solid, t))
}
