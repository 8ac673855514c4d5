//! Analytic moduli membership from the region division and the three boundary curves.

use std::f64::consts::PI;

use crate::moduli::curves::{gamma_point, CurveKind, CurveSpec};
use crate::moduli::mchart::moduli_radius_m;
use crate::moduli::regions::{region_of, RegionLocation};
use crate::projection::{to_chart, ChartId, Solid};
use crate::sphere::UnitVec;

/// The four triangles lying wholly inside the moduli.
pub const CORE_REGIONS: [u8; 4] = [1, 2, 3, 7];

fn is_core(index: u8) -> bool {
    CORE_REGIONS.contains(&index)
}

/// Strictly between the chart origin and the curve, with the curve itself excluded
/// by a margin measured on the sphere.
fn strictly_inside(r: f64, r_curve: f64) -> bool {
    r > 0.0 && 2.0 * (r_curve - r) / (1.0 + r * r) > 1e-9
}

fn polar(solid: Solid, chart: ChartId, p: &UnitVec) -> Option<(f64, f64)> {
    to_chart(p, chart, solid).ok().map(|c| (c.z.arg(), c.z.norm()))
}

fn fan(solid: Solid, kind: CurveKind, p: &UnitVec, admit: impl Fn(f64) -> bool) -> bool {
    let spec = CurveSpec::new(kind, solid);
    let Some((theta, r)) = polar(solid, spec.chart, p) else {
        return false;
    };
    if !admit(theta) {
        return false;
    }
    match gamma_point(&spec, theta) {
        Ok(s) => strictly_inside(r, s.r),
        Err(_) => false,
    }
}

/// Part of the moduli cut off by γ_A, seen from A.
pub fn in_fan_a(solid: Solid, p: &UnitVec) -> bool {
    fan(solid, CurveKind::GammaA, p, |t| (2.0 * PI / 3.0..5.0 * PI / 6.0).contains(&t))
}

/// Part of the moduli cut off by γ_B, seen from B.
pub fn in_fan_b(solid: Solid, p: &UnitVec) -> bool {
    let n = solid.n() as f64;
    let (lo, hi) = ((0.5 - 1.0 / n) * PI, (1.0 - 2.0 / n) * PI);
    fan(solid, CurveKind::GammaB, p, |t| t > lo && t <= hi)
}

/// Part of the moduli cut off by γ_C, seen from A.
pub fn in_fan_c(solid: Solid, p: &UnitVec) -> bool {
    fan(solid, CurveKind::GammaCInA, p, |t| t > -PI / 2.0 && t <= 0.0)
}

fn in_fans(solid: Solid, p: &UnitVec) -> bool {
    in_fan_a(solid, p) || in_fan_b(solid, p) || in_fan_c(solid, p)
}

pub fn analytic_in_moduli(solid: Solid, p: &UnitVec) -> bool {
    match region_of(solid, p) {
        RegionLocation::Interior(id) => is_core(id.0) || in_fans(solid, p),
        RegionLocation::Boundary(d) => {
            if d.is_vertex() {
                false
            } else if d.adjacent.iter().all(|r| is_core(r.0)) {
                true
            } else {
                in_fans(solid, p)
            }
        }
    }
}

/// Membership read off the M-chart, where the moduli is star-shaped about M.
pub fn m_chart_in_moduli(solid: Solid, p: &UnitVec) -> bool {
    let Some((theta, r)) = polar(solid, ChartId::M, p) else {
        return false;
    };
    let t = theta.rem_euclid(2.0 * PI);
    t > PI / 2.0 && r > 0.0 && strictly_inside(r, moduli_radius_m(solid, t))
}
