//! The 6n regions cut out by the great circles through A (every π/3) and through B (every π/n).

use std::f64::consts::{FRAC_PI_3, PI};
use std::fmt;

use nalgebra::Vector3;
use serde::Serialize;

use crate::projection::{to_chart, ChartId, Solid};
use crate::sphere::{UnitVec, ANGLE_TOL};

/// Region label Ω_index, 1 ≤ index ≤ 6n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct RegionId(pub u8);

impl RegionId {
    pub fn index(self) -> u8 {
        self.0
    }
}

impl fmt::Display for RegionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ω{}", self.0)
    }
}

/// A dividing great circle. `AboutA(0)` and `AboutB(0)` are both the circle AB, which is
/// always reported as `AB`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum DividingCircle {
    AB,
    AboutA(u8),
    AboutB(u8),
}

impl DividingCircle {
    pub fn all(solid: Solid) -> Vec<DividingCircle> {
        let mut v = vec![DividingCircle::AB, DividingCircle::AboutA(1), DividingCircle::AboutA(2)];
        v.extend((1..solid.n() as u8).map(DividingCircle::AboutB));
        v
    }

    /// Unit normal of the circle's plane, in world coordinates.
    pub fn normal(self, solid: Solid) -> Vector3<f64> {
        let g = solid.geometry();
        let (chart, angle) = match self {
            DividingCircle::AB => (ChartId::A, 0.0),
            DividingCircle::AboutA(k) => (ChartId::A, k as f64 * FRAC_PI_3),
            DividingCircle::AboutB(k) => (ChartId::B, k as f64 * PI / solid.n() as f64),
        };
        let f = g.frame(chart);
        -angle.sin() * f.axis(0) + angle.cos() * f.axis(1)
    }

    /// Angular distance from `p` to the circle.
    pub fn distance(self, solid: Solid, p: &UnitVec) -> f64 {
        p.as_vector().dot(&self.normal(solid)).clamp(-1.0, 1.0).asin().abs()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryDescriptor {
    pub circles: Vec<DividingCircle>,
    /// Regions touching the point, sorted.
    pub adjacent: Vec<RegionId>,
}

impl BoundaryDescriptor {
    pub fn is_vertex(&self) -> bool {
        self.circles.len() >= 2
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RegionLocation {
    Interior(RegionId),
    Boundary(BoundaryDescriptor),
}

impl RegionLocation {
    pub fn interior(&self) -> Option<RegionId> {
        match self {
            RegionLocation::Interior(r) => Some(*r),
            RegionLocation::Boundary(_) => None,
        }
    }
}

/// Classifies `p` by its sector about A and about B.
pub fn region_of(solid: Solid, p: &UnitVec) -> RegionLocation {
    region_of_tol(solid, p, ANGLE_TOL)
}

pub fn region_of_tol(solid: Solid, p: &UnitVec, tol: f64) -> RegionLocation {
    let circles: Vec<DividingCircle> =
        DividingCircle::all(solid).into_iter().filter(|c| c.distance(solid, p) <= tol).collect();
    if circles.is_empty() {
        return RegionLocation::Interior(sector_region(solid, p));
    }
    let adjacent = probe_neighbours(solid, p, tol);
    RegionLocation::Boundary(BoundaryDescriptor { circles, adjacent })
}

/// Region of a point known to be off every dividing circle.
fn sector_region(solid: Solid, p: &UnitVec) -> RegionId {
    let n = solid.n();
    let theta_a = to_chart(p, ChartId::A, solid).map(|c| c.z.arg()).unwrap_or(PI);
    let theta_b = to_chart(p, ChartId::B, solid).map(|c| c.z.arg()).unwrap_or(PI);
    let i = ((theta_a.abs() / FRAC_PI_3).floor() as u32).min(2) + 1;
    let j = (((PI - theta_b.abs()) / (PI / n as f64)).floor() as u32).min(n - 1) + 1;
    let odd = 6 * (j - 1) + 2 * (i - 1) + 1;
    RegionId(if theta_a > 0.0 { odd } else { odd + 1 } as u8)
}

/// Regions met by a small circle around a boundary point.
fn probe_neighbours(solid: Solid, p: &UnitVec, tol: f64) -> Vec<RegionId> {
    const RADIUS: f64 = 1e-7;
    const DIRECTIONS: usize = 360;
    let v = p.as_vector();
    let seed = if v.x.abs() < 0.9 { Vector3::x() } else { Vector3::y() };
    let t1 = v.cross(&seed).normalize();
    let t2 = v.cross(&t1);
    let circles = DividingCircle::all(solid);
    let mut found: Vec<RegionId> = Vec::new();
    for k in 0..DIRECTIONS {
        let psi = 2.0 * PI * k as f64 / DIRECTIONS as f64;
        let q = v * RADIUS.cos() + (t1 * psi.cos() + t2 * psi.sin()) * RADIUS.sin();
        let q = UnitVec::from_vector(q).expect("probe is non-zero");
        if circles.iter().any(|c| c.distance(solid, &q) <= tol) {
            continue;
        }
        let r = sector_region(solid, &q);
        if !found.contains(&r) {
            found.push(r);
        }
    }
    found.sort();
    found
}
