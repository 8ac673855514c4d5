//! Points, rotations and minor arcs on the unit sphere.

use std::ops::Neg;

use nalgebra::{Rotation3, Unit, Vector3};

use crate::error::{Error, Result};

/// Default angular tolerance for incidence predicates (radians).
pub const ANGLE_TOL: f64 = 1e-9;

/// Chord length below which two endpoints count as antipodal.
const ANTIPODAL_TOL: f64 = 1e-9;
/// Arcs shorter than this are rejected as degenerate.
const DEGENERATE_LEN: f64 = 1e-12;

/// A point on the unit sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVec(Vector3<f64>);

impl UnitVec {
    pub fn new(xi1: f64, xi2: f64, xi3: f64) -> Result<Self> {
        Self::from_vector(Vector3::new(xi1, xi2, xi3))
    }

    pub fn from_vector(v: Vector3<f64>) -> Result<Self> {
        let norm = v.norm();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(Self(v / norm))
    }

    /// Wraps `v` without normalizing. Callers guarantee `|v| = 1`.
    pub(crate) fn new_unchecked(v: Vector3<f64>) -> Self {
        Self(v)
    }

    pub fn xi1(&self) -> f64 {
        self.0.x
    }
    pub fn xi2(&self) -> f64 {
        self.0.y
    }
    pub fn xi3(&self) -> f64 {
        self.0.z
    }

    pub fn as_vector(&self) -> &Vector3<f64> {
        &self.0
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.0.x, self.0.y, self.0.z]
    }

    pub fn dot(&self, other: &UnitVec) -> f64 {
        self.0.dot(&other.0)
    }

    /// Unit tangent at `self` pointing along the geodesic toward `toward`.
    pub fn tangent_toward(&self, toward: &UnitVec) -> Result<Vector3<f64>> {
        let t = toward.0 - self.0 * self.0.dot(&toward.0);
        let n = t.norm();
        if n < DEGENERATE_LEN {
            return Err(Error::DegenerateArc);
        }
        Ok(t / n)
    }
}

impl Neg for UnitVec {
    type Output = UnitVec;
    fn neg(self) -> UnitVec {
        UnitVec(-self.0)
    }
}

/// Great-circle distance, via atan2 so it stays accurate near 0 and π.
pub fn angular_distance(u: &UnitVec, v: &UnitVec) -> f64 {
    u.0.cross(&v.0).norm().atan2(u.0.dot(&v.0))
}

/// Right-handed rotation about `axis` by `angle`.
#[derive(Debug, Clone, Copy)]
pub struct Rotation {
    axis: UnitVec,
    angle: f64,
    matrix: Rotation3<f64>,
}

impl Rotation {
    pub fn new(axis: UnitVec, angle: f64) -> Self {
        let matrix = Rotation3::from_axis_angle(&Unit::new_unchecked(axis.0), angle);
        Self { axis, angle, matrix }
    }

    pub fn axis(&self) -> UnitVec {
        self.axis
    }
    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn inverse(&self) -> Rotation {
        Rotation::new(self.axis, -self.angle)
    }

    pub fn apply(&self, p: &UnitVec) -> UnitVec {
        let v = self.matrix * p.0;
        UnitVec(v / v.norm())
    }
}

pub fn rotate(p: &UnitVec, r: &Rotation) -> UnitVec {
    r.apply(p)
}

/// Minor great-circle arc from `u` to `v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreatArc {
    u: UnitVec,
    v: UnitVec,
    normal: UnitVec,
    length: f64,
}

impl GreatArc {
    pub fn u(&self) -> UnitVec {
        self.u
    }
    pub fn v(&self) -> UnitVec {
        self.v
    }
    pub fn normal(&self) -> UnitVec {
        self.normal
    }
    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn reversed(&self) -> GreatArc {
        GreatArc { u: self.v, v: self.u, normal: -self.normal, length: self.length }
    }

    /// Point at fraction `t ∈ [0, 1]` of the way from `u` to `v`.
    pub fn point_at(&self, t: f64) -> UnitVec {
        let tangent = self.normal.0.cross(&self.u.0);
        let a = t * self.length;
        UnitVec::new_unchecked(self.u.0 * a.cos() + tangent * a.sin())
    }

    pub fn midpoint(&self) -> UnitVec {
        self.point_at(0.5)
    }

    /// Signed angle of `p`'s projection onto the supporting circle, measured from `u` toward `v`.
    fn angle_along(&self, p: &UnitVec) -> f64 {
        let tangent = self.normal.0.cross(&self.u.0);
        p.0.dot(&tangent).atan2(p.0.dot(&self.u.0))
    }
}

pub fn minor_arc(u: UnitVec, v: UnitVec) -> Result<GreatArc> {
    if (u.0 + v.0).norm() <= ANTIPODAL_TOL {
        return Err(Error::AntipodalEndpoints);
    }
    let length = angular_distance(&u, &v);
    if length < DEGENERATE_LEN {
        return Err(Error::DegenerateArc);
    }
    let normal = UnitVec::from_vector(u.0.cross(&v.0)).map_err(|_| Error::DegenerateArc)?;
    Ok(GreatArc { u, v, normal, length })
}

pub fn point_on_arc(p: &UnitVec, s: &GreatArc, tol: f64) -> bool {
    let off_circle = p.0.dot(&s.normal.0).clamp(-1.0, 1.0).asin().abs();
    if off_circle > tol {
        return false;
    }
    let a = s.angle_along(p);
    a >= -tol && a <= s.length + tol
}

/// Result of intersecting two minor arcs.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ArcIntersection {
    pub points: Vec<UnitVec>,
    /// Supporting great circles coincide; `points` then holds the endpoints of the shared part.
    pub overlap: bool,
}

pub fn arc_intersect(s: &GreatArc, t: &GreatArc, tol: f64) -> ArcIntersection {
    let c = s.normal.0.cross(&t.normal.0);
    let mut points: Vec<UnitVec> = Vec::new();
    let mut push = |p: UnitVec| {
        if !points.iter().any(|q| angular_distance(q, &p) <= tol) {
            points.push(p);
        }
    };
    if c.norm() < tol {
        for p in [s.u, s.v] {
            if point_on_arc(&p, t, tol) {
                push(p);
            }
        }
        for p in [t.u, t.v] {
            if point_on_arc(&p, s, tol) {
                push(p);
            }
        }
        return ArcIntersection { points, overlap: true };
    }
    let c = UnitVec(c / c.norm());
    for p in [c, -c] {
        if point_on_arc(&p, s, tol) && point_on_arc(&p, t, tol) {
            push(p);
        }
    }
    ArcIntersection { points, overlap: false }
}
