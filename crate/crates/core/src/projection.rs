//! Stereographic charts centred at A (face centre), B (vertex) and M (edge midpoint),
//! the Möbius maps between them, and the per-solid constants.

use std::f64::consts::{FRAC_PI_3, PI};
use std::fmt;
use std::sync::OnceLock;

use nalgebra::{Matrix3, Vector3};
use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::sphere::{Rotation, UnitVec};

/// The three triangular platonic solids, indexed by the number of faces at a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Solid {
    Tetrahedron,
    Octahedron,
    Icosahedron,
}

impl Solid {
    pub const ALL: [Solid; 3] = [Solid::Tetrahedron, Solid::Octahedron, Solid::Icosahedron];

    pub fn from_n(n: u32) -> Result<Solid> {
        match n {
            3 => Ok(Solid::Tetrahedron),
            4 => Ok(Solid::Octahedron),
            5 => Ok(Solid::Icosahedron),
            _ => Err(Error::UnsupportedSolid(n)),
        }
    }

    pub fn n(self) -> u32 {
        match self {
            Solid::Tetrahedron => 3,
            Solid::Octahedron => 4,
            Solid::Icosahedron => 5,
        }
    }

    /// Number of faces.
    pub fn faces(self) -> u32 {
        match self {
            Solid::Tetrahedron => 4,
            Solid::Octahedron => 8,
            Solid::Icosahedron => 20,
        }
    }

    pub fn constants(self) -> &'static SolidConstants {
        &self.geometry().constants
    }

    pub fn geometry(self) -> &'static Geometry {
        static CELLS: [OnceLock<Geometry>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
        CELLS[self.index()].get_or_init(|| Geometry::build(self))
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Solid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.n())
    }
}

/// Chordal chart distances and curve coefficients of one solid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolidConstants {
    pub n: u32,
    pub faces: u32,
    pub d_ab: f64,
    pub d_am: f64,
    pub d_bm: f64,
    pub lambda_a: f64,
    pub lambda_b: f64,
    pub lambda_c: f64,
}

impl SolidConstants {
    /// Residual of the equation fixing `d_AB`: (d⁻¹−d)·tan(π/3) − (d⁻¹+d)·tan((½−1/n)π).
    pub fn d_ab_equation_residual(&self) -> f64 {
        let d = self.d_ab;
        let beta = (0.5 - 1.0 / self.n as f64) * PI;
        (1.0 / d - d) * FRAC_PI_3.tan() - (1.0 / d + d) * beta.tan()
    }
}

pub fn solid_constants(n: u32) -> Result<SolidConstants> {
    Ok(*Solid::from_n(n)?.constants())
}

fn closed_form_constants(solid: Solid) -> SolidConstants {
    let (s2, s3, s5) = (2f64.sqrt(), 3f64.sqrt(), 5f64.sqrt());
    let (d_ab, d_am, d_bm) = match solid {
        Solid::Tetrahedron => (1.0 / s2, (s3 - 1.0) / s2, (s3 - 1.0) / s2),
        Solid::Octahedron => ((s3 - 1.0) / s2, s3 - s2, s2 - 1.0),
        Solid::Icosahedron => (
            ((30.0 + 6.0 * s5).sqrt() - s5 - 3.0) / 4.0,
            (15f64.sqrt() - s5 + s3 - 3.0) / 2.0,
            ((10.0 + 2.0 * s5).sqrt() - s5 - 1.0) / 2.0,
        ),
    };
    let n = solid.n();
    let alpha_b = PI / n as f64;
    let c = SolidConstants {
        n,
        faces: solid.faces(),
        d_ab,
        d_am,
        d_bm,
        lambda_a: 0.5 * (1.0 / d_ab - d_ab) * FRAC_PI_3.cos(),
        lambda_b: 0.5 * (1.0 / d_ab - d_ab) * alpha_b.cos(),
        lambda_c: 0.5 * (1.0 / d_am - d_am) * FRAC_PI_3.cos(),
    };
    debug_assert!(c.d_ab_equation_residual().abs() < 1e-12);
    debug_assert!((0.5 * (1.0 / d_bm - d_bm) * alpha_b.cos() - c.lambda_c).abs() < 1e-12);
    c
}

/// Which stereographic chart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ChartId {
    A,
    B,
    M,
}

impl ChartId {
    pub const ALL: [ChartId; 3] = [ChartId::A, ChartId::B, ChartId::M];
}

impl fmt::Display for ChartId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ChartId::A => "A",
            ChartId::B => "B",
            ChartId::M => "M",
        };
        f.write_str(s)
    }
}

/// Orthonormal frame of a chart; rows are the chart axes in world coordinates.
/// The chart origin X sits at ξ = (0,0,−1), so the third row is −X.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Frame(Matrix3<f64>);

impl Frame {
    fn from_axes(e1: Vector3<f64>, e3: Vector3<f64>) -> Frame {
        let e2 = e3.cross(&e1);
        Frame(Matrix3::from_rows(&[e1.transpose(), e2.transpose(), e3.transpose()]))
    }

    pub fn axis(&self, i: usize) -> Vector3<f64> {
        self.0.row(i).transpose()
    }

    /// World point expressed in chart coordinates ξ.
    pub fn to_local(&self, p: &UnitVec) -> Vector3<f64> {
        self.0 * p.as_vector()
    }

    pub fn to_world(&self, xi: &Vector3<f64>) -> UnitVec {
        let v = self.0.transpose() * xi;
        UnitVec::new_unchecked(v / v.norm())
    }

    /// Right-handed rotation turning the chart by `angle` about its origin (z ↦ z·e^{i·angle}).
    pub fn turn(&self, angle: f64) -> Rotation {
        Rotation::new(UnitVec::new_unchecked(self.axis(2)), angle)
    }
}

/// Canonical placement of the base triangle and the derived chart frames.
///
/// The world frame is the M-chart frame: M = (0,0,−1), A on the negative real axis and
/// B on the negative imaginary axis of the M-chart.
#[derive(Debug, Clone)]
pub struct Geometry {
    pub solid: Solid,
    pub constants: SolidConstants,
    pub a: UnitVec,
    pub b: UnitVec,
    pub m: UnitVec,
    /// Image of M under the −2π/3 chart rotation about A; second vertex of the face edge through B.
    pub c: UnitVec,
    /// Centre of the face across the edge through M.
    pub a_prime: UnitVec,
    /// Far vertex of the edge through M.
    pub b_prime: UnitVec,
    frames: [Frame; 3],
}

impl Geometry {
    fn build(solid: Solid) -> Geometry {
        let constants = closed_form_constants(solid);
        let m_frame = Frame(Matrix3::identity());
        let m = m_frame.to_world(&Vector3::new(0.0, 0.0, -1.0));
        let a = sphere_point(&m_frame, Complex64::new(-constants.d_am, 0.0));
        let b = sphere_point(&m_frame, Complex64::new(0.0, -constants.d_bm));

        let toward_b = a.tangent_toward(&b).expect("A and B are distinct");
        let a_frame = Frame::from_axes(toward_b, -a.as_vector());
        let toward_a = b.tangent_toward(&a).expect("A and B are distinct");
        let b_frame = Frame::from_axes(-toward_a, -b.as_vector());

        let n = solid.n() as f64;
        let c = a_frame.turn(-2.0 * FRAC_PI_3).apply(&m);
        let b_prime = a_frame.turn(2.0 * FRAC_PI_3).apply(&b);
        let a_prime = b_frame.turn(-2.0 * PI / n).apply(&a);
        Geometry { solid, constants, a, b, m, c, a_prime, b_prime, frames: [a_frame, b_frame, m_frame] }
    }

    pub fn frame(&self, chart: ChartId) -> &Frame {
        match chart {
            ChartId::A => &self.frames[0],
            ChartId::B => &self.frames[1],
            ChartId::M => &self.frames[2],
        }
    }

    pub fn origin(&self, chart: ChartId) -> UnitVec {
        match chart {
            ChartId::A => self.a,
            ChartId::B => self.b,
            ChartId::M => self.m,
        }
    }
}

/// Stereographic image of a chart point, in chart coordinates.
pub fn chart_xi(z: Complex64) -> Vector3<f64> {
    let r2 = z.norm_sqr();
    Vector3::new(2.0 * z.re, 2.0 * z.im, r2 - 1.0) / (r2 + 1.0)
}

/// Inverse of [`chart_xi`]; fails at the antipode of the chart origin.
pub fn xi_chart(xi: &Vector3<f64>) -> Result<Complex64> {
    let den = 1.0 - xi.z;
    if den < 1e-12 {
        return Err(Error::AntipodeOfOrigin);
    }
    Ok(Complex64::new(xi.x / den, xi.y / den))
}

fn sphere_point(frame: &Frame, z: Complex64) -> UnitVec {
    frame.to_world(&chart_xi(z))
}

/// Complex coordinate of a sphere point in a named chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartPoint {
    pub z: Complex64,
    pub chart: ChartId,
    pub solid: Solid,
}

impl ChartPoint {
    pub fn new(z: Complex64, chart: ChartId, solid: Solid) -> ChartPoint {
        ChartPoint { z, chart, solid }
    }

    pub fn to_sphere(&self) -> UnitVec {
        to_sphere(self)
    }

    /// The antipode z* with z*·z̄ = −1.
    pub fn antipode(&self) -> ChartValue {
        if self.z == Complex64::new(0.0, 0.0) {
            ChartValue::Infinity
        } else {
            ChartValue::Finite(-1.0 / self.z.conj())
        }
    }
}

/// A value of the extended complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChartValue {
    Finite(Complex64),
    Infinity,
}

impl ChartValue {
    pub fn finite(self) -> Option<Complex64> {
        match self {
            ChartValue::Finite(z) => Some(z),
            ChartValue::Infinity => None,
        }
    }
}

pub fn to_sphere(p: &ChartPoint) -> UnitVec {
    sphere_point(p.solid.geometry().frame(p.chart), p.z)
}

pub fn to_chart(p: &UnitVec, chart: ChartId, solid: Solid) -> Result<ChartPoint> {
    let xi = solid.geometry().frame(chart).to_local(p);
    Ok(ChartPoint { z: xi_chart(&xi)?, chart, solid })
}

/// z ↦ (az + b)/(cz + d).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusMap {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl MobiusMap {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<MobiusMap> {
        if (a * d - b * c).norm() <= 1e-12 {
            return Err(Error::SingularMobius);
        }
        Ok(MobiusMap { a, b, c, d })
    }

    pub fn identity() -> MobiusMap {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        MobiusMap { a: one, b: zero, c: zero, d: one }
    }

    pub fn coefficients(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn inverse(&self) -> MobiusMap {
        MobiusMap { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        MobiusMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
    }

    pub fn apply(&self, z: Complex64) -> ChartValue {
        apply_mobius(self, z)
    }

    pub fn apply_value(&self, z: ChartValue) -> ChartValue {
        match z {
            ChartValue::Finite(z) => apply_mobius(self, z),
            ChartValue::Infinity if self.c.norm() < 1e-14 * self.a.norm() => ChartValue::Infinity,
            ChartValue::Infinity => ChartValue::Finite(self.a / self.c),
        }
    }
}

pub fn apply_mobius(m: &MobiusMap, z: Complex64) -> ChartValue {
    let num = m.a * z + m.b;
    let den = m.c * z + m.d;
    if den.norm() < 1e-14 * num.norm() || den.norm() == 0.0 {
        ChartValue::Infinity
    } else {
        ChartValue::Finite(num / den)
    }
}

/// z_A = (z_M + d_AM)/(1 − d_AM·z_M)·e^{iπ/3}.
pub fn mobius_m_to_a(solid: Solid) -> MobiusMap {
    let d = solid.constants().d_am;
    let rot = Complex64::from_polar(1.0, FRAC_PI_3);
    MobiusMap::new(rot, rot * d, Complex64::new(-d, 0.0), Complex64::new(1.0, 0.0)).expect("1 + d² ≠ 0")
}

/// z_B = (z_M + d_BM·i)/(1 + d_BM·i·z_M)·e^{i(½−1/n)π}.
pub fn mobius_m_to_b(solid: Solid) -> MobiusMap {
    let d = solid.constants().d_bm;
    let rot = Complex64::from_polar(1.0, (0.5 - 1.0 / solid.n() as f64) * PI);
    let di = Complex64::new(0.0, d);
    MobiusMap::new(rot, rot * di, di, Complex64::new(1.0, 0.0)).expect("1 + d² ≠ 0")
}

/// Möbius map between any two charts of `solid`.
pub fn chart_transition(solid: Solid, from: ChartId, to: ChartId) -> MobiusMap {
    let from_m = |c: ChartId| match c {
        ChartId::A => mobius_m_to_a(solid),
        ChartId::B => mobius_m_to_b(solid),
        ChartId::M => MobiusMap::identity(),
    };
    from_m(to).compose(&from_m(from).inverse())
}
