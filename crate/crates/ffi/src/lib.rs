//! C ABI for pentamod.
//!
//! Every fallible function returns a [`PentamodStatus`]. On failure the message is kept per thread
//! and can be copied out with [`pentamod_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};

use num_complex::Complex64;
use pentamod::area::{monte_carlo_area, part_areas};
use pentamod::moduli::{analytic_in_moduli, gamma_point, region_of, CurveKind, CurveSpec};
use pentamod::pentagon::oracle_in_moduli;
use pentamod::projection::{ChartId, ChartPoint, Solid};
use pentamod::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PentamodStatus {
    Ok = 0,
    NullPointer = 1,
    UnsupportedSolid = 2,
    InvalidArgument = 3,
    OutOfRange = 4,
    Degenerate = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PentamodChart {
    A = 0,
    B = 1,
    M = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PentamodCurve {
    GammaA = 0,
    GammaB = 1,
    GammaCInA = 2,
    GammaCInB = 3,
}

/// Opaque handle for one of the three solids.
pub struct PentamodSolid {
    solid: Solid,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct PentamodConstants {
    pub n: u32,
    pub faces: u32,
    pub d_ab: f64,
    pub d_am: f64,
    pub d_bm: f64,
    pub lambda_a: f64,
    pub lambda_b: f64,
    pub lambda_c: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct PentamodMembership {
    pub analytic: bool,
    pub oracle: bool,
    /// Region index, or 0 when the point lies on a dividing circle.
    pub region: u32,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct PentamodAreas {
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

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct PentamodCurvePoint {
    pub theta: f64,
    pub r: f64,
    /// Chart coordinate.
    pub x: f64,
    pub y: f64,
    /// Point on the unit sphere, in world coordinates.
    pub xi: [f64; 3],
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default)]
pub struct PentamodMonteCarlo {
    pub samples: u64,
    pub hits: u64,
    pub estimate: f64,
    pub std_error: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(msg: impl Into<String>) {
    LAST_ERROR.with(|e| *e.borrow_mut() = msg.into());
}

fn status_of(e: &Error) -> PentamodStatus {
    match e {
        Error::UnsupportedSolid(_) => PentamodStatus::UnsupportedSolid,
        Error::InvalidArgument(_) => PentamodStatus::InvalidArgument,
        Error::OutOfRange { .. } | Error::NoRootInDisk(_) | Error::AntipodeOfOrigin => PentamodStatus::OutOfRange,
        _ => PentamodStatus::Degenerate,
    }
}

/// Runs `f`, recording any error or panic.
fn guard(f: impl FnOnce() -> Result<(), (PentamodStatus, String)>) -> PentamodStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PentamodStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PentamodStatus::Panic
        }
    }
}

fn lib_err(e: Error) -> (PentamodStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (PentamodStatus, String) {
    (PentamodStatus::NullPointer, "null pointer argument".into())
}

unsafe fn solid_of(handle: *const PentamodSolid) -> Result<Solid, (PentamodStatus, String)> {
    handle.as_ref().map(|h| h.solid).ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), (PentamodStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    out.write(value);
    Ok(())
}

fn chart_id(c: PentamodChart) -> ChartId {
    match c {
        PentamodChart::A => ChartId::A,
        PentamodChart::B => ChartId::B,
        PentamodChart::M => ChartId::M,
    }
}

/// Library version as a NUL-terminated string with static lifetime.
#[no_mangle]
pub extern "C" fn pentamod_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(s) => s,
        Err(_) => panic!("version contains NUL"),
    };
    VERSION.as_ptr()
}

/// Copies the last error message of this thread into `buf` (NUL-terminated, truncated to `len`).
/// Returns the full message length in bytes, excluding the terminator.
///
/// # Safety
/// `buf` must be null or valid for `len` bytes.
#[no_mangle]
pub unsafe extern "C" fn pentamod_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            std::ptr::copy_nonoverlapping(msg.as_ptr(), buf.cast::<u8>(), n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Creates a handle for n ∈ {3, 4, 5}. Free it with `pentamod_solid_free`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pentamod_solid_new(n: u32, out: *mut *mut PentamodSolid) -> PentamodStatus {
    guard(|| {
        let solid = Solid::from_n(n).map_err(lib_err)?;
        if out.is_null() {
            return Err(null());
        }
        out.write(Box::into_raw(Box::new(PentamodSolid { solid })));
        Ok(())
    })
}

/// # Safety
/// `solid` must be null or a handle from `pentamod_solid_new` that was not freed before.
#[no_mangle]
pub unsafe extern "C" fn pentamod_solid_free(solid: *mut PentamodSolid) {
    if !solid.is_null() {
        drop(Box::from_raw(solid));
    }
}

/// # Safety
/// `solid` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pentamod_constants(
    solid: *const PentamodSolid,
    out: *mut PentamodConstants,
) -> PentamodStatus {
    guard(|| {
        let k = solid_of(solid)?.constants();
        write(
            out,
            PentamodConstants {
                n: k.n,
                faces: k.faces,
                d_ab: k.d_ab,
                d_am: k.d_am,
                d_bm: k.d_bm,
                lambda_a: k.lambda_a,
                lambda_b: k.lambda_b,
                lambda_c: k.lambda_c,
            },
        )
    })
}

/// Membership of the anchor at chart coordinate x + iy, by the analytic predicate and by
/// building the pentagon.
///
/// # Safety
/// `solid` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pentamod_check(
    solid: *const PentamodSolid,
    chart: PentamodChart,
    x: f64,
    y: f64,
    out: *mut PentamodMembership,
) -> PentamodStatus {
    guard(|| {
        let solid = solid_of(solid)?;
        if !(x.is_finite() && y.is_finite()) {
            return Err((PentamodStatus::InvalidArgument, "coordinates must be finite".into()));
        }
        let p = ChartPoint::new(Complex64::new(x, y), chart_id(chart), solid).to_sphere();
        let region = region_of(solid, &p).interior().map_or(0, |r| r.index() as u32);
        write(
            out,
            PentamodMembership { analytic: analytic_in_moduli(solid, &p), oracle: oracle_in_moduli(solid, &p), region },
        )
    })
}

/// # Safety
/// `solid` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pentamod_areas(solid: *const PentamodSolid, out: *mut PentamodAreas) -> PentamodStatus {
    guard(|| {
        let r = part_areas(solid_of(solid)?);
        write(
            out,
            PentamodAreas {
                a1: r.a1,
                a2: r.a2,
                a3: r.a3,
                a7: r.a7,
                a4: r.a4,
                a5: r.a5,
                a8: r.a8,
                a13: r.a13,
                total: r.total,
                total_over_pi: r.total_over_pi,
                fraction_of_sphere: r.fraction_of_sphere,
            },
        )
    })
}

/// Point of a boundary curve at chart angle `theta`, in the curve's own chart.
///
/// # Safety
/// `solid` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pentamod_gamma_point(
    solid: *const PentamodSolid,
    curve: PentamodCurve,
    theta: f64,
    out: *mut PentamodCurvePoint,
) -> PentamodStatus {
    guard(|| {
        let kind = match curve {
            PentamodCurve::GammaA => CurveKind::GammaA,
            PentamodCurve::GammaB => CurveKind::GammaB,
            PentamodCurve::GammaCInA => CurveKind::GammaCInA,
            PentamodCurve::GammaCInB => CurveKind::GammaCInB,
        };
        let s = gamma_point(&CurveSpec::new(kind, solid_of(solid)?), theta).map_err(lib_err)?;
        write(out, PentamodCurvePoint { theta: s.theta, r: s.r, x: s.z.z.re, y: s.z.z.im, xi: s.xi.to_array() })
    })
}

/// Monte Carlo area of the moduli; `samples` must be at least 1000.
///
/// # Safety
/// `solid` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn pentamod_monte_carlo(
    solid: *const PentamodSolid,
    samples: u64,
    seed: u64,
    out: *mut PentamodMonteCarlo,
) -> PentamodStatus {
    guard(|| {
        let mc = monte_carlo_area(solid_of(solid)?, samples, seed).map_err(lib_err)?;
        write(
            out,
            PentamodMonteCarlo { samples: mc.samples, hits: mc.hits, estimate: mc.estimate, std_error: mc.stderr },
        )
    })
}
