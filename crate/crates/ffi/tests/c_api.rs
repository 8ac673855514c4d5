use std::ffi::CStr;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use pentamod_ffi::*;

fn solid(n: u32) -> *mut PentamodSolid {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { pentamod_solid_new(n, &mut h) }, PentamodStatus::Ok);
    assert!(!h.is_null());
    h
}

fn last_error() -> String {
    let mut buf = [0 as std::ffi::c_char; 256];
    let len = unsafe { pentamod_last_error_message(buf.as_mut_ptr(), buf.len()) };
    let s = unsafe { CStr::from_ptr(buf.as_ptr()) }.to_string_lossy().into_owned();
    assert_eq!(s.len(), len.min(255));
    s
}

#[test]
fn handle_lifecycle_and_errors() {
    let mut h = ptr::null_mut();
    assert_eq!(unsafe { pentamod_solid_new(6, &mut h) }, PentamodStatus::UnsupportedSolid);
    assert!(h.is_null());
    assert!(last_error().contains("n=6"));
    assert_eq!(unsafe { pentamod_solid_new(3, ptr::null_mut()) }, PentamodStatus::NullPointer);

    let mut k = PentamodConstants::default();
    assert_eq!(unsafe { pentamod_constants(ptr::null(), &mut k) }, PentamodStatus::NullPointer);
    let h = solid(4);
    assert_eq!(unsafe { pentamod_constants(h, &mut k) }, PentamodStatus::Ok);
    assert_eq!((k.n, k.faces), (4, 8));
    assert!((k.lambda_b - 0.5).abs() < 1e-14);
    unsafe { pentamod_solid_free(h) };
    unsafe { pentamod_solid_free(ptr::null_mut()) };
}

#[test]
fn membership() {
    let h = solid(3);
    let mut m = PentamodMembership::default();
    assert_eq!(unsafe { pentamod_check(h, PentamodChart::M, -0.17, -0.17, &mut m) }, PentamodStatus::Ok);
    assert!(m.analytic && m.oracle);
    assert_eq!(m.region, 1);
    assert_eq!(unsafe { pentamod_check(h, PentamodChart::M, 0.0, 0.0, &mut m) }, PentamodStatus::Ok);
    assert!(!m.analytic && !m.oracle);
    assert_eq!(m.region, 0);
    assert_eq!(unsafe { pentamod_check(h, PentamodChart::A, f64::NAN, 0.0, &mut m) }, PentamodStatus::InvalidArgument);
    unsafe { pentamod_solid_free(h) };
}

#[test]
fn areas_curves_and_monte_carlo() {
    let h = solid(5);
    let mut a = PentamodAreas::default();
    assert_eq!(unsafe { pentamod_areas(h, &mut a) }, PentamodStatus::Ok);
    assert!((a.total_over_pi - 0.1954959087).abs() < 1e-8);

    let mut p = PentamodCurvePoint::default();
    assert_eq!(
        unsafe { pentamod_gamma_point(h, PentamodCurve::GammaA, 5.0 * std::f64::consts::PI / 6.0, &mut p) },
        PentamodStatus::Ok
    );
    assert!(p.r < 1e-12);
    assert_eq!(unsafe { pentamod_gamma_point(h, PentamodCurve::GammaA, 0.0, &mut p) }, PentamodStatus::OutOfRange);
    assert!(last_error().contains("outside admissible range"));

    let mut mc = PentamodMonteCarlo::default();
    assert_eq!(unsafe { pentamod_monte_carlo(h, 10, 1, &mut mc) }, PentamodStatus::InvalidArgument);
    assert_eq!(unsafe { pentamod_monte_carlo(h, 50_000, 1, &mut mc) }, PentamodStatus::Ok);
    assert!((mc.estimate - a.total).abs() < 4.0 * mc.std_error);
    unsafe { pentamod_solid_free(h) };
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(pentamod_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

fn have_cc() -> bool {
    Command::new("cc").arg("--version").output().is_ok_and(|o| o.status.success())
}

/// Compiles and runs a C program against the generated header and the static library.
#[test]
fn c_program_links_and_runs() {
    if !have_cc() {
        eprintln!("skipping: no C compiler");
        return;
    }
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let tmp = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    // target/tmp -> target/<profile>
    let profile_dir = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile_dir.join("libpentamod_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let exe = tmp.join("pentamod_smoke");
    let status = Command::new("cc")
        .arg("-std=c11")
        .arg("-D_DEFAULT_SOURCE")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lm", "-lpthread", "-ldl", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("ok "));
}
