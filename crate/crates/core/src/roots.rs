//! Bracketing root finder: uniform sign-change scan followed by bisection.

/// Sub-intervals of `[a, b]` on whose ends `f` changes sign (or vanishes).
pub fn sign_change_brackets(f: impl Fn(f64) -> f64, a: f64, b: f64, pieces: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let step = (b - a) / pieces as f64;
    let mut x0 = a;
    let mut f0 = f(x0);
    for k in 1..=pieces {
        let x1 = if k == pieces { b } else { a + step * k as f64 };
        let f1 = f(x1);
        if f0 == 0.0 || f0 * f1 < 0.0 {
            out.push((x0, x1));
        }
        x0 = x1;
        f0 = f1;
    }
    if f0 == 0.0 {
        out.push((b, b));
    }
    out
}

/// Bisection on a sign-change bracket until its width is below `tol`.
pub fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = f(lo);
    if flo == 0.0 {
        return lo;
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Smallest root of `f` in the open interval `(a, b)`.
pub fn smallest_root(f: impl Fn(f64) -> f64, a: f64, b: f64, pieces: usize, tol: f64) -> Option<f64> {
    sign_change_brackets(&f, a, b, pieces).into_iter().map(|(lo, hi)| bisect(&f, lo, hi, tol)).find(|&r| r > a && r < b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_roots() {
        let f = |x: f64| (x - 0.25) * (x - 0.7);
        let r = smallest_root(f, 0.0, 1.0, 64, 1e-13).unwrap();
        assert!((r - 0.25).abs() < 1e-13);
        assert_eq!(sign_change_brackets(f, 0.0, 1.0, 64).len(), 2);
        assert!(smallest_root(|x: f64| x * x + 1.0, 0.0, 1.0, 64, 1e-13).is_none());
    }

    #[test]
    fn root_on_grid_point() {
        let r = smallest_root(|x: f64| x - 0.5, 0.0, 1.0, 64, 1e-13).unwrap();
        assert_eq!(r, 0.5);
    }
}
