//! Branched scalar special functions.
//!
//! All of these act on the complex value of a slice-preserving function on
//! the upper leaf, so they are written over `Complex64`. The quaternionic
//! branch [`log_k`] is the exception and works on a single quaternion.
//!
//! `mu` and `nu` are the entire functions with `mu(z^2) = cos z` and
//! `nu(z^2) = sin z / z`. The branches `mu_inv(w, k)` invert `mu` on
//! `M_k = p2(D_k)` where `D_k` is the vertical strip `Re in (k pi, (k+1) pi)`
//! (closed at 0 for `k = 0` and `k = -1`).

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

/// Series are used for `|z|` up to this radius, closed forms beyond.
const SERIES_RADIUS: f64 = 25.0;
/// Imaginary parts below this (relative) count as "on a cut".
const CUT_TOL: f64 = 1e-14;

fn on_real_axis(w: Complex64) -> bool {
    w.im.abs() <= CUT_TOL * (1.0 + w.norm())
}

fn violation(branch: impl Into<String>, w: Complex64) -> Error {
    Error::BranchDomainViolation { branch: branch.into(), value: format!("{w}") }
}

/// `mu(z) = sum (-1)^m z^m / (2m)!`.
pub fn mu(z: Complex64) -> Complex64 {
    if z.norm() <= SERIES_RADIUS {
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for m in 1..80 {
            term = -term * z / ((2 * m - 1) as f64 * (2 * m) as f64);
            sum += term;
            if term.norm() < 1e-18 * sum.norm().max(1e-300) {
                break;
            }
        }
        sum
    } else {
        // cos is even, so either square root gives the same value
        z.sqrt().cos()
    }
}

/// `nu(z) = sum (-1)^m z^m / (2m+1)!`.
pub fn nu(z: Complex64) -> Complex64 {
    if z.norm() <= SERIES_RADIUS {
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for m in 1..80 {
            term = -term * z / ((2 * m) as f64 * (2 * m + 1) as f64);
            sum += term;
            if term.norm() < 1e-18 * sum.norm().max(1e-300) {
                break;
            }
        }
        sum
    } else {
        let r = z.sqrt();
        r.sin() / r
    }
}

/// Derivative of `mu`: `mu'(z) = -nu(z) / 2`.
pub fn mu_prime(z: Complex64) -> Complex64 {
    -nu(z) * 0.5
}

/// Principal branch of the logarithm; the slit `(-inf, 0]` is excluded.
pub fn log_principal(w: Complex64) -> Result<Complex64> {
    if on_real_axis(w) && w.re <= 0.0 {
        return Err(violation("log0", w));
    }
    Ok(w.ln())
}

/// Principal square root; positive on `(0, inf)`, the slit `(-inf, 0]` is excluded.
pub fn sqrt_principal(w: Complex64) -> Result<Complex64> {
    if on_real_axis(w) && w.re <= 0.0 {
        return Err(violation("sqrt", w));
    }
    Ok(w.sqrt())
}

/// Complex reciprocal; zero is excluded.
pub fn recip(w: Complex64) -> Result<Complex64> {
    if w.norm() == 0.0 {
        return Err(violation("recip", w));
    }
    Ok(w.inv())
}

/// `arccos_k`: inverse of `cos` restricted to the strip `D_k`.
///
/// For `k = 0, -1` the admissible set is `C \ ((-inf, -1] U [1, inf))`; for
/// every other `k` the same set is required by the strip geometry.
pub fn arccos_k(w: Complex64, k: i64) -> Result<Complex64> {
    if on_real_axis(w) && (w.re <= -1.0 || w.re >= 1.0) {
        return Err(violation(format!("arccos_{k}"), w));
    }
    let mut phi = strip_arccos(w, k);
    // Newton polish on cos(phi) = w
    for _ in 0..3 {
        let s = phi.sin();
        if s.norm() < 1e-300 {
            break;
        }
        let step = (phi.cos() - w) / (-s);
        phi -= step;
        if step.norm() < 1e-16 * (1.0 + phi.norm()) {
            break;
        }
    }
    Ok(phi)
}

/// Principal arccos shifted to the strip `D_k`; no domain checks.
fn strip_arccos(w: Complex64, k: i64) -> Complex64 {
    let a = w.acos();
    if k.rem_euclid(2) == 0 {
        a + 2.0 * PI * (k / 2) as f64
    } else {
        // k = 2n - 1  ->  -a + 2 pi n
        let n = (k + 1) / 2;
        -a + 2.0 * PI * n as f64
    }
}

/// `mu_k^{-1}`: the inverse of `mu` on `M_k`, as `arccos_k(w)^2` refined by Newton.
///
/// `k = 0` and `k = -1` address the same branch, holomorphic near `w = 1`
/// with `mu_inv(1, 0) = 0`; it excludes `(-inf, -1]`. Other branches also
/// exclude `[1, inf)`.
pub fn mu_inv(w: Complex64, k: i64) -> Result<Complex64> {
    let principal = k == 0 || k == -1;
    if on_real_axis(w) && (w.re <= -1.0 || (!principal && w.re >= 1.0)) {
        return Err(violation(format!("mu_inv_{k}"), w));
    }
    let phi = strip_arccos(w, k);
    let mut g = phi * phi;
    newton_mu(&mut g, w);
    Ok(g)
}

/// Newton polish of `mu(g) = w`.
pub(crate) fn newton_mu(g: &mut Complex64, w: Complex64) {
    for _ in 0..8 {
        let d = mu_prime(*g);
        if d.norm() < 1e-300 {
            return;
        }
        let step = (mu(*g) - w) / d;
        *g -= step;
        if step.norm() <= 1e-16 * (1.0 + g.norm()) {
            return;
        }
    }
}

/// Branch `log_k` of the quaternionic logarithm.
///
/// Returns `log|q| + I(q) * alpha` with `alpha` the argument of `q` in its
/// own slice, shifted into the `k`-th period. For `k = 0` the result has
/// `alpha in [0, pi)` and positive reals are allowed; for `k != 0`, `q`
/// must be non-real.
pub fn log_k(q: Quaternion, k: i64) -> Result<Quaternion> {
    let bad = || Error::BranchDomainViolation { branch: format!("log_{k}"), value: q.to_string() };
    if q.is_real() {
        if k == 0 && q.w > 0.0 {
            return Ok(Quaternion::real(q.w.ln()));
        }
        return Err(bad());
    }
    let (x, y, unit) = q.split()?;
    let theta = y.atan2(x);
    let alpha = if k.rem_euclid(2) == 0 {
        theta + 2.0 * PI * (k / 2) as f64
    } else {
        theta - 2.0 * PI * ((k + 1) / 2) as f64
    };
    Ok(Quaternion::real(q.norm().ln()) + unit.quaternion() * alpha)
}
