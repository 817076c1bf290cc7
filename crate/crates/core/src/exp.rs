//! The `*`-exponential: the power series `sum f^{*n} / n!`, its closed
//! structure form `exp(f0) (mu(f_v^s) + nu(f_v^s) f_v)`, the polar form and
//! real powers.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::expr::{SliceExpr, StarFn, StemValue};
use crate::quaternion::Quaternion;

pub const DEFAULT_MAX_TERMS: usize = 200;

/// Partial sums of `sum F^n / n!` on the stem at `z`, stopping once a term
/// is below `1e-15 (1 + |partial sum|)`.
pub fn exp_star_series_stem(f: &SliceExpr, z: Complex64, max_terms: usize) -> Result<StemValue> {
    let s = f.eval_stem(z)?;
    let mut term = StemValue::ONE;
    let mut sum = term;
    for n in 1..max_terms {
        term = term * s * (1.0 / n as f64);
        sum = sum + term;
        if term.norm() < 1e-15 * (1.0 + sum.norm()) {
            return Ok(sum);
        }
    }
    Err(Error::NoConvergence(max_terms))
}

/// `exp_*(f)(q)` by the truncated series.
pub fn exp_star_series(f: &SliceExpr, q: Quaternion, max_terms: usize) -> Result<Quaternion> {
    if q.is_real() {
        return Ok(exp_star_series_stem(f, Complex64::new(q.w, 0.0), max_terms)?.a);
    }
    let (x, y, unit) = q.split()?;
    Ok(exp_star_series_stem(f, Complex64::new(x, y), max_terms)?.at_unit(unit))
}

/// `exp_*(f)` in the structure form.
pub fn exp_star(f: &SliceExpr) -> SliceExpr {
    f.exp_star()
}

pub fn cos_star(f: &SliceExpr) -> SliceExpr {
    f.star(StarFn::Cos)
}

pub fn sin_star(f: &SliceExpr) -> SliceExpr {
    f.star(StarFn::Sin)
}

/// Polar form `exp(f0) (cos r + sin r * f_v / r)` for a slice-preserving
/// `root` with `root^2 = f_v^s` and no zeros.
pub fn exp_star_polar(f: &SliceExpr, root: &SliceExpr) -> Result<SliceExpr> {
    let f0 = f.scalar_part();
    let fv = f.vect_part();
    let unit = fv.divide(root)?;
    let inner = cos_star(root) + sin_star(root) * unit;
    Ok(f0.exp_star() * inner)
}

/// `g^{1/s} = exp_*(log_g / s)` for a verified logarithm `log_g` of `g`.
pub fn real_power(log_g: &SliceExpr, s: f64) -> SliceExpr {
    ((1.0 / s) * log_g.clone()).exp_star()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::{exp_q, ImaginaryUnit, I, J, K, ONE};
    use std::f64::consts::PI;

    fn close(a: Quaternion, b: Quaternion, tol: f64) -> bool {
        a.dist(b) <= tol * (1.0 + b.norm())
    }

    fn points() -> Vec<Quaternion> {
        let u = ImaginaryUnit::from_vector(0.3, -0.4, 1.2).unwrap();
        vec![
            Quaternion::from_split(0.2, 0.7, ImaginaryUnit::I),
            Quaternion::from_split(-0.5, 1.1, u),
            Quaternion::from_split(0.9, 0.3, ImaginaryUnit::K),
        ]
    }

    #[test]
    fn series_examples() {
        for p in points() {
            let one = exp_star_series(&SliceExpr::real(0.0), p, 200).unwrap();
            assert!(close(one, ONE, 1e-15));
            let m1 = exp_star_series(&SliceExpr::constant(I * PI), p, 200).unwrap();
            assert!(close(m1, -ONE, 1e-14));
            let psi = SliceExpr::unit() * I + J;
            let e = exp_star_series(&psi, p, 200).unwrap();
            assert!(close(e, ONE + psi.eval(p).unwrap(), 1e-15));
        }
    }

    #[test]
    fn closed_form_matches_series() {
        let q = SliceExpr::var();
        let corpus = vec![
            q.clone() * I + J,
            q.pow(2) * K - q.clone() + 0.5,
            (q.clone() - I) * (q.clone() + J * 2.0),
            SliceExpr::constant(Quaternion::new(0.1, 2.0, -1.0, 0.5)),
        ];
        for f in corpus {
            for p in points() {
                let a = exp_star_series(&f, p, 200).unwrap();
                let b = exp_star(&f).eval(p).unwrap();
                assert!(close(a, b, 1e-12), "{f} at {p}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn constants_reduce_to_exp_q() {
        let c = Quaternion::new(0.3, 1.0, -2.0, 0.4);
        for p in points() {
            assert!(close(exp_star(&SliceExpr::constant(c)).eval(p).unwrap(), exp_q(c), 1e-14));
        }
    }

    #[test]
    fn normalized_vector_times_pi() {
        // w = (i + q j) / sqrt(1 + q^2) has w^s = 1
        let q = SliceExpr::var();
        let wt = SliceExpr::constant(I) + q.clone() * J;
        let root = (q.pow(2) + 1.0).apply(crate::expr::ScalarFn::Sqrt).unwrap();
        let w = wt.divide(&root).unwrap();
        let f = PI * w;
        for p in points() {
            assert!(close(exp_star(&f).eval(p).unwrap(), -ONE, 1e-13));
        }
    }

    #[test]
    fn trig_of_slice_preserving() {
        let f = SliceExpr::var().pow(2) - 0.3;
        let one = cos_star(&f) * cos_star(&f) + sin_star(&f) * sin_star(&f);
        for p in points() {
            assert!(close(one.eval(p).unwrap(), ONE, 1e-12));
        }
        assert!(close(cos_star(&SliceExpr::real(PI)).eval(I).unwrap(), -ONE, 1e-15));
        assert!(close(cos_star(&SliceExpr::real(0.0)).eval(I).unwrap(), ONE, 1e-15));
    }

    #[test]
    fn trig_series_oracle() {
        // cos_*(f) = sum (-1)^n F^{2n} / (2n)! on the stem
        let f = SliceExpr::var() * I + K * 0.5;
        for z in [Complex64::new(0.3, 0.4), Complex64::new(-1.0, 0.8)] {
            let s = f.eval_stem(z).unwrap();
            let (mut term, mut c, mut sn) = (StemValue::ONE, StemValue::ONE, StemValue::ZERO);
            for n in 1..60 {
                term = term * s * (1.0 / n as f64);
                match n % 4 {
                    0 => c = c + term,
                    1 => sn = sn + term,
                    2 => c = c - term,
                    _ => sn = sn - term,
                }
            }
            assert!((cos_star(&f).eval_stem(z).unwrap() - c).norm() < 1e-13);
            assert!((sin_star(&f).eval_stem(z).unwrap() - sn).norm() < 1e-13);
        }
    }

    #[test]
    fn polar_agrees_with_structure_form() {
        let q = SliceExpr::var();
        let f = q.clone() * I + SliceExpr::real(0.2);
        // f_v^s = q^2 with root q away from the real axis
        let polar = exp_star_polar(&f, &q).unwrap();
        for p in points() {
            assert!(close(polar.eval(p).unwrap(), exp_star(&f).eval(p).unwrap(), 1e-13));
        }
    }

    #[test]
    fn square_root_of_constant() {
        let log4 = SliceExpr::real(4f64.ln());
        let r = real_power(&log4, 2.0);
        for p in points() {
            assert!(close(r.eval(p).unwrap(), Quaternion::real(2.0), 1e-14));
        }
    }
}
