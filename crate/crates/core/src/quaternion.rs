//! Quaternion arithmetic and the `x + I y` decomposition.
//!
//! Every non-real quaternion lies on exactly one slice `C_I = R + I R` with
//! `I` in the unit sphere of imaginary units and `y > 0`; [`Quaternion::split`]
//! recovers that triple and [`Quaternion::from_split`] reassembles it.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative threshold below which the imaginary part counts as zero.
pub const REAL_AXIS_TOL: f64 = 1e-13;

/// A quaternion `w + x i + y j + z k`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

impl Quaternion {
    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Quaternion { w, x, y, z }
    }

    pub const fn real(w: f64) -> Self {
        Quaternion::new(w, 0.0, 0.0, 0.0)
    }

    pub fn conj(self) -> Self {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Self> {
        let n = self.norm_sqr();
        if n == 0.0 {
            None
        } else {
            Some(self.conj() * (1.0 / n))
        }
    }

    /// The imaginary part `x i + y j + z k`.
    pub fn imag(self) -> Self {
        Quaternion::new(0.0, self.x, self.y, self.z)
    }

    pub fn imag_norm(self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Coefficient `l` in the basis `{1, i, j, k}`.
    pub fn coeff(self, l: usize) -> f64 {
        match l {
            0 => self.w,
            1 => self.x,
            2 => self.y,
            3 => self.z,
            _ => panic!("quaternion coefficient index {l} out of range"),
        }
    }

    pub fn basis(l: usize) -> Self {
        [ONE, I, J, K][l]
    }

    pub fn is_real(self) -> bool {
        self.imag_norm() <= REAL_AXIS_TOL * (1.0 + self.norm())
    }

    /// Decompose `q = x + I y` with `y > 0`.
    pub fn split(self) -> Result<(f64, f64, ImaginaryUnit)> {
        if self.is_real() {
            return Err(Error::RealInput(self.to_string()));
        }
        let y = self.imag_norm();
        let unit = ImaginaryUnit(self.imag() * (1.0 / y));
        Ok((self.w, y, unit))
    }

    pub fn from_split(x: f64, y: f64, unit: ImaginaryUnit) -> Self {
        Quaternion::real(x) + unit.0 * y
    }

    /// Image of a complex number under the slice isomorphism `C -> C_I`.
    pub fn from_complex(z: Complex64, unit: ImaginaryUnit) -> Self {
        Quaternion::from_split(z.re, z.im, unit)
    }

    /// Classical exponential `e^x (cos y + I sin y)`.
    pub fn exp(self) -> Self {
        let ex = self.w.exp();
        let y = self.imag_norm();
        if y == 0.0 {
            return Quaternion::real(ex);
        }
        let s = ex * y.sin() / y;
        Quaternion::new(ex * y.cos(), s * self.x, s * self.y, s * self.z)
    }

    pub fn dist(self, other: Self) -> f64 {
        (self - other).norm()
    }
}

/// Exponential defined by the classical power series.
pub fn exp_q(q: Quaternion) -> Quaternion {
    q.exp()
}

/// An imaginary unit: a quaternion with zero real part and unit norm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ImaginaryUnit(Quaternion);

impl ImaginaryUnit {
    pub const I: ImaginaryUnit = ImaginaryUnit(I);
    pub const J: ImaginaryUnit = ImaginaryUnit(J);
    pub const K: ImaginaryUnit = ImaginaryUnit(K);

    /// Normalizes `(a, b, c)` to a unit; `None` when the vector vanishes.
    pub fn from_vector(a: f64, b: f64, c: f64) -> Option<Self> {
        let n = (a * a + b * b + c * c).sqrt();
        if n == 0.0 || !n.is_finite() {
            return None;
        }
        Some(ImaginaryUnit(Quaternion::new(0.0, a / n, b / n, c / n)))
    }

    pub fn quaternion(self) -> Quaternion {
        self.0
    }
}

impl From<ImaginaryUnit> for Quaternion {
    fn from(u: ImaginaryUnit) -> Self {
        u.0
    }
}

impl Neg for ImaginaryUnit {
    type Output = ImaginaryUnit;
    fn neg(self) -> ImaginaryUnit {
        ImaginaryUnit(-self.0)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w + o.w, self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl AddAssign for Quaternion {
    fn add_assign(&mut self, o: Quaternion) {
        *self = *self + o;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, o: Quaternion) -> Quaternion {
        Quaternion::new(self.w - o.w, self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, o: Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (self.w, self.x, self.y, self.z);
        let (a2, b2, c2, d2) = (o.w, o.x, o.y, o.z);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }
}

impl Mul<Quaternion> for f64 {
    type Output = Quaternion;
    fn mul(self, q: Quaternion) -> Quaternion {
        q * self
    }
}

impl Div<f64> for Quaternion {
    type Output = Quaternion;
    fn div(self, s: f64) -> Quaternion {
        self * (1.0 / s)
    }
}

impl fmt::Display for Quaternion {
    /// Writes `a+bi+cj+dk`, omitting zero terms (zero itself prints as `0`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, suffix) in [(self.w, ""), (self.x, "i"), (self.y, "j"), (self.z, "k")] {
            if c == 0.0 {
                continue;
            }
            if !out.is_empty() && c >= 0.0 {
                out.push('+');
            }
            out.push_str(&c.to_string());
            out.push_str(suffix);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl FromStr for Quaternion {
    type Err = Error;

    /// Parses `a+bi+cj+dk` with optional terms, e.g. `1-2j`, `i+k`, `-0.5`.
    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bytes = text.as_bytes();
        if bytes.is_empty() {
            return Err(Error::Syntax { pos: 0, msg: "empty quaternion".into() });
        }
        let mut q = ZERO;
        let mut pos = 0;
        while pos < bytes.len() {
            let start = pos;
            let mut sign = 1.0;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                if bytes[pos] == b'-' {
                    sign = -1.0;
                }
                pos += 1;
            } else if pos != 0 {
                return Err(Error::Syntax { pos, msg: "expected `+` or `-`".into() });
            }
            let num_start = pos;
            while pos < bytes.len() {
                let c = bytes[pos];
                let exp_sign = (c == b'+' || c == b'-')
                    && pos > num_start
                    && matches!(bytes[pos - 1], b'e' | b'E');
                if c.is_ascii_digit() || c == b'.' || c == b'e' || c == b'E' || exp_sign {
                    pos += 1;
                } else {
                    break;
                }
            }
            let coeff = if pos == num_start {
                1.0
            } else {
                text[num_start..pos].parse::<f64>().map_err(|e| Error::Syntax {
                    pos: num_start,
                    msg: e.to_string(),
                })?
            };
            let basis = match bytes.get(pos) {
                Some(b'i') => 1,
                Some(b'j') => 2,
                Some(b'k') => 3,
                _ => 0,
            };
            if basis != 0 {
                pos += 1;
            } else if pos == num_start {
                return Err(Error::Syntax { pos: start, msg: "empty term".into() });
            }
            q += Quaternion::basis(basis) * (sign * coeff);
        }
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{E, PI};

    fn close(a: Quaternion, b: Quaternion, tol: f64) -> bool {
        a.dist(b) <= tol * (1.0 + b.norm())
    }

    #[test]
    fn hamilton_relations() {
        assert_eq!(I * J, K);
        assert_eq!(J * I, -K);
        assert_eq!(J * K, I);
        assert_eq!(K * I, J);
        assert_eq!(I * I, -ONE);
        // (1+i)(1+j) = 1 + j + i + ij
        assert_eq!((ONE + I) * (ONE + J), Quaternion::new(1.0, 1.0, 1.0, 1.0));
    }

    #[test]
    fn split_examples() {
        let (x, y, u) = Quaternion::new(3.0, 4.0, 0.0, 0.0).split().unwrap();
        assert_eq!((x, y, u), (3.0, 4.0, ImaginaryUnit::I));
        let (x, y, u) = Quaternion::new(1.0, 0.0, -2.0, 0.0).split().unwrap();
        assert_eq!((x, y, u), (1.0, 2.0, -ImaginaryUnit::J));
        assert!(matches!(Quaternion::real(5.0).split(), Err(Error::RealInput(_))));
    }

    #[test]
    fn exp_examples() {
        assert_eq!(exp_q(ZERO), ONE);
        for u in [I, J, K, Quaternion::new(0.0, 0.6, 0.0, 0.8)] {
            assert!(close(exp_q(u * PI), -ONE, 1e-15));
        }
        // frozen from a 200-term partial sum of the power series
        let q = Quaternion::new(1.0, PI / 2.0, 0.0, 0.0);
        let mut term = ONE;
        let mut sum = ONE;
        for n in 1..200 {
            term = term * q * (1.0 / n as f64);
            sum += term;
        }
        assert!(close(sum, I * E, 1e-14));
        assert!(close(exp_q(q), sum, 1e-12));
    }

    #[test]
    fn text_format() {
        let q: Quaternion = "1-2j+0.5k".parse().unwrap();
        assert_eq!(q, Quaternion::new(1.0, 0.0, -2.0, 0.5));
        assert_eq!("i".parse::<Quaternion>().unwrap(), I);
        assert_eq!("-3".parse::<Quaternion>().unwrap(), Quaternion::real(-3.0));
        assert_eq!("1e-3i".parse::<Quaternion>().unwrap(), I * 1e-3);
        assert!("1+".parse::<Quaternion>().is_err());
        assert!("x".parse::<Quaternion>().is_err());
        let q = Quaternion::new(-1.5, 2.0, 0.0, -0.25);
        assert_eq!(q.to_string().parse::<Quaternion>().unwrap(), q);
        assert_eq!(ZERO.to_string(), "0");
    }

    fn quat() -> impl Strategy<Value = Quaternion> {
        (-3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64, -3.0..3.0f64)
            .prop_map(|(a, b, c, d)| Quaternion::new(a, b, c, d))
    }

    proptest! {
        #[test]
        fn product_laws(p in quat(), q in quat(), r in quat()) {
            prop_assert!(close((p * q) * r, p * (q * r), 1e-12));
            prop_assert!(close((p * q).conj(), q.conj() * p.conj(), 1e-12));
            prop_assert!(((p * q).norm() - p.norm() * q.norm()).abs() <= 1e-12 * (1.0 + p.norm() * q.norm()));
            prop_assert!(((p * p.conj()).w - p.norm_sqr()).abs() <= 1e-15 * (1.0 + p.norm_sqr()));
        }

        #[test]
        fn split_reassembles(q in quat()) {
            prop_assume!(q.imag_norm() > 1e-6);
            let (x, y, u) = q.split().unwrap();
            prop_assert!(y > 0.0);
            let uq = u.quaternion();
            prop_assert!((uq * uq + ONE).norm() < 1e-12);
            prop_assert!(close(Quaternion::from_split(x, y, u), q, 1e-14));
        }

        #[test]
        fn exp_on_a_slice_is_complex_exp(re in -3.0..3.0f64, im in -3.0..3.0f64, a in -1.0..1.0f64, b in -1.0..1.0f64, c in 0.1..1.0f64) {
            let u = ImaginaryUnit::from_vector(a, b, c).unwrap();
            let z = Complex64::new(re, im);
            let lhs = exp_q(Quaternion::from_complex(z, u));
            let rhs = Quaternion::from_complex(z.exp(), u);
            prop_assert!(close(lhs, rhs, 1e-12));
        }
    }
}
