//! The `*`-product algebra: scalar and vectorial parts, components over the
//! standard basis, regular conjugate and symmetrizations.

use num_complex::Complex64;

use crate::domain::BasicDomainSpec;
use crate::error::Result;
use crate::expr::SliceExpr;
use crate::quaternion::{ImaginaryUnit, Quaternion};

/// Relative tolerance for "vanishes identically on the grid".
pub const ZERO_TOL: f64 = 1e-10;

/// Imaginary units used when a check must look at several slices.
pub fn test_units() -> Vec<ImaginaryUnit> {
    vec![
        ImaginaryUnit::I,
        ImaginaryUnit::from_vector(0.0, 0.6, -0.8).expect("unit"),
        ImaginaryUnit::from_vector(1.0, 1.0, 1.0).expect("unit"),
    ]
}

/// At most about `max` grid points of the leaf of `d`.
pub fn leaf_samples(d: &BasicDomainSpec, max: usize) -> Vec<Complex64> {
    let grid = d.grid();
    let n = grid.len().max(1);
    let stride = ((n as f64 / max as f64).sqrt().ceil() as usize).max(1);
    grid.sample_points(stride)
}

/// `sup |F(z)|` of the stem over the given leaf points.
pub fn sup_stem(f: &SliceExpr, pts: &[Complex64]) -> Result<f64> {
    let mut m: f64 = 0.0;
    for &z in pts {
        m = m.max(f.eval_stem(z)?.norm());
    }
    Ok(m)
}

/// Whether `f` vanishes on `pts` relative to `reference` (a sup norm).
pub fn vanishes(f: &SliceExpr, pts: &[Complex64], reference: f64) -> Result<bool> {
    Ok(sup_stem(f, pts)? < ZERO_TOL * (1.0 + reference))
}

pub fn star_mul(f: &SliceExpr, g: &SliceExpr) -> SliceExpr {
    f * g
}

/// `f^c = f0 - f_v`; on stems, both components are conjugated.
pub fn reg_conj(f: &SliceExpr) -> SliceExpr {
    f.conj()
}

/// `f^s = f * f^c`.
pub fn symmetrization(f: &SliceExpr) -> SliceExpr {
    f.symm()
}

/// `f_v^s = f1^2 + f2^2 + f3^2`.
pub fn vect_sym(f: &SliceExpr) -> SliceExpr {
    f.vect_part().symm()
}

/// `f = f0 + f1 i + f2 j + f3 k` with slice-preserving `f0, ..., f3`.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitForm {
    pub f0: SliceExpr,
    pub fv: SliceExpr,
    pub f1: SliceExpr,
    pub f2: SliceExpr,
    pub f3: SliceExpr,
}

impl SplitForm {
    pub fn components(&self) -> [&SliceExpr; 3] {
        [&self.f1, &self.f2, &self.f3]
    }

    /// `f0 + f1 i + f2 j + f3 k` rebuilt from the parts.
    pub fn reassemble(&self) -> SliceExpr {
        let basis = |l| SliceExpr::constant(Quaternion::basis(l));
        &self.f0 + &(&(&(&self.f1 * &basis(1)) + &(&self.f2 * &basis(2))) + &(&self.f3 * &basis(3)))
    }

    /// `f0^2 + f1^2 + f2^2 + f3^2`, the symmetrization by sum of squares.
    pub fn sum_of_squares(&self) -> SliceExpr {
        let sq = |e: &SliceExpr| e * e;
        &(&sq(&self.f0) + &sq(&self.f1)) + &(&sq(&self.f2) + &sq(&self.f3))
    }
}

pub fn split_form(f: &SliceExpr) -> SplitForm {
    SplitForm {
        f0: f.scalar_part(),
        fv: f.vect_part(),
        f1: f.component(1),
        f2: f.component(2),
        f3: f.component(3),
    }
}

/// Largest imaginary part of the stem over `pts`, relative to `1 + sup |F|`.
pub fn imaginary_defect(f: &SliceExpr, pts: &[Complex64]) -> Result<f64> {
    let (mut imag, mut size): (f64, f64) = (0.0, 0.0);
    for &z in pts {
        let s = f.eval_stem(z)?;
        imag = imag.max(s.imag_size());
        size = size.max(s.norm());
    }
    Ok(imag / (1.0 + size))
}

/// Structural flag, confirmed numerically on a sample of the leaf grid.
/// When the two disagree the structural answer is returned and the
/// discrepancy logged.
pub fn is_slice_preserving(f: &SliceExpr, d: &BasicDomainSpec) -> bool {
    let structural = f.sp();
    match imaginary_defect(f, &leaf_samples(d, 400)) {
        Ok(defect) => {
            let numeric = defect <= 1e-10;
            if numeric != structural {
                log::warn!("slice-preserving check for `{f}`: structural {structural}, numeric {numeric} (defect {defect:e})");
            }
        }
        Err(e) => log::warn!("slice-preserving check for `{f}` could not sample: {e}"),
    }
    structural
}
