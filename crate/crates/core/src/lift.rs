//! Grid-backed lifts through covering maps.
//!
//! A lift is a continuous choice of solution `v(z)` of an equation with
//! discretely many solutions (`exp v = h`, `v^2 = h`, `(cos v, sin v) =
//! (u, w)`, `mu(v) = h`). We continue it over the leaf grid from a base value,
//! breadth first, subdividing any edge whose step is too large. Evaluation
//! between nodes interpolates to pick the sheet and then solves exactly on
//! that sheet, so stored values only decide branches and never limit accuracy.

use std::collections::VecDeque;
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::domain::{BasicDomainSpec, DomainKind, Grid};
use crate::error::{Error, Result};
use crate::expr::SliceExpr;
use crate::special;

/// Deepest edge subdivision (2^10 substeps) before giving up.
pub const MAX_REFINEMENT: u32 = 10;
/// Largest admissible change of the lifted value along one step.
pub const MAX_STEP: f64 = PI / 4.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LiftKind {
    /// `exp v = h`.
    Log,
    /// `v^2 = h`.
    Sqrt,
    /// `(cos v, sin v) = (u, w)`.
    Angle,
    /// `mu(v) = h`.
    MuInv,
}

/// Serializable summary of a lifted field.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LiftMeta {
    pub kind: LiftKind,
    pub base_point: [f64; 2],
    pub base_value: [f64; 2],
    pub nodes: usize,
    pub nx: usize,
    pub ny: usize,
    pub step: [f64; 2],
    pub refinement: u32,
    pub max_step: f64,
}

#[derive(Debug)]
pub struct LiftedScalarField {
    kind: LiftKind,
    targets: Vec<SliceExpr>,
    domain: BasicDomainSpec,
    grid: Grid,
    values: Vec<Complex64>,
    base_point: Complex64,
    base_value: Complex64,
    refinement: u32,
    max_step: f64,
}

fn nan() -> Complex64 {
    Complex64::new(f64::NAN, f64::NAN)
}

impl LiftedScalarField {
    /// Continues a solution from `(base_point, base_value)` over the leaf of
    /// `domain`. `targets` holds `[h]`, or `[u, w]` for [`LiftKind::Angle`].
    pub fn build(
        kind: LiftKind,
        targets: Vec<SliceExpr>,
        domain: &BasicDomainSpec,
        base_point: Complex64,
        base_value: Complex64,
    ) -> Result<Self> {
        let need = if kind == LiftKind::Angle { 2 } else { 1 };
        assert_eq!(targets.len(), need, "wrong number of lift targets");
        if !domain.contains(base_point) {
            return Err(Error::OutsideDomain(format!("{base_point}")));
        }
        let grid = domain.grid();
        let mut field = LiftedScalarField {
            kind,
            targets,
            domain: domain.clone(),
            values: vec![nan(); grid.nx * grid.ny],
            grid,
            base_point,
            base_value,
            refinement: 0,
            max_step: 0.0,
        };
        let (v0, _) = field.solve(base_point, base_value)?;
        field.base_value = v0;
        field.continue_over_grid()?;
        if domain.kind == DomainKind::Slice {
            field.check_reflection()?;
        }
        log::debug!(
            "{:?} lift: {} nodes, refinement {}, max step {:.3e}",
            kind,
            field.grid.len(),
            field.refinement,
            field.max_step
        );
        Ok(field)
    }

    pub fn kind(&self) -> LiftKind {
        self.kind
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            LiftKind::Log => "log",
            LiftKind::Sqrt => "sqrt",
            LiftKind::Angle => "angle",
            LiftKind::MuInv => "muinv",
        }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn domain(&self) -> &BasicDomainSpec {
        &self.domain
    }

    pub fn meta(&self) -> LiftMeta {
        LiftMeta {
            kind: self.kind,
            base_point: [self.base_point.re, self.base_point.im],
            base_value: [self.base_value.re, self.base_value.im],
            nodes: self.grid.len(),
            nx: self.grid.nx,
            ny: self.grid.ny,
            step: [self.grid.hx, self.grid.hy],
            refinement: self.refinement,
            max_step: self.max_step,
        }
    }

    /// `(z, value)` at every grid node inside the region.
    pub fn samples(&self) -> Vec<(Complex64, Complex64)> {
        self.grid.nodes().map(|(i, j, z)| (z, self.values[self.grid.index(i, j)])).collect()
    }

    /// Value at a leaf point (`Im z >= 0`) inside the region.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if !self.domain.contains(z) {
            return Err(Error::OutsideDomain(format!("{z} (lifted field)")));
        }
        let guess = self.interpolate(z)?;
        Ok(self.solve(z, guess)?.0)
    }

    /// Exact solution nearest to `guess`, and the distance to the next one.
    fn solve(&self, z: Complex64, guess: Complex64) -> Result<(Complex64, f64)> {
        let h = self.targets[0].eval_complex(z)?;
        match self.kind {
            LiftKind::Log => {
                if h == Complex64::new(0.0, 0.0) {
                    return Err(Error::Vanishing(0.0));
                }
                let l = h.ln();
                let k = ((guess - l).im / (2.0 * PI)).round();
                Ok((l + Complex64::new(0.0, 2.0 * PI * k), 2.0 * PI))
            }
            LiftKind::Sqrt => {
                let s = h.sqrt();
                let v = if (s - guess).norm() <= (s + guess).norm() { s } else { -s };
                Ok((v, 2.0 * s.norm()))
            }
            LiftKind::Angle => {
                let w = self.targets[1].eval_complex(z)?;
                let e = h + Complex64::i() * w;
                if e.norm() == 0.0 {
                    return Err(Error::LiftStep(format!("degenerate angle target at {z}")));
                }
                let phi = -Complex64::i() * e.ln();
                let k = ((guess - phi).re / (2.0 * PI)).round();
                Ok((phi + 2.0 * PI * k, 2.0 * PI))
            }
            LiftKind::MuInv => mu_inv_nearest(h, guess),
        }
    }

    fn continue_over_grid(&mut self) -> Result<()> {
        let grid = self.grid.clone();
        let (bi, bj) = grid
            .nearest(self.base_point)
            .ok_or_else(|| Error::OutsideDomain("empty lift grid".into()))?;
        let start = grid.point(bi, bj);
        let v = self.continue_segment(self.base_point, start, self.base_value)?;
        self.values[grid.index(bi, bj)] = v;
        let mut queue = VecDeque::from([(bi, bj)]);
        let mut done = vec![false; grid.nx * grid.ny];
        done[grid.index(bi, bj)] = true;
        while let Some((i, j)) = queue.pop_front() {
            let vp = self.values[grid.index(i, j)];
            for (a, b) in neighbours(i, j) {
                if !grid.valid(a, b) {
                    continue;
                }
                let n = grid.index(a, b);
                if done[n] {
                    // consistency across a non-tree edge
                    let vn = self.values[n];
                    let (_, gap) = self.solve(grid.point(a, b), vn)?;
                    if (vn - vp).norm() >= MAX_STEP.min(gap / 4.0) {
                        let w = self.continue_segment(grid.point(i, j), grid.point(a, b), vp)?;
                        if (w - vn).norm() > 1e-8 * (1.0 + vn.norm()) {
                            return Err(Error::LiftStep(format!(
                                "lift is not single valued near {} (monodromy {})",
                                grid.point(a, b),
                                w - vn
                            )));
                        }
                    }
                    continue;
                }
                let v = self.continue_segment(grid.point(i, j), grid.point(a, b), vp)?;
                self.values[n] = v;
                done[n] = true;
                queue.push_back((a, b));
            }
        }
        Ok(())
    }

    /// Continues along the segment `za -> zb`, halving steps until every
    /// step is safe.
    fn continue_segment(&mut self, za: Complex64, zb: Complex64, va: Complex64) -> Result<Complex64> {
        let mut last_err = None;
        for level in 0..=MAX_REFINEMENT {
            let steps = 1usize << level;
            let mut v = va;
            let mut biggest: f64 = 0.0;
            let mut ok = true;
            for s in 1..=steps {
                let z = za + (zb - za) * (s as f64 / steps as f64);
                match self.solve(z, v) {
                    Ok((vn, gap)) if (vn - v).norm() < MAX_STEP.min(gap / 4.0) => {
                        biggest = biggest.max((vn - v).norm());
                        v = vn;
                    }
                    Ok(_) => {
                        ok = false;
                        break;
                    }
                    Err(e) => {
                        last_err = Some(e);
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.refinement = self.refinement.max(level);
                self.max_step = self.max_step.max(biggest);
                return Ok(v);
            }
        }
        let why = last_err.map(|e| format!(": {e}")).unwrap_or_default();
        Err(Error::LiftStep(format!(
            "no safe step from {za} to {zb} at refinement level {MAX_REFINEMENT}{why}"
        )))
    }

    fn check_reflection(&self) -> Result<()> {
        for (i, j, z) in self.grid.nodes() {
            if z.im != 0.0 {
                continue;
            }
            let v = self.values[self.grid.index(i, j)];
            if v.im.abs() > 1e-9 * (1.0 + v.norm()) {
                return Err(Error::LiftStep(format!(
                    "lift is not real on the real axis at x = {} (value {v})",
                    z.re
                )));
            }
        }
        Ok(())
    }

    /// Catmull-Rom interpolation where the full stencil is available,
    /// bilinear or nearest-node otherwise.
    fn interpolate(&self, z: Complex64) -> Result<Complex64> {
        let g = &self.grid;
        let fi = ((z.re - g.x0) / g.hx).clamp(0.0, (g.nx - 1) as f64);
        let fj = ((z.im - g.y0) / g.hy).clamp(0.0, (g.ny - 1) as f64);
        let i0 = (fi.floor() as usize).min(g.nx - 2);
        let j0 = (fj.floor() as usize).min(g.ny - 2);
        let (t, u) = (fi - i0 as f64, fj - j0 as f64);
        let at = |i: i64, j: i64| -> Option<Complex64> {
            if i < 0 || j < 0 {
                return None;
            }
            let (i, j) = (i as usize, j as usize);
            g.valid(i, j).then(|| self.values[g.index(i, j)])
        };
        let (i0, j0) = (i0 as i64, j0 as i64);
        let mut cubic = Complex64::new(0.0, 0.0);
        let mut full = true;
        'outer: for (dj, wj) in catmull_rom(u).iter().enumerate() {
            for (di, wi) in catmull_rom(t).iter().enumerate() {
                match at(i0 - 1 + di as i64, j0 - 1 + dj as i64) {
                    Some(v) => cubic += v * (wi * wj),
                    None => {
                        full = false;
                        break 'outer;
                    }
                }
            }
        }
        if full {
            return Ok(cubic);
        }
        if let (Some(a), Some(b), Some(c), Some(d)) = (at(i0, j0), at(i0 + 1, j0), at(i0, j0 + 1), at(i0 + 1, j0 + 1)) {
            return Ok(a * ((1.0 - t) * (1.0 - u)) + b * (t * (1.0 - u)) + c * ((1.0 - t) * u) + d * (t * u));
        }
        let (ni, nj) = g.nearest(z).ok_or_else(|| Error::OutsideDomain(format!("{z}")))?;
        let p = g.point(ni, nj);
        if ((p.re - z.re) / g.hx).abs() > 2.0 || ((p.im - z.im) / g.hy).abs() > 2.0 {
            return Err(Error::OutsideDomain(format!("{z} (no nearby lift node)")));
        }
        Ok(self.values[g.index(ni, nj)])
    }
}

fn neighbours(i: usize, j: usize) -> [(usize, usize); 4] {
    [(i.wrapping_sub(1), j), (i + 1, j), (i, j.wrapping_sub(1)), (i, j + 1)]
}

fn catmull_rom(t: f64) -> [f64; 4] {
    let (t2, t3) = (t * t, t * t * t);
    [
        0.5 * (-t3 + 2.0 * t2 - t),
        0.5 * (3.0 * t3 - 5.0 * t2 + 2.0),
        0.5 * (-3.0 * t3 + 4.0 * t2 + t),
        0.5 * (t3 - t2),
    ]
}

/// Solutions of `mu(G) = w` are `G = (±a + 2πk)^2` with `a = acos w`; picks
/// the one nearest `guess` and polishes it with Newton.
fn mu_inv_nearest(w: Complex64, guess: Complex64) -> Result<(Complex64, f64)> {
    let a = w.acos();
    let r = guess.sqrt();
    let mut cands: Vec<Complex64> = Vec::with_capacity(16);
    for sigma in [1.0, -1.0] {
        for t in [r, -r] {
            let k = ((t - a * sigma).re / (2.0 * PI)).round();
            for dk in -1..=1 {
                let phi = a * sigma + 2.0 * PI * (k + dk as f64);
                cands.push(phi * phi);
            }
        }
    }
    let best = *cands
        .iter()
        .min_by(|x, y| (*x - guess).norm().total_cmp(&(*y - guess).norm()))
        .expect("candidates");
    let gap = cands
        .iter()
        .map(|c| (c - best).norm())
        .filter(|d| *d > 1e-12 * (1.0 + best.norm()))
        .fold(f64::INFINITY, f64::min);
    let mut g = best;
    special::newton_mu(&mut g, w);
    Ok((g, gap))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn log_of_identity_on_product_leaf() {
        // around the origin: the argument keeps increasing
        let d = BasicDomainSpec::new(
            vec![crate::domain::Rect::new(-2.0, 2.0, 0.5, 2.0)],
            DomainKind::Product,
        );
        let f = LiftedScalarField::build(LiftKind::Log, vec![SliceExpr::var()], &d, c(1.0, 1.0), c(0.0, 0.0)).unwrap();
        for z in [c(-1.9, 0.6), c(0.0, 1.7), c(1.3, 0.55)] {
            let v = f.eval(z).unwrap();
            assert!((v - z.ln()).norm() < 1e-13, "{z} {v}");
        }
    }

    #[test]
    fn sqrt_follows_sign() {
        let d = BasicDomainSpec::rectangle(-1.0, 1.0, 0.0, 1.0, DomainKind::Slice);
        let h = SliceExpr::var() + 3.0;
        let f = LiftedScalarField::build(LiftKind::Sqrt, vec![h], &d, c(0.0, 0.0), c(3f64.sqrt(), 0.0)).unwrap();
        let z = c(0.4, 0.8);
        assert!((f.eval(z).unwrap() - (z + 3.0).sqrt()).norm() < 1e-14);
    }

    #[test]
    fn mu_inv_lift_from_zero() {
        let d = BasicDomainSpec::rectangle(-0.5, 0.5, 0.2, 1.0, DomainKind::Product);
        let q = SliceExpr::var();
        // mu(G) = cos(q) has the lift G = q^2
        let target = q.clone().star(crate::expr::StarFn::Cos);
        let f = LiftedScalarField::build(LiftKind::MuInv, vec![target], &d, c(0.0, 0.5), c(0.0, 0.5).powi(2)).unwrap();
        for z in [c(-0.4, 0.9), c(0.3, 0.3)] {
            assert!((f.eval(z).unwrap() - z * z).norm() < 1e-11);
        }
    }

    #[test]
    fn outside_is_refused() {
        let d = BasicDomainSpec::rectangle(-1.0, 1.0, 0.0, 1.0, DomainKind::Slice);
        let f = LiftedScalarField::build(LiftKind::Log, vec![SliceExpr::real(2.0)], &d, c(0.0, 0.0), c(0.7, 0.0)).unwrap();
        assert!(matches!(f.eval(c(3.0, 0.5)), Err(Error::OutsideDomain(_))));
    }
}
