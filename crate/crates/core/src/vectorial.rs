//! Vectorial classes on a basic domain: zeros of `g_v^s`, their kinds,
//! factoring out real and spherical zeros, minimal and normalized
//! representatives, and the linear-dependence test.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::domain::{BasicDomainSpec, DomainKind, Rect};
use crate::error::{Error, Result};
use crate::expr::SliceExpr;
use crate::lift::{LiftKind, LiftedScalarField};
use crate::quaternion::{ImaginaryUnit, Quaternion};
use crate::star::{leaf_samples, sup_stem, vect_sym, ZERO_TOL};

/// Highest zero multiplicity we accept.
pub const MULTIPLICITY_CAP: u32 = 8;
/// Points on a sphere `x + S y` probed for spherical zeros.
const SPHERE_PROBES: usize = 16;
/// Relative threshold for a vanishing probe.
const SPHERE_TOL: f64 = 1e-8;
/// Relative threshold for the minors of the linear-dependence test.
const DEPENDENCE_TOL: f64 = 1e-9;

/// A zero of a slice-preserving function on the leaf (`Im z >= 0`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpZero {
    pub z: Complex64,
    pub multiplicity: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroKind {
    IsolatedNonreal,
    Spherical,
    Real,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    ZeroClass,
    NullSymmetrization,
    NoZeros,
    DiscreteZeros,
}

/// A zero of `g_v^s` together with what it means for `g_v`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VectorialZero {
    /// Location on the leaf.
    #[serde(serialize_with = "ser_complex")]
    pub z: Complex64,
    /// Multiplicity as a zero of `g_v^s`.
    pub multiplicity: u32,
    pub kind: ZeroKind,
    /// Order of the common zero of the components (the power factored out).
    pub factor_order: u32,
    /// For isolated zeros: the single point of the sphere where `g_v` vanishes.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<Quaternion>,
}

fn ser_complex<S: serde::Serializer>(z: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [z.re, z.im].serialize(s)
}

fn ser_expr<S: serde::Serializer>(e: &SliceExpr, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&e.to_string())
}

fn ser_opt_expr<S: serde::Serializer>(e: &Option<SliceExpr>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match e {
        Some(e) => s.serialize_str(&e.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VectorialClassReport {
    pub kind: ClassKind,
    pub zeros: Vec<VectorialZero>,
    /// `lambda` with `g_v = lambda * minimal_rep`.
    #[serde(rename = "factored_scalar", serialize_with = "ser_expr")]
    pub lambda: SliceExpr,
    #[serde(rename = "minimal_rep", serialize_with = "ser_expr")]
    pub minimal: SliceExpr,
    #[serde(rename = "normalized_rep", serialize_with = "ser_opt_expr")]
    pub normalized: Option<SliceExpr>,
    /// The square root of `minimal^s` used for `normalized`.
    #[serde(skip)]
    pub minimal_root: Option<SliceExpr>,
}

impl VectorialClassReport {
    pub fn isolated_zeros(&self) -> impl Iterator<Item = &VectorialZero> {
        self.zeros.iter().filter(|z| z.kind == ZeroKind::IsolatedNonreal)
    }
}

/// Evaluates `h` on the whole slice (reflection below the axis).
struct ZeroFinder<'a> {
    h: &'a SliceExpr,
    scale: f64,
    diam: f64,
}

impl ZeroFinder<'_> {
    fn eval(&self, z: Complex64) -> Result<Complex64> {
        self.h.eval_complex(z)
    }

    /// Argument change along `a -> b`; `None` if `h` (nearly) vanishes on it.
    /// A piece is accepted only when the midpoint agrees with both ends in
    /// argument and modulus, which rules out a hidden turn around a zero.
    fn edge_arg(&self, a: Complex64, b: Complex64, ha: Complex64, hb: Complex64, depth: u32) -> Result<Option<f64>> {
        let m = (a + b) * 0.5;
        let hm = self.eval(m)?;
        if hm.norm() == 0.0 {
            return Ok(None);
        }
        let (d1, d2) = ((hm / ha).arg(), (hb / hm).arg());
        let small = ha.norm().min(hb.norm());
        let smooth = d1.abs() < PI / 4.0
            && d2.abs() < PI / 4.0
            && (hb - ha).norm() < 0.5 * small
            && (hm - (ha + hb) * 0.5).norm() < 0.25 * small;
        if smooth {
            return Ok(Some(d1 + d2));
        }
        if depth >= 45 {
            return Ok(None);
        }
        let Some(left) = self.edge_arg(a, m, ha, hm, depth + 1)? else { return Ok(None) };
        let Some(right) = self.edge_arg(m, b, hm, hb, depth + 1)? else { return Ok(None) };
        Ok(Some(left + right))
    }

    /// Winding number of `h` around the boundary of `r`.
    fn winding(&self, r: &Rect) -> Result<Option<i64>> {
        let corners = [
            Complex64::new(r.x0, r.y0),
            Complex64::new(r.x1, r.y0),
            Complex64::new(r.x1, r.y1),
            Complex64::new(r.x0, r.y1),
        ];
        let mut total = 0.0;
        for e in 0..4 {
            let (a, b) = (corners[e], corners[(e + 1) % 4]);
            const PIECES: usize = 32;
            let mut prev = a;
            let mut hp = self.eval(a)?;
            if hp.norm() == 0.0 {
                return Ok(None);
            }
            for s in 1..=PIECES {
                let z = a + (b - a) * (s as f64 / PIECES as f64);
                let hz = self.eval(z)?;
                if hz.norm() == 0.0 {
                    return Ok(None);
                }
                match self.edge_arg(prev, z, hp, hz, 0)? {
                    Some(d) => total += d,
                    None => return Ok(None),
                }
                prev = z;
                hp = hz;
            }
        }
        Ok(Some((total / (2.0 * PI)).round() as i64))
    }

    fn search(&self, r: Rect, n: i64, out: &mut Vec<SpZero>) -> Result<()> {
        if n == 0 {
            return Ok(());
        }
        if n < 0 {
            return Err(Error::LiftStep(format!("negative winding number {n} in zero search")));
        }
        let size = r.width().max(r.height());
        let center = Complex64::new(0.5 * (r.x0 + r.x1), 0.5 * (r.y0 + r.y1));
        if n == 1 && size < 0.05 * self.diam {
            if let Some(z) = self.newton(center, &r) {
                out.push(SpZero { z, multiplicity: 1 });
                return Ok(());
            }
        }
        if n >= 2 && size < 1e-3 * self.diam {
            let radius = 0.5 * r.width().hypot(r.height());
            if let Some(z) = self.cluster_mean(center, radius.max(1e-9), n)? {
                let res = self.eval(z)?.norm();
                if res <= 1e-10 * self.scale || size < 1e-7 * self.diam {
                    if n as u32 > MULTIPLICITY_CAP {
                        return Err(Error::MultiplicityCap(format!("{z} (multiplicity {n})")));
                    }
                    out.push(SpZero { z, multiplicity: n as u32 });
                    return Ok(());
                }
            }
        }
        if size < 1e-9 * self.diam {
            return Err(Error::NoConvergence(0));
        }
        for t in [0.5, 0.5173, 0.4791, 0.5419, 0.4531] {
            let (a, b) = if r.width() >= r.height() {
                let xm = r.x0 + t * r.width();
                (Rect::new(r.x0, xm, r.y0, r.y1), Rect::new(xm, r.x1, r.y0, r.y1))
            } else {
                let ym = r.y0 + t * r.height();
                (Rect::new(r.x0, r.x1, r.y0, ym), Rect::new(r.x0, r.x1, ym, r.y1))
            };
            if let (Some(na), Some(nb)) = (self.winding(&a)?, self.winding(&b)?) {
                if na + nb == n {
                    self.search(a, na, out)?;
                    return self.search(b, nb, out);
                }
            }
        }
        Err(Error::BoundaryZero(format!("{center} (zero on every trial split line)")))
    }

    /// Newton with a central-difference derivative; `None` if it leaves `r`.
    fn newton(&self, start: Complex64, r: &Rect) -> Option<Complex64> {
        let mut z = start;
        let pad = 0.1 * r.width().max(r.height());
        for _ in 0..60 {
            let hz = self.eval(z).ok()?;
            let delta = 1e-6 * (1.0 + z.norm());
            let dp = self.eval(z + delta).ok()?;
            let dm = self.eval(z - delta).ok()?;
            let d = (dp - dm) / (2.0 * delta);
            if d.norm() == 0.0 {
                return None;
            }
            let step = hz / d;
            z -= step;
            if z.re < r.x0 - pad || z.re > r.x1 + pad || z.im < r.y0 - pad || z.im > r.y1 + pad {
                return None;
            }
            if step.norm() <= 1e-15 * (1.0 + z.norm()) {
                break;
            }
        }
        let res = self.eval(z).ok()?.norm();
        if res > 1e-11 * self.scale {
            log::warn!("zero at {z} polished to residual {res:e} only");
        }
        Some(z)
    }

    /// Mean of the `n` zeros inside the circle `|z - c| = r`, from the
    /// periodic part of `log h`.
    fn cluster_mean(&self, c: Complex64, r: f64, n: i64) -> Result<Option<Complex64>> {
        const NODES: usize = 256;
        let mut center = c;
        for _ in 0..2 {
            let mut integral = Complex64::new(0.0, 0.0);
            let mut prev: Option<Complex64> = None;
            let mut log_h = Complex64::new(0.0, 0.0);
            let mut vals = Vec::with_capacity(NODES);
            for k in 0..=NODES {
                let theta = 2.0 * PI * k as f64 / NODES as f64;
                let e = Complex64::from_polar(1.0, theta);
                let hz = self.eval(center + e * r)?;
                if hz.norm() == 0.0 {
                    return Ok(None);
                }
                log_h = match prev {
                    None => hz.ln(),
                    Some(hp) => log_h + (hz / hp).ln(),
                };
                prev = Some(hz);
                vals.push((e, log_h, theta));
            }
            let wind = ((vals[NODES].1.im - vals[0].1.im) / (2.0 * PI)).round() as i64;
            if wind != n {
                return Ok(None);
            }
            for &(e, lh, theta) in &vals[..NODES] {
                let phi = lh - (n as f64) * Complex64::new(r.ln(), theta);
                integral += phi * Complex64::i() * e * r * (2.0 * PI / NODES as f64);
            }
            center += -integral / (Complex64::new(0.0, 2.0 * PI) * n as f64);
        }
        Ok(Some(center))
    }
}

/// Search rectangles for the zeros of a slice-preserving function: the
/// mirrored slice section for slice domains, the leaf for product domains.
fn search_rects(d: &BasicDomainSpec) -> Vec<Rect> {
    d.slice_rects()
}

/// Zeros of a slice-preserving, not identically vanishing `h` in the leaf
/// region of `d`, by rectangle subdivision with winding numbers.
pub fn find_zeros_sp(h: &SliceExpr, d: &BasicDomainSpec) -> Result<Vec<SpZero>> {
    if !h.sp() {
        return Err(Error::SlicePreservingRequired("find_zeros_sp".into()));
    }
    let pts = leaf_samples(d, 2000);
    let scale = 1.0 + sup_stem(h, &pts)?;
    let finder = ZeroFinder { h, scale, diam: d.diameter() };
    let mut found = Vec::new();
    for r in search_rects(d) {
        let n = finder
            .winding(&r)?
            .ok_or_else(|| Error::BoundaryZero(format!("rectangle {:?}", <[f64; 4]>::from(r))))?;
        finder.search(r, n, &mut found)?;
    }
    let snap = 1e-9 * (1.0 + d.diameter());
    let mut zeros: Vec<SpZero> = Vec::new();
    for mut z in found {
        if d.kind == DomainKind::Slice && z.z.im.abs() < snap {
            z.z.im = 0.0;
        }
        if z.z.im < 0.0 {
            continue;
        }
        if zeros.iter().any(|y| (y.z - z.z).norm() < 1e-7 * (1.0 + d.diameter())) {
            continue;
        }
        zeros.push(z);
    }
    zeros.sort_by(|a, b| a.z.re.total_cmp(&b.z.re).then(a.z.im.total_cmp(&b.z.im)));
    Ok(zeros)
}

/// Roughly uniform points of the unit sphere of imaginary units.
fn sphere_units(n: usize) -> Vec<ImaginaryUnit> {
    let golden = PI * (3.0 - 5f64.sqrt());
    (0..n)
        .map(|k| {
            let zc = 1.0 - 2.0 * (k as f64 + 0.5) / n as f64;
            let rho = (1.0 - zc * zc).sqrt();
            let t = golden * k as f64;
            ImaginaryUnit::from_vector(rho * t.cos(), rho * t.sin(), zc).expect("unit")
        })
        .collect()
}

/// Order of vanishing of a slice-preserving `f` at `z0` (winding on a small
/// circle); `None` when `f` vanishes identically there.
fn order_at(f: &SliceExpr, z0: Complex64, rho: f64, scale: f64) -> Result<Option<u32>> {
    const NODES: usize = 64;
    let mut vals = Vec::with_capacity(NODES + 1);
    for k in 0..=NODES {
        let e = Complex64::from_polar(rho, 2.0 * PI * k as f64 / NODES as f64);
        vals.push(f.eval_complex(z0 + e)?);
    }
    if vals.iter().all(|v| v.norm() < 1e-13 * scale) {
        return Ok(None);
    }
    let mut total = 0.0;
    for w in vals.windows(2) {
        total += (w[1] / w[0]).arg();
    }
    Ok(Some((total / (2.0 * PI)).round().max(0.0) as u32))
}

/// The point `x + J y` of the sphere where `A + J B = 0`, if `B != 0`.
fn isolated_point(g_v: &SliceExpr, z: Complex64) -> Result<Option<Quaternion>> {
    let s = g_v.eval_stem(z)?;
    let Some(binv) = s.b.inv() else { return Ok(None) };
    let j = -(s.a * binv);
    let Some(unit) = ImaginaryUnit::from_vector(j.x, j.y, j.z) else { return Ok(None) };
    Ok(Some(Quaternion::from_split(z.re, z.im, unit)))
}

/// Classifies each zero of `g_v^s` and computes the common order of the
/// components of `g_v` there.
fn classify_zeros(g_v: &SliceExpr, zeros: &[SpZero], d: &BasicDomainSpec) -> Result<Vec<VectorialZero>> {
    let pts = leaf_samples(d, 2000);
    let scale = 1.0 + sup_stem(g_v, &pts)?;
    let comps = [g_v.component(1), g_v.component(2), g_v.component(3)];
    let rho = 1e-3 * (1.0 + d.diameter());
    let mut out = Vec::new();
    for zero in zeros {
        let z = zero.z;
        let mut k = u32::MAX;
        for c in &comps {
            if let Some(o) = order_at(c, z, rho, scale)? {
                k = k.min(o);
            }
        }
        if k == u32::MAX {
            k = 0;
        }
        if z.im == 0.0 {
            out.push(VectorialZero { z, multiplicity: zero.multiplicity, kind: ZeroKind::Real, factor_order: k, point: None });
            continue;
        }
        let point = isolated_point(g_v, z)?;
        let mut probes: Vec<Quaternion> =
            sphere_units(SPHERE_PROBES).into_iter().map(|u| Quaternion::from_split(z.re, z.im, u)).collect();
        probes.extend(point);
        let mut vanishing = 0;
        for p in &probes {
            if g_v.eval(*p)?.norm() < SPHERE_TOL * scale {
                vanishing += 1;
            }
        }
        let spherical = vanishing >= 2;
        let residual = zero.multiplicity.saturating_sub(2 * k);
        let kind = if residual > 0 || !spherical { ZeroKind::IsolatedNonreal } else { ZeroKind::Spherical };
        let k = if spherical { k } else { 0 };
        let point = if kind == ZeroKind::IsolatedNonreal && !spherical { point } else { None };
        out.push(VectorialZero { z, multiplicity: zero.multiplicity, kind, factor_order: k, point });
    }
    Ok(out)
}

/// `g_v = lambda * w_min` where `lambda` collects the real and spherical zeros.
pub fn factor_minimal(g_v: &SliceExpr, zeros: &[VectorialZero], d: &BasicDomainSpec) -> Result<(SliceExpr, SliceExpr)> {
    let q = SliceExpr::var();
    let mut lambda: Option<SliceExpr> = None;
    let mut centers = Vec::new();
    for z in zeros.iter().filter(|z| z.factor_order > 0) {
        let re = if z.z.re.abs() <= 1e-12 * (1.0 + z.z.norm()) { 0.0 } else { z.z.re };
        let factor = match z.kind {
            ZeroKind::Real if re == 0.0 => q.clone(),
            ZeroKind::Real => q.clone() - re,
            _ if re == 0.0 => q.pow(2) + z.z.im * z.z.im,
            _ => q.pow(2) - 2.0 * re * q.clone() + (re * re + z.z.im * z.z.im),
        };
        let factor = if z.factor_order == 1 { factor } else { factor.pow(z.factor_order) };
        lambda = Some(match lambda {
            None => factor,
            Some(l) => l * factor,
        });
        centers.push(z.z);
    }
    let Some(lambda) = lambda else {
        return Ok((SliceExpr::real(1.0), g_v.clone()));
    };
    let h = d.step();
    let mut patches = Vec::new();
    for (n, &c) in centers.iter().enumerate() {
        let mut r = 4.0 * h;
        for (m, &o) in centers.iter().enumerate() {
            if m != n {
                r = r.min(0.45 * (o - c).norm()).min(0.45 * (o.conj() - c).norm());
            }
        }
        if c.im > 0.0 {
            r = r.min(0.9 * c.im);
        }
        patches.push((c, r));
    }
    let w = g_v.divide_patched(&lambda, patches)?;
    let pts = leaf_samples(d, 2000);
    let scale = 1.0 + sup_stem(g_v, &pts)?;
    let back = &(&lambda * &w) - g_v;
    let res = sup_stem(&back, &pts)?;
    if !res.is_finite() || res > ZERO_TOL * scale {
        return Err(Error::FactorResidual(format!("|lambda w - g_v| = {res:e}")));
    }
    for &c in &centers {
        let v = w.eval_stem(c)?.norm();
        if !v.is_finite() || v > 1e8 * scale {
            return Err(Error::FactorResidual(format!("spike {v:e} at {c}")));
        }
        if v < SPHERE_TOL * scale {
            return Err(Error::FactorResidual(format!("common zero left at {c}")));
        }
    }
    Ok((lambda, w))
}

/// A point of the leaf region to start lifts from: a real point for slice
/// domains, else the grid node nearest the middle of the bounding box.
pub fn base_point(d: &BasicDomainSpec) -> Complex64 {
    let grid = d.grid();
    let b = d.bbox();
    let mid = Complex64::new(0.5 * (b.x0 + b.x1), 0.5 * (b.y0 + b.y1));
    let pick = |real_only: bool| {
        grid.nodes()
            .filter(|(_, _, z)| !real_only || z.im == 0.0)
            .min_by(|a, b| (a.2 - mid).norm().total_cmp(&(b.2 - mid).norm()))
            .map(|(_, _, z)| z)
    };
    let real = d.kind == DomainKind::Slice;
    pick(real).or_else(|| pick(false)).unwrap_or(mid)
}

/// A square root of the slice-preserving `h` on `d`, positive on the real
/// axis for slice domains. Constants get a constant root.
pub fn sqrt_sp(h: &SliceExpr, d: &BasicDomainSpec) -> Result<SliceExpr> {
    if let Some(c) = h.as_const() {
        if c.w >= 0.0 {
            return Ok(SliceExpr::real(c.w.sqrt()));
        }
        if d.kind == DomainKind::Product {
            return Ok((-c.w).sqrt() * SliceExpr::unit());
        }
        return Err(Error::BranchDomainViolation { branch: "sqrt".into(), value: format!("{}", c.w) });
    }
    let z0 = base_point(d);
    let v0 = h.eval_complex(z0)?;
    let s0 = if d.kind == DomainKind::Slice {
        crate::special::sqrt_principal(v0)?
    } else {
        v0.sqrt()
    };
    let field = LiftedScalarField::build(LiftKind::Sqrt, vec![h.clone()], d, z0, s0)?;
    Ok(SliceExpr::field(std::sync::Arc::new(field)))
}

/// `w = w_min / sqrt(w_min^s)`; fails if the square root cannot be built.
pub fn normalize(w_min: &SliceExpr, d: &BasicDomainSpec) -> Result<(SliceExpr, SliceExpr)> {
    let ws = vect_sym(w_min);
    if let Some(c) = w_min.as_const() {
        let n = c.imag_norm();
        if n == 0.0 {
            return Err(Error::BranchDomainViolation { branch: "sqrt".into(), value: "0".into() });
        }
        let root = SliceExpr::real(n);
        return Ok((SliceExpr::constant(c.imag() / n), root));
    }
    let root = sqrt_sp(&ws, d).map_err(|e| match e {
        Error::LiftStep(m) => Error::BranchDomainViolation { branch: "sqrt".into(), value: m },
        Error::Vanishing(v) => Error::BranchDomainViolation { branch: "sqrt".into(), value: format!("{v:e}") },
        other => other,
    })?;
    let w = w_min.vect_part().divide(&root)?;
    Ok((w, root))
}

pub fn classify_vectorial(g: &SliceExpr, d: &BasicDomainSpec) -> Result<VectorialClassReport> {
    let pts = leaf_samples(d, 2000);
    let sup_g = sup_stem(g, &pts)?;
    let g_v = g.vect_part();
    let sup_v = sup_stem(&g_v, &pts)?;
    if sup_v < ZERO_TOL * (1.0 + sup_g) {
        return Ok(VectorialClassReport {
            kind: ClassKind::ZeroClass,
            zeros: Vec::new(),
            lambda: SliceExpr::real(0.0),
            minimal: SliceExpr::real(0.0),
            normalized: None,
            minimal_root: None,
        });
    }
    let s = vect_sym(g);
    if sup_stem(&s, &pts)? < ZERO_TOL * (1.0 + sup_v * sup_v) {
        if d.kind == DomainKind::Slice {
            log::warn!("vectorial part with null symmetrization on a slice domain");
        }
        return Ok(VectorialClassReport {
            kind: ClassKind::NullSymmetrization,
            zeros: Vec::new(),
            lambda: SliceExpr::real(1.0),
            minimal: g_v,
            normalized: None,
            minimal_root: None,
        });
    }
    let zeros = classify_zeros(&g_v, &find_zeros_sp(&s, d)?, d)?;
    let (lambda, minimal) = factor_minimal(&g_v, &zeros, d)?;
    let discrete = zeros.iter().any(|z| z.kind == ZeroKind::IsolatedNonreal);
    let (kind, normalized, minimal_root) = if discrete {
        (ClassKind::DiscreteZeros, None, None)
    } else {
        let (w, root) = normalize(&minimal, d)?;
        (ClassKind::NoZeros, Some(w), Some(root))
    };
    Ok(VectorialClassReport { kind, zeros, lambda, minimal, normalized, minimal_root })
}

/// Whether all minors `f_a g_b - f_b g_a` vanish on the grid.
pub fn linearly_dependent(f_v: &SliceExpr, g_v: &SliceExpr, d: &BasicDomainSpec) -> Result<bool> {
    let pts = leaf_samples(d, 1500);
    let (sf, sg) = (sup_stem(f_v, &pts)?, sup_stem(g_v, &pts)?);
    let mut worst: f64 = 0.0;
    for &z in &pts {
        let (a, b) = (f_v.eval_stem(z)?, g_v.eval_stem(z)?);
        for (l, m) in [(1, 2), (1, 3), (2, 3)] {
            let minor = a.component(l) * b.component(m) - a.component(m) * b.component(l);
            worst = worst.max(minor.norm());
        }
    }
    Ok(worst < DEPENDENCE_TOL * (1.0 + sf) * (1.0 + sg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::{I, J, K};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zeros_of_simple_functions() {
        let q = SliceExpr::var();
        let d = BasicDomainSpec::rectangle(-2.0, 2.0, 0.0, 2.0, DomainKind::Slice);
        let z = find_zeros_sp(&(q.pow(2) + 1.0), &d).unwrap();
        assert_eq!(z.len(), 1);
        assert!((z[0].z - c(0.0, 1.0)).norm() < 1e-12 && z[0].multiplicity == 1);
        let z = find_zeros_sp(&(q.pow(2) + 1.0).pow(2), &d).unwrap();
        assert_eq!(z.len(), 1);
        assert!((z[0].z - c(0.0, 1.0)).norm() < 1e-10 && z[0].multiplicity == 2, "{z:?}");
        let z = find_zeros_sp(&((q.clone() - 0.5) * (q.clone() + 1.25)), &d).unwrap();
        assert_eq!(z.len(), 2);
        assert!(z.iter().all(|z| z.z.im == 0.0));
    }

    #[test]
    fn zeros_of_counterexample_symmetrization() {
        let q = SliceExpr::var();
        let h = (q.pow(2) + 1.0).pow(2) + 1.0;
        let d = BasicDomainSpec::rectangle(-1.3, 1.3, 0.0, 1.3, DomainKind::Slice);
        let z = find_zeros_sp(&h, &d).unwrap();
        assert_eq!(z.len(), 2, "{z:?}");
        for zero in z {
            assert!((zero.z.norm() - 2f64.powf(0.25)).abs() < 1e-10);
        }
    }

    #[test]
    fn boundary_zero_is_reported() {
        let q = SliceExpr::var();
        let d = BasicDomainSpec::rectangle(-1.0, 1.0, 0.5, 1.0, DomainKind::Product);
        assert!(matches!(find_zeros_sp(&(q.pow(2) + 1.0), &d), Err(Error::BoundaryZero(_))));
    }

    #[test]
    fn classes() {
        let q = SliceExpr::var();
        let prod = BasicDomainSpec::rectangle(-1.0, 1.0, 0.5, 1.5, DomainKind::Product);
        let psi = SliceExpr::unit() * I + J;
        assert_eq!(classify_vectorial(&psi, &prod).unwrap().kind, ClassKind::NullSymmetrization);
        assert_eq!(classify_vectorial(&SliceExpr::constant(I), &prod).unwrap().kind, ClassKind::NoZeros);
        assert_eq!(classify_vectorial(&(q.pow(2) + 2.0), &prod).unwrap().kind, ClassKind::ZeroClass);

        let ball = BasicDomainSpec::half_disc(1.1, 41);
        let g = q.pow(2) * I + 2f64.sqrt() * q.clone() * J + K - 1.0;
        let r = classify_vectorial(&g, &ball).unwrap();
        assert_eq!(r.kind, ClassKind::DiscreteZeros);
        assert_eq!(r.zeros.len(), 1);
        let zero = &r.zeros[0];
        assert_eq!((zero.kind, zero.multiplicity, zero.factor_order), (ZeroKind::IsolatedNonreal, 2, 0));
        let p = zero.point.unwrap();
        let expect = Quaternion::new(0.0, -1.0, 0.0, -1.0) / 2f64.sqrt();
        assert!(p.dist(expect) < 1e-9, "{p}");
        assert!(g.vect_part().eval(p).unwrap().norm() < 1e-9);
    }

    #[test]
    fn factoring() {
        let q = SliceExpr::var();
        let slice = BasicDomainSpec::rectangle(-2.0, 4.0, 0.0, 2.0, DomainKind::Slice);
        let gv = (q.pow(2) + 1.0) * I;
        let r = classify_vectorial(&gv, &slice).unwrap();
        assert_eq!(r.zeros[0].kind, ZeroKind::Spherical);
        assert_eq!(r.kind, ClassKind::NoZeros);
        let w = r.minimal.eval_stem(c(0.0, 1.0)).unwrap();
        assert!((w.a - I).norm() < 1e-10 && w.b.norm() < 1e-10);

        let gv = (q.clone() - 3.0) * J;
        let r = classify_vectorial(&gv, &slice).unwrap();
        assert_eq!(r.zeros[0].kind, ZeroKind::Real);
        let w = r.minimal.eval_stem(c(3.0, 0.0)).unwrap();
        assert!((w.a - J).norm() < 1e-10);
        let (l2, _) = factor_minimal(&r.minimal, &classify_zeros(&r.minimal, &[], &slice).unwrap(), &slice).unwrap();
        assert_eq!(l2, SliceExpr::real(1.0));
    }

    #[test]
    fn dependence() {
        let d = BasicDomainSpec::rectangle(-1.0, 1.0, 0.5, 1.5, DomainKind::Product);
        let q = SliceExpr::var();
        let f = q.clone() * I + K;
        assert!(linearly_dependent(&f, &(2.0 * f.clone()), &d).unwrap());
        assert!(!linearly_dependent(&SliceExpr::constant(I), &SliceExpr::constant(J), &d).unwrap());
        let psi = SliceExpr::unit() * I + J;
        assert!(linearly_dependent(&psi, &(q * psi.clone()), &d).unwrap());
    }
}
