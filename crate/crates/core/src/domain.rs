//! Basic domains, described by their leaf region in the closed upper half-plane.
//!
//! An axially symmetric domain is determined by its intersection with one
//! leaf `{x + I y : y >= 0}`; we describe that leaf region as a union of
//! axis-aligned rectangles. Slice domains touch the real axis (`y0 = 0` for
//! some rectangle) and their slice section is the region together with its
//! mirror image; product domains stay strictly above the axis.

use std::collections::VecDeque;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Divisor of the bounding-box diagonal used for the default grid step.
pub const DEFAULT_STEPS_PER_DIAMETER: f64 = 64.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DomainKind {
    /// Meets the real axis.
    Slice,
    /// Avoids the real axis.
    Product,
}

/// Closed rectangle `[x0, x1] x [y0, y1]`; serialized as `[x0, x1, y0, y1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Rect {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl From<[f64; 4]> for Rect {
    fn from(a: [f64; 4]) -> Self {
        Rect { x0: a[0], x1: a[1], y0: a[2], y1: a[3] }
    }
}

impl From<Rect> for [f64; 4] {
    fn from(r: Rect) -> Self {
        [r.x0, r.x1, r.y0, r.y1]
    }
}

impl Rect {
    pub fn new(x0: f64, x1: f64, y0: f64, y1: f64) -> Self {
        Rect { x0, x1, y0, y1 }
    }

    pub fn contains(&self, z: Complex64, eps: f64) -> bool {
        z.re >= self.x0 - eps && z.re <= self.x1 + eps && z.im >= self.y0 - eps && z.im <= self.y1 + eps
    }

    pub fn width(&self) -> f64 {
        self.x1 - self.x0
    }

    pub fn height(&self) -> f64 {
        self.y1 - self.y0
    }
}

/// A basic domain given by its leaf region.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasicDomainSpec {
    pub rects: Vec<Rect>,
    pub kind: DomainKind,
    /// Grid step; defaults to 1/64 of the bounding-box diagonal.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub step: Option<f64>,
}

/// Outcome of [`BasicDomainSpec::validate`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DomainReport {
    pub kind: DomainKind,
    pub nodes: usize,
    pub step: f64,
    pub connected: bool,
    pub simply_connected: bool,
}

impl BasicDomainSpec {
    pub fn new(rects: Vec<Rect>, kind: DomainKind) -> Self {
        BasicDomainSpec { rects, kind, step: None }
    }

    pub fn rectangle(x0: f64, x1: f64, y0: f64, y1: f64, kind: DomainKind) -> Self {
        Self::new(vec![Rect::new(x0, x1, y0, y1)], kind)
    }

    /// Staircase of `strips` vertical rectangles inscribed in the upper half
    /// of the disc `|z| < radius`: the leaf of the ball `B(0, radius)`.
    pub fn half_disc(radius: f64, strips: usize) -> Self {
        let strips = strips.max(1) | 1;
        let w = 2.0 * radius / strips as f64;
        let rects = (0..strips)
            .map(|s| {
                let x0 = -radius + s as f64 * w;
                let x1 = x0 + w;
                let xm = x0.abs().max(x1.abs()).min(radius);
                let top = if s == strips / 2 { radius * (1.0 - 1e-9) } else { (radius * radius - xm * xm).sqrt() };
                Rect::new(x0, x1, 0.0, top.max(w * 0.5))
            })
            .collect();
        Self::new(rects, DomainKind::Slice)
    }

    pub fn with_step(mut self, h: f64) -> Self {
        self.step = Some(h);
        self
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn bbox(&self) -> Rect {
        let mut b = Rect::new(f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for r in &self.rects {
            b.x0 = b.x0.min(r.x0);
            b.x1 = b.x1.max(r.x1);
            b.y0 = b.y0.min(r.y0);
            b.y1 = b.y1.max(r.y1);
        }
        b
    }

    pub fn diameter(&self) -> f64 {
        let b = self.bbox();
        b.width().hypot(b.height())
    }

    pub fn step(&self) -> f64 {
        self.step.unwrap_or_else(|| self.diameter() / DEFAULT_STEPS_PER_DIAMETER)
    }

    fn eps(&self) -> f64 {
        1e-12 * (1.0 + self.diameter())
    }

    /// Membership of a leaf point (`Im z >= 0`).
    pub fn contains(&self, z: Complex64) -> bool {
        let eps = self.eps();
        self.rects.iter().any(|r| r.contains(z, eps))
    }

    /// Membership of a point of the whole slice section (either half-plane).
    pub fn contains_slice_point(&self, z: Complex64) -> bool {
        self.contains(Complex64::new(z.re, z.im.abs()))
    }

    /// Rectangles covering the whole slice section: touching rectangles are
    /// merged with their mirror images, the others are mirrored separately.
    pub fn slice_rects(&self) -> Vec<Rect> {
        match self.kind {
            DomainKind::Product => self.rects.clone(),
            DomainKind::Slice => {
                let mut out = Vec::new();
                for r in &self.rects {
                    if r.y0 <= 0.0 {
                        out.push(Rect::new(r.x0, r.x1, -r.y1, r.y1));
                    } else {
                        out.push(*r);
                        out.push(Rect::new(r.x0, r.x1, -r.y1, -r.y0));
                    }
                }
                out
            }
        }
    }

    /// Sampling grid over the leaf region.
    pub fn grid(&self) -> Grid {
        Grid::over(self, self.step())
    }

    /// Checks the basic-domain invariants: well-formed rectangles, the
    /// slice/product flag, and connected, simply connected slice section.
    pub fn validate(&self) -> Result<DomainReport> {
        if self.rects.is_empty() {
            return Err(Error::NotBasic("no rectangles".into()));
        }
        for r in &self.rects {
            let finite = [r.x0, r.x1, r.y0, r.y1].iter().all(|v| v.is_finite());
            if !finite || r.x0 >= r.x1 || r.y0 >= r.y1 {
                return Err(Error::NotBasic(format!("degenerate rectangle {:?}", <[f64; 4]>::from(*r))));
            }
            if r.y0 < 0.0 {
                return Err(Error::NotBasic(format!("rectangle {:?} extends below the real axis", <[f64; 4]>::from(*r))));
            }
        }
        let touches = self.rects.iter().any(|r| r.y0 <= 0.0);
        match (self.kind, touches) {
            (DomainKind::Slice, false) => return Err(Error::NotBasic("slice domain does not meet the real axis".into())),
            (DomainKind::Product, true) => return Err(Error::NotBasic("product domain meets the real axis".into())),
            _ => {}
        }
        let h = self.step();
        if !(h > 0.0) {
            return Err(Error::NotBasic("grid step must be positive".into()));
        }
        let (connected, simply_connected, nodes) = self.topology(h);
        if !connected {
            return Err(Error::NotBasic("leaf region is disconnected".into()));
        }
        if !simply_connected {
            return Err(Error::NotBasic("slice section has a hole".into()));
        }
        Ok(DomainReport { kind: self.kind, nodes, step: h, connected, simply_connected })
    }

    /// Flood-fill topology on a padded lattice over the slice section
    /// (foreground 4-connected, background 8-connected).
    fn topology(&self, h: f64) -> (bool, bool, usize) {
        let rects = self.slice_rects();
        let mut b = rects[0];
        for r in &rects {
            b.x0 = b.x0.min(r.x0);
            b.x1 = b.x1.max(r.x1);
            b.y0 = b.y0.min(r.y0);
            b.y1 = b.y1.max(r.y1);
        }
        let nx = ((b.width() / h).round() as usize).max(1) + 3;
        let ny = ((b.height() / h).round() as usize).max(1) + 3;
        let hx = b.width() / (nx - 3) as f64;
        let hy = b.height() / (ny - 3) as f64;
        let eps = self.eps();
        let inside = |i: usize, j: usize| -> bool {
            if i == 0 || j == 0 || i == nx - 1 || j == ny - 1 {
                return false;
            }
            let z = Complex64::new(b.x0 + (i - 1) as f64 * hx, b.y0 + (j - 1) as f64 * hy);
            rects.iter().any(|r| r.contains(z, eps))
        };
        let mut fg = vec![false; nx * ny];
        for j in 0..ny {
            for i in 0..nx {
                fg[j * nx + i] = inside(i, j);
            }
        }
        let total = fg.iter().filter(|&&v| v).count();
        let leaf_nodes = self.grid().len();

        let mut seen = vec![false; nx * ny];
        let start = fg.iter().position(|&v| v);
        let mut count = 0;
        if let Some(s) = start {
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(p) = queue.pop_front() {
                count += 1;
                let (i, j) = (p % nx, p / nx);
                let nbrs = [(i.wrapping_sub(1), j), (i + 1, j), (i, j.wrapping_sub(1)), (i, j + 1)];
                for (a, c) in nbrs {
                    if a < nx && c < ny && fg[c * nx + a] && !seen[c * nx + a] {
                        seen[c * nx + a] = true;
                        queue.push_back(c * nx + a);
                    }
                }
            }
        }
        let connected = total > 0 && count == total;

        let mut outside = vec![false; nx * ny];
        let mut queue = VecDeque::from([0usize]);
        outside[0] = true;
        while let Some(p) = queue.pop_front() {
            let (i, j) = (p % nx, p / nx);
            for di in -1i64..=1 {
                for dj in -1i64..=1 {
                    let (a, c) = (i as i64 + di, j as i64 + dj);
                    if a < 0 || c < 0 || a >= nx as i64 || c >= ny as i64 {
                        continue;
                    }
                    let q = c as usize * nx + a as usize;
                    if !fg[q] && !outside[q] {
                        outside[q] = true;
                        queue.push_back(q);
                    }
                }
            }
        }
        let holes = (0..nx * ny).any(|p| !fg[p] && !outside[p]);
        (connected, !holes, leaf_nodes)
    }
}

/// Regular lattice over the bounding box of a leaf region with a membership mask.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub x0: f64,
    pub y0: f64,
    pub hx: f64,
    pub hy: f64,
    pub nx: usize,
    pub ny: usize,
    pub mask: Vec<bool>,
}

impl Grid {
    pub fn over(domain: &BasicDomainSpec, h: f64) -> Grid {
        let b = domain.bbox();
        let nx = ((b.width() / h).round() as usize).max(3) + 1;
        let ny = ((b.height() / h).round() as usize).max(3) + 1;
        let hx = b.width() / (nx - 1) as f64;
        let hy = b.height() / (ny - 1) as f64;
        let mut mask = vec![false; nx * ny];
        for j in 0..ny {
            for i in 0..nx {
                let z = Complex64::new(b.x0 + i as f64 * hx, b.y0 + j as f64 * hy);
                mask[j * nx + i] = domain.contains(z);
            }
        }
        Grid { x0: b.x0, y0: b.y0, hx, hy, nx, ny, mask }
    }

    pub fn index(&self, i: usize, j: usize) -> usize {
        j * self.nx + i
    }

    pub fn point(&self, i: usize, j: usize) -> Complex64 {
        Complex64::new(self.x0 + i as f64 * self.hx, self.y0 + j as f64 * self.hy)
    }

    pub fn valid(&self, i: usize, j: usize) -> bool {
        i < self.nx && j < self.ny && self.mask[self.index(i, j)]
    }

    /// Number of nodes inside the region.
    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&v| v).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(i, j, z)` for every node inside the region.
    pub fn nodes(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        (0..self.ny).flat_map(move |j| (0..self.nx).map(move |i| (i, j))).filter(|&(i, j)| self.valid(i, j)).map(|(i, j)| (i, j, self.point(i, j)))
    }

    /// Points inside the region, every `stride`-th node in each direction.
    pub fn sample_points(&self, stride: usize) -> Vec<Complex64> {
        let stride = stride.max(1);
        self.nodes().filter(|(i, j, _)| i % stride == 0 && j % stride == 0).map(|(_, _, z)| z).collect()
    }

    /// Nearest valid node to `z`, if any.
    pub fn nearest(&self, z: Complex64) -> Option<(usize, usize)> {
        let fi = ((z.re - self.x0) / self.hx).round();
        let fj = ((z.im - self.y0) / self.hy).round();
        let (ci, cj) = (fi.clamp(0.0, (self.nx - 1) as f64) as usize, fj.clamp(0.0, (self.ny - 1) as f64) as usize);
        if self.valid(ci, cj) {
            return Some((ci, cj));
        }
        self.nodes()
            .min_by(|a, b| (a.2 - z).norm().total_cmp(&(b.2 - z).norm()))
            .map(|(i, j, _)| (i, j))
    }
}
