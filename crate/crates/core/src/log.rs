//! `*`-logarithms of nonvanishing slice functions, dispatched on the
//! vectorial class of `g`:
//!
//! * Case 1, `g_v = 0`: a holomorphic log of the slice-preserving `g`.
//! * Case 2, `g_v^s = 0`: `log g0 + g_v / g0` (product domains only).
//! * Case 3, `g_v^s` without zeros: `f0 + (phi + n pi) w` with `phi` the
//!   lift of `(g0, s_v) / sqrt(g^s)` through `t -> (cos t, sin t)`.
//! * Case 4, isolated zeros of `g_v^s`: `log sqrt(g^s) + g_v / (nu(G) sqrt(g^s))`
//!   with `G` the lift of `g0 / sqrt(g^s)` through `mu`, `G(z0) = 0`.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::{json, Value};

use crate::domain::{BasicDomainSpec, DomainKind};
use crate::error::{Error, Result};
use crate::expr::{ScalarFn, SliceExpr};
use crate::lift::{LiftKind, LiftMeta, LiftedScalarField};
use crate::star::test_units;
use crate::vectorial::{
    base_point, classify_vectorial, find_zeros_sp, linearly_dependent, normalize, ClassKind,
    VectorialClassReport,
};

/// Accepted results satisfy `sup |exp_*(f) - g| / (1 + |g|) <= RESIDUAL_BOUND`.
pub const RESIDUAL_BOUND: f64 = 1e-8;

/// Period indices: `m` counts `pi I`, `n` counts `pi w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct BranchSpec {
    pub m: i64,
    pub n: i64,
}

impl BranchSpec {
    pub fn new(m: i64, n: i64) -> Self {
        BranchSpec { m, n }
    }

    /// Checks the index constraints of `case` on a domain of kind `kind`:
    /// `m = 0` and `n` even on slice domains, `m + n` even on product
    /// domains, and `n = 0` outside Case 3.
    pub fn validate(&self, kind: DomainKind, case: LogCase) -> Result<()> {
        if kind == DomainKind::Slice && self.m != 0 {
            return Err(Error::InvalidBranch(format!("m = {} but m must be 0 on slice domains", self.m)));
        }
        if case != LogCase::Case3 && self.n != 0 {
            return Err(Error::InvalidBranch(format!("n = {} but {case} has no vectorial period", self.n)));
        }
        if kind == DomainKind::Slice && self.n.rem_euclid(2) != 0 {
            return Err(Error::InvalidBranch(format!("n = {} must be even on slice domains", self.n)));
        }
        if (self.m + self.n).rem_euclid(2) != 0 {
            return Err(Error::InvalidBranch(format!(
                "m + n = {} must be even on product domains",
                self.m + self.n
            )));
        }
        Ok(())
    }
}

impl fmt::Display for BranchSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.m, self.n)
    }
}

impl FromStr for BranchSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidBranch(format!("expected `m,n`, got `{s}`"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let m = a.trim().parse().map_err(|_| bad())?;
        let n = b.trim().parse().map_err(|_| bad())?;
        Ok(BranchSpec { m, n })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LogCase {
    Case1,
    Case2,
    Case3,
    Case4,
}

impl fmt::Display for LogCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self {
            LogCase::Case1 => 1,
            LogCase::Case2 => 2,
            LogCase::Case3 => 3,
            LogCase::Case4 => 4,
        };
        write!(f, "case {n}")
    }
}

fn display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

/// A verified logarithm.
#[derive(Debug, Clone, Serialize)]
pub struct LogResult {
    #[serde(serialize_with = "display")]
    pub f: SliceExpr,
    pub case: LogCase,
    pub branch: BranchSpec,
    pub residual: f64,
    /// Leaf grid nodes used for verification.
    pub grid: usize,
    /// Imaginary units sampled per node.
    pub slices: usize,
    pub lifts: Vec<LiftMeta>,
    pub diagnostics: BTreeMap<String, Value>,
    /// The normalized representative `w` (Case 3).
    #[serde(skip)]
    pub rep: Option<SliceExpr>,
    #[serde(skip)]
    pub fields: Vec<Arc<LiftedScalarField>>,
}

impl LogResult {
    /// CSV dump of every lifted field: `field,kind,x,y,re,im`.
    pub fn fields_csv(&self) -> String {
        let mut out = String::from("field,kind,x,y,re,im\n");
        for (k, f) in self.fields.iter().enumerate() {
            for (z, v) in f.samples() {
                out.push_str(&format!("{k},{},{},{},{},{}\n", f.kind_name(), z.re, z.im, v.re, v.im));
            }
        }
        out
    }
}

/// Outcome of the sampled checks on `g`. `None` marks a condition that does
/// not apply to the class of `g` or the kind of domain.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionSummary {
    pub min_abs_g: f64,
    pub scale: f64,
    /// `g(x) > 0` on the real points (slice-preserving `g`, slice domains).
    pub cond1: Option<bool>,
    /// `sqrt(g^s) > 0` on the real points (slice domains, `g_v` not zero).
    pub realimage: Option<bool>,
    /// `g0 / sqrt(g^s)` avoids `(-inf, -1]`.
    pub counterex: Option<bool>,
    pub witness: Option<String>,
}

fn leaf_nodes(d: &BasicDomainSpec) -> Vec<Complex64> {
    d.grid().nodes().map(|(_, _, z)| z).collect()
}

fn real_nodes(d: &BasicDomainSpec) -> Vec<Complex64> {
    leaf_nodes(d).into_iter().filter(|z| z.im == 0.0).collect()
}

/// Value of a constant slice-preserving expression.
fn const_real(e: &SliceExpr) -> Result<Option<f64>> {
    if e.sp() && e.is_constant() {
        return Ok(Some(e.eval_complex(Complex64::new(0.0, 1.0))?.re));
    }
    Ok(None)
}

/// `re + im I`; a nonreal constant only exists on product domains.
fn complex_const(c: Complex64, d: &BasicDomainSpec) -> Result<SliceExpr> {
    if c.im == 0.0 {
        return Ok(SliceExpr::real(c.re));
    }
    if d.kind == DomainKind::Slice {
        return Err(Error::ConditionFailed(format!("cond1: the constant log {c} is not real")));
    }
    Ok(SliceExpr::real(c.re) + c.im * SliceExpr::unit())
}

/// First real node where the slice-preserving `g` is not positive.
fn cond1_violation(g: &SliceExpr, d: &BasicDomainSpec) -> Result<Option<(f64, Complex64)>> {
    for z in real_nodes(d) {
        let v = g.eval_complex(z)?;
        if !(v.re > 0.0) || v.im.abs() > 1e-12 * (1.0 + v.re.abs()) {
            return Ok(Some((z.re, v)));
        }
    }
    Ok(None)
}

/// `L(h) + m pi I` for a continued log `L` of the slice-preserving `h`,
/// principal at the base point; `m` must be even for `exp(f) = h`.
pub fn log_sp(h: &SliceExpr, d: &BasicDomainSpec, m: i64) -> Result<SliceExpr> {
    if d.kind == DomainKind::Slice && m != 0 {
        return Err(Error::InvalidBranch("m must be 0 on slice domains".into()));
    }
    if m.rem_euclid(2) != 0 {
        return Err(Error::InvalidBranch(format!("m = {m} must be even here")));
    }
    let shift = m as f64 * PI;
    if let Some(c) = const_real(h)? {
        let l = Complex64::new(c, 0.0).ln() + Complex64::new(0.0, shift);
        return complex_const(l, d);
    }
    if d.kind == DomainKind::Slice {
        if let Some((x, v)) = cond1_violation(h, d)? {
            return Err(Error::ConditionFailed(format!("cond1: g({x}) = {v} is not positive")));
        }
    }
    let z0 = base_point(d);
    let v0 = h.eval_complex(z0)?;
    let field = LiftedScalarField::build(LiftKind::Log, vec![h.clone()], d, z0, v0.ln())?;
    let f = SliceExpr::field(Arc::new(field));
    Ok(if m == 0 { f } else { f + shift * SliceExpr::unit() })
}

fn sqrt_with_base(h: &SliceExpr, d: &BasicDomainSpec, z0: Complex64, v0: Complex64) -> Result<SliceExpr> {
    if let Some(c) = const_real(h)? {
        if c > 0.0 {
            return Ok(SliceExpr::real(c.sqrt().copysign(v0.re)));
        }
        return complex_const(v0, d);
    }
    let field = LiftedScalarField::build(LiftKind::Sqrt, vec![h.clone()], d, z0, v0)?;
    Ok(SliceExpr::field(Arc::new(field)))
}

/// `sqrt(g^s)`: positive on the real axis for slice domains; on product
/// domains equal to `g0` at the first isolated zero of `g_v^s`, else the
/// principal value at the base point.
pub fn sqrt_gs(g: &SliceExpr, d: &BasicDomainSpec, report: &VectorialClassReport) -> Result<SliceExpr> {
    let gs = g.symm();
    if d.kind == DomainKind::Slice {
        let z0 = base_point(d);
        let v = gs.eval_complex(z0)?;
        if !(v.re > 0.0) {
            return Err(Error::ConditionFailed(format!("realimage: g^s({z0}) = {v}")));
        }
        return sqrt_with_base(&gs, d, z0, Complex64::new(v.re.sqrt(), 0.0));
    }
    if let Some(z) = report.isolated_zeros().next() {
        let g0 = g.scalar_part().eval_complex(z.z)?;
        let v = gs.eval_complex(z.z)?;
        if (g0 * g0 - v).norm() > 1e-8 * (1.0 + v.norm()) {
            log::warn!("g0^2 - g^s = {} at the zero {}", g0 * g0 - v, z.z);
        }
        return sqrt_with_base(&gs, d, z.z, g0);
    }
    let z0 = base_point(d);
    sqrt_with_base(&gs, d, z0, gs.eval_complex(z0)?.sqrt())
}

/// `min_J |A + J B|^2 = |A|^2 + |B|^2 - 2 |Im(A conj(B))|` for the stem `(A, B)`.
fn min_over_sphere(a: crate::Quaternion, b: crate::Quaternion) -> (f64, f64) {
    let base = a.norm_sqr() + b.norm_sqr();
    let cross = 2.0 * (a * b.conj()).imag_norm();
    ((base - cross).max(0.0).sqrt(), (base + cross).sqrt())
}

/// Whether the values `w` on the leaf grid meet `(-inf, -1]`, on nodes or
/// across grid edges; returns a witness point.
fn ray_witness(w: &SliceExpr, d: &BasicDomainSpec) -> Result<Option<Complex64>> {
    let grid = d.grid();
    let mut vals = vec![None; grid.nx * grid.ny];
    for (i, j, z) in grid.nodes() {
        let v = w.eval_complex(z)?;
        if v.im.abs() <= 1e-9 * (1.0 + v.norm()) && v.re <= -1.0 + 1e-9 {
            return Ok(Some(z));
        }
        vals[grid.index(i, j)] = Some(v);
    }
    for (i, j, z) in grid.nodes() {
        let a = vals[grid.index(i, j)].expect("node value");
        for (di, dj) in [(1, 0), (0, 1)] {
            let (i2, j2) = (i + di, j + dj);
            if i2 >= grid.nx || j2 >= grid.ny || !grid.valid(i2, j2) {
                continue;
            }
            let b = vals[grid.index(i2, j2)].expect("node value");
            if a.im * b.im < 0.0 {
                let t = a.im / (a.im - b.im);
                if a.re + t * (b.re - a.re) <= -1.0 {
                    return Ok(Some(z));
                }
            }
        }
    }
    Ok(None)
}

/// Samples the conditions of the existence theorem on the grid of `d`.
pub fn check_conditions(g: &SliceExpr, d: &BasicDomainSpec, report: &VectorialClassReport) -> Result<ConditionSummary> {
    let (mut min_abs, mut sup): (f64, f64) = (f64::INFINITY, 0.0);
    for z in leaf_nodes(d) {
        let s = g.eval_stem(z)?;
        let (lo, hi) = min_over_sphere(s.a, s.b);
        min_abs = min_abs.min(lo);
        sup = sup.max(hi);
    }
    let scale = 1.0 + sup;
    if min_abs < 1e-10 * scale || !find_zeros_sp(&g.symm(), d)?.is_empty() {
        return Err(Error::Vanishing(if min_abs < 1e-10 * scale { min_abs } else { 0.0 }));
    }
    let mut summary = ConditionSummary { min_abs_g: min_abs, scale, cond1: None, realimage: None, counterex: None, witness: None };
    let slice = d.kind == DomainKind::Slice;
    if report.kind == ClassKind::ZeroClass {
        if slice {
            let v = cond1_violation(g, d)?;
            summary.cond1 = Some(v.is_none());
            summary.witness = v.map(|(x, v)| format!("g({x}) = {v}"));
        }
        return Ok(summary);
    }
    if slice {
        let gs = g.symm();
        let bad = real_nodes(d).into_iter().find(|&z| gs.eval_complex(z).map_or(true, |v| !(v.re > 0.0)));
        summary.realimage = Some(bad.is_none());
        if let Some(z) = bad {
            summary.witness = Some(format!("g^s({}) is not positive", z.re));
            return Ok(summary);
        }
    }
    if !matches!(report.kind, ClassKind::NoZeros | ClassKind::DiscreteZeros) {
        return Ok(summary);
    }
    let w = match sqrt_gs(g, d, report).and_then(|r| g.scalar_part().divide(&r)) {
        Ok(w) => w,
        Err(e) => {
            summary.counterex = Some(false);
            summary.witness = Some(format!("sqrt(g^s) not constructible: {e}"));
            return Ok(summary);
        }
    };
    let mut witness = None;
    for z in report.isolated_zeros() {
        if (w.eval_complex(z.z)? + 1.0).norm() < 1e-6 {
            witness = Some(z.z);
        }
    }
    if witness.is_none() {
        witness = ray_witness(&w, d)?;
    }
    if witness.is_none() {
        // the leaf values already decide; other slices are sampled for the report
        for z in crate::star::leaf_samples(d, 300) {
            let s = w.eval_stem(z)?;
            for u in test_units() {
                let q = s.at_unit(u);
                if q.imag_norm() <= 1e-9 * (1.0 + q.norm()) && q.w <= -1.0 + 1e-9 {
                    witness = Some(z);
                }
            }
        }
    }
    summary.counterex = Some(witness.is_none());
    if let Some(z) = witness {
        summary.witness = Some(format!("g0/sqrt(g^s) = {} at {z}", w.eval_complex(z)?));
    }
    Ok(summary)
}

/// `-i log(c)` with the real part in `(-pi, pi]`, also for `c` on the
/// negative axis with a signed zero imaginary part.
fn angle(c: Complex64) -> Complex64 {
    let c = if c.im == 0.0 { Complex64::new(c.re, 0.0) } else { c };
    Complex64::new(0.0, -1.0) * c.ln()
}

/// Verifies `exp_*(f) = g` on the grid over several slices and packages the result.
fn finish(
    f: SliceExpr,
    g: &SliceExpr,
    d: &BasicDomainSpec,
    case: LogCase,
    branch: BranchSpec,
    mut diagnostics: BTreeMap<String, Value>,
    rep: Option<SliceExpr>,
) -> Result<LogResult> {
    let e = f.exp_star();
    let units = test_units();
    let nodes = leaf_nodes(d);
    let mut residual: f64 = 0.0;
    for &z in &nodes {
        let (a, b) = (e.eval_stem(z)?, g.eval_stem(z)?);
        for &u in &units {
            let (x, y) = (a.at_unit(u), b.at_unit(u));
            residual = residual.max(x.dist(y) / (1.0 + y.norm()));
        }
    }
    if !(residual <= RESIDUAL_BOUND) {
        return Err(Error::Residual { residual, bound: RESIDUAL_BOUND });
    }
    let preserved = linearly_dependent(&f.vect_part(), &g.vect_part(), d)?;
    if !preserved {
        log::warn!("vectorial part of the log is not dependent on g_v");
    }
    diagnostics.insert("class_preserved".into(), json!(preserved));
    let fields = f.fields();
    Ok(LogResult {
        lifts: fields.iter().map(|x| x.meta()).collect(),
        fields,
        f,
        case,
        branch,
        residual,
        grid: nodes.len(),
        slices: units.len(),
        diagnostics,
        rep,
    })
}

/// Case 1: slice-preserving `g`.
pub fn log_case1(g: &SliceExpr, d: &BasicDomainSpec, m: i64) -> Result<LogResult> {
    if !g.sp() {
        return Err(Error::SlicePreservingRequired(format!("{g}")));
    }
    let branch = BranchSpec::new(m, 0);
    branch.validate(d.kind, LogCase::Case1)?;
    let f = log_sp(g, d, m)?;
    finish(f, g, d, LogCase::Case1, branch, BTreeMap::new(), None)
}

/// Case 2: `g_v^s = 0`, product domains only.
pub fn log_case2(g: &SliceExpr, d: &BasicDomainSpec, m: i64) -> Result<LogResult> {
    if d.kind == DomainKind::Slice {
        return Err(Error::ConditionFailed(
            "a vectorial part with null symmetrization has no log on a slice domain".into(),
        ));
    }
    let branch = BranchSpec::new(m, 0);
    branch.validate(d.kind, LogCase::Case2)?;
    let g0 = g.scalar_part();
    let f = log_sp(&g0, d, m)? + g.vect_part().divide(&g0)?;
    finish(f, g, d, LogCase::Case2, branch, BTreeMap::new(), None)
}

/// Case 3: `g_v = s_v w` with `w^s = 1`. `rep` overrides the normalized
/// representative of the report and is normalized first.
pub fn log_case3(
    g: &SliceExpr,
    d: &BasicDomainSpec,
    report: &VectorialClassReport,
    branch: BranchSpec,
    rep: Option<&SliceExpr>,
) -> Result<LogResult> {
    branch.validate(d.kind, LogCase::Case3)?;
    let g_v = g.vect_part();
    let w = match rep {
        Some(r) => {
            let (w, _) = normalize(r, d)?;
            if !linearly_dependent(&w, &g_v, d)? {
                return Err(Error::ConditionFailed(format!("`{r}` is not in the vectorial class of g")));
            }
            w
        }
        None => report
            .normalized
            .clone()
            .ok_or_else(|| Error::ConditionFailed("no normalized representative: pass one".into()))?,
    };
    let root = sqrt_gs(g, d, report)?;
    let s_v = -(&g_v * &w).scalar_part();
    let u = g.scalar_part().divide(&root)?;
    let v = s_v.divide(&root)?;
    let phi = match (const_real(&u)?, const_real(&v)?) {
        (Some(a), Some(b)) => SliceExpr::real(angle(Complex64::new(a, b)).re),
        _ => {
            let z0 = base_point(d);
            let (a, b) = (u.eval_complex(z0)?, v.eval_complex(z0)?);
            let v0 = angle(a + Complex64::new(0.0, 1.0) * b);
            let field = LiftedScalarField::build(LiftKind::Angle, vec![u.clone(), v.clone()], d, z0, v0)?;
            SliceExpr::field(Arc::new(field))
        }
    };
    let mut validity: f64 = 0.0;
    for z in leaf_nodes(d) {
        let p = phi.eval_complex(z)?;
        validity = validity.max((p.cos() - u.eval_complex(z)?).norm()).max((p.sin() - v.eval_complex(z)?).norm());
    }
    let mut f0 = log_sp(&root, d, 0)?;
    if branch.m != 0 {
        f0 = f0 + (branch.m as f64 * PI) * SliceExpr::unit();
    }
    let f = f0 + (phi + branch.n as f64 * PI) * w.clone();
    let mut diag = BTreeMap::new();
    diag.insert("lift_validity".into(), json!(validity));
    finish(f, g, d, LogCase::Case3, branch, diag, Some(w))
}

/// Case 4: `g_v^s` has isolated zeros.
pub fn log_case4(g: &SliceExpr, d: &BasicDomainSpec, report: &VectorialClassReport, m: i64) -> Result<LogResult> {
    let branch = BranchSpec::new(m, 0);
    branch.validate(d.kind, LogCase::Case4)?;
    let z0 = report
        .isolated_zeros()
        .next()
        .ok_or_else(|| Error::ConditionFailed("no isolated zero of g_v^s".into()))?
        .z;
    let root = sqrt_gs(g, d, report)?;
    let w = g.scalar_part().divide(&root)?;
    for z in &report.zeros {
        let v = w.eval_complex(z.z)?;
        if (v - 1.0).norm() > 1e-6 {
            return Err(Error::BranchPointHit(format!("g0/sqrt(g^s) = {v} at the zero {} of g_v^s", z.z)));
        }
    }
    if let Some(z) = find_zeros_sp(&(w.clone() + 1.0), d)?.first() {
        return Err(Error::BranchPointHit(format!("g0/sqrt(g^s) = -1 at {}", z.z)));
    }
    for z in find_zeros_sp(&(w.clone() - 1.0), d)? {
        if !report.zeros.iter().any(|y| (y.z - z.z).norm() < 1e-6 * (1.0 + y.z.norm())) {
            return Err(Error::BranchPointHit(format!("g0/sqrt(g^s) = 1 at {} away from the zeros of g_v^s", z.z)));
        }
    }
    let lift = LiftedScalarField::build(LiftKind::MuInv, vec![w.clone()], d, z0, Complex64::new(0.0, 0.0))
        .map_err(|e| match e {
            Error::LiftStep(msg) => Error::BranchPointHit(format!("mu lift failed: {msg}")),
            other => other,
        })?;
    let big_g = SliceExpr::field(Arc::new(lift));
    let nu_g = big_g.apply(ScalarFn::Nu)?;
    let mut nu_min = f64::INFINITY;
    for z in leaf_nodes(d) {
        nu_min = nu_min.min(nu_g.eval_complex(z)?.norm());
    }
    if nu_min < 1e-12 {
        return Err(Error::BranchPointHit(format!("nu(G) vanishes on the grid (min {nu_min:e})")));
    }
    let f0 = log_sp(&root, d, m)?;
    let f = f0 + g.vect_part().divide(&(nu_g * root))?;
    let mut diag = BTreeMap::new();
    diag.insert("nu_min".into(), json!(nu_min));
    diag.insert("g_at_base".into(), json!(big_g.eval_complex(z0)?.norm()));
    finish(f, g, d, LogCase::Case4, branch, diag, None)
}

/// Dispatches on the vectorial class of `g`.
pub fn log_star(g: &SliceExpr, d: &BasicDomainSpec, branch: BranchSpec) -> Result<LogResult> {
    log_star_with_rep(g, d, branch, None)
}

/// As [`log_star`]; with `rep`, a `g` with zero vectorial part is logged in
/// Case 3 along `rep`, which also replaces the normalized representative
/// of a class without zeros.
pub fn log_star_with_rep(
    g: &SliceExpr,
    d: &BasicDomainSpec,
    branch: BranchSpec,
    rep: Option<&SliceExpr>,
) -> Result<LogResult> {
    let domain = d.validate()?;
    if !domain.connected || !domain.simply_connected {
        return Err(Error::NotBasic("domain must be connected and simply connected".into()));
    }
    let report = classify_vectorial(g, d)?;
    let conditions = check_conditions(g, d, &report)?;
    log::info!("class {:?}, conditions {:?}", report.kind, conditions);
    let mut result = match (report.kind, rep) {
        (ClassKind::ZeroClass, None) => {
            if conditions.cond1 == Some(false) {
                return Err(Error::ConditionFailed(format!(
                    "cond1: {}",
                    conditions.witness.clone().unwrap_or_default()
                )));
            }
            branch.validate(d.kind, LogCase::Case1)?;
            log_case1(g, d, branch.m)?
        }
        (ClassKind::ZeroClass | ClassKind::NoZeros, rep) => log_case3(g, d, &report, branch, rep)?,
        (_, Some(_)) => {
            return Err(Error::ConditionFailed("a representative applies only to case 3".into()));
        }
        (ClassKind::NullSymmetrization, None) => {
            if d.kind == DomainKind::Product {
                branch.validate(d.kind, LogCase::Case2)?;
            }
            log_case2(g, d, branch.m)?
        }
        (ClassKind::DiscreteZeros, None) => match log_case4(g, d, &report, branch.m) {
            // the sufficient conditions failed and the construction did too;
            // that is not a proof that no log exists
            Err(e @ (Error::LiftStep(_) | Error::Residual { .. }))
                if conditions.counterex == Some(false) || conditions.realimage == Some(false) =>
            {
                return Err(Error::NoGlobalLogWitness(format!(
                    "counterex/realimage failed ({}); {e}",
                    conditions.witness.clone().unwrap_or_default()
                )));
            }
            other => other?,
        },
    };
    result.diagnostics.insert("min_abs_g".into(), json!(conditions.min_abs_g));
    result.diagnostics.insert("conditions".into(), serde_json::to_value(&conditions)?);
    Ok(result)
}
