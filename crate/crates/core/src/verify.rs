//! Identity suites over a domain grid, reported as one record per check.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;
use serde::Serialize;

use crate::domain::{BasicDomainSpec, DomainKind};
use crate::error::{Error, Result};
use crate::exp::{exp_star_series_stem, DEFAULT_MAX_TERMS};
use crate::expr::SliceExpr;
use crate::log::{log_star, BranchSpec, LogCase, RESIDUAL_BOUND};
use crate::parse::parse_expr;
use crate::quaternion::{Quaternion, ONE};
use crate::special::{mu, mu_inv};
use crate::star::{leaf_samples, test_units};

pub const EXP_TOL: f64 = 1e-10;
pub const MU_TOL: f64 = 1e-11;

/// Functions defined on every domain (no `I`), used by the exp suite.
pub const EXP_CORPUS: [&str; 10] = [
    "q*i + j",
    "q^2*k - q + 0.5",
    "(q - i)*(q + 2j)",
    "(0.1+2i-1j+0.5k)",
    "exp(q)*i + k",
    "sin(q)*j + cos(q)",
    "q^3*i + q*j - k*q^2",
    "(q^2 + 1)*i + 2j",
    "0.3*q - q^2*j + (1-1i+1k)",
    "conj(q*i + j)*(q - k)",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Exp,
    Log,
    Mu,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "exp" => Ok(Suite::Exp),
            "log" => Ok(Suite::Log),
            "mu" => Ok(Suite::Mu),
            _ => Err(Error::Syntax { pos: 0, msg: format!("unknown suite `{s}` (all, exp, log, mu)") }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub status: Status,
    /// Worst residual seen (relative where a value is compared).
    pub residual: f64,
    pub grid: usize,
    pub slices: usize,
    pub seconds: f64,
    pub detail: Option<String>,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<28} residual {:.3e}  grid {}  slices {}  {:.2}s",
            self.status, self.check, self.residual, self.grid, self.slices, self.seconds
        )?;
        if let Some(d) = &self.detail {
            write!(f, "  ({d})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }
}

struct Timer {
    name: String,
    start: Instant,
}

impl Timer {
    fn new(name: &str) -> Self {
        Timer { name: name.into(), start: Instant::now() }
    }

    fn finish(self, residual: f64, tol: f64, grid: usize, slices: usize, detail: Option<String>) -> CheckResult {
        let ok = residual <= tol && detail.is_none();
        CheckResult {
            check: self.name,
            status: if ok { Status::Pass } else { Status::Fail },
            residual,
            grid,
            slices,
            seconds: self.start.elapsed().as_secs_f64(),
            detail,
        }
    }
}

fn rel(a: Quaternion, b: Quaternion) -> f64 {
    a.dist(b) / (1.0 + b.norm())
}

/// Series against closed form, `exp_*(f) * exp_*(-f) = 1` and
/// `(exp_* f)^s = exp(2 f0)` for every function of [`EXP_CORPUS`].
pub fn exp_suite(d: &BasicDomainSpec) -> Result<Vec<CheckResult>> {
    let pts = leaf_samples(d, 2000);
    let units = test_units();
    let corpus: Vec<SliceExpr> = EXP_CORPUS.iter().map(|s| parse_expr(s)).collect::<Result<_>>()?;
    let mut out = Vec::new();

    let t = Timer::new("exp.series_vs_closed_form");
    let mut worst: f64 = 0.0;
    let mut detail = None;
    for f in &corpus {
        let e = f.exp_star();
        for &z in &pts {
            let s = match exp_star_series_stem(f, z, DEFAULT_MAX_TERMS) {
                Ok(s) => s,
                Err(err) => {
                    detail = Some(format!("`{f}` at {z}: {err}"));
                    continue;
                }
            };
            let c = e.eval_stem(z)?;
            for &u in &units {
                worst = worst.max(rel(s.at_unit(u), c.at_unit(u)));
            }
        }
    }
    out.push(t.finish(worst, EXP_TOL, pts.len(), units.len(), detail));

    let t = Timer::new("exp.inverse");
    let mut worst: f64 = 0.0;
    for f in &corpus {
        let p = f.exp_star() * (-f.clone()).exp_star();
        for &z in &pts {
            let s = p.eval_stem(z)?;
            for &u in &units {
                worst = worst.max(s.at_unit(u).dist(ONE));
            }
        }
    }
    out.push(t.finish(worst, EXP_TOL, pts.len(), units.len(), None));

    let t = Timer::new("exp.symmetrization");
    let mut worst: f64 = 0.0;
    for f in &corpus {
        let lhs = f.exp_star().symm();
        let rhs = (2.0 * f.scalar_part()).exp_star();
        for &z in &pts {
            let (a, b) = (lhs.eval_stem(z)?, rhs.eval_stem(z)?);
            for &u in &units {
                worst = worst.max(rel(a.at_unit(u), b.at_unit(u)));
            }
        }
    }
    out.push(t.finish(worst, EXP_TOL, pts.len(), units.len(), None));
    Ok(out)
}

/// About `n` sample values avoiding the cuts `(-inf, -1]` and `[1, inf)`.
pub fn mu_samples(n: usize) -> Vec<Complex64> {
    let side = (n as f64).sqrt().ceil() as usize;
    let mut out = Vec::with_capacity(side * side);
    for a in 0..side {
        for b in 0..side {
            let x = -3.0 + 6.0 * (a as f64 + 0.5) / side as f64;
            let y = -3.0 + 6.0 * (b as f64 + 0.37) / side as f64;
            out.push(Complex64::new(x, y));
        }
    }
    out
}

/// `mu(mu_k^{-1}(w)) = w` for `k = -2..=2`, `mu(0) = 1` and `mu'(0) = -1/2`.
pub fn mu_suite() -> Vec<CheckResult> {
    let ws = mu_samples(1000);
    let mut out = Vec::new();
    for k in -2..=2 {
        let t = Timer::new(&format!("mu.inverse_branch_{k}"));
        let mut worst: f64 = 0.0;
        let mut detail = None;
        for &w in &ws {
            match mu_inv(w, k) {
                Ok(g) => worst = worst.max((mu(g) - w).norm() / (1.0 + w.norm())),
                Err(e) => detail = Some(e.to_string()),
            }
        }
        out.push(t.finish(worst, MU_TOL, ws.len(), 1, detail));
    }
    let t = Timer::new("mu.value_at_zero");
    let zero = Complex64::new(0.0, 0.0);
    out.push(t.finish((mu(zero) - 1.0).norm(), 1e-15, 1, 1, None));
    let t = Timer::new("mu.derivative_at_zero");
    let h = 1e-5;
    let fd = (mu(Complex64::new(h, 0.0)) - mu(Complex64::new(-h, 0.0))) / (2.0 * h);
    out.push(t.finish((fd + 0.5).norm(), 1e-6, 1, 1, None));
    out
}

/// Log round trips for one function per applicable case, and the branch
/// parity rules.
pub fn log_suite(d: &BasicDomainSpec) -> Result<Vec<CheckResult>> {
    let corpus: &[(&str, LogCase)] = match d.kind {
        DomainKind::Slice => &[("q^2 + 2", LogCase::Case1), ("exp(0.5*q*i + j)", LogCase::Case3)],
        DomainKind::Product => &[
            ("q", LogCase::Case1),
            ("q + I*i + j", LogCase::Case2),
            ("exp(q*i)", LogCase::Case3),
        ],
    };
    let mut out = Vec::new();
    for (src, case) in corpus {
        let t = Timer::new(&format!("log.{case}").replace(' ', ""));
        let g = parse_expr(src)?;
        let res = log_star(&g, d, BranchSpec::default());
        out.push(match res {
            Ok(r) if r.case == *case => t.finish(r.residual, RESIDUAL_BOUND, r.grid, r.slices, None),
            Ok(r) => t.finish(r.residual, RESIDUAL_BOUND, r.grid, r.slices, Some(format!("`{src}` went to {}", r.case))),
            Err(e) => t.finish(f64::INFINITY, RESIDUAL_BOUND, 0, 0, Some(format!("`{src}`: {e}"))),
        });
    }
    let t = Timer::new("log.branch_parity");
    let mut bad = Vec::new();
    let rejected = |b: BranchSpec, kind, case| b.validate(kind, case).is_err();
    let expectations = [
        (BranchSpec::new(1, 0), DomainKind::Product, LogCase::Case3, true),
        (BranchSpec::new(1, 1), DomainKind::Product, LogCase::Case3, false),
        (BranchSpec::new(0, 1), DomainKind::Slice, LogCase::Case3, true),
        (BranchSpec::new(0, 2), DomainKind::Slice, LogCase::Case3, false),
        (BranchSpec::new(2, 0), DomainKind::Slice, LogCase::Case1, true),
        (BranchSpec::new(0, 2), DomainKind::Product, LogCase::Case2, true),
    ];
    for (b, kind, case, expect) in expectations {
        if rejected(b, kind, case) != expect {
            bad.push(format!("{b} on {kind:?} in {case}"));
        }
    }
    let detail = (!bad.is_empty()).then(|| bad.join("; "));
    out.push(t.finish(0.0, 0.0, 0, 0, detail));
    Ok(out)
}

pub fn run_suite(suite: Suite, d: &BasicDomainSpec) -> Result<VerificationReport> {
    d.validate()?;
    let mut checks = Vec::new();
    if matches!(suite, Suite::All | Suite::Exp) {
        checks.extend(exp_suite(d)?);
    }
    if matches!(suite, Suite::All | Suite::Mu) {
        checks.extend(mu_suite());
    }
    if matches!(suite, Suite::All | Suite::Log) {
        checks.extend(log_suite(d)?);
    }
    Ok(VerificationReport { checks })
}
