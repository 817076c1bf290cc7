//! Command-line front end. Every subcommand prints a human summary and, with
//! `--json FILE`, writes a machine-readable report.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::domain::BasicDomainSpec;
use crate::error::{Error, Result};
use crate::exp::{exp_star_series_stem, DEFAULT_MAX_TERMS};
use crate::log::{check_conditions, log_star_with_rep, BranchSpec};
use crate::parse::parse_expr;
use crate::quaternion::Quaternion;
use crate::star::test_units;
use crate::vectorial::classify_vectorial;
use crate::verify::{run_suite, Suite};

#[derive(Debug, Parser)]
#[command(name = "starlog", version, about = "Quaternionic *-exponentials and *-logarithms")]
pub struct Cli {
    /// Also write a JSON report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    pub json: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression at a quaternion.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Point in the form `a+bi+cj+dk`.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Classify the vectorial part and sample the existence conditions.
    Classify {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        domain: PathBuf,
    },
    /// Build exp_* of an expression and compare it with the power series.
    ExpStar {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        domain: PathBuf,
        /// Write the values on the grid as CSV.
        #[arg(long, value_name = "FILE")]
        grid_out: Option<PathBuf>,
    },
    /// Compute a *-logarithm on a basic domain.
    LogStar {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        domain: PathBuf,
        /// Period indices `m,n`.
        #[arg(long, default_value = "0,0", allow_hyphen_values = true)]
        branch: BranchSpec,
        /// Representative of the vectorial class to log along.
        #[arg(long, allow_hyphen_values = true)]
        rep: Option<String>,
        /// Write the lifted fields as CSV.
        #[arg(long, value_name = "FILE")]
        fields_out: Option<PathBuf>,
    },
    /// Run an identity suite on a domain.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long)]
        domain: PathBuf,
    },
    /// Parse, print and re-parse an expression.
    Roundtrip {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if let Some(path) = &cli.json {
                let report = json!({ "status": "error", "error": e.to_string(), "exit_code": e.exit_code() });
                if let Err(io) = write_json(path, &report) {
                    eprintln!("error: {io}");
                }
            }
            e.exit_code()
        }
    }
}

fn write_json(path: &Path, v: &Value) -> Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(v)? + "\n")?;
    Ok(())
}

fn load_domain(path: &Path) -> Result<BasicDomainSpec> {
    let d = BasicDomainSpec::load(path)?;
    d.validate()?;
    Ok(d)
}

/// `x,y,Ix,Iy,Iz,w_re,w_i,w_j,w_k`: leaf point, imaginary unit and value.
pub fn grid_csv(f: &crate::SliceExpr, d: &BasicDomainSpec) -> Result<String> {
    let mut out = String::from("x,y,Ix,Iy,Iz,w_re,w_i,w_j,w_k\n");
    for (_, _, z) in d.grid().nodes() {
        let s = f.eval_stem(z)?;
        for u in test_units() {
            let (p, v) = (u.quaternion(), s.at_unit(u));
            out.push_str(&format!("{},{},{},{},{},{},{},{},{}\n", z.re, z.im, p.x, p.y, p.z, v.w, v.x, v.y, v.z));
        }
    }
    Ok(out)
}

fn execute(cli: &Cli) -> Result<i32> {
    let (report, code) = match &cli.command {
        Command::Eval { expr, at } => {
            let f = parse_expr(expr)?;
            let q: Quaternion = at.parse()?;
            let v = f.eval(q)?;
            println!("{v}");
            (json!({ "status": "ok", "expr": f.to_string(), "at": q.to_string(), "value": v.to_string() }), 0)
        }
        Command::Classify { expr, domain } => {
            let g = parse_expr(expr)?;
            let d = load_domain(domain)?;
            let report = classify_vectorial(&g, &d)?;
            println!("class: {:?}", report.kind);
            for z in &report.zeros {
                println!(
                    "  zero {:?} at {} (multiplicity {}, factored order {})",
                    z.kind, z.z, z.multiplicity, z.factor_order
                );
            }
            println!("minimal representative: {}", report.minimal);
            let conditions = check_conditions(&g, &d, &report)?;
            println!("min |g| on the grid: {:.6e}", conditions.min_abs_g);
            for (name, c) in [("cond1", conditions.cond1), ("realimage", conditions.realimage), ("counterex", conditions.counterex)] {
                if let Some(ok) = c {
                    println!("{name}: {}", if ok { "holds" } else { "fails" });
                }
            }
            if let Some(w) = &conditions.witness {
                println!("witness: {w}");
            }
            (json!({ "status": "ok", "expr": g.to_string(), "class": report, "conditions": conditions }), 0)
        }
        Command::ExpStar { expr, domain, grid_out } => {
            let f = parse_expr(expr)?;
            let d = load_domain(domain)?;
            let e = f.exp_star();
            let mut worst: f64 = 0.0;
            let nodes: Vec<Complex64> = d.grid().nodes().map(|(_, _, z)| z).collect();
            for &z in &nodes {
                let (a, b) = (exp_star_series_stem(&f, z, DEFAULT_MAX_TERMS)?, e.eval_stem(z)?);
                for u in test_units() {
                    let (x, y) = (a.at_unit(u), b.at_unit(u));
                    worst = worst.max(x.dist(y) / (1.0 + y.norm()));
                }
            }
            println!("exp_*({f}) = {e}");
            println!("series vs closed form: {worst:.3e} over {} nodes x 3 slices", nodes.len());
            if let Some(path) = grid_out {
                std::fs::write(path, grid_csv(&e, &d)?)?;
                println!("grid written to {}", path.display());
            }
            let report = json!({
                "status": "ok", "expr": f.to_string(), "closed_form": e.to_string(),
                "residual": worst, "grid": nodes.len(), "slices": 3,
            });
            (report, 0)
        }
        Command::LogStar { expr, domain, branch, rep, fields_out } => {
            let g = parse_expr(expr)?;
            let d = load_domain(domain)?;
            let rep = rep.as_deref().map(parse_expr).transpose()?;
            let r = log_star_with_rep(&g, &d, *branch, rep.as_ref())?;
            println!("{}, branch {}", r.case, r.branch);
            println!("f = {}", r.f);
            println!("residual {:.3e} over {} nodes x {} slices", r.residual, r.grid, r.slices);
            for l in &r.lifts {
                println!(
                    "lift {:?}: base ({}, {}) -> ({}, {}), refinement {}, max step {:.3e}",
                    l.kind, l.base_point[0], l.base_point[1], l.base_value[0], l.base_value[1], l.refinement, l.max_step
                );
            }
            if let Some(path) = fields_out {
                std::fs::write(path, r.fields_csv())?;
            }
            let mut v = serde_json::to_value(&r)?;
            v["status"] = json!("ok");
            (v, 0)
        }
        Command::Verify { suite, domain } => {
            let d = load_domain(domain)?;
            let report = run_suite(*suite, &d)?;
            for c in &report.checks {
                println!("{c}");
            }
            let ok = report.passed();
            println!("{}", if ok { "all checks passed" } else { "some checks FAILED" });
            let code = if ok { 0 } else { Error::Residual { residual: 0.0, bound: 0.0 }.exit_code() };
            (json!({ "status": if ok { "ok" } else { "fail" }, "checks": report.checks }), code)
        }
        Command::Roundtrip { expr } => {
            let e = parse_expr(expr)?;
            let printed = e.to_string();
            let again = parse_expr(&printed)?;
            let same = again == e && again.to_string() == printed;
            println!("{printed}");
            println!("{}", if same { "round trip ok" } else { "round trip MISMATCH" });
            let code = if same { 0 } else { Error::Syntax { pos: 0, msg: String::new() }.exit_code() };
            (json!({ "status": if same { "ok" } else { "fail" }, "expr": expr, "printed": printed, "identical": same }), code)
        }
    };
    if let Some(path) = &cli.json {
        write_json(path, &report)?;
    }
    Ok(code)
}
