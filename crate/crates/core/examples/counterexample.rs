//! A nonvanishing `g` on the ball of radius 1.1 with no global `*`-logarithm,
//! and a local one near the isolated zero of `g_v^s`.

use starlog::log::{check_conditions, log_star, BranchSpec};
use starlog::vectorial::classify_vectorial;
use starlog::{parse_expr, BasicDomainSpec};

fn main() -> starlog::Result<()> {
    let g = parse_expr("-1 + q^2*i + 1.4142135623730951*q*j + k")?;
    let ball = BasicDomainSpec::half_disc(1.1, 41).with_step(0.03125);
    let report = classify_vectorial(&g, &ball)?;
    let c = check_conditions(&g, &ball, &report)?;
    println!("class {:?}, min |g| = {:.4}", report.kind, c.min_abs_g);
    println!("cond1 {:?}, realimage {:?}, counterex {:?}", c.cond1, c.realimage, c.counterex);
    if let Some(w) = &c.witness {
        println!("witness: {w}");
    }
    match log_star(&g, &ball, BranchSpec::default()) {
        Ok(r) => println!("unexpected logarithm, residual {:.2e}", r.residual),
        Err(e) => println!("on the ball: {e} (exit code {})", e.exit_code()),
    }
    let local: BasicDomainSpec =
        BasicDomainSpec::load(std::path::Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/domains/z0_neighbourhood.json")))?;
    let r = log_star(&g, &local, BranchSpec::default())?;
    println!("near z0: {}, residual {:.2e}", r.case, r.residual);
    for l in &r.lifts {
        println!("  {:?} lift based at ({:.4}, {:.4})", l.kind, l.base_point[0], l.base_point[1]);
    }
    Ok(())
}
