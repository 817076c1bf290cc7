//! One `*`-logarithm per case, with the residual of `exp_*(f) = g`.

use starlog::log::{log_star, BranchSpec};
use starlog::{parse_expr, BasicDomainSpec, DomainKind};

fn main() -> starlog::Result<()> {
    let product = BasicDomainSpec::rectangle(-1.0, 1.0, 0.5, 1.5, DomainKind::Product).with_step(0.05);
    let slice = BasicDomainSpec::rectangle(-1.0, 1.0, 0.0, 1.0, DomainKind::Slice).with_step(0.05);
    let local = BasicDomainSpec::rectangle(-0.25, 0.25, 0.8, 1.2, DomainKind::Product).with_step(0.0125);
    let runs = [
        ("q^2 + 2", &slice, BranchSpec::default()),
        ("q", &product, BranchSpec::new(2, 0)),
        ("q + I*i + j", &product, BranchSpec::default()),
        ("exp(0.5*q*i + j)", &slice, BranchSpec::new(0, 2)),
        ("exp(q*i)", &product, BranchSpec::new(1, 1)),
        ("-1 + q^2*i + 1.4142135623730951*q*j + k", &local, BranchSpec::default()),
    ];
    for (src, d, b) in runs {
        let g = parse_expr(src)?;
        let r = log_star(&g, d, b)?;
        println!("{src} ({:?} domain, branch {b}): {}, residual {:.2e}", d.kind, r.case, r.residual);
        println!("  f = {}", r.f);
    }
    Ok(())
}
