//! Vectorial classes: zeros of `g_v^s`, their kinds and the minimal
//! representative.

use starlog::vectorial::classify_vectorial;
use starlog::{parse_expr, BasicDomainSpec};

fn main() -> starlog::Result<()> {
    let d = BasicDomainSpec::half_disc(1.1, 41).with_step(0.03125);
    for src in [
        "q*i + j",
        "(q^2 + 1)*i + (q^2 + 1)*j",
        "(q - 0.5)*j + (q - 0.5)*2*k",
        "-1 + q^2*i + 1.4142135623730951*q*j + k",
        "q^3*i",
    ] {
        let g = parse_expr(src)?;
        let r = classify_vectorial(&g, &d)?;
        println!("{src}: {:?}", r.kind);
        for z in &r.zeros {
            println!("  {:?} zero at {:.6} (multiplicity {}, factored order {})", z.kind, z.z, z.multiplicity, z.factor_order);
        }
        println!("  minimal: {}", r.minimal);
    }
    Ok(())
}
