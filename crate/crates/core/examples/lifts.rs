//! Continuing a square root and an angle over a region by grid lifts.

use num_complex::Complex64;
use starlog::lift::{LiftKind, LiftedScalarField};
use starlog::{parse_expr, BasicDomainSpec, DomainKind};

fn main() -> starlog::Result<()> {
    let d = BasicDomainSpec::rectangle(-1.0, 1.0, 0.5, 1.5, DomainKind::Product).with_step(0.05);
    let h = parse_expr("q^2 + 3")?;
    let base = Complex64::new(0.0, 1.0);
    let root = LiftedScalarField::build(LiftKind::Sqrt, vec![h.clone()], &d, base, Complex64::new(2f64.sqrt(), 0.0))?;
    let z = Complex64::new(0.8, 1.3);
    let v = root.eval(z)?;
    println!("sqrt lift at {z}: {v:.6}, squared {:.6}, h = {:.6}", v * v, h.eval_complex(z)?);
    println!("{:?}", root.meta());

    let (u, w) = (parse_expr("cos(q)")?, parse_expr("sin(q)")?);
    let angle = LiftedScalarField::build(LiftKind::Angle, vec![u, w], &d, base, base)?;
    println!("angle lift at {z}: {:.6} (identity expected)", angle.eval(z)?);
    Ok(())
}
