//! `exp_*` in closed form against its power series, and the identities it
//! satisfies.

use num_complex::Complex64;
use starlog::exp::{exp_star_series_stem, DEFAULT_MAX_TERMS};
use starlog::star::test_units;
use starlog::parse_expr;

fn main() -> starlog::Result<()> {
    let f = parse_expr("q*i + q^2*j - 0.5")?;
    let e = f.exp_star();
    println!("exp_*({f}) = {e}");
    for z in [Complex64::new(0.2, 0.3), Complex64::new(-0.7, 1.1)] {
        let (closed, series) = (e.eval_stem(z)?, exp_star_series_stem(&f, z, DEFAULT_MAX_TERMS)?);
        for u in test_units() {
            let (a, b) = (closed.at_unit(u), series.at_unit(u));
            println!("z = {z}, J = {}: |closed - series| = {:.2e}", u.quaternion(), a.dist(b));
        }
    }
    let z = Complex64::new(0.4, 0.6);
    let one = (f.exp_star() * (-f.clone()).exp_star()).eval_stem(z)?;
    println!("exp_*(f) * exp_*(-f) = {}", one.a);
    let lhs = e.symm().eval_stem(z)?.a;
    let rhs = (2.0 * f.scalar_part()).exp_star().eval_stem(z)?.a;
    println!("(exp_* f)^s = {lhs}, exp(2 f0) = {rhs}");
    Ok(())
}
