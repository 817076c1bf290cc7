//! The `*`-product, regular conjugation, symmetrization and the split form
//! `f = f0 + f1 i + f2 j + f3 k`.

use starlog::star::{reg_conj, split_form, star_mul, symmetrization};
use starlog::{parse_expr, Quaternion};

fn main() -> starlog::Result<()> {
    let f = parse_expr("q*i + j")?;
    let g = parse_expr("q^2 - k")?;
    let q = Quaternion::new(0.3, 0.2, -0.5, 0.7);
    println!("f = {f}, g = {g}");
    println!("(f * g)(q) = {}", star_mul(&f, &g).eval(q)?);
    println!("(g * f)(q) = {}", star_mul(&g, &f).eval(q)?);
    println!("pointwise f(q) g(q) = {}", f.eval(q)? * g.eval(q)?);

    let fs = symmetrization(&f);
    println!("f^c = {}", reg_conj(&f));
    println!("f^s(q) = {}  (slice preserving)", fs.eval(q)?);
    let split = split_form(&f);
    println!("components: {}", split.components().map(|c| c.to_string()).join(", "));
    println!("f_v^s(q) = {}", split.sum_of_squares().eval(q)?);
    Ok(())
}
