//! Slice functions through their stems: `f(x + yJ) = A(x + iy) + J B(x + iy)`
//! for every imaginary unit `J`.

use num_complex::Complex64;
use starlog::{parse_expr, ImaginaryUnit, Quaternion};

fn main() -> starlog::Result<()> {
    let f = parse_expr("q^2*i + conj(q)*j - sin(q)")?;
    let z = Complex64::new(0.4, 0.9);
    let s = f.eval_stem(z)?;
    println!("f = {f}");
    println!("stem at {z}: A = {}, B = {}", s.a, s.b);
    for (a, b, c) in [(1.0, 0.0, 0.0), (0.0, 1.0, 1.0), (-1.0, 2.0, 0.5)] {
        let u = ImaginaryUnit::from_vector(a, b, c).unwrap();
        let q = Quaternion::from_split(z.re, z.im, u);
        println!("J = {}: f(q) = {}  A + J B = {}", u.quaternion(), f.eval(q)?, s.at_unit(u));
    }
    let r = f.eval_stem(z.conj())?;
    println!("reflection: A(conj z) = {}, B(conj z) = {}", r.a, r.b);
    Ok(())
}
