//! Parsing, printing and evaluating expressions.

use starlog::{parse_expr, Quaternion};

fn main() {
    let q = Quaternion::new(0.5, 0.1, 0.2, 0.3);
    for src in ["q^2*i + 2j", "-(q - 1)*(q + 1)", "exp(q*i) + muinv-1(q^2)", "(1+2i-3j+0.5k)*q", "symm(q*j + k)", "q +"] {
        match parse_expr(src) {
            Ok(f) => {
                let again = parse_expr(&f.to_string()).map(|g| g == f).unwrap_or(false);
                match f.eval(q) {
                    Ok(v) => println!("{src:<28} -> {f}  round trip {again}  f(q) = {v}"),
                    Err(e) => println!("{src:<28} -> {f}  round trip {again}  f(q): {e}"),
                }
            }
            Err(e) => println!("{src:<28} -> {e}"),
        }
    }
}
