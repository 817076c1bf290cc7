//! `mu`, `nu` and the branches of `mu^{-1}`.

use num_complex::Complex64;
use starlog::special::{arccos_k, mu, mu_inv, nu};

fn main() -> starlog::Result<()> {
    for z in [Complex64::new(0.0, 0.0), Complex64::new(2.5, 0.0), Complex64::new(-1.0, 3.0)] {
        println!("z = {z}: mu = {:.6}, nu = {:.6}, cos(sqrt z) = {:.6}", mu(z), nu(z), z.sqrt().cos());
    }
    let w = Complex64::new(0.3, 0.4);
    for k in -2..=2 {
        let g = mu_inv(w, k)?;
        println!("mu_{k}^-1({w}) = {g:.6}  mu(.) = {:.6}  arccos_{k} = {:.6}", mu(g), arccos_k(w, k)?);
    }
    match mu_inv(Complex64::new(-2.0, 0.0), 0) {
        Ok(g) => println!("unexpected value {g}"),
        Err(e) => println!("on the cut: {e}"),
    }
    Ok(())
}
