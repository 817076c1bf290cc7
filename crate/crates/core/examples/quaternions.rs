//! Quaternion arithmetic, the split `x + y I` and the branches `log_k`.

use starlog::quaternion::{I, J, K};
use starlog::special::log_k;
use starlog::Quaternion;

fn main() -> starlog::Result<()> {
    let p: Quaternion = "1+2i-1j+0.5k".parse()?;
    let q = Quaternion::new(0.0, 1.0, 1.0, 0.0);
    println!("p = {p}, q = {q}");
    println!("p q = {}", p * q);
    println!("q p = {}", q * p);
    println!("i j = {}, j k = {}, k i = {}", I * J, J * K, K * I);
    println!("|p| = {:.6}, p^-1 = {}", p.norm(), p.inv().unwrap());

    let (x, y, unit) = p.split()?;
    println!("p = {x} + {y:.6} I with I = {}", unit.quaternion());
    println!("exp(p) = {}", p.exp());
    for k in -1..=1 {
        let l = log_k(p, k)?;
        println!("log_{k}(p) = {l}  (exp back: {})", l.exp());
    }
    Ok(())
}
