use std::f64::consts::PI;

use starlog::log::{log_star, BranchSpec};
use starlog::vectorial::linearly_dependent;
use starlog::{parse_expr, BasicDomainSpec, DomainKind, Quaternion, SliceExpr};

fn c(w: f64, x: f64, y: f64, z: f64) -> SliceExpr {
    SliceExpr::constant(Quaternion::new(w, x, y, z))
}

fn pts() -> Vec<Quaternion> {
    vec![Quaternion::new(0.2, 0.5, 0.0, 0.0), Quaternion::new(-0.4, 0.0, 0.3, 0.6), Quaternion::new(0.0, 0.2, 0.2, 0.9)]
}

#[test]
fn exp_additive_for_dependent_parts() {
    let f = parse_expr("q*i + 1").unwrap();
    let g = parse_expr("q^2*i - q").unwrap();
    let lhs = (f.clone() + g.clone()).exp_star();
    let rhs = f.exp_star() * g.exp_star();
    for q in pts() {
        assert!(lhs.eval(q).unwrap().dist(rhs.eval(q).unwrap()) < 1e-12);
    }
}

// C_{pi i} and C_{pi j} have independent vectorial parts: exp_* of the sum is
// not the product of the exponentials.
#[test]
fn exp_not_additive_for_independent_constants() {
    let (f, g) = (c(0.0, PI, 0.0, 0.0), c(0.0, 0.0, PI, 0.0));
    let d = BasicDomainSpec::rectangle(-1.0, 1.0, 0.0, 1.0, DomainKind::Slice).with_step(0.25);
    assert!(!linearly_dependent(&f.vect_part(), &g.vect_part(), &d).unwrap());
    let q = Quaternion::new(0.1, 0.2, 0.3, 0.4);
    let prod = (f.exp_star() * g.exp_star()).eval(q).unwrap();
    let sum = (f + g).exp_star().eval(q).unwrap();
    assert!(prod.dist(Quaternion::real(1.0)) < 1e-12);
    let expected = Quaternion::new((PI * 2f64.sqrt()).cos(), 0.0, 0.0, 0.0);
    assert!((sum.w - expected.w).abs() < 1e-12);
    assert!(sum.dist(prod) > 1.0);
}

// log_*(C_i * C_j) = log_*(C_k) = pi k / 2, not pi (i + j) / 2.
#[test]
fn log_not_additive_across_classes() {
    let d = BasicDomainSpec::rectangle(-1.0, 1.0, 0.0, 1.0, DomainKind::Slice).with_step(0.25);
    let li = log_star(&c(0.0, 1.0, 0.0, 0.0), &d, BranchSpec::default()).unwrap().f;
    let lj = log_star(&c(0.0, 0.0, 1.0, 0.0), &d, BranchSpec::default()).unwrap().f;
    let lk = log_star(&c(0.0, 0.0, 0.0, 1.0), &d, BranchSpec::default()).unwrap().f;
    let q = Quaternion::new(0.3, 0.0, 0.8, 0.0);
    let (li, lj, lk) = (li.eval(q).unwrap(), lj.eval(q).unwrap(), lk.eval(q).unwrap());
    assert!(li.dist(Quaternion::new(0.0, PI / 2.0, 0.0, 0.0)) < 1e-10);
    assert!(lk.dist(Quaternion::new(0.0, 0.0, 0.0, PI / 2.0)) < 1e-10);
    assert!(lk.dist(li + lj) > 1.0);
}
