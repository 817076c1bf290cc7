//! Slice functions as expression trees, evaluated through their stems.
//!
//! A slice function `f(x + J y) = A(z) + J B(z)` is determined by its stem
//! `F = A + ι B` on the upper half-plane `z = x + i y`. Every node below knows
//! how to produce its stem value from the stem values of its children, so the
//! `*`-product is just the product in `H ⊗ C`.

use std::fmt;
use std::ops;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lift::LiftedScalarField;
use crate::quaternion::{ImaginaryUnit, Quaternion, ONE, ZERO};
use crate::special;

/// Tolerance (relative) on `|B|` at real points.
pub const REAL_POINT_TOL: f64 = 1e-10;

/// `A + ι B` with `A, B` quaternions and `ι` commuting with everything.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StemValue {
    pub a: Quaternion,
    pub b: Quaternion,
}

impl StemValue {
    pub const ZERO: StemValue = StemValue { a: ZERO, b: ZERO };
    pub const ONE: StemValue = StemValue { a: ONE, b: ZERO };

    pub fn new(a: Quaternion, b: Quaternion) -> Self {
        StemValue { a, b }
    }

    /// The stem value of a slice-preserving function with complex value `c`.
    pub fn from_complex(c: Complex64) -> Self {
        StemValue { a: Quaternion::real(c.re), b: Quaternion::real(c.im) }
    }

    /// Complex value read off the scalar parts (exact for slice-preserving stems).
    pub fn complex(self) -> Complex64 {
        Complex64::new(self.a.w, self.b.w)
    }

    /// Complex component along the basis element `l` (0 = real part).
    pub fn component(self, l: usize) -> Complex64 {
        Complex64::new(self.a.coeff(l), self.b.coeff(l))
    }

    pub fn conj(self) -> Self {
        StemValue { a: self.a.conj(), b: self.b.conj() }
    }

    /// Value at `z̄` given the value at `z`.
    pub fn reflect(self) -> Self {
        StemValue { a: self.a, b: -self.b }
    }

    pub fn scalar(self) -> Self {
        StemValue { a: Quaternion::real(self.a.w), b: Quaternion::real(self.b.w) }
    }

    pub fn vect(self) -> Self {
        StemValue { a: self.a.imag(), b: self.b.imag() }
    }

    pub fn norm(self) -> f64 {
        (self.a.norm_sqr() + self.b.norm_sqr()).sqrt()
    }

    /// Largest imaginary coefficient, used to test slice preservation.
    pub fn imag_size(self) -> f64 {
        self.a.imag_norm().max(self.b.imag_norm())
    }

    /// Multiplication by a complex scalar (a slice-preserving stem value).
    pub fn scale(self, c: Complex64) -> Self {
        StemValue { a: self.a * c.re - self.b * c.im, b: self.b * c.re + self.a * c.im }
    }

    /// The quaternion `A + J B`.
    pub fn at_unit(self, unit: ImaginaryUnit) -> Quaternion {
        self.a + unit.quaternion() * self.b
    }
}

impl ops::Add for StemValue {
    type Output = StemValue;
    fn add(self, o: StemValue) -> StemValue {
        StemValue { a: self.a + o.a, b: self.b + o.b }
    }
}

impl ops::Sub for StemValue {
    type Output = StemValue;
    fn sub(self, o: StemValue) -> StemValue {
        StemValue { a: self.a - o.a, b: self.b - o.b }
    }
}

impl ops::Neg for StemValue {
    type Output = StemValue;
    fn neg(self) -> StemValue {
        StemValue { a: -self.a, b: -self.b }
    }
}

impl ops::Mul for StemValue {
    type Output = StemValue;
    fn mul(self, o: StemValue) -> StemValue {
        StemValue { a: self.a * o.a - self.b * o.b, b: self.a * o.b + self.b * o.a }
    }
}

impl ops::Mul<f64> for StemValue {
    type Output = StemValue;
    fn mul(self, s: f64) -> StemValue {
        StemValue { a: self.a * s, b: self.b * s }
    }
}

/// Branched scalar functions; their argument must be slice-preserving.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarFn {
    Log0,
    Sqrt,
    Mu,
    Nu,
    Recip,
    MuInv(i64),
}

impl ScalarFn {
    pub fn name(self) -> String {
        match self {
            ScalarFn::Log0 => "log0".into(),
            ScalarFn::Sqrt => "sqrt".into(),
            ScalarFn::Mu => "mu".into(),
            ScalarFn::Nu => "nu".into(),
            ScalarFn::Recip => "recip".into(),
            ScalarFn::MuInv(k) => format!("muinv{k}"),
        }
    }

    pub fn apply(self, c: Complex64) -> Result<Complex64> {
        match self {
            ScalarFn::Log0 => special::log_principal(c),
            ScalarFn::Sqrt => special::sqrt_principal(c),
            ScalarFn::Mu => Ok(special::mu(c)),
            ScalarFn::Nu => Ok(special::nu(c)),
            ScalarFn::Recip => special::recip(c),
            ScalarFn::MuInv(k) => special::mu_inv(c, k),
        }
    }
}

/// Entire functions defined by `*`-power series; any argument is allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarFn {
    Exp,
    Cos,
    Sin,
}

impl StarFn {
    pub fn name(self) -> &'static str {
        match self {
            StarFn::Exp => "exp",
            StarFn::Cos => "cos",
            StarFn::Sin => "sin",
        }
    }
}

/// Projections of a slice function onto parts of its stem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Projection {
    Scalar,
    Vect,
    /// Coefficient of `i`, `j` or `k` (1, 2, 3).
    Component(usize),
}

/// Pointwise quotient by a slice-preserving denominator with removable
/// singularities at `patches` (centers on the leaf, disc radii).
#[derive(Debug, Clone, PartialEq)]
pub struct Quotient {
    pub num: SliceExpr,
    pub den: SliceExpr,
    pub patches: Vec<(Complex64, f64)>,
}

#[derive(Debug, Clone)]
pub enum Node {
    Const(Quaternion),
    Var,
    Unit,
    Add(SliceExpr, SliceExpr),
    Sub(SliceExpr, SliceExpr),
    Neg(SliceExpr),
    Mul(SliceExpr, SliceExpr),
    Pow(SliceExpr, u32),
    Conj(SliceExpr),
    Part(Projection, SliceExpr),
    Symm(SliceExpr),
    Scalar(ScalarFn, SliceExpr),
    Star(StarFn, SliceExpr),
    Quotient(Quotient),
    Field(Arc<LiftedScalarField>),
}

impl PartialEq for Node {
    fn eq(&self, other: &Node) -> bool {
        use Node::*;
        match (self, other) {
            (Const(a), Const(b)) => a == b,
            (Var, Var) | (Unit, Unit) => true,
            (Add(a, b), Add(c, d)) | (Sub(a, b), Sub(c, d)) | (Mul(a, b), Mul(c, d)) => a == c && b == d,
            (Neg(a), Neg(b)) | (Conj(a), Conj(b)) | (Symm(a), Symm(b)) => a == b,
            (Pow(a, n), Pow(b, m)) => n == m && a == b,
            (Part(p, a), Part(r, b)) => p == r && a == b,
            (Scalar(f, a), Scalar(g, b)) => f == g && a == b,
            (Star(f, a), Star(g, b)) => f == g && a == b,
            (Quotient(a), Quotient(b)) => a == b,
            (Field(a), Field(b)) => Arc::ptr_eq(a, b),
            _ => false,
        }
    }
}

/// An immutable expression tree for a slice-regular function.
#[derive(Debug, Clone, PartialEq)]
pub struct SliceExpr {
    node: Arc<Node>,
    sp: bool,
}

impl SliceExpr {
    fn make(node: Node) -> Self {
        use Node::*;
        let sp = match &node {
            Const(c) => c.imag_norm() == 0.0,
            Var | Unit | Symm(_) | Scalar(..) | Field(_) => true,
            Part(Projection::Scalar, _) | Part(Projection::Component(_), _) => true,
            Part(Projection::Vect, a) => a.sp,
            Add(a, b) | Sub(a, b) | Mul(a, b) => a.sp && b.sp,
            Neg(a) | Conj(a) | Pow(a, _) | Star(_, a) => a.sp,
            Quotient(q) => q.num.sp,
        };
        SliceExpr { node: Arc::new(node), sp }
    }

    pub fn node(&self) -> &Node {
        &self.node
    }

    /// Structural slice-preserving flag.
    pub fn sp(&self) -> bool {
        self.sp
    }

    pub fn constant(q: Quaternion) -> Self {
        Self::make(Node::Const(q))
    }

    pub fn real(a: f64) -> Self {
        Self::constant(Quaternion::real(a))
    }

    pub fn var() -> Self {
        Self::make(Node::Var)
    }

    /// The imaginary unit function `x + J y -> J` (away from the real axis).
    pub fn unit() -> Self {
        Self::make(Node::Unit)
    }

    pub fn field(f: Arc<LiftedScalarField>) -> Self {
        Self::make(Node::Field(f))
    }

    pub fn pow(&self, n: u32) -> Self {
        Self::make(Node::Pow(self.clone(), n))
    }

    pub fn conj(&self) -> Self {
        Self::make(Node::Conj(self.clone()))
    }

    pub fn scalar_part(&self) -> Self {
        Self::make(Node::Part(Projection::Scalar, self.clone()))
    }

    pub fn vect_part(&self) -> Self {
        Self::make(Node::Part(Projection::Vect, self.clone()))
    }

    pub fn component(&self, l: usize) -> Self {
        assert!((1..=3).contains(&l), "component index must be 1, 2 or 3");
        Self::make(Node::Part(Projection::Component(l), self.clone()))
    }

    pub fn symm(&self) -> Self {
        Self::make(Node::Symm(self.clone()))
    }

    pub fn star(&self, f: StarFn) -> Self {
        Self::make(Node::Star(f, self.clone()))
    }

    pub fn exp_star(&self) -> Self {
        self.star(StarFn::Exp)
    }

    /// Applies a branched scalar function; the argument must be slice-preserving.
    pub fn apply(&self, f: ScalarFn) -> Result<Self> {
        if !self.sp {
            return Err(Error::SlicePreservingRequired(f.name()));
        }
        Ok(Self::make(Node::Scalar(f, self.clone())))
    }

    /// `self / den` with a slice-preserving denominator.
    pub fn divide(&self, den: &SliceExpr) -> Result<Self> {
        self.divide_patched(den, Vec::new())
    }

    /// Like [`divide`](Self::divide), evaluating discs around removable
    /// singularities by a Cauchy integral instead of the raw quotient.
    pub fn divide_patched(&self, den: &SliceExpr, patches: Vec<(Complex64, f64)>) -> Result<Self> {
        if !den.sp {
            return Err(Error::SlicePreservingRequired("quotient".into()));
        }
        Ok(Self::make(Node::Quotient(Quotient { num: self.clone(), den: den.clone(), patches })))
    }

    /// Stem value at `z`; points in the lower half-plane use the reflection rule.
    pub fn eval_stem(&self, z: Complex64) -> Result<StemValue> {
        if z.im < 0.0 {
            Ok(self.stem(z.conj())?.reflect())
        } else {
            self.stem(z)
        }
    }

    /// Complex value of a slice-preserving function on the slice `C_i`.
    pub fn eval_complex(&self, z: Complex64) -> Result<Complex64> {
        Ok(self.eval_stem(z)?.complex())
    }

    /// Value at a quaternion: `A + J B` at `q = x + J y`.
    pub fn eval(&self, q: Quaternion) -> Result<Quaternion> {
        if q.is_real() {
            let s = self.eval_stem(Complex64::new(q.w, 0.0))?;
            let scale = 1.0 + s.a.norm();
            if s.b.norm() > REAL_POINT_TOL * scale {
                log::warn!("stem B = {} at real point {}", s.b, q.w);
            }
            return Ok(s.a);
        }
        let (x, y, unit) = q.split()?;
        Ok(self.eval_stem(Complex64::new(x, y))?.at_unit(unit))
    }

    fn stem(&self, z: Complex64) -> Result<StemValue> {
        use Node::*;
        Ok(match &*self.node {
            Const(c) => StemValue::new(*c, ZERO),
            Var => StemValue::from_complex(z),
            Unit => {
                if z.im == 0.0 {
                    return Err(Error::UnitFnOnRealAxis);
                }
                StemValue::from_complex(Complex64::new(0.0, 1.0))
            }
            Add(a, b) => a.stem(z)? + b.stem(z)?,
            Sub(a, b) => a.stem(z)? - b.stem(z)?,
            Neg(a) => -a.stem(z)?,
            Mul(a, b) => a.stem(z)? * b.stem(z)?,
            Pow(a, n) => stem_pow(a.stem(z)?, *n),
            Conj(a) => a.stem(z)?.conj(),
            Part(Projection::Scalar, a) => a.stem(z)?.scalar(),
            Part(Projection::Vect, a) => a.stem(z)?.vect(),
            Part(Projection::Component(l), a) => StemValue::from_complex(a.stem(z)?.component(*l)),
            Symm(a) => {
                let s = a.stem(z)?;
                (s * s.conj()).scalar()
            }
            Scalar(f, a) => StemValue::from_complex(f.apply(a.stem(z)?.complex())?),
            Star(f, a) => star_fn(*f, a.stem(z)?),
            Quotient(q) => q.stem(z)?,
            Field(f) => StemValue::from_complex(f.eval(z)?),
        })
    }

    /// `Some(c)` when the tree is a constant quaternion.
    pub fn as_const(&self) -> Option<Quaternion> {
        match &*self.node {
            Node::Const(c) => Some(*c),
            _ => None,
        }
    }

    /// Whether the tree references the imaginary unit function.
    pub fn uses_unit(&self) -> bool {
        self.any_node(&|n| matches!(n, Node::Unit))
    }

    /// Whether the tree is free of `q`, `I` and grid fields.
    pub fn is_constant(&self) -> bool {
        !self.any_node(&|n| matches!(n, Node::Var | Node::Unit | Node::Field(_)))
    }

    /// Whether the tree references a lifted grid field.
    pub fn uses_field(&self) -> bool {
        self.any_node(&|n| matches!(n, Node::Field(_)))
    }

    /// Distinct lifted fields referenced by the tree.
    pub fn fields(&self) -> Vec<Arc<LiftedScalarField>> {
        fn walk(e: &SliceExpr, out: &mut Vec<Arc<LiftedScalarField>>) {
            use Node::*;
            match &*e.node {
                Field(f) => {
                    if !out.iter().any(|g| Arc::ptr_eq(g, f)) {
                        out.push(f.clone());
                    }
                }
                Const(_) | Var | Unit => {}
                Add(a, b) | Sub(a, b) | Mul(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
                Neg(a) | Pow(a, _) | Conj(a) | Part(_, a) | Symm(a) | Scalar(_, a) | Star(_, a) => walk(a, out),
                Quotient(q) => {
                    walk(&q.num, out);
                    walk(&q.den, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    fn any_node(&self, pred: &dyn Fn(&Node) -> bool) -> bool {
        use Node::*;
        if pred(&self.node) {
            return true;
        }
        match &*self.node {
            Const(_) | Var | Unit | Field(_) => false,
            Add(a, b) | Sub(a, b) | Mul(a, b) => a.any_node(pred) || b.any_node(pred),
            Neg(a) | Pow(a, _) | Conj(a) | Part(_, a) | Symm(a) | Scalar(_, a) | Star(_, a) => a.any_node(pred),
            Quotient(q) => q.num.any_node(pred) || q.den.any_node(pred),
        }
    }
}

fn stem_pow(s: StemValue, mut n: u32) -> StemValue {
    let mut base = s;
    let mut acc = StemValue::ONE;
    while n > 0 {
        if n & 1 == 1 {
            acc = acc * base;
        }
        base = base * base;
        n >>= 1;
    }
    acc
}

/// `exp_*`, `cos_*`, `sin_*` in closed form: with `f = f0 + fv` and
/// `s = fv^s`, `exp_*(fv) = mu(s) + nu(s) fv`, `cos_*(fv) = mu(-s)` and
/// `sin_*(fv) = nu(-s) fv`.
fn star_fn(f: StarFn, s: StemValue) -> StemValue {
    let f0 = s.scalar().complex();
    let v = s.vect();
    let vs = -(v * v).scalar().complex();
    match f {
        StarFn::Exp => {
            let e = f0.exp();
            (StemValue::from_complex(special::mu(vs)) + v.scale(special::nu(vs))).scale(e)
        }
        StarFn::Cos | StarFn::Sin => {
            let cv = StemValue::from_complex(special::mu(-vs));
            let sv = v.scale(special::nu(-vs));
            let (c0, s0) = (f0.cos(), f0.sin());
            if f == StarFn::Cos {
                cv.scale(c0) - sv.scale(s0)
            } else {
                cv.scale(s0) + sv.scale(c0)
            }
        }
    }
}

/// Nodes of the trapezoid rule used for removable singularities.
const CAUCHY_NODES: usize = 64;

impl Quotient {
    fn stem(&self, z: Complex64) -> Result<StemValue> {
        for &(c, r) in &self.patches {
            if (z - c).norm() < 0.5 * r {
                return self.cauchy(z, c, r);
            }
        }
        let d = self.den.stem(z)?.complex();
        Ok(self.num.stem(z)?.scale(special::recip(d)?))
    }

    /// Each complex component of the quotient is holomorphic across the
    /// patch, so `F(z) = (1/2πi) ∮ F(ζ) / (ζ - z) dζ` on the circle `|ζ - c| = r`.
    fn cauchy(&self, z: Complex64, c: Complex64, r: f64) -> Result<StemValue> {
        let mut acc = [Complex64::new(0.0, 0.0); 4];
        for n in 0..CAUCHY_NODES {
            let t = 2.0 * std::f64::consts::PI * n as f64 / CAUCHY_NODES as f64;
            let e = Complex64::from_polar(1.0, t);
            let zeta = c + e * r;
            let d = self.den.eval_stem(zeta)?.complex();
            let v = self.num.eval_stem(zeta)?.scale(special::recip(d)?);
            // dζ = i r e dt, and the 1/(2πi) cancels the i
            let w = e * r / (zeta - z) / CAUCHY_NODES as f64;
            for (l, a) in acc.iter_mut().enumerate() {
                *a += v.component(l) * w;
            }
        }
        Ok(StemValue::new(
            Quaternion::new(acc[0].re, acc[1].re, acc[2].re, acc[3].re),
            Quaternion::new(acc[0].im, acc[1].im, acc[2].im, acc[3].im),
        ))
    }
}

impl From<Quaternion> for SliceExpr {
    fn from(q: Quaternion) -> Self {
        SliceExpr::constant(q)
    }
}

impl From<f64> for SliceExpr {
    fn from(a: f64) -> Self {
        SliceExpr::real(a)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $node:ident) => {
        impl ops::$tr<SliceExpr> for SliceExpr {
            type Output = SliceExpr;
            fn $m(self, o: SliceExpr) -> SliceExpr {
                SliceExpr::make(Node::$node(self, o))
            }
        }
        impl ops::$tr<&SliceExpr> for &SliceExpr {
            type Output = SliceExpr;
            fn $m(self, o: &SliceExpr) -> SliceExpr {
                SliceExpr::make(Node::$node(self.clone(), o.clone()))
            }
        }
        impl ops::$tr<Quaternion> for SliceExpr {
            type Output = SliceExpr;
            fn $m(self, o: Quaternion) -> SliceExpr {
                SliceExpr::make(Node::$node(self, SliceExpr::constant(o)))
            }
        }
        impl ops::$tr<f64> for SliceExpr {
            type Output = SliceExpr;
            fn $m(self, o: f64) -> SliceExpr {
                SliceExpr::make(Node::$node(self, SliceExpr::real(o)))
            }
        }
    };
}

binop!(Add, add, Add);
binop!(Sub, sub, Sub);
binop!(Mul, mul, Mul);

impl ops::Mul<SliceExpr> for f64 {
    type Output = SliceExpr;
    fn mul(self, o: SliceExpr) -> SliceExpr {
        SliceExpr::real(self) * o
    }
}

impl ops::Mul<SliceExpr> for Quaternion {
    type Output = SliceExpr;
    fn mul(self, o: SliceExpr) -> SliceExpr {
        SliceExpr::constant(self) * o
    }
}

impl ops::Neg for SliceExpr {
    type Output = SliceExpr;
    fn neg(self) -> SliceExpr {
        SliceExpr::make(Node::Neg(self))
    }
}

impl ops::Neg for &SliceExpr {
    type Output = SliceExpr;
    fn neg(self) -> SliceExpr {
        SliceExpr::make(Node::Neg(self.clone()))
    }
}

// Printing. Precedence levels: 1 sum, 2 product, 3 unary minus, 4 power, 5 atom.

fn const_text(c: Quaternion) -> (String, u8) {
    let terms = [c.w, c.x, c.y, c.z].iter().filter(|v| **v != 0.0).count();
    if c.imag_norm() == 0.0 && c.w >= 0.0 && c.w.is_sign_positive() {
        return (format!("{}", c.w), 5);
    }
    if terms == 1 && c.w == 0.0 {
        for (v, s) in [(c.x, "i"), (c.y, "j"), (c.z, "k")] {
            if v > 0.0 {
                let text = if v == 1.0 { s.to_string() } else { format!("{v}{s}") };
                return (text, 5);
            }
        }
    }
    (format!("({c})"), 5)
}

impl SliceExpr {
    fn level(&self) -> u8 {
        use Node::*;
        match &*self.node {
            Add(..) | Sub(..) => 1,
            Mul(..) | Quotient(_) => 2,
            Neg(_) => 3,
            Pow(..) => 4,
            _ => 5,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.level() < min {
            f.write_str("(")?;
            self.write(f)?;
            f.write_str(")")
        } else {
            self.write(f)
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Node::*;
        match &*self.node {
            Const(c) => f.write_str(&const_text(*c).0),
            Var => f.write_str("q"),
            Unit => f.write_str("I"),
            Add(a, b) | Sub(a, b) => {
                a.write_at(f, 1)?;
                f.write_str(if matches!(&*self.node, Add(..)) { " + " } else { " - " })?;
                b.write_at(f, 2)
            }
            Mul(a, b) => {
                a.write_at(f, 2)?;
                f.write_str("*")?;
                b.write_at(f, 3)
            }
            Quotient(q) => {
                q.num.write_at(f, 2)?;
                f.write_str("*recip(")?;
                q.den.write(f)?;
                f.write_str(")")
            }
            Neg(a) => {
                f.write_str("-")?;
                a.write_at(f, 3)
            }
            Pow(a, n) => {
                a.write_at(f, 5)?;
                write!(f, "^{n}")
            }
            Conj(a) => call(f, "conj", a),
            Part(Projection::Scalar, a) => call(f, "scalar", a),
            Part(Projection::Vect, a) => call(f, "vect", a),
            Part(Projection::Component(l), a) => call(f, &format!("comp{l}"), a),
            Symm(a) => call(f, "symm", a),
            Scalar(s, a) => call(f, &s.name(), a),
            Star(s, a) => call(f, s.name(), a),
            Field(fl) => write!(f, "field<{}>", fl.kind_name()),
        }
    }
}

fn call(f: &mut fmt::Formatter<'_>, name: &str, a: &SliceExpr) -> fmt::Result {
    write!(f, "{name}(")?;
    a.write(f)?;
    f.write_str(")")
}

impl fmt::Display for SliceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f)
    }
}
