//! Recursive-descent parser for the expression grammar:
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' uint)?
//! atom  := number ['i' | 'j' | 'k'] | 'i' | 'j' | 'k' | 'q' | 'I'
//!        | name '(' expr ')' | '(' quaternion ')' | '(' expr ')'
//! ```
//!
//! Names: `conj scalar vect symm comp1 comp2 comp3 exp cos sin log0 sqrt mu
//! nu recip muinv<k>`. A parenthesized quaternion literal such as
//! `(1-2.5j+k)` is read as one constant.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::expr::{ScalarFn, SliceExpr, StarFn};
use crate::quaternion::Quaternion;

pub fn parse_expr(src: &str) -> Result<SliceExpr> {
    let mut p = Parser { src: src.as_bytes(), text: src, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

impl FromStr for SliceExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_expr(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<SliceExpr> {
        let mut e = self.term()?;
        loop {
            if self.eat(b'+') {
                e = e + self.term()?;
            } else if self.eat(b'-') {
                e = e - self.term()?;
            } else {
                return Ok(e);
            }
        }
    }

    fn term(&mut self) -> Result<SliceExpr> {
        let mut e = self.unary()?;
        while self.eat(b'*') {
            e = e * self.unary()?;
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<SliceExpr> {
        if self.eat(b'-') {
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<SliceExpr> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let n = self.text[start..self.pos].parse::<u32>().map_err(|_| Error::Syntax {
            pos: start,
            msg: "expected a nonnegative integer exponent".into(),
        })?;
        Ok(base.pow(n))
    }

    fn atom(&mut self) -> Result<SliceExpr> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => self.paren(),
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => self.name(),
            Some(c) => Err(self.error(&format!("unexpected `{}`", c as char))),
        }
    }

    fn paren(&mut self) -> Result<SliceExpr> {
        let open = self.pos;
        self.pos += 1;
        let mut depth = 1;
        let mut end = self.pos;
        while end < self.src.len() && depth > 0 {
            match self.src[end] {
                b'(' => depth += 1,
                b')' => depth -= 1,
                _ => {}
            }
            end += 1;
        }
        if depth == 0 {
            if let Ok(c) = Quaternion::from_str(&self.text[open + 1..end - 1]) {
                self.pos = end;
                return Ok(SliceExpr::constant(c));
            }
        }
        let e = self.expr()?;
        self.expect(b')')?;
        Ok(e)
    }

    fn number(&mut self) -> Result<SliceExpr> {
        let start = self.pos;
        let digits = |p: &mut Self| {
            while p.pos < p.src.len() && p.src[p.pos].is_ascii_digit() {
                p.pos += 1;
            }
        };
        digits(self);
        if self.src.get(self.pos) == Some(&b'.') {
            self.pos += 1;
            digits(self);
        }
        if matches!(self.src.get(self.pos), Some(b'e' | b'E')) {
            let mut k = self.pos + 1;
            if matches!(self.src.get(k), Some(b'+' | b'-')) {
                k += 1;
            }
            if self.src.get(k).is_some_and(|c| c.is_ascii_digit()) {
                self.pos = k;
                digits(self);
            }
        }
        let v = self.text[start..self.pos]
            .parse::<f64>()
            .map_err(|e| Error::Syntax { pos: start, msg: e.to_string() })?;
        let basis = match self.src.get(self.pos) {
            Some(b'i') => 1,
            Some(b'j') => 2,
            Some(b'k') => 3,
            _ => 0,
        };
        let alnum_after = self.src.get(self.pos + 1).is_some_and(|c| c.is_ascii_alphanumeric());
        if basis != 0 && !alnum_after {
            self.pos += 1;
            return Ok(SliceExpr::constant(Quaternion::basis(basis) * v));
        }
        Ok(SliceExpr::real(v))
    }

    fn name(&mut self) -> Result<SliceExpr> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let mut name = self.text[start..self.pos].to_string();
        if name == "muinv" && self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            name = self.text[start..self.pos].to_string();
        }
        match name.as_str() {
            "q" => return Ok(SliceExpr::var()),
            "I" => return Ok(SliceExpr::unit()),
            "i" | "j" | "k" => {
                let l = (name.as_bytes()[0] - b'h') as usize;
                return Ok(SliceExpr::constant(Quaternion::basis(l)));
            }
            _ => {}
        }
        let unknown = || Error::Syntax { pos: start, msg: format!("unknown name `{name}`") };
        let scalar_fn = match name.as_str() {
            "log0" => Some(ScalarFn::Log0),
            "sqrt" => Some(ScalarFn::Sqrt),
            "mu" => Some(ScalarFn::Mu),
            "nu" => Some(ScalarFn::Nu),
            "recip" => Some(ScalarFn::Recip),
            s if s.starts_with("muinv") => Some(ScalarFn::MuInv(s[5..].parse().map_err(|_| unknown())?)),
            _ => None,
        };
        let known = scalar_fn.is_some()
            || matches!(
                name.as_str(),
                "conj" | "scalar" | "vect" | "symm" | "comp1" | "comp2" | "comp3" | "exp" | "cos" | "sin"
            );
        if !known {
            return Err(unknown());
        }
        self.expect(b'(')?;
        let arg = self.expr()?;
        self.expect(b')')?;
        if let Some(f) = scalar_fn {
            return arg.apply(f);
        }
        Ok(match name.as_str() {
            "conj" => arg.conj(),
            "scalar" => arg.scalar_part(),
            "vect" => arg.vect_part(),
            "symm" => arg.symm(),
            "comp1" => arg.component(1),
            "comp2" => arg.component(2),
            "comp3" => arg.component(3),
            "exp" => arg.star(StarFn::Exp),
            "cos" => arg.star(StarFn::Cos),
            _ => arg.star(StarFn::Sin),
        })
    }
}
