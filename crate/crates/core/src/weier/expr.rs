//! Rational expressions in named variables: `-(2t+1)*Y + (t+1)*(X+4t^2)`.
//!
//! Grammar: sums and differences of products and quotients of powers; `^` takes an
//! integer exponent and binds tighter than unary minus. Juxtaposition multiplies
//! (`4p^2`, `2(x+1)`, `(a)(b)`).

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::arith::{Int, Rat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rat),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

/// Arithmetic needed to evaluate an [`Expr`].
pub trait Ring {
    type E: Clone;
    fn constant(&self, r: &Rat) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn div(&self, a: &Self::E, b: &Self::E) -> Result<Self::E>;
    fn is_zero(&self, a: &Self::E) -> bool;

    fn pow(&self, a: &Self::E, e: i64) -> Result<Self::E> {
        let mut base = if e < 0 {
            self.div(&self.constant(&Rat::one()), a)?
        } else {
            a.clone()
        };
        let mut acc = self.constant(&Rat::one());
        let mut e = e.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        Ok(acc)
    }
}

impl Expr {
    pub fn parse(s: &str) -> Result<Expr> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let e = p.sum()?;
        p.ws();
        if p.pos != p.s.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(e)
    }

    pub fn var(name: &str) -> Expr {
        Expr::Var(name.into())
    }

    pub fn variables(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                out.insert(v.clone());
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_vars(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// Evaluates in `ring`, looking variables up with `env`.
    pub fn eval<R: Ring>(&self, ring: &R, env: &dyn Fn(&str) -> Option<R::E>) -> Result<R::E> {
        Ok(match self {
            Expr::Num(r) => ring.constant(r),
            Expr::Var(v) => env(v).ok_or_else(|| Error::UnknownVariable(v.clone()))?,
            Expr::Neg(a) => ring.neg(&a.eval(ring, env)?),
            Expr::Add(a, b) => ring.add(&a.eval(ring, env)?, &b.eval(ring, env)?),
            Expr::Sub(a, b) => ring.sub(&a.eval(ring, env)?, &b.eval(ring, env)?),
            Expr::Mul(a, b) => ring.mul(&a.eval(ring, env)?, &b.eval(ring, env)?),
            Expr::Div(a, b) => {
                let d = b.eval(ring, env)?;
                if ring.is_zero(&d) {
                    return Err(Error::DivisionByZero(format!("denominator {b} vanishes identically")));
                }
                ring.div(&a.eval(ring, env)?, &d)?
            }
            Expr::Pow(a, e) => ring.pow(&a.eval(ring, env)?, *e)?,
        })
    }
}

impl core::fmt::Display for Expr {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Expr::Num(r) => write!(f, "{}", crate::arith::rat_to_string(r)),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Div(a, b) => write!(f, "({a})/({b})"),
            Expr::Pow(a, e) => write!(f, "({a})^{e}"),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    e = Expr::Add(Box::new(e), Box::new(self.unary()?));
                }
                b'-' => {
                    self.pos += 1;
                    e = Expr::Sub(Box::new(e), Box::new(self.unary()?));
                }
                _ => break,
            }
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.unary()?)))
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.product(),
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut e = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    e = Expr::Mul(Box::new(e), Box::new(self.power()?));
                }
                Some(b'/') => {
                    self.pos += 1;
                    e = Expr::Div(Box::new(e), Box::new(self.power()?));
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() || c == b'_' => {
                    e = Expr::Mul(Box::new(e), Box::new(self.power()?));
                }
                _ => break,
            }
        }
        Ok(e)
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = match self.peek() {
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                Some(b'(') => return self.paren_exponent(base),
                _ => false,
            };
            let n = self.integer()?;
            return Ok(Expr::Pow(Box::new(base), if neg { -n } else { n }));
        }
        Ok(base)
    }

    fn paren_exponent(&mut self, base: Expr) -> Result<Expr> {
        self.pos += 1;
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let n = self.integer()?;
        if self.peek() != Some(b')') {
            return Err(self.err("expected `)` after exponent"));
        }
        self.pos += 1;
        Ok(Expr::Pow(Box::new(base), if neg { -n } else { n }))
    }

    fn integer(&mut self) -> Result<i64> {
        self.ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        core::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected an integer exponent"))
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = core::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
                let n: Int = digits.parse().map_err(|_| self.err("bad number"))?;
                Ok(Expr::Num(Rat::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
                Ok(Expr::Var(name.into()))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// A sequence of `name = expr` definitions followed by uses; later ones may refer
/// to earlier ones.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Definitions {
    pub defs: Vec<(String, Expr)>,
}

impl Definitions {
    pub fn parse(pairs: &[(&str, &str)]) -> Result<Self> {
        Ok(Definitions {
            defs: pairs
                .iter()
                .map(|(n, e)| Ok((n.to_string(), Expr::parse(e)?)))
                .collect::<Result<_>>()?,
        })
    }

    /// Evaluates every definition and returns the extended environment.
    pub fn bind<R: Ring>(&self, ring: &R, base: &[(String, R::E)]) -> Result<Vec<(String, R::E)>> {
        let mut env: Vec<(String, R::E)> = base.to_vec();
        for (name, e) in &self.defs {
            let v = e.eval(ring, &|n| lookup(&env, n))?;
            env.push((name.clone(), v));
        }
        Ok(env)
    }
}

/// Last binding of `name` wins.
pub fn lookup<E: Clone>(env: &[(String, E)], name: &str) -> Option<E> {
    env.iter().rev().find(|(n, _)| n == name).map(|(_, v)| v.clone())
}

/// ℚ itself, for constant expressions.
pub struct Rationals;

impl Ring for Rationals {
    type E = Rat;
    fn constant(&self, r: &Rat) -> Rat {
        r.clone()
    }
    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }
    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn neg(&self, a: &Rat) -> Rat {
        -a
    }
    fn div(&self, a: &Rat, b: &Rat) -> Result<Rat> {
        if b.is_zero() {
            return Err(Error::DivisionByZero("rational division by zero".into()));
        }
        Ok(a / b)
    }
    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn ev(s: &str, x: i64) -> Rat {
        Expr::parse(s)
            .unwrap()
            .eval(&Rationals, &|n| (n == "x").then(|| rat(x, 1)))
            .unwrap()
    }

    #[test]
    fn precedence() {
        assert_eq!(ev("-x^2", 3), rat(-9, 1));
        assert_eq!(ev("2x^2+1/4", 3), rat(73, 4));
        assert_eq!(ev("(x+1)(x-1)", 3), rat(8, 1));
        assert_eq!(ev("x^-1", 4), rat(1, 4));
        assert_eq!(ev("x^(-2)", 2), rat(1, 4));
        assert_eq!(ev("1 - 2 - 3", 0), rat(-4, 1));
        assert_eq!(ev("12/4/3", 0), rat(1, 1));
    }

    #[test]
    fn errors() {
        assert!(matches!(Expr::parse("x +"), Err(Error::Parse { .. })));
        assert!(matches!(Expr::parse("(x"), Err(Error::Parse { .. })));
        let e = Expr::parse("y").unwrap().eval(&Rationals, &|_| None);
        assert_eq!(e, Err(Error::UnknownVariable("y".into())));
        let e = Expr::parse("1/(x-x)").unwrap().eval(&Rationals, &|_| Some(rat(1, 1)));
        assert!(matches!(e, Err(Error::DivisionByZero(_))));
    }

    #[test]
    fn definitions() {
        let d = Definitions::parse(&[("a", "x+1"), ("b", "a^2")]).unwrap();
        let env = d.bind(&Rationals, &[("x".into(), rat(2, 1))]).unwrap();
        assert_eq!(lookup(&env, "b"), Some(rat(9, 1)));
        assert_eq!(Expr::parse("x*y+z").unwrap().variables().len(), 3);
    }

    #[test]
    fn zero_literal_is_rational() {
        assert!(ev("0", 1).is_zero());
    }
}
