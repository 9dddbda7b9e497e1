//! Dense univariate polynomials and rational functions over ℚ.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{rat_int, rat_to_string, Int, Rat};
use crate::error::{Error, Result};

/// `c[0] + c[1]·t + …`, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    c: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(r: Rat) -> Self {
        Self::from_coeffs(vec![r])
    }

    /// The variable `t`.
    pub fn var() -> Self {
        Self::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// `t - r`.
    pub fn linear(r: &Rat) -> Self {
        Self::from_coeffs(vec![-r.clone(), Rat::one()])
    }

    pub fn from_coeffs(mut c: Vec<Rat>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| Rat::from_integer(Int::from(x))).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.c.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rat {
        self.c.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for a in self.c.iter().rev() {
            acc = acc * t + a;
        }
        acc
    }

    pub fn scale(&self, r: &Rat) -> Self {
        Self::from_coeffs(self.c.iter().map(|a| a * r).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&(Rat::one() / self.lead()))
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, a)| a * Rat::from_integer(Int::from(i)))
                .collect(),
        )
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::from_coeffs((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Poly {
            c: self.c.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![Rat::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coeffs(c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `self(g(t))`.
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Self::zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(g).add(&Self::constant(a.clone()));
        }
        acc
    }

    /// `t^n · self(1/t)`; requires `n ≥ deg`.
    pub fn reversed(&self, n: usize) -> Self {
        let mut c = vec![Rat::zero(); n + 1];
        for (i, a) in self.c.iter().enumerate() {
            c[n - i] = a.clone();
        }
        Self::from_coeffs(c)
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let Some(dd) = d.degree() else {
            return Err(Error::DivisionByZero("polynomial division by zero".into()));
        };
        let mut r = self.c.clone();
        let inv = Rat::one() / d.lead();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let f = &r[k + dd] * &inv;
            if !f.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    r[k + j] -= &f * b;
                }
            }
            q[k] = f;
        }
        r.truncate(dd);
        Ok((Self::from_coeffs(q), Self::from_coeffs(r)))
    }

    /// Exact quotient, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d).ok()?;
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero if both are zero), via a primitive remainder sequence over ℤ.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        let prim = |p: &Poly| Poly::from_coeffs(p.primitive_part().iter().map(rat_int).collect());
        let (mut a, mut b) = (prim(self), prim(o));
        if a.degree() < b.degree() {
            core::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { prim(&r) };
        }
        a.monic()
    }

    /// `lc(d)^(deg − deg d + 1) · self mod d`, computed without fractions for integral input.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("nonzero divisor");
        let lc = d.lead();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let f = r.lead();
            let mut shifted = vec![Rat::zero(); rd - dd];
            shifted.extend(d.c.iter().map(|c| c * &f));
            r = r.scale(&lc).sub(&Poly::from_coeffs(shifted));
        }
        r
    }

    /// Multiplicity of `p` in `self`; `None` for the zero polynomial.
    pub fn valuation(&self, p: &Self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut v = 0;
        let mut f = self.clone();
        while let Some(q) = f.div_exact(p) {
            f = q;
            v += 1;
        }
        Some(v)
    }

    /// Primitive integer polynomial with positive leading coefficient, same roots.
    pub fn primitive_part(&self) -> Vec<Int> {
        let den = self.c.iter().fold(Int::one(), |acc, a| acc.lcm(a.denom()));
        let mut v: Vec<Int> = self.c.iter().map(|a| (a * rat_int(&den)).to_integer()).collect();
        let g = v.iter().fold(Int::zero(), |acc, a| acc.gcd(a));
        if !g.is_zero() {
            for a in v.iter_mut() {
                *a = &*a / &g;
            }
        }
        if v.last().is_some_and(|a| a.is_negative()) {
            for a in v.iter_mut() {
                *a = -&*a;
            }
        }
        v
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let neg = a.is_negative();
            let mag = a.abs();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.into(),
                _ => format!("{var}^{i}"),
            };
            if mono.is_empty() {
                s.push_str(&rat_to_string(&mag));
            } else if mag.is_one() {
                s.push_str(&mono);
            } else {
                let _ = write!(s, "{}*{mono}", rat_to_string(&mag));
            }
        }
        s
    }
}

/// `num/den`, reduced, with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: Poly,
    den: Poly,
}

impl RatFn {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero("rational function with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let l = Rat::one() / den.lead();
        Ok(RatFn {
            num: num.scale(&l),
            den: den.scale(&l),
        })
    }

    pub fn zero() -> Self {
        RatFn {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFn { num: p, den: Poly::one() }
    }

    pub fn constant(r: Rat) -> Self {
        Self::from_poly(Poly::constant(r))
    }

    pub fn var() -> Self {
        Self::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial, if the denominator is constant.
    pub fn as_poly(&self) -> Option<Poly> {
        self.den.is_constant().then(|| self.num.scale(&(Rat::one() / self.den.lead())))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone()).expect("nonzero");
        }
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den)).expect("nonzero")
    }

    pub fn neg(&self) -> Self {
        RatFn {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("inverse of the zero function".into()));
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Ok(RatFn {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Value at `t`, or `None` at a pole.
    pub fn eval(&self, t: &Rat) -> Option<Rat> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(t) / d)
    }

    /// `self(g)` for a rational function `g`.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        let ev = |p: &Poly| {
            let mut acc = Self::zero();
            for a in p.coeffs().iter().rev() {
                acc = acc.mul(g).add(&Self::constant(a.clone()));
            }
            acc
        };
        ev(&self.num).div(&ev(&self.den))
    }

    pub fn to_string_in(&self, var: &str) -> String {
        if self.den.is_one_poly() {
            return self.num.to_string_in(var);
        }
        format!("({})/({})", self.num.to_string_in(var), self.den.to_string_in(var))
    }
}

impl Poly {
    fn is_one_poly(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }
}

/// Yun's square-free decomposition: `(f_i, i)` with `self = c · ∏ f_i^i`.
pub fn squarefree_decomposition(p: &Poly) -> Vec<(Poly, u32)> {
    let mut out = Vec::new();
    if p.is_constant() {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_exact(&a0).expect("gcd divides");
    let mut c = dp.div_exact(&a0).expect("gcd divides");
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        b = b.div_exact(&a).expect("gcd divides");
        c = d.div_exact(&a).expect("gcd divides");
        d = c.sub(&b.derivative());
        if !a.is_constant() {
            out.push((a.monic(), i));
        }
        i += 1;
    }
    out
}

fn divisors(n: &Int) -> Vec<Int> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = Int::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let e = &n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1;
    }
    out
}

/// Rational roots of a nonzero polynomial.
pub fn rational_roots(p: &Poly) -> Vec<Rat> {
    let mut f = p.clone();
    let mut roots = Vec::new();
    while f.degree().is_some_and(|d| d > 0) && f.coeff(0).is_zero() {
        if !roots.contains(&Rat::zero()) {
            roots.push(Rat::zero());
        }
        f = f.div_exact(&Poly::var()).expect("t divides");
    }
    if f.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let z = f.primitive_part();
    let (a0, an) = (z[0].clone(), z[z.len() - 1].clone());
    for q in divisors(&an) {
        for num in divisors(&a0) {
            for s in [Int::one(), -Int::one()] {
                let r = Rat::new(&s * &num, q.clone());
                if !roots.contains(&r) && f.eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn lagrange(xs: &[Rat], ys: &[Rat]) -> Poly {
    let mut acc = Poly::zero();
    for i in 0..xs.len() {
        let mut term = Poly::constant(ys[i].clone());
        for j in 0..xs.len() {
            if i != j {
                term = term.mul(&Poly::linear(&xs[j])).scale(&(Rat::one() / (&xs[i] - &xs[j])));
            }
        }
        acc = acc.add(&term);
    }
    acc
}

const KRONECKER_LIMIT: usize = 2_000_000;

/// A nontrivial factor of a square-free polynomial without rational roots (Kronecker).
fn kronecker_factor(p: &Poly) -> Result<Option<Poly>> {
    let n = p.degree().unwrap_or(0);
    let z = Poly::from_coeffs(p.primitive_part().iter().map(rat_int).collect());
    let mut xs: Vec<Rat> = Vec::new();
    let mut k = 0i64;
    while xs.len() <= n / 2 {
        for cand in [k, -k] {
            let r = Rat::from_integer(Int::from(cand));
            if !xs.contains(&r) && xs.len() <= n / 2 {
                xs.push(r);
            }
        }
        k += 1;
    }
    let divs: Vec<Vec<Rat>> = xs
        .iter()
        .map(|x| {
            let v = z.eval(x).to_integer();
            divisors(&v)
                .into_iter()
                .flat_map(|d| [rat_int(&d), -rat_int(&d)])
                .collect()
        })
        .collect();
    for m in 2..=n / 2 {
        let pts = &xs[..=m];
        let total: usize = divs[..=m].iter().map(|d| d.len()).product();
        if total > KRONECKER_LIMIT {
            return Err(Error::InvalidPlace(format!(
                "cannot decide irreducibility of a degree {n} factor"
            )));
        }
        let mut idx = vec![0usize; m + 1];
        loop {
            let ys: Vec<Rat> = idx.iter().enumerate().map(|(i, &j)| divs[i][j].clone()).collect();
            let g = lagrange(pts, &ys);
            if g.degree() == Some(m) && g.coeffs().iter().all(|c| c.is_integer()) {
                if let Some(q) = z.div_exact(&g) {
                    if q.coeffs().iter().all(|c| c.is_integer()) {
                        return Ok(Some(g.monic()));
                    }
                }
            }
            let mut i = 0;
            loop {
                if i > m {
                    break;
                }
                idx[i] += 1;
                if idx[i] < divs[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
            if i > m {
                break;
            }
        }
    }
    Ok(None)
}

fn split_irreducible(p: &Poly, out: &mut Vec<Poly>) -> Result<()> {
    if p.is_constant() {
        return Ok(());
    }
    match kronecker_factor(p)? {
        Some(g) => {
            let q = p.div_exact(&g).expect("factor divides");
            split_irreducible(&g, out)?;
            split_irreducible(&q.monic(), out)
        }
        None => {
            out.push(p.monic());
            Ok(())
        }
    }
}

/// Monic irreducible factors over ℚ with multiplicities, linear factors first.
pub fn factor(p: &Poly) -> Result<Vec<(Poly, u32)>> {
    let mut out = Vec::new();
    for (f, m) in squarefree_decomposition(p) {
        let mut rest = f;
        for r in rational_roots(&rest) {
            let l = Poly::linear(&r);
            rest = rest.div_exact(&l).expect("root");
            out.push((l, m));
        }
        let mut irr = Vec::new();
        split_irreducible(&rest, &mut irr)?;
        out.extend(irr.into_iter().map(|g| (g, m)));
    }
    out.sort_by(|a, b| {
        (a.0.degree(), a.0.coeffs().iter().rev().collect::<Vec<_>>())
            .cmp(&(b.0.degree(), b.0.coeffs().iter().rev().collect::<Vec<_>>()))
    });
    Ok(out)
}

pub fn is_irreducible(p: &Poly) -> Result<bool> {
    let f = factor(p)?;
    Ok(f.len() == 1 && f[0].1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn arithmetic() {
        let p = Poly::from_i64(&[-1, 0, 1]);
        let q = Poly::from_i64(&[1, 1]);
        assert_eq!(p.div_exact(&q), Some(Poly::from_i64(&[-1, 1])));
        assert_eq!(p.gcd(&Poly::from_i64(&[-1, 0, 0, 1])), Poly::from_i64(&[-1, 1]));
        assert_eq!(p.valuation(&q), Some(1));
        assert_eq!(p.to_string_in("u"), "u^2 - 1");
        assert_eq!(Poly::from_i64(&[1, 2]).reversed(2), Poly::from_i64(&[0, 2, 1]));
        let f = RatFn::new(p.clone(), q.mul(&q)).unwrap();
        assert_eq!(f.num(), &Poly::from_i64(&[-1, 1]));
        assert_eq!(f.den(), &q);
    }

    #[test]
    fn factorization() {
        let t = Poly::var();
        let one = Poly::one();
        let d = t
            .pow(2)
            .mul(&t.sub(&one).pow(6))
            .mul(&t.add(&one).pow(6))
            .mul(&t.sub(&Poly::from_i64(&[3])).pow(2))
            .scale(&rat(-7, 3));
        let f = factor(&d).unwrap();
        let mut lin: Vec<(Rat, u32)> = f.iter().map(|(p, m)| (-p.coeff(0), *m)).collect();
        lin.sort();
        assert_eq!(lin, [(rat(-1, 1), 6), (rat(0, 1), 2), (rat(1, 1), 6), (rat(3, 1), 2)]);
        let sextic = Poly::from_i64(&[3, 0, 179, 0, -35, 0, 1]);
        assert!(is_irreducible(&sextic).unwrap());
        let quad = Poly::from_i64(&[1, 1, 1]);
        let prod = quad.mul(&Poly::from_i64(&[-2, 0, 1]));
        let f = factor(&prod).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f[0].0, Poly::from_i64(&[-2, 0, 1]));
    }
}
