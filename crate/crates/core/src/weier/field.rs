//! Function field of a Weierstrass curve over `ℚ(s)`: elements `(a + b·Y)/d` with
//! `a, b, d ∈ ℤ[s, x]`, reduced with `Y² = f − h·Y`.

use alloc::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::expr::Ring;
use super::poly::{Poly, RatFn};
use crate::arith::{Int, Rat};
use crate::error::{Error, Result};

/// Integer polynomial in `s` and `x`; keys are `(deg_x, deg_s)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MPoly {
    t: BTreeMap<(u32, u32), Int>,
}

impl MPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Int) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(dx: u32, ds: u32, c: Int) -> Self {
        let mut t = BTreeMap::new();
        if !c.is_zero() {
            t.insert((dx, ds), c);
        }
        MPoly { t }
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_empty()
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }

    /// `Σ p_i(s)·x^i` from integer-coefficient polynomials in `s`, each scaled by `den`.
    pub fn from_univariate_in_s(p: &Poly, dx: u32, den: &Int) -> Self {
        let mut out = Self::zero();
        for (j, c) in p.coeffs().iter().enumerate() {
            let v = c * Rat::from_integer(den.clone());
            debug_assert!(v.is_integer());
            if !v.is_zero() {
                out.t.insert((dx, j as u32), v.to_integer());
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut t = self.t.clone();
        for (k, c) in &o.t {
            let e = t.entry(*k).or_insert_with(Int::zero);
            *e += c;
            if e.is_zero() {
                t.remove(k);
            }
        }
        MPoly { t }
    }

    pub fn neg(&self) -> Self {
        MPoly {
            t: self.t.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Int) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly {
            t: self.t.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (a, b) = if self.t.len() <= o.t.len() { (self, o) } else { (o, self) };
        let mut t: BTreeMap<(u32, u32), Int> = BTreeMap::new();
        for (ka, ca) in &a.t {
            for (kb, cb) in &b.t {
                let k = (ka.0 + kb.0, ka.1 + kb.1);
                match t.get_mut(&k) {
                    Some(e) => *e += ca * cb,
                    None => {
                        t.insert(k, ca * cb);
                    }
                }
            }
        }
        t.retain(|_, c| !c.is_zero());
        MPoly { t }
    }

    /// Exact quotient in `ℤ[s, x]`, if there is one.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (kd, cd) = d.t.last_key_value()?;
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some((k, c)) = r.t.last_key_value() {
            if k.0 < kd.0 || k.1 < kd.1 {
                return None;
            }
            let (qc, rem) = c.div_rem(cd);
            if !rem.is_zero() {
                return None;
            }
            let m = Self::monomial(k.0 - kd.0, k.1 - kd.1, qc);
            r = r.sub(&m.mul(d));
            q = q.add(&m);
        }
        Some(q)
    }

    fn content_gcd(&self, acc: Int) -> Int {
        self.t.values().fold(acc, |g, c| g.gcd(c))
    }

    fn lead_sign(&self) -> bool {
        self.t.last_key_value().is_some_and(|(_, c)| c.is_negative())
    }
}

/// `(a + b·Y)/d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elem {
    pub a: MPoly,
    pub b: MPoly,
    pub d: MPoly,
}

impl Elem {
    fn normalized(mut self) -> Self {
        let g = self.d.content_gcd(self.b.content_gcd(self.a.content_gcd(Int::zero())));
        let g = if self.d.lead_sign() { -g } else { g };
        if !g.is_one() && !g.is_zero() {
            let div = |p: &MPoly| MPoly {
                t: p.t.iter().map(|(k, c)| (*k, c / &g)).collect(),
            };
            self.a = div(&self.a);
            self.b = div(&self.b);
            self.d = div(&self.d);
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Total number of stored terms.
    pub fn size(&self) -> usize {
        self.a.len() + self.b.len() + self.d.len()
    }
}

/// `Q(s)(x)[Y] / (Y² + h·Y − f)` for `h = (a1·x + a3)`, `f = x³ + a2·x² + a4·x + a6`,
/// stored as `h = hn/c`, `f = fn/c`.
#[derive(Clone, Debug)]
pub struct FunctionField {
    hn: MPoly,
    fn_: MPoly,
    c: Int,
}

impl FunctionField {
    /// From the five coefficients `[a1, a2, a3, a4, a6]`.
    pub fn new(a: &[Poly; 5]) -> Self {
        let c = a
            .iter()
            .flat_map(|p| p.coeffs().iter())
            .fold(Int::one(), |acc, r| acc.lcm(r.denom()));
        let u = |p: &Poly, dx| MPoly::from_univariate_in_s(p, dx, &c);
        let hn = u(&a[0], 1).add(&u(&a[2], 0));
        let fn_ = MPoly::monomial(3, 0, c.clone())
            .add(&u(&a[1], 2))
            .add(&u(&a[3], 1))
            .add(&u(&a[4], 0));
        FunctionField { hn, fn_, c }
    }

    /// The parameter `s`.
    pub fn s(&self) -> Elem {
        self.poly(MPoly::monomial(0, 1, Int::one()))
    }

    pub fn x(&self) -> Elem {
        self.poly(MPoly::monomial(1, 0, Int::one()))
    }

    pub fn y(&self) -> Elem {
        Elem {
            a: MPoly::zero(),
            b: MPoly::constant(Int::one()),
            d: MPoly::constant(Int::one()),
        }
    }

    fn poly(&self, a: MPoly) -> Elem {
        Elem {
            a,
            b: MPoly::zero(),
            d: MPoly::constant(Int::one()),
        }
    }

    /// Embeds a rational function of the parameter.
    pub fn from_ratfn(&self, f: &RatFn) -> Elem {
        let one = Int::one();
        let den_l = f.num().coeffs().iter().chain(f.den().coeffs()).fold(one, |acc, r| acc.lcm(r.denom()));
        let n = MPoly::from_univariate_in_s(f.num(), 0, &den_l);
        let d = MPoly::from_univariate_in_s(f.den(), 0, &den_l);
        Elem { a: n, b: MPoly::zero(), d }.normalized()
    }

    /// Value of a polynomial in the parameter at `e` (Horner).
    pub fn eval_poly(&self, p: &Poly, e: &Elem) -> Elem {
        let mut acc = self.constant(&Rat::zero());
        for c in p.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, e), &self.constant(c));
        }
        acc
    }

    fn add_num(&self, a: &Elem, b: &Elem, sign: bool) -> Elem {
        let signed = |p: &MPoly| if sign { p.clone() } else { p.neg() };
        if a.d == b.d {
            return Elem {
                a: a.a.add(&signed(&b.a)),
                b: a.b.add(&signed(&b.b)),
                d: a.d.clone(),
            }
            .normalized();
        }
        if let Some(q) = b.d.div_exact(&a.d) {
            return Elem {
                a: a.a.mul(&q).add(&signed(&b.a)),
                b: a.b.mul(&q).add(&signed(&b.b)),
                d: b.d.clone(),
            }
            .normalized();
        }
        if let Some(q) = a.d.div_exact(&b.d) {
            return Elem {
                a: a.a.add(&signed(&b.a.mul(&q))),
                b: a.b.add(&signed(&b.b.mul(&q))),
                d: a.d.clone(),
            }
            .normalized();
        }
        Elem {
            a: a.a.mul(&b.d).add(&signed(&b.a.mul(&a.d))),
            b: a.b.mul(&b.d).add(&signed(&b.b.mul(&a.d))),
            d: a.d.mul(&b.d),
        }
        .normalized()
    }

    /// `(a1 + b1·Y)(a2 + b2·Y)` scaled by `c`.
    fn mul_num(&self, a1: &MPoly, b1: &MPoly, a2: &MPoly, b2: &MPoly) -> (MPoly, MPoly) {
        let bb = b1.mul(b2);
        let a = a1.mul(a2).scale(&self.c).add(&bb.mul(&self.fn_));
        let b = a1.mul(b2).add(&a2.mul(b1)).scale(&self.c).sub(&bb.mul(&self.hn));
        (a, b)
    }
}

impl Ring for FunctionField {
    type E = Elem;

    fn constant(&self, r: &Rat) -> Elem {
        Elem {
            a: MPoly::constant(r.numer().clone()),
            b: MPoly::zero(),
            d: MPoly::constant(r.denom().clone()),
        }
    }

    fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.add_num(a, b, true)
    }

    fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add_num(a, b, false)
    }

    fn neg(&self, a: &Elem) -> Elem {
        Elem {
            a: a.a.neg(),
            b: a.b.neg(),
            d: a.d.clone(),
        }
    }

    fn mul(&self, x: &Elem, y: &Elem) -> Elem {
        if x.b.is_zero() && y.b.is_zero() {
            return Elem {
                a: x.a.mul(&y.a),
                b: MPoly::zero(),
                d: x.d.mul(&y.d),
            }
            .normalized();
        }
        let (a, b) = self.mul_num(&x.a, &x.b, &y.a, &y.b);
        Elem {
            a,
            b,
            d: x.d.mul(&y.d).scale(&self.c),
        }
        .normalized()
    }

    fn div(&self, x: &Elem, y: &Elem) -> Result<Elem> {
        if y.is_zero() {
            return Err(Error::DivisionByZero("function-field division by zero".into()));
        }
        if y.b.is_zero() {
            return Ok(Elem {
                a: x.a.mul(&y.d),
                b: x.b.mul(&y.d),
                d: x.d.mul(&y.a),
            }
            .normalized());
        }
        // 1/(a + bY) = (c·a − b·hn − c·b·Y) / (c·a² − a·b·hn − b²·fn)
        let (a, b) = (&y.a, &y.b);
        let conj_a = a.scale(&self.c).sub(&b.mul(&self.hn));
        let conj_b = b.scale(&self.c).neg();
        let norm = a
            .mul(a)
            .scale(&self.c)
            .sub(&a.mul(b).mul(&self.hn))
            .sub(&b.mul(b).mul(&self.fn_));
        let (na, nb) = self.mul_num(&x.a, &x.b, &conj_a, &conj_b);
        Ok(Elem {
            a: na.mul(&y.d),
            b: nb.mul(&y.d),
            d: x.d.mul(&norm).scale(&self.c),
        }
        .normalized())
    }

    fn is_zero(&self, a: &Elem) -> bool {
        a.is_zero()
    }
}

/// `ℚ(z)` as a [`Ring`], for parametrized curves and coefficient expressions.
pub struct UnivariateField;

impl Ring for UnivariateField {
    type E = RatFn;
    fn constant(&self, r: &Rat) -> RatFn {
        RatFn::constant(r.clone())
    }
    fn add(&self, a: &RatFn, b: &RatFn) -> RatFn {
        a.add(b)
    }
    fn sub(&self, a: &RatFn, b: &RatFn) -> RatFn {
        a.sub(b)
    }
    fn mul(&self, a: &RatFn, b: &RatFn) -> RatFn {
        a.mul(b)
    }
    fn neg(&self, a: &RatFn) -> RatFn {
        a.neg()
    }
    fn div(&self, a: &RatFn, b: &RatFn) -> Result<RatFn> {
        a.div(b)
    }
    fn is_zero(&self, a: &RatFn) -> bool {
        a.is_zero()
    }
    fn pow(&self, a: &RatFn, e: i64) -> Result<RatFn> {
        a.pow(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn eu() -> FunctionField {
        FunctionField::new(&[
            Poly::from_i64(&[3, 0, 1]),
            Poly::zero(),
            Poly::from_i64(&[1, 0, -2, 0, 1]),
            Poly::zero(),
            Poly::zero(),
        ])
    }

    #[test]
    fn y_satisfies_the_equation() {
        let k = eu();
        let (x, y, s) = (k.x(), k.y(), k.s());
        let h = k.add(&k.mul(&k.eval_poly(&Poly::from_i64(&[3, 0, 1]), &s), &x), &k.eval_poly(&Poly::from_i64(&[1, 0, -2, 0, 1]), &s));
        let lhs = k.add(&k.mul(&y, &y), &k.mul(&h, &y));
        let rhs = k.mul(&k.mul(&x, &x), &x);
        assert!(k.sub(&lhs, &rhs).is_zero());
    }

    #[test]
    fn inverse_of_y() {
        let k = eu();
        let y = k.y();
        let inv = k.div(&k.constant(&rat(1, 1)), &y).unwrap();
        let one = k.mul(&inv, &y);
        assert!(k.sub(&one, &k.constant(&rat(1, 1))).is_zero());
        let half = k.constant(&rat(1, 2));
        let t = k.mul(&half, &k.add(&y, &k.x()));
        let back = k.div(&t, &half).unwrap();
        assert!(k.sub(&back, &k.add(&y, &k.x())).is_zero());
    }

    #[test]
    fn exact_division() {
        let p = MPoly::monomial(1, 0, 2.into()).add(&MPoly::monomial(0, 1, 3.into()));
        let q = p.mul(&p).mul(&MPoly::monomial(0, 2, (-1).into()));
        assert_eq!(q.div_exact(&p).unwrap().div_exact(&p), Some(MPoly::monomial(0, 2, (-1).into())));
        assert_eq!(p.div_exact(&q), None);
    }
}
