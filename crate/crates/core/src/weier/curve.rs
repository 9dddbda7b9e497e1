//! Weierstrass curves over `ℚ(t)`, their points and the chord-tangent group law.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::expr::{Expr, Ring};
use super::field::UnivariateField;
use super::poly::{Poly, RatFn};
use crate::arith::{int, Rat};
use crate::error::{Error, Result};

/// `y² + a1·x·y + a3·y = x³ + a2·x² + a4·x + a6` with `a_i ∈ ℚ[param]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FnFieldCurve {
    pub name: String,
    pub param: String,
    pub xvar: String,
    pub yvar: String,
    /// `[a1, a2, a3, a4, a6]`.
    pub a: [Poly; 5],
}

impl FnFieldCurve {
    pub fn new(name: &str, param: &str, a: [Poly; 5]) -> Result<Self> {
        let c = FnFieldCurve {
            name: name.into(),
            param: param.into(),
            xvar: "x".into(),
            yvar: "y".into(),
            a,
        };
        if c.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(c)
    }

    /// Parses the five coefficients as polynomials in `param`.
    pub fn parse(name: &str, param: &str, a: [&str; 5]) -> Result<Self> {
        let mut polys: [Poly; 5] = Default::default();
        for (slot, src) in polys.iter_mut().zip(a) {
            *slot = parse_poly(src, param)?;
        }
        Self::new(name, param, polys)
    }

    /// Renames the coordinates used in expressions.
    pub fn with_coordinates(mut self, x: &str, y: &str) -> Self {
        self.xvar = x.into();
        self.yvar = y.into();
        self
    }

    pub fn b2(&self) -> Poly {
        let [a1, a2, ..] = &self.a;
        a1.mul(a1).add(&a2.scale(&Rat::from(int(4))))
    }

    pub fn b4(&self) -> Poly {
        let [a1, _, a3, a4, _] = &self.a;
        a4.scale(&Rat::from(int(2))).add(&a1.mul(a3))
    }

    pub fn b6(&self) -> Poly {
        let [_, _, a3, _, a6] = &self.a;
        a3.mul(a3).add(&a6.scale(&Rat::from(int(4))))
    }

    pub fn b8(&self) -> Poly {
        let [a1, a2, a3, a4, a6] = &self.a;
        a1.mul(a1)
            .mul(a6)
            .add(&a2.mul(a6).scale(&Rat::from(int(4))))
            .sub(&a1.mul(a3).mul(a4))
            .add(&a2.mul(a3).mul(a3))
            .sub(&a4.mul(a4))
    }

    pub fn c4(&self) -> Poly {
        let (b2, b4) = (self.b2(), self.b4());
        b2.mul(&b2).sub(&b4.scale(&Rat::from(int(24))))
    }

    pub fn c6(&self) -> Poly {
        let (b2, b4, b6) = (self.b2(), self.b4(), self.b6());
        b2.pow(3)
            .neg()
            .add(&b2.mul(&b4).scale(&Rat::from(int(36))))
            .sub(&b6.scale(&Rat::from(int(216))))
    }

    pub fn discriminant(&self) -> Poly {
        let (b2, b4, b6, b8) = (self.b2(), self.b4(), self.b6(), self.b8());
        b2.mul(&b2)
            .mul(&b8)
            .neg()
            .sub(&b4.pow(3).scale(&Rat::from(int(8))))
            .sub(&b6.mul(&b6).scale(&Rat::from(int(27))))
            .add(&b2.mul(&b4).mul(&b6).scale(&Rat::from(int(9))))
    }

    /// `y² + a1·x·y + a3·y − (x³ + a2·x² + a4·x + a6)` in any ring.
    pub fn equation<R: Ring>(&self, ring: &R, x: &R::E, y: &R::E, t: &R::E) -> R::E {
        let a: Vec<R::E> = self.a.iter().map(|p| horner(ring, p, t)).collect();
        let xy = ring.mul(x, y);
        let lhs = ring.add(
            &ring.add(&ring.mul(y, y), &ring.mul(&a[0], &xy)),
            &ring.mul(&a[2], y),
        );
        let x2 = ring.mul(x, x);
        let rhs = ring.add(
            &ring.add(&ring.mul(&x2, x), &ring.mul(&a[1], &x2)),
            &ring.add(&ring.mul(&a[3], x), &a[4]),
        );
        ring.sub(&lhs, &rhs)
    }

    fn coeff_fns(&self) -> [RatFn; 5] {
        self.a.clone().map(RatFn::from_poly)
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => self.equation(&UnivariateField, x, y, &RatFn::var()).is_zero(),
        }
    }

    fn check(&self, p: &CurvePoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve(format!("{} on {}", p.to_string_in(&self.param), self.name)))
        }
    }

    /// Parses `x` and `y` as rational functions of the parameter and checks the point.
    pub fn point(&self, x: &str, y: &str) -> Result<CurvePoint> {
        let p = CurvePoint::Affine {
            x: parse_ratfn(x, &self.param)?,
            y: parse_ratfn(y, &self.param)?,
        };
        self.check(&p)?;
        Ok(p)
    }

    pub fn neg(&self, p: &CurvePoint) -> Result<CurvePoint> {
        self.check(p)?;
        Ok(self.neg_unchecked(p))
    }

    fn neg_unchecked(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => {
                let [a1, _, a3, _, _] = self.coeff_fns();
                CurvePoint::Affine {
                    x: x.clone(),
                    y: y.neg().sub(&a1.mul(x)).sub(&a3),
                }
            }
        }
    }

    /// `p + q`.
    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.check(p)?;
        self.check(q)?;
        self.add_unchecked(p, q)
    }

    fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return Ok(q.clone()),
            (_, CurvePoint::Infinity) => return Ok(p.clone()),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let [a1, a2, a3, a4, a6] = self.coeff_fns();
        let c = |n: i64| RatFn::constant(Rat::from(int(n)));
        let (lambda, nu) = if x1 == x2 {
            let s = y1.add(y2).add(&a1.mul(x2)).add(&a3);
            if s.is_zero() {
                return Ok(CurvePoint::Infinity);
            }
            let den = y1.mul(&c(2)).add(&a1.mul(x1)).add(&a3);
            let l = x1.mul(x1).mul(&c(3)).add(&a2.mul(x1).mul(&c(2))).add(&a4).sub(&a1.mul(y1));
            let n = x1
                .mul(x1)
                .mul(x1)
                .neg()
                .add(&a4.mul(x1))
                .add(&a6.mul(&c(2)))
                .sub(&a3.mul(y1));
            (l.div(&den)?, n.div(&den)?)
        } else {
            let dx = x2.sub(x1);
            (y2.sub(y1).div(&dx)?, y1.mul(x2).sub(&y2.mul(x1)).div(&dx)?)
        };
        let x3 = lambda.mul(&lambda).add(&a1.mul(&lambda)).sub(&a2).sub(x1).sub(x2);
        let y3 = lambda.add(&a1).mul(&x3).neg().sub(&nu).sub(&a3);
        Ok(CurvePoint::Affine { x: x3, y: y3 })
    }

    /// `n·p` for `n ≥ 0`.
    pub fn mul(&self, n: u32, p: &CurvePoint) -> Result<CurvePoint> {
        self.check(p)?;
        let mut acc = CurvePoint::Infinity;
        for _ in 0..n {
            acc = self.add_unchecked(&acc, p)?;
        }
        Ok(acc)
    }

    /// The fiber over `t`, as a curve over `ℚ`, when it is smooth.
    pub fn specialize(&self, t: &Rat) -> Option<FnFieldCurve> {
        if self.discriminant().eval(t).is_zero() {
            return None;
        }
        let a = self.a.clone().map(|p| Poly::constant(p.eval(t)));
        let c = FnFieldCurve::new(&self.name, &self.param, a).ok()?;
        Some(c.with_coordinates(&self.xvar, &self.yvar))
    }

    /// Order of `p`, or `None` if it has infinite order.
    ///
    /// `p` is specialized at a smooth fiber where it is defined. Torsion injects
    /// into smooth fibers and torsion over `ℚ` has order at most 12, so a specialized
    /// point with `n·p ≠ O` for all `n ≤ 12` proves infinite order.
    pub fn point_order(&self, p: &CurvePoint) -> Result<Option<u32>> {
        self.check(p)?;
        let CurvePoint::Affine { x, y } = p else {
            return Ok(Some(1));
        };
        let (fiber, q) = (2i64..)
            .find_map(|t| {
                let t = Rat::from(int(t));
                let c = self.specialize(&t)?;
                let q = CurvePoint::Affine {
                    x: RatFn::constant(x.eval(&t)?),
                    y: RatFn::constant(y.eval(&t)?),
                };
                Some((c, q))
            })
            .expect("only finitely many bad or polar fibers");
        let mut acc = q.clone();
        for n in 1..=12u32 {
            if acc == CurvePoint::Infinity {
                return Ok((self.mul(n, p)? == CurvePoint::Infinity).then_some(n));
            }
            acc = fiber.add_unchecked(&acc, &q)?;
        }
        Ok(None)
    }

    /// Subgroup generated by `gens`, if it has at most `limit` elements.
    pub fn torsion_structure(&self, gens: &[CurvePoint], limit: usize) -> Result<TorsionGroup> {
        for g in gens {
            self.check(g)?;
        }
        let mut elems = vec![CurvePoint::Infinity];
        let mut i = 0;
        while i < elems.len() {
            for g in gens {
                let s = self.add_unchecked(&elems[i], g)?;
                if !elems.contains(&s) {
                    if elems.len() >= limit {
                        return Err(Error::SubgroupTooLarge(limit));
                    }
                    elems.push(s);
                }
            }
            i += 1;
        }
        let n = elems.len();
        let mut table = vec![vec![0usize; n]; n];
        for a in 0..n {
            for b in a..n {
                let s = self.add_unchecked(&elems[a], &elems[b])?;
                let k = elems
                    .iter()
                    .position(|e| *e == s)
                    .ok_or_else(|| Error::NotOnCurve("sum left the generated set".into()))?;
                table[a][b] = k;
                table[b][a] = k;
            }
        }
        let all_on_curve = elems.iter().all(|p| self.contains(p));
        Ok(TorsionGroup {
            elements: elems,
            table,
            all_on_curve,
        })
    }
}

fn horner<R: Ring>(ring: &R, p: &Poly, t: &R::E) -> R::E {
    let mut acc = ring.constant(&Rat::zero());
    for c in p.coeffs().iter().rev() {
        acc = ring.add(&ring.mul(&acc, t), &ring.constant(c));
    }
    acc
}

pub(crate) fn parse_ratfn(src: &str, var: &str) -> Result<RatFn> {
    Expr::parse(src)?.eval(&UnivariateField, &|n| (n == var).then(RatFn::var))
}

pub(crate) fn parse_poly(src: &str, var: &str) -> Result<Poly> {
    parse_ratfn(src, var)?.as_poly().ok_or_else(|| Error::Parse {
        pos: 0,
        msg: format!("`{src}` is not a polynomial in {var}"),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: RatFn, y: RatFn },
}

impl CurvePoint {
    pub fn to_string_in(&self, var: &str) -> String {
        match self {
            CurvePoint::Infinity => "O".to_string(),
            CurvePoint::Affine { x, y } => format!("({}, {})", x.to_string_in(var), y.to_string_in(var)),
        }
    }
}

/// A finite subgroup with its full Cayley table; element 0 is the identity.
#[derive(Clone, Debug)]
pub struct TorsionGroup {
    pub elements: Vec<CurvePoint>,
    pub table: Vec<Vec<usize>>,
    pub all_on_curve: bool,
}

impl TorsionGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut acc = i;
        while acc != 0 {
            acc = self.table[acc][i];
            k += 1;
        }
        k
    }

    /// Exhaustive check of identity, inverses, commutativity and associativity.
    pub fn is_abelian_group(&self) -> bool {
        let n = self.order();
        let t = &self.table;
        (0..n).all(|a| t[0][a] == a)
            && (0..n).all(|a| (0..n).any(|b| t[a][b] == 0))
            && (0..n).all(|a| (0..n).all(|b| t[a][b] == t[b][a]))
            && (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
    }

    /// Invariant factors `d1 | d2 | …`, e.g. `[2, 6]` for `(ℤ/2)² × ℤ/3`.
    pub fn invariant_factors(&self) -> Vec<u64> {
        let n = self.order() as u64;
        let orders: Vec<u64> = (0..self.order()).map(|i| self.element_order(i) as u64).collect();
        let mut factors: Vec<u64> = Vec::new();
        let mut m = n;
        let mut p = 2;
        while m > 1 {
            if m.is_multiple_of(p) {
                let mut e = 0;
                while m.is_multiple_of(p) {
                    m /= p;
                    e += 1;
                }
                let count = |k: u32| orders.iter().filter(|&&o| p.pow(k) % o == 0).count() as u64;
                // number of cyclic factors of order ≥ p^k is log_p(|G[p^k]| / |G[p^(k−1)]|)
                let mut ranks = Vec::new();
                for k in 1..=e {
                    let ratio = count(k) / count(k - 1);
                    let mut r = 0;
                    let mut v = ratio;
                    while v > 1 {
                        v /= p;
                        r += 1;
                    }
                    ranks.push(r);
                }
                let total = ranks.first().copied().unwrap_or(0);
                while factors.len() < total {
                    factors.insert(0, 1);
                }
                for &r in &ranks {
                    let len = factors.len();
                    for f in factors[len - r..].iter_mut() {
                        *f *= p;
                    }
                }
            }
            p += 1;
        }
        factors
    }

    /// Orders of the primary cyclic factors, e.g. `[2, 2, 3]`.
    pub fn primary_factors(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for d in self.invariant_factors() {
            let mut m = d;
            let mut p = 2;
            while m > 1 {
                let mut q = 1;
                while m % p == 0 {
                    m /= p;
                    q *= p;
                }
                if q > 1 {
                    out.push(q);
                }
                p += 1;
            }
        }
        out.sort_unstable();
        out
    }
}
