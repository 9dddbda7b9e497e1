//! Kodaira fiber types at every place of `ℚ(t)`, from the valuations of `c4`, `c6`
//! and `Δ` on a minimal model (residue characteristic 0).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::curve::FnFieldCurve;
use super::poly::{factor, is_irreducible, Poly};
use crate::error::{Error, Result};
use crate::mwl::Kodaira;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    /// A monic irreducible polynomial.
    Finite(Poly),
    Infinity,
}

impl Place {
    pub fn finite(p: Poly) -> Result<Self> {
        if p.is_constant() {
            return Err(Error::InvalidPlace("constant polynomial".into()));
        }
        let p = p.monic();
        if !is_irreducible(&p)? {
            return Err(Error::InvalidPlace(format!("{} is reducible", p.to_string_in("t"))));
        }
        Ok(Place::Finite(p))
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.degree().unwrap_or(0),
            Place::Infinity => 1,
        }
    }

    pub fn to_string_in(&self, var: &str) -> String {
        match self {
            Place::Finite(p) => p.to_string_in(var),
            Place::Infinity => "inf".into(),
        }
    }
}

/// Valuation of a possibly vanishing invariant; `None` is `+∞`.
pub type Val = Option<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaceFiber {
    pub place: Place,
    pub kodaira: Kodaira,
    /// `(v(c4), v(c6), v(Δ))` on the minimal model.
    pub valuations: (Val, Val, u32),
}

impl PlaceFiber {
    /// Euler number counted over `ℂ`: a place of degree `d` carries `d` fibers.
    pub fn euler_contribution(&self) -> u32 {
        self.kodaira.euler_number() * self.place.degree() as u32
    }
}

impl fmt::Display for PlaceFiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.place.to_string_in("t"), self.kodaira)
    }
}

fn at_least(v: Val, k: u32) -> bool {
    v.is_none_or(|x| x >= k)
}

fn minus(v: Val, k: u32) -> Val {
    v.map(|x| x - k)
}

/// Strips `(4, 6, 12)` while the model is not minimal.
pub fn minimalize(c4: Val, c6: Val, d: u32) -> (Val, Val, u32) {
    let (mut a, mut b, mut d) = (c4, c6, d);
    while at_least(a, 4) && at_least(b, 6) && d >= 12 {
        a = minus(a, 4);
        b = minus(b, 6);
        d -= 12;
    }
    (a, b, d)
}

/// The residue-characteristic-0 table on a minimal model.
pub fn classify(c4: Val, c6: Val, d: u32) -> Result<Kodaira> {
    let bad = || Error::InvalidPlace(format!("valuations ({c4:?}, {c6:?}, {d}) fit no Kodaira type"));
    if d == 0 {
        return Ok(Kodaira::I(0));
    }
    if c4 == Some(0) {
        return if c6 == Some(0) { Ok(Kodaira::I(d)) } else { Err(bad()) };
    }
    if c4 == Some(2) && c6 == Some(3) && d >= 6 {
        return Ok(Kodaira::IStar(d - 6));
    }
    Ok(match d {
        2 => Kodaira::II,
        3 => Kodaira::III,
        4 => Kodaira::IV,
        6 => Kodaira::IStar(0),
        8 => Kodaira::IVStar,
        9 => Kodaira::IIIStar,
        10 => Kodaira::IIStar,
        _ => return Err(bad()),
    })
}

/// Smallest `k` with `deg a_i ≤ k·i`, the weight of the model at infinity.
pub fn weight_at_infinity(c: &FnFieldCurve) -> u32 {
    let weights = [1u32, 2, 3, 4, 6];
    c.a.iter()
        .zip(weights)
        .filter_map(|(p, w)| p.degree().map(|d| (d as u32).div_ceil(w)))
        .max()
        .unwrap_or(0)
}

/// Valuations at infinity after `t = 1/s` and the weight-`k` rescaling.
fn valuations_at_infinity(c: &FnFieldCurve) -> (Val, Val, u32) {
    let k = weight_at_infinity(c);
    let v = |p: &Poly, w: u32| p.degree().map(|d| w * k - d as u32);
    let d = v(&c.discriminant(), 12).expect("nonzero discriminant");
    (v(&c.c4(), 4), v(&c.c6(), 6), d)
}

fn valuations_at(c: &FnFieldCurve, p: &Poly) -> (Val, Val, u32) {
    let d = c.discriminant().valuation(p).expect("nonzero discriminant");
    (c.c4().valuation(p), c.c6().valuation(p), d)
}

pub fn kodaira_at(c: &FnFieldCurve, place: &Place) -> Result<PlaceFiber> {
    let (a, b, d) = match place {
        Place::Finite(p) => valuations_at(c, p),
        Place::Infinity => valuations_at_infinity(c),
    };
    let (a, b, d) = minimalize(a, b, d);
    Ok(PlaceFiber {
        place: place.clone(),
        kodaira: classify(a, b, d)?,
        valuations: (a, b, d),
    })
}

/// Every singular fiber: the irreducible factors of `Δ` and the place at infinity.
pub fn singular_fibers(c: &FnFieldCurve) -> Result<Vec<PlaceFiber>> {
    let mut places: Vec<Poly> = factor(&c.discriminant())?.into_iter().map(|(p, _)| p).collect();
    places.sort_by(|a, b| {
        let key = |p: &Poly| (p.degree(), -p.coeff(0));
        key(a).cmp(&key(b)).then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    let mut out = Vec::new();
    for p in places {
        let f = kodaira_at(c, &Place::Finite(p))?;
        if f.kodaira.is_singular() {
            out.push(f);
        }
    }
    let inf = kodaira_at(c, &Place::Infinity)?;
    if inf.kodaira.is_singular() {
        out.push(inf);
    }
    Ok(out)
}

pub fn euler_sum(fibers: &[PlaceFiber]) -> u32 {
    fibers.iter().map(PlaceFiber::euler_contribution).sum()
}
