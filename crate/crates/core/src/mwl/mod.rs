//! Shioda height pairing: Kodaira fiber types, per-fiber contributions, heights of
//! sections, sections built from glue cosets, and the section tables.

mod cosets;
pub mod qform;
pub mod tables;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::{self, rat, rat_int, Int, Rat, RatMatrix};
use crate::error::{Error, Result};
use crate::rootlat::{Family, RootType};

pub use cosets::{sections_from_cosets, CosetSection, CosetSections};
pub use qform::{qform_equivalent, QformOutcome};

/// Kodaira fiber types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kodaira {
    /// `I_n`, `n ≥ 0` (`I0` is a smooth fiber).
    I(u32),
    /// `I_n*`, `n ≥ 0`.
    IStar(u32),
    II,
    III,
    IV,
    IVStar,
    IIIStar,
    IIStar,
}

impl Kodaira {
    pub fn component_count(self) -> usize {
        match self {
            Kodaira::I(0) => 1,
            Kodaira::I(n) => n as usize,
            Kodaira::IStar(n) => n as usize + 5,
            Kodaira::II => 1,
            Kodaira::III => 2,
            Kodaira::IV => 3,
            Kodaira::IVStar => 7,
            Kodaira::IIIStar => 8,
            Kodaira::IIStar => 9,
        }
    }

    /// Topological Euler number of the fiber.
    pub fn euler_number(self) -> u32 {
        match self {
            Kodaira::I(n) => n,
            Kodaira::IStar(n) => n + 6,
            Kodaira::II => 2,
            Kodaira::III => 3,
            Kodaira::IV => 4,
            Kodaira::IVStar => 8,
            Kodaira::IIIStar => 9,
            Kodaira::IIStar => 10,
        }
    }

    pub fn is_singular(self) -> bool {
        self != Kodaira::I(0)
    }

    /// Root type of the components not meeting the zero section, if reducible.
    pub fn root_type(self) -> Option<RootType> {
        let t = |f, n| RootType::new(f, n).ok();
        match self {
            Kodaira::I(n) if n >= 2 => t(Family::A, n as usize - 1),
            Kodaira::IStar(n) => t(Family::D, n as usize + 4),
            Kodaira::III => t(Family::A, 1),
            Kodaira::IV => t(Family::A, 2),
            Kodaira::IVStar => t(Family::E, 6),
            Kodaira::IIIStar => t(Family::E, 7),
            Kodaira::IIStar => t(Family::E, 8),
            _ => None,
        }
    }
}

impl fmt::Display for Kodaira {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kodaira::I(n) => write!(f, "I{n}"),
            Kodaira::IStar(n) => write!(f, "I{n}*"),
            Kodaira::II => write!(f, "II"),
            Kodaira::III => write!(f, "III"),
            Kodaira::IV => write!(f, "IV"),
            Kodaira::IVStar => write!(f, "IV*"),
            Kodaira::IIIStar => write!(f, "III*"),
            Kodaira::IIStar => write!(f, "II*"),
        }
    }
}

impl FromStr for Kodaira {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse {
            pos: 0,
            msg: format!("unknown Kodaira type {s:?}"),
        };
        Ok(match s {
            "II" => Kodaira::II,
            "III" => Kodaira::III,
            "IV" => Kodaira::IV,
            "IV*" => Kodaira::IVStar,
            "III*" => Kodaira::IIIStar,
            "II*" => Kodaira::IIStar,
            _ => {
                let rest = s.strip_prefix('I').ok_or_else(bad)?;
                match rest.strip_suffix('*') {
                    Some(n) => Kodaira::IStar(n.parse().map_err(|_| bad())?),
                    None => Kodaira::I(rest.parse().map_err(|_| bad())?),
                }
            }
        })
    }
}

/// `A_{n−1} ↦ I_n`, `D_{n+4} ↦ I_n*`, `E6 ↦ IV*`, `E7 ↦ III*`, `E8 ↦ II*`.
pub fn dictionary_ade_kodaira(ty: RootType) -> Kodaira {
    match (ty.family, ty.rank) {
        (Family::A, n) => Kodaira::I(n as u32 + 1),
        (Family::D, n) => Kodaira::IStar(n as u32 - 4),
        (Family::E, 6) => Kodaira::IVStar,
        (Family::E, 7) => Kodaira::IIIStar,
        (Family::E, _) => Kodaira::IIStar,
    }
}

/// A reducible fiber at a named place.
///
/// Components are indexed with `0` the component meeting the zero section. For
/// `I_n` they are numbered cyclically; for `I_n*` the slots are `1` near, `2` and `3`
/// far, `4..` the double components; for `IV*` the two far simple components are
/// `1, 2`; for `III*` the far simple component is `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberSpec {
    pub kodaira: Kodaira,
    pub position: String,
    pub component_count: usize,
}

impl FiberSpec {
    pub fn new(kodaira: Kodaira, position: &str) -> Self {
        Self {
            kodaira,
            position: position.to_string(),
            component_count: kodaira.component_count(),
        }
    }

    /// Component slot met by a section whose only nonzero pairing with the simple
    /// roots of the fiber's root type is at `node` (Bourbaki numbering).
    pub fn slot_of_node(&self, node: usize) -> Result<usize> {
        let bad = || Error::InvalidComponent {
            fiber: self.position.clone(),
            i: node,
            j: node,
        };
        let ty = self.kodaira.root_type().ok_or_else(bad)?;
        let n = ty.rank;
        match self.kodaira {
            Kodaira::I(_) | Kodaira::III | Kodaira::IV if node >= 1 && node <= n => Ok(node),
            Kodaira::IStar(_) if node == 1 => Ok(1),
            Kodaira::IStar(_) if node == n - 1 => Ok(2),
            Kodaira::IStar(_) if node == n => Ok(3),
            Kodaira::IVStar if node == 1 => Ok(1),
            Kodaira::IVStar if node == 6 => Ok(2),
            Kodaira::IIIStar if node == 7 => Ok(1),
            _ => Err(bad()),
        }
    }
}

/// Correction term `contr_v(P, Q)` for sections meeting components `i` and `j`.
pub fn contribution(fiber: &FiberSpec, i: usize, j: usize) -> Result<Rat> {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    let bad = || Error::InvalidComponent {
        fiber: fiber.position.clone(),
        i,
        j,
    };
    if j >= fiber.component_count {
        return Err(bad());
    }
    if i == 0 {
        return Ok(Rat::zero());
    }
    let r = |n: i64, d: i64| rat(n, d);
    Ok(match fiber.kodaira {
        Kodaira::I(n) => {
            let n = n as i64;
            r(i as i64 * (n - j as i64), n)
        }
        Kodaira::III => r(1, 2),
        Kodaira::IV => r(i as i64 * (3 - j as i64), 3),
        Kodaira::IStar(n) => {
            let n4 = r(n as i64, 4);
            match (i, j) {
                (1, 1) => Rat::one(),
                (2, 2) | (3, 3) => Rat::one() + n4,
                (1, 2) | (1, 3) => r(1, 2),
                (2, 3) => r(1, 2) + n4,
                _ => return Err(bad()),
            }
        }
        Kodaira::IVStar => match (i, j) {
            (1, 1) | (2, 2) => r(4, 3),
            (1, 2) => r(2, 3),
            _ => return Err(bad()),
        },
        Kodaira::IIIStar => match (i, j) {
            (1, 1) => r(3, 2),
            _ => return Err(bad()),
        },
        Kodaira::II | Kodaira::IIStar => return Err(bad()),
    })
}

/// A section `V = O + kF + ω` with the components it meets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionSpec {
    pub name: String,
    /// The `k` of `V = O + kF + ω`, when known.
    pub fiber_offset_k: Option<Int>,
    /// Component met on each fiber, in the order of the fiber list.
    pub meets: Vec<usize>,
    /// `P̄·Ō`.
    pub meets_zero: Int,
}

impl SectionSpec {
    pub fn new(name: &str, meets: Vec<usize>, meets_zero: i64) -> Self {
        Self {
            name: name.to_string(),
            fiber_offset_k: None,
            meets,
            meets_zero: Int::from(meets_zero),
        }
    }

    pub fn zero(fibers: &[FiberSpec]) -> Self {
        Self::new("O", alloc::vec![0; fibers.len()], -2)
    }
}

fn check_meets(p: &SectionSpec, fibers: &[FiberSpec]) -> Result<()> {
    if p.meets.len() != fibers.len() {
        return Err(Error::MissingData(format!(
            "section {} has data for {} of {} fibers",
            p.name,
            p.meets.len(),
            fibers.len()
        )));
    }
    Ok(())
}

/// Sum of `contr_v(P, Q)` over all fibers.
pub fn total_contribution(p: &SectionSpec, q: &SectionSpec, fibers: &[FiberSpec]) -> Result<Rat> {
    check_meets(p, fibers)?;
    check_meets(q, fibers)?;
    let mut s = Rat::zero();
    for (f, (&i, &j)) in fibers.iter().zip(p.meets.iter().zip(&q.meets)) {
        s += contribution(f, i, j)?;
    }
    Ok(s)
}

/// `h(P) = 4 + 2 P̄·Ō − Σ contr_v(P)`. The zero section has height 0.
pub fn height(p: &SectionSpec, fibers: &[FiberSpec]) -> Result<Rat> {
    if p.meets_zero == Int::from(-2) {
        check_meets(p, fibers)?;
        return Ok(Rat::zero());
    }
    let c = total_contribution(p, p, fibers)?;
    Ok(rat(4, 1) + rat_int(&(Int::from(2) * &p.meets_zero)) - c)
}

/// `⟨P, Q⟩ = 2 + P̄·Ō + Q̄·Ō − P̄·Q̄ − Σ contr_v(P, Q)`.
pub fn pairing(p: &SectionSpec, q: &SectionSpec, pq: &Int, fibers: &[FiberSpec]) -> Result<Rat> {
    if p.meets_zero == Int::from(-2) || q.meets_zero == Int::from(-2) {
        check_meets(p, fibers)?;
        check_meets(q, fibers)?;
        return Ok(Rat::zero());
    }
    let c = total_contribution(p, q, fibers)?;
    Ok(rat(2, 1) + rat_int(&(&p.meets_zero + &q.meets_zero - pq)) - c)
}

/// Gram matrix of heights over an ordered list of sections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightMatrix {
    pub sections: Vec<String>,
    pub gram: RatMatrix,
}

impl HeightMatrix {
    pub fn det(&self) -> Rat {
        arith::det(&self.gram).expect("square")
    }
}

/// Sections over a fixed fiber list together with the intersection numbers
/// `P̄·Q̄` needed for their pairings.
#[derive(Clone, Debug, Default)]
pub struct SectionSet {
    pub fibers: Vec<FiberSpec>,
    pub sections: Vec<SectionSpec>,
    pub intersections: BTreeMap<(String, String), Int>,
}

impl SectionSet {
    pub fn new(fibers: Vec<FiberSpec>) -> Self {
        Self {
            fibers,
            sections: Vec::new(),
            intersections: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, s: SectionSpec) {
        self.sections.push(s);
    }

    pub fn set_intersection(&mut self, a: &str, b: &str, v: Int) {
        self.intersections.insert((a.to_string(), b.to_string()), v.clone());
        self.intersections.insert((b.to_string(), a.to_string()), v);
    }

    pub fn get(&self, name: &str) -> Result<&SectionSpec> {
        self.sections
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::MissingData(format!("no section named {name}")))
    }

    pub fn intersection(&self, a: &str, b: &str) -> Result<Int> {
        self.intersections
            .get(&(a.to_string(), b.to_string()))
            .cloned()
            .ok_or_else(|| Error::MissingData(format!("no intersection number for {a}, {b}")))
    }

    pub fn height(&self, name: &str) -> Result<Rat> {
        height(self.get(name)?, &self.fibers)
    }

    pub fn pairing(&self, a: &str, b: &str) -> Result<Rat> {
        if a == b {
            return self.height(a);
        }
        let pq = self.intersection(a, b)?;
        pairing(self.get(a)?, self.get(b)?, &pq, &self.fibers)
    }

    pub fn height_matrix(&self, names: &[&str]) -> Result<HeightMatrix> {
        let k = names.len();
        let mut gram = RatMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                gram.set(i, j, self.pairing(names[i], names[j])?);
            }
        }
        Ok(HeightMatrix {
            sections: names.iter().map(|s| s.to_string()).collect(),
            gram,
        })
    }

    /// Integer coordinates of `target` in `basis`, from the pairings with the basis;
    /// the target's height is re-derived from the quadratic form as a check.
    pub fn express_in_basis(&self, target: &str, basis: &[&str]) -> Result<Vec<Int>> {
        let hm = self.height_matrix(basis)?;
        let rhs: Vec<Rat> = basis
            .iter()
            .map(|b| self.pairing(target, b))
            .collect::<Result<_>>()?;
        express_in_gram(&hm.gram, &rhs, &self.height(target)?)
    }
}

/// Solves `G x = rhs` for integral `x` and checks `xᵀ G x = height`.
pub fn express_in_gram(gram: &RatMatrix, rhs: &[Rat], height: &Rat) -> Result<Vec<Int>> {
    if arith::det(gram)?.is_zero() {
        return Err(Error::Dependent);
    }
    let x = arith::solve_rational(gram, rhs).ok_or(Error::Dependent)?;
    if !arith::is_integral(&x) {
        return Err(Error::NonIntegral(format!(
            "coordinates {:?}",
            x.iter().map(arith::rat_to_string).collect::<Vec<_>>()
        )));
    }
    if &arith::bilinear(gram, &x, &x) != height {
        return Err(Error::NonIntegral("relation does not reproduce the height".into()));
    }
    Ok(x.iter().map(|r| r.to_integer()).collect())
}

/// Renders integer coordinates in a named basis, e.g. `2Z1-6Z2`.
pub fn format_relation(coeffs: &[Int], names: &[&str]) -> String {
    let mut out = String::new();
    for (c, n) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let neg = c < &Int::zero();
        let abs = if neg { -c.clone() } else { c.clone() };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if !abs.is_one() {
            out.push_str(&abs.to_string());
        }
        out.push_str(n);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn f(k: Kodaira) -> FiberSpec {
        FiberSpec::new(k, &k.to_string())
    }

    #[test]
    fn table_one_values() {
        assert_eq!(contribution(&f(Kodaira::IVStar), 1, 1).unwrap(), rat(4, 3));
        assert_eq!(contribution(&f(Kodaira::IVStar), 1, 2).unwrap(), rat(2, 3));
        assert_eq!(contribution(&f(Kodaira::IIIStar), 1, 1).unwrap(), rat(3, 2));
        assert_eq!(contribution(&f(Kodaira::I(6)), 2, 2).unwrap(), rat(4, 3));
        assert_eq!(contribution(&f(Kodaira::I(6)), 3, 3).unwrap(), rat(3, 2));
        assert_eq!(contribution(&f(Kodaira::IStar(2)), 2, 2).unwrap(), rat(3, 2));
        assert_eq!(contribution(&f(Kodaira::IStar(2)), 2, 3).unwrap(), Rat::one());
        assert_eq!(contribution(&f(Kodaira::IStar(2)), 1, 3).unwrap(), rat(1, 2));
        assert_eq!(contribution(&f(Kodaira::IStar(0)), 3, 3).unwrap(), Rat::one());
        assert_eq!(contribution(&f(Kodaira::I(10)), 0, 7).unwrap(), Rat::zero());
        assert_eq!(contribution(&f(Kodaira::I(10)), 8, 1).unwrap(), rat(1, 5));
    }

    #[test]
    fn invalid_components() {
        assert!(contribution(&f(Kodaira::I(8)), 1, 8).is_err());
        assert!(contribution(&f(Kodaira::IStar(2)), 4, 4).is_err());
        assert!(contribution(&f(Kodaira::IIIStar), 1, 2).is_err());
    }

    #[test]
    fn dictionary() {
        let t = |f, n| RootType::new(f, n).unwrap();
        assert_eq!(dictionary_ade_kodaira(t(Family::A, 7)), Kodaira::I(8));
        assert_eq!(dictionary_ade_kodaira(t(Family::D, 6)), Kodaira::IStar(2));
        assert_eq!(dictionary_ade_kodaira(t(Family::A, 1)), Kodaira::I(2));
        assert_eq!(dictionary_ade_kodaira(t(Family::D, 4)), Kodaira::IStar(0));
        assert_eq!(dictionary_ade_kodaira(t(Family::E, 6)), Kodaira::IVStar);
        for k in [Kodaira::I(8), Kodaira::IStar(2), Kodaira::IVStar, Kodaira::IIIStar, Kodaira::IIStar] {
            assert_eq!(dictionary_ade_kodaira(k.root_type().unwrap()), k);
            assert_eq!(k.component_count(), k.root_type().unwrap().rank + 1);
        }
    }

    #[test]
    fn kodaira_roundtrip() {
        for k in [Kodaira::I(0), Kodaira::I(10), Kodaira::IStar(0), Kodaira::IStar(2), Kodaira::II, Kodaira::III, Kodaira::IV, Kodaira::IVStar, Kodaira::IIIStar, Kodaira::IIStar] {
            assert_eq!(k.to_string().parse::<Kodaira>().unwrap(), k);
        }
        assert!("J3".parse::<Kodaira>().is_err());
    }

    #[test]
    fn heights_from_meets() {
        let fibers = vec![f(Kodaira::IStar(0)), f(Kodaira::I(2)), f(Kodaira::IStar(2)), f(Kodaira::IStar(2))];
        // Q1 of the D6^4 fibration: torsion
        let q1 = SectionSpec::new("Q1", vec![1, 0, 2, 3], 0);
        assert_eq!(height(&q1, &fibers).unwrap(), Rat::zero());
        assert_eq!(height(&SectionSpec::zero(&fibers), &fibers).unwrap(), Rat::zero());
        let w = SectionSpec::new("W1+Q2", vec![1, 1, 2, 3], 1);
        assert_eq!(height(&w, &fibers).unwrap(), rat(3, 2));
        let short = SectionSpec::new("bad", vec![1], 0);
        assert!(matches!(height(&short, &fibers), Err(Error::MissingData(_))));
    }

    #[test]
    fn table_four_pairing() {
        let fibers = vec![f(Kodaira::I(8)), f(Kodaira::I(10))];
        let v1 = SectionSpec::new("V1", vec![7, 8], 0);
        let v2 = SectionSpec::new("V2", vec![6, 6], 0);
        let v7 = SectionSpec::new("V7", vec![1, 6], 1);
        assert_eq!(height(&v1, &fibers).unwrap(), rat(61, 40));
        assert_eq!(height(&v7, &fibers).unwrap(), rat(109, 40));
        assert_eq!(pairing(&v1, &v2, &Int::zero(), &fibers).unwrap(), rat(1, 20));
        let mut set = SectionSet::new(fibers);
        set.add(v1);
        set.add(v2);
        set.add(SectionSpec::new("V3", vec![5, 4], 1));
        set.set_intersection("V1", "V2", Int::zero());
        set.set_intersection("V1", "V3", Int::zero());
        set.set_intersection("V2", "V3", Int::zero());
        assert_eq!(set.express_in_basis("V3", &["V1", "V2"]).unwrap(), vec![Int::one(), Int::one()]);
        assert_eq!(set.height_matrix(&["V1", "V2"]).unwrap().det(), rat(3, 20));
    }

    #[test]
    fn relation_format() {
        let c = |v: &[i64]| v.iter().map(|&x| Int::from(x)).collect::<Vec<_>>();
        assert_eq!(format_relation(&c(&[2, -6]), &["Z1", "Z2"]), "2Z1-6Z2");
        assert_eq!(format_relation(&c(&[0, -5]), &["V1", "V2"]), "-5V2");
        assert_eq!(format_relation(&c(&[1, 1]), &["V1", "V2"]), "V1+V2");
    }
}
