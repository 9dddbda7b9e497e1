//! Niemeier lattices as a root lattice plus a glue code, and the action of diagram
//! automorphisms and component permutations on glue codes.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{self, rat_int, Int, IntMatrix, Rat, RatMatrix};
use crate::error::{Error, Result};
use crate::frame::Embedding;
use crate::rootlat::{Family, RootLattice};

/// A tuple of discriminant labels, one per component: `[y1, …, yk]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlueVector(pub Vec<usize>);

impl GlueVector {
    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&l| l == 0)
    }
}

impl From<&[usize]> for GlueVector {
    fn from(v: &[usize]) -> Self {
        GlueVector(v.to_vec())
    }
}

impl<const N: usize> From<[usize; N]> for GlueVector {
    fn from(v: [usize; N]) -> Self {
        GlueVector(v.to_vec())
    }
}

impl fmt::Display for GlueVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

/// An element of `G1 ⋊ G2`: per-component diagram automorphisms followed by a
/// permutation of components. `flips[i]` is a node permutation of component `i`
/// (1-based images) and component `i` is sent to slot `permutation[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GlueAutomorphism {
    pub name: String,
    pub flips: Vec<Vec<usize>>,
    pub permutation: Vec<usize>,
}

impl GlueAutomorphism {
    pub fn identity(lattice: &NiemeierLattice) -> Self {
        Self {
            name: "id".to_string(),
            flips: lattice
                .components
                .iter()
                .map(|c| (1..=c.rank()).collect())
                .collect(),
            permutation: (0..lattice.components.len()).collect(),
        }
    }

    /// The nontrivial diagram automorphism on the listed components.
    pub fn flip(lattice: &NiemeierLattice, comps: &[usize], name: &str) -> Result<Self> {
        let mut a = Self::identity(lattice);
        for &c in comps {
            let comp = lattice
                .components
                .get(c)
                .ok_or(Error::IndexOutOfRange(c))?;
            let autos = comp.diagram_automorphisms();
            let first = autos.first().ok_or_else(|| {
                Error::ShapeMismatch(format!("{} has no diagram automorphism", comp.ty))
            })?;
            a.flips[c] = first.clone();
        }
        a.name = name.to_string();
        Ok(a)
    }

    /// Transposition of components `i` and `j`.
    pub fn transposition(lattice: &NiemeierLattice, i: usize, j: usize, name: &str) -> Result<Self> {
        let mut a = Self::identity(lattice);
        if i >= a.permutation.len() || j >= a.permutation.len() {
            return Err(Error::IndexOutOfRange(i.max(j)));
        }
        a.permutation.swap(i, j);
        a.name = name.to_string();
        Ok(a)
    }

    /// Permutation of components with no flips.
    pub fn permuting(lattice: &NiemeierLattice, permutation: Vec<usize>, name: &str) -> Self {
        let mut a = Self::identity(lattice);
        a.permutation = permutation;
        a.name = name.to_string();
        a
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let k = self.permutation.len();
        let mut flips = Vec::with_capacity(k);
        for i in 0..k {
            let fb = &other.flips[i];
            let fa = &self.flips[other.permutation[i]];
            flips.push(fb.iter().map(|&n| fa[n - 1]).collect());
        }
        let permutation = (0..k).map(|i| self.permutation[other.permutation[i]]).collect();
        Self {
            name: format!("{}{}", self.name, other.name),
            flips,
            permutation,
        }
    }

    fn key(&self) -> (Vec<Vec<usize>>, Vec<usize>) {
        (self.flips.clone(), self.permutation.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NiemeierLattice {
    pub name: String,
    pub components: Vec<RootLattice>,
    pub glue_code: Vec<GlueVector>,
}

impl NiemeierLattice {
    /// Builds the lattice from an explicit glue code, checking that the code is a
    /// group, that glue vectors pair integrally with even norms, and that
    /// `|code|² = |det L_root|`.
    pub fn new(name: &str, components: Vec<RootLattice>, glue_code: Vec<GlueVector>) -> Result<Self> {
        let mut code: Vec<GlueVector> = glue_code;
        code.sort();
        code.dedup();
        let lat = Self {
            name: name.to_string(),
            components,
            glue_code: code,
        };
        lat.validate()?;
        Ok(lat)
    }

    /// Builds the glue code as the group generated by `generators`.
    pub fn from_generators(name: &str, components: Vec<RootLattice>, generators: &[GlueVector]) -> Result<Self> {
        let k = components.len();
        for g in generators {
            check_shape(&components, g)?;
        }
        let zero = GlueVector(vec![0; k]);
        let mut seen = BTreeSet::new();
        seen.insert(zero.clone());
        let mut queue = VecDeque::from([zero]);
        while let Some(v) = queue.pop_front() {
            for g in generators {
                let s = add_with(&components, &v, g);
                if seen.insert(s.clone()) {
                    queue.push_back(s);
                }
            }
        }
        Self::new(name, components, seen.into_iter().collect())
    }

    fn validate(&self) -> Result<()> {
        let k = self.components.len();
        for v in &self.glue_code {
            check_shape(&self.components, v)?;
        }
        let set: BTreeSet<&GlueVector> = self.glue_code.iter().collect();
        if !set.contains(&GlueVector(vec![0; k])) {
            return Err(Error::InvalidGlueCode("zero vector missing".into()));
        }
        for a in &self.glue_code {
            for b in &self.glue_code {
                let s = self.add(a, b);
                if !set.contains(&s) {
                    return Err(Error::InvalidGlueCode(format!("{a} + {b} = {s} not in code")));
                }
            }
        }
        let tables = self.label_pairing_tables();
        let pair = |a: &GlueVector, b: &GlueVector| -> Rat {
            tables
                .iter()
                .zip(a.0.iter().zip(&b.0))
                .fold(Rat::zero(), |acc, (t, (&x, &y))| acc + &t[x][y])
        };
        for (i, a) in self.glue_code.iter().enumerate() {
            let n = pair(a, a);
            if !n.is_integer() || !(n.to_integer() % Int::from(2)).is_zero() {
                return Err(Error::InvalidGlueCode(format!("{a} has odd or fractional norm")));
            }
            for b in &self.glue_code[..i] {
                if !pair(a, b).is_integer() {
                    return Err(Error::InvalidGlueCode(format!("{a}, {b} pair nonintegrally")));
                }
            }
        }
        let det: usize = self.components.iter().map(|c| c.discriminant_order()).product();
        let size = self.glue_code.len();
        if size * size != det {
            return Err(Error::InvalidGlueCode(format!(
                "{size} glue vectors for discriminant {det}"
            )));
        }
        Ok(())
    }

    /// `t[c][a][b] = ⟨rep(a), rep(b)⟩` inside component `c`.
    fn label_pairing_tables(&self) -> Vec<Vec<Vec<Rat>>> {
        self.components
            .iter()
            .map(|c| {
                let reps: Vec<Vec<Rat>> = (0..c.discriminant_order())
                    .map(|l| c.glue_class(l).expect("label in range").representative)
                    .collect();
                reps.iter()
                    .map(|a| reps.iter().map(|b| c.pair(a, b)).collect())
                    .collect()
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank()).sum()
    }

    /// Starting coordinate of each component in the ambient root basis.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.components.len());
        let mut acc = 0;
        for c in &self.components {
            out.push(acc);
            acc += c.rank();
        }
        out
    }

    /// Ambient coordinate index of simple root `node` (1-based) of component `comp`.
    pub fn slot(&self, comp: usize, node: usize) -> usize {
        self.offsets()[comp] + node - 1
    }

    /// Ambient name of a coordinate, e.g. `d6` or `a3`, with a component suffix when
    /// several components share a family.
    pub fn slot_name(&self, slot: usize) -> String {
        let offs = self.offsets();
        let comp = offs.iter().rposition(|&o| o <= slot).expect("slot in range");
        let c = &self.components[comp];
        let name = &c.simple_roots[slot - offs[comp]];
        let same = self.components.iter().filter(|o| o.ty == c.ty).count();
        if same > 1 {
            format!("{name}({})", comp + 1)
        } else {
            name.clone()
        }
    }

    pub fn contains(&self, v: &GlueVector) -> bool {
        self.glue_code.binary_search(v).is_ok()
    }

    pub fn add(&self, a: &GlueVector, b: &GlueVector) -> GlueVector {
        add_with(&self.components, a, b)
    }

    pub fn scale(&self, a: &GlueVector, k: i64) -> GlueVector {
        GlueVector(
            self.components
                .iter()
                .zip(&a.0)
                .map(|(c, &l)| c.scale_label(l, k))
                .collect(),
        )
    }

    pub fn order(&self, a: &GlueVector) -> usize {
        let mut k = 1;
        let mut acc = a.clone();
        while !acc.is_zero() {
            acc = self.add(&acc, a);
            k += 1;
        }
        k
    }

    /// Standard representative in ambient root coordinates.
    pub fn representative(&self, v: &GlueVector) -> Vec<Rat> {
        let mut out = Vec::with_capacity(self.rank());
        for (c, &l) in self.components.iter().zip(&v.0) {
            out.extend(c.glue_class(l).expect("label checked").representative);
        }
        out
    }

    /// Block-diagonal Gram matrix of `L_root`.
    pub fn root_gram(&self) -> IntMatrix {
        let blocks: Vec<IntMatrix> = self.components.iter().map(|c| c.gram.clone()).collect();
        IntMatrix::direct_sum(&blocks)
    }

    pub fn root_gram_rat(&self) -> RatMatrix {
        arith::int_matrix_to_rat(&self.root_gram())
    }

    pub fn pairing(&self, a: &GlueVector, b: &GlueVector) -> Rat {
        arith::bilinear(&self.root_gram_rat(), &self.representative(a), &self.representative(b))
    }

    /// A ℤ-basis of `L` in ambient root coordinates (rows), in Hermite form.
    pub fn lattice_basis(&self) -> RatMatrix {
        let n = self.rank();
        let mut gens: Vec<Vec<Rat>> = Vec::new();
        for i in 0..n {
            let mut e = vec![Rat::zero(); n];
            e[i] = Rat::one();
            gens.push(e);
        }
        for v in &self.glue_code {
            if !v.is_zero() {
                gens.push(self.representative(v));
            }
        }
        let d = arith::common_denominator(gens.iter().flatten());
        let dr = rat_int(&d);
        let scaled: Vec<Vec<Int>> = gens
            .iter()
            .map(|g| g.iter().map(|x| (x * &dr).to_integer()).collect())
            .collect();
        let m = IntMatrix::from_rows(scaled, n).expect("generator length");
        let basis = arith::hnf(&m).basis();
        let rows = basis
            .into_iter()
            .map(|r| r.iter().map(|x| rat_int(x) / &dr).collect())
            .collect();
        RatMatrix::from_rows(rows, n).expect("basis length")
    }

    /// Applies an automorphism to a glue vector: flips per component, then the
    /// permutation reorders entries.
    pub fn apply_aut(&self, aut: &GlueAutomorphism, v: &GlueVector) -> Result<GlueVector> {
        self.check_aut_shape(aut)?;
        check_shape(&self.components, v)?;
        let mut out = vec![0; v.len()];
        for (i, &l) in v.0.iter().enumerate() {
            out[aut.permutation[i]] = self.components[i].act_on_label(&aut.flips[i], l);
        }
        Ok(GlueVector(out))
    }

    /// Applies an automorphism to an ambient root-coordinate vector.
    pub fn apply_aut_to_vector<T: Clone + Zero>(&self, aut: &GlueAutomorphism, v: &[T]) -> Vec<T> {
        let offs = self.offsets();
        let mut out = vec![T::zero(); v.len()];
        for (i, c) in self.components.iter().enumerate() {
            let src = &v[offs[i]..offs[i] + c.rank()];
            let moved = c.permute_coords(&aut.flips[i], src);
            let dst = offs[aut.permutation[i]];
            out[dst..dst + c.rank()].clone_from_slice(&moved);
        }
        out
    }

    fn check_aut_shape(&self, aut: &GlueAutomorphism) -> Result<()> {
        let k = self.components.len();
        if aut.flips.len() != k || aut.permutation.len() != k {
            return Err(Error::ShapeMismatch(format!(
                "automorphism for {} components applied to {k}",
                aut.permutation.len()
            )));
        }
        let mut seen = vec![false; k];
        for (i, &p) in aut.permutation.iter().enumerate() {
            if p >= k || seen[p] {
                return Err(Error::ShapeMismatch("permutation is not a bijection".into()));
            }
            seen[p] = true;
            if self.components[p].ty != self.components[i].ty {
                return Err(Error::ShapeMismatch(format!(
                    "component {} ({}) sent to {} ({})",
                    i + 1,
                    self.components[i].ty,
                    p + 1,
                    self.components[p].ty
                )));
            }
            if !self.components[i].is_diagram_automorphism(&aut.flips[i]) {
                return Err(Error::ShapeMismatch(format!(
                    "flip on component {} is not a diagram automorphism",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    /// Whether `aut` maps the glue code onto itself.
    pub fn is_glue_automorphism(&self, aut: &GlueAutomorphism) -> bool {
        if self.check_aut_shape(aut).is_err() {
            return false;
        }
        self.glue_code
            .iter()
            .all(|v| self.apply_aut(aut, v).map(|w| self.contains(&w)).unwrap_or(false))
    }

    /// The finite group generated by `gens` (closure under composition).
    pub fn generated_group(&self, gens: &[GlueAutomorphism]) -> Vec<GlueAutomorphism> {
        let id = GlueAutomorphism::identity(self);
        let mut seen = BTreeSet::new();
        seen.insert(id.key());
        let mut out = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(a) = queue.pop_front() {
            for g in gens {
                let c = g.compose(&a);
                if seen.insert(c.key()) {
                    out.push(c.clone());
                    queue.push_back(c);
                }
            }
        }
        out
    }

    /// Whether some element of the group generated by `auts` carries the image
    /// lattice of `e1` onto that of `e2`. Images are compared as ℤ-spans inside each
    /// component, which absorbs relabelings of the image root basis.
    pub fn embedding_orbit_equivalent(&self, e1: &Embedding, e2: &Embedding, auts: &[GlueAutomorphism]) -> bool {
        let target = span_key(&e2.ambient_images(), self.rank());
        self.generated_group(auts).iter().any(|a| {
            let moved: Vec<Vec<Int>> = e1
                .ambient_images()
                .iter()
                .map(|v| self.apply_aut_to_vector(a, v))
                .collect();
            span_key(&moved, self.rank()) == target
        })
    }
}

fn span_key(images: &[Vec<Int>], n: usize) -> (Vec<Vec<Int>>, Vec<Vec<Int>>) {
    if images.len() == 6 {
        let a5 = arith::hnf(&IntMatrix::from_rows(images[..5].to_vec(), n).expect("length")).basis();
        let a1 = arith::hnf(&IntMatrix::from_rows(images[5..].to_vec(), n).expect("length")).basis();
        return (a5, a1);
    }
    (arith::hnf(&IntMatrix::from_rows(images.to_vec(), n).expect("length")).basis(), Vec::new())
}

fn check_shape(components: &[RootLattice], v: &GlueVector) -> Result<()> {
    if v.len() != components.len() {
        return Err(Error::ShapeMismatch(format!(
            "glue vector {v} for {} components",
            components.len()
        )));
    }
    for (c, &l) in components.iter().zip(&v.0) {
        if l >= c.discriminant_order() {
            return Err(Error::LabelOutOfRange {
                lattice: c.ty.to_string(),
                label: l,
            });
        }
    }
    Ok(())
}

fn add_with(components: &[RootLattice], a: &GlueVector, b: &GlueVector) -> GlueVector {
    GlueVector(
        components
            .iter()
            .zip(a.0.iter().zip(&b.0))
            .map(|(c, (&x, &y))| c.add_labels(x, y))
            .collect(),
    )
}

const D64_CODE: [[usize; 4]; 16] = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 3, 1, 2],
    [0, 2, 3, 1],
    [1, 1, 1, 1],
    [1, 0, 3, 2],
    [1, 3, 2, 0],
    [1, 2, 0, 3],
    [2, 2, 2, 2],
    [2, 0, 1, 3],
    [2, 3, 0, 1],
    [2, 1, 3, 0],
    [3, 3, 3, 3],
    [3, 0, 2, 1],
    [3, 1, 0, 2],
    [3, 2, 1, 0],
];

/// `N(D6^4)` with its 16-element glue code.
pub fn make_niemeier_d64() -> NiemeierLattice {
    let d6 = RootLattice::build(Family::D, 6).expect("D6");
    let code = D64_CODE.iter().map(|v| GlueVector(v.to_vec())).collect();
    NiemeierLattice::new("N(D6^4)", vec![d6.clone(), d6.clone(), d6.clone(), d6], code)
        .expect("N(D6^4) glue code is valid")
}

/// Generators of the glue code of `N(A9^2 D6)`.
pub fn a92d6_generators() -> Vec<GlueVector> {
    vec![
        GlueVector(vec![2, 4, 0]),
        GlueVector(vec![5, 0, 1]),
        GlueVector(vec![0, 5, 3]),
    ]
}

/// `N(A9^2 D6)`, glue code generated by `[2,4,0]`, `[5,0,1]`, `[0,5,3]`.
pub fn make_niemeier_a92d6() -> NiemeierLattice {
    let a9 = RootLattice::build(Family::A, 9).expect("A9");
    let d6 = RootLattice::build(Family::D, 6).expect("D6");
    NiemeierLattice::from_generators("N(A9^2D6)", vec![a9.clone(), a9, d6], &a92d6_generators())
        .expect("N(A9^2D6) glue code is valid")
}

/// Named automorphisms of `N(D6^4)`: the flip `g` on every component and the six
/// transpositions composed with it.
pub fn d64_automorphisms(lat: &NiemeierLattice) -> Vec<GlueAutomorphism> {
    let g = GlueAutomorphism::flip(lat, &[0, 1, 2, 3], "g").expect("D6 flip");
    let mut out = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let tau = GlueAutomorphism::transposition(lat, i, j, &format!("τ{}{}", i + 1, j + 1))
                .expect("indices in range");
            out.push(tau.compose(&g));
        }
    }
    out
}

/// `γ = γ1γ2`, `h`, `h1h` and `h2h` on `N(A9^2 D6)`.
pub fn a92d6_automorphisms(lat: &NiemeierLattice) -> Vec<GlueAutomorphism> {
    let gamma = GlueAutomorphism::flip(lat, &[0, 1], "γ").expect("A9 flips");
    let h = GlueAutomorphism::transposition(lat, 0, 1, "h").expect("indices");
    let h1 = GlueAutomorphism::flip(lat, &[0, 2], "h1").expect("flips");
    let h2 = GlueAutomorphism::flip(lat, &[1, 2], "h2").expect("flips");
    vec![gamma, h.clone(), h1.compose(&h), h2.compose(&h)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d64_code() {
        let l = make_niemeier_d64();
        assert_eq!(l.glue_code.len(), 16);
        assert_eq!(l.rank(), 24);
        assert!(l.contains(&GlueVector::from([1, 2, 0, 3])));
        assert!(!l.contains(&GlueVector::from([0, 3, 2, 1])));
    }

    #[test]
    fn a92d6_code() {
        let l = make_niemeier_a92d6();
        assert_eq!(l.glue_code.len(), 20);
        assert!(l.contains(&GlueVector::from([2, 4, 0])));
        // D6 has discriminant group (ℤ/2)², so [5,0,1] has order 2
        assert_eq!(l.scale(&GlueVector::from([5, 0, 1]), 2), GlueVector::from([0, 0, 0]));
        assert_eq!(l.order(&GlueVector::from([5, 0, 1])), 2);
        assert!(!l.contains(&GlueVector::from([0, 0, 2])));
        assert_eq!(l.order(&GlueVector::from([2, 4, 0])), 5);
    }

    #[test]
    fn tau_g_action() {
        let l = make_niemeier_d64();
        let g = GlueAutomorphism::flip(&l, &[0, 1, 2, 3], "g").unwrap();
        let tau = GlueAutomorphism::transposition(&l, 2, 3, "τ").unwrap();
        let tg = tau.compose(&g);
        assert_eq!(l.apply_aut(&tg, &GlueVector::from([1, 3, 2, 0])).unwrap(), GlueVector::from([3, 1, 0, 2]));
        assert_eq!(l.apply_aut(&tg, &GlueVector::from([0, 2, 3, 1])).unwrap(), GlueVector::from([0, 2, 3, 1]));
        assert!(l.is_glue_automorphism(&tg));
        assert!(!l.is_glue_automorphism(&g));
        let id = GlueAutomorphism::identity(&l);
        assert_eq!(l.apply_aut(&id, &GlueVector::from([1, 0, 3, 2])).unwrap(), GlueVector::from([1, 0, 3, 2]));
        assert_eq!(tg.compose(&tg).key(), id.key());
    }

    #[test]
    fn a92d6_automorphisms_preserve_code() {
        let l = make_niemeier_a92d6();
        let auts = a92d6_automorphisms(&l);
        let h1h = &auts[2];
        assert_eq!(l.apply_aut(h1h, &GlueVector::from([2, 4, 0])).unwrap(), GlueVector::from([6, 2, 0]));
        assert_eq!(l.apply_aut(h1h, &GlueVector::from([5, 0, 1])).unwrap(), GlueVector::from([0, 5, 3]));
        for name in ["γ", "h1h", "h2h"] {
            let a = auts.iter().find(|a| a.name == name).unwrap();
            assert!(l.is_glue_automorphism(a), "{name}");
        }
        let g = GlueAutomorphism::flip(&l, &[2], "g").unwrap();
        assert!(!l.is_glue_automorphism(&g));
    }

    #[test]
    fn shape_mismatch_rejected() {
        let l = make_niemeier_d64();
        let id = GlueAutomorphism::identity(&l);
        assert!(l.apply_aut(&id, &GlueVector::from([0, 1, 2])).is_err());
        let bad = GlueAutomorphism::permuting(&make_niemeier_a92d6(), vec![2, 1, 0], "bad");
        assert!(!make_niemeier_a92d6().is_glue_automorphism(&bad));
    }

    #[test]
    fn toy_lattice_and_invalid_codes() {
        // E8 alone is unimodular with trivial glue code
        let e8 = RootLattice::build(Family::E, 8).unwrap();
        let l = NiemeierLattice::new("E8", vec![e8], vec![GlueVector(vec![0])]).unwrap();
        assert_eq!(l.lattice_basis(), RatMatrix::identity(8));
        // D8 with the spinor class gives E8
        let d8 = RootLattice::build(Family::D, 8).unwrap();
        assert!(NiemeierLattice::from_generators("D8+", vec![d8.clone()], &[GlueVector(vec![1])]).is_ok());
        // the vector class has odd norm
        assert!(NiemeierLattice::from_generators("D8v", vec![d8], &[GlueVector(vec![2])]).is_err());
        let d6 = RootLattice::build(Family::D, 6).unwrap();
        assert!(NiemeierLattice::new("bad", vec![d6], vec![GlueVector(vec![0]), GlueVector(vec![1])]).is_err());
    }

    #[test]
    fn lattice_basis_is_unimodular() {
        for l in [make_niemeier_d64(), make_niemeier_a92d6()] {
            let b = l.lattice_basis();
            let g = b.mul(&l.root_gram_rat()).unwrap().mul(&b.transpose()).unwrap();
            assert_eq!(arith::det(&g).unwrap(), Rat::one());
            assert!(arith::rat_matrix_to_int(&g).is_some());
        }
    }
}
