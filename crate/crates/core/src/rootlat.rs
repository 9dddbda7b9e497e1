//! Irreducible root lattices `A_n`, `D_n`, `E_n` in the negative-definite convention
//! (simple roots have norm −2, adjacent simple roots pair to 1), with their
//! discriminant groups and standard glue representatives.
//!
//! Node numbering is Bourbaki's. For `D_n` the chain is `d1 – d2 – … – d_{n−2}` and
//! `d_{n−2}` is the trivalent node carrying the fork `d_{n−1}`, `d_n`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::arith::{self, rat_int, Int, IntMatrix, Rat, RatMatrix};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        }
    }

    fn root_symbol(self) -> char {
        match self {
            Family::A => 'a',
            Family::D => 'd',
            Family::E => 'e',
        }
    }
}

/// An ADE type such as `D6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootType {
    pub family: Family,
    pub rank: usize,
}

impl RootType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::InvalidRootLattice {
                family: family.letter(),
                rank,
            })
        }
    }

    /// Number of roots of the root system.
    pub fn root_count(self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1),
            (Family::D, _) => 2 * n * (n - 1),
            (Family::E, 6) => 72,
            (Family::E, 7) => 126,
            (Family::E, _) => 240,
        }
    }

    /// Order of the discriminant group, i.e. `|det|` of the Gram matrix.
    pub fn discriminant_order(self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::D => 4,
            Family::E => 9 - self.rank,
        }
    }

    /// Parses names like `A9`, `d6`, `E7`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let bad = || Error::InvalidRootLattice { family: '?', rank: 0 };
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('D') => Family::D,
            Some('E') => Family::E,
            _ => return Err(bad()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        Self::new(family, rank)
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Edges of the Dynkin diagram, 1-based node numbers.
fn dynkin_edges(ty: RootType) -> Vec<(usize, usize)> {
    let n = ty.rank;
    match ty.family {
        Family::A => (1..n).map(|i| (i, i + 1)).collect(),
        Family::D => {
            let mut e: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
            e.push((n - 2, n));
            e
        }
        Family::E => {
            let mut e = vec![(1, 3), (3, 4), (4, 5), (2, 4)];
            e.extend((5..n).map(|i| (i, i + 1)));
            e
        }
    }
}

/// An irreducible root lattice with its simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootLattice {
    pub ty: RootType,
    pub simple_roots: Vec<String>,
    pub gram: IntMatrix,
}

/// A class of `L*/L` with its standard representative in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscClass {
    pub lattice: RootType,
    pub label: usize,
    pub representative: Vec<Rat>,
}

impl RootLattice {
    pub fn build(family: Family, rank: usize) -> Result<Self> {
        let ty = RootType::new(family, rank)?;
        Ok(Self::of_type(ty))
    }

    pub fn of_type(ty: RootType) -> Self {
        let n = ty.rank;
        let mut gram = IntMatrix::zeros(n, n);
        for i in 0..n {
            gram.set(i, i, Int::from(-2));
        }
        for (a, b) in dynkin_edges(ty) {
            gram.set(a - 1, b - 1, Int::one());
            gram.set(b - 1, a - 1, Int::one());
        }
        let simple_roots = (1..=n)
            .map(|i| format!("{}{}", ty.family.root_symbol(), i))
            .collect();
        Self {
            ty,
            simple_roots,
            gram,
        }
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn gram_rat(&self) -> RatMatrix {
        arith::int_matrix_to_rat(&self.gram)
    }

    /// `⟨x, y⟩` for vectors in simple-root coordinates.
    pub fn pair(&self, x: &[Rat], y: &[Rat]) -> Rat {
        arith::bilinear(&self.gram_rat(), x, y)
    }

    /// Gram matrix of the dual basis `α_j` (`⟨α_j, a_i⟩ = δ_ij`), which is `gram⁻¹`.
    pub fn dual_gram(&self) -> RatMatrix {
        arith::inverse(&self.gram_rat()).expect("root lattice Gram is nonsingular")
    }

    /// Dual basis vector `α_j` (1-based `j`) in simple-root coordinates.
    pub fn dual_basis_vector(&self, j: usize) -> Result<Vec<Rat>> {
        if j == 0 || j > self.rank() {
            return Err(Error::IndexOutOfRange(j));
        }
        Ok(self.dual_gram().column(j - 1))
    }

    pub fn discriminant_order(&self) -> usize {
        self.ty.discriminant_order()
    }

    /// Minuscule node (1-based) attached to a nonzero discriminant label.
    fn label_node(&self, label: usize) -> Option<usize> {
        let n = self.rank();
        match (self.ty.family, label) {
            (_, 0) => None,
            (Family::A, j) => Some(j),
            (Family::D, 1) => Some(n),
            (Family::D, 2) => Some(1),
            (Family::D, 3) => Some(n - 1),
            (Family::E, 1) if n == 6 => Some(1),
            (Family::E, 2) if n == 6 => Some(6),
            (Family::E, 1) if n == 7 => Some(7),
            _ => None,
        }
    }

    fn node_label(&self, node: usize) -> Option<usize> {
        (1..self.discriminant_order()).find(|&l| self.label_node(l) == Some(node))
    }

    fn check_label(&self, label: usize) -> Result<()> {
        if label >= self.discriminant_order() {
            return Err(Error::LabelOutOfRange {
                lattice: format!("{}", self.ty),
                label,
            });
        }
        Ok(())
    }

    /// Standard representative of a discriminant class: `0`, or `−α_j` for the
    /// minuscule node `j` of the class. For `D6` these are `δ6`, `δ̄6`, `δ̃6`; for
    /// `A_n` label `j` gives the class of `j·α` with `α = −α_1`.
    pub fn glue_class(&self, label: usize) -> Result<DiscClass> {
        self.check_label(label)?;
        let representative = match self.label_node(label) {
            None => vec![Rat::zero(); self.rank()],
            Some(j) => self
                .dual_basis_vector(j)?
                .into_iter()
                .map(|x| -x)
                .collect(),
        };
        Ok(DiscClass {
            lattice: self.ty,
            label,
            representative,
        })
    }

    pub fn add_labels(&self, a: usize, b: usize) -> usize {
        let ord = self.discriminant_order();
        match self.ty.family {
            Family::D if self.rank().is_multiple_of(2) => a ^ b,
            _ => (a + b) % ord,
        }
    }

    pub fn neg_label(&self, a: usize) -> usize {
        let ord = self.discriminant_order();
        match self.ty.family {
            Family::D if self.rank().is_multiple_of(2) => a,
            _ => (ord - a) % ord,
        }
    }

    pub fn scale_label(&self, a: usize, k: i64) -> usize {
        let mut acc = 0;
        let base = if k < 0 { self.neg_label(a) } else { a };
        for _ in 0..k.unsigned_abs() {
            acc = self.add_labels(acc, base);
        }
        acc
    }

    /// Discriminant label of a dual-lattice vector (simple-root coordinates).
    pub fn label_of(&self, v: &[Rat]) -> Option<usize> {
        (0..self.discriminant_order()).find(|&l| {
            let rep = self.glue_class(l).expect("label in range").representative;
            v.iter().zip(&rep).all(|(a, b)| (a - b).is_integer())
        })
    }

    /// Whether `v` lies in the dual lattice (pairs integrally with every simple root).
    pub fn in_dual(&self, v: &[Rat]) -> bool {
        arith::is_integral(&self.gram_rat().mul_vec(v))
    }

    /// Nontrivial diagram automorphisms as node permutations (`perm[i]` is the image
    /// of node `i+1`, 1-based values). `A_n` reversal, `D_n` fork swap, `E6` reversal.
    pub fn diagram_automorphisms(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        match (self.ty.family, n) {
            (Family::A, 1) => Vec::new(),
            (Family::A, _) => vec![(1..=n).rev().collect()],
            (Family::D, _) => {
                let mut p: Vec<usize> = (1..=n).collect();
                p.swap(n - 2, n - 1);
                vec![p]
            }
            (Family::E, 6) => vec![vec![6, 2, 5, 4, 3, 1]],
            _ => Vec::new(),
        }
    }

    /// Action of a node permutation on discriminant labels.
    pub fn act_on_label(&self, perm: &[usize], label: usize) -> usize {
        match self.label_node(label) {
            None => 0,
            Some(node) => self
                .node_label(perm[node - 1])
                .expect("diagram automorphisms permute minuscule nodes"),
        }
    }

    /// Whether a node permutation preserves the Dynkin diagram.
    pub fn is_diagram_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.rank();
        if perm.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p == 0 || p > n || seen[p - 1] {
                return false;
            }
            seen[p - 1] = true;
        }
        (0..n).all(|i| (0..n).all(|j| self.gram.get(i, j) == self.gram.get(perm[i] - 1, perm[j] - 1)))
    }

    /// Applies a node permutation to a vector of simple-root coordinates.
    pub fn permute_coords<T: Clone + Zero>(&self, perm: &[usize], v: &[T]) -> Vec<T> {
        let mut out = vec![T::zero(); v.len()];
        for (i, x) in v.iter().enumerate() {
            out[perm[i] - 1] = x.clone();
        }
        out
    }
}

/// `⟨rep(a), rep(a)⟩` for a glue class.
pub fn self_pairing(lattice: &RootLattice, class: &DiscClass) -> Rat {
    lattice.pair(&class.representative, &class.representative)
}

/// Integer coordinates as rationals.
pub fn to_rat_vec(v: &[Int]) -> Vec<Rat> {
    v.iter().map(rat_int).collect()
}
