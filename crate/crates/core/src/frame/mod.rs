//! Frames of primitive embeddings `A5 ⊕ A1 ↪ L` into a Niemeier lattice:
//! `N = T^⊥` in `L_root`, `W = T^⊥` in `L`, the root sublattice of `W`, its primitive
//! closure, the torsion group and the Mordell–Weil lattice.

pub mod enumerate;
pub mod rootsys;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::arith::{self, rat_int, Int, IntMatrix, Rat, RatMatrix};
use crate::error::{Error, Result};
use crate::niemeier::{GlueVector, NiemeierLattice};
use crate::rootlat::RootLattice;

pub use enumerate::{lll, roots_of, short_vectors};
pub use rootsys::{classify_root_system, RootComponent};

/// One generator image: a vector in the root basis of a single component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImageVector {
    pub component: usize,
    pub coords: Vec<Int>,
}

/// An embedding of `A5 ⊕ A1`: five images of the `A5` simple roots in chain order,
/// then the image of the `A1` root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub name: String,
    pub target: NiemeierLattice,
    pub images: Vec<ImageVector>,
}

/// Gram matrix of `A5 ⊕ A1` in the negative-definite convention.
pub fn a5_a1_gram() -> IntMatrix {
    let a5 = RootLattice::build(crate::rootlat::Family::A, 5).expect("A5").gram;
    let a1 = RootLattice::build(crate::rootlat::Family::A, 1).expect("A1").gram;
    IntMatrix::direct_sum(&[a5, a1])
}

impl Embedding {
    pub fn new(name: &str, target: NiemeierLattice, images: Vec<ImageVector>) -> Result<Self> {
        if images.len() != 6 {
            return Err(Error::InvalidEmbedding(format!("{} images, expected 6", images.len())));
        }
        for im in &images {
            let comp = target
                .components
                .get(im.component)
                .ok_or(Error::IndexOutOfRange(im.component))?;
            if im.coords.len() != comp.rank() {
                return Err(Error::InvalidEmbedding(format!(
                    "image of length {} in {}",
                    im.coords.len(),
                    comp.ty
                )));
            }
        }
        let e = Self {
            name: name.to_string(),
            target,
            images,
        };
        let g = e.target.root_gram();
        let t = e.ambient_images();
        let tm = IntMatrix::from_rows(t, e.target.rank())?;
        let gram = tm.mul(&g)?.mul(&tm.transpose())?;
        if gram != a5_a1_gram() {
            return Err(Error::InvalidEmbedding("images do not span A5 ⊕ A1".into()));
        }
        Ok(e)
    }

    /// Embedding by simple roots: `a5` is `(component, five 1-based nodes)` and `a1`
    /// is `(component, node)`.
    pub fn from_nodes(name: &str, target: NiemeierLattice, a5: (usize, [usize; 5]), a1: (usize, usize)) -> Result<Self> {
        let unit = |comp: usize, node: usize| -> Result<ImageVector> {
            let c = target.components.get(comp).ok_or(Error::IndexOutOfRange(comp))?;
            if node == 0 || node > c.rank() {
                return Err(Error::IndexOutOfRange(node));
            }
            let mut coords = vec![Int::zero(); c.rank()];
            coords[node - 1] = Int::one();
            Ok(ImageVector {
                component: comp,
                coords,
            })
        };
        let mut images = Vec::with_capacity(6);
        for n in a5.1 {
            images.push(unit(a5.0, n)?);
        }
        images.push(unit(a1.0, a1.1)?);
        Self::new(name, target, images)
    }

    /// Images in ambient root coordinates.
    pub fn ambient_images(&self) -> Vec<Vec<Int>> {
        let offs = self.target.offsets();
        let n = self.target.rank();
        self.images
            .iter()
            .map(|im| {
                let mut v = vec![Int::zero(); n];
                for (i, x) in im.coords.iter().enumerate() {
                    v[offs[im.component] + i] = x.clone();
                }
                v
            })
            .collect()
    }

    /// Whether the image is a primitive sublattice of `L`.
    pub fn is_primitive(&self) -> bool {
        let basis = self.target.lattice_basis();
        let Ok(inv) = arith::inverse(&basis) else {
            return false;
        };
        let t: Vec<Vec<Rat>> = self
            .ambient_images()
            .iter()
            .map(|v| v.iter().map(rat_int).collect())
            .collect();
        let tm = RatMatrix::from_rows(t, self.target.rank()).expect("length");
        let Some(coords) = arith::rat_matrix_to_int(&tm.mul(&inv).expect("shape")) else {
            return false;
        };
        arith::snf(&coords).diagonal.iter().all(|d| d.is_one())
    }
}

/// `(i1(A5), d6, 0, 0)` or `(i2(A5), d5, 0, 0)` in `N(D6^4)`.
pub fn d64_embedding(lattice: &NiemeierLattice, second: bool) -> Result<Embedding> {
    if second {
        Embedding::from_nodes("i2", lattice.clone(), (0, [6, 4, 3, 2, 1]), (1, 5))
    } else {
        Embedding::from_nodes("i1", lattice.clone(), (0, [5, 4, 3, 2, 1]), (1, 6))
    }
}

/// `A1 ↦ a1` in the first `A9`, `A5 ↦ i1(A5)` or `i2(A5)` in `D6`.
pub fn a92d6_embedding(lattice: &NiemeierLattice, second: bool) -> Result<Embedding> {
    let nodes = if second { [6, 4, 3, 2, 1] } else { [5, 4, 3, 2, 1] };
    Embedding::from_nodes(if second { "i2" } else { "i1" }, lattice.clone(), (2, nodes), (0, 1))
}

/// Saturated basis of the orthogonal complement of `images` inside one component
/// (coordinates in the component's root basis).
pub fn orthogonal_complement_in_component(comp: &RootLattice, images: &[Vec<Int>]) -> Result<Vec<Vec<Int>>> {
    for v in images {
        if v.len() != comp.rank() {
            return Err(Error::ShapeMismatch(format!("vector of length {} in {}", v.len(), comp.ty)));
        }
    }
    if images.is_empty() {
        return Ok((0..comp.rank())
            .map(|i| (0..comp.rank()).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
            .collect());
    }
    let m = IntMatrix::from_rows(images.to_vec(), comp.rank())?.mul(&comp.gram)?;
    Ok(arith::integer_kernel(&m))
}

/// The frame of an embedding and everything derived from it.
#[derive(Clone, Debug)]
pub struct Frame {
    pub embedding: Embedding,
    /// `L_root` Gram matrix in ambient coordinates.
    pub ambient_gram: RatMatrix,
    /// Basis of `W`, ambient coordinates.
    pub w_basis: Vec<Vec<Rat>>,
    pub w_gram: RatMatrix,
    /// Basis of `N`, ambient integer coordinates.
    pub n_basis: Vec<Vec<Int>>,
    pub det_w: Rat,
    pub det_n: Rat,
    /// Invariant factors of `W/N`.
    pub w_over_n: Vec<Int>,
    /// All roots of `W`, ambient coordinates.
    pub roots: Vec<Vec<Int>>,
    pub root_summands: Vec<RootComponent>,
    /// `W_root` and its primitive closure, in `W`-coordinates.
    pub w_root_basis: Vec<Vec<Int>>,
    pub w_root_closure_basis: Vec<Vec<Int>>,
    pub torsion: Vec<Int>,
    pub mw_rank: usize,
    /// A reduced basis of `W/W̄_root` realized as projections away from `W_root ⊗ ℚ`.
    pub mw_basis: Vec<Vec<Rat>>,
    pub mw_gram: RatMatrix,
    root_matrix: RatMatrix,
    root_gram_inv: RatMatrix,
}

fn rat_vec(v: &[Int]) -> Vec<Rat> {
    v.iter().map(rat_int).collect()
}

fn lattice_span_basis(vectors: &[Vec<Rat>], dim: usize) -> Vec<Vec<Rat>> {
    let d = arith::common_denominator(vectors.iter().flatten());
    let dr = rat_int(&d);
    let scaled: Vec<Vec<Int>> = vectors
        .iter()
        .map(|v| v.iter().map(|x| (x * &dr).to_integer()).collect())
        .collect();
    let m = IntMatrix::from_rows(scaled, dim).expect("length");
    arith::hnf(&m)
        .basis()
        .into_iter()
        .map(|r| r.iter().map(|x| rat_int(x) / &dr).collect())
        .collect()
}

/// Computes the frame of a primitive embedding.
pub fn compute_frame(e: &Embedding) -> Result<Frame> {
    if !e.is_primitive() {
        return Err(Error::NotPrimitive);
    }
    let lat = &e.target;
    let n = lat.rank();
    let g = lat.root_gram_rat();
    let gi = lat.root_gram();
    let t = IntMatrix::from_rows(e.ambient_images(), n)?;
    let b = lat.lattice_basis();

    // W: x ∈ ℤ^n with (T G Bᵀ) x = 0, realized as xᵀB
    let tg = arith::int_matrix_to_rat(&t).mul(&g)?;
    let pair = tg.mul(&b.transpose())?;
    let pair_int = arith::rat_matrix_to_int(&pair)
        .ok_or_else(|| Error::NonIntegral("lattice basis pairs nonintegrally with the image".into()))?;
    let x = arith::integer_kernel(&pair_int);
    let xm = arith::int_matrix_to_rat(&IntMatrix::from_rows(x, n)?);
    let wm = xm.mul(&b)?;
    let w_basis = wm.row_vecs();
    let w_gram = wm.mul(&g)?.mul(&wm.transpose())?;
    let det_w = arith::det(&w_gram)?;

    // N: integer root coordinates orthogonal to T
    let n_basis = arith::integer_kernel(&t.mul(&gi)?);
    let nm = arith::int_matrix_to_rat(&IntMatrix::from_rows(n_basis.clone(), n)?);
    let det_n = arith::det(&nm.mul(&g)?.mul(&nm.transpose())?)?;

    let w_inv = right_inverse(&wm)?;
    let n_in_w = to_int(&nm.mul(&w_inv)?, "N in W")?;
    let w_over_n = arith::snf(&n_in_w).torsion_invariants();

    // roots of W
    let roots_w = roots_of(&w_gram)?;
    let roots: Vec<Vec<Int>> = roots_w
        .iter()
        .map(|c| {
            let amb = wm.vec_mul(&rat_vec(c));
            amb.iter().map(|r| r.to_integer()).collect()
        })
        .collect();
    let root_summands = classify_root_system(&roots, &g)?;
    let simple: Vec<Vec<Int>> = root_summands.iter().flat_map(|c| c.simple_roots.clone()).collect();
    let w_root_basis: Vec<Vec<Int>> = simple
        .iter()
        .map(|r| {
            let c = IntMatrix::from_rows(vec![r.clone()], n).expect("length");
            let cw = arith::int_matrix_to_rat(&c).mul(&w_inv).expect("shape");
            cw.row(0).iter().map(|x| x.to_integer()).collect()
        })
        .collect();
    let dim_w = w_basis.len();
    let w_root_closure_basis = arith::saturate(&w_root_basis, dim_w);
    let torsion = if w_root_basis.is_empty() {
        Vec::new()
    } else {
        let closure = arith::int_matrix_to_rat(&IntMatrix::from_rows(w_root_closure_basis.clone(), dim_w)?);
        let sub = arith::int_matrix_to_rat(&IntMatrix::from_rows(w_root_basis.clone(), dim_w)?);
        let coords = to_int(&sub.mul(&right_inverse(&closure)?)?, "W_root in its closure")?;
        arith::snf(&coords).torsion_invariants()
    };
    let mw_rank = dim_w - simple.len();

    let root_matrix = arith::int_matrix_to_rat(&IntMatrix::from_rows(simple.clone(), n)?);
    let root_gram_inv = if simple.is_empty() {
        RatMatrix::zeros(0, 0)
    } else {
        arith::inverse(&root_matrix.mul(&g)?.mul(&root_matrix.transpose())?)?
    };
    let mut frame = Frame {
        embedding: e.clone(),
        ambient_gram: g,
        w_basis,
        w_gram,
        n_basis,
        det_w,
        det_n,
        w_over_n,
        roots,
        root_summands,
        w_root_basis,
        w_root_closure_basis,
        torsion,
        mw_rank,
        mw_basis: Vec::new(),
        mw_gram: RatMatrix::zeros(0, 0),
        root_matrix,
        root_gram_inv,
    };
    let projected: Vec<Vec<Rat>> = frame.w_basis.iter().map(|w| frame.project(w)).collect();
    let span = lattice_span_basis(&projected, n);
    if span.len() != mw_rank {
        return Err(Error::Dimension(format!(
            "projection of W has rank {}, expected {mw_rank}",
            span.len()
        )));
    }
    let (mw_basis, mw_gram) = reduced_basis(&frame, &span)?;
    frame.mw_basis = mw_basis;
    frame.mw_gram = mw_gram;
    Ok(frame)
}

fn reduced_basis(frame: &Frame, span: &[Vec<Rat>]) -> Result<(Vec<Vec<Rat>>, RatMatrix)> {
    if span.is_empty() {
        return Ok((Vec::new(), RatMatrix::zeros(0, 0)));
    }
    let gram = frame.height_gram(span);
    let (reduced, u) = lll(&gram)?;
    let ur = arith::int_matrix_to_rat(&u);
    let sm = RatMatrix::from_rows(span.to_vec(), frame.ambient_gram.rows())?;
    Ok((ur.mul(&sm)?.row_vecs(), reduced))
}

fn to_int(m: &RatMatrix, what: &str) -> Result<IntMatrix> {
    arith::rat_matrix_to_int(m).ok_or_else(|| Error::NonIntegral(what.to_string()))
}

/// A matrix `R` with `M·R = I` for a full-row-rank `M` (k×n), so that for `v` in
/// the row space, `v·R` are its coordinates.
fn right_inverse(m: &RatMatrix) -> Result<RatMatrix> {
    let mmt = m.mul(&m.transpose())?;
    m.transpose().mul(&arith::inverse(&mmt)?)
}

impl Frame {
    pub fn lattice(&self) -> &NiemeierLattice {
        &self.embedding.target
    }

    pub fn pair(&self, a: &[Rat], b: &[Rat]) -> Rat {
        arith::bilinear(&self.ambient_gram, a, b)
    }

    /// Orthogonal projection away from `W_root ⊗ ℚ`.
    pub fn project(&self, v: &[Rat]) -> Vec<Rat> {
        if self.root_matrix.rows() == 0 {
            return v.to_vec();
        }
        let rgv = self.root_matrix.mul_vec(&self.ambient_gram.mul_vec(v));
        let c = self.root_gram_inv.mul_vec(&rgv);
        let corr = self.root_matrix.vec_mul(&c);
        v.iter().zip(&corr).map(|(a, b)| a - b).collect()
    }

    /// `−⟨π(a), π(b)⟩` over a list of ambient vectors.
    pub fn height_gram(&self, vs: &[Vec<Rat>]) -> RatMatrix {
        let p: Vec<Vec<Rat>> = vs.iter().map(|v| self.project(v)).collect();
        let k = p.len();
        let mut m = RatMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                m.set(i, j, -self.pair(&p[i], &p[j]));
            }
        }
        m
    }

    /// Whether an ambient vector lies in `W`.
    pub fn in_w(&self, v: &[Rat]) -> bool {
        let wm = RatMatrix::from_rows(self.w_basis.clone(), v.len()).expect("length");
        match arith::solve_rational(&wm.transpose(), v) {
            Some(x) => arith::is_integral(&x),
            None => false,
        }
    }

    /// Number of elements of the torsion group.
    pub fn torsion_order(&self) -> Int {
        self.torsion.iter().fold(Int::one(), |a, b| a * b)
    }

    pub fn w_over_n_order(&self) -> Int {
        self.w_over_n.iter().fold(Int::one(), |a, b| a * b)
    }

    /// Determinant of the Gram matrix of `W_root`.
    pub fn det_w_root(&self) -> Rat {
        if self.root_matrix.rows() == 0 {
            return Rat::one();
        }
        arith::det(&self.root_matrix.mul(&self.ambient_gram).expect("shape").mul(&self.root_matrix.transpose()).expect("shape"))
            .expect("square")
    }

    /// `(−1)^r · disc(U ⊕ W_root) · det(MWL) / |tors|²` with `disc U = −1`.
    pub fn discriminant_identity(&self) -> Rat {
        let sign = if self.mw_rank.is_multiple_of(2) { Rat::one() } else { -Rat::one() };
        let det_mw = if self.mw_rank == 0 {
            Rat::one()
        } else {
            arith::det(&self.mw_gram).expect("square")
        };
        let t = rat_int(&self.torsion_order());
        sign * (-self.det_w_root()) * det_mw / (&t * &t)
    }

    pub fn root_type_names(&self) -> Vec<String> {
        rootsys::type_names(&self.root_summands)
    }

    /// Glue label of an ambient vector of `L`.
    pub fn glue_label(&self, v: &[Rat]) -> Option<GlueVector> {
        let lat = self.lattice();
        let offs = lat.offsets();
        let mut labels = Vec::with_capacity(lat.components.len());
        for (i, c) in lat.components.iter().enumerate() {
            labels.push(c.label_of(&v[offs[i]..offs[i] + c.rank()])?);
        }
        Some(GlueVector(labels))
    }
}

/// Gram matrix `−⟨π(r_i), π(r_j)⟩` of coset representatives; they must be
/// independent modulo `W̄_root`.
pub fn mw_gram(frame: &Frame, coset_reps: &[Vec<Rat>]) -> Result<RatMatrix> {
    let m = frame.height_gram(coset_reps);
    if !coset_reps.is_empty() && arith::det(&m)?.is_zero() {
        return Err(Error::Dependent);
    }
    Ok(m)
}

pub fn torsion_group(frame: &Frame) -> Vec<Int> {
    frame.torsion.clone()
}

/// Whether `m` is positive definite (leading minors positive).
pub fn is_positive_definite(m: &RatMatrix) -> bool {
    (1..=m.rows()).all(|k| {
        let rows: Vec<Vec<Rat>> = (0..k).map(|i| (0..k).map(|j| m.get(i, j).clone()).collect()).collect();
        arith::det(&RatMatrix::from_rows(rows, k).expect("square"))
            .map(|d| d.is_positive())
            .unwrap_or(false)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::niemeier::{make_niemeier_a92d6, make_niemeier_d64};
    use crate::rootlat::Family;

    fn iv(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn complement_of_i1_in_d6() {
        let d6 = RootLattice::build(Family::D, 6).unwrap();
        let i1: Vec<Vec<Int>> = [5, 4, 3, 2, 1]
            .iter()
            .map(|&k| (1..=6).map(|j| int((j == k) as i64)).collect())
            .collect();
        assert_eq!(orthogonal_complement_in_component(&d6, &i1).unwrap(), vec![iv(&[1, 2, 3, 4, 2, 3])]);
        let i2: Vec<Vec<Int>> = [6, 4, 3, 2, 1]
            .iter()
            .map(|&k| (1..=6).map(|j| int((j == k) as i64)).collect())
            .collect();
        assert_eq!(orthogonal_complement_in_component(&d6, &i2).unwrap(), vec![iv(&[1, 2, 3, 4, 3, 2])]);
        let z = rat_vec(&iv(&[1, 2, 3, 4, 2, 3]));
        assert_eq!(d6.pair(&z, &z), rat(-6, 1));
    }

    #[test]
    fn complement_of_a1_in_a9() {
        let a9 = RootLattice::build(Family::A, 9).unwrap();
        let c = orthogonal_complement_in_component(&a9, &[iv(&[1, 0, 0, 0, 0, 0, 0, 0, 0])]).unwrap();
        assert_eq!(c.len(), 8);
        let m = arith::int_matrix_to_rat(&IntMatrix::from_rows(c, 9).unwrap());
        let g = m.mul(&a9.gram_rat()).unwrap().mul(&m.transpose()).unwrap();
        assert_eq!(arith::det(&g).unwrap().abs(), rat(20, 1));
    }

    #[test]
    fn d64_frame() {
        let l = make_niemeier_d64();
        let f = compute_frame(&d64_embedding(&l, false).unwrap()).unwrap();
        assert_eq!(f.root_type_names(), vec!["A1", "D4", "D6", "D6"]);
        assert_eq!(f.det_n, rat(12 * 64, 1));
        assert_eq!(f.det_w, rat(12, 1));
        assert_eq!(f.w_over_n, iv(&[2, 2, 2]));
        assert_eq!(f.torsion, iv(&[2, 2]));
        assert_eq!(f.mw_rank, 1);
        assert_eq!(f.mw_gram.get(0, 0), &rat(3, 2));
        assert_eq!(f.discriminant_identity(), rat(-12, 1));
    }

    #[test]
    fn a92d6_frames() {
        let l = make_niemeier_a92d6();
        for second in [false, true] {
            let f = compute_frame(&a92d6_embedding(&l, second).unwrap()).unwrap();
            assert_eq!(f.root_type_names(), vec!["A7", "A9"]);
            assert_eq!(f.det_n, rat(2 * 10 * 10 * 6, 1));
            assert_eq!(f.w_over_n, iv(&[10]));
            assert!(f.torsion.is_empty());
            assert_eq!(f.mw_rank, 2);
            assert_eq!(arith::det(&f.mw_gram).unwrap(), rat(3, 20));
            assert_eq!(f.discriminant_identity(), rat(-12, 1));
        }
    }

    #[test]
    fn invalid_images_rejected() {
        let l = make_niemeier_d64();
        assert!(d64_embedding(&l, false).unwrap().is_primitive());
        let bad = Embedding::from_nodes("bad", l, (0, [1, 2, 3, 4, 5]), (0, 6));
        assert!(matches!(bad, Err(Error::InvalidEmbedding(_))));
    }
}
