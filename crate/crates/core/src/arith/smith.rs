use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{abs_cmp, Int, IntMatrix};

/// Smith normal form `U·A·V = D` with `d1 | d2 | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// Diagonal entries, `min(rows, cols)` of them, nonnegative.
    pub diagonal: Vec<Int>,
    pub left: IntMatrix,
    pub right: IntMatrix,
}

impl SnfResult {
    /// Nontrivial invariant factors (entries other than 0 and 1).
    pub fn torsion_invariants(&self) -> Vec<Int> {
        self.diagonal
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }
}

/// Row Hermite normal form `H = U·A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HnfResult {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl HnfResult {
    /// The nonzero rows of `H`, a basis of the row lattice.
    pub fn basis(&self) -> Vec<Vec<Int>> {
        (0..self.rank).map(|i| self.h.row(i).to_vec()).collect()
    }
}

/// Row-style Hermite normal form: pivots positive, entries above a pivot reduced
/// into `[0, pivot)`, zero rows last.
pub fn hnf(a: &IntMatrix) -> HnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..n {
        if r == m {
            break;
        }
        let mut found = false;
        loop {
            let p = (r..m)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by(|&i, &j| abs_cmp(h.get(i, c), h.get(j, c)));
            let Some(p) = p else { break };
            found = true;
            h.swap_rows(p, r);
            u.swap_rows(p, r);
            let mut clean = true;
            for i in r + 1..m {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = h.get(i, c).div_floor(h.get(r, c));
                let f = -q;
                h.add_row_multiple(i, r, &f);
                u.add_row_multiple(i, r, &f);
                if !h.get(i, c).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h.get(i, c).div_floor(h.get(r, c));
            if !q.is_zero() {
                let f = -q;
                h.add_row_multiple(i, r, &f);
                u.add_row_multiple(i, r, &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    HnfResult {
        h,
        u,
        rank: r,
        pivots,
    }
}

fn min_abs_in_block(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let v = d.get(i, j);
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if abs_cmp(v, d.get(bi, bj)).is_ge() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Smith normal form by elementary row and column operations.
pub fn snf(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let k = m.min(n);
    for t in 0..k {
        let Some((pi, pj)) = min_abs_in_block(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let f = -d.get(i, t).div_floor(d.get(t, t));
                d.add_row_multiple(i, t, &f);
                u.add_row_multiple(i, t, &f);
                dirty |= !d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let f = -d.get(t, j).div_floor(d.get(t, t));
                d.add_col_multiple(j, t, &f);
                v.add_col_multiple(j, t, &f);
                dirty |= !d.get(t, j).is_zero();
            }
            if dirty {
                // bring the smallest remainder of row/column t to the pivot
                let mut best = (t, t);
                for i in t + 1..m {
                    if !d.get(i, t).is_zero() && abs_cmp(d.get(i, t), d.get(best.0, best.1)).is_lt() {
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    if !d.get(t, j).is_zero() && abs_cmp(d.get(t, j), d.get(best.0, best.1)).is_lt() {
                        best = (t, j);
                    }
                }
                d.swap_rows(t, best.0);
                u.swap_rows(t, best.0);
                d.swap_cols(t, best.1);
                v.swap_cols(t, best.1);
                continue;
            }
            let pivot = d.get(t, t).clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&pivot)));
            match bad {
                Some(i) => {
                    let one = Int::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    let diagonal = (0..k).map(|i| d.get(i, i).clone()).collect();
    SnfResult {
        diagonal,
        left: u,
        right: v,
    }
}

/// Basis of `{x ∈ ℤⁿ : A x = 0}`, saturated and in Hermite form.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<Int>> {
    let n = a.cols();
    let at = a.transpose();
    let res = hnf(&at);
    let rows: Vec<usize> = (res.rank..n).collect();
    if rows.is_empty() {
        return Vec::new();
    }
    let k = res.u.select_rows(&rows);
    hnf(&k).basis()
}

/// Basis of `(ℚ-span of sub) ∩ ℤⁿ`, in Hermite form.
pub fn saturate(sub: &[Vec<Int>], ambient_rank: usize) -> Vec<Vec<Int>> {
    let m = IntMatrix::from_rows(sub.to_vec(), ambient_rank).expect("vector length");
    let perp = integer_kernel(&m);
    let p = IntMatrix::from_rows(perp, ambient_rank).expect("vector length");
    integer_kernel(&p)
}
