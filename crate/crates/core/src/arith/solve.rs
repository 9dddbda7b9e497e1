use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::{Rat, RatMatrix};
use crate::error::{Error, Result};

/// Exact determinant by Gaussian elimination.
pub fn det(m: &RatMatrix) -> Result<Rat> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
            return Ok(Rat::zero());
        };
        if p != c {
            a.swap_rows(p, c);
            d = -d;
        }
        let pivot = a.get(c, c).clone();
        d *= &pivot;
        for i in c + 1..n {
            if a.get(i, c).is_zero() {
                continue;
            }
            let f = -(a.get(i, c) / &pivot);
            a.add_row_multiple(i, c, &f);
        }
    }
    Ok(d)
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(a: &mut RatMatrix) -> Vec<usize> {
    let (m, n) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a.get(r, c).recip();
        for j in 0..n {
            let v = a.get(r, j) * &inv;
            a.set(r, j, v);
        }
        for i in 0..m {
            if i != r && !a.get(i, c).is_zero() {
                let f = -a.get(i, c).clone();
                a.add_row_multiple(i, r, &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &RatMatrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Solves `A x = b`. Returns `None` for an inconsistent system; free variables are
/// set to zero.
pub fn solve_rational(a: &RatMatrix, b: &[Rat]) -> Option<Vec<Rat>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length");
    let (m, n) = (a.rows(), a.cols());
    let mut aug = RatMatrix::zeros(m, n + 1);
    for i in 0..m {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n, b[i].clone());
    }
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rat::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(r, n).clone();
    }
    Some(x)
}

pub fn inverse(m: &RatMatrix) -> Result<RatMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut aug = RatMatrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, m.get(i, j).clone());
        }
        aug.set(i, n + i, Rat::one());
    }
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Dependent);
    }
    let mut out = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, aug.get(i, n + j).clone());
        }
    }
    Ok(out)
}
