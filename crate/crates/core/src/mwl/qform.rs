//! Integral equivalence of positive-definite rational quadratic forms.
//!
//! The representation sets of a definite form are finite, so the search below is
//! exhaustive: a negative answer is a proof.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::{self, rat_int, Int, IntMatrix, Rat, RatMatrix};
use crate::error::{Error, Result};
use crate::frame::enumerate::short_vectors;
use crate::frame::is_positive_definite;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QformOutcome {
    /// `P` unimodular with `P·g1·Pᵀ = g2`.
    Equivalent { transform: IntMatrix },
    Inequivalent { reason: String },
}

impl QformOutcome {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, QformOutcome::Equivalent { .. })
    }
}

fn rvec(v: &[Int]) -> Vec<Rat> {
    v.iter().map(rat_int).collect()
}

fn l1(v: &[Int]) -> Int {
    v.iter().map(|x| x.abs()).sum()
}

/// Vectors `x` with `x·g·xᵀ = value`, simplest first.
fn representations(g: &RatMatrix, value: &Rat) -> Result<Vec<Vec<Int>>> {
    let mut out: Vec<Vec<Int>> = short_vectors(g, None, value)?
        .into_iter()
        .filter(|x| {
            let r = rvec(x);
            &arith::bilinear(g, &r, &r) == value
        })
        .collect();
    out.sort_by(|a, b| match l1(a).cmp(&l1(b)) {
        Ordering::Equal => b.cmp(a),
        o => o,
    });
    Ok(out)
}

/// Smallest modulus `m ≤ 64` for which `x·g·xᵀ = value` has no solution modulo `m`
/// after clearing denominators, or `None`.
pub fn modular_obstruction(g: &RatMatrix, value: &Rat) -> Option<u64> {
    let n = g.rows();
    if n > 3 {
        return None;
    }
    let d = arith::common_denominator(g.data().iter().chain(core::iter::once(value)));
    let dr = rat_int(&d);
    let coef: Vec<Vec<Int>> = (0..n)
        .map(|i| (0..n).map(|j| (g.get(i, j) * &dr).to_integer()).collect())
        .collect();
    let target = (value * &dr).to_integer();
    for m in 2u64..=64 {
        let mi = Int::from(m);
        let total = m.pow(n as u32);
        let mut found = false;
        for idx in 0..total {
            let mut x = vec![Int::zero(); n];
            let mut r = idx;
            for xi in x.iter_mut() {
                *xi = Int::from(r % m);
                r /= m;
            }
            let mut s = Int::zero();
            for i in 0..n {
                for j in 0..n {
                    s += &coef[i][j] * &x[i] * &x[j];
                }
            }
            if (s - &target).mod_floor(&mi).is_zero() {
                found = true;
                break;
            }
        }
        if !found {
            return Some(m);
        }
    }
    None
}

/// Decides whether `g2 = P·g1·Pᵀ` for some `P ∈ GL_n(ℤ)`.
pub fn qform_equivalent(g1: &RatMatrix, g2: &RatMatrix) -> Result<QformOutcome> {
    let n = g1.rows();
    if !g1.is_square() || !g2.is_square() || g2.rows() != n {
        return Err(Error::Dimension(format!(
            "forms of shapes {}x{} and {}x{}",
            g1.rows(),
            g1.cols(),
            g2.rows(),
            g2.cols()
        )));
    }
    if !is_positive_definite(g1) || !is_positive_definite(g2) {
        return Err(Error::NotDefinite);
    }
    if arith::det(g1)? != arith::det(g2)? {
        return Ok(QformOutcome::Inequivalent {
            reason: "determinants differ".into(),
        });
    }
    let mut cands = Vec::with_capacity(n);
    for i in 0..n {
        let v = g2.get(i, i);
        let reps = representations(g1, v)?;
        if reps.is_empty() {
            let reason = match modular_obstruction(g1, v) {
                Some(m) => format!("{} is not represented, not even modulo {m}", arith::rat_to_string(v)),
                None => format!("{} is not represented", arith::rat_to_string(v)),
            };
            return Ok(QformOutcome::Inequivalent { reason });
        }
        cands.push(reps);
    }
    let mut rows: Vec<Vec<Int>> = Vec::with_capacity(n);
    if search(g1, g2, &cands, &mut rows) {
        return Ok(QformOutcome::Equivalent {
            transform: IntMatrix::from_rows(rows, n)?,
        });
    }
    Ok(QformOutcome::Inequivalent {
        reason: "no unimodular transform exists (exhaustive search)".into(),
    })
}

fn search(g1: &RatMatrix, g2: &RatMatrix, cands: &[Vec<Vec<Int>>], rows: &mut Vec<Vec<Int>>) -> bool {
    let i = rows.len();
    let n = cands.len();
    if i == n {
        let p = arith::int_matrix_to_rat(&IntMatrix::from_rows(rows.clone(), n).expect("shape"));
        return arith::det(&p).map(|d| d.abs() == Rat::from_integer(Int::from(1))).unwrap_or(false);
    }
    for c in &cands[i] {
        let cr = rvec(c);
        let ok = rows
            .iter()
            .enumerate()
            .all(|(j, r)| &arith::bilinear(g1, &rvec(r), &cr) == g2.get(j, i));
        if ok {
            rows.push(c.clone());
            if search(g1, g2, cands, rows) {
                return true;
            }
            rows.pop();
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn m2(a: Rat, b: Rat, d: Rat) -> RatMatrix {
        RatMatrix::from_rows(vec![vec![a, b.clone()], vec![b, d]], 2).unwrap()
    }

    #[test]
    fn v1_v9_transform() {
        let g = m2(rat(61, 40), rat(1, 20), rat(1, 10));
        let h = m2(rat(61, 40), rat(59, 40), rat(61, 40));
        let QformOutcome::Equivalent { transform } = qform_equivalent(&g, &h).unwrap() else {
            panic!("expected equivalence");
        };
        let expect = IntMatrix::from_rows(vec![vec![1.into(), 0.into()], vec![1.into(), (-1).into()]], 2).unwrap();
        assert_eq!(transform, expect);
    }

    #[test]
    fn identity_first() {
        let g = m2(rat(61, 40), rat(1, 20), rat(1, 10));
        let QformOutcome::Equivalent { transform } = qform_equivalent(&g, &g).unwrap() else {
            panic!();
        };
        assert_eq!(transform, IntMatrix::identity(2));
    }

    #[test]
    fn same_determinant_not_equivalent() {
        let g = m2(rat(61, 40), rat(1, 20), rat(1, 10));
        let h = m2(rat(1, 10), Rat::zero(), rat(3, 2));
        assert_eq!(arith::det(&g).unwrap(), arith::det(&h).unwrap());
        let out = qform_equivalent(&h, &g).unwrap();
        let QformOutcome::Inequivalent { reason } = out else { panic!() };
        assert!(reason.contains("61/40"), "{reason}");
        assert_eq!(modular_obstruction(&h, &rat(61, 40)), Some(2));
        assert!(!qform_equivalent(&g, &h).unwrap().is_equivalent());
    }

    #[test]
    fn rejects_indefinite() {
        let g = m2(Rat::zero(), rat(1, 1), Rat::zero());
        assert!(matches!(qform_equivalent(&g, &g), Err(Error::NotDefinite)));
    }
}
