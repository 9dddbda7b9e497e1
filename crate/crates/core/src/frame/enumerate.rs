//! LLL reduction and Fincke–Pohst enumeration for positive-definite rational Gram
//! matrices, all in exact arithmetic.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{rat, rat_int, Int, IntMatrix, Rat, RatMatrix};
use crate::error::{Error, Result};

/// Nearest integer, halves rounded up.
pub fn round_rat(x: &Rat) -> Int {
    (x + rat(1, 2)).floor().to_integer()
}

struct Gso {
    mu: Vec<Vec<Rat>>,
    b: Vec<Rat>,
}

fn gso(q: &RatMatrix) -> Result<Gso> {
    let n = q.rows();
    let mut mu = vec![vec![Rat::zero(); n]; n];
    let mut b = vec![Rat::zero(); n];
    for i in 0..n {
        for j in 0..i {
            let mut s = q.get(i, j).clone();
            for k in 0..j {
                s -= &mu[j][k] * &mu[i][k] * &b[k];
            }
            mu[i][j] = s / &b[j];
        }
        let mut s = q.get(i, i).clone();
        for k in 0..i {
            s -= &mu[i][k] * &mu[i][k] * &b[k];
        }
        if !s.is_positive() {
            return Err(Error::NotDefinite);
        }
        b[i] = s;
    }
    Ok(Gso { mu, b })
}

/// LLL-reduces a positive-definite Gram matrix. Returns `(q', u)` with
/// `q' = u·q·uᵀ` and `u` unimodular; rows of `u` are the reduced basis in the
/// original coordinates.
pub fn lll(q: &RatMatrix) -> Result<(RatMatrix, IntMatrix)> {
    let n = q.rows();
    let mut q = q.clone();
    let mut u = IntMatrix::identity(n);
    if n == 0 {
        return Ok((q, u));
    }
    let mut g = gso(&q)?;
    let delta = rat(3, 4);
    let mut k = 1;
    while k < n {
        reduce(&mut q, &mut u, &mut g, k, k - 1);
        let lhs = g.b[k].clone();
        let rhs = (&delta - &g.mu[k][k - 1] * &g.mu[k][k - 1]) * &g.b[k - 1];
        if lhs < rhs {
            q.swap_rows(k, k - 1);
            q.swap_cols(k, k - 1);
            u.swap_rows(k, k - 1);
            g = gso(&q)?;
            k = k.saturating_sub(1).max(1);
        } else {
            for l in (0..k.saturating_sub(1)).rev() {
                reduce(&mut q, &mut u, &mut g, k, l);
            }
            k += 1;
        }
    }
    Ok((q, u))
}

fn reduce(q: &mut RatMatrix, u: &mut IntMatrix, g: &mut Gso, k: usize, l: usize) {
    let r = round_rat(&g.mu[k][l]);
    if r.is_zero() {
        return;
    }
    let rr = rat_int(&r);
    let neg = -rr.clone();
    q.add_row_multiple(k, l, &neg);
    q.add_col_multiple(k, l, &neg);
    u.add_row_multiple(k, l, &(-r));
    for i in 0..l {
        let d = &rr * &g.mu[l][i];
        g.mu[k][i] -= d;
    }
    g.mu[k][l] -= rr;
}

/// Upper-triangular Cholesky data: `Q(x) = Σ_i c_ii (x_i + Σ_{j>i} c_ij x_j)²`.
fn cholesky(q: &RatMatrix) -> Result<RatMatrix> {
    let n = q.rows();
    let mut a = q.clone();
    for i in 0..n {
        if !a.get(i, i).is_positive() {
            return Err(Error::NotDefinite);
        }
        for j in i + 1..n {
            let v = a.get(i, j).clone();
            a.set(j, i, v);
            let w = a.get(i, j) / a.get(i, i);
            a.set(i, j, w);
        }
        for k in i + 1..n {
            for l in k..n {
                let v = a.get(k, l) - a.get(k, i) * a.get(i, l);
                a.set(k, l, v);
            }
        }
    }
    Ok(a)
}

/// All integer vectors `x` with `(x − c)ᵀ q (x − c) ≤ bound`, where `q` is
/// positive definite and `c` a rational center (zero when `None`).
pub fn short_vectors(q: &RatMatrix, center: Option<&[Rat]>, bound: &Rat) -> Result<Vec<Vec<Int>>> {
    let n = q.rows();
    let chol = cholesky(q)?;
    let c: Vec<Rat> = match center {
        Some(c) => c.to_vec(),
        None => vec![Rat::zero(); n],
    };
    let mut out = Vec::new();
    if n == 0 {
        if !bound.is_negative() {
            out.push(Vec::new());
        }
        return Ok(out);
    }
    let mut x = vec![Int::zero(); n];
    descend(&chol, &c, n - 1, bound.clone(), &mut x, &mut out);
    Ok(out)
}

fn descend(chol: &RatMatrix, c: &[Rat], i: usize, rem: Rat, x: &mut Vec<Int>, out: &mut Vec<Vec<Int>>) {
    let n = c.len();
    let mut center = c[i].clone();
    for j in i + 1..n {
        center -= chol.get(i, j) * (rat_int(&x[j]) - &c[j]);
    }
    let qii = chol.get(i, i).clone();
    let start = round_rat(&center);
    let visit = |v: Int, x: &mut Vec<Int>, out: &mut Vec<Vec<Int>>| -> bool {
        let d = rat_int(&v) - &center;
        let cost = &qii * &d * &d;
        if cost > rem {
            return false;
        }
        x[i] = v;
        if i == 0 {
            out.push(x.clone());
        } else {
            descend(chol, c, i - 1, &rem - &cost, x, out);
        }
        true
    };
    let mut v = start.clone();
    while visit(v.clone(), x, out) {
        v += Int::one();
    }
    let mut v = start - Int::one();
    while visit(v.clone(), x, out) {
        v -= Int::one();
    }
    x[i] = Int::zero();
}

/// All vectors of norm exactly `−2` for a negative-definite Gram matrix, in the
/// coordinates of the given basis, sorted.
pub fn roots_of(gram: &RatMatrix) -> Result<Vec<Vec<Int>>> {
    let q = gram.map(|x| -x.clone());
    let (qr, u) = lll(&q)?;
    let two = rat(2, 1);
    let mut roots: Vec<Vec<Int>> = short_vectors(&qr, None, &two)?
        .into_iter()
        .filter(|x| {
            let xr: Vec<Rat> = x.iter().map(rat_int).collect();
            crate::arith::bilinear(&qr, &xr, &xr) == two
        })
        .map(|x| u.vec_mul(&x))
        .collect();
    roots.sort();
    Ok(roots)
}

/// Whether an integer vector is primitive (gcd of entries is one).
pub fn is_primitive_vector(v: &[Int]) -> bool {
    v.iter().fold(Int::zero(), |acc, x| acc.gcd(x)).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{bilinear, det, int_matrix_to_rat};
    use crate::rootlat::{Family, RootLattice};

    fn root_count(f: Family, n: usize) -> usize {
        let l = RootLattice::build(f, n).unwrap();
        roots_of(&l.gram_rat()).unwrap().len()
    }

    #[test]
    fn root_counts_match_formulas() {
        assert_eq!(root_count(Family::A, 1), 2);
        assert_eq!(root_count(Family::A, 7), 56);
        assert_eq!(root_count(Family::A, 9), 90);
        assert_eq!(root_count(Family::D, 4), 24);
        assert_eq!(root_count(Family::D, 6), 60);
        assert_eq!(root_count(Family::E, 6), 72);
        assert_eq!(root_count(Family::E, 7), 126);
    }

    #[test]
    fn norm_six_line_has_no_roots() {
        let g = RatMatrix::from_rows(vec![vec![rat(-6, 1)]], 1).unwrap();
        assert!(roots_of(&g).unwrap().is_empty());
    }

    #[test]
    fn indefinite_rejected() {
        let g = RatMatrix::from_rows(vec![vec![rat(0, 1), rat(1, 1)], vec![rat(1, 1), rat(0, 1)]], 2).unwrap();
        assert!(matches!(roots_of(&g), Err(Error::NotDefinite)));
    }

    #[test]
    fn lll_preserves_lattice() {
        let e8 = RootLattice::build(Family::E, 8).unwrap();
        let q = int_matrix_to_rat(&e8.gram).map(|x| -x.clone());
        let (qr, u) = lll(&q).unwrap();
        let ur = int_matrix_to_rat(&u);
        assert_eq!(ur.mul(&q).unwrap().mul(&ur.transpose()).unwrap(), qr);
        assert_eq!(det(&ur).unwrap().abs(), Rat::one());
    }

    #[test]
    fn centered_enumeration() {
        let q = RatMatrix::identity(2);
        let c = [rat(1, 2), rat(0, 1)];
        let pts = short_vectors(&q, Some(&c), &rat(1, 4)).unwrap();
        assert_eq!(pts.len(), 2);
        for p in &pts {
            let d: Vec<Rat> = p.iter().zip(&c).map(|(a, b)| rat_int(a) - b).collect();
            assert!(bilinear(&q, &d, &d) <= rat(1, 4));
        }
    }
}
