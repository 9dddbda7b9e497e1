//! Exact integer and rational linear algebra.
//!
//! Integers are [`BigInt`](num_bigint::BigInt) and rationals are
//! [`BigRational`](num_rational::BigRational), which is always stored reduced with a
//! positive denominator.

mod matrix;
mod smith;
mod solve;

pub use matrix::Matrix;
pub use smith::{hnf, integer_kernel, saturate, snf, HnfResult, SnfResult};
pub use solve::{det, inverse, rank, solve_rational};

use alloc::string::String;
use alloc::vec::Vec;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;
pub type IntMatrix = Matrix<Int>;
pub type RatMatrix = Matrix<Rat>;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_int(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

/// `"n/d"` or `"n"` when the denominator is one.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        alloc::format!("{}", r.numer())
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"n"` or `"n/d"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().ok()?;
            let d: Int = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => s.parse::<Int>().ok().map(Rat::from_integer),
    }
}

pub fn int_matrix_to_rat(m: &IntMatrix) -> RatMatrix {
    m.map(rat_int)
}

/// Returns the matrix as integers if every entry is integral.
pub fn rat_matrix_to_int(m: &RatMatrix) -> Option<IntMatrix> {
    if m.data().iter().all(|r| r.is_integer()) {
        Some(m.map(|r| r.to_integer()))
    } else {
        None
    }
}

/// Least common multiple of all denominators (one for an empty slice).
pub fn common_denominator<'a, I: IntoIterator<Item = &'a Rat>>(values: I) -> Int {
    values
        .into_iter()
        .fold(Int::one(), |acc, r| acc.lcm(r.denom()))
}

/// Scales a rational vector to a primitive integer vector with the same direction
/// (first nonzero entry kept at its sign).
pub fn primitive_direction(v: &[Rat]) -> Vec<Int> {
    let d = common_denominator(v);
    let ints: Vec<Int> = v.iter().map(|r| (r * rat_int(&d)).to_integer()).collect();
    let g = ints.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

pub fn dot<T>(a: &[T], b: &[T]) -> T
where
    T: Clone + Zero + core::ops::Mul<Output = T>,
{
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Bilinear form `aᵀ G b`.
pub fn bilinear(gram: &RatMatrix, a: &[Rat], b: &[Rat]) -> Rat {
    let gb = gram.mul_vec(b);
    dot(a, &gb)
}

pub fn is_integral(v: &[Rat]) -> bool {
    v.iter().all(|r| r.is_integer())
}

pub(crate) fn abs_cmp(a: &Int, b: &Int) -> core::cmp::Ordering {
    a.abs().cmp(&b.abs())
}
