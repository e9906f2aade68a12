//! Fraction-free (Bareiss) determinants over an exact ring.
//!
//! Every division performed by the algorithm is exact in the coefficient
//! ring, so it works for big integers and for polynomial entries alike.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::unipoly::UniPoly;

/// Minimal ring interface for Bareiss elimination.
pub trait BareissRing: Clone {
    fn b_zero() -> Self;
    fn b_one() -> Self;
    fn b_is_zero(&self) -> bool;
    fn b_mul(&self, other: &Self) -> Self;
    fn b_sub(&self, other: &Self) -> Self;
    fn b_neg(&self) -> Self;
    /// Exact division; may assume divisibility.
    fn b_exact_div(&self, other: &Self) -> Self;
}

impl BareissRing for BigInt {
    fn b_zero() -> Self {
        BigInt::zero()
    }
    fn b_one() -> Self {
        BigInt::one()
    }
    fn b_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn b_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn b_sub(&self, other: &Self) -> Self {
        self - other
    }
    fn b_neg(&self) -> Self {
        -self
    }
    fn b_exact_div(&self, other: &Self) -> Self {
        self / other
    }
}

impl BareissRing for UniPoly {
    fn b_zero() -> Self {
        UniPoly::zero()
    }
    fn b_one() -> Self {
        UniPoly::one()
    }
    fn b_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn b_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn b_sub(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn b_neg(&self) -> Self {
        self.neg()
    }
    fn b_exact_div(&self, other: &Self) -> Self {
        self.exact_div(other)
    }
}

/// Determinant of a square matrix (row-major) by Bareiss elimination with
/// row pivoting.
pub fn determinant<T: BareissRing>(matrix: &[Vec<T>]) -> T {
    let n = matrix.len();
    if n == 0 {
        return T::b_one();
    }
    debug_assert!(matrix.iter().all(|r| r.len() == n));
    let mut m: Vec<Vec<T>> = matrix.to_vec();
    let mut sign_flip = false;
    let mut prev = T::b_one();
    for k in 0..n - 1 {
        if m[k][k].b_is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].b_is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return T::b_zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].b_mul(&m[i][j]).b_sub(&m[i][k].b_mul(&m[k][j]));
                m[i][j] = num.b_exact_div(&prev);
            }
            m[i][k] = T::b_zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.b_neg()
    } else {
        det
    }
}
