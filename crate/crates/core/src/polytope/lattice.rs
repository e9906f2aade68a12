//! Integer lattice machinery: kernels of integer matrices by unimodular row
//! reduction and saturated sublattice bases.
//!
//! A kernel basis computed this way generates the full group of integer
//! solutions, so `kernel(kernel(A))` is exactly the saturation
//! `span_Q(rows of A) ∩ Z^d`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::rational::Rat;

/// Basis of `{x ∈ Z^d : A x = 0}` for an integer matrix with `d` columns.
/// Rows may be empty; an empty matrix has the whole lattice as kernel.
pub fn integer_kernel(a: &[Vec<BigInt>], d: usize) -> Vec<Vec<BigInt>> {
    // reduce T = A^T by unimodular row operations, tracking U with U T = H;
    // rows of U facing zero rows of H are a kernel basis of A
    let m = a.len();
    let mut t: Vec<Vec<BigInt>> = (0..d)
        .map(|i| (0..m).map(|j| a[j][i].clone()).collect())
        .collect();
    let mut u: Vec<Vec<BigInt>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::zero() })
                .collect()
        })
        .collect();
    let mut row = 0;
    for col in 0..m {
        loop {
            // smallest nonzero entry in this column at or below `row`
            let mut pivot: Option<usize> = None;
            for r in row..d {
                if !t[r][col].is_zero()
                    && pivot.is_none_or(|p| t[r][col].abs() < t[p][col].abs())
                {
                    pivot = Some(r);
                }
            }
            let Some(p) = pivot else { break };
            t.swap(row, p);
            u.swap(row, p);
            let mut done = true;
            for r in row + 1..d {
                if !t[r][col].is_zero() {
                    let q = &t[r][col] / &t[row][col];
                    if !q.is_zero() {
                        for c in 0..m {
                            let sub = &q * &t[row][c];
                            t[r][c] = &t[r][c] - &sub;
                        }
                        for c in 0..d {
                            let sub = &q * &u[row][c];
                            u[r][c] = &u[r][c] - &sub;
                        }
                    }
                    if !t[r][col].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                row += 1;
                break;
            }
        }
        if row == d {
            break;
        }
    }
    u.drain(..row);
    u
}

/// Basis (rows) of the saturated lattice `span_Q(vectors) ∩ Z^d`.
pub fn saturated_span_basis(vectors: &[Vec<i64>], d: usize) -> Vec<Vec<BigInt>> {
    let a: Vec<Vec<BigInt>> = vectors
        .iter()
        .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let orth = integer_kernel(&a, d);
    integer_kernel(&orth, d)
}

/// Coordinates of `v` in the given (independent) basis rows, when `v` lies
/// in their rational span. Saturated bases give integer coordinates.
pub fn coords_in_basis(basis: &[Vec<BigInt>], v: &[i64]) -> Option<Vec<Rat>> {
    let r = basis.len();
    let d = v.len();
    // solve basis^T x = v by rational elimination on the d x (r+1) system
    let mut m: Vec<Vec<Rat>> = (0..d)
        .map(|i| {
            let mut row: Vec<Rat> = basis.iter().map(|b| Rat::from(b[i].clone())).collect();
            row.push(Rat::from(BigInt::from(v[i])));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prow = 0;
    for col in 0..r {
        let Some(p) = (prow..d).find(|&i| !m[i][col].is_zero()) else {
            return None; // dependent basis
        };
        m.swap(prow, p);
        let inv = m[prow][col].clone();
        for c in col..=r {
            m[prow][c] = &m[prow][c] / &inv;
        }
        for i in 0..d {
            if i != prow && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for c in col..=r {
                    let sub = &f * &m[prow][c];
                    m[i][c] = &m[i][c] - &sub;
                }
            }
        }
        pivots.push(col);
        prow += 1;
    }
    // consistency: remaining rows must have zero RHS
    if m.iter().skip(prow).any(|row| !row[r].is_zero()) {
        return None;
    }
    Some((0..r).map(|i| m[i][r].clone()).collect())
}

/// Rank of a set of integer vectors over the rationals.
pub fn rank(vectors: &[Vec<i64>], d: usize) -> usize {
    d - integer_kernel(
        &vectors
            .iter()
            .map(|v| v.iter().map(|&x| BigInt::from(x)).collect())
            .collect::<Vec<_>>(),
        d,
    )
    .len()
}

/// Divides out the gcd of the entries; the zero vector stays zero.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    use num_integer::Integer;
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g == 0 {
        v.to_vec()
    } else {
        v.iter().map(|&x| x / g).collect()
    }
}
