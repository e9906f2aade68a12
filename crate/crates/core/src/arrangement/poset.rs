//! Intersection poset of an arrangement by subset enumeration, with Möbius
//! values and the characteristic polynomial.

use num_bigint::BigInt;
use num_traits::Zero;

use super::Arrangement;
use crate::exactmath::UniPoly;
use crate::rational::Rat;
use crate::{Error, Result};

pub const MAX_N: usize = 12;
pub const MAX_D: usize = 4;

/// A nonempty intersection of hyperplanes, identified by the set of all
/// arrangement hyperplanes containing it.
#[derive(Debug, Clone)]
pub struct Flat {
    /// Indices of every hyperplane containing the flat (its closure).
    pub hyperplanes: Vec<usize>,
    pub dim: usize,
    pub moebius: BigInt,
}

/// All nonempty intersections ordered by reverse inclusion; the bottom flat
/// is the whole space with Möbius value 1.
#[derive(Debug, Clone)]
pub struct IntersectionPoset {
    pub d: usize,
    pub flats: Vec<Flat>,
}

/// Reduced row echelon form of an augmented system `[A | b]` for
/// `A θ = b`; returns `(rank, consistent)` and leaves `m` reduced.
fn rref(m: &mut Vec<Vec<Rat>>, vars: usize) -> (usize, bool) {
    let rows = m.len();
    let mut rank = 0;
    for col in 0..vars {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].clone();
        for c in col..=vars {
            m[rank][c] = &m[rank][c] / &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=vars {
                    let sub = &f * &m[rank][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        rank += 1;
    }
    let consistent = m
        .iter()
        .all(|row| row[..vars].iter().any(|x| !x.is_zero()) || row[vars].is_zero());
    (rank, consistent)
}

fn rows_for(a: &Arrangement, subset: &[usize]) -> Vec<Vec<Rat>> {
    subset
        .iter()
        .map(|&i| {
            let h = &a.hyperplanes[i];
            let mut row = h.normal.clone();
            row.push(-h.offset.clone());
            row
        })
        .collect()
}

/// Indices of all hyperplanes containing the solution set of the (already
/// consistent) subset system.
fn closure(a: &Arrangement, subset: &[usize], subset_rank: usize) -> Vec<usize> {
    (0..a.n())
        .filter(|&i| {
            let mut ext: Vec<usize> = subset.to_vec();
            ext.push(i);
            let mut m = rows_for(a, &ext);
            let (rank, consistent) = rref(&mut m, a.d);
            consistent && rank == subset_rank
        })
        .collect()
}

pub fn build_poset(a: &Arrangement) -> Result<IntersectionPoset> {
    if a.n() > MAX_N || a.d > MAX_D {
        return Err(Error::TooLarge {
            max_n: MAX_N,
            max_d: MAX_D,
        });
    }
    // every flat arises as the closure of some subset of hyperplanes
    let mut raw: Vec<(Vec<usize>, usize)> = Vec::new(); // (closure, dim)
    for mask in 0u32..(1 << a.n()) {
        let subset: Vec<usize> = (0..a.n()).filter(|i| mask >> i & 1 == 1).collect();
        let mut m = rows_for(a, &subset);
        let (rank, consistent) = rref(&mut m, a.d);
        if !consistent {
            continue;
        }
        let cl = closure(a, &subset, rank);
        if !raw.iter().any(|(c, _)| c == &cl) {
            raw.push((cl, a.d - rank));
        }
    }
    // Möbius by recursion over strictly smaller closures, bottom first
    raw.sort_by_key(|(c, _)| c.len());
    let mut flats: Vec<Flat> = Vec::with_capacity(raw.len());
    for (cl, dim) in raw {
        let mut mu = BigInt::zero();
        for f in &flats {
            if f.hyperplanes.len() < cl.len() && f.hyperplanes.iter().all(|h| cl.contains(h)) {
                mu -= &f.moebius;
            }
        }
        if cl.is_empty() {
            mu = BigInt::from(1);
        }
        flats.push(Flat {
            hyperplanes: cl,
            dim,
            moebius: mu,
        });
    }
    Ok(IntersectionPoset { d: a.d, flats })
}

/// `χ(t) = Σ_flats μ(x) t^{dim x}`.
pub fn characteristic_polynomial(p: &IntersectionPoset) -> UniPoly {
    let mut coeffs = vec![Rat::zero(); p.d + 1];
    for f in &p.flats {
        coeffs[f.dim] += Rat::from(f.moebius.clone());
    }
    UniPoly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::tests::hp;
    use crate::rational::rat_int;

    fn arr(hps: Vec<super::super::Hyperplane>, d: usize) -> Arrangement {
        Arrangement::new(d, hps).unwrap()
    }

    #[test]
    fn two_crossing_lines() {
        let a = arr(vec![hp(&[1, 0], 0), hp(&[0, 1], 0)], 2);
        let p = build_poset(&a).unwrap();
        assert_eq!(p.flats.len(), 4); // plane, two lines, one point
        let point = p.flats.iter().find(|f| f.dim == 0).unwrap();
        assert_eq!(point.moebius, BigInt::from(1));
    }

    #[test]
    fn two_parallel_lines_have_no_point_flat() {
        let a = arr(vec![hp(&[1, 0], 0), hp(&[1, 0], -1)], 2);
        let p = build_poset(&a).unwrap();
        assert_eq!(p.flats.len(), 3);
        assert!(p.flats.iter().all(|f| f.dim > 0));
    }

    #[test]
    fn three_generic_lines() {
        let a = arr(
            vec![hp(&[1, 0], 0), hp(&[0, 1], 0), hp(&[1, 1], -1)],
            2,
        );
        let p = build_poset(&a).unwrap();
        let points: Vec<_> = p.flats.iter().filter(|f| f.dim == 0).collect();
        assert_eq!(points.len(), 3);
        assert!(points.iter().all(|f| f.moebius == BigInt::from(1)));
    }

    #[test]
    fn characteristic_polynomials() {
        let empty = arr(vec![], 2);
        let chi = characteristic_polynomial(&build_poset(&empty).unwrap());
        assert_eq!(chi, UniPoly::from_i64(&[0, 0, 1]));

        let one_line = arr(vec![hp(&[1, 0], 0)], 2);
        let chi = characteristic_polynomial(&build_poset(&one_line).unwrap());
        assert_eq!(chi, UniPoly::from_i64(&[0, -1, 1]));
    }

    #[test]
    fn generic_arrangement_chi_is_binomial_alternation() {
        // 4 generic lines: chi = t^2 - 4t + 6
        let a = arr(
            vec![
                hp(&[1, 0], 0),
                hp(&[0, 1], 0),
                hp(&[1, 1], -1),
                hp(&[1, -1], -2),
            ],
            2,
        );
        let chi = characteristic_polynomial(&build_poset(&a).unwrap());
        assert_eq!(chi, UniPoly::from_i64(&[6, -4, 1]));
        assert_eq!(chi.eval(&rat_int(1)), rat_int(3));
    }

    #[test]
    fn size_limits() {
        let hps: Vec<_> = (0..13).map(|i| hp(&[1, i], 0)).collect();
        assert!(matches!(
            Arrangement::new(2, hps).and_then(|a| build_poset(&a)),
            Err(Error::TooLarge { .. })
        ));
    }
}
