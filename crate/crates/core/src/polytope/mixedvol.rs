//! Normalized mixed volumes by inclusion–exclusion over Minkowski sums.

use num_traits::{One, Zero};

use super::hull::{convex_hull, minkowski_sum, LatticePolytope};
use super::lattice::{coords_in_basis, rank, saturated_span_basis};
use crate::rational::Rat;
use crate::{Error, Result};

/// Normalized mixed volume of `k` lattice polytopes with respect to the
/// rank-`k` saturation of their common span:
///
/// `V(P_1, …, P_k) = Σ_{∅≠S⊆[k]} (−1)^{k−|S|} vol(Σ_{i∈S} P_i)`
///
/// with `vol` the Euclidean volume in lattice coordinates. Then
/// `V(P, …, P) = k!·vol(P)` and a unimodular simplex gives 1. An empty list
/// returns 1; a common span of rank below `k` gives 0; rank above `k` is an
/// error.
pub fn mixed_volume(ps: &[LatticePolytope]) -> Result<Rat> {
    let k = ps.len();
    if k == 0 {
        return Ok(Rat::one());
    }
    let d = ps[0].ambient_dim();
    if let Some(p) = ps.iter().find(|p| p.ambient_dim() != d) {
        return Err(Error::DimensionMismatch(d, p.ambient_dim()));
    }
    // direction vectors of all polytopes span the common lattice
    let mut vectors = Vec::new();
    for p in ps {
        let base = &p.vertices()[0];
        for v in p.vertices() {
            vectors.push(v.iter().zip(base).map(|(a, b)| a - b).collect::<Vec<i64>>());
        }
    }
    let r = rank(&vectors, d);
    if r > k {
        return Err(Error::SubspaceMismatch(k));
    }
    if r < k {
        return Ok(Rat::zero());
    }
    let basis = saturated_span_basis(&vectors, d);
    let reduced: Vec<LatticePolytope> = ps
        .iter()
        .map(|p| {
            let base = &p.vertices()[0];
            let pts: Vec<Vec<i64>> = p
                .vertices()
                .iter()
                .map(|v| {
                    let diff: Vec<i64> = v.iter().zip(base).map(|(a, b)| a - b).collect();
                    coords_in_basis(&basis, &diff)
                        .expect("vertex in common span")
                        .iter()
                        .map(|x| {
                            debug_assert!(x.is_integer());
                            i64::try_from(&x.to_integer()).expect("desk-scale coordinate")
                        })
                        .collect()
                })
                .collect();
            convex_hull(&pts, k).expect("hull in lattice coordinates")
        })
        .collect();
    let mut total = Rat::zero();
    for mask in 1u32..(1 << k) {
        let members: Vec<&LatticePolytope> = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| &reduced[i])
            .collect();
        let mut sum = members[0].clone();
        for m in &members[1..] {
            sum = minkowski_sum(&sum, m)?;
        }
        let vol = sum.euclidean_volume();
        if (k - members.len()) % 2 == 0 {
            total += vol;
        } else {
            total -= vol;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn poly(pts: &[[i64; 2]]) -> LatticePolytope {
        convex_hull(&pts.iter().map(|p| p.to_vec()).collect::<Vec<_>>(), 2).unwrap()
    }

    fn square() -> LatticePolytope {
        poly(&[[0, 0], [1, 0], [0, 1], [1, 1]])
    }

    #[test]
    fn empty_list_is_one() {
        assert_eq!(mixed_volume(&[]).unwrap(), rat_int(1));
    }

    #[test]
    fn square_with_itself() {
        assert_eq!(mixed_volume(&[square(), square()]).unwrap(), rat_int(2));
    }

    #[test]
    fn square_with_triangle() {
        let tri = poly(&[[0, 0], [1, 0], [0, 1]]);
        assert_eq!(mixed_volume(&[square(), tri]).unwrap(), rat_int(2));
    }

    #[test]
    fn unimodular_simplex_is_one() {
        let tri = poly(&[[0, 0], [1, 0], [0, 1]]);
        assert_eq!(mixed_volume(&[tri.clone(), tri]).unwrap(), rat_int(1));
    }

    #[test]
    fn diagonal_of_itself_is_factorial_volume() {
        let p = poly(&[[0, 0], [2, 0], [2, 1], [1, 2], [0, 2]]);
        // k! * vol = 2 * 7/2 = 7
        assert_eq!(mixed_volume(&[p.clone(), p]).unwrap(), rat_int(7));
    }

    #[test]
    fn parallel_segments_vanish() {
        let a = poly(&[[0, 0], [1, 1]]);
        let b = poly(&[[0, 0], [2, 2]]);
        assert_eq!(mixed_volume(&[a, b]).unwrap(), rat_int(0));
    }

    #[test]
    fn crossing_segments() {
        // V([0,e1], [0,e2]) = 1 (area of the unit square)
        let a = poly(&[[0, 0], [1, 0]]);
        let b = poly(&[[0, 0], [0, 1]]);
        assert_eq!(mixed_volume(&[a, b]).unwrap(), rat_int(1));
    }

    #[test]
    fn lower_dimensional_faces_use_span_lattice() {
        // one diagonal segment: rank-1 common lattice, length 2 in it
        let seg = poly(&[[0, 0], [2, 2]]);
        assert_eq!(mixed_volume(&[seg]).unwrap(), rat_int(2));
    }

    #[test]
    fn span_too_big_is_error() {
        // one full-dimensional polytope cannot fit a rank-1 lattice
        assert!(matches!(
            mixed_volume(&[square()]),
            Err(Error::SubspaceMismatch(1))
        ));
    }

    #[test]
    fn more_polytopes_than_span_vanishes() {
        let a = poly(&[[0, 0], [1, 0]]);
        let b = poly(&[[0, 0], [0, 1]]);
        let c = poly(&[[0, 0], [1, 1]]);
        assert_eq!(mixed_volume(&[a, b, c]).unwrap(), rat_int(0));
    }

    #[test]
    fn point_annihilates() {
        let pt = poly(&[[5, 7]]);
        assert_eq!(mixed_volume(&[square(), pt]).unwrap(), rat_int(0));
    }

    #[test]
    fn symmetry_small() {
        let a = poly(&[[0, 0], [2, 0], [1, 1]]);
        let b = poly(&[[0, 0], [1, 0], [1, 2], [0, 1]]);
        assert_eq!(
            mixed_volume(&[a.clone(), b.clone()]).unwrap(),
            mixed_volume(&[b, a]).unwrap()
        );
    }
}
