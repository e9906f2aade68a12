//! Region counts via the characteristic polynomial and the coned-degree
//! route: bounded regions, total regions, the linear-model ML degree, and
//! the leading-coefficient degree of the algebra generated by reciprocals
//! of the homogenized forms.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poset::{build_poset, characteristic_polynomial};
use super::{Arrangement, Hyperplane};
use crate::rational::{rat_int, Rat};
use crate::{Error, Result};

fn chi_at(a: &Arrangement, t: i64) -> Result<BigInt> {
    let poset = build_poset(a)?;
    let chi = characteristic_polynomial(&poset);
    let v = chi.eval(&rat_int(t));
    debug_assert!(v.is_integer());
    Ok(v.to_integer())
}

/// Number of bounded regions of the complement: `(−1)^d χ(1)`.
pub fn bounded_regions(a: &Arrangement) -> Result<BigInt> {
    let v = chi_at(a, 1)?;
    Ok(if a.d % 2 == 0 { v } else { -v })
}

/// Total number of regions of the complement: `(−1)^d χ(−1)`.
pub fn regions(a: &Arrangement) -> Result<BigInt> {
    let v = chi_at(a, -1)?;
    Ok(if a.d % 2 == 0 { v } else { -v })
}

/// Result of a linear-model ML degree query.
#[derive(Debug, Clone)]
pub struct LinearMlReport {
    pub ml_degree: BigInt,
    /// For linear models every critical point is real, so the real count
    /// equals the complex count; recorded here as a certificate note.
    pub all_critical_points_real: bool,
}

/// ML degree of a model of linear polynomials with generic nonzero
/// weights: the number of bounded regions. The count does not depend on
/// `u`, so the genericity of concrete weights needs no further validation
/// beyond being nonzero.
pub fn linear_ml_degree(a: &Arrangement, u: &[i64]) -> Result<LinearMlReport> {
    if u.len() != a.n() {
        return Err(Error::InvalidInput(
            "weight count must match hyperplane count".into(),
        ));
    }
    if u.iter().any(|&x| x == 0) {
        return Err(Error::InvalidInput("weights must be nonzero".into()));
    }
    let normals: Vec<Vec<Rat>> = a.hyperplanes.iter().map(|h| h.normal.clone()).collect();
    if rational_rank(&normals, a.d) < a.d {
        return Err(Error::InfinitelyManyCriticalPoints);
    }
    Ok(LinearMlReport {
        ml_degree: bounded_regions(a)?,
        all_critical_points_real: true,
    })
}

/// Degree of the projective variety cut out by reciprocals of the
/// homogenized forms `F_i = c_i θ_0 + ⟨a_i, θ⟩`: builds the central
/// arrangement of the `F_i` in `R^{d+1}` and returns `(−1)^{d+1} μ({0})`.
/// Requires the common intersection of all `F_i = 0` to be the origin;
/// otherwise there are infinitely many critical points.
pub fn terao_degree(a: &Arrangement) -> Result<BigInt> {
    let coned_hps: Vec<Hyperplane> = a
        .hyperplanes
        .iter()
        .map(|h| {
            let mut normal = vec![h.offset.clone()];
            normal.extend(h.normal.iter().cloned());
            Hyperplane {
                normal,
                offset: Rat::zero(),
            }
        })
        .collect();
    let coned_normals: Vec<Vec<Rat>> = coned_hps.iter().map(|h| h.normal.clone()).collect();
    if rational_rank(&coned_normals, a.d + 1) < a.d + 1 {
        return Err(Error::InfinitelyManyCriticalPoints);
    }
    let coned = Arrangement::new(a.d + 1, coned_hps)?;
    let poset = build_poset(&coned)?;
    let origin = poset
        .flats
        .iter()
        .find(|f| f.dim == 0)
        .expect("essential central arrangement has the origin flat");
    let mu = origin.moebius.clone();
    Ok(if (a.d + 1) % 2 == 0 { mu } else { -mu })
}

fn rational_rank(rows: &[Vec<Rat>], cols: usize) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            if !m[r][col].is_zero() {
                let f = &m[r][col] / &m[rank][col];
                for c in col..cols {
                    let sub = &f * &m[rank][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        rank += 1;
    }
    rank
}
