//! Inner normal fans, cone queries, and facet offsets.

use num_bigint::BigInt;
use num_traits::Signed;

use super::hull::{dot, LatticePolytope};
use super::lattice::{coords_in_basis, primitive, rank, saturated_span_basis};
use crate::{Error, Result};

/// Complete polyhedral fan given by primitive rays and cones as ray-index
/// sets, closed under taking faces (the empty set is the origin cone).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    rays: Vec<Vec<i64>>,
    cones: Vec<Vec<usize>>,
}

impl Fan {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn cones(&self) -> &[Vec<usize>] {
        &self.cones
    }

    /// Cones not properly contained in another cone.
    pub fn maximal_cones(&self) -> Vec<&Vec<usize>> {
        self.cones
            .iter()
            .filter(|c| {
                !self
                    .cones
                    .iter()
                    .any(|o| o.len() > c.len() && c.iter().all(|r| o.contains(r)))
            })
            .collect()
    }

    /// Linear dimension of the cone spanned by the listed rays.
    pub fn cone_dim(&self, cone: &[usize]) -> usize {
        let rays: Vec<Vec<i64>> = cone.iter().map(|&i| self.rays[i].clone()).collect();
        rank(&rays, self.dim)
    }

    /// A cone is smooth when its rays extend to a basis of the ambient
    /// lattice: simplicial with the rays a basis of their saturated span.
    pub fn is_singular(&self, cone: &[usize]) -> bool {
        if cone.is_empty() {
            return false;
        }
        let rays: Vec<Vec<i64>> = cone.iter().map(|&i| self.rays[i].clone()).collect();
        let r = rank(&rays, self.dim);
        if r != cone.len() {
            return true; // non-simplicial
        }
        let basis = saturated_span_basis(&rays, self.dim);
        let mat: Vec<Vec<BigInt>> = rays
            .iter()
            .map(|ray| {
                coords_in_basis(&basis, ray)
                    .expect("ray in own span")
                    .iter()
                    .map(|x| x.to_integer())
                    .collect()
            })
            .collect();
        int_det(&mat).abs() != BigInt::from(1)
    }

    pub fn singular_cones(&self) -> Vec<Vec<usize>> {
        self.cones
            .iter()
            .filter(|c| self.is_singular(c))
            .cloned()
            .collect()
    }

    /// The inclusion-minimal cone whose ray set contains all of `ray_ids`;
    /// `None` when no cone contains them (the formal-symbol case).
    pub fn minimal_cone_containing(&self, ray_ids: &[usize]) -> Option<&Vec<usize>> {
        self.cones
            .iter()
            .filter(|c| ray_ids.iter().all(|r| c.contains(r)))
            .min_by_key(|c| c.len())
    }
}

fn int_det(m: &[Vec<BigInt>]) -> BigInt {
    super::super::exactmath::bareiss::determinant(m)
}

/// Counterclockwise comparison key for 2D rays: half-plane index then angle
/// within the half, starting from the positive x-axis.
fn ccw_key(v: &[i64]) -> (u8, Vec<i64>) {
    let half = if v[1] > 0 || (v[1] == 0 && v[0] > 0) { 0 } else { 1 };
    (half, v.to_vec())
}

fn ccw_cmp(a: &[i64], b: &[i64]) -> std::cmp::Ordering {
    let (ha, _) = ccw_key(a);
    let (hb, _) = ccw_key(b);
    ha.cmp(&hb).then_with(|| {
        let cross = b[0] as i128 * a[1] as i128 - a[0] as i128 * b[1] as i128;
        cross.cmp(&0)
    })
}

/// Inner normal fan of a full-dimensional polytope, ambient dimension ≤ 3.
/// In 2D the rays come out in counterclockwise order from the positive
/// x-axis and the two-dimensional cones are adjacent ray pairs.
pub fn normal_fan(p: &LatticePolytope) -> Result<Fan> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    let d = p.ambient_dim();
    match d {
        1 => Ok(Fan {
            dim: 1,
            rays: vec![vec![1], vec![-1]],
            cones: vec![vec![], vec![0], vec![1]],
        }),
        2 => {
            let v = p.vertices();
            let m = v.len();
            let mut rays: Vec<Vec<i64>> = (0..m)
                .map(|i| {
                    let a = &v[i];
                    let b = &v[(i + 1) % m];
                    primitive(&[-(b[1] - a[1]), b[0] - a[0]])
                })
                .collect();
            rays.sort_by(|a, b| ccw_cmp(a, b));
            let mut cones = vec![vec![]];
            for i in 0..m {
                cones.push(vec![i]);
            }
            for i in 0..m {
                let mut c = vec![i, (i + 1) % m];
                c.sort();
                cones.push(c);
            }
            Ok(Fan { dim: 2, rays, cones })
        }
        3 => {
            let facets = p.facets_3d();
            let mut rays: Vec<Vec<i64>> = facets.iter().map(|f| f.normal.clone()).collect();
            rays.sort();
            let ray_id = |n: &Vec<i64>| rays.iter().position(|r| r == n).unwrap();
            let mut cones: Vec<Vec<usize>> = vec![vec![]];
            for f in &facets {
                cones.push(vec![ray_id(&f.normal)]);
            }
            // edge cones: facet pairs sharing an edge (two or more vertices)
            for i in 0..facets.len() {
                for j in i + 1..facets.len() {
                    let shared = facets[i]
                        .vertex_ids
                        .iter()
                        .filter(|t| facets[j].vertex_ids.contains(t))
                        .count();
                    if shared >= 2 {
                        let mut c = vec![ray_id(&facets[i].normal), ray_id(&facets[j].normal)];
                        c.sort();
                        cones.push(c);
                    }
                }
            }
            // vertex cones: all facets through each vertex
            for vid in 0..p.vertices().len() {
                let mut c: Vec<usize> = facets
                    .iter()
                    .filter(|f| f.vertex_ids.contains(&vid))
                    .map(|f| ray_id(&f.normal))
                    .collect();
                c.sort();
                c.dedup();
                cones.push(c);
            }
            cones.sort();
            cones.dedup();
            Ok(Fan { dim: 3, rays, cones })
        }
        _ => Err(Error::UnsupportedDimension(d)),
    }
}

/// Facet offsets `a[i][j] = −min over P_i of ⟨·, η_j⟩`, so that
/// `P_i = {x : ⟨x, η_j⟩ ≥ −a[i][j] for all j}` when the fan refines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetOffsets {
    pub a: Vec<Vec<i64>>,
}

pub fn facet_offsets(ps: &[LatticePolytope], fan: &Fan) -> Result<FacetOffsets> {
    // refinement: on every maximal cone the minimizing face of each P_i is
    // constant, i.e. the face at an interior point is minimized by each ray
    for (pi, p) in ps.iter().enumerate() {
        for cone in fan.maximal_cones() {
            if cone.is_empty() {
                continue;
            }
            let s: Vec<i64> = (0..fan.dim)
                .map(|t| cone.iter().map(|&r| fan.rays[r][t]).sum())
                .collect();
            let f = p.face(&s);
            for &r in cone {
                let fr = p.face(&fan.rays[r]);
                if !f.vertices().iter().all(|v| fr.vertices().contains(v)) {
                    return Err(Error::FanNotRefining(pi));
                }
            }
        }
    }
    let a = ps
        .iter()
        .map(|p| {
            fan.rays
                .iter()
                .map(|ray| {
                    -p.vertices()
                        .iter()
                        .map(|v| dot(ray, v))
                        .min()
                        .expect("nonempty") as i64
                })
                .collect()
        })
        .collect();
    Ok(FacetOffsets { a })
}
