//! Lattice polytopes with exact integer vertices: convex hulls for ambient
//! dimension up to 3, Minkowski sums, faces, and lattice-normalized volumes.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::lattice::{coords_in_basis, primitive, rank, saturated_span_basis};
use crate::rational::Rat;
use crate::{Error, Result};

/// Convex polytope with integer vertices, stored irredundantly in canonical
/// order: counterclockwise from the lex-min vertex in ambient dimension 2,
/// lexicographic otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePolytope {
    ambient_dim: usize,
    affine_dim: usize,
    vertices: Vec<Vec<i64>>,
}

impl LatticePolytope {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the affine span; 0 for a point.
    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.ambient_dim
    }

    pub fn translate(&self, shift: &[i64]) -> LatticePolytope {
        assert_eq!(shift.len(), self.ambient_dim);
        let moved: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(shift).map(|(a, b)| a + b).collect())
            .collect();
        convex_hull(&moved, self.ambient_dim).expect("translate preserves hull")
    }

    /// The face on which `v` attains its minimum; `v = 0` gives the whole
    /// polytope.
    pub fn face(&self, v: &[i64]) -> LatticePolytope {
        assert_eq!(v.len(), self.ambient_dim);
        let min = self.vertices.iter().map(|p| dot(v, p)).min().unwrap();
        let pts: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .filter(|p| dot(v, p) == min)
            .cloned()
            .collect();
        convex_hull(&pts, self.ambient_dim).expect("face of a hull is a hull")
    }

    /// Minimum of `⟨v, ·⟩` over the polytope.
    pub fn support_min(&self, v: &[i64]) -> i64 {
        self.vertices
            .iter()
            .map(|p| dot(v, p))
            .min()
            .expect("nonempty") as i64
    }

    /// Euclidean volume relative to the lattice of the affine span, so a
    /// unimodular simplex of that span has volume 1/d'!. Points measure 0.
    pub fn lattice_volume(&self) -> Rat {
        if self.affine_dim == 0 {
            return Rat::zero();
        }
        let base = &self.vertices[0];
        let diffs: Vec<Vec<i64>> = self
            .vertices
            .iter()
            .map(|v| v.iter().zip(base).map(|(a, b)| a - b).collect())
            .collect();
        let basis = saturated_span_basis(&diffs, self.ambient_dim);
        debug_assert_eq!(basis.len(), self.affine_dim);
        let coords: Vec<Vec<i64>> = diffs
            .iter()
            .map(|v| {
                coords_in_basis(&basis, v)
                    .expect("vertex in span")
                    .iter()
                    .map(rat_to_i64)
                    .collect()
            })
            .collect();
        measure_fulldim(&coords, self.affine_dim)
    }

    /// Euclidean volume in the ambient coordinates; 0 for lower-dimensional
    /// polytopes. This is the volume entering mixed-volume sums.
    pub fn euclidean_volume(&self) -> Rat {
        if self.affine_dim < self.ambient_dim {
            return Rat::zero();
        }
        measure_fulldim(&self.vertices, self.ambient_dim)
    }

    /// Facets as (primitive inner normal, offset, cyclically ordered vertex
    /// indices); ambient dimension 3 and full-dimensional only.
    pub fn facets_3d(&self) -> Vec<Facet> {
        assert_eq!(self.ambient_dim, 3);
        assert_eq!(self.affine_dim, 3);
        facets_3d(&self.vertices)
    }
}

/// A facet of a 3-polytope: inner normal `n` with `⟨n, x⟩ ≥ offset` tight on
/// the facet, plus its vertices in cyclic boundary order.
#[derive(Debug, Clone)]
pub struct Facet {
    pub normal: Vec<i64>,
    pub offset: i64,
    pub vertex_ids: Vec<usize>,
}

fn rat_to_i64(x: &Rat) -> i64 {
    debug_assert!(x.is_integer());
    let i: BigInt = x.to_integer();
    i64::try_from(&i).expect("desk-scale coordinate")
}

pub fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

fn cross2(o: &[i64], a: &[i64], b: &[i64]) -> i128 {
    (a[0] - o[0]) as i128 * (b[1] - o[1]) as i128
        - (a[1] - o[1]) as i128 * (b[0] - o[0]) as i128
}

fn cross3(a: &[i64], b: &[i64]) -> Vec<i64> {
    vec![
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Convex hull of integer points in ambient dimension at most 3.
pub fn convex_hull(points: &[Vec<i64>], d: usize) -> Result<LatticePolytope> {
    if !(1..=3).contains(&d) {
        return Err(Error::UnsupportedDimension(d));
    }
    if points.is_empty() {
        return Err(Error::InvalidInput("empty point set".into()));
    }
    if let Some(p) = points.iter().find(|p| p.len() != d) {
        return Err(Error::DimensionMismatch(d, p.len()));
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let base = pts[0].clone();
    let diffs: Vec<Vec<i64>> = pts
        .iter()
        .map(|p| p.iter().zip(&base).map(|(a, b)| a - b).collect())
        .collect();
    let r = rank(&diffs, d);
    let vertices = match r {
        0 => vec![base],
        1 => {
            let dir = primitive(diffs.iter().find(|v| v.iter().any(|&x| x != 0)).unwrap());
            let lo = pts.iter().min_by_key(|p| dot(&dir, p)).unwrap().clone();
            let hi = pts.iter().max_by_key(|p| dot(&dir, p)).unwrap().clone();
            let mut v = vec![lo, hi];
            v.sort();
            v
        }
        2 => {
            if d == 2 {
                hull_2d(&pts)
            } else {
                // planar set in 3-space: hull in a projection that keeps it
                // 2-dimensional, output in lex order
                let (i1, i2) = {
                    let a = diffs.iter().find(|v| v.iter().any(|&x| x != 0)).unwrap();
                    let b = diffs
                        .iter()
                        .find(|v| rank(&[a.clone(), (*v).clone()], d) == 2)
                        .unwrap();
                    let n = cross3(a, b);
                    let k = (0..3).max_by_key(|&i| n[i].abs()).unwrap();
                    ((k + 1) % 3, (k + 2) % 3)
                };
                let proj: Vec<Vec<i64>> = pts.iter().map(|p| vec![p[i1], p[i2]]).collect();
                let hull = hull_2d(&proj);
                let mut v: Vec<Vec<i64>> = hull
                    .iter()
                    .map(|q| {
                        pts.iter()
                            .find(|p| p[i1] == q[0] && p[i2] == q[1])
                            .unwrap()
                            .clone()
                    })
                    .collect();
                v.sort();
                v.dedup();
                v
            }
        }
        3 => {
            let facets = facets_3d(&pts);
            let mut v: Vec<Vec<i64>> = pts
                .iter()
                .enumerate()
                .filter(|(i, _)| {
                    let normals: Vec<Vec<i64>> = facets
                        .iter()
                        .filter(|f| f.vertex_ids.contains(i))
                        .map(|f| f.normal.clone())
                        .collect();
                    rank(&normals, 3) == 3
                })
                .map(|(_, p)| p.clone())
                .collect();
            v.sort();
            v
        }
        _ => unreachable!(),
    };
    Ok(LatticePolytope {
        ambient_dim: d,
        affine_dim: r,
        vertices,
    })
}

/// Monotone-chain hull, counterclockwise starting at the lex-min point.
/// Input must be sorted, deduplicated, and not all collinear.
fn hull_2d(pts: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut lower: Vec<Vec<i64>> = Vec::new();
    for p in pts {
        while lower.len() >= 2
            && cross2(&lower[lower.len() - 2], &lower[lower.len() - 1], p) <= 0
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<Vec<i64>> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && cross2(&upper[upper.len() - 2], &upper[upper.len() - 1], p) <= 0
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Supporting facets of a full-dimensional 3D point set by plane
/// enumeration; quartic in the point count, fine at desk scale.
fn facets_3d(pts: &[Vec<i64>]) -> Vec<Facet> {
    let n = pts.len();
    let mut seen: Vec<(Vec<i64>, i64)> = Vec::new();
    let mut facets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let a: Vec<i64> = (0..3).map(|t| pts[j][t] - pts[i][t]).collect();
                let b: Vec<i64> = (0..3).map(|t| pts[k][t] - pts[i][t]).collect();
                let mut normal = primitive(&cross3(&a, &b));
                if normal.iter().all(|&x| x == 0) {
                    continue;
                }
                let base = dot(&normal, &pts[i]);
                let mut lo = false;
                let mut hi = false;
                for p in pts {
                    match dot(&normal, p).cmp(&base) {
                        std::cmp::Ordering::Less => lo = true,
                        std::cmp::Ordering::Greater => hi = true,
                        std::cmp::Ordering::Equal => {}
                    }
                }
                if lo && hi {
                    continue; // not supporting
                }
                if lo {
                    normal = normal.iter().map(|&x| -x).collect();
                }
                let offset = pts.iter().map(|p| dot(&normal, p)).min().unwrap() as i64;
                if seen.contains(&(normal.clone(), offset)) {
                    continue;
                }
                seen.push((normal.clone(), offset));
                let ids: Vec<usize> = (0..n)
                    .filter(|&t| dot(&normal, &pts[t]) == offset as i128)
                    .collect();
                facets.push(Facet {
                    vertex_ids: order_cycle(pts, &ids, &normal),
                    normal,
                    offset,
                });
            }
        }
    }
    facets
}

/// Orders coplanar points cyclically around their facet by hulling a 2D
/// projection along the largest normal coordinate.
fn order_cycle(pts: &[Vec<i64>], ids: &[usize], normal: &[i64]) -> Vec<usize> {
    let k = (0..3).max_by_key(|&i| normal[i].abs()).unwrap();
    let (i1, i2) = ((k + 1) % 3, (k + 2) % 3);
    let mut proj: Vec<Vec<i64>> = ids.iter().map(|&t| vec![pts[t][i1], pts[t][i2]]).collect();
    proj.sort();
    proj.dedup();
    let ring = if proj.len() <= 2 { proj } else { hull_2d(&proj) };
    ring.iter()
        .map(|q| {
            *ids.iter()
                .find(|&&t| pts[t][i1] == q[0] && pts[t][i2] == q[1])
                .unwrap()
        })
        .collect()
}

/// Hull of pairwise vertex sums.
pub fn minkowski_sum(p: &LatticePolytope, q: &LatticePolytope) -> Result<LatticePolytope> {
    if p.ambient_dim != q.ambient_dim {
        return Err(Error::DimensionMismatch(p.ambient_dim, q.ambient_dim));
    }
    let mut sums = Vec::with_capacity(p.vertices.len() * q.vertices.len());
    for a in &p.vertices {
        for b in &q.vertices {
            sums.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
        }
    }
    convex_hull(&sums, p.ambient_dim)
}

/// Euclidean volume of a full-dimensional integer polytope given by points
/// in dimension `r ∈ {1,2,3}`.
fn measure_fulldim(points: &[Vec<i64>], r: usize) -> Rat {
    match r {
        1 => {
            let lo = points.iter().map(|p| p[0]).min().unwrap();
            let hi = points.iter().map(|p| p[0]).max().unwrap();
            Rat::from(BigInt::from(hi - lo))
        }
        2 => {
            let hull = convex_hull(points, 2).expect("2d hull");
            let v = hull.vertices();
            let mut twice = BigInt::zero();
            for i in 0..v.len() {
                let a = &v[i];
                let b = &v[(i + 1) % v.len()];
                twice += BigInt::from(a[0] as i128 * b[1] as i128 - b[0] as i128 * a[1] as i128);
            }
            Rat::new(twice.abs(), BigInt::from(2))
        }
        3 => {
            let hull = convex_hull(points, 3).expect("3d hull");
            let verts = hull.vertices();
            let facets = facets_3d(verts);
            // tetrahedra from the centroid to facet triangles tile the solid
            let n = Rat::from(BigInt::from(verts.len() as i64));
            let centroid: Vec<Rat> = (0..3)
                .map(|t| {
                    Rat::from(BigInt::from(verts.iter().map(|v| v[t]).sum::<i64>())) / &n
                })
                .collect();
            let mut vol = Rat::zero();
            for f in &facets {
                let ring = &f.vertex_ids;
                for t in 1..ring.len() - 1 {
                    let tri = [ring[0], ring[t], ring[t + 1]];
                    let edges: Vec<Vec<Rat>> = tri
                        .iter()
                        .map(|&id| {
                            (0..3)
                                .map(|c| Rat::from(BigInt::from(verts[id][c])) - &centroid[c])
                                .collect()
                        })
                        .collect();
                    vol += det3(&edges).abs();
                }
            }
            vol / Rat::from(BigInt::from(6))
        }
        _ => unreachable!(),
    }
}

fn det3(m: &[Vec<Rat>]) -> Rat {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn poly(pts: &[[i64; 2]]) -> LatticePolytope {
        convex_hull(&pts.iter().map(|p| p.to_vec()).collect::<Vec<_>>(), 2).unwrap()
    }

    #[test]
    fn square_hull_drops_duplicates() {
        let p = poly(&[[0, 0], [1, 0], [0, 1], [1, 1], [1, 0]]);
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p.vertices()[0], vec![0, 0]);
        assert_eq!(p.affine_dim(), 2);
    }

    #[test]
    fn collinear_hull_is_segment() {
        let p = poly(&[[0, 0], [2, 0], [1, 0]]);
        assert_eq!(p.vertices(), &[vec![0, 0], vec![2, 0]]);
        assert_eq!(p.affine_dim(), 1);
    }

    #[test]
    fn interior_edge_point_removed() {
        // hull of {(0,0),(1,0),(1,1),(2,0)} has (1,0) interior to an edge
        let p = poly(&[[0, 0], [1, 0], [1, 1], [2, 0]]);
        assert_eq!(p.vertices().len(), 3);
        assert!(!p.vertices().contains(&vec![1, 0]));
    }

    #[test]
    fn ccw_order_from_lex_min() {
        let p = poly(&[[0, 0], [2, 0], [2, 1], [1, 2], [0, 2]]);
        assert_eq!(
            p.vertices(),
            &[vec![0, 0], vec![2, 0], vec![2, 1], vec![1, 2], vec![0, 2]]
        );
    }

    #[test]
    fn minkowski_square_plus_triangle() {
        let sq = poly(&[[0, 0], [1, 0], [0, 1], [1, 1]]);
        let tri = poly(&[[0, 0], [1, 0], [0, 1]]);
        let s = minkowski_sum(&sq, &tri).unwrap();
        assert_eq!(
            s.vertices(),
            &[vec![0, 0], vec![2, 0], vec![2, 1], vec![1, 2], vec![0, 2]]
        );
        assert_eq!(s.lattice_volume(), rat(7, 2));
    }

    #[test]
    fn volumes() {
        let sq = poly(&[[0, 0], [1, 0], [0, 1], [1, 1]]);
        assert_eq!(sq.lattice_volume(), rat_int(1));
        let tri = poly(&[[0, 0], [1, 0], [0, 1]]);
        assert_eq!(tri.lattice_volume(), rat(1, 2));
        let pt = poly(&[[3, 4]]);
        assert_eq!(pt.lattice_volume(), rat_int(0));
    }

    #[test]
    fn span_lattice_volume_of_segment() {
        // segment (0,0)-(2,2): lattice length 2 in the diagonal sublattice
        let seg = poly(&[[0, 0], [2, 2]]);
        assert_eq!(seg.lattice_volume(), rat_int(2));
        assert_eq!(seg.euclidean_volume(), rat_int(0));
    }

    #[test]
    fn faces_of_square() {
        let sq = poly(&[[0, 0], [1, 0], [0, 1], [1, 1]]);
        let bottom = sq.face(&[0, 1]);
        assert_eq!(bottom.vertices(), &[vec![0, 0], vec![1, 0]]);
        let corner = sq.face(&[1, 1]);
        assert_eq!(corner.vertices(), &[vec![0, 0]]);
        assert_eq!(sq.face(&[0, 0]), sq);
    }

    #[test]
    fn cube_hull_and_volume() {
        let mut pts = Vec::new();
        for x in 0..=1 {
            for y in 0..=1 {
                for z in 0..=1 {
                    pts.push(vec![x, y, z]);
                }
            }
        }
        pts.push(vec![0, 0, 0]);
        let cube = convex_hull(&pts, 3).unwrap();
        assert_eq!(cube.vertices().len(), 8);
        assert_eq!(cube.affine_dim(), 3);
        assert_eq!(cube.lattice_volume(), rat_int(1));
        assert_eq!(cube.facets_3d().len(), 6);
    }

    #[test]
    fn simplex_3d_volume() {
        let pts = vec![vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let s = convex_hull(&pts, 3).unwrap();
        assert_eq!(s.lattice_volume(), rat(1, 6));
    }

    #[test]
    fn planar_set_in_three_space() {
        let pts = vec![vec![0, 0, 0], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 2]];
        let p = convex_hull(&pts, 3).unwrap();
        assert_eq!(p.affine_dim(), 2);
        assert_eq!(p.vertices().len(), 4);
        // unit square in the saturated span lattice
        assert_eq!(p.lattice_volume(), rat_int(1));
    }

    #[test]
    fn unsupported_dimension() {
        assert!(matches!(
            convex_hull(&[vec![0, 0, 0, 0]], 4),
            Err(Error::UnsupportedDimension(4))
        ));
    }
}
