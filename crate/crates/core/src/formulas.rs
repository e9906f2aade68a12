//! Closed-form ML-degree formulas: the generating-function coefficient for
//! dense generic models, the alternating mixed-volume sum for sparse/toric
//! models with its 2D area fast path, the rectangle and plane-curve closed
//! forms, and the Viro bound on bounded regions.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactmath::series::{series_coefficient, IntSeries};
use crate::polytope::{
    facet_offsets, minkowski_sum, mixed_volume, normal_fan, FacetOffsets, Fan, LatticePolytope,
};
use crate::rational::Rat;
use crate::{Error, Result};

/// Dense model: `n` generic polynomials of the listed degrees in `d`
/// unknowns.
#[derive(Debug, Clone)]
pub struct DenseModelSpec {
    pub d: usize,
    pub degrees: Vec<u64>,
}

impl DenseModelSpec {
    pub fn new(d: usize, degrees: Vec<u64>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidInput("parameter count d must be >= 1".into()));
        }
        if degrees.is_empty() || degrees.iter().any(|&b| b == 0) {
            return Err(Error::InvalidInput("degrees must be positive".into()));
        }
        Ok(DenseModelSpec { d, degrees })
    }
}

/// Data weights: concrete nonzero integers or symbolically generic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Weights {
    Generic,
    Concrete(Vec<i64>),
}

/// Sparse/toric model: Newton polytopes plus data weights.
#[derive(Debug, Clone)]
pub struct ToricModelSpec {
    pub polytopes: Vec<LatticePolytope>,
    pub weights: Weights,
}

impl ToricModelSpec {
    pub fn new(polytopes: Vec<LatticePolytope>, weights: Weights) -> Result<Self> {
        if polytopes.is_empty() {
            return Err(Error::InvalidInput("need at least one polytope".into()));
        }
        let d = polytopes[0].ambient_dim();
        if let Some(p) = polytopes.iter().find(|p| p.ambient_dim() != d) {
            return Err(Error::DimensionMismatch(d, p.ambient_dim()));
        }
        if let Weights::Concrete(u) = &weights {
            if u.len() != polytopes.len() {
                return Err(Error::InvalidInput(
                    "weight count must match polytope count".into(),
                ));
            }
            if u.iter().any(|&x| x == 0) {
                return Err(Error::InvalidInput("weights must be nonzero".into()));
            }
        }
        Ok(ToricModelSpec { polytopes, weights })
    }
}

/// Divisor support data on the normal fan of the Minkowski sum.
#[derive(Debug, Clone)]
pub struct SupportData {
    pub fan: Fan,
    pub offsets: FacetOffsets,
    /// Ray indices j with `Σ_i u_i a_ij ≠ 0`.
    pub support: Vec<usize>,
    pub nonsupport: Vec<usize>,
}

/// One term of the alternating sum: the correction-level `c`, the
/// nonsupport rays `J`, and the summed mixed volume over index tuples.
#[derive(Debug, Clone)]
pub struct TermReport {
    pub c: usize,
    pub rays: Vec<usize>,
    pub value: Rat,
}

/// Full account of a toric ML degree evaluation, for cross-checks and
/// `--explain` output.
#[derive(Debug, Clone)]
pub struct ToricBreakdown {
    pub support: SupportData,
    pub summand_volumes: Vec<Rat>,
    pub minkowski_volume: Rat,
    pub terms: Vec<TermReport>,
    pub total: BigInt,
    /// Set when concrete weights kill support rays that generic weights
    /// keep; the value is then only an upper bound for generic coefficients.
    pub upper_bound_only: bool,
}

/// Coefficient of `z^d` in `(1−z)^d / Π(1−b_i z)`: the ML degree of a dense
/// model with generic coefficients, an upper bound otherwise.
pub fn generic_ml_degree(spec: &DenseModelSpec) -> BigInt {
    generic_series(spec, spec.d + 1).pop().expect("requested order")
}

/// First `upto` coefficients of the same generating function.
pub fn generic_series(spec: &DenseModelSpec, upto: usize) -> Vec<BigInt> {
    let order = upto.max(1);
    let num = IntSeries::one_minus_z_pow(spec.d, order);
    let den: Vec<IntSeries> = spec
        .degrees
        .iter()
        .map(|&b| IntSeries::one_minus_bz(b as i64, order))
        .collect();
    (0..order)
        .map(|k| series_coefficient(&num, &den, k).expect("order sufficient"))
        .collect()
}

/// `Σ b_i(b_i−2) + Σ_{i<j} b_i b_j + 1`: the d=2 dense formula in closed
/// form.
pub fn plane_curve_ml_degree(b: &[u64]) -> BigInt {
    let b: Vec<i64> = b.iter().map(|&x| x as i64).collect();
    let mut total: i64 = 1 + b.iter().map(|&x| x * (x - 2)).sum::<i64>();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            total += b[i] * b[j];
        }
    }
    BigInt::from(total)
}

/// `(Σs)(Σt) + Σ s_k t_k − Σ(s_i + t_i) + 1`: toric ML degree of products
/// of dense bidegree-(s_i, t_i) polynomials.
pub fn rectangle_ml_degree(s: &[u64], t: &[u64]) -> BigInt {
    assert_eq!(s.len(), t.len());
    let sum_s: i64 = s.iter().map(|&x| x as i64).sum();
    let sum_t: i64 = t.iter().map(|&x| x as i64).sum();
    let dot: i64 = s.iter().zip(t).map(|(&a, &b)| a as i64 * b as i64).sum();
    BigInt::from(sum_s * sum_t + dot - (sum_s + sum_t) + 1)
}

/// `Σ (b_i−1)(b_i−2)/2 + Σ_{i<j} b_i b_j + 1 − #{odd b_i}`: the optimal
/// bound on bounded regions of real plane curves of the given degrees.
pub fn viro_bound(b: &[u64]) -> BigInt {
    let b: Vec<i64> = b.iter().map(|&x| x as i64).collect();
    let odd = b.iter().filter(|&&x| x % 2 == 1).count() as i64;
    let mut total: i64 = 1 - odd + b.iter().map(|&x| (x - 1) * (x - 2) / 2).sum::<i64>();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            total += b[i] * b[j];
        }
    }
    BigInt::from(total)
}

/// Divisor support on the fan: ray j carries the divisor iff `Σ u_i a_ij`
/// is nonzero (for generic u: iff some `a_ij` is nonzero).
fn compute_support(offsets: &FacetOffsets, weights: &Weights, nrays: usize) -> Vec<usize> {
    (0..nrays)
        .filter(|&j| match weights {
            Weights::Generic => offsets.a.iter().any(|row| row[j] != 0),
            Weights::Concrete(u) => {
                let s: i128 = offsets
                    .a
                    .iter()
                    .zip(u)
                    .map(|(row, &ui)| ui as i128 * row[j] as i128)
                    .sum();
                s != 0
            }
        })
        .collect()
}

/// Toric ML degree by the alternating mixed-volume sum
/// `Σ_c (−1)^c Σ_{J⊆nonsupport, |J|=c} Σ_{i_1≤…≤i_{d−c}} V(P_{i_1},…; τ_J)`.
pub fn toric_ml_degree(spec: &ToricModelSpec) -> Result<ToricBreakdown> {
    let ps = &spec.polytopes;
    let n = ps.len();
    let d = ps[0].ambient_dim();
    let mut mink = ps[0].clone();
    for p in &ps[1..] {
        mink = minkowski_sum(&mink, p)?;
    }
    if !mink.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    let fan = normal_fan(&mink)?;
    let offsets = facet_offsets(ps, &fan)?;
    let nrays = fan.rays().len();
    let support = compute_support(&offsets, &spec.weights, nrays);
    let nonsupport: Vec<usize> = (0..nrays).filter(|j| !support.contains(j)).collect();
    // hypothesis: every singular cone contains a support ray
    for cone in fan.singular_cones() {
        if !cone.iter().any(|r| support.contains(r)) {
            return Err(Error::SmoothnessHypothesisViolated(cone));
        }
    }
    let upper_bound_only = match &spec.weights {
        Weights::Generic => false,
        Weights::Concrete(_) => {
            support != compute_support(&offsets, &Weights::Generic, nrays)
        }
    };
    let mut terms = Vec::new();
    let mut total = Rat::zero();
    for c in 0..=d {
        let k = d - c;
        for j_set in subsets_of_size(&nonsupport, c) {
            let Some(tau) = fan.minimal_cone_containing(&j_set) else {
                continue; // the rays span no cone: the term is a formal zero
            };
            let codim = d - fan.cone_dim(tau);
            if codim > k {
                continue;
            }
            if codim < k {
                return Err(Error::CodimensionMismatch);
            }
            let relint: Vec<i64> = (0..d)
                .map(|t| tau.iter().map(|&r| fan.rays()[r][t]).sum())
                .collect();
            let faces: Vec<LatticePolytope> = ps.iter().map(|p| p.face(&relint)).collect();
            let mut value = Rat::zero();
            for tuple in weakly_increasing_tuples(n, k) {
                let args: Vec<LatticePolytope> =
                    tuple.iter().map(|&i| faces[i].clone()).collect();
                value += mixed_volume(&args)?;
            }
            if c % 2 == 0 {
                total += &value;
            } else {
                total -= &value;
            }
            terms.push(TermReport {
                c,
                rays: j_set,
                value,
            });
        }
    }
    debug_assert!(total.is_integer());
    Ok(ToricBreakdown {
        support: SupportData {
            fan,
            offsets,
            support,
            nonsupport,
        },
        summand_volumes: ps.iter().map(|p| p.lattice_volume()).collect(),
        minkowski_volume: mink.lattice_volume(),
        terms,
        total: total.to_integer(),
        upper_bound_only,
    })
}

/// Cor 5.2 fast path: when no edge line of the Minkowski sum passes through
/// the origin, the toric ML degree is `area(ΣP_i) + Σ area(P_i)`.
pub fn toric_ml_degree_2d_fastpath(spec: &ToricModelSpec) -> Result<BigInt> {
    let ps = &spec.polytopes;
    let d = ps[0].ambient_dim();
    if d != 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    let mut mink = ps[0].clone();
    for p in &ps[1..] {
        mink = minkowski_sum(&mink, p)?;
    }
    if !mink.is_full_dimensional() {
        return Err(Error::NotFullDimensional);
    }
    let fan = normal_fan(&mink)?;
    // the edge normal to η_j spans a line through 0 iff the offset vanishes
    for (j, ray) in fan.rays().iter().enumerate() {
        if mink.support_min(ray) == 0 {
            return Err(Error::OriginOnEdgeLine(j));
        }
    }
    let total: Rat = mink.lattice_volume()
        + ps.iter().map(|p| p.lattice_volume()).sum::<Rat>();
    debug_assert!(total.is_integer());
    Ok(total.to_integer())
}

fn subsets_of_size(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, size, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, size, 0, &mut cur, &mut out);
    out
}

fn weakly_increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, k, i, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}
