//! JSON interchange types and seeded random model generation.
//!
//! Rationals travel as `"p/q"` strings so nothing is ever rounded. The same
//! schemas are shared by the command-line tool and the test fixtures.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arrangement::{Arrangement, Hyperplane};
use crate::exactmath::MultiPoly;
use crate::formulas::{ToricModelSpec, Weights};
use crate::oracle::CriticalCountReport;
use crate::polytope::{convex_hull, Fan, LatticePolytope};
use crate::rational::{rat_from_str, rat_int, rat_to_string, Rat};
use crate::{Error, Result};

/// Fixed default seed: reruns with identical inputs are byte-identical.
pub const DEFAULT_SEED: u64 = 0x4d4c6465; // "MLde"

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub vertices: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeightsJson {
    Generic(String),
    Concrete(Vec<i64>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub exps: Vec<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyJson {
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelJson {
    pub d: usize,
    /// "dense" (degree list), "toric" (polytope list), or "explicit"
    /// (spelled-out factors for the oracle).
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub polytopes: Option<Vec<PolytopeJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<Vec<PolyJson>>,
    pub weights: WeightsJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HyperplaneJson {
    pub normal: Vec<String>,
    pub offset: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArrangementJson {
    pub d: usize,
    pub hyperplanes: Vec<HyperplaneJson>,
}

/// Oracle outcome in interchange form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportJson {
    pub complex_count: usize,
    pub real_count: usize,
    pub certified: bool,
    pub precision_bits: u32,
    pub filtered_extraneous: usize,
    /// Midpoint coordinates of the real critical points, for display.
    pub real_points: Vec<Vec<f64>>,
}

impl From<&CriticalCountReport> for ReportJson {
    fn from(r: &CriticalCountReport) -> Self {
        ReportJson {
            complex_count: r.complex_count,
            real_count: r.real_count,
            certified: r.certified,
            precision_bits: r.precision_bits,
            filtered_extraneous: r.filtered_extraneous,
            real_points: r
                .points
                .iter()
                .filter(|p| p.is_real)
                .map(|p| p.approx.iter().map(|&(re, _)| re).collect())
                .collect(),
        }
    }
}

/// Normal-fan output form.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FanJson {
    pub rays: Vec<Vec<i64>>,
    pub cones: Vec<Vec<usize>>,
}

impl From<&Fan> for FanJson {
    fn from(f: &Fan) -> Self {
        FanJson {
            rays: f.rays().to_vec(),
            cones: f.cones().to_vec(),
        }
    }
}

impl ModelJson {
    pub fn weights(&self) -> Result<Weights> {
        match &self.weights {
            WeightsJson::Generic(s) if s == "generic" => Ok(Weights::Generic),
            WeightsJson::Generic(s) => Err(Error::InvalidInput(format!(
                "weights must be \"generic\" or an integer list, got {s:?}"
            ))),
            WeightsJson::Concrete(v) => Ok(Weights::Concrete(v.clone())),
        }
    }

    pub fn to_toric_spec(&self) -> Result<ToricModelSpec> {
        if self.mode != "toric" {
            return Err(Error::InvalidInput(format!(
                "expected a toric model, mode is {:?}",
                self.mode
            )));
        }
        let pjs = self
            .polytopes
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("toric model needs \"polytopes\"".into()))?;
        let mut ps = Vec::with_capacity(pjs.len());
        for pj in pjs {
            ps.push(convex_hull(&pj.vertices, self.d)?);
        }
        ToricModelSpec::new(ps, self.weights()?)
    }

    pub fn explicit_factors(&self) -> Result<Vec<MultiPoly>> {
        if self.mode != "explicit" {
            return Err(Error::InvalidInput(format!(
                "expected an explicit model, mode is {:?}",
                self.mode
            )));
        }
        let pjs = self
            .factors
            .as_ref()
            .ok_or_else(|| Error::InvalidInput("explicit model needs \"factors\"".into()))?;
        pjs.iter().map(|p| poly_from_json(self.d, p)).collect()
    }

    pub fn dense_degrees(&self) -> Result<Vec<u64>> {
        if self.mode != "dense" {
            return Err(Error::InvalidInput(format!(
                "expected a dense model, mode is {:?}",
                self.mode
            )));
        }
        self.degrees
            .clone()
            .ok_or_else(|| Error::InvalidInput("dense model needs \"degrees\"".into()))
    }
}

pub fn poly_from_json(d: usize, p: &PolyJson) -> Result<MultiPoly> {
    let mut terms = Vec::with_capacity(p.terms.len());
    for t in &p.terms {
        if t.exps.len() != d {
            return Err(Error::DimensionMismatch(d, t.exps.len()));
        }
        terms.push((t.exps.clone(), rat_from_str(&t.coeff)?));
    }
    Ok(MultiPoly::from_terms(d, terms))
}

pub fn polytope_to_json(p: &LatticePolytope) -> PolytopeJson {
    PolytopeJson {
        vertices: p.vertices().to_vec(),
    }
}

pub fn arrangement_from_json(a: &ArrangementJson) -> Result<Arrangement> {
    let mut hps = Vec::with_capacity(a.hyperplanes.len());
    for h in &a.hyperplanes {
        let normal: Result<Vec<Rat>> = h.normal.iter().map(|s| rat_from_str(s)).collect();
        hps.push(Hyperplane {
            normal: normal?,
            offset: rat_from_str(&h.offset)?,
        });
    }
    Arrangement::new(a.d, hps)
}

pub fn arrangement_to_json(a: &Arrangement) -> ArrangementJson {
    ArrangementJson {
        d: a.d,
        hyperplanes: a
            .hyperplanes
            .iter()
            .map(|h| HyperplaneJson {
                normal: h.normal.iter().map(rat_to_string).collect(),
                offset: rat_to_string(&h.offset),
            })
            .collect(),
    }
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    loop {
        let v = rng.gen_range(-bound..=bound);
        if v != 0 {
            return v;
        }
    }
}

/// Dense polynomial of the given total degree with every monomial present
/// and small random nonzero integer coefficients; such coefficients are
/// generic with overwhelming probability at desk scale.
pub fn random_dense_poly(d: usize, degree: u64, rng: &mut ChaCha8Rng) -> MultiPoly {
    let mut terms: Vec<(Vec<i64>, Rat)> = Vec::new();
    let mut stack = vec![Vec::<i64>::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == d {
            terms.push((prefix, rat_int(random_nonzero(rng, 20))));
            continue;
        }
        let used: i64 = prefix.iter().sum();
        for e in 0..=(degree as i64 - used) {
            let mut next = prefix.clone();
            next.push(e);
            stack.push(next);
        }
    }
    MultiPoly::from_terms(d, terms)
}

/// Polynomial with the polytope's vertices as support and random nonzero
/// coefficients: its Newton polytope is exactly the given polytope.
pub fn generic_poly_on_vertices(p: &LatticePolytope, rng: &mut ChaCha8Rng) -> MultiPoly {
    MultiPoly::from_terms(
        p.ambient_dim(),
        p.vertices()
            .iter()
            .map(|v| (v.clone(), rat_int(random_nonzero(rng, 20)))),
    )
}

pub fn random_weights(n: usize, rng: &mut ChaCha8Rng) -> Vec<i64> {
    (0..n).map(|_| random_nonzero(rng, 9)).collect()
}

/// Random full-dimensional lattice polygon with vertices in
/// `[low, high]^2`; retries until the hull is 2-dimensional.
pub fn random_lattice_polygon(low: i64, high: i64, rng: &mut ChaCha8Rng) -> LatticePolytope {
    loop {
        let k = rng.gen_range(3..=6);
        let pts: Vec<Vec<i64>> = (0..k)
            .map(|_| vec![rng.gen_range(low..=high), rng.gen_range(low..=high)])
            .collect();
        if let Ok(p) = convex_hull(&pts, 2) {
            if p.affine_dim() == 2 {
                return p;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{Signed, Zero};

    #[test]
    fn model_json_round_trip() {
        let text = r#"{
            "d": 2,
            "mode": "toric",
            "polytopes": [{"vertices": [[0,0],[1,0],[0,1]]}],
            "weights": "generic"
        }"#;
        let m: ModelJson = serde_json::from_str(text).unwrap();
        let spec = m.to_toric_spec().unwrap();
        assert_eq!(spec.polytopes.len(), 1);
        assert!(matches!(m.weights().unwrap(), Weights::Generic));
        let back = serde_json::to_string(&m).unwrap();
        let m2: ModelJson = serde_json::from_str(&back).unwrap();
        assert_eq!(m2.d, 2);
    }

    #[test]
    fn concrete_weights_parse() {
        let text = r#"{"d": 1, "mode": "dense", "degrees": [2, 2], "weights": [3, -5]}"#;
        let m: ModelJson = serde_json::from_str(text).unwrap();
        assert_eq!(m.dense_degrees().unwrap(), vec![2, 2]);
        assert!(matches!(m.weights().unwrap(), Weights::Concrete(v) if v == vec![3, -5]));
    }

    #[test]
    fn arrangement_round_trip() {
        let text = r#"{
            "d": 2,
            "hyperplanes": [
                {"normal": ["1", "0"], "offset": "0"},
                {"normal": ["1/2", "1"], "offset": "-3/2"}
            ]
        }"#;
        let aj: ArrangementJson = serde_json::from_str(text).unwrap();
        let a = arrangement_from_json(&aj).unwrap();
        assert_eq!(a.n(), 2);
        let back = arrangement_to_json(&a);
        assert_eq!(back.hyperplanes[1].offset, "-3/2");
    }

    #[test]
    fn random_generation_is_deterministic() {
        let mut r1 = seeded_rng(7);
        let mut r2 = seeded_rng(7);
        let p1 = random_dense_poly(2, 2, &mut r1);
        let p2 = random_dense_poly(2, 2, &mut r2);
        assert_eq!(p1, p2);
        assert_eq!(p1.num_terms(), 6); // all monomials of total degree <= 2
        assert!(p1.terms().all(|(_, c)| !c.is_zero() && c.abs() <= rat_int(20)));
    }

    #[test]
    fn random_polygon_is_full_dimensional() {
        let mut rng = seeded_rng(3);
        for _ in 0..10 {
            let p = random_lattice_polygon(1, 6, &mut rng);
            assert_eq!(p.affine_dim(), 2);
            assert!(p.vertices().iter().flatten().all(|&x| (1..=6).contains(&x)));
        }
    }
}
