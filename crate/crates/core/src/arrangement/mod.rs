//! Affine hyperplane arrangements: intersection poset, Möbius function,
//! characteristic polynomial, region counts, and the linear-model ML degree
//! (the number of bounded regions of the complement).

pub mod brute;
pub mod counts;
pub mod poset;

use crate::rational::Rat;
use crate::{Error, Result};
use num_traits::Zero;

pub use brute::bounded_regions_bruteforce;
pub use counts::{bounded_regions, linear_ml_degree, regions, terao_degree, LinearMlReport};
pub use poset::{build_poset, characteristic_polynomial, Flat, IntersectionPoset};

/// The hyperplane `f = ⟨normal, θ⟩ + offset = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    pub normal: Vec<Rat>,
    pub offset: Rat,
}

impl Hyperplane {
    /// Scales so the first nonzero normal entry is 1; duplicates of the
    /// same hyperplane collapse to one canonical form.
    fn canonical(&self) -> Hyperplane {
        let pivot = self
            .normal
            .iter()
            .find(|x| !x.is_zero())
            .expect("nonzero normal")
            .clone();
        Hyperplane {
            normal: self.normal.iter().map(|x| x / &pivot).collect(),
            offset: &self.offset / &pivot,
        }
    }
}

/// A finite list of distinct affine hyperplanes in `R^d`.
#[derive(Debug, Clone)]
pub struct Arrangement {
    pub d: usize,
    pub hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn new(d: usize, hyperplanes: Vec<Hyperplane>) -> Result<Self> {
        let mut seen: Vec<Hyperplane> = Vec::new();
        for (i, h) in hyperplanes.iter().enumerate() {
            if h.normal.len() != d {
                return Err(Error::DimensionMismatch(d, h.normal.len()));
            }
            if h.normal.iter().all(|x| x.is_zero()) {
                return Err(Error::ZeroNormal(i));
            }
            let c = h.canonical();
            if seen.contains(&c) {
                return Err(Error::DuplicateHyperplane(i));
            }
            seen.push(c);
        }
        Ok(Arrangement { d, hyperplanes })
    }

    pub fn n(&self) -> usize {
        self.hyperplanes.len()
    }

    /// Evaluates `f_i` at a rational point.
    pub fn eval(&self, i: usize, theta: &[Rat]) -> Rat {
        let h = &self.hyperplanes[i];
        h.normal
            .iter()
            .zip(theta)
            .fold(h.offset.clone(), |acc, (a, t)| acc + a * t)
    }
}
