//! Sparse multivariate (Laurent) polynomials with exact rational
//! coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector, so iteration order
//! and every derived output are deterministic.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::unipoly::UniPoly;
use crate::rational::{rat_to_string, Rat};

/// Map from exponent vector (length = number of variables, negative entries
/// allowed for Laurent terms) to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        assert!(index < nvars);
        let mut e = vec![0i64; nvars];
        e[index] = 1;
        let mut p = MultiPoly::zero(nvars);
        p.terms.insert(e, Rat::one());
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, Rat)>) -> Self {
        let mut p = MultiPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length mismatch");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<i64>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Exponent vectors, the support used to build Newton polytopes.
    pub fn support(&self) -> Vec<Vec<i64>> {
        self.terms.keys().cloned().collect()
    }

    pub fn degree_in(&self, var: usize) -> i64 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<i64>())
            .max()
            .unwrap_or(0)
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|e| e.iter().any(|&x| x < 0))
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut p = self.clone();
        for (e, c) in &other.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, other.nvars);
        let mut p = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                p.add_term(e, ca * cb);
            }
        }
        p
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut acc = MultiPoly::constant(self.nvars, Rat::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Partial derivative; Laurent exponents are differentiated the usual way.
    pub fn derivative(&self, var: usize) -> MultiPoly {
        let mut p = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[var];
            if k == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[var] = k - 1;
            p.add_term(e2, c * Rat::from(BigInt::from(k)));
        }
        p
    }

    /// Multiplies by the monomial with the given exponent vector.
    pub fn mul_monomial(&self, shift: &[i64]) -> MultiPoly {
        assert_eq!(shift.len(), self.nvars);
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.iter().zip(shift).map(|(a, b)| a + b).collect(),
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Componentwise minimum of the exponent vectors (all zeros for the zero
    /// polynomial). Clearing by its negation makes a Laurent polynomial
    /// ordinary with a nonzero constant-term direction.
    pub fn min_exponents(&self) -> Vec<i64> {
        let mut min = vec![0i64; self.nvars];
        let mut first = true;
        for e in self.terms.keys() {
            if first {
                min.copy_from_slice(e);
                first = false;
            } else {
                for (m, &x) in min.iter_mut().zip(e) {
                    *m = (*m).min(x);
                }
            }
        }
        min
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k >= 0 {
                    for _ in 0..k {
                        term = term * x;
                    }
                } else {
                    for _ in 0..-k {
                        term = term / x;
                    }
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitutes variables by an integer linear change `theta_j = sum_k
    /// mat[j][k] * y_k`. Requires nonnegative exponents.
    pub fn linear_substitute(&self, mat: &[Vec<i64>]) -> MultiPoly {
        assert!(!self.has_negative_exponents(), "clear Laurent terms first");
        assert_eq!(mat.len(), self.nvars);
        let images: Vec<MultiPoly> = mat
            .iter()
            .map(|row| {
                let mut p = MultiPoly::zero(self.nvars);
                for (k, &m) in row.iter().enumerate() {
                    if m != 0 {
                        p = p.add(&MultiPoly::var(k, self.nvars).scale(&Rat::from(BigInt::from(m))));
                    }
                }
                p
            })
            .collect();
        let mut acc = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(self.nvars, c.clone());
            for (j, &k) in e.iter().enumerate() {
                term = term.mul(&images[j].pow(k as u32));
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Coefficients as polynomials in the *first* variable, indexed by the
    /// degree in the *second* variable. Bivariate, nonnegative exponents.
    pub fn to_bivar(&self) -> Vec<UniPoly> {
        assert_eq!(self.nvars, 2, "bivariate view needs exactly 2 variables");
        assert!(!self.has_negative_exponents(), "clear Laurent terms first");
        let dy = self.degree_in(1) as usize;
        let dx = self.degree_in(0) as usize;
        let mut rows = vec![vec![Rat::zero(); dx + 1]; dy + 1];
        for (e, c) in &self.terms {
            rows[e[1] as usize][e[0] as usize] = c.clone();
        }
        let mut out: Vec<UniPoly> = rows.into_iter().map(UniPoly::new).collect();
        while out.last().is_some_and(|p| p.is_zero()) {
            out.pop();
        }
        if out.is_empty() {
            out.push(UniPoly::zero());
        }
        out
    }

    pub fn from_bivar(coeffs: &[UniPoly]) -> MultiPoly {
        let mut p = MultiPoly::zero(2);
        for (j, cy) in coeffs.iter().enumerate() {
            for (i, c) in cy.coeffs().iter().enumerate() {
                p.add_term(vec![i as i64, j as i64], c.clone());
            }
        }
        p
    }

    /// One-variable view of a univariate MultiPoly.
    pub fn to_unipoly(&self) -> UniPoly {
        assert_eq!(self.nvars, 1);
        assert!(!self.has_negative_exponents(), "clear Laurent terms first");
        let d = self.degree_in(0) as usize;
        let mut c = vec![Rat::zero(); d + 1];
        for (e, coeff) in &self.terms {
            c[e[0] as usize] = coeff.clone();
        }
        UniPoly::new(c)
    }
}

impl std::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", rat_to_string(c))?;
            for (j, &k) in e.iter().enumerate() {
                if k != 0 {
                    write!(f, "*t{}^{}", j + 1, k)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn x() -> MultiPoly {
        MultiPoly::var(0, 2)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(1, 2)
    }

    #[test]
    fn arithmetic_and_derivative() {
        // p = x^2 y + 3
        let p = x().pow(2).mul(&y()).add(&MultiPoly::constant(2, rat_int(3)));
        assert_eq!(p.derivative(0), x().mul(&y()).scale(&rat_int(2)));
        assert_eq!(p.derivative(1), x().pow(2));
        assert_eq!(p.eval(&[rat_int(2), rat_int(5)]), rat_int(23));
    }

    #[test]
    fn laurent_clearing() {
        let p = MultiPoly::from_terms(2, [(vec![-1, 0], rat_int(1)), (vec![0, 2], rat_int(1))]);
        assert!(p.has_negative_exponents());
        let min = p.min_exponents();
        assert_eq!(min, vec![-1, 0]);
        let cleared = p.mul_monomial(&[1, 0]);
        assert!(!cleared.has_negative_exponents());
    }

    #[test]
    fn shear_substitution() {
        // x*y under x -> x + y is (x+y)*y = xy + y^2
        let p = x().mul(&y());
        let sheared = p.linear_substitute(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(sheared, x().mul(&y()).add(&y().pow(2)));
    }

    #[test]
    fn bivar_round_trip() {
        let p = x().pow(2).mul(&y()).add(&y().pow(3)).add(&MultiPoly::constant(2, rat(1, 2)));
        let b = p.to_bivar();
        assert_eq!(b.len(), 4);
        assert_eq!(MultiPoly::from_bivar(&b), p);
    }
}
