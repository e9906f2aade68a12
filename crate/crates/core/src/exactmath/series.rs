//! Truncated integer power series.
//!
//! The only client is the generating-function route for the dense ML degree,
//! which needs exact coefficients of `(1-z)^d / prod(1 - b_i z)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// An integer power series truncated at order `N`: coefficients `c_0..c_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    /// Builds a series from `c_0..c_k`, zero-padded or truncated to order `n`.
    pub fn new(coeffs: Vec<BigInt>, order: usize) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, BigInt::zero());
        IntSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![BigInt::one()], order)
    }

    /// `1 - b z`, the canonical denominator factor.
    pub fn one_minus_bz(b: i64, order: usize) -> Self {
        Self::from_i64(&[1, -b], order)
    }

    /// `(1 - z)^d` expanded with exact binomials.
    pub fn one_minus_z_pow(d: usize, order: usize) -> Self {
        let mut c = vec![BigInt::zero(); order + 1];
        let mut binom = BigInt::one();
        for (k, ck) in c.iter_mut().enumerate().take(d.min(order) + 1) {
            *ck = if k % 2 == 0 { binom.clone() } else { -binom.clone() };
            binom = binom * BigInt::from((d - k) as u64) / BigInt::from((k + 1) as u64);
        }
        IntSeries { coeffs: c }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, k: usize) -> Result<&BigInt> {
        self.coeffs.get(k).ok_or(Error::InsufficientOrder {
            order: self.order(),
            index: k,
        })
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Product truncated at the shorter order.
    pub fn mul(&self, other: &IntSeries) -> IntSeries {
        let order = self.order().min(other.order());
        let mut c = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                c[i + j] += a * b;
            }
        }
        IntSeries { coeffs: c }
    }

    /// Multiplicative inverse up to the truncation order.
    ///
    /// The constant term must be a unit of `Z`, i.e. `+1` or `-1`.
    pub fn reciprocal(&self) -> Result<IntSeries> {
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        let order = self.order();
        let mut inv = vec![BigInt::zero(); order + 1];
        inv[0] = c0.clone(); // 1/±1 = ±1
        for k in 1..=order {
            // c0 * inv[k] = -(sum_{j=1}^{k} coeffs[j] * inv[k-j])
            let mut s = BigInt::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &inv[k - j];
            }
            inv[k] = -s * c0; // dividing by ±1 == multiplying by ±1
        }
        Ok(IntSeries { coeffs: inv })
    }
}

/// `[z^k] num / prod(den_factors)`, all arithmetic exact.
pub fn series_coefficient(num: &IntSeries, den_factors: &[IntSeries], k: usize) -> Result<BigInt> {
    if num.order() < k || den_factors.iter().any(|f| f.order() < k) {
        let order = den_factors
            .iter()
            .map(|f| f.order())
            .chain(std::iter::once(num.order()))
            .min()
            .unwrap();
        return Err(Error::InsufficientOrder { order, index: k });
    }
    let mut acc = num.clone();
    for f in den_factors {
        acc = acc.mul(&f.reciprocal()?);
    }
    Ok(acc.coefficient(k)?.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn geometric_reciprocal() {
        let s = IntSeries::one_minus_bz(2, 4);
        let inv = s.reciprocal().unwrap();
        assert_eq!(inv.coefficients(), &[big(1), big(2), big(4), big(8), big(16)]);
    }

    #[test]
    fn reciprocal_of_one() {
        let s = IntSeries::one(3);
        assert_eq!(s.reciprocal().unwrap(), IntSeries::one(3));
    }

    #[test]
    fn reciprocal_round_trip() {
        let s = IntSeries::from_i64(&[1, -2, 1], 6); // (1-z)^2
        let inv = s.reciprocal().unwrap();
        assert_eq!(s.mul(&inv), IntSeries::one(6));
    }

    #[test]
    fn non_unit_constant_term_rejected() {
        let s = IntSeries::from_i64(&[2, 1], 3);
        assert!(matches!(s.reciprocal(), Err(Error::NonUnitConstantTerm)));
    }

    #[test]
    fn quadric_model_coefficients() {
        // (1-z)^2 / (1-2z)^4 = 1 + 6z + 25z^2 + 88z^3 + 280z^4 + ...
        let num = IntSeries::one_minus_z_pow(2, 4);
        let den: Vec<_> = (0..4).map(|_| IntSeries::one_minus_bz(2, 4)).collect();
        assert_eq!(series_coefficient(&num, &den, 2).unwrap(), big(25));
        assert_eq!(series_coefficient(&num, &den, 3).unwrap(), big(88));
        assert_eq!(series_coefficient(&num, &den, 4).unwrap(), big(280));
    }

    #[test]
    fn trivial_ratio() {
        let num = IntSeries::one_minus_bz(1, 2);
        let den = vec![IntSeries::one_minus_bz(1, 2)];
        assert_eq!(series_coefficient(&num, &den, 1).unwrap(), big(0));
    }

    #[test]
    fn insufficient_order() {
        let num = IntSeries::one(2);
        assert!(matches!(
            series_coefficient(&num, &[], 5),
            Err(Error::InsufficientOrder { .. })
        ));
    }
}
