//! Dense univariate polynomials over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{rat_to_string, Rat};
use crate::{Error, Result};

/// Coefficients stored lowest degree first; the leading coefficient is
/// nonzero unless the polynomial is zero (empty coefficient list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn monomial(c: Rat, deg: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly::new(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| Rat::from(BigInt::from(c))).collect())
    }

    /// `x - r`
    pub fn linear_root(r: Rat) -> Self {
        UniPoly::new(vec![-r, Rat::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = Vec::with_capacity(n);
        for k in 0..n {
            c.push(self.coeff(k) + other.coeff(k));
        }
        UniPoly::new(c)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> UniPoly {
        if s.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(c)
    }

    pub fn pow(&self, e: u32) -> UniPoly {
        let mut acc = UniPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * Rat::from(BigInt::from(k as u64 + 1)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Euclidean division over Q: `self = q * div + r`, `deg r < deg div`.
    pub fn divrem(&self, div: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!div.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = div.degree();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        let lead = div.leading();
        for k in (dd..rem.len()).rev() {
            let c = &rem[k] / &lead;
            if !c.is_zero() {
                for (j, dc) in div.coeffs.iter().enumerate() {
                    let idx = k - dd + j;
                    rem[idx] = &rem[idx] - &(dc * &c);
                }
            }
            quot[k - dd] = c;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn exact_div(&self, div: &UniPoly) -> UniPoly {
        let (q, r) = self.divrem(div);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Remainder of Euclidean division.
    pub fn rem(&self, div: &UniPoly) -> UniPoly {
        self.divrem(div).1
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let inv = Rat::one() / self.leading();
        self.scale(&inv)
    }

    /// Integer coefficients after clearing denominators, plus the content
    /// removed (primitive part with positive leading coefficient).
    pub fn primitive_int_coeffs(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return vec![];
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * &den / c.denom())
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        for c in ints.iter_mut() {
            *c = &*c / &content;
        }
        ints
    }

    pub fn from_int_coeffs(coeffs: &[BigInt]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|c| Rat::from(c.clone())).collect())
    }

    /// Monic greatest common divisor over Q, computed on primitive integer
    /// parts by a small-prime modular algorithm with CRT lifting and a
    /// trial-division certificate, so coefficient growth never appears.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (a, b) = if self.degree() >= other.degree() {
            (self.primitive_int_coeffs(), other.primitive_int_coeffs())
        } else {
            (other.primitive_int_coeffs(), self.primitive_int_coeffs())
        };
        UniPoly::from_int_coeffs(&int_gcd_modular(&a, &b)).monic()
    }

    /// `p / gcd(p, p')`, monic: same distinct roots, all simple.
    pub fn squarefree_part(&self) -> Result<UniPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(UniPoly::one());
        }
        let g = self.gcd(&self.derivative());
        Ok(self.exact_div(&g).monic())
    }

    /// Cauchy bound: every complex root has modulus below the returned value.
    pub fn root_bound(&self) -> Rat {
        let lead = self.leading();
        let mut max = Rat::zero();
        for c in &self.coeffs[..self.coeffs.len().saturating_sub(1)] {
            let q = (c / &lead).abs();
            if q > max {
                max = q;
            }
        }
        max + Rat::one()
    }
}

impl std::fmt::Display for UniPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", rat_to_string(c))?,
                _ => write!(f, "{}*x^{}", rat_to_string(c), k)?,
            }
        }
        Ok(())
    }
}

pub(crate) fn int_primitive(a: &[BigInt]) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in a {
        content = content.gcd(c);
    }
    if a.last().is_some_and(|c| c.is_negative()) {
        content = -content;
    }
    a.iter().map(|c| c / &content).collect()
}

// ---- modular gcd over Z[x] ----
//
// Images are taken modulo 31-bit primes so products fit in u64. Images of
// matching degree are combined by CRT in the symmetric range; the lift is
// accepted once it stabilizes and divides both inputs exactly.

pub(crate) fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) struct Primes31 {
    next: u64,
}

impl Primes31 {
    pub(crate) fn new() -> Self {
        Primes31 { next: (1 << 31) - 1 }
    }
    pub(crate) fn next_prime(&mut self) -> u64 {
        loop {
            let c = self.next;
            self.next -= 2;
            if is_prime_u64(c) {
                return c;
            }
        }
    }
}

pub(crate) fn mod_big(x: &BigInt, p: u64) -> u64 {
    use num_traits::ToPrimitive;
    x.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // extended Euclid; a is nonzero mod p
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i64) as u64
}

pub(crate) fn poly_mod(a: &[BigInt], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = a.iter().map(|c| mod_big(c, p)).collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Monic gcd in (Z/p)[x]; coefficients lowest first, inputs trimmed.
pub(crate) fn gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        // a mod b in place
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db], p);
        while a.len() > db {
            let k = a.len() - 1;
            let c = a[k] * lead_inv % p;
            if c != 0 {
                for (j, &bc) in b.iter().enumerate() {
                    let sub = c * bc % p;
                    let idx = k - db + j;
                    a[idx] = (a[idx] + p - sub) % p;
                }
            }
            a.pop();
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&lc) = a.last() {
        let inv = inv_mod(lc, p);
        for c in a.iter_mut() {
            *c = *c * inv % p;
        }
    }
    a
}

/// Exact-division check in Z[x]; `g` is primitive with positive lead.
pub(crate) fn int_divides(g: &[BigInt], a: &[BigInt]) -> bool {
    if a.len() < g.len() {
        return false;
    }
    let dg = g.len() - 1;
    let lead = g.last().unwrap();
    let mut r: Vec<BigInt> = a.to_vec();
    while r.len() > dg {
        let k = r.len() - 1;
        let (q, rem) = r[k].div_rem(lead);
        if !rem.is_zero() {
            return false;
        }
        for (j, gc) in g.iter().enumerate() {
            let idx = k - dg + j;
            r[idx] = &r[idx] - &(&q * gc);
        }
        debug_assert!(r[k].is_zero());
        r.pop();
        while r.len() > dg && r.last().is_some_and(|x| x.is_zero()) {
            r.pop();
        }
    }
    r.iter().all(|x| x.is_zero())
}

/// Gcd of primitive integer polynomials, primitive with positive lead.
fn int_gcd_modular(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.len() == 1 || b.len() == 1 {
        // primitive constants: the inputs share no content
        return vec![BigInt::one()];
    }
    let lc_gcd = a.last().unwrap().gcd(b.last().unwrap());
    let mut primes = Primes31::new();
    // accumulated CRT lift: residues in the symmetric range mod `modulus`
    let mut lift: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::zero();
    let mut prev_candidate: Option<Vec<BigInt>> = None;
    loop {
        let p = primes.next_prime();
        if mod_big(a.last().unwrap(), p) == 0 || mod_big(b.last().unwrap(), p) == 0 {
            continue;
        }
        let mut gp = gcd_mod_p(poly_mod(a, p), poly_mod(b, p), p);
        if gp.len() == 1 {
            return vec![BigInt::one()];
        }
        // normalize the image to leading coefficient gcd(lc a, lc b) so that
        // images of different primes agree with a single integer polynomial
        let s = mod_big(&lc_gcd, p);
        for c in gp.iter_mut() {
            *c = *c * s % p;
        }
        if lift.is_empty() || gp.len() < lift.len() {
            // first usable prime, or every previous prime was unlucky
            modulus = BigInt::from(p);
            lift = gp.iter().map(|&c| sym(BigInt::from(c), &modulus)).collect();
            prev_candidate = None;
        } else if gp.len() == lift.len() {
            let inv = inv_mod(mod_big(&modulus, p), p);
            let new_modulus = &modulus * BigInt::from(p);
            for (r, &s) in lift.iter_mut().zip(&gp) {
                // x ≡ r (mod modulus), x ≡ s (mod p)
                let delta = (s + p - mod_big(r, p)) % p * inv % p;
                *r = sym(&*r + &modulus * BigInt::from(delta), &new_modulus);
            }
            modulus = new_modulus;
        } else {
            continue; // unlucky prime: too-high gcd degree
        }
        let candidate = int_primitive(&lift);
        if prev_candidate.as_deref() == Some(&candidate[..]) {
            // lift stabilized: certify by exact division
            if int_divides(&candidate, a) && int_divides(&candidate, b) {
                return candidate;
            }
        }
        prev_candidate = Some(candidate);
    }
}

/// Symmetric representative of `x` modulo `m` in `(-m/2, m/2]`.
pub(crate) fn sym(x: BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if &r + &r > *m {
        r - m
    } else {
        r
    }
}
