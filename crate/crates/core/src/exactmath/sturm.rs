//! Exact real-root counting via Sturm sequences.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::unipoly::UniPoly;
use crate::rational::Rat;
use crate::{Error, Result};

/// Sturm chain of a squarefree polynomial, over integer coefficients with
/// sign-preserving pseudo-remainders.
pub struct SturmChain {
    chain: Vec<Vec<BigInt>>,
}

impl SturmChain {
    pub fn new(p: &UniPoly) -> Result<SturmChain> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !p.gcd(&p.derivative()).is_constant() {
            return Err(Error::NotSquarefree);
        }
        let p0 = p.primitive_int_coeffs();
        let p1 = UniPoly::from_int_coeffs(&p0).derivative().primitive_int_coeffs();
        let mut chain = vec![p0, p1];
        loop {
            let n = chain.len();
            if chain[n - 1].len() <= 1 {
                break; // constant (possibly zero for non-squarefree input, excluded above)
            }
            let r = signed_pseudo_rem(&chain[n - 2], &chain[n - 1]);
            if r.is_empty() {
                break;
            }
            chain.push(neg_primitive(&r));
        }
        Ok(SturmChain { chain })
    }

    /// Sign variations of the chain at `x`.
    fn variations_at(&self, x: &Rat) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|c| sign_of_eval(c, x))
            .filter(|&s| s != 0)
            .collect();
        count_variations(&signs)
    }

    /// Sign variations at +inf or -inf.
    fn variations_at_infinity(&self, positive: bool) -> usize {
        let signs: Vec<i8> = self
            .chain
            .iter()
            .map(|c| {
                let lead = c.last().cloned().unwrap_or_else(BigInt::zero);
                let mut s = bigint_sign(&lead);
                if !positive && (c.len() - 1) % 2 == 1 {
                    s = -s;
                }
                s
            })
            .filter(|&s| s != 0)
            .collect();
        count_variations(&signs)
    }

    /// Number of real roots in the half-open interval `(lo, hi]`.
    pub fn count_in(&self, lo: &Rat, hi: &Rat) -> usize {
        assert!(lo <= hi);
        self.variations_at(lo) - self.variations_at(hi)
    }

    /// Number of real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }
}

/// Exact count of real roots of a squarefree polynomial, in `(lo, hi]` when
/// an interval is given, on the whole line otherwise.
pub fn real_root_count(p: &UniPoly, interval: Option<(&Rat, &Rat)>) -> Result<usize> {
    let chain = SturmChain::new(p)?;
    Ok(match interval {
        Some((lo, hi)) => chain.count_in(lo, hi),
        None => chain.count_all(),
    })
}

/// Isolating intervals `(lo, hi]` for every real root of a squarefree
/// polynomial, by Sturm bisection; sorted ascending.
pub fn isolate_real_roots(p: &UniPoly) -> Result<Vec<(Rat, Rat)>> {
    let chain = SturmChain::new(p)?;
    let bound = p.root_bound();
    let lo = -bound.clone();
    let hi = bound;
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        let count = chain.count_in(&a, &b);
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push((a, b));
            continue;
        }
        let mid = (&a + &b) / Rat::from(BigInt::from(2));
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

/// Shrinks an isolating interval around a root until its width is below
/// `width`, preserving the `(lo, hi]` bracket.
pub fn refine_root(chain: &SturmChain, mut lo: Rat, mut hi: Rat, width: &Rat) -> (Rat, Rat) {
    let two = Rat::from(BigInt::from(2));
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / &two;
        if chain.count_in(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

fn bigint_sign(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_of_eval(coeffs: &[BigInt], x: &Rat) -> i8 {
    // Horner over rationals; exact.
    let mut acc = Rat::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + Rat::from(c.clone());
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

fn count_variations(signs: &[i8]) -> usize {
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// `m * a mod b` with `m` a positive even power of `lc(b)`, so signs are the
/// signs of the true remainder up to a positive factor.
fn signed_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lead = b.last().unwrap();
    let lead_sq = lead * lead;
    let mut r: Vec<BigInt> = a.to_vec();
    while r.len() > db {
        let k = r.len() - 1;
        let c = r.last().unwrap() * lead;
        for x in r.iter_mut() {
            *x = &*x * &lead_sq;
        }
        for (j, bc) in b.iter().enumerate() {
            let idx = k - db + j;
            r[idx] = &r[idx] - &(&c * bc);
        }
        while r.last().is_some_and(|x| x.is_zero()) {
            r.pop();
        }
        if r.is_empty() {
            break;
        }
    }
    r
}

fn neg_primitive(a: &[BigInt]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut content = BigInt::zero();
    for c in a {
        content = content.gcd(c);
    }
    a.iter().map(|c| -(c / &content)).collect()
}
