//! Arbitrary-precision rational scalars and their `"p/q"` string form.
//!
//! [`num_rational::BigRational`] already maintains the invariants we need
//! (lowest terms, positive denominator, zero as `0/1`), so the crate uses it
//! directly under the alias [`Rat`].

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Renders a rational as `"p"` or `"p/q"`.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"`, `"p/q"`, or `"2^-k"` (handy for tolerances).
pub fn rat_from_str(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let bad = || Error::InvalidInput(format!("cannot parse rational {s:?}"));
    if let Some(exp) = s.strip_prefix("2^") {
        let e: i64 = exp.parse().map_err(|_| bad())?;
        let two = BigInt::from(2);
        return Ok(if e >= 0 {
            Rat::from(two.pow(e as u32))
        } else {
            Rat::new(BigInt::one(), two.pow((-e) as u32))
        });
    }
    match s.split_once('/') {
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat::from(n))
        }
        Some((p, q)) => {
            let n: BigInt = p.trim().parse().map_err(|_| bad())?;
            let d: BigInt = q.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// `true` if the rational is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Converts to `BigInt`, failing on non-integers.
pub fn to_bigint(r: &Rat) -> Result<BigInt, Error> {
    if is_integer(r) {
        Ok(r.numer().clone())
    } else {
        Err(Error::InvalidInput(format!(
            "expected an integer, got {}",
            rat_to_string(r)
        )))
    }
}

pub fn abs(r: &Rat) -> Rat {
    if r.is_negative() {
        -r.clone()
    } else {
        r.clone()
    }
}
