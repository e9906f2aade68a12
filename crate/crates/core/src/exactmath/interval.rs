//! Rational interval arithmetic with outward dyadic rounding.
//!
//! Endpoints are exact rationals; after each operation they may be rounded
//! outward to a dyadic of the working precision so that Newton iterations do
//! not blow up the bit size. Complex enclosures are axis-aligned rectangles.

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

use super::unipoly::UniPoly;
use crate::rational::Rat;

/// Closed interval `[lo, hi]` with rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(x: Rat) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn zero() -> Self {
        Interval::point(Rat::zero())
    }

    pub fn centered(mid: &Rat, radius: &Rat) -> Self {
        Interval::new(mid - radius, mid + radius)
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from(BigInt::from(2))
    }

    pub fn contains(&self, x: &Rat) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Strict containment in the interior of `other`.
    pub fn strictly_inside(&self, other: &Interval) -> bool {
        other.lo < self.lo && self.hi < other.hi
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo - &other.hi, &self.hi - &other.lo)
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-self.hi.clone(), -self.lo.clone())
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if p < &lo {
                lo = p.clone();
            }
            if p > &hi {
                hi = p.clone();
            }
        }
        Interval::new(lo, hi)
    }

    /// Reciprocal; the interval must not contain zero.
    pub fn recip(&self) -> Option<Interval> {
        if self.contains_zero() {
            return None;
        }
        Some(Interval::new(Rat::one() / &self.hi, Rat::one() / &self.lo))
    }

    /// `|x|` over the interval.
    pub fn abs(&self) -> Interval {
        if self.lo.is_negative() && !self.hi.is_negative() {
            let m = (-self.lo.clone()).max(self.hi.clone());
            Interval::new(Rat::zero(), m)
        } else if self.hi.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// Lower bound on `|x|` over the interval.
    pub fn abs_lower(&self) -> Rat {
        if self.contains_zero() {
            Rat::zero()
        } else if self.lo.is_positive() {
            self.lo.clone()
        } else {
            -self.hi.clone()
        }
    }

    /// Rounds both endpoints outward to dyadics of roughly `prec` bits.
    pub fn round_out(&self, prec: u32) -> Interval {
        Interval::new(round_dyadic(&self.lo, prec, false), round_dyadic(&self.hi, prec, true))
    }
}

/// Rounds a rational to a dyadic with about `prec` significant bits,
/// towards +inf when `up`, else towards -inf.
pub fn round_dyadic(x: &Rat, prec: u32, up: bool) -> Rat {
    if x.denom().is_one() {
        return x.clone();
    }
    let num_bits = x.numer().abs().bits() as i64;
    let den_bits = x.denom().bits() as i64;
    // want mantissa of ~prec bits: scale exponent e with m = x * 2^e
    let e = prec as i64 - (num_bits - den_bits);
    let (scaled_num, scaled_den) = if e >= 0 {
        (x.numer() << e as u64, x.denom().clone())
    } else {
        (x.numer().clone(), x.denom() << (-e) as u64)
    };
    use num_integer::Integer;
    let (q, r) = scaled_num.div_rem(&scaled_den);
    let m = if r.is_zero() {
        q
    } else if up {
        if scaled_num.sign() == Sign::Minus {
            q
        } else {
            q + 1
        }
    } else if scaled_num.sign() == Sign::Minus {
        q - 1
    } else {
        q
    };
    if e >= 0 {
        Rat::new(m, BigInt::one() << e as u64)
    } else {
        Rat::from(m << (-e) as u64)
    }
}

/// Axis-aligned rectangle enclosing a complex value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexBox {
    pub re: Interval,
    pub im: Interval,
}

impl ComplexBox {
    pub fn new(re: Interval, im: Interval) -> Self {
        ComplexBox { re, im }
    }

    pub fn point(re: Rat, im: Rat) -> Self {
        ComplexBox::new(Interval::point(re), Interval::point(im))
    }

    pub fn centered(re: &Rat, im: &Rat, radius: &Rat) -> Self {
        ComplexBox::new(Interval::centered(re, radius), Interval::centered(im, radius))
    }

    pub fn midpoint(&self) -> (Rat, Rat) {
        (self.re.midpoint(), self.im.midpoint())
    }

    pub fn add(&self, other: &ComplexBox) -> ComplexBox {
        ComplexBox::new(self.re.add(&other.re), self.im.add(&other.im))
    }

    pub fn sub(&self, other: &ComplexBox) -> ComplexBox {
        ComplexBox::new(self.re.sub(&other.re), self.im.sub(&other.im))
    }

    pub fn mul(&self, other: &ComplexBox) -> ComplexBox {
        let re = self.re.mul(&other.re).sub(&self.im.mul(&other.im));
        let im = self.re.mul(&other.im).add(&self.im.mul(&other.re));
        ComplexBox::new(re, im)
    }

    /// Division via multiplication by the conjugate; `None` when the
    /// denominator rectangle may contain zero.
    pub fn div(&self, other: &ComplexBox) -> Option<ComplexBox> {
        let norm = other.re.mul(&other.re).add(&other.im.mul(&other.im));
        let inv_norm = norm.recip()?;
        let conj = ComplexBox::new(other.re.clone(), other.im.neg());
        let num = self.mul(&conj);
        Some(ComplexBox::new(num.re.mul(&inv_norm), num.im.mul(&inv_norm)))
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn strictly_inside(&self, other: &ComplexBox) -> bool {
        self.re.strictly_inside(&other.re) && self.im.strictly_inside(&other.im)
    }

    /// Upper bound on the max-norm diameter.
    pub fn diameter(&self) -> Rat {
        self.re.width().max(self.im.width())
    }

    /// Lower bound on the max-norm distance between two boxes.
    pub fn distance_lower(&self, other: &ComplexBox) -> Rat {
        let dre = self.re.sub(&other.re).abs_lower();
        let dim = self.im.sub(&other.im).abs_lower();
        dre.max(dim)
    }

    /// Lower bound on `|z|` (max-norm) over the box.
    pub fn abs_lower(&self) -> Rat {
        self.re.abs_lower().max(self.im.abs_lower())
    }

    pub fn round_out(&self, prec: u32) -> ComplexBox {
        ComplexBox::new(self.re.round_out(prec), self.im.round_out(prec))
    }
}

/// Horner evaluation of a rational polynomial over a complex rectangle.
/// The accumulator is rounded outward to `prec` bits after every step so
/// endpoint sizes stay bounded regardless of coefficient size.
pub fn eval_poly_box(p: &UniPoly, z: &ComplexBox, prec: u32) -> ComplexBox {
    let mut acc = ComplexBox::point(Rat::zero(), Rat::zero());
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(z);
        acc.re = acc.re.add(&Interval::point(c.clone()));
        acc = acc.round_out(prec);
    }
    acc
}

/// Horner evaluation at an exact complex rational point.
pub fn eval_poly_complex_exact(p: &UniPoly, re: &Rat, im: &Rat) -> (Rat, Rat) {
    let mut are = Rat::zero();
    let mut aim = Rat::zero();
    for c in p.coeffs().iter().rev() {
        let nre = &are * re - &aim * im + c;
        let nim = &are * im + &aim * re;
        are = nre;
        aim = nim;
    }
    (are, aim)
}
