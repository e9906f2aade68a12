//! Certified complex root isolation for squarefree rational polynomials.
//!
//! Floating-point Aberth iteration supplies initial approximations; each one
//! is polished by exact rational Newton steps and then certified by a
//! Krawczyk contraction test in rectangle arithmetic. Working precision
//! doubles (128 up to a caller-set ceiling) until every root sits in its own
//! box of diameter below the requested tolerance, with all boxes pairwise
//! disjoint.

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::interval::{eval_poly_box, round_dyadic, ComplexBox, Interval};
use super::unipoly::UniPoly;
use crate::rational::Rat;
use crate::{Error, Result};

/// Starting working precision in bits.
pub const START_BITS: u32 = 128;
/// Default precision ceiling in bits.
pub const DEFAULT_MAX_BITS: u32 = 4096;

/// A complex root with a rigorous rectangular enclosure.
#[derive(Debug, Clone)]
pub struct CertifiedRoot {
    /// Rectangle proven to contain exactly one root.
    pub enclosure: ComplexBox,
    /// Floating-point midpoint, for display only.
    pub approx_re: f64,
    pub approx_im: f64,
    /// Proven real (unique root of a conjugation-symmetric box).
    pub is_real: bool,
    /// Working precision at which certification succeeded.
    pub precision_bits: u32,
}

/// All complex roots of a squarefree polynomial, each certified to lie in a
/// box of diameter at most `tol`, boxes pairwise disjoint.
pub fn complex_roots_numeric(p: &UniPoly, tol: &Rat, max_bits: u32) -> Result<Vec<CertifiedRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.gcd(&p.derivative()).is_constant() {
        return Err(Error::NotSquarefree);
    }
    let n = p.degree();
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        let r = -(p.coeff(0) / p.coeff(1));
        return Ok(vec![CertifiedRoot {
            enclosure: ComplexBox::point(r.clone(), Rat::zero()),
            approx_re: r.to_f64().unwrap_or(f64::NAN),
            approx_im: 0.0,
            is_real: true,
            precision_bits: START_BITS,
        }]);
    }
    let seeds = aberth_seeds(p);
    let deriv = p.derivative();
    let mut bits = START_BITS;
    loop {
        match certify_all(p, &deriv, &seeds, tol, bits) {
            Some(roots) => return Ok(roots),
            None => {
                if bits >= max_bits {
                    return Err(Error::PrecisionExhausted { bits });
                }
                bits = (bits * 2).min(max_bits);
            }
        }
    }
}

fn certify_all(
    p: &UniPoly,
    deriv: &UniPoly,
    seeds: &[Complex64],
    tol: &Rat,
    bits: u32,
) -> Option<Vec<CertifiedRoot>> {
    let mut roots = Vec::with_capacity(seeds.len());
    for s in seeds {
        roots.push(certify_one(p, deriv, *s, tol, bits)?);
    }
    // distinct roots of a squarefree polynomial must end up in disjoint boxes
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            let a: &CertifiedRoot = &roots[i];
            let b = &roots[j];
            if a.enclosure.distance_lower(&b.enclosure).is_zero() {
                return None;
            }
        }
    }
    Some(roots)
}

fn certify_one(
    p: &UniPoly,
    deriv: &UniPoly,
    seed: Complex64,
    tol: &Rat,
    bits: u32,
) -> Option<CertifiedRoot> {
    let (mut re, mut im) = (rat_from_f64(seed.re, bits)?, rat_from_f64(seed.im, bits)?);
    // exact Newton polishing; quadratic convergence makes ~bits steps ample
    let step_goal = pow2_neg(bits / 2 + 4);
    for _ in 0..64 {
        // the polish is heuristic (certification comes later), so dyadic
        // round-to-working-precision evaluation is enough; exact quotients
        // would drag huge coprime denominators through every reduction
        let (fre, fim) = eval_poly_dyadic(p, &re, &im, bits);
        let (dre, dim) = eval_poly_dyadic(deriv, &re, &im, bits);
        let norm = &dre * &dre + &dim * &dim;
        if norm.is_zero() {
            return None;
        }
        let sre = (&fre * &dre + &fim * &dim) / &norm;
        let sim = (&fim * &dre - &fre * &dim) / &norm;
        re = round_dyadic(&(&re - &sre), bits, false);
        im = round_dyadic(&(&im - &sim), bits, false);
        if sre.abs() < step_goal && sim.abs() < step_goal {
            break;
        }
    }
    // start from a box around the polished point and contract
    let mut radius = pow2_neg(bits / 4).max(tol / Rat::from(num_bigint::BigInt::from(4)));
    let mut z = ComplexBox::centered(&re, &im, &radius);
    let mut certified = false;
    for _ in 0..8 {
        match krawczyk_step(p, deriv, &z, bits) {
            Some(k) if k.strictly_inside(&z) => {
                z = k;
                certified = true;
                break;
            }
            _ => {
                radius = &radius / Rat::from(num_bigint::BigInt::from(16));
                if radius.is_zero() {
                    return None;
                }
                z = ComplexBox::centered(&re, &im, &radius);
            }
        }
    }
    if !certified {
        return None;
    }
    // shrink the certified box below tol
    let mut guard = 0;
    while z.diameter() > *tol {
        let k = krawczyk_step(p, deriv, &z, bits)?;
        if !k.strictly_inside(&z) {
            return None;
        }
        if k.diameter() >= z.diameter() {
            return None; // stalled: precision too low to contract further
        }
        z = k;
        guard += 1;
        if guard > 200 {
            return None;
        }
    }
    let is_real = z.im.contains_zero() && real_certificate(p, deriv, &z, bits);
    let (mre, mim) = z.midpoint();
    Some(CertifiedRoot {
        enclosure: z,
        approx_re: mre.to_f64().unwrap_or(f64::NAN),
        approx_im: mim.to_f64().unwrap_or(f64::NAN),
        is_real,
        precision_bits: bits,
    })
}

/// One Krawczyk iteration: `K = m - c f(m) + (1 - c f'(Z)) (Z - m)` with
/// `c = 1 / f'(m)`. `K` strictly inside `Z` proves a unique root in `Z`.
fn krawczyk_step(p: &UniPoly, deriv: &UniPoly, z: &ComplexBox, bits: u32) -> Option<ComplexBox> {
    let (mre, mim) = z.midpoint();
    let mre = round_dyadic(&mre, bits, false);
    let mim = round_dyadic(&mim, bits, false);
    let m = ComplexBox::point(mre.clone(), mim.clone());
    if !z.re.contains(&mre) || !z.im.contains(&mim) {
        return None;
    }
    // any fixed preconditioner c proves containment, so c may be a dyadic
    // approximation of 1/f'(m); only f(m) and f'(Z) need rigorous enclosures
    let (dre, dim) = eval_poly_dyadic(deriv, &mre, &mim, bits);
    let norm = &dre * &dre + &dim * &dim;
    if norm.is_zero() {
        return None;
    }
    let c = ComplexBox::point(
        round_dyadic(&(&dre / &norm), bits, false),
        round_dyadic(&(-(&dim / &norm)), bits, false),
    );
    let fm = eval_poly_box(p, &m, 2 * bits);
    let fpz = eval_poly_box(deriv, z, 2 * bits);
    let one = ComplexBox::point(Rat::one(), Rat::zero());
    let residual = one.sub(&c.mul(&fpz).round_out(2 * bits)).mul(&z.sub(&m));
    let k = m.sub(&c.mul(&fm).round_out(2 * bits)).add(&residual);
    Some(k.round_out(2 * bits))
}

/// Certifies reality: a conjugation-symmetric box with a unique root of a
/// real polynomial forces that root onto the real axis.
fn real_certificate(p: &UniPoly, deriv: &UniPoly, z: &ComplexBox, bits: u32) -> bool {
    let r = {
        let a = -z.im.lo.clone();
        let b = z.im.hi.clone();
        a.max(b)
    };
    let sym = ComplexBox::new(z.re.clone(), Interval::new(-r.clone(), r));
    matches!(krawczyk_step(p, deriv, &sym, bits), Some(k) if k.strictly_inside(&sym))
}

/// Horner evaluation rounded to `bits`-bit dyadics after every step.
/// Approximate (not an enclosure); used only where rigor is not required.
fn eval_poly_dyadic(p: &UniPoly, re: &Rat, im: &Rat, bits: u32) -> (Rat, Rat) {
    let mut are = Rat::zero();
    let mut aim = Rat::zero();
    for c in p.coeffs().iter().rev() {
        let nre = &are * re - &aim * im + c;
        let nim = &are * im + &aim * re;
        are = round_dyadic(&nre, bits, false);
        aim = round_dyadic(&nim, bits, false);
    }
    (are, aim)
}

fn pow2_neg(k: u32) -> Rat {
    Rat::new(num_bigint::BigInt::one(), num_bigint::BigInt::one() << k as u64)
}

fn rat_from_f64(x: f64, bits: u32) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    let r = Rat::from_float(x)?;
    Some(round_dyadic(&r, bits, false))
}

/// Aberth simultaneous iteration in f64, seeding from a circle inside the
/// root bound. Accuracy only needs to beat the basin of the exact Newton
/// polish that follows.
fn aberth_seeds(p: &UniPoly) -> Vec<Complex64> {
    let n = p.degree();
    // normalize by the largest coefficient so f64 conversion cannot overflow
    let max_abs = p
        .coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rat::one);
    let cf: Vec<Complex64> = p
        .coeffs()
        .iter()
        .map(|c| Complex64::new((c / &max_abs).to_f64().unwrap_or(0.0), 0.0))
        .collect();
    let dcf: Vec<Complex64> = cf
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect();
    let radius = p.root_bound().to_f64().unwrap_or(1e6).min(1e6).max(0.5);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius * (0.5 + 0.5 * (k as f64 + 1.0) / n as f64), angle)
        })
        .collect();
    for _ in 0..400 {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let pv = horner(&cf, z[k]);
            let dv = horner(&dcf, z[k]);
            if dv.norm_sqr() == 0.0 {
                z[k] += Complex64::new(1e-6, 1e-6);
                max_step = f64::MAX;
                continue;
            }
            let w = pv / dv;
            let mut s = Complex64::new(0.0, 0.0);
            for (j, zj) in z.iter().enumerate() {
                if j != k {
                    let d = z[k] - zj;
                    if d.norm_sqr() > 0.0 {
                        s += d.inv();
                    }
                }
            }
            let denom = Complex64::new(1.0, 0.0) - w * s;
            let step = if denom.norm_sqr() > 0.0 { w / denom } else { w };
            z[k] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-14 * (1.0 + radius) {
            break;
        }
    }
    z
}

fn horner(coeffs: &[Complex64], x: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}
