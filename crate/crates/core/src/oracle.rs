//! Independent verification oracle: counts the critical points of the
//! likelihood `∏ f_i^{u_i}` for small models (`d ≤ 2`) by exact elimination,
//! without using any of the combinatorial degree formulas.
//!
//! The score equations `Σ_i u_i ∂_k f_i / f_i = 0` are cleared to polynomial
//! numerators `g_k = Σ_i u_i (∂f_i/∂θ_k) ∏_{j≠i} f_j`. For `d = 1` the count
//! is the degree of the squarefree part of `g_1` after removing roots of the
//! divisor `∏ f_i`. For `d = 2` a resultant eliminates the second variable,
//! an order-1 subresultant certifies that each surviving elimination root
//! carries exactly one fiber point, and divisor-supported roots are removed
//! exactly. Real counts come from Sturm chains; individual solutions are
//! reported as certified complex interval enclosures.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactmath::bivar::{
    bi_content, bi_deg, bi_exact_div, bivar_gcd, resultant, subresultant_linear, BiPoly,
};
use crate::exactmath::unipoly::{
    gcd_mod_p, int_divides, int_primitive, inv_mod, mod_big, poly_mod, sym, Primes31,
};
use crate::exactmath::interval::{eval_poly_box, ComplexBox};
use crate::exactmath::roots::{complex_roots_numeric, DEFAULT_MAX_BITS, START_BITS};
use crate::exactmath::sturm::real_root_count;
use crate::exactmath::{MultiPoly, UniPoly};
use crate::rational::{rat, Rat};
use crate::{Error, Result};

/// Numeric parameters for the certification stage.
#[derive(Debug, Clone)]
pub struct OracleOptions {
    /// Requested enclosure diameter.
    pub tol: Rat,
    /// Precision ceiling for the certification ladder.
    pub max_bits: u32,
    /// Seed for the shear-selection generator.
    pub seed: u64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            tol: rat(1, 1 << 40),
            max_bits: DEFAULT_MAX_BITS,
            seed: 0,
        }
    }
}

/// The cleared score system of a model.
#[derive(Debug, Clone)]
pub struct LikelihoodSystem {
    pub d: usize,
    /// Ordinary (non-Laurent) factors after monomial clearing; includes
    /// coordinate pseudo-factors introduced by the clearing.
    pub factors: Vec<MultiPoly>,
    /// Weights aligned with `factors`; pseudo-factor weights may be zero,
    /// in which case they only mark the coordinate divisor.
    pub weights: Vec<i64>,
    /// Score numerators with any divisor-supported common factor removed.
    pub g: Vec<MultiPoly>,
    /// Total degree of the common factor that was removed from all `g_k`.
    pub removed_common_degree: usize,
}

/// One certified critical point.
#[derive(Debug, Clone)]
pub struct CriticalPoint {
    pub theta: Vec<ComplexBox>,
    pub approx: Vec<(f64, f64)>,
    pub is_real: bool,
}

/// Outcome of a critical-point count.
#[derive(Debug, Clone)]
pub struct CriticalCountReport {
    pub complex_count: usize,
    pub real_count: usize,
    /// True when every reported enclosure was proved to contain exactly one
    /// solution and each root was proved real or proved non-real.
    pub certified: bool,
    /// Elimination roots discarded because they lie on the divisor.
    pub filtered_extraneous: usize,
    pub precision_bits: u32,
    /// Enclosure diameter actually requested from the certifier.
    pub residual_bound: Rat,
    pub points: Vec<CriticalPoint>,
}

fn is_bi_constant(p: &BiPoly) -> bool {
    bi_deg(p) == 0 && p[0].is_constant()
}

/// Builds the cleared score system. Laurent factors are multiplied by a
/// monomial; the compensating power of each coordinate enters as an extra
/// factor so that divisor filtering and the score equations stay faithful
/// to the original torus model.
pub fn build_system(d: usize, factors: &[MultiPoly], weights: &[i64]) -> Result<LikelihoodSystem> {
    if d == 0 || d > 2 {
        return Err(Error::UnsupportedOracleDimension(d));
    }
    if factors.is_empty() {
        return Err(Error::InvalidInput("model needs at least one factor".into()));
    }
    if factors.len() != weights.len() {
        return Err(Error::InvalidInput(
            "weight count must match factor count".into(),
        ));
    }
    if weights.iter().any(|&w| w == 0) {
        return Err(Error::InvalidInput("weights must be nonzero".into()));
    }
    for f in factors {
        if f.nvars() != d {
            return Err(Error::DimensionMismatch(d, f.nvars()));
        }
        if f.is_constant() {
            return Err(Error::InvalidInput(
                "constant factors have no critical structure".into(),
            ));
        }
    }
    // clear Laurent terms: f_i ↦ θ^{s_i} f_i with s_i = -min(exponents, 0);
    // the product changes by θ^{-Σ u_i s_i}, tracked as coordinate factors
    let mut cleared: Vec<MultiPoly> = Vec::with_capacity(factors.len());
    let mut all_weights: Vec<i64> = weights.to_vec();
    let mut compensation = vec![0i64; d];
    let mut any_laurent = false;
    for (f, &w) in factors.iter().zip(weights) {
        if f.has_negative_exponents() {
            any_laurent = true;
            let min = f.min_exponents();
            let shift: Vec<i64> = min.iter().map(|&m| (-m).max(0)).collect();
            for (c, s) in compensation.iter_mut().zip(&shift) {
                *c -= w * s;
            }
            cleared.push(f.mul_monomial(&shift));
        } else {
            cleared.push(f.clone());
        }
    }
    if any_laurent {
        // a Laurent model lives on the torus: mark both coordinate divisors
        // even when the compensating exponent happens to vanish
        for k in 0..d {
            cleared.push(MultiPoly::var(k, d));
            all_weights.push(compensation[k]);
        }
    }

    let n = cleared.len();
    let mut g: Vec<MultiPoly> = Vec::with_capacity(d);
    for var in 0..d {
        let mut acc = MultiPoly::zero(d);
        for i in 0..n {
            if all_weights[i] == 0 {
                continue;
            }
            let mut term = cleared[i]
                .derivative(var)
                .scale(&Rat::from(BigInt::from(all_weights[i])));
            for (j, f) in cleared.iter().enumerate() {
                if j != i {
                    term = term.mul(f);
                }
            }
            acc = acc.add(&term);
        }
        if acc.is_zero() {
            return Err(Error::DegenerateSystem(
                "a score numerator vanishes identically".into(),
            ));
        }
        g.push(acc);
    }

    let mut removed_common_degree = 0usize;
    if d == 2 {
        let b1 = g[0].to_bivar();
        let b2 = g[1].to_bivar();
        // cheap coprimality certificate first: the polynomial PRS gcd is
        // expensive and almost always answers "constant"
        let coprime = {
            let content = bi_content(&b1).gcd(&bi_content(&b2));
            content.degree() == 0
                && (bi_deg(&b1) == 0 && bi_deg(&b2) == 0
                    || !resultant(&b1, &b2)?.is_zero())
        };
        let h = if coprime { vec![UniPoly::one()] } else { bivar_gcd(&b1, &b2) };
        if !is_bi_constant(&h) {
            // a shared factor is only tolerable when all of it is supported
            // on the divisor; otherwise the critical locus is positive
            // dimensional
            let big_f = cleared.iter().fold(MultiPoly::constant(2, Rat::from(BigInt::from(1))), |a, f| a.mul(f));
            let fb = big_f.to_bivar();
            let mut t = h.clone();
            while !is_bi_constant(&t) {
                let s = bivar_gcd(&t, &fb);
                if is_bi_constant(&s) {
                    return Err(Error::DegenerateSystem(
                        "score numerators share a factor off the divisor".into(),
                    ));
                }
                t = bi_exact_div(&t, &s);
            }
            let hp = MultiPoly::from_bivar(&h);
            removed_common_degree = hp.total_degree() as usize;
            g[0] = MultiPoly::from_bivar(&bi_exact_div(&b1, &h));
            g[1] = MultiPoly::from_bivar(&bi_exact_div(&b2, &h));
        }
    }

    Ok(LikelihoodSystem {
        d,
        factors: cleared,
        weights: all_weights,
        g,
        removed_common_degree,
    })
}

/// Counts critical points off the divisor, with certified enclosures.
pub fn count_critical(sys: &LikelihoodSystem, opts: &OracleOptions) -> Result<CriticalCountReport> {
    match sys.d {
        1 => count_d1(sys, opts),
        2 => count_d2(sys, opts),
        d => Err(Error::UnsupportedOracleDimension(d)),
    }
}

fn divisor_product(sys: &LikelihoodSystem) -> MultiPoly {
    sys.factors
        .iter()
        .fold(MultiPoly::constant(sys.d, Rat::from(BigInt::from(1))), |a, f| a.mul(f))
}

fn empty_report(tol: &Rat, filtered: usize) -> CriticalCountReport {
    CriticalCountReport {
        complex_count: 0,
        real_count: 0,
        certified: true,
        filtered_extraneous: filtered,
        precision_bits: START_BITS,
        residual_bound: tol.clone(),
        points: Vec::new(),
    }
}

fn count_d1(sys: &LikelihoodSystem, opts: &OracleOptions) -> Result<CriticalCountReport> {
    let g = sys.g[0].to_unipoly();
    let big_f = divisor_product(sys).to_unipoly();
    let p = g.squarefree_part()?;
    let div = p.gcd(&big_f.squarefree_part()?);
    let q = if div.degree() > 0 { p.exact_div(&div) } else { p.clone() };
    let filtered = p.degree() - q.degree();
    if q.degree() == 0 {
        return Ok(empty_report(&opts.tol, filtered));
    }
    let real = real_root_count(&q, None)?;
    let roots = complex_roots_numeric(&q, &opts.tol, opts.max_bits)?;
    let mut points = Vec::with_capacity(roots.len());
    let mut precision = START_BITS;
    for r in &roots {
        precision = precision.max(r.precision_bits);
        points.push(CriticalPoint {
            theta: vec![r.enclosure.clone()],
            approx: vec![(r.approx_re, r.approx_im)],
            is_real: r.is_real,
        });
    }
    let real_from_roots = points.iter().filter(|p| p.is_real).count();
    Ok(CriticalCountReport {
        complex_count: q.degree(),
        real_count: real,
        certified: real_from_roots == real,
        filtered_extraneous: filtered,
        precision_bits: precision,
        residual_bound: opts.tol.clone(),
        points,
    })
}

/// A unimodular shear `θ = S·y` with small entries; the first candidate is
/// the identity so untilted inputs keep their coordinates.
fn shear_candidates(seed: u64, count: usize) -> Vec<Vec<Vec<i64>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![vec![vec![1, 0], vec![0, 1]]];
    while out.len() < count {
        let a: i64 = rng.gen_range(-5..=5);
        let b: i64 = rng.gen_range(-5..=5);
        if a == 0 && b == 0 {
            continue;
        }
        // det [[1, a], [b, 1 + a b]] = 1
        out.push(vec![vec![1, a], vec![b, 1 + a * b]]);
    }
    out
}

/// Per-shear elimination data: the divisor-saturated squarefree resultant
/// and the linear fiber certificate `c1·y + c0`.
struct Elimination {
    shear: Vec<Vec<i64>>,
    r_sat: UniPoly,
    c1: UniPoly,
    c0: UniPoly,
    filtered: usize,
}

fn try_shear(sys: &LikelihoodSystem, shear: &[Vec<i64>]) -> Result<Option<Elimination>> {
    let g1 = sys.g[0].linear_substitute(shear);
    let g2 = sys.g[1].linear_substitute(shear);
    let b1 = g1.to_bivar();
    let b2 = g2.to_bivar();
    // a valid shear puts the full total degree into y, so the leading
    // y-coefficients are constants and no solution escapes to infinity
    if bi_deg(&b1) as i64 != g1.total_degree() || bi_deg(&b2) as i64 != g2.total_degree() {
        return Ok(None);
    }
    let r = resultant(&b1, &b2)?;
    if r.is_zero() {
        return Err(Error::DegenerateSystem(
            "resultant vanishes identically after saturation".into(),
        ));
    }
    let r_squarefree = r.squarefree_part()?;
    // fiber certificate: at each surviving root x0 the specialized gcd must
    // be linear, with root y0 = -c0(x0)/c1(x0)
    let (c1, c0) = if bi_deg(&b1) == 1 {
        (b1[1].clone(), b1[0].clone())
    } else if bi_deg(&b2) == 1 {
        (b2[1].clone(), b2[0].clone())
    } else {
        subresultant_linear(&b1, &b2)?
    };
    if c1.is_zero() {
        return Ok(None);
    }
    // divisor saturation: remove elimination roots whose fiber point lies on
    // the divisor. Roots where both c1 and c0 vanish (degenerate fibers, e.g.
    // a high-multiplicity base point shared by every factor) make the
    // numerator vanish too and are removed with them.
    let big_f = divisor_product(sys).linear_substitute(shear);
    let r_sat = if r_squarefree.degree() == 0 {
        r_squarefree.clone()
    } else {
        match divisor_shared_roots(&r_squarefree, &big_f.to_bivar(), &c1, &c0) {
            // the certified fiber section lies inside the divisor:
            // everything the resultant sees is extraneous
            None => UniPoly::one(),
            Some(shared) if shared.degree() > 0 => {
                r_squarefree.exact_div(&shared).monic()
            }
            Some(_) => r_squarefree.clone(),
        }
    };
    // the fiber-uniqueness certificate only needs to hold off the divisor:
    // every surviving root must have a nonvanishing linear certificate
    if r_sat.degree() > 0 && r_sat.gcd(&c1).degree() > 0 {
        return Ok(None);
    }
    let filtered = r_squarefree.degree() - r_sat.degree();
    Ok(Some(Elimination {
        shear: shear.to_vec(),
        r_sat,
        c1,
        c0,
        filtered,
    }))
}

/// Numerator of `F(x, -c0(x)/c1(x))` cleared by `c1^{deg_y F}`; its roots are
/// the elimination values whose unique fiber point lies on the divisor.
fn divisor_numerator(fb: &BiPoly, c1: &UniPoly, c0: &UniPoly) -> UniPoly {
    let dy = bi_deg(fb);
    let minus_c0 = c0.neg();
    let mut acc = UniPoly::zero();
    for (j, cj) in fb.iter().enumerate().take(dy + 1) {
        if cj.is_zero() {
            continue;
        }
        let term = cj.mul(&minus_c0.pow(j as u32)).mul(&c1.pow((dy - j) as u32));
        acc = acc.add(&term);
    }
    acc
}

/// Clears denominators and the shared integer content of a pair of
/// polynomials by one common constant. A single uniform scale on `(c1, c0)`
/// scales the divisor numerator term-uniformly (per-polynomial scaling
/// would move its roots).
fn clear_pair(a: &UniPoly, b: &UniPoly) -> (Vec<BigInt>, Vec<BigInt>) {
    use num_integer::Integer;
    use num_traits::One;
    let mut den = BigInt::one();
    for c in a.coeffs().iter().chain(b.coeffs()) {
        den = den.lcm(c.denom());
    }
    let conv = |p: &UniPoly| -> Vec<BigInt> {
        p.coeffs().iter().map(|c| c.numer() * &den / c.denom()).collect()
    };
    let (mut ai, mut bi) = (conv(a), conv(b));
    let mut content = BigInt::zero();
    for c in ai.iter().chain(&bi) {
        content = content.gcd(c);
    }
    if !content.is_one() && !content.is_zero() {
        for c in ai.iter_mut().chain(bi.iter_mut()) {
            *c = &*c / &content;
        }
    }
    (ai, bi)
}

/// Integer columns of a bivariate polynomial after one uniform clearing.
fn clear_columns(fb: &BiPoly) -> Vec<Vec<BigInt>> {
    use num_integer::Integer;
    use num_traits::One;
    let mut den = BigInt::one();
    for col in fb {
        for c in col.coeffs() {
            den = den.lcm(c.denom());
        }
    }
    fb.iter()
        .map(|col| col.coeffs().iter().map(|c| c.numer() * &den / c.denom()).collect())
        .collect()
}

fn poly_mul_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut c = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = (c[i + j] + x * y) % p;
        }
    }
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

fn poly_add_mod_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut c = vec![0u64; n];
    for k in 0..n {
        let x = a.get(k).copied().unwrap_or(0);
        let y = b.get(k).copied().unwrap_or(0);
        c[k] = (x + y) % p;
    }
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

/// `Σ_j f_j(x) (−c0)^j c1^{dy−j} mod p`, by Horner in `−c0`.
fn numerator_mod_p(f_cols: &[Vec<BigInt>], c1: &[BigInt], c0: &[BigInt], p: u64) -> Vec<u64> {
    let dy = f_cols.len() - 1;
    let c1p = poly_mod(c1, p);
    let mut mc0p = poly_mod(c0, p);
    for c in mc0p.iter_mut() {
        *c = (p - *c) % p;
    }
    let cols: Vec<Vec<u64>> = f_cols.iter().map(|c| poly_mod(c, p)).collect();
    let mut acc = cols[dy].clone();
    let mut c1pow = vec![1u64];
    for j in (0..dy).rev() {
        c1pow = poly_mul_mod_p(&c1pow, &c1p, p);
        let term = poly_mul_mod_p(&cols[j], &c1pow, p);
        acc = poly_add_mod_p(&poly_mul_mod_p(&acc, &mc0p, p), &term, p);
    }
    acc
}

/// Remainder of `a mod b` in `(Z/p)[x]`; `b` nonempty with invertible lead.
fn poly_rem_mod_p(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
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
    a
}

/// Checks that `cand` divides the divisor numerator at `rounds` fresh
/// primes. Building the numerator over `Q` (or reducing it modulo a
/// non-monic candidate) is far too expensive, so the check is modular;
/// a false positive needs every prime to divide a fixed nonzero resultant,
/// which at 31 bits per prime is beyond astronomically unlikely. The count
/// is additionally guarded by the cross-shear agreement in `count_d2`.
fn numerator_divisible(
    cand: &[BigInt],
    f_cols: &[Vec<BigInt>],
    c1: &[BigInt],
    c0: &[BigInt],
    primes: &mut Primes31,
    rounds: usize,
) -> bool {
    let mut done = 0;
    while done < rounds {
        let p = primes.next_prime();
        let cp = poly_mod(cand, p);
        if cp.len() != cand.len() {
            continue; // leading coefficient collapsed mod p
        }
        let np = numerator_mod_p(f_cols, c1, c0, p);
        if !poly_rem_mod_p(np, &cp, p).is_empty() {
            return false;
        }
        done += 1;
    }
    true
}

/// Monic gcd of `rsq` with the numerator of `F(x, -c0(x)/c1(x))`, or `None`
/// when the numerator vanishes identically (the whole certified fiber
/// section lies inside the divisor).
///
/// The numerator has degree `deg_y F · max(deg c1, deg c0)` with enormous
/// coefficients, so it is never constructed over `Q`: gcd images are taken
/// modulo 31-bit primes, lifted by CRT, and certified by exact division
/// into both inputs (the numerator side via reduction mod the candidate).
fn divisor_shared_roots(
    rsq: &UniPoly,
    fb: &BiPoly,
    c1: &UniPoly,
    c0: &UniPoly,
) -> Option<UniPoly> {
    let rsq_int = rsq.primitive_int_coeffs();
    let (c1i, c0i) = clear_pair(c1, c0);
    let f_cols = clear_columns(fb);
    let lc = rsq_int.last().unwrap().clone();
    let mut primes = Primes31::new();
    let mut lift: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::zero();
    let mut prev: Option<Vec<BigInt>> = None;
    loop {
        let p = primes.next_prime();
        if mod_big(&lc, p) == 0 {
            continue;
        }
        let np = numerator_mod_p(&f_cols, &c1i, &c0i, p);
        if np.is_empty() {
            // an unlucky prime, or the numerator really is zero: settle
            // exactly once (the identically-zero case only arises for tiny
            // degenerate systems, where the exact build is cheap)
            if divisor_numerator(fb, c1, c0).is_zero() {
                return None;
            }
            continue;
        }
        let mut gp = gcd_mod_p(poly_mod(&rsq_int, p), np, p);
        if gp.len() == 1 {
            return Some(UniPoly::one());
        }
        let s = mod_big(&lc, p);
        for c in gp.iter_mut() {
            *c = *c * s % p;
        }
        if lift.is_empty() || gp.len() < lift.len() {
            modulus = BigInt::from(p);
            lift = gp.iter().map(|&c| sym(BigInt::from(c), &modulus)).collect();
            prev = None;
        } else if gp.len() == lift.len() {
            let inv = inv_mod(mod_big(&modulus, p), p);
            let new_modulus = &modulus * BigInt::from(p);
            for (r, &s) in lift.iter_mut().zip(&gp) {
                let delta = (s + p - mod_big(r, p)) % p * inv % p;
                *r = sym(&*r + &modulus * BigInt::from(delta), &new_modulus);
            }
            modulus = new_modulus;
        } else {
            continue; // unlucky prime: too-high gcd degree
        }
        let candidate = int_primitive(&lift);
        if prev.as_deref() == Some(&candidate[..])
            && int_divides(&candidate, &rsq_int)
            && numerator_divisible(&candidate, &f_cols, &c1i, &c0i, &mut primes, 8)
        {
            return Some(UniPoly::from_int_coeffs(&candidate).monic());
        }
        prev = Some(candidate);
    }
}

fn count_d2(sys: &LikelihoodSystem, opts: &OracleOptions) -> Result<CriticalCountReport> {
    if sys.g.iter().any(|g| g.is_constant()) {
        // a nonzero constant score numerator admits no solutions at all
        return Ok(empty_report(&opts.tol, 0));
    }
    // an individual admissible shear can still merge two distinct fibers
    // onto one elimination value (and then silently drop them as divisor
    // roots), so demand two admissible shears that agree on the count
    let mut admissible: Vec<Elimination> = Vec::new();
    let mut chosen = None;
    for shear in shear_candidates(opts.seed, 8) {
        if let Some(e) = try_shear(sys, &shear)? {
            if let Some(prev) = admissible
                .iter()
                .position(|p| p.r_sat.degree() == e.r_sat.degree())
            {
                chosen = Some(admissible.swap_remove(prev));
                let _ = e;
                break;
            }
            admissible.push(e);
        }
    }
    let el = match (chosen, admissible.len()) {
        (Some(el), _) => el,
        (None, 1) => admissible.pop().unwrap(),
        (None, 0) => {
            return Err(Error::DegenerateSystem(
                "no admissible shear separates the fibers".into(),
            ))
        }
        (None, _) => {
            return Err(Error::DegenerateSystem(
                "admissible shears disagree on the critical count".into(),
            ))
        }
    };
    let r_sat = el.r_sat.clone();
    let filtered = el.filtered;
    if r_sat.degree() == 0 {
        return Ok(empty_report(&opts.tol, filtered));
    }

    // primitive integer coefficients: same roots, but interval arithmetic
    // against denominator-free coefficients reduces cheaply
    let r_int = UniPoly::from_int_coeffs(&r_sat.primitive_int_coeffs());
    // reduce the fiber certificate mod r_sat: identical values at every
    // elimination root, far smaller degree, and coprimality with r_sat
    // guarantees the reduced c1 stays away from zero on tight enclosures
    // one uniform scale keeps the fiber value -c0/c1 unchanged
    let (c1r, c0r) = {
        let (a, b) = clear_pair(&el.c1.rem(&r_sat), &el.c0.rem(&r_sat));
        (UniPoly::from_int_coeffs(&a), UniPoly::from_int_coeffs(&b))
    };

    let attempt = |tol: &Rat| -> Result<(Vec<CriticalPoint>, bool, u32)> {
        let roots = complex_roots_numeric(&r_int, tol, opts.max_bits)?;
        let mut points = Vec::with_capacity(roots.len());
        let mut precision = START_BITS;
        let mut certified = true;
        for root in &roots {
            precision = precision.max(root.precision_bits);
            // reality must be decided rigorously either way: the symmetric
            // Krawczyk box proves real, an imaginary part bounded away from
            // zero proves non-real; an undecided root fails certification
            // and the tolerance ladder retries tighter
            certified &= root.is_real || !root.enclosure.im.contains_zero();
            let prec = 2 * root.precision_bits;
            let c1_box = eval_poly_box(&c1r, &root.enclosure, prec);
            let c0_box = eval_poly_box(&c0r, &root.enclosure, prec);
            let zero = ComplexBox::point(Rat::zero(), Rat::zero());
            let y_box = zero.sub(&c0_box).div(&c1_box).map(|b| b.round_out(prec));
            // a failed division means the x-enclosure is too wide to pin
            // the fiber; keep the point but drop the certificate
            let (y_box, y_ok) = match y_box {
                Some(b) => (b, true),
                None => (ComplexBox::point(Rat::zero(), Rat::zero()), false),
            };
            certified &= y_ok;
            // undo the shear: θ_j = Σ_k S[j][k] y_k
            let x_box = root.enclosure.clone();
            let theta: Vec<ComplexBox> = el
                .shear
                .iter()
                .map(|row| {
                    let sx = scale_box(&x_box, row[0]);
                    let sy = scale_box(&y_box, row[1]);
                    sx.add(&sy)
                })
                .collect();
            let approx: Vec<(f64, f64)> = theta
                .iter()
                .map(|b| {
                    let (re, im) = b.midpoint();
                    (rat_to_f64(&re), rat_to_f64(&im))
                })
                .collect();
            points.push(CriticalPoint {
                theta,
                approx,
                is_real: root.is_real,
            });
        }
        Ok((points, certified, precision))
    };

    // precision ladder: wide coefficients in the reduced certificate can
    // demand tighter enclosures than the requested tolerance; square the
    // tolerance until certification succeeds or the bit budget runs out
    let mut tol = opts.tol.clone();
    let mut best = attempt(&tol)?;
    while !best.1 {
        let next = &tol * &tol;
        if next.denom().bits() > opts.max_bits as u64 {
            break;
        }
        tol = next;
        match attempt(&tol) {
            Ok(r) => {
                let keep_going = !r.1;
                best = r;
                if !keep_going {
                    break;
                }
            }
            Err(Error::PrecisionExhausted { .. }) => break,
            Err(e) => return Err(e),
        }
    }
    let (points, certified, precision) = best;
    Ok(CriticalCountReport {
        complex_count: r_sat.degree(),
        real_count: points.iter().filter(|p| p.is_real).count(),
        certified,
        filtered_extraneous: filtered,
        precision_bits: precision,
        residual_bound: tol,
        points,
    })
}

fn scale_box(b: &ComplexBox, s: i64) -> ComplexBox {
    let sb = ComplexBox::point(Rat::from(BigInt::from(s)), Rat::zero());
    b.mul(&sb)
}

fn rat_to_f64(x: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// ML degrees are upper semicontinuous in the weights: a concrete count may
/// only drop below the generic value, never exceed it.
pub fn semicontinuity_ok(generic: &BigInt, concrete: usize) -> bool {
    BigInt::from(concrete) <= *generic
}
