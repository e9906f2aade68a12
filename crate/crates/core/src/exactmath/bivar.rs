//! Bivariate elimination: Sylvester resultants and the order-1
//! subresultant by evaluation–interpolation, and a pseudo-remainder gcd.
//!
//! A bivariate polynomial is a vector of `x`-coefficient polynomials indexed
//! by the `y`-degree (lowest first), i.e. an element of `Q[x][y]`.
//!
//! Determinants of matrices with polynomial entries are computed by
//! specializing `x` at enough integer points, taking exact rational scalar
//! determinants, and interpolating: far cheaper than fraction-free
//! elimination over `Q[x]` at the degrees the oracle produces.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::unipoly::UniPoly;
use crate::rational::{rat_int, Rat};
use crate::{Error, Result};

pub type BiPoly = Vec<UniPoly>;

pub fn bi_normalize(mut p: BiPoly) -> BiPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

pub fn bi_is_zero(p: &BiPoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

/// Degree in `y`; zero polynomial reports 0.
pub fn bi_deg(p: &BiPoly) -> usize {
    p.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn bi_leading(p: &BiPoly) -> &UniPoly {
    &p[bi_deg(p)]
}

/// Exact determinant of a scalar rational matrix. Row denominators are
/// cleared up front so Bareiss fraction-free elimination can run over
/// integers, avoiding per-entry rational reductions.
fn det_rat(m: Vec<Vec<Rat>>) -> Rat {
    use num_integer::Integer;
    let n = m.len();
    if n == 0 {
        return rat_int(1);
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let mut l = BigInt::one();
            for e in row {
                l = l.lcm(e.denom());
            }
            scale *= &l;
            row.iter().map(|e| e.numer() * (&l / e.denom())).collect()
        })
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Rat::zero();
        };
        if p != k {
            a.swap(k, p);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = &(&(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j])) / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut det = a[n - 1][n - 1].clone();
    if negate {
        det = -det;
    }
    Rat::new(det, scale)
}

/// Interpolates the unique polynomial of degree < points.len() through the
/// sample values, by Newton divided differences.
fn interpolate(xs: &[Rat], ys: &[Rat]) -> UniPoly {
    let n = xs.len();
    // divided-difference coefficients
    let mut dd: Vec<Rat> = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            dd[i] = num / den;
        }
    }
    // Horner assembly of the Newton form
    let mut acc = UniPoly::constant(dd[n - 1].clone());
    for i in (0..n - 1).rev() {
        acc = acc.mul(&UniPoly::linear_root(xs[i].clone()));
        acc = acc.add(&UniPoly::constant(dd[i].clone()));
    }
    acc
}

/// Maximum `x`-degree over all coefficients.
fn max_x_degree(p: &BiPoly) -> usize {
    p.iter().filter(|c| !c.is_zero()).map(|c| c.degree()).max().unwrap_or(0)
}

/// Determinant of a matrix of polynomial entries, by interpolation at
/// `bound + 1` integer points.
fn poly_matrix_det(mat: &[Vec<UniPoly>], bound: usize) -> UniPoly {
    let n = bound + 1;
    let xs: Vec<Rat> = (0..n as i64).map(rat_int).collect();
    let ys: Vec<Rat> = xs
        .iter()
        .map(|x| {
            let scalar: Vec<Vec<Rat>> = mat
                .iter()
                .map(|row| row.iter().map(|e| e.eval(x)).collect())
                .collect();
            det_rat(scalar)
        })
        .collect();
    interpolate(&xs, &ys)
}

/// Sylvester matrix of `p` and `q` with respect to `y`.
fn sylvester(p: &BiPoly, q: &BiPoly) -> Vec<Vec<UniPoly>> {
    let m = bi_deg(p);
    let n = bi_deg(q);
    let size = m + n;
    let mut mat = vec![vec![UniPoly::zero(); size]; size];
    // rows of p-coefficients, highest y-degree in the leftmost column
    for (i, row) in mat.iter_mut().enumerate().take(n) {
        for k in 0..=m {
            row[i + k] = p[m - k].clone();
        }
    }
    for (i, row) in mat.iter_mut().skip(n).enumerate() {
        for k in 0..=n {
            row[i + k] = q[n - k].clone();
        }
    }
    mat
}

/// Resultant of `p` and `q` with respect to `y`, as a polynomial in `x`.
///
/// Vanishes at `x0` iff `p(x0, .)` and `q(x0, .)` share a root or both
/// leading `y`-coefficients vanish there.
pub fn resultant(p: &BiPoly, q: &BiPoly) -> Result<UniPoly> {
    if bi_is_zero(p) || bi_is_zero(q) {
        return Ok(UniPoly::zero());
    }
    let m = bi_deg(p);
    let n = bi_deg(q);
    if m == 0 && n == 0 {
        return Err(Error::DegenerateElimination);
    }
    if m == 0 {
        return Ok(p[0].pow(n as u32));
    }
    if n == 0 {
        return Ok(q[0].pow(m as u32));
    }
    // n rows of p-coefficients, m rows of q-coefficients
    let bound = n * max_x_degree(p) + m * max_x_degree(q);
    Ok(poly_matrix_det(&sylvester(p, q), bound))
}

/// The order-1 subresultant of `p` and `q` in `y`, returned as the pair
/// `(c1, c0)` with `S_1(x, y) = c1(x) * y + c0(x)`.
///
/// At a root `x0` of the resultant where `c1(x0) != 0`, the gcd of the two
/// specialized polynomials is linear with root `y = -c0(x0) / c1(x0)`.
pub fn subresultant_linear(p: &BiPoly, q: &BiPoly) -> Result<(UniPoly, UniPoly)> {
    let m = bi_deg(p);
    let n = bi_deg(q);
    if m < 1 || n < 1 || m + n < 3 {
        return Err(Error::DegenerateElimination);
    }
    let size = m + n - 2;
    // rows: y^(n-2-i) * p for i = 0..n-1, then y^(m-2-i) * q for i = 0..m-1;
    // columns: y-degrees m+n-2 down to 2, then one column for the tail.
    let coeff = |poly: &BiPoly, deg: usize, d: i64| -> UniPoly {
        if d < 0 || d as usize > deg {
            UniPoly::zero()
        } else {
            poly[d as usize].clone()
        }
    };
    let build = |tail_deg: i64| -> Vec<Vec<UniPoly>> {
        let mut mat = vec![vec![UniPoly::zero(); size]; size];
        for i in 0..n - 1 {
            // row is y^(n-2-i) * p: coefficient at y^d is p[d - (n-2-i)]
            let shift = (n - 2 - i) as i64;
            for (j, cell) in mat[i].iter_mut().enumerate() {
                let d = if j + 1 < size {
                    (m + n - 2 - j) as i64 // leading columns
                } else {
                    tail_deg
                };
                *cell = coeff(p, m, d - shift);
            }
        }
        for i in 0..m - 1 {
            let shift = (m - 2 - i) as i64;
            for (j, cell) in mat[n - 1 + i].iter_mut().enumerate() {
                let d = if j + 1 < size {
                    (m + n - 2 - j) as i64
                } else {
                    tail_deg
                };
                *cell = coeff(q, n, d - shift);
            }
        }
        mat
    };
    let bound = (n - 1) * max_x_degree(p) + (m - 1) * max_x_degree(q);
    let c1 = poly_matrix_det(&build(1), bound);
    let c0 = poly_matrix_det(&build(0), bound);
    Ok((c1, c0))
}

/// Pseudo-remainder in `y`: `lc_y(b)^(δ+1) * a mod b`.
fn bi_pseudo_rem(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let db = bi_deg(b);
    let lead = bi_leading(b).clone();
    let mut r = bi_normalize(a.clone());
    while !bi_is_zero(&r) && bi_deg(&r) >= db && !(bi_deg(&r) == 0 && db == 0) {
        let k = bi_deg(&r);
        let c = r[k].clone();
        for x in r.iter_mut() {
            *x = x.mul(&lead);
        }
        for (j, bc) in b.iter().enumerate().take(db + 1) {
            r[k - db + j] = r[k - db + j].sub(&bc.mul(&c));
        }
        r = bi_normalize(r);
        if bi_deg(&r) < db || bi_is_zero(&r) {
            break;
        }
        if k == bi_deg(&r) {
            break; // no progress possible (defensive; cancellation guarantees progress)
        }
    }
    r
}

/// Content with respect to `x`: monic gcd of all coefficients.
pub(crate) fn bi_content(p: &BiPoly) -> UniPoly {
    let mut g = UniPoly::zero();
    for c in p {
        if !c.is_zero() {
            g = if g.is_zero() { c.monic() } else { g.gcd(c) };
        }
    }
    g
}

fn bi_div_content(p: &BiPoly, content: &UniPoly) -> BiPoly {
    p.iter()
        .map(|c| {
            if c.is_zero() {
                UniPoly::zero()
            } else {
                c.exact_div(content)
            }
        })
        .collect()
}

/// Primitive-PRS gcd of two bivariate polynomials in `Q[x][y]`.
pub fn bivar_gcd(p: &BiPoly, q: &BiPoly) -> BiPoly {
    let p = bi_normalize(p.clone());
    let q = bi_normalize(q.clone());
    if bi_is_zero(&p) {
        return q;
    }
    if bi_is_zero(&q) {
        return p;
    }
    let cont_p = bi_content(&p);
    let cont_q = bi_content(&q);
    let cont_gcd = cont_p.gcd(&cont_q);
    let mut a = bi_div_content(&p, &cont_p);
    let mut b = bi_div_content(&q, &cont_q);
    if bi_deg(&a) < bi_deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if bi_deg(&b) == 0 {
            // primitive and y-constant: y-part of the gcd is trivial
            return vec![cont_gcd];
        }
        let r = bi_pseudo_rem(&a, &b);
        if bi_is_zero(&r) {
            let prim = bi_div_content(&b, &bi_content(&b));
            return prim.iter().map(|c| c.mul(&cont_gcd)).collect();
        }
        a = b;
        let rc = bi_content(&r);
        b = bi_div_content(&r, &rc);
    }
}

/// Exact division in `Q[x][y]`; panics when the division is not exact.
pub fn bi_exact_div(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let mut rem = bi_normalize(a.clone());
    let b = bi_normalize(b.clone());
    assert!(!bi_is_zero(&b), "division by zero polynomial");
    let db = bi_deg(&b);
    let lead = bi_leading(&b).clone();
    if bi_is_zero(&rem) {
        return vec![UniPoly::zero()];
    }
    let da = bi_deg(&rem);
    assert!(da >= db, "inexact bivariate division");
    let mut quot = vec![UniPoly::zero(); da - db + 1];
    for k in (db..=da).rev() {
        let top = if k < rem.len() { rem[k].clone() } else { UniPoly::zero() };
        if top.is_zero() {
            continue;
        }
        let c = top.exact_div(&lead);
        for (j, bc) in b.iter().enumerate().take(db + 1) {
            rem[k - db + j] = rem[k - db + j].sub(&bc.mul(&c));
        }
        quot[k - db] = c;
    }
    assert!(bi_is_zero(&rem), "inexact bivariate division");
    quot
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::multipoly::MultiPoly;
    use crate::rational::rat_int;

    fn x() -> MultiPoly {
        MultiPoly::var(0, 2)
    }
    fn y() -> MultiPoly {
        MultiPoly::var(1, 2)
    }

    #[test]
    fn linear_resultant() {
        // p = y - x, q = y - 1 -> x - 1 up to sign
        let p = y().sub(&x()).to_bivar();
        let q = y().sub(&MultiPoly::constant(2, rat_int(1))).to_bivar();
        let r = resultant(&p, &q).unwrap();
        let expect = UniPoly::from_i64(&[-1, 1]);
        assert!(r == expect || r == expect.neg());
    }

    #[test]
    fn quadratic_resultant() {
        // p = y^2 - x, q = y - 2 -> 4 - x up to sign
        let p = y().pow(2).sub(&x()).to_bivar();
        let q = y().sub(&MultiPoly::constant(2, rat_int(2))).to_bivar();
        let r = resultant(&p, &q).unwrap();
        let expect = UniPoly::from_i64(&[4, -1]);
        assert!(r == expect || r == expect.neg());
    }

    #[test]
    fn degenerate_elimination() {
        let p = x().to_bivar();
        let q = x().add(&MultiPoly::constant(2, rat_int(1))).to_bivar();
        assert!(matches!(resultant(&p, &q), Err(Error::DegenerateElimination)));
    }

    #[test]
    fn resultant_detects_common_root() {
        // p = (y - x)(y + 1), q = (y - x)(y - 3): resultant must vanish identically
        let ymx = y().sub(&x());
        let p = ymx.mul(&y().add(&MultiPoly::constant(2, rat_int(1)))).to_bivar();
        let q = ymx.mul(&y().sub(&MultiPoly::constant(2, rat_int(3)))).to_bivar();
        assert!(resultant(&p, &q).unwrap().is_zero());
    }

    #[test]
    fn gcd_of_bivariate_polys() {
        let ymx = y().sub(&x());
        let p = ymx.mul(&y().add(&MultiPoly::constant(2, rat_int(1))));
        let q = ymx.mul(&x().add(&MultiPoly::constant(2, rat_int(2))));
        let g = bivar_gcd(&p.to_bivar(), &q.to_bivar());
        // gcd is y - x up to a scalar
        assert_eq!(bi_deg(&g), 1);
        let quot = bi_exact_div(&p.to_bivar(), &g);
        assert_eq!(bi_deg(&quot), 1);
    }

    #[test]
    fn subresultant_gives_fiber_root() {
        // p = (y - x)(y - 2x), q = (y - x)(y - 3x^2) share root y = x over each x;
        // instead take coprime-fiber example:
        // p = y^2 - x, q = y^2 - 2y + x: common roots where y = x (from q - p: -2y + 2x)
        let p = y().pow(2).sub(&x());
        let q = y()
            .pow(2)
            .sub(&y().scale(&rat_int(2)))
            .add(&x());
        let (c1, c0) = subresultant_linear(&p.to_bivar(), &q.to_bivar()).unwrap();
        // S_1 = c1*y + c0 must be proportional to y - x
        assert!(!c1.is_zero());
        let ratio = c0.neg().exact_div(&c1);
        assert_eq!(ratio, UniPoly::from_i64(&[0, 1]));
    }
}
