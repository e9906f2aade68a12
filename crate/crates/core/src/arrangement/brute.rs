//! Sign-vector brute force for bounded regions, with exact
//! Fourier–Motzkin feasibility as the linear-programming backend.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::Arrangement;
use crate::rational::Rat;
use crate::{Error, Result};

pub const MAX_N_BRUTE: usize = 10;
pub const MAX_D_BRUTE: usize = 3;

/// `Σ coeffs·x + c0 > 0` (strict) or `≥ 0`.
#[derive(Debug, Clone)]
struct Constraint {
    coeffs: Vec<Rat>,
    c0: Rat,
    strict: bool,
}

/// Exact Fourier–Motzkin feasibility of a conjunction of linear
/// inequalities in `d` variables.
fn feasible(mut cons: Vec<Constraint>, d: usize) -> bool {
    for var in (0..d).rev() {
        let mut lowers = Vec::new(); // coefficient > 0
        let mut uppers = Vec::new(); // coefficient < 0
        let mut rest = Vec::new();
        for c in cons {
            if c.coeffs[var].is_positive() {
                lowers.push(c);
            } else if c.coeffs[var].is_negative() {
                uppers.push(c);
            } else {
                rest.push(c);
            }
        }
        for lo in &lowers {
            for up in &uppers {
                // cancel the variable with positive multipliers
                let a = lo.coeffs[var].clone();
                let b = -up.coeffs[var].clone();
                let coeffs: Vec<Rat> = (0..var)
                    .map(|j| &b * &lo.coeffs[j] + &a * &up.coeffs[j])
                    .collect();
                rest.push(Constraint {
                    coeffs,
                    c0: &b * &lo.c0 + &a * &up.c0,
                    strict: lo.strict || up.strict,
                });
            }
        }
        for c in &mut rest {
            c.coeffs.truncate(var);
        }
        cons = rest;
    }
    cons.iter().all(|c| {
        if c.strict {
            c.c0.is_positive()
        } else {
            !c.c0.is_negative()
        }
    })
}

fn cell_constraints(a: &Arrangement, signs: u32) -> Vec<Constraint> {
    (0..a.n())
        .map(|i| {
            let h = &a.hyperplanes[i];
            let flip = signs >> i & 1 == 1;
            let (coeffs, c0) = if flip {
                (h.normal.iter().map(|x| -x.clone()).collect(), -h.offset.clone())
            } else {
                (h.normal.clone(), h.offset.clone())
            };
            Constraint {
                coeffs,
                c0,
                strict: true,
            }
        })
        .collect()
}

/// The open cell is bounded iff its recession cone `{r : σ_i⟨a_i,r⟩ ≥ 0}`
/// contains no nonzero ray; tested by fixing each coordinate to ±1.
fn cell_is_bounded(a: &Arrangement, signs: u32) -> bool {
    let cone: Vec<Constraint> = (0..a.n())
        .map(|i| {
            let h = &a.hyperplanes[i];
            let flip = signs >> i & 1 == 1;
            let coeffs: Vec<Rat> = if flip {
                h.normal.iter().map(|x| -x.clone()).collect()
            } else {
                h.normal.clone()
            };
            Constraint {
                coeffs,
                c0: Rat::zero(),
                strict: false,
            }
        })
        .collect();
    for k in 0..a.d {
        for s in [1i64, -1] {
            let mut sys = cone.clone();
            let mut e = vec![Rat::zero(); a.d];
            e[k] = Rat::from(BigInt::from(1));
            sys.push(Constraint {
                coeffs: e.clone(),
                c0: Rat::from(BigInt::from(-s)),
                strict: false,
            });
            sys.push(Constraint {
                coeffs: e.iter().map(|x| -x.clone()).collect(),
                c0: Rat::from(BigInt::from(s)),
                strict: false,
            });
            if feasible(sys, a.d) {
                return false;
            }
        }
    }
    true
}

/// Counts bounded open cells by enumerating all full sign vectors.
pub fn bounded_regions_bruteforce(a: &Arrangement) -> Result<BigInt> {
    if a.n() > MAX_N_BRUTE || a.d > MAX_D_BRUTE {
        return Err(Error::TooLarge {
            max_n: MAX_N_BRUTE,
            max_d: MAX_D_BRUTE,
        });
    }
    let mut count = 0u64;
    for signs in 0u32..(1 << a.n()) {
        if feasible(cell_constraints(a, signs), a.d) && cell_is_bounded(a, signs) {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}
