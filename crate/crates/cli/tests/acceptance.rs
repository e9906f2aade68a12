//! End-to-end acceptance suite: eleven independent criteria covering the
//! series formula, the toric mixed-volume route, arrangement region counts,
//! the exact critical-point oracle, and the randomized property suites.
//! Prints exactly one PASS/FAIL line per criterion (run with
//! `--nocapture` to see them) and fails the test if any criterion fails
//! or exceeds its time budget.

use std::time::{Duration, Instant};

use assert_cmd::Command;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use mldegree::arrangement::{
    bounded_regions, bounded_regions_bruteforce, regions, Arrangement, Hyperplane,
};
use mldegree::exactmath::{real_root_count, MultiPoly, UniPoly};
use mldegree::formulas::{
    generic_ml_degree, generic_series, plane_curve_ml_degree, rectangle_ml_degree,
    toric_ml_degree, toric_ml_degree_2d_fastpath, DenseModelSpec, ToricModelSpec, Weights,
};
use mldegree::model::{
    random_dense_poly, random_lattice_polygon, random_weights, seeded_rng,
};
use mldegree::oracle::{build_system, count_critical, semicontinuity_ok, OracleOptions};
use mldegree::polytope::lattice::rank;
use mldegree::polytope::{convex_hull, minkowski_sum, mixed_volume, LatticePolytope};
use mldegree::rational::{rat, rat_int, Rat};
use mldegree::Error;

type CriterionResult = Result<String, String>;

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn fixture(name: &str) -> std::path::PathBuf {
    std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn poly2(terms: &[(i64, i64, i64)]) -> MultiPoly {
    MultiPoly::from_terms(2, terms.iter().map(|&(c, i, j)| (vec![i, j], rat_int(c))))
}

fn unit_square() -> LatticePolytope {
    convex_hull(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]], 2).expect("square")
}

fn oracle_count(
    factors: &[MultiPoly],
    weights: &[i64],
    seed: u64,
) -> Result<(usize, usize, bool), Error> {
    let sys = build_system(2, factors, weights)?;
    let report = count_critical(&sys, &OracleOptions { seed, ..OracleOptions::default() })?;
    Ok((report.complex_count, report.real_count, report.certified))
}

/// Criterion 1: the CLI emits the exact opening series coefficients.
fn c1_series_numbers() -> CriterionResult {
    let out = Command::cargo_bin("mldeg")
        .map_err(|e| e.to_string())?
        .args(["generic", "-d", "2", "-b", "2,2,2,2", "--series", "4"])
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("CLI exited with {:?}", out.status.code()));
    }
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    if !text.contains("series: 1, 6, 25, 88, 280") {
        return Err(format!("unexpected series output:\n{text}"));
    }
    // the same numbers straight from the library
    let spec = DenseModelSpec::new(2, vec![2, 2, 2, 2]).map_err(|e| e.to_string())?;
    let want: Vec<BigInt> = [1, 6, 25, 88, 280].iter().map(|&x| BigInt::from(x)).collect();
    if generic_series(&spec, 5) != want {
        return Err("library series disagrees".into());
    }
    Ok("1, 6, 25, 88, 280".into())
}

/// Criterion 2: rectangle closed form and the toric route both give 13.
fn c2_rectangle_thirteen() -> CriterionResult {
    let rect = rectangle_ml_degree(&[1, 1, 1, 1], &[1, 1, 1, 1]);
    if rect != BigInt::from(13) {
        return Err(format!("rectangle formula gave {rect}"));
    }
    let squares = vec![unit_square(); 4];
    let spec = ToricModelSpec::new(squares, Weights::Generic).map_err(|e| e.to_string())?;
    let toric = toric_ml_degree(&spec).map_err(|e| e.to_string())?.total;
    if toric != BigInt::from(13) {
        return Err(format!("toric route gave {toric}"));
    }
    Ok("rectangle formula 13, toric route 13".into())
}

/// Criterion 3: the three-polygon model totals 14 and `--explain`
/// reproduces the decomposition 1 + 3/2 + 1/2 + 15 − 1 − 4 + 1.
fn c3_three_polygons() -> CriterionResult {
    let polys = vec![
        convex_hull(&[vec![0, 0], vec![2, 0], vec![1, 1]], 2).map_err(|e| e.to_string())?,
        convex_hull(&[vec![0, 0], vec![2, 0], vec![1, 1], vec![0, 1]], 2)
            .map_err(|e| e.to_string())?,
        convex_hull(&[vec![0, 0], vec![1, 1], vec![1, 2]], 2).map_err(|e| e.to_string())?,
    ];
    let spec = ToricModelSpec::new(polys, Weights::Generic).map_err(|e| e.to_string())?;
    let b = toric_ml_degree(&spec).map_err(|e| e.to_string())?;
    if b.total != BigInt::from(14) {
        return Err(format!("total {}", b.total));
    }
    if b.summand_volumes != vec![rat(1, 1), rat(3, 2), rat(1, 2)] || b.minkowski_volume != rat(15, 1)
    {
        return Err("summand/Minkowski areas differ from 1, 3/2, 1/2, 15".into());
    }
    let signed: Vec<(usize, Rat)> = b.terms.iter().map(|t| (t.c, t.value.clone())).collect();
    let want = vec![(0, rat(18, 1)), (1, rat(1, 1)), (1, rat(4, 1)), (2, rat(1, 1))];
    if signed != want {
        return Err(format!("correction terms {signed:?}"));
    }
    // and the CLI --explain output carries the same decomposition
    let out = Command::cargo_bin("mldeg")
        .map_err(|e| e.to_string())?
        .arg("--explain")
        .arg("toric")
        .arg(fixture("example_three_polygons.json"))
        .output()
        .map_err(|e| e.to_string())?;
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    for needle in [
        "toric_ml_degree: 14",
        "summand_areas: 1, 3/2, 1/2",
        "minkowski_area: 15",
        "term: c=1 rays=[0] mixed_volume_sum=1",
        "term: c=1 rays=[1] mixed_volume_sum=4",
        "term: c=2 rays=[0, 1] mixed_volume_sum=1",
    ] {
        if !text.contains(needle) {
            return Err(format!("--explain output missing {needle:?}:\n{text}"));
        }
    }
    Ok("14 = 1 + 3/2 + 1/2 + 15 - 1 - 4 + 1".into())
}

/// Criterion 4: for polytopes pushed off the coordinate axes the toric
/// degree collapses to area(P) + Σ area(P_i); checked on 100 random models.
fn c4_translated_area_formula() -> CriterionResult {
    let mut rng = seeded_rng(0xACC4);
    for case in 0..100u32 {
        let n = rng.gen_range(1..=3usize);
        let mut ps: Vec<LatticePolytope> = (0..n)
            .map(|_| {
                let p = random_lattice_polygon(0, 3, &mut rng);
                let extra = [rng.gen_range(1..=3i64), rng.gen_range(1..=3i64)];
                p.translate(&extra)
            })
            .collect();
        // keep shifting deeper into the positive orthant until no edge
        // line of the Minkowski sum passes through the origin
        let mut shifted = 0;
        let expected = loop {
            let spec = ToricModelSpec::new(ps.clone(), Weights::Generic)
                .map_err(|e| e.to_string())?;
            match toric_ml_degree_2d_fastpath(&spec) {
                Ok(v) => break v,
                Err(Error::OriginOnEdgeLine(_)) if shifted < 12 => {
                    shifted += 1;
                    ps = ps.iter().map(|p| p.translate(&[1, 2])).collect();
                }
                Err(e) => return Err(format!("case {case}: {e}")),
            }
        };
        // the same number computed directly as an area sum
        let mut mink = ps[0].clone();
        for p in &ps[1..] {
            mink = minkowski_sum(&mink, p).map_err(|e| e.to_string())?;
        }
        let area_sum: Rat = mink.lattice_volume()
            + ps.iter().map(|p| p.lattice_volume()).sum::<Rat>();
        if Rat::from(expected.clone()) != area_sum {
            return Err(format!("case {case}: shortcut {expected} vs area sum {area_sum}"));
        }
        let spec = ToricModelSpec::new(ps, Weights::Generic).map_err(|e| e.to_string())?;
        let full = toric_ml_degree(&spec).map_err(|e| e.to_string())?.total;
        if full != expected {
            return Err(format!("case {case}: formula {full} vs area sum {expected}"));
        }
    }
    Ok("100 random translated models match the area sum".into())
}

/// Exact genericity test: all small normal subsets independent, no d+1
/// hyperplanes concurrent.
fn arrangement_is_generic(normals: &[Vec<i64>], offsets: &[i64], d: usize) -> bool {
    let n = normals.len();
    for size in 1..=d.min(n) {
        if !subsets(n, size).iter().all(|s| {
            let vs: Vec<Vec<i64>> = s.iter().map(|&i| normals[i].clone()).collect();
            rank(&vs, d) == size
        }) {
            return false;
        }
    }
    if n > d {
        if !subsets(n, d + 1).iter().all(|s| {
            let vs: Vec<Vec<i64>> = s
                .iter()
                .map(|&i| {
                    let mut v = normals[i].clone();
                    v.push(offsets[i]);
                    v
                })
                .collect();
            rank(&vs, d + 1) == d + 1
        }) {
            return false;
        }
    }
    true
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, size, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, size, 0, &mut cur, &mut out);
    out
}

/// Criterion 5: Möbius counting, sign-vector enumeration, the binomial
/// closed form, and the dense series all agree on 100 generic arrangements.
fn c5_arrangement_agreement() -> CriterionResult {
    let mut rng = seeded_rng(0xACC5);
    for case in 0..100u32 {
        let d = rng.gen_range(1..=3usize);
        let n = rng.gen_range(1..=6usize);
        let (normals, offsets) = loop {
            let normals: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..d).map(|_| rng.gen_range(-5..=5i64)).collect())
                .collect();
            let offsets: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5i64)).collect();
            if arrangement_is_generic(&normals, &offsets, d) {
                break (normals, offsets);
            }
        };
        let hps: Vec<Hyperplane> = normals
            .iter()
            .zip(&offsets)
            .map(|(nv, &o)| Hyperplane {
                normal: nv.iter().map(|&x| rat_int(x)).collect(),
                offset: rat_int(o),
            })
            .collect();
        let a = Arrangement::new(d, hps).map_err(|e| e.to_string())?;
        let via_moebius = bounded_regions(&a).map_err(|e| e.to_string())?;
        let via_brute = bounded_regions_bruteforce(&a).map_err(|e| e.to_string())?;
        let closed_form = binom(n - 1, d);
        let spec = DenseModelSpec::new(d, vec![1; n]).map_err(|e| e.to_string())?;
        let via_series = generic_ml_degree(&spec);
        if via_moebius != via_brute || via_moebius != closed_form || via_moebius != via_series {
            return Err(format!(
                "case {case} (d={d}, n={n}): moebius {via_moebius}, brute {via_brute}, \
                 binomial {closed_form}, series {via_series}"
            ));
        }
    }
    Ok("100 random generic arrangements, four routes agree".into())
}

/// Criterion 6: oracle counts equal the dense-model formula on 50 random
/// generic bivariate models, all certified.
fn c6_oracle_vs_formula() -> CriterionResult {
    let mut rng = seeded_rng(0xACC6);
    for case in 0..50u32 {
        let n = rng.gen_range(1..=3usize);
        let degrees: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=3u64)).collect();
        let factors: Vec<MultiPoly> = degrees
            .iter()
            .map(|&b| random_dense_poly(2, b, &mut rng))
            .collect();
        let weights = random_weights(n, &mut rng);
        let spec = DenseModelSpec::new(2, degrees.clone()).map_err(|e| e.to_string())?;
        let expected = generic_ml_degree(&spec);
        let (count, _, certified) = oracle_count(&factors, &weights, 0)
            .map_err(|e| format!("case {case} degrees {degrees:?}: {e}"))?;
        if BigInt::from(count) != expected {
            return Err(format!(
                "case {case} degrees {degrees:?}: oracle {count}, formula {expected}"
            ));
        }
        if !certified {
            return Err(format!("case {case} degrees {degrees:?}: uncertified"));
        }
    }
    Ok("50 random models, oracle equals formula, all certified".into())
}

/// Criterion 7: the line-line-circle-ellipse quartet drops 9, 7, 5, 3
/// across the four weight classes.
fn c7_quartet() -> CriterionResult {
    let factors = vec![
        poly2(&[(1, 1, 0)]),                                   // x
        poly2(&[(1, 0, 1)]),                                   // y
        poly2(&[(1, 2, 0), (-2, 1, 0), (1, 0, 2), (-2, 0, 1)]), // (x-1)^2+(y-1)^2-2
        poly2(&[(1, 2, 0), (2, 1, 0), (2, 0, 2), (-8, 0, 1)]),  // (x+1)^2+2(y-2)^2-9
    ];
    let classes: [(&[i64; 4], usize); 4] = [
        (&[3, 5, 7, 11], 9),
        (&[1, 1, 1, -3], 7),
        (&[2, 2, -1, -1], 5),
        (&[1, -1, 2, -2], 3),
    ];
    let mut got = Vec::new();
    for (weights, want) in classes {
        let (count, _, _) = oracle_count(&factors, weights, 0).map_err(|e| e.to_string())?;
        if count != want {
            return Err(format!("weights {weights:?}: counted {count}, want {want}"));
        }
        got.push(count.to_string());
    }
    Ok(format!("counts {}", got.join(" / ")))
}

/// Criterion 8: the 2x2 independence model has a single critical point at
/// the closed-form maximum-likelihood estimate.
fn c8_independence() -> CriterionResult {
    // p11 = xy, p12 = y - xy, p21 = x - xy, p22 = 1 - x - y + xy
    let factors = vec![
        poly2(&[(1, 1, 1)]),
        poly2(&[(1, 0, 1), (-1, 1, 1)]),
        poly2(&[(1, 1, 0), (-1, 1, 1)]),
        poly2(&[(1, 0, 0), (-1, 1, 0), (-1, 0, 1), (1, 1, 1)]),
    ];
    let weights = [5i64, 3, 2, 7]; // u = (u11, u12, u21, u22), total 17
    let sys = build_system(2, &factors, &weights).map_err(|e| e.to_string())?;
    let report = count_critical(&sys, &OracleOptions::default()).map_err(|e| e.to_string())?;
    if report.complex_count != 1 || !report.certified {
        return Err(format!(
            "count {}, certified {}",
            report.complex_count, report.certified
        ));
    }
    // closed form: x-hat = (u11+u21)/u.., y-hat = (u11+u12)/u..
    let p = &report.points[0];
    let (want_x, want_y) = (rat(7, 17), rat(8, 17));
    if !p.theta[0].re.contains(&want_x) || !p.theta[1].re.contains(&want_y) {
        return Err("closed-form estimate lies outside the certified enclosure".into());
    }
    Ok("count 1, root encloses (7/17, 8/17)".into())
}

/// Criterion 9: two nested ellipses give five critical points, all real,
/// and the closed form 2n^2-2n+1 holds for up to six nested conics.
fn c9_nested_ellipses() -> CriterionResult {
    let factors = vec![
        poly2(&[(1, 2, 0), (1, 0, 2), (-4, 0, 0)]),  // x^2 + y^2 - 4
        poly2(&[(1, 2, 0), (81, 0, 2), (-9, 0, 0)]), // x^2 + 81 y^2 - 9
    ];
    let (complex, real, certified) =
        oracle_count(&factors, &[1, 1], 0).map_err(|e| e.to_string())?;
    if complex != 5 || real != 5 || !certified {
        return Err(format!("complex {complex}, real {real}, certified {certified}"));
    }
    for n in 1..=6usize {
        let got = plane_curve_ml_degree(&vec![2; n]);
        let want = BigInt::from(2 * n * n - 2 * n + 1);
        if got != want {
            return Err(format!("n={n}: symbolic degree {got}, closed form {want}"));
        }
    }
    Ok("5 complex = 5 real; 2n^2-2n+1 verified for n <= 6".into())
}

/// Criterion 10: twenty deliberately special models (repeated factors,
/// reducible factors, curves through the origin) never exceed the generic
/// formula value.
fn c10_semicontinuity() -> CriterionResult {
    let mut rng = seeded_rng(0xACCA);
    let mut checked = 0usize;
    for case in 0..20u32 {
        let (factors, degrees, weights): (Vec<MultiPoly>, Vec<u64>, Vec<i64>) = match case % 4 {
            0 => {
                // a repeated factor: (f, f, g) against generic (a, a, b)
                let a = rng.gen_range(1..=2u64);
                let b = rng.gen_range(1..=2u64);
                let f = random_dense_poly(2, a, &mut rng);
                let g = random_dense_poly(2, b, &mut rng);
                (vec![f.clone(), f, g], vec![a, a, b], vec![1, 2, 3])
            }
            1 => {
                // both curves pass through the origin
                let degs: Vec<u64> = (0..2).map(|_| rng.gen_range(1..=2u64)).collect();
                let factors: Vec<MultiPoly> = degs
                    .iter()
                    .map(|&b| {
                        let f = random_dense_poly(2, b, &mut rng);
                        let c = f.eval(&[Rat::zero(), Rat::zero()]);
                        f.sub(&MultiPoly::constant(2, c))
                    })
                    .collect();
                (factors, degs, vec![2, 3])
            }
            2 => {
                // a reducible conic (product of two lines) next to a generic factor
                let l1 = random_dense_poly(2, 1, &mut rng);
                let l2 = random_dense_poly(2, 1, &mut rng);
                let b = rng.gen_range(1..=2u64);
                let g = random_dense_poly(2, b, &mut rng);
                (vec![l1.mul(&l2), g], vec![2, b], vec![1, 2])
            }
            _ => {
                // repeated line plus an origin-passing conic
                let l = random_dense_poly(2, 1, &mut rng);
                let q = random_dense_poly(2, 2, &mut rng);
                let q0 = q.sub(&MultiPoly::constant(2, q.eval(&[Rat::zero(), Rat::zero()])));
                (vec![l.clone(), l, q0], vec![1, 1, 2], vec![2, 1, 1])
            }
        };
        let spec = DenseModelSpec::new(2, degrees.clone()).map_err(|e| e.to_string())?;
        let generic = generic_ml_degree(&spec);
        let (count, _, _) = oracle_count(&factors, &weights, 0)
            .map_err(|e| format!("case {case} degrees {degrees:?}: {e}"))?;
        if !semicontinuity_ok(&generic, count) {
            return Err(format!(
                "case {case} degrees {degrees:?}: special count {count} exceeds generic {generic}"
            ));
        }
        checked += 1;
    }
    Ok(format!("{checked} special models all within the generic bound"))
}

/// Criterion 11: the five randomized property suites, 100 cases each.
fn c11_property_suites() -> CriterionResult {
    let mut rng = seeded_rng(0xACCB);

    // mixed-volume symmetry and Minkowski multilinearity
    for case in 0..100u32 {
        let p = random_lattice_polygon(0, 3, &mut rng);
        let q = random_lattice_polygon(0, 3, &mut rng);
        let r = random_lattice_polygon(0, 3, &mut rng);
        let pq = mixed_volume(&[p.clone(), q.clone()]).map_err(|e| e.to_string())?;
        let qp = mixed_volume(&[q.clone(), p.clone()]).map_err(|e| e.to_string())?;
        if pq != qp {
            return Err(format!("symmetry case {case}: V(P,Q)={pq} vs V(Q,P)={qp}"));
        }
        let sum = minkowski_sum(&p, &q).map_err(|e| e.to_string())?;
        let lhs = mixed_volume(&[sum, r.clone()]).map_err(|e| e.to_string())?;
        let rhs = mixed_volume(&[p.clone(), r.clone()]).map_err(|e| e.to_string())?
            + mixed_volume(&[q, r]).map_err(|e| e.to_string())?;
        if lhs != rhs {
            return Err(format!("multilinearity case {case}: {lhs} vs {rhs}"));
        }
    }

    // diagonal normalization V(P, P) = 2 area(P)
    for case in 0..100u32 {
        let p = random_lattice_polygon(0, 4, &mut rng);
        let vv = mixed_volume(&[p.clone(), p.clone()]).map_err(|e| e.to_string())?;
        let area2 = p.lattice_volume() * rat_int(2);
        if vv != area2 {
            return Err(format!("diagonal case {case}: V(P,P)={vv} vs 2 area={area2}"));
        }
    }

    // deletion-restriction recursion for region counts of line arrangements
    for case in 0..100u32 {
        let a = loop {
            let n = rng.gen_range(2..=6usize);
            let hps: Vec<Hyperplane> = (0..n)
                .map(|_| Hyperplane {
                    normal: vec![
                        rat_int(rng.gen_range(-3..=3i64)),
                        rat_int(rng.gen_range(-3..=3i64)),
                    ],
                    offset: rat_int(rng.gen_range(-3..=3i64)),
                })
                .collect();
            if let Ok(a) = Arrangement::new(2, hps) {
                break a;
            }
        };
        let total = regions(&a).map_err(|e| e.to_string())?;
        let n = a.n();
        let deleted = Arrangement::new(2, a.hyperplanes[..n - 1].to_vec())
            .map_err(|e| e.to_string())?;
        let del_regions = regions(&deleted).map_err(|e| e.to_string())?;
        // restriction: distinct intersection points of the other lines on H,
        // as a one-dimensional arrangement
        let h = &a.hyperplanes[n - 1];
        let (nx, ny, o) = (&h.normal[0], &h.normal[1], &h.offset);
        let p0: (Rat, Rat) = if !nx.is_zero() {
            (-(o / nx), Rat::zero())
        } else {
            (Rat::zero(), -(o / ny))
        };
        let dir = (-ny.clone(), nx.clone());
        let mut cuts: Vec<Rat> = Vec::new();
        for g in &a.hyperplanes[..n - 1] {
            let slope = &g.normal[0] * &dir.0 + &g.normal[1] * &dir.1;
            if slope.is_zero() {
                continue; // parallel to H
            }
            let at0 = &g.normal[0] * &p0.0 + &g.normal[1] * &p0.1 + &g.offset;
            let t = -(at0 / slope);
            if !cuts.contains(&t) {
                cuts.push(t);
            }
        }
        let restricted_regions = if cuts.is_empty() {
            BigInt::one()
        } else {
            let pts: Vec<Hyperplane> = cuts
                .into_iter()
                .map(|t| Hyperplane { normal: vec![rat_int(1)], offset: -t })
                .collect();
            let restricted = Arrangement::new(1, pts).map_err(|e| e.to_string())?;
            regions(&restricted).map_err(|e| e.to_string())?
        };
        if total != &del_regions + &restricted_regions {
            return Err(format!(
                "deletion-restriction case {case}: r(A)={total}, \
                 r(A')={del_regions}, r(A'')={restricted_regions}"
            ));
        }
    }

    // conjugation pairing: nonreal roots come in pairs, so degree and real
    // count have equal parity
    for case in 0..100u32 {
        let deg = rng.gen_range(2..=8usize);
        let coeffs: Vec<i64> = (0..=deg)
            .map(|k| if k == deg { rng.gen_range(1..=9) } else { rng.gen_range(-9..=9) })
            .collect();
        let p = UniPoly::from_i64(&coeffs);
        let sf = p.squarefree_part().map_err(|e| e.to_string())?;
        let real = real_root_count(&sf, None).map_err(|e| e.to_string())?;
        if (sf.degree() - real) % 2 != 0 {
            return Err(format!(
                "parity case {case}: degree {} with {real} real roots",
                sf.degree()
            ));
        }
    }

    // shear invariance: the certified count does not depend on the random
    // coordinate shear the oracle picks
    for case in 0..100u32 {
        let n = rng.gen_range(1..=2usize);
        let degrees: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=2u64)).collect();
        let factors: Vec<MultiPoly> = degrees
            .iter()
            .map(|&b| random_dense_poly(2, b, &mut rng))
            .collect();
        let weights = random_weights(n, &mut rng);
        let (a, _, _) = oracle_count(&factors, &weights, 1)
            .map_err(|e| format!("shear case {case}: {e}"))?;
        let (b, _, _) = oracle_count(&factors, &weights, 99991)
            .map_err(|e| format!("shear case {case}: {e}"))?;
        if a != b {
            return Err(format!("shear case {case}: seed 1 counted {a}, seed 99991 counted {b}"));
        }
    }

    Ok("5 suites x 100 cases".into())
}

#[test]
fn acceptance() {
    let criteria: Vec<(&str, u64, fn() -> CriterionResult)> = vec![
        ("criterion 1 series numbers", 1, c1_series_numbers),
        ("criterion 2 rectangle model 13", 1, c2_rectangle_thirteen),
        ("criterion 3 three-polygon decomposition", 1, c3_three_polygons),
        ("criterion 4 translated area formula x100", 30, c4_translated_area_formula),
        ("criterion 5 arrangement agreement x100", 60, c5_arrangement_agreement),
        ("criterion 6 oracle vs formula x50", 600, c6_oracle_vs_formula),
        ("criterion 7 quartet 9/7/5/3", 300, c7_quartet),
        ("criterion 8 independence model", 10, c8_independence),
        ("criterion 9 nested ellipses", 60, c9_nested_ellipses),
        ("criterion 10 semicontinuity x20", 600, c10_semicontinuity),
        ("criterion 11 property suites x500", 300, c11_property_suites),
    ];
    let mut failures = Vec::new();
    for (name, budget_secs, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let budget = Duration::from_secs(budget_secs);
        match outcome {
            Ok(detail) if elapsed <= budget => {
                println!("PASS {name}: {detail} ({elapsed:.1?})");
            }
            Ok(detail) => {
                println!("FAIL {name}: over budget {budget_secs}s ({elapsed:.1?}; {detail})");
                failures.push(name);
            }
            Err(msg) => {
                println!("FAIL {name}: {msg} ({elapsed:.1?})");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
