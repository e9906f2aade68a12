//! The committed golden-example suite behind `--all-golden`: every worked
//! example the tool advertises, checked against its exact expected value,
//! one PASS/FAIL line per case.

use std::path::PathBuf;

use num_bigint::BigInt;

use mldegree::arrangement::{bounded_regions, regions};
use mldegree::formulas::{
    generic_ml_degree, generic_series, plane_curve_ml_degree, rectangle_ml_degree,
    toric_ml_degree, toric_ml_degree_2d_fastpath, viro_bound, DenseModelSpec,
};
use mldegree::model::{arrangement_from_json, ArrangementJson, ModelJson};
use mldegree::oracle::{build_system, count_critical, OracleOptions};
use mldegree::rational::rat;

use crate::{oracle_inputs, Failure};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn load<T: serde::de::DeserializeOwned>(name: &str) -> Result<T, String> {
    let path = fixture(name);
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| e.to_string())
}

fn expect<T: PartialEq + std::fmt::Display>(label: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{label}: got {got}, want {want}"))
    }
}

fn oracle_counts(name: &str, weights: Option<Vec<i64>>, seed: u64) -> Result<(usize, usize, bool), String> {
    let mut model: ModelJson = load(name)?;
    if let Some(w) = weights {
        model.weights = mldegree::model::WeightsJson::Concrete(w);
    }
    let inputs = oracle_inputs(&model, seed).map_err(|e| e.to_string())?;
    let sys = build_system(model.d, &inputs.factors, &inputs.weights).map_err(|e| e.to_string())?;
    let report = count_critical(&sys, &OracleOptions { seed, ..OracleOptions::default() })
        .map_err(|e| e.to_string())?;
    Ok((report.complex_count, report.real_count, report.certified))
}

fn arrangement_counts(name: &str) -> Result<(BigInt, BigInt), String> {
    let aj: ArrangementJson = load(name)?;
    let a = arrangement_from_json(&aj).map_err(|e| e.to_string())?;
    Ok((
        bounded_regions(&a).map_err(|e| e.to_string())?,
        regions(&a).map_err(|e| e.to_string())?,
    ))
}

pub(crate) fn run_all(seed: u64) -> Result<(), Failure> {
    let cases: Vec<(&str, Box<dyn Fn() -> Result<(), String>>)> = vec![
        (
            "series d=2 b=(2,2,2,2) -> 1,6,25,88,280",
            Box::new(|| {
                let spec = DenseModelSpec::new(2, vec![2, 2, 2, 2]).map_err(|e| e.to_string())?;
                let want: Vec<BigInt> = [1, 6, 25, 88, 280].iter().map(|&x| BigInt::from(x)).collect();
                expect("series", format!("{:?}", generic_series(&spec, 5)), format!("{want:?}"))
            }),
        ),
        (
            "generic d=3 b=1^5 -> 4",
            Box::new(|| {
                let spec = DenseModelSpec::new(3, vec![1; 5]).map_err(|e| e.to_string())?;
                expect("degree", generic_ml_degree(&spec), BigInt::from(4))
            }),
        ),
        (
            "rectangle formula s=t=1^4 -> 13",
            Box::new(|| expect("degree", rectangle_ml_degree(&[1; 4], &[1; 4]), BigInt::from(13))),
        ),
        (
            "four unit squares (toric) -> 13",
            Box::new(|| {
                let m: ModelJson = load("four_unit_squares.json")?;
                let spec = m.to_toric_spec().map_err(|e| e.to_string())?;
                let b = toric_ml_degree(&spec).map_err(|e| e.to_string())?;
                expect("degree", b.total, BigInt::from(13))
            }),
        ),
        (
            "three polygons (toric) -> 14 with decomposition",
            Box::new(|| {
                let m: ModelJson = load("example_three_polygons.json")?;
                let spec = m.to_toric_spec().map_err(|e| e.to_string())?;
                let b = toric_ml_degree(&spec).map_err(|e| e.to_string())?;
                expect("degree", b.total.clone(), BigInt::from(14))?;
                expect(
                    "summand areas",
                    format!("{:?}", b.summand_volumes),
                    format!("{:?}", vec![rat(1, 1), rat(3, 2), rat(1, 2)]),
                )?;
                expect("minkowski area", b.minkowski_volume.clone(), rat(15, 1))
            }),
        ),
        (
            "translated square fastpath -> 2",
            Box::new(|| {
                let m: ModelJson = load("translated_square.json")?;
                let spec = m.to_toric_spec().map_err(|e| e.to_string())?;
                let fast = toric_ml_degree_2d_fastpath(&spec).map_err(|e| e.to_string())?;
                expect("degree", fast, BigInt::from(2))
            }),
        ),
        (
            "four generic lines -> bounded 3, regions 11",
            Box::new(|| {
                let (b, r) = arrangement_counts("four_generic_lines.json")?;
                expect("bounded", b, BigInt::from(3))?;
                expect("regions", r, BigInt::from(11))
            }),
        ),
        (
            "concurrent triple -> bounded 0",
            Box::new(|| {
                let (b, _) = arrangement_counts("concurrent_lines.json")?;
                expect("bounded", b, BigInt::from(0))
            }),
        ),
        (
            "six generic planes in R^3 -> bounded C(5,3)=10",
            Box::new(|| {
                let (b, _) = arrangement_counts("six_generic_planes.json")?;
                expect("bounded", b, BigInt::from(10))
            }),
        ),
        (
            "viro b=(2,2) -> bound 5, degree 5",
            Box::new(|| {
                expect("bound", viro_bound(&[2, 2]), BigInt::from(5))?;
                expect("degree", plane_curve_ml_degree(&[2, 2]), BigInt::from(5))
            }),
        ),
        (
            "viro b=(3,3) -> bound 10, degree 16",
            Box::new(|| {
                expect("bound", viro_bound(&[3, 3]), BigInt::from(10))?;
                expect("degree", plane_curve_ml_degree(&[3, 3]), BigInt::from(16))
            }),
        ),
        (
            "viro b=(1,1,1) -> bound 1, degree 1",
            Box::new(|| {
                expect("bound", viro_bound(&[1, 1, 1]), BigInt::from(1))?;
                expect("degree", plane_curve_ml_degree(&[1, 1, 1]), BigInt::from(1))
            }),
        ),
        (
            "quartet u=(3,5,7,11) -> 9",
            Box::new(move || {
                let (c, _, cert) = oracle_counts("quartet.json", None, seed)?;
                expect("count", c, 9)?;
                expect("certified", cert, true)
            }),
        ),
        (
            "quartet u=(1,1,1,-3) -> 7",
            Box::new(move || {
                let (c, _, _) = oracle_counts("quartet.json", Some(vec![1, 1, 1, -3]), seed)?;
                expect("count", c, 7)
            }),
        ),
        (
            "quartet u=(2,2,-1,-1) -> 5",
            Box::new(move || {
                let (c, _, _) = oracle_counts("quartet.json", Some(vec![2, 2, -1, -1]), seed)?;
                expect("count", c, 5)
            }),
        ),
        (
            "quartet u=(1,-1,2,-2) -> 3",
            Box::new(move || {
                let (c, _, _) = oracle_counts("quartet.json", Some(vec![1, -1, 2, -2]), seed)?;
                expect("count", c, 3)
            }),
        ),
        (
            "independence model -> 1 with closed-form root",
            Box::new(move || {
                let model: ModelJson = load("independence.json")?;
                let inputs = oracle_inputs(&model, seed).map_err(|e| e.to_string())?;
                let sys = build_system(2, &inputs.factors, &inputs.weights)
                    .map_err(|e| e.to_string())?;
                let report = count_critical(&sys, &OracleOptions { seed, ..OracleOptions::default() })
                    .map_err(|e| e.to_string())?;
                expect("count", report.complex_count, 1)?;
                expect("certified", report.certified, true)?;
                // weights (5,3,2,7): u-hat = ((u1+u3)/17, (u1+u2)/17)
                let p = &report.points[0];
                if !p.theta[0].re.contains(&rat(7, 17)) || !p.theta[1].re.contains(&rat(8, 17)) {
                    return Err("closed-form maximizer not inside the enclosure".into());
                }
                Ok(())
            }),
        ),
        (
            "nested ellipses -> 5 complex, 5 real",
            Box::new(move || {
                let (c, r, cert) = oracle_counts("nested_ellipses.json", None, seed)?;
                expect("complex", c, 5)?;
                expect("real", r, 5)?;
                expect("certified", cert, true)
            }),
        ),
        (
            "random generic quadrics -> 25, matches formula",
            Box::new(move || {
                let (c, _, cert) = oracle_counts("dense_quadrics.json", None, seed)?;
                expect("count", c, 25)?;
                expect("certified", cert, true)
            }),
        ),
    ];

    let mut failures = 0usize;
    for (name, case) in &cases {
        match case() {
            Ok(()) => println!("PASS {name}"),
            Err(msg) => {
                failures += 1;
                println!("FAIL {name}: {msg}");
            }
        }
    }
    println!("golden: {} passed, {} failed", cases.len() - failures, failures);
    if failures > 0 {
        Err(Failure::Disagree(format!("{failures} golden case(s) failed")))
    } else {
        Ok(())
    }
}
