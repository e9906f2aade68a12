//! Benchmarks for the hot paths of each computation route: series
//! coefficients, mixed volumes, the full toric alternating sum, region
//! counting, bivariate resultants, and a small end-to-end oracle count.

use criterion::{criterion_group, criterion_main, Criterion};

use mldegree::arrangement::{bounded_regions, Arrangement, Hyperplane};
use mldegree::exactmath::resultant;
use mldegree::formulas::{generic_ml_degree, toric_ml_degree, DenseModelSpec, ToricModelSpec, Weights};
use mldegree::model::{random_dense_poly, seeded_rng};
use mldegree::oracle::{build_system, count_critical, OracleOptions};
use mldegree::polytope::{convex_hull, mixed_volume, LatticePolytope};
use mldegree::rational::rat_int;

fn unit_square() -> LatticePolytope {
    convex_hull(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]], 2).unwrap()
}

fn bench_generic_series(c: &mut Criterion) {
    let spec = DenseModelSpec::new(6, vec![4; 8]).unwrap();
    c.bench_function("generic_ml_degree d=6 b=4^8", |b| {
        b.iter(|| generic_ml_degree(std::hint::black_box(&spec)))
    });
}

fn bench_mixed_volume(c: &mut Criterion) {
    let p = convex_hull(&[vec![0, 0], vec![3, 0], vec![1, 2], vec![0, 2]], 2).unwrap();
    let q = convex_hull(&[vec![0, 0], vec![2, 1], vec![1, 3]], 2).unwrap();
    c.bench_function("mixed_volume 2 polygons", |b| {
        b.iter(|| mixed_volume(std::hint::black_box(&[p.clone(), q.clone()])).unwrap())
    });
}

fn bench_toric_sum(c: &mut Criterion) {
    let spec = ToricModelSpec::new(vec![unit_square(); 4], Weights::Generic).unwrap();
    c.bench_function("toric_ml_degree four unit squares", |b| {
        b.iter(|| toric_ml_degree(std::hint::black_box(&spec)).unwrap())
    });
}

fn bench_bounded_regions(c: &mut Criterion) {
    // six generic planes in R^3
    let data: [([i64; 3], i64); 6] = [
        ([1, 0, 0], 0),
        ([0, 1, 0], 0),
        ([0, 0, 1], 0),
        ([1, 1, 1], -1),
        ([1, 2, 3], -5),
        ([2, 5, 7], -13),
    ];
    let hps: Vec<Hyperplane> = data
        .iter()
        .map(|(nv, o)| Hyperplane {
            normal: nv.iter().map(|&x| rat_int(x)).collect(),
            offset: rat_int(*o),
        })
        .collect();
    let a = Arrangement::new(3, hps).unwrap();
    c.bench_function("bounded_regions 6 planes", |b| {
        b.iter(|| bounded_regions(std::hint::black_box(&a)).unwrap())
    });
}

fn bench_resultant(c: &mut Criterion) {
    let mut rng = seeded_rng(7);
    let p = random_dense_poly(2, 3, &mut rng).to_bivar();
    let q = random_dense_poly(2, 3, &mut rng).to_bivar();
    c.bench_function("resultant deg-3 bivariate pair", |b| {
        b.iter(|| resultant(std::hint::black_box(&p), std::hint::black_box(&q)).unwrap())
    });
}

fn bench_oracle_small(c: &mut Criterion) {
    let mut rng = seeded_rng(11);
    let factors = vec![random_dense_poly(2, 2, &mut rng), random_dense_poly(2, 1, &mut rng)];
    let sys = build_system(2, &factors, &[2, 3]).unwrap();
    let opts = OracleOptions::default();
    c.bench_function("oracle quadric+line count", |b| {
        b.iter(|| count_critical(std::hint::black_box(&sys), &opts).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = bench_generic_series, bench_mixed_volume, bench_toric_sum,
              bench_bounded_regions, bench_resultant, bench_oracle_small
}
criterion_main!(benches);
