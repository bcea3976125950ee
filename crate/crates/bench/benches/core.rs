use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use zastava_core::charalg::graded_hilbert_function;
use zastava_core::demazure::{build_affine, demazure_character, SignConvention};
use zastava_core::fixtures;
use zastava_core::rootdata::positive_box_up_to;
use zastava_core::toda::solve_whittaker;
use zastava_core::{build_folding, compute_j, DynkinType, JFunction, RootVector, WeightVector};

fn jfun(c: &mut Criterion) {
    let g2 = build_folding(DynkinType::G2);
    c.bench_function("jfun G2 (1,1)", |b| b.iter(|| compute_j(&g2, black_box(&RootVector(vec![1, 1]))).unwrap()));
    c.bench_function("jfun C2 box 5", |b| {
        let c2 = build_folding(DynkinType::C(2));
        b.iter(|| {
            let mut j = JFunction::new(&c2);
            for alpha in positive_box_up_to(2, 5) {
                j.compute(&alpha).unwrap();
            }
        })
    });
}

fn hilbert(c: &mut Criterion) {
    let full = fixtures::c2_full();
    let mut g = c.benchmark_group("hilbert");
    g.sample_size(10);
    g.bench_function("c2 full to q^10", |b| b.iter(|| graded_hilbert_function(black_box(&full), 10).unwrap()));
    g.finish();
}

fn demazure(c: &mut Criterion) {
    let f = build_folding(DynkinType::G2);
    let a = build_affine(&f).unwrap();
    let lambda = WeightVector(vec![1, 1]);
    c.bench_function("demazure G2 (1,1)", |b| {
        b.iter(|| demazure_character(&a, &f, black_box(&lambda), SignConvention::Minus).unwrap())
    });
}

fn toda(c: &mut Criterion) {
    let op = fixtures::a1_toda();
    c.bench_function("toda A1 box 6", |b| b.iter(|| solve_whittaker(black_box(&op), 6).unwrap()));
}

criterion_group!(benches, jfun, hilbert, demazure, toda);
criterion_main!(benches);
