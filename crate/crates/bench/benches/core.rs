use criterion::{black_box, criterion_group, criterion_main, Criterion};
use npb_bench::{instance, sparse_matrix, terms};
use npb_core::algebra::VarietyTag;
use npb_core::cohomology::{build_complex, cohomology_dims};
use npb_core::exactlin::{rank, PrimeField, Rationals};
use npb_core::freealg::FreeAlgebra;
use npb_core::lescheck::{verify_les, SesTag};

fn linear_algebra(c: &mut Criterion) {
    let f = PrimeField::new(101).expect("prime");
    let m = sparse_matrix(&f, 300, 300, 0.05, 1);
    c.bench_function("rank 300x300 F101", |b| b.iter(|| rank(black_box(&m))));
    let q = sparse_matrix(&Rationals, 80, 80, 0.1, 2);
    c.bench_function("rank 80x80 Q", |b| b.iter(|| rank(black_box(&q))));
}

fn cohomology(c: &mut Criterion) {
    let f = PrimeField::new(2).expect("prime");
    let r = instance(&f, VarietyTag::NPlr, 3, 2, 3);
    c.bench_function("NPlr complex dim 3+2 through degree 4", |b| {
        b.iter(|| cohomology_dims(&build_complex(VarietyTag::NPlr, black_box(&r), 4).expect("builds"), 3))
    });
    let r = instance(&Rationals, VarietyTag::NPl, 2, 2, 4);
    c.bench_function("LES (a1) dim 2+2 through degree 4", |b| {
        b.iter(|| verify_les(SesTag::parse("A1").expect("tag"), black_box(&r), 4))
    });
}

fn rewriting(c: &mut Criterion) {
    let ts = terms(2, 6, 50, 5);
    c.bench_function("normalize 50 degree-6 terms in free NPlr", |b| {
        b.iter(|| {
            let alg = FreeAlgebra::new(&Rationals, VarietyTag::NPlr, vec!["x".into(), "y".into()]).expect("free");
            for t in &ts {
                black_box(alg.normalize(t).expect("normalizes"));
            }
        })
    });
}

criterion_group!(benches, linear_algebra, cohomology, rewriting);
criterion_main!(benches);
