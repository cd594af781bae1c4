use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use springer_core::rootsys::Family;
use springer_core::symfun::{kostka_foulkes, springer_graded_char, Partition};
use springer_core::weyl::{
    eigenspace, regular_config, regular_element, InductionContext, Variant, DEFAULT_BOUND,
};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn kostka(c: &mut Criterion) {
    let lambda = p(&[4, 3, 1]);
    let mu = p(&[2, 2, 2, 1, 1]);
    c.bench_function("kostka_foulkes (4,3,1),(2,2,2,1,1)", |b| {
        b.iter(|| kostka_foulkes(black_box(&lambda), black_box(&mu)))
    });
    c.bench_function("springer_graded_char (1^6)", |b| {
        b.iter(|| springer_graded_char(black_box(&p(&[1; 6]))).unwrap())
    });
}

fn cosets(c: &mut Criterion) {
    let cfg = regular_config(&p(&[2, 2, 2]), 3).unwrap();
    let ctx = InductionContext::new(&cfg, DEFAULT_BOUND).unwrap();
    let classes = ctx.group().classes().to_vec();
    c.bench_function("coset_count S6 (2,2,2) e=3, all classes", |b| {
        b.iter(|| {
            for info in &classes {
                for j in 0..3 {
                    black_box(ctx.coset_count(&info.representative, j));
                }
            }
        })
    });
}

fn eigenspaces(c: &mut Criterion) {
    let a = regular_element(Family::D, 6, 3, Variant::A).unwrap();
    c.bench_function("eigenspace D6 e=3", |b| {
        b.iter(|| eigenspace(black_box(&a), 3, 1))
    });
}

criterion_group!(benches, kostka, cosets, eigenspaces);
criterion_main!(benches);
