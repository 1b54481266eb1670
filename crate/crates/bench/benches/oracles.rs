use std::hint::black_box;

use binmat_bench::{family, rank8_sixteen, subsets};
use binmat_core::{are_isomorphic, connectivity_class, has_minor, ElementSet, FamilySpec, SearchLimits};
use criterion::{criterion_group, criterion_main, Criterion};

fn rank_queries(c: &mut Criterion) {
    let m = rank8_sixteen();
    let masks = subsets(m.len(), 1024, 0x9e37_79b9_7f4a_7c15);
    c.bench_function("rank_1024_subsets_rank8_n16", |b| {
        b.iter(|| masks.iter().map(|&s| m.rank_mask(black_box(s))).sum::<usize>())
    });
}

fn isomorphism(c: &mut Criterion) {
    let a = family(FamilySpec::BiwheelPlus(6));
    let b = a.dual().dual();
    c.bench_function("iso_biwheel_plus_6", |bch| bch.iter(|| are_isomorphic(black_box(&a), black_box(&b)).is_some()));
}

fn minors(c: &mut Criterion) {
    let m = family(FamilySpec::BiwheelPlus(5));
    let n = family(FamilySpec::BiwheelPlus(4));
    c.bench_function("has_minor_biwheel_plus_5_over_4", |b| {
        b.iter(|| has_minor(&m, &n, ElementSet::EMPTY, SearchLimits::default()).unwrap().is_some())
    });
}

fn connectivity(c: &mut Criterion) {
    let mut group = c.benchmark_group("connectivity_class");
    for n in [4, 6, 8] {
        let m = family(FamilySpec::MobiusDelta(n));
        group.bench_function(format!("mobius_delta_{n}"), |b| b.iter(|| connectivity_class(black_box(&m))));
    }
    group.finish();
}

criterion_group!(benches, rank_queries, isomorphism, minors, connectivity);
criterion_main!(benches);
