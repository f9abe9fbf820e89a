use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use shpl_bench::scrambled_word;
use shpl_core::{mixed_insertion, mread, p_mix, rsk_insertion, sk_insertion};
use std::hint::black_box;

fn insertion(c: &mut Criterion) {
    let mut group = c.benchmark_group("insertion");
    for len in [10, 40, 160] {
        let w = scrambled_word(len, 8);
        group.bench_with_input(BenchmarkId::new("mixed", len), &w, |b, w| {
            b.iter(|| mixed_insertion(black_box(w)))
        });
        group.bench_with_input(BenchmarkId::new("sk", len), &w, |b, w| {
            b.iter(|| sk_insertion(black_box(w)))
        });
        group.bench_with_input(BenchmarkId::new("rsk", len), &w, |b, w| {
            b.iter(|| rsk_insertion(black_box(w)))
        });
        let p = p_mix(&w);
        group.bench_with_input(BenchmarkId::new("mread", len), &p, |b, p| {
            b.iter(|| mread(black_box(p)))
        });
    }
    group.finish();
}

criterion_group!(benches, insertion);
criterion_main!(benches);
