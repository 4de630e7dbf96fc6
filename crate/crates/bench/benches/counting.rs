use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use std::hint::black_box;

use skyscraper_core::combinatorics::StirlingTable;
use skyscraper_core::oracle::brute_counts_partitioned;
use skyscraper_core::skyscraper::{max_pairs, sequence, skyscraper_table};

fn stirling_rows(c: &mut Criterion) {
    c.bench_function("stirling_row_200_cold", |b| {
        b.iter_batched(
            StirlingTable::new,
            |table| black_box(table.row(200)),
            BatchSize::SmallInput,
        )
    });
}

fn tables(c: &mut Criterion) {
    c.bench_function("skyscraper_table_30", |b| {
        b.iter(|| black_box(skyscraper_table(black_box(30))))
    });
    c.bench_function("max_pairs_50", |b| {
        b.iter(|| black_box(max_pairs(black_box(50))))
    });
    c.bench_function("sequence_30", |b| {
        b.iter(|| black_box(sequence(black_box(30))))
    });
}

fn oracle_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_counts_8");
    group.sample_size(10);
    for parts in [1usize, 4, 8] {
        group.bench_function(format!("parts_{parts}"), |b| {
            b.iter(|| black_box(brute_counts_partitioned(black_box(8), parts)))
        });
    }
    group.finish();
}

criterion_group!(benches, stirling_rows, tables, oracle_sweep);
criterion_main!(benches);
