use criterion::{black_box, criterion_group, criterion_main, Criterion};

use atlas_bench::{nodal_cycle, table_configs};
use atlas_core::atlas::{eckardt_search_in, orbit_count, weyl_group};
use atlas_core::{generate_group, orbits, realize, simple_roots, LatticeVector};

fn group_closure(c: &mut Criterion) {
    let simple: Vec<LatticeVector> = simple_roots().iter().map(|r| *r.vector()).collect();
    let mut g = c.benchmark_group("closure");
    g.sample_size(10);
    g.bench_function("w_e6", |b| {
        b.iter(|| generate_group(black_box(&simple)).unwrap().order)
    });
    g.finish();
}

fn orbit_partitions(c: &mut Criterion) {
    let delta = nodal_cycle();
    c.bench_function("orbits/a1", |b| {
        b.iter(|| orbits(black_box(&[delta])).unwrap().len())
    });
    let e6 = realize(&"E6".parse().unwrap()).unwrap();
    c.bench_function("orbits/e6", |b| {
        b.iter(|| orbits(black_box(&e6)).unwrap().len())
    });
}

fn table(c: &mut Criterion) {
    let configs = table_configs();
    c.bench_function("table1", |b| {
        b.iter(|| {
            configs
                .iter()
                .map(|cfg| orbit_count(cfg).unwrap())
                .sum::<usize>()
        })
    });
    let bad = "A2+A3".parse().unwrap();
    c.bench_function("realize/not_embeddable", |b| {
        b.iter(|| realize(black_box(&bad)).is_err())
    });
}

fn eckardt(c: &mut Criterion) {
    let group = weyl_group();
    let mut g = c.benchmark_group("eckardt");
    g.sample_size(10);
    g.bench_function("scan", |b| {
        b.iter(|| eckardt_search_in(black_box(group)).len())
    });
    g.finish();
}

criterion_group!(benches, group_closure, orbit_partitions, table, eckardt);
criterion_main!(benches);
