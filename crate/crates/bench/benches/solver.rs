use alphacrit_bench::random_graphs;
use alphacrit_core::critical::enumerate_maximal_alpha_minus_one;
use alphacrit_core::ops::{one_join, JoinQuadruple};
use alphacrit_core::{alpha_number, canonical_form, is_alpha_critical_graph, Graph, VertexSet};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn stability(c: &mut Criterion) {
    let mut group = c.benchmark_group("alpha");
    for &(n, p) in &[(30, 0.2), (50, 0.1), (60, 0.3), (100, 0.5)] {
        let gs = random_graphs(1, 10, n, p);
        group.bench_with_input(BenchmarkId::new(format!("gnp-{p}"), n), &gs, |b, gs| {
            b.iter(|| gs.iter().map(|g| alpha_number(black_box(g))).sum::<usize>())
        });
    }
    let petersen = Graph::petersen();
    group.bench_function("petersen", |b| {
        b.iter(|| alpha_number(black_box(&petersen)))
    });
    group.finish();
}

fn criticality(c: &mut Criterion) {
    let c5 = Graph::cycle(5);
    let half = VertexSet::from_vertices(5, [2, 3]).unwrap();
    let q = JoinQuadruple::new(c5.clone(), half, c5, half).unwrap();
    let j = one_join(&q).unwrap();
    c.bench_function("critical/c5-join", |b| {
        b.iter(|| is_alpha_critical_graph(black_box(&j)))
    });
    let c13 = Graph::cycle(13);
    c.bench_function("maximal/c13", |b| {
        b.iter(|| enumerate_maximal_alpha_minus_one(black_box(&c13)).unwrap())
    });
}

fn canon(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    for &n in &[8, 12, 20] {
        let gs = random_graphs(2, 20, n, 0.4);
        group.bench_with_input(BenchmarkId::from_parameter(n), &gs, |b, gs| {
            b.iter(|| {
                gs.iter()
                    .map(|g| canonical_form(black_box(g)).len())
                    .sum::<usize>()
            })
        });
    }
    let pet = Graph::petersen();
    group.bench_function("petersen", |b| b.iter(|| canonical_form(black_box(&pet))));
    group.finish();
}

criterion_group!(benches, stability, criticality, canon);
criterion_main!(benches);
