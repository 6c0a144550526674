//! Criterion benches: parallel vs sequential Vietoris–Rips edge scans, and
//! the enumerator families against each other on a complete graph.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use clique_forge::filtration::{build_vr_edges, build_vr_edges_sequential, PointCloud};
use clique_forge::sink::CountingSink;
use clique_forge::{complete_graph, Algorithm};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_cloud(n: usize, dim: usize, seed: u64) -> PointCloud {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points = (0..n)
        .map(|_| (0..dim).map(|_| rng.random::<f64>()).collect())
        .collect();
    PointCloud::new(points).unwrap()
}

fn bench_vr_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("vr_edge_scan");
    for &n in &[500usize, 2000] {
        let cloud = random_cloud(n, 3, 7);
        group.bench_with_input(BenchmarkId::new("parallel", n), &cloud, |b, cloud| {
            b.iter(|| build_vr_edges(black_box(cloud), 0.1).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("sequential", n), &cloud, |b, cloud| {
            b.iter(|| build_vr_edges_sequential(black_box(cloud), 0.1).unwrap())
        });
    }
    group.finish();
}

fn bench_enumerators(c: &mut Criterion) {
    let mut group = c.benchmark_group("complete_graph_dmax4");
    group.sample_size(10);
    let base = complete_graph(40, 11);
    for algo in [
        Algorithm::Boundary,
        Algorithm::BoundaryFixed,
        Algorithm::Multilayer,
        Algorithm::MultilayerFixed,
    ] {
        let stream = base.clone().reorder(algo.default_order());
        group.bench_function(algo.name(), |b| {
            b.iter(|| {
                let mut sink = CountingSink::default();
                algo.run(black_box(&stream), 4, &mut sink).unwrap()
            })
        });
    }
    group.finish();
}

fn bench_triangle_baselines(c: &mut Criterion) {
    let mut group = c.benchmark_group("triangles");
    let base = complete_graph(120, 11);
    for algo in [Algorithm::Triangles, Algorithm::EdgeIter, Algorithm::K3, Algorithm::Forward] {
        let stream = base.clone().reorder(algo.default_order());
        group.bench_function(algo.name(), |b| {
            b.iter(|| {
                let mut sink = CountingSink::default();
                algo.run(black_box(&stream), 2, &mut sink).unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_vr_scan, bench_enumerators, bench_triangle_baselines);
criterion_main!(benches);
