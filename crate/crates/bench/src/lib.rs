//! Fixed workloads shared by the benchmarks in `benches/`.

use alphacrit_core::generate::{random_graph, rng};
use alphacrit_core::Graph;

/// `count` graphs `G(n, p)` from a fixed seed.
pub fn random_graphs(seed: u64, count: usize, n: usize, p: f64) -> Vec<Graph> {
    let mut r = rng(seed);
    (0..count).map(|_| random_graph(&mut r, n, p)).collect()
}
