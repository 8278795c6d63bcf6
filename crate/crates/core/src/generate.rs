//! Random task graphs for size sweeps, property tests and benchmarks.
//!
//! Sizes are drawn uniformly from the inclusive ranges of a
//! [`GeneratorSpec`], workload first, then data size, task by task.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::model::{GeneratorSpec, TaskGraph, TaskId, TaskSpec};

fn draw(rng: &mut impl Rng, [lo, hi]: [f64; 2]) -> f64 {
    if lo < hi {
        rng.random_range(lo..=hi)
    } else {
        lo
    }
}

fn random_tasks(n: usize, spec: &GeneratorSpec, rng: &mut impl Rng) -> Vec<TaskSpec> {
    (1..=n as TaskId)
        .map(|id| {
            let w = draw(rng, spec.workload);
            let d = draw(rng, spec.data_size);
            TaskSpec::new(id, w, d)
        })
        .collect()
}

/// Chain `1 -> ... -> n` with i.i.d. task sizes.
pub fn random_chain(n: usize, spec: &GeneratorSpec, rng: &mut impl Rng) -> TaskGraph {
    TaskGraph::chain(random_tasks(n.max(1), spec, rng)).expect("generated chain is valid")
}

/// DAG where each pair `i < j` is joined with probability `edge_prob`.
pub fn random_dag(n: usize, edge_prob: f64, spec: &GeneratorSpec, rng: &mut impl Rng) -> TaskGraph {
    let n = n.max(1);
    let tasks = random_tasks(n, spec, rng);
    let mut edges = Vec::new();
    for i in 1..=n as TaskId {
        for j in i + 1..=n as TaskId {
            if rng.random_bool(edge_prob) {
                edges.push((i, j));
            }
        }
    }
    TaskGraph::new(tasks, edges).expect("forward edges are acyclic")
}

/// The chain used for length `n` under `seed`: same inputs, same graph.
pub fn seeded_chain(n: usize, spec: &GeneratorSpec, seed: u64) -> TaskGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(n as u64);
    random_chain(n, spec, &mut rng)
}
