//! Random instance generators for the oracle-equivalence property suites.
//! Used by the test suites and the CLI `selftest` command.

use rand::Rng;

use crate::flownet::Network;
use crate::poset::GradedPoset;
use crate::scalar::{from_usize, Scalar};

/// A random graded poset with 1..=`max_elements` elements and weights in
/// 1..=`max_weight`. Levels are chosen first; every element above rank 0
/// receives at least one lower cover from the previous level, so the
/// intended ranks survive rank propagation.
pub fn random_graded_poset<W: Scalar, R: Rng>(
    rng: &mut R,
    max_elements: usize,
    max_weight: usize,
) -> GradedPoset<W> {
    let total = rng.random_range(1..=max_elements.max(1));
    let mut level_sizes = Vec::new();
    let mut left = total;
    while left > 0 {
        let take = rng.random_range(1..=left);
        level_sizes.push(take);
        left -= take;
    }

    let mut covers = Vec::new();
    let mut first_id = vec![0usize];
    for size in &level_sizes {
        first_id.push(first_id.last().unwrap() + size);
    }
    let density = rng.random_range(0.1..0.9);
    for level in 1..level_sizes.len() {
        for offset in 0..level_sizes[level] {
            let id = first_id[level] + offset;
            let below = level_sizes[level - 1];
            let anchor = first_id[level - 1] + rng.random_range(0..below);
            covers.push((anchor, id));
            for parent in first_id[level - 1]..first_id[level] {
                if parent != anchor && rng.random_bool(density) {
                    covers.push((parent, id));
                }
            }
        }
    }
    let labels = (0..total).map(|i| i.to_string()).collect();
    let weights = (0..total)
        .map(|_| from_usize(rng.random_range(1..=max_weight.max(1))))
        .collect();
    GradedPoset::new(labels, covers, weights).expect("generated poset is graded")
}

/// A random vertex-capacitated DAG with 1..=`max_vertices` vertices;
/// vertex ids are a topological order.
pub fn random_dag_network<W: Scalar, R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_capacity: usize,
) -> Network<W> {
    let n = rng.random_range(1..=max_vertices.max(1));
    let density = rng.random_range(0.05..0.6);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(density) {
                edges.push((i, j));
            }
        }
    }
    let capacities = (0..n)
        .map(|_| from_usize(rng.random_range(1..=max_capacity.max(1))))
        .collect();
    Network::new(capacities, edges).expect("forward edges cannot form a cycle")
}

/// A random weighted bipartite instance: `(s_weights, t_weights, edges)`.
pub fn random_bipartite<W: Scalar, R: Rng>(
    rng: &mut R,
    max_side: usize,
    max_weight: usize,
) -> (Vec<W>, Vec<W>, Vec<(usize, usize)>) {
    let s = rng.random_range(1..=max_side.max(1));
    let t = rng.random_range(1..=max_side.max(1));
    let density = rng.random_range(0.15..0.95);
    let mut edges = Vec::new();
    for i in 0..s {
        for j in 0..t {
            if rng.random_bool(density) {
                edges.push((i, j));
            }
        }
    }
    let s_weights = (0..s)
        .map(|_| from_usize(rng.random_range(1..=max_weight.max(1))))
        .collect();
    let t_weights = (0..t)
        .map(|_| from_usize(rng.random_range(1..=max_weight.max(1))))
        .collect();
    (s_weights, t_weights, edges)
}
