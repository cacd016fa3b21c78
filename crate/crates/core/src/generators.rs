//! Random and deterministic instance generators.

use std::collections::HashSet;

use itertools::Itertools;
use rand::seq::index::sample;
use rand::Rng;

use crate::error::{input, Result};
use crate::hypergraph::Hypergraph;
use crate::seed::{tags, Seed};

/// Random r-graph: each of the `C(n, r)` possible edges independently with
/// probability `p`.
pub fn gen_random_uniform(r: usize, n: usize, p: f64, seed: u64) -> Result<Hypergraph> {
    if !(0.0..=1.0).contains(&p) {
        return input(format!("edge probability must lie in [0, 1], got {p}"));
    }
    let mut rng = Seed(seed).child(tags::GENERATOR).rng();
    let edges: Vec<Vec<usize>> = (0..n).combinations(r).filter(|_| rng.random::<f64>() < p).collect();
    Hypergraph::from_edges(r, n, edges)
}

pub fn gen_random_3graph(n: usize, p: f64, seed: u64) -> Result<Hypergraph> {
    gen_random_uniform(3, n, p, seed)
}

/// Output of [`gen_random_linear_3graph`].
#[derive(Debug, Clone, PartialEq)]
pub struct LinearPacking {
    pub graph: Hypergraph,
    /// True when the rejection budget ran out before reaching the target.
    pub shortfall: bool,
}

/// Greedy random packing of triples that never reuses a pair. Stops at
/// `target_m` edges or after `50 * target_m` rejected draws.
pub fn gen_random_linear_3graph(n: usize, target_m: usize, seed: u64) -> Result<LinearPacking> {
    let bound = n * n.saturating_sub(1) / 6;
    if target_m > bound {
        return input(format!("target {target_m} exceeds the packing bound n(n-1)/6 = {bound}"));
    }
    let mut rng = Seed(seed).child(tags::GENERATOR).rng();
    let mut used: HashSet<(usize, usize)> = HashSet::new();
    let mut edges: Vec<[usize; 3]> = Vec::with_capacity(target_m);
    let budget = 50 * target_m;
    let mut rejections = 0;
    while edges.len() < target_m && rejections < budget {
        let mut t = [0usize; 3];
        for (slot, v) in t.iter_mut().zip(sample(&mut rng, n, 3)) {
            *slot = v;
        }
        t.sort_unstable();
        let pairs = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])];
        if pairs.iter().any(|p| used.contains(p)) {
            rejections += 1;
            continue;
        }
        used.extend(pairs);
        edges.push(t);
    }
    let shortfall = edges.len() < target_m;
    Ok(LinearPacking { graph: Hypergraph::from_edges(3, n, edges)?, shortfall })
}

/// Complete r-graph on `n` vertices.
pub fn gen_complete(r: usize, n: usize) -> Result<Hypergraph> {
    if n < r {
        return input(format!("complete {r}-graph needs n >= {r}, got n = {n}"));
    }
    Hypergraph::from_edges(r, n, (0..n).combinations(r))
}

/// Edwards' lower bound on the surplus of an m-edge graph,
/// `(sqrt(8m + 1) - 1) / 8`.
pub fn edwards_bound(m: u64) -> f64 {
    ((8.0 * m as f64 + 1.0).sqrt() - 1.0) / 8.0
}
