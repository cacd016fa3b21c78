//! k-way first-improvement local search on hypergraph cuts.

use rand::Rng;

use crate::error::{input, Result};
use crate::hypergraph::{Hypergraph, KCut};
use crate::seed::Seed;

/// Per-edge part counts for incremental cut evaluation.
pub(crate) struct CutState<'a> {
    h: &'a Hypergraph,
    incidence: Vec<Vec<usize>>,
    k: usize,
    assignment: Vec<usize>,
    counts: Vec<u32>,
    occupied: Vec<usize>,
    value: u64,
}

impl<'a> CutState<'a> {
    pub(crate) fn new(h: &'a Hypergraph, assignment: Vec<usize>, k: usize) -> Self {
        let edges = h.edges();
        let mut counts = vec![0u32; edges.len() * k];
        let mut occupied = vec![0usize; edges.len()];
        let mut value = 0;
        for (e, edge) in edges.iter().enumerate() {
            for &v in edge.vertices() {
                let c = &mut counts[e * k + assignment[v]];
                if *c == 0 {
                    occupied[e] += 1;
                }
                *c += 1;
            }
            if occupied[e] == k {
                value += edge.multiplicity();
            }
        }
        CutState { h, incidence: h.incidence(), k, assignment, counts, occupied, value }
    }

    pub(crate) fn value(&self) -> u64 {
        self.value
    }

    pub(crate) fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub(crate) fn into_assignment(self) -> Vec<usize> {
        self.assignment
    }

    /// Change in cut value if `v` moves to part `to`.
    pub(crate) fn gain(&self, v: usize, to: usize) -> i64 {
        let from = self.assignment[v];
        if from == to {
            return 0;
        }
        let k = self.k;
        let mut gain = 0i64;
        for &e in &self.incidence[v] {
            let before = self.occupied[e] == k;
            let after_occ = self.occupied[e] - usize::from(self.counts[e * k + from] == 1)
                + usize::from(self.counts[e * k + to] == 0);
            let after = after_occ == k;
            let mult = self.h.edges()[e].multiplicity() as i64;
            gain += mult * (i64::from(after) - i64::from(before));
        }
        gain
    }

    pub(crate) fn relocate(&mut self, v: usize, to: usize) {
        let from = self.assignment[v];
        if from == to {
            return;
        }
        let k = self.k;
        for &e in &self.incidence[v] {
            let mult = self.h.edges()[e].multiplicity();
            if self.occupied[e] == k {
                self.value -= mult;
            }
            let cf = &mut self.counts[e * k + from];
            *cf -= 1;
            if *cf == 0 {
                self.occupied[e] -= 1;
            }
            let ct = &mut self.counts[e * k + to];
            if *ct == 0 {
                self.occupied[e] += 1;
            }
            *ct += 1;
            if self.occupied[e] == k {
                self.value += mult;
            }
        }
        self.assignment[v] = to;
    }

    /// Cyclic first-improvement over (vertex, target part). Returns the
    /// number of moves applied.
    pub(crate) fn climb(&mut self) -> usize {
        let n = self.assignment.len();
        let mut moves = 0;
        let mut idle = 0;
        let mut v = 0;
        while n > 0 && idle < n {
            let improved = (0..self.k).find(|&to| self.gain(v, to) > 0);
            match improved {
                Some(to) => {
                    self.relocate(v, to);
                    moves += 1;
                    idle = 0;
                }
                None => idle += 1,
            }
            v = (v + 1) % n;
        }
        moves
    }
}

/// Polishes `assignment` to a local optimum where no single vertex move
/// increases the number of cut edges.
pub fn kway_local_search(h: &Hypergraph, assignment: Vec<usize>, k: usize) -> Result<KCut> {
    h.check_assignment(&assignment, k)?;
    Ok(polish(h, assignment, k))
}

pub(crate) fn polish(h: &Hypergraph, assignment: Vec<usize>, k: usize) -> KCut {
    let mut state = CutState::new(h, assignment, k);
    state.climb();
    KCut::evaluate_unchecked(h, state.into_assignment(), k)
}

pub(crate) fn random_assignment(n: usize, k: usize, seed: Seed) -> Vec<usize> {
    let mut rng = seed.rng();
    (0..n).map(|_| rng.random_range(0..k)).collect()
}

/// Uniformly random k-partitions, each kept both as drawn and after local
/// search. Returns the best of all.
pub fn random_baseline(h: &Hypergraph, k: usize, count: usize, seed: Seed) -> Result<KCut> {
    if count == 0 {
        return input("baseline count must be at least 1");
    }
    if !(1..=64).contains(&k) {
        return input(format!("part count {k} outside 1..=64"));
    }
    let mut best: Option<KCut> = None;
    for i in 0..count {
        let assignment = random_assignment(h.vertex_count(), k, seed.child(i as u64));
        let raw = KCut::evaluate_unchecked(h, assignment.clone(), k);
        let polished = polish(h, assignment, k);
        let cand = KCut::best(raw, polished);
        best = Some(match best {
            None => cand,
            Some(b) => KCut::best(b, cand),
        });
    }
    Ok(best.expect("count >= 1"))
}
