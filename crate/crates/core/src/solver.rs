//! 3-cuts of 3-multigraphs by vertex sampling and spectral 2-cut rounding,
//! plus the reductions that extend them to k-cuts of r-graphs.
//!
//! One sampling round draws `X` with probability `p` per vertex and builds
//! the pair multigraph `G*` on `V \ X` from the hyperedges meeting `X` in
//! exactly one vertex. For every bipartition `(Y, Z)` of `V \ X`, the 3-cut
//! `(X, Y, Z)` cuts exactly `e_{G*}(Y, Z)` hyperedges, so a good 2-cut of
//! `G*` is a good 3-cut of `H`.

use std::collections::BTreeMap;

use rand::Rng;

use crate::error::{input, Result};
use crate::hypergraph::{DegreeProfile, Hypergraph, KCut};
use crate::kway::{polish, random_assignment, random_baseline};
use crate::rounding::{best_bipartition, default_trials};
use crate::seed::{tags, Seed};

/// Parameters of the sampling solver.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplePlan {
    /// Per-vertex sampling probability for `X`.
    pub p: f64,
    /// Number of sampling rounds.
    pub rounds: usize,
    /// Hyperplane roundings per round; `None` uses [`default_trials`].
    pub rounding_trials: Option<usize>,
    pub seed: u64,
    /// Worker threads for sampling rounds (needs the `parallel` feature).
    pub threads: usize,
}

impl Default for SamplePlan {
    fn default() -> Self {
        SamplePlan { p: 1.0 / 3.0, rounds: 30, rounding_trials: None, seed: 0, threads: 1 }
    }
}

impl SamplePlan {
    pub fn with_seed(seed: u64) -> Self {
        SamplePlan { seed, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.p > 0.0 && self.p < 1.0) {
            return input(format!("sampling probability must lie in (0, 1), got {}", self.p));
        }
        if self.rounds == 0 {
            return input("rounds must be at least 1");
        }
        if self.rounding_trials == Some(0) {
            return input("rounding trials must be at least 1");
        }
        if self.threads == 0 {
            return input("threads must be at least 1");
        }
        Ok(())
    }

    fn reseeded(&self, seed: Seed) -> SamplePlan {
        SamplePlan { seed: seed.0, ..self.clone() }
    }
}

/// The pair multigraph `G*` on `V \ X` with provenance of every pair.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedInstance {
    sampled: Vec<bool>,
    remaining: Vec<usize>,
    graph: Hypergraph,
    origins: Vec<Vec<usize>>,
}

impl ReducedInstance {
    pub fn sampled(&self) -> Vec<usize> {
        (0..self.sampled.len()).filter(|&v| self.sampled[v]).collect()
    }

    pub fn is_sampled(&self, v: usize) -> bool {
        self.sampled[v]
    }

    /// Original ids of the vertices of `G*`, ascending.
    pub fn remaining(&self) -> &[usize] {
        &self.remaining
    }

    /// `G*` on local ids `0..remaining().len()`.
    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    /// For each edge of `graph()` (same order), indices into `H.edges()` of
    /// the hyperedges that collapsed onto it.
    pub fn origins(&self) -> &[Vec<usize>] {
        &self.origins
    }

    /// 3-cut with `X` in part 0, `Y` (local `false`) in part 1 and `Z`
    /// (local `true`) in part 2.
    pub fn lift(&self, in_z: &[bool]) -> Vec<usize> {
        let mut assignment = vec![0; self.sampled.len()];
        for (local, &v) in self.remaining.iter().enumerate() {
            assignment[v] = if in_z[local] { 2 } else { 1 };
        }
        assignment
    }
}

/// Builds `G*` for a given sampled set `x`.
pub fn sample_and_reduce(h: &Hypergraph, x: &[usize]) -> Result<ReducedInstance> {
    if h.uniformity() != 3 {
        return input(format!("sampling reduction needs r = 3, got r = {}", h.uniformity()));
    }
    let n = h.vertex_count();
    let mut sampled = vec![false; n];
    for &v in x {
        if v >= n {
            return input(format!("sampled vertex {v} out of range 0..{n}"));
        }
        sampled[v] = true;
    }
    let remaining: Vec<usize> = (0..n).filter(|&v| !sampled[v]).collect();
    let mut local = vec![usize::MAX; n];
    for (i, &v) in remaining.iter().enumerate() {
        local[v] = i;
    }
    let mut pairs: BTreeMap<(usize, usize), (u64, Vec<usize>)> = BTreeMap::new();
    for (idx, e) in h.edges().iter().enumerate() {
        let vs = e.vertices();
        if vs.iter().filter(|&&v| sampled[v]).count() != 1 {
            continue;
        }
        let rest: Vec<usize> = vs.iter().filter(|&&v| !sampled[v]).map(|&v| local[v]).collect();
        let entry = pairs.entry((rest[0], rest[1])).or_insert((0, Vec::new()));
        entry.0 += e.multiplicity();
        entry.1.push(idx);
    }
    let origins = pairs.values().map(|(_, o)| o.clone()).collect();
    let graph = Hypergraph::new(2, remaining.len(), pairs.into_iter().map(|((u, v), (m, _))| ([u, v], m)))?;
    Ok(ReducedInstance { sampled, remaining, graph, origins })
}

fn sampling_round(h: &Hypergraph, plan: &SamplePlan, round: usize) -> Result<KCut> {
    let seed = Seed(plan.seed).child(tags::SAMPLING).child(round as u64);
    let mut rng = seed.rng();
    let x: Vec<usize> = (0..h.vertex_count()).filter(|_| rng.random::<f64>() < plan.p).collect();
    let reduced = sample_and_reduce(h, &x)?;
    let g = reduced.graph();
    let in_z = if g.vertex_count() == 0 {
        Vec::new()
    } else {
        let trials = plan.rounding_trials.unwrap_or_else(|| default_trials(g.vertex_count()));
        let split = best_bipartition(&g.adjacency()?, trials, seed.child(tags::ROUNDING).0)?;
        split.signs().iter().map(|&s| s < 0).collect()
    };
    Ok(polish(h, reduced.lift(&in_z), 3))
}

fn run_rounds(h: &Hypergraph, plan: &SamplePlan) -> Result<Vec<KCut>> {
    #[cfg(feature = "parallel")]
    if plan.threads > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(plan.threads)
            .build()
            .map_err(|e| crate::Error::Input(format!("thread pool: {e}")))?;
        return pool.install(|| (0..plan.rounds).into_par_iter().map(|i| sampling_round(h, plan, i)).collect());
    }
    (0..plan.rounds).map(|i| sampling_round(h, plan, i)).collect()
}

fn best_of(cands: impl IntoIterator<Item = KCut>) -> Option<KCut> {
    cands.into_iter().reduce(KCut::best)
}

/// Best 3-cut over sampling rounds and `ceil(rounds / 4)` random
/// tripartitions. Every candidate is polished by 3-way local search.
pub fn solve_3cut(h: &Hypergraph, plan: &SamplePlan) -> Result<KCut> {
    if h.uniformity() != 3 {
        return input(format!("3-cut solver needs r = 3, got r = {}", h.uniformity()));
    }
    plan.validate()?;
    if h.is_empty() {
        return KCut::trivial(h, 3);
    }
    let mut cands = run_rounds(h, plan)?;
    let baseline_count = plan.rounds.div_ceil(4).max(1);
    cands.push(random_baseline(h, 3, baseline_count, Seed(plan.seed).child(tags::BASELINE))?);
    Ok(best_of(cands).expect("at least one candidate"))
}

/// Outcome of [`preprocess_heavy`].
#[derive(Debug, Clone, PartialEq)]
pub struct HeavyPreprocess {
    /// `W = V \ (S ∪ T)`, ascending.
    pub kept: Vec<usize>,
    /// `S`: endpoints of a maximal matching of heavy pairs.
    pub matched: Vec<usize>,
    /// `T`: vertices whose pair-graph degree exceeds the degree cap.
    pub high_degree: Vec<usize>,
    /// Edge count of `H[W]`.
    pub sub_edge_count: u64,
    pub sub_profile: DegreeProfile,
}

/// Default `(D, Δ) = (ceil(m^{1/5}), ceil(m^{3/5}))`, computed in integers.
pub fn default_heavy_params(m: u64) -> (u64, u64) {
    let m = u128::from(m.max(1));
    let d = smallest_with_power_at_least(5, m);
    let delta = smallest_with_power_at_least(5, m * m * m);
    (d as u64, delta as u64)
}

fn smallest_with_power_at_least(exp: u32, target: u128) -> u128 {
    let (mut lo, mut hi) = (1u128, 1u128);
    while hi.checked_pow(exp).is_some_and(|v| v < target) {
        hi *= 2;
    }
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if mid.checked_pow(exp).is_none_or(|v| v >= target) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    lo
}

/// Removes the endpoints of a greedy maximal matching of pairs of weight at
/// least `d` in the pair graph, and the vertices of pair-graph degree above
/// `delta`.
pub fn preprocess_heavy(h: &Hypergraph, d: u64, delta: u64) -> Result<HeavyPreprocess> {
    if h.uniformity() != 3 {
        return input(format!("heavy-pair preprocessing needs r = 3, got r = {}", h.uniformity()));
    }
    if d == 0 || delta == 0 {
        return input("D and Δ must be at least 1");
    }
    let n = h.vertex_count();
    let g = h.underlying_multigraph(2)?;
    let mut in_s = vec![false; n];
    for e in g.edges().iter().filter(|e| e.multiplicity() >= d) {
        let (u, v) = (e.vertices()[0], e.vertices()[1]);
        if !in_s[u] && !in_s[v] {
            in_s[u] = true;
            in_s[v] = true;
        }
    }
    let deg = g.degrees();
    let in_t: Vec<bool> = deg.iter().map(|&x| x > delta).collect();
    let matched: Vec<usize> = (0..n).filter(|&v| in_s[v]).collect();
    let high_degree: Vec<usize> = (0..n).filter(|&v| in_t[v]).collect();
    let kept: Vec<usize> = (0..n).filter(|&v| !in_s[v] && !in_t[v]).collect();
    let sub = h.induced_sub(&kept)?;
    Ok(HeavyPreprocess {
        sub_edge_count: sub.graph.edge_count(),
        sub_profile: sub.graph.degree_profile(),
        kept,
        matched,
        high_degree,
    })
}

/// Runs [`solve_3cut`] on `H` and on the preprocessed `H[W]` (completed to
/// all of `V` randomly, then polished), returning the better cut of `H`.
pub fn solve_3cut_auto(h: &Hypergraph, plan: &SamplePlan) -> Result<KCut> {
    let direct = solve_3cut(h, plan)?;
    if h.is_empty() {
        return Ok(direct);
    }
    let (d, delta) = default_heavy_params(h.edge_count());
    let pre = preprocess_heavy(h, d, delta)?;
    if pre.kept.len() == h.vertex_count() || pre.sub_edge_count == 0 {
        return Ok(direct);
    }
    let stream = Seed(plan.seed).child(tags::PREPROCESS);
    let sub = h.induced_sub(&pre.kept)?;
    let sub_cut = solve_3cut(&sub.graph, &plan.reseeded(stream.child(0)))?;
    let mut assignment = random_assignment(h.vertex_count(), 3, stream.child(1));
    for (local, &v) in sub.original.iter().enumerate() {
        assignment[v] = sub_cut.assignment()[local];
    }
    Ok(KCut::best(direct, polish(h, assignment, 3)))
}

/// Lifts an (r-1)-cut of an r-graph to an r-cut: each trial moves every
/// vertex into the new part with probability `1/r`. Returns the best trial.
pub fn reduce_cut_up(h: &Hypergraph, cut: &[usize], trials: usize, seed: u64) -> Result<KCut> {
    let r = h.uniformity();
    h.check_assignment(cut, r - 1).map_err(|e| crate::Error::Input(format!("expected an {}-cut: {e}", r - 1)))?;
    if trials == 0 {
        return input("trials must be at least 1");
    }
    let stream = Seed(seed).child(tags::LIFT);
    let q = 1.0 / r as f64;
    let mut best: Option<KCut> = None;
    for t in 0..trials {
        let mut rng = stream.child(t as u64).rng();
        let assignment: Vec<usize> = cut.iter().map(|&p| if rng.random::<f64>() < q { r - 1 } else { p }).collect();
        let cand = KCut::evaluate_unchecked(h, assignment, r);
        best = Some(match best {
            None => cand,
            Some(b) => KCut::best(b, cand),
        });
    }
    Ok(best.expect("trials >= 1"))
}

/// Random trials per lifting step in [`solve_kcut`].
pub const LIFT_TRIALS: usize = 200;

/// Result of [`solve_kcut`].
#[derive(Debug, Clone, PartialEq)]
pub struct KCutSolution {
    pub cut: KCut,
    /// Set when `(r, k)` is outside `k ∈ {r-1, r}` and only the baseline ran.
    pub fallback: bool,
}

/// k-cut of an r-graph. For `k ∈ {r-1, r}` the chain `H_r -> ... -> H_3` of
/// underlying multigraphs is solved at `H_3` and lifted back part by part;
/// every route is compared with a random-plus-local-search baseline.
pub fn solve_kcut(h: &Hypergraph, k: usize, plan: &SamplePlan) -> Result<KCutSolution> {
    let r = h.uniformity();
    if k < 2 || k > r {
        return input(format!("need 2 <= k <= r, got r = {r}, k = {k}"));
    }
    plan.validate()?;
    let root = Seed(plan.seed);
    let baseline = random_baseline(h, k, plan.rounds.div_ceil(4).max(1), root.child(tags::BASELINE))?;

    if r == 2 {
        let split = best_bipartition(
            &h.adjacency()?,
            plan.rounding_trials.unwrap_or_else(|| default_trials(h.vertex_count())),
            root.child(tags::ROUNDING).0,
        )?;
        let cut = KCut::evaluate(h, split.assignment(), 2)?;
        return Ok(KCutSolution { cut: KCut::best(cut, baseline), fallback: false });
    }
    if r == 3 && k == 3 {
        return Ok(KCutSolution { cut: solve_3cut_auto(h, plan)?, fallback: false });
    }
    if k + 1 < r || (r == 3 && k == 2) {
        let mut cut = baseline;
        if k == 2 {
            // 2-cuts of any r-graph: the underlying graph gives a second route
            let g = h.underlying_multigraph(2)?;
            let trials = plan.rounding_trials.unwrap_or_else(|| default_trials(h.vertex_count()));
            let split = best_bipartition(&g.adjacency()?, trials, root.child(tags::ROUNDING).0)?;
            cut = KCut::best(cut, polish(h, split.assignment(), 2));
        }
        return Ok(KCutSolution { cut, fallback: true });
    }

    // layers[j] is the underlying j-graph, layers[r] = H
    let mut layers: Vec<Option<Hypergraph>> = vec![None; r + 1];
    layers[r] = Some(h.clone());
    for j in (3..r).rev() {
        layers[j] = Some(layers[j + 1].as_ref().expect("built").underlying_multigraph(j)?);
    }
    let h3 = layers[3].as_ref().expect("built");
    let mut assignment = solve_3cut_auto(h3, plan)?.into_assignment();
    for (j, layer) in layers.iter().enumerate().take(k + 1).skip(4) {
        let layer = layer.as_ref().expect("built");
        assignment =
            reduce_cut_up(layer, &assignment, LIFT_TRIALS, root.child(tags::LIFT).child(j as u64).0)?.into_assignment();
    }
    let lifted = polish(h, assignment, k);
    Ok(KCutSolution { cut: KCut::best(lifted, baseline), fallback: false })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Rational;
    use crate::oracle::brute_force_max_kcut;
    use itertools::Itertools;

    fn complete(r: usize, n: usize) -> Hypergraph {
        Hypergraph::from_edges(r, n, (0..n).combinations(r)).unwrap()
    }

    fn quick_plan(seed: u64) -> SamplePlan {
        SamplePlan { rounds: 8, rounding_trials: Some(40), ..SamplePlan::with_seed(seed) }
    }

    #[test]
    fn reduce_examples() {
        let h = Hypergraph::from_edges(3, 3, [[0, 1, 2]]).unwrap();
        let red = sample_and_reduce(&h, &[2]).unwrap();
        assert_eq!(red.remaining(), &[0, 1]);
        assert_eq!(red.graph().edges().len(), 1);
        assert_eq!(red.graph().edges()[0].vertices(), &[0, 1]);
        assert_eq!(red.origins(), &[vec![0]]);

        let red = sample_and_reduce(&h, &[1, 2]).unwrap();
        assert!(red.graph().is_empty());

        let h2 = Hypergraph::from_edges(3, 4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        let red = sample_and_reduce(&h2, &[2, 3]).unwrap();
        assert_eq!(red.graph().edges().len(), 1);
        assert_eq!(red.graph().edges()[0].multiplicity(), 2);
        assert_eq!(red.origins(), &[vec![0, 1]]);

        assert!(sample_and_reduce(&complete(2, 3), &[0]).is_err());
        assert!(sample_and_reduce(&h, &[3]).is_err());
    }

    #[test]
    fn lift_places_sampled_vertices_in_part_zero() {
        let h = Hypergraph::from_edges(3, 4, [[0, 1, 2], [1, 2, 3]]).unwrap();
        let red = sample_and_reduce(&h, &[1]).unwrap();
        assert_eq!(red.lift(&[false, true, false]), vec![1, 0, 2, 1]);
    }

    #[test]
    fn solve_3cut_examples() {
        let single = Hypergraph::from_edges(3, 3, [[0, 1, 2]]).unwrap();
        let cut = solve_3cut(&single, &quick_plan(1)).unwrap();
        assert_eq!(cut.cut_value(), 1);
        assert_eq!(cut.surplus(), Rational::new(7, 9));

        let c34 = complete(3, 4);
        let cut = solve_3cut(&c34, &quick_plan(2)).unwrap();
        assert_eq!(cut.cut_value(), brute_force_max_kcut(&c34, 3).unwrap().cut_value());
        assert_eq!(cut.cut_value(), 2);

        let petals: Vec<[usize; 3]> = (0..5).map(|i| [0, 1 + 2 * i, 2 + 2 * i]).collect();
        let sunflower = Hypergraph::from_edges(3, 11, petals).unwrap();
        assert_eq!(solve_3cut(&sunflower, &quick_plan(3)).unwrap().cut_value(), 5);

        let empty = Hypergraph::empty(3, 4).unwrap();
        assert_eq!(solve_3cut(&empty, &quick_plan(0)).unwrap().cut_value(), 0);
        assert!(solve_3cut(&complete(2, 3), &quick_plan(0)).is_err());
    }

    #[test]
    fn plan_validation() {
        let h = complete(3, 4);
        assert!(solve_3cut(&h, &SamplePlan { p: 0.0, ..quick_plan(0) }).is_err());
        assert!(solve_3cut(&h, &SamplePlan { rounds: 0, ..quick_plan(0) }).is_err());
        assert!(solve_3cut(&h, &SamplePlan { rounding_trials: Some(0), ..quick_plan(0) }).is_err());
    }

    #[test]
    fn heavy_params_are_integer_ceilings() {
        assert_eq!(default_heavy_params(1), (1, 1));
        assert_eq!(default_heavy_params(32), (2, 8));
        assert_eq!(default_heavy_params(33), (3, 9));
        assert_eq!(default_heavy_params(100_000), (10, 1000));
    }

    #[test]
    fn preprocess_examples() {
        let fano =
            Hypergraph::from_edges(3, 7, [[0, 1, 2], [0, 3, 4], [0, 5, 6], [1, 3, 5], [1, 4, 6], [2, 3, 6], [2, 4, 5]])
                .unwrap();
        let pre = preprocess_heavy(&fano, 2, 100).unwrap();
        assert!(pre.matched.is_empty());
        assert!(pre.high_degree.is_empty());
        assert_eq!(pre.kept.len(), 7);
        assert_eq!(pre.sub_edge_count, 7);

        let h = Hypergraph::from_edges(3, 6, [[0, 1, 2], [0, 1, 3], [0, 1, 4], [2, 3, 5]]).unwrap();
        let pre = preprocess_heavy(&h, 3, 100).unwrap();
        assert!(pre.matched.contains(&0) && pre.matched.contains(&1));
        assert_eq!(pre.kept, vec![2, 3, 4, 5]);
        assert_eq!(pre.sub_edge_count, 1);

        let pre = preprocess_heavy(&h, 10, 4).unwrap();
        assert_eq!(pre.high_degree, vec![0, 1]);
        assert!(preprocess_heavy(&h, 0, 4).is_err());
    }

    #[test]
    fn auto_examples() {
        let c37 = complete(3, 7);
        let cut = solve_3cut_auto(&c37, &quick_plan(5)).unwrap();
        let oracle = brute_force_max_kcut(&c37, 3).unwrap();
        assert!(cut.cut_value() <= oracle.cut_value());
        assert!(Rational::from_integer(cut.cut_value() as i128) >= Rational::new(2, 9) * Rational::from_integer(35));
        assert_eq!(cut.cut_value(), oracle.cut_value());

        let empty = Hypergraph::empty(3, 5).unwrap();
        assert_eq!(solve_3cut_auto(&empty, &quick_plan(0)).unwrap().cut_value(), 0);
    }

    #[test]
    fn auto_is_at_least_direct() {
        let h = Hypergraph::new(
            3,
            8,
            [(vec![0, 1, 2], 4), (vec![0, 1, 3], 3), (vec![2, 4, 5], 1), (vec![3, 6, 7], 1), (vec![4, 6, 7], 2)],
        )
        .unwrap();
        for seed in 0..5 {
            let plan = quick_plan(seed);
            assert!(solve_3cut_auto(&h, &plan).unwrap().cut_value() >= solve_3cut(&h, &plan).unwrap().cut_value());
        }
    }

    #[test]
    fn reduce_cut_up_examples() {
        let h = Hypergraph::from_edges(3, 3, [[0, 1, 2]]).unwrap();
        let cut = reduce_cut_up(&h, &[0, 0, 1], 50, 1).unwrap();
        assert_eq!(cut.cut_value(), 1);
        assert_eq!(cut.k(), 3);
        assert!(reduce_cut_up(&h, &[0, 0, 2], 50, 1).is_err());
        assert!(reduce_cut_up(&h, &[0, 0], 50, 1).is_err());

        let c45 = complete(4, 5);
        let three = brute_force_max_kcut(&c45, 3).unwrap();
        let lifted = reduce_cut_up(&c45, three.assignment(), 400, 2).unwrap();
        assert_eq!(lifted.cut_value(), brute_force_max_kcut(&c45, 4).unwrap().cut_value());
    }

    #[test]
    fn solve_kcut_examples() {
        let c36 = complete(3, 6);
        let plan = quick_plan(4);
        assert_eq!(solve_kcut(&c36, 3, &plan).unwrap().cut, solve_3cut_auto(&c36, &plan).unwrap());

        let c46 = complete(4, 6);
        let sol = solve_kcut(&c46, 3, &plan).unwrap();
        assert!(!sol.fallback);
        let floor = Rational::new(36, 81) * Rational::from_integer(15);
        assert!(Rational::from_integer(sol.cut.cut_value() as i128) >= floor);
        assert_eq!(sol.cut.cut_value(), brute_force_max_kcut(&c46, 3).unwrap().cut_value());

        let single = Hypergraph::from_edges(4, 4, [[0, 1, 2, 3]]).unwrap();
        assert_eq!(solve_kcut(&single, 4, &plan).unwrap().cut.cut_value(), 1);

        let sol = solve_kcut(&complete(5, 7), 2, &plan).unwrap();
        assert!(sol.fallback);
        assert!(solve_kcut(&c36, 4, &plan).is_err());
        assert!(solve_kcut(&c36, 1, &plan).is_err());
    }

    #[test]
    fn kcut_chain_for_r5() {
        let h = complete(5, 7);
        let plan = quick_plan(6);
        for k in [4, 5] {
            let sol = solve_kcut(&h, k, &plan).unwrap();
            assert!(!sol.fallback);
            assert!(sol.cut.surplus() >= Rational::from_integer(0));
        }
    }
}
