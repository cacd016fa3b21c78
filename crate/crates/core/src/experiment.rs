//! Concentration of color-sampled pair graphs, and surplus scaling on sparse
//! random 3-graphs.
//!
//! Both experiments emit CSV with a fixed column order:
//!
//! * concentration: `rep,seed,n,m,p,max_degree,max_color_degree,norm_dev,energy_dev,threshold,pass`
//! * scaling: `n,rep,seed,p,m,max_degree,max_codegree,cut_value,surplus,sqrt_m`

use std::io::Write;

use rand::Rng;
use serde::Serialize;

use crate::error::{input, Error, Result};
use crate::generators::gen_random_3graph;
use crate::hypergraph::{ColoredMultigraph, Hypergraph};
use crate::seed::{tags, Seed};
use crate::solver::{solve_3cut_auto, SamplePlan};
use crate::spectral::{eigen_decompose, SymmetricMatrix, DEFAULT_TOL};

/// One color-sampling trial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentRecord {
    pub rep: usize,
    pub seed: u64,
    pub n: usize,
    pub m: u64,
    pub p: f64,
    pub max_degree: u64,
    pub max_color_degree: u64,
    /// `‖pA - B‖`.
    pub norm_dev: f64,
    /// `E(pA - B)`.
    pub energy_dev: f64,
    pub threshold: f64,
    pub pass: bool,
}

/// `20 ln(m) sqrt(Δ D)`, or zero when `m <= 1`.
pub fn concentration_threshold(m: u64, max_degree: u64, max_color_degree: u64) -> f64 {
    if m <= 1 {
        return 0.0;
    }
    20.0 * (m as f64).ln() * ((max_degree * max_color_degree) as f64).sqrt()
}

fn spectrum_summary(a: &SymmetricMatrix) -> Result<(f64, f64)> {
    if a.dim() == 0 {
        return Ok((0.0, 0.0));
    }
    let e = eigen_decompose(a, DEFAULT_TOL)?;
    Ok((e.spectral_radius(), e.energy()))
}

/// Samples each color class independently with probability `p`, forming
/// the adjacency matrix `B` of the sampled edges, and records the deviation
/// of `B` from its mean `pA`.
pub fn colored_sampling_experiment(
    g: &ColoredMultigraph,
    p: f64,
    reps: usize,
    seed: u64,
) -> Result<Vec<ExperimentRecord>> {
    if !(p > 0.0 && p <= 1.0) {
        return input(format!("color sampling probability must lie in (0, 1], got {p}"));
    }
    if reps == 0 {
        return input("reps must be at least 1");
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    let max_degree = g.max_degree();
    let max_color_degree = g.max_color_degree();
    let threshold = concentration_threshold(m, max_degree, max_color_degree);
    let colors = g.colors();
    let a = g.adjacency();
    let stream = Seed(seed).child(tags::EXPERIMENT);

    (0..reps)
        .map(|rep| {
            let rep_seed = stream.child(rep as u64);
            let mut rng = rep_seed.rng();
            let mut chosen = vec![false; n];
            for &c in &colors {
                chosen[c] = rng.random::<f64>() < p;
            }
            let b = g.adjacency_where(|c| chosen[c]);
            let (norm_dev, energy_dev) = spectrum_summary(&a.combine(p, &b, -1.0))?;
            Ok(ExperimentRecord {
                rep,
                seed: rep_seed.0,
                n,
                m,
                p,
                max_degree,
                max_color_degree,
                norm_dev,
                energy_dev,
                threshold,
                pass: norm_dev <= threshold,
            })
        })
        .collect()
}

/// `‖W‖` for `W = p Σ_c A_c²`, the variance proxy over color classes.
pub fn monochromatic_walk_norm(g: &ColoredMultigraph, p: f64) -> Result<f64> {
    let n = g.vertex_count();
    let mut w = SymmetricMatrix::zeros(n);
    for c in g.colors() {
        let ac = g.adjacency_where(|x| x == c);
        let support: Vec<usize> = (0..n).filter(|&i| ac.row(i).iter().any(|&x| x != 0.0)).collect();
        for (ii, &i) in support.iter().enumerate() {
            for &j in &support[ii..] {
                let v: f64 = ac.row(i).iter().zip(ac.row(j)).map(|(x, y)| x * y).sum();
                w.add_sym(i, j, p * v);
            }
        }
    }
    Ok(spectrum_summary(&w)?.0)
}

/// Fraction of records with `pass == true`.
pub fn pass_rate(records: &[ExperimentRecord]) -> f64 {
    if records.is_empty() {
        return 0.0;
    }
    records.iter().filter(|r| r.pass).count() as f64 / records.len() as f64
}

/// One solved instance of the scaling study.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingRow {
    pub n: usize,
    pub rep: usize,
    pub seed: u64,
    pub p: f64,
    pub m: u64,
    pub max_degree: u64,
    pub max_codegree: u64,
    pub cut_value: u64,
    pub surplus: f64,
    pub sqrt_m: f64,
}

/// For each `n` and repetition, draws a random 3-graph with edge
/// probability `1/n`, solves it with [`solve_3cut_auto`] under `plan`
/// (reseeded per instance), and records the achieved surplus.
pub fn surplus_scaling_study(sizes: &[usize], reps: usize, seed: u64, plan: &SamplePlan) -> Result<Vec<ScalingRow>> {
    scaling_study_with(sizes, reps, seed, plan, |n| if n == 0 { 0.0 } else { 1.0 / n as f64 })
}

/// [`surplus_scaling_study`] with an arbitrary edge-probability rule.
pub fn scaling_study_with(
    sizes: &[usize],
    reps: usize,
    seed: u64,
    plan: &SamplePlan,
    p_rule: impl Fn(usize) -> f64,
) -> Result<Vec<ScalingRow>> {
    let stream = Seed(seed).child(tags::EXPERIMENT);
    let mut rows = Vec::with_capacity(sizes.len() * reps);
    for &n in sizes {
        for rep in 0..reps {
            let inst = stream.child(n as u64).child(rep as u64);
            let p = p_rule(n);
            let h: Hypergraph = gen_random_3graph(n, p, inst.0)?;
            let cut = solve_3cut_auto(&h, &SamplePlan { seed: inst.child(1).0, ..plan.clone() })?;
            let profile = h.degree_profile();
            rows.push(ScalingRow {
                n,
                rep,
                seed: inst.0,
                p,
                m: h.edge_count(),
                max_degree: profile.max_degree,
                max_codegree: profile.max_codegree,
                cut_value: cut.cut_value(),
                surplus: cut.surplus_f64(),
                sqrt_m: (h.edge_count() as f64).sqrt(),
            });
        }
    }
    Ok(rows)
}

/// Writes serializable rows as CSV with a header line.
pub fn write_csv<T: Serialize, W: Write>(rows: &[T], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row).map_err(|e| Error::Input(format!("csv: {e}")))?;
    }
    w.flush().map_err(|e| Error::Input(format!("csv: {e}")))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::ColoredEdge;

    fn small_colored() -> ColoredMultigraph {
        Hypergraph::from_edges(3, 6, [[0, 1, 2], [0, 3, 4], [1, 3, 5], [2, 4, 5]])
            .unwrap()
            .colored_pair_graph()
            .unwrap()
    }

    #[test]
    fn tiny_p_gives_tiny_deviation() {
        let g = small_colored();
        let recs = colored_sampling_experiment(&g, 1e-9, 1, 4).unwrap();
        let a_norm = spectrum_summary(&g.adjacency()).unwrap().0;
        assert!((recs[0].norm_dev - 1e-9 * a_norm).abs() < 1e-15);
        assert!(recs[0].pass);
    }

    #[test]
    fn full_sampling_has_zero_deviation() {
        let recs = colored_sampling_experiment(&small_colored(), 1.0, 3, 4).unwrap();
        assert!(recs.iter().all(|r| r.norm_dev == 0.0 && r.energy_dev == 0.0 && r.pass));
    }

    #[test]
    fn experiment_is_reproducible_and_validated() {
        let g = small_colored();
        let a = colored_sampling_experiment(&g, 0.5, 5, 9).unwrap();
        assert_eq!(a, colored_sampling_experiment(&g, 0.5, 5, 9).unwrap());
        assert_eq!(a.len(), 5);
        assert!(colored_sampling_experiment(&g, 0.0, 5, 9).is_err());
        assert!(colored_sampling_experiment(&g, 0.5, 0, 9).is_err());
    }

    #[test]
    fn threshold_formula() {
        assert_eq!(concentration_threshold(1, 4, 1), 0.0);
        let t = concentration_threshold(100, 9, 4);
        assert!((t - 20.0 * 100f64.ln() * 6.0).abs() < 1e-9);
    }

    #[test]
    fn walk_norm_of_single_color_star() {
        // color 3 forms the path 0-1-2; A_c² has norm 2 (eigenvalues of P3 are ±√2, 0)
        let g = ColoredMultigraph::new(
            4,
            vec![
                ColoredEdge { u: 0, v: 1, color: 3, multiplicity: 1 },
                ColoredEdge { u: 1, v: 2, color: 3, multiplicity: 1 },
            ],
        )
        .unwrap();
        assert!((monochromatic_walk_norm(&g, 0.5).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn scaling_study_edge_cases() {
        let plan = SamplePlan { rounds: 2, rounding_trials: Some(10), ..SamplePlan::default() };
        assert!(surplus_scaling_study(&[], 3, 1, &plan).unwrap().is_empty());
        let rows = scaling_study_with(&[12], 2, 1, &plan, |_| 0.0).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| r.m == 0 && r.surplus == 0.0));
    }

    #[test]
    fn csv_has_header_and_rows() {
        let recs = colored_sampling_experiment(&small_colored(), 0.5, 2, 1).unwrap();
        let mut buf = Vec::new();
        write_csv(&recs, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next().unwrap(),
            "rep,seed,n,m,p,max_degree,max_color_degree,norm_dev,energy_dev,threshold,pass"
        );
        assert_eq!(lines.count(), 2);
    }
}
