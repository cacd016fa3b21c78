//! Large k-cuts of uniform multi-hypergraphs.
//!
//! The core route for 3-graphs samples a third of the vertices, collapses the
//! hyperedges that meet the sample in exactly one vertex onto a pair
//! multigraph, and cuts that multigraph using the Gram vectors of the
//! projector onto its negative eigenspace. The achievable surplus of a
//! multigraph is controlled by its energy (the sum of absolute eigenvalues),
//! which is what makes the reduction pay off.
//!
//! Modules:
//!
//! * [`hypergraph`]: data model, cut evaluation and surplus accounting
//! * [`spectral`]: Jacobi eigensolver, energy and the PSD certificate
//! * [`rounding`]: hyperplane rounding and single-flip local search
//! * [`solver`]: sampling solver, preprocessing and k-cut reductions
//! * [`oracle`], [`generators`], [`experiment`]: ground truth, instances and
//!   measurement

pub mod error;
pub mod experiment;
pub mod generators;
pub mod hypergraph;
pub mod kway;
pub mod oracle;
pub mod rounding;
pub mod seed;
pub mod solver;
pub mod spectral;

pub use error::{Error, Result};
pub use hypergraph::{
    random_cut_coefficient, surplus_of_cut, ColoredEdge, ColoredMultigraph, DegreeProfile, Edge, Hypergraph,
    InducedSub, KCut, Rational,
};
pub use oracle::brute_force_max_kcut;
pub use rounding::{best_bipartition, BipartitionResult, GramVectors};
pub use solver::{solve_3cut, solve_3cut_auto, solve_kcut, KCutSolution, SamplePlan};
pub use spectral::{eigen_decompose, energy, EigenDecomposition, SymmetricMatrix};
