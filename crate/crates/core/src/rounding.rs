//! From spectral certificates to ±1 cuts.
//!
//! The Gram vectors of the negative-eigenspace projector are rounded with
//! random Gaussian hyperplanes, and every candidate is polished by a
//! first-improvement single-flip local search. Values are reported as the
//! quadratic surplus `-½ Σ_{i<j} A(i,j) x(i) x(j)`, which for a multigraph
//! equals `cut - m/2`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{input, Result};
use crate::seed::{tags, Seed};
use crate::spectral::{eigen_decompose, EigenDecomposition, SymmetricMatrix, DEFAULT_TOL};

/// Norm below which a Gram vector is treated as zero.
const ZERO_NORM: f64 = 1e-12;

/// Rows `z_i(j) = v_j(i)` over the negative eigenvectors `v_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct GramVectors {
    n: usize,
    dim: usize,
    coords: Vec<f64>,
}

impl GramVectors {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vector(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn norm(&self, i: usize) -> f64 {
        self.vector(i).iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// `G(i,j) = <z_i, z_j>`.
    pub fn gram_matrix(&self) -> SymmetricMatrix {
        SymmetricMatrix::from_fn(self.n, |i, j| dot(self.vector(i), self.vector(j)))
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn gram_vectors(e: &EigenDecomposition) -> GramVectors {
    let neg = e.negative_indices();
    let n = e.dim();
    let dim = neg.len();
    let mut coords = Vec::with_capacity(n * dim);
    for i in 0..n {
        coords.extend(neg.iter().map(|&j| e.vector(j)[i]));
    }
    GramVectors { n, dim, coords }
}

/// A sign vector with its quadratic surplus.
#[derive(Debug, Clone, PartialEq)]
pub struct BipartitionResult {
    signs: Vec<i8>,
    value: f64,
    trials: usize,
    flips: usize,
}

impl BipartitionResult {
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// `-½ Σ_{i<j} A(i,j) x(i) x(j)`.
    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn trials(&self) -> usize {
        self.trials
    }

    pub fn flips(&self) -> usize {
        self.flips
    }

    /// Maps `+1 -> 0` and `-1 -> 1`.
    pub fn assignment(&self) -> Vec<usize> {
        self.signs.iter().map(|&s| usize::from(s < 0)).collect()
    }

    /// Total weight of pairs on opposite sides.
    pub fn cut_weight(&self, a: &SymmetricMatrix) -> f64 {
        let n = self.signs.len();
        let mut w = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                if self.signs[i] != self.signs[j] {
                    w += a.get(i, j);
                }
            }
        }
        w
    }

    fn beats(&self, other: &BipartitionResult, eps: f64) -> bool {
        self.value > other.value + eps || (self.value >= other.value - eps && self.signs < other.signs)
    }
}

/// `-½ Σ_{i<j} A(i,j) x(i) x(j)` for a sign vector; the diagonal is ignored.
pub fn quadratic_surplus(a: &SymmetricMatrix, x: &[i8]) -> f64 {
    let mut total = 0.0;
    for i in 0..x.len() {
        let row = a.row(i);
        let partial: f64 = ((i + 1)..x.len()).map(|j| row[j] * f64::from(x[j])).sum();
        total += f64::from(x[i]) * partial;
    }
    -0.5 * total
}

fn check_signs(a: &SymmetricMatrix, x: &[i8]) -> Result<()> {
    if x.len() != a.dim() {
        return input(format!("sign vector has length {} but matrix is {}x{}", x.len(), a.dim(), a.dim()));
    }
    if x.iter().any(|&s| s != 1 && s != -1) {
        return input("sign vector entries must be +1 or -1");
    }
    Ok(())
}

fn value_tolerance(a: &SymmetricMatrix) -> f64 {
    let max_abs = (0..a.dim()).flat_map(|i| a.row(i).iter()).fold(0.0f64, |m, x| m.max(x.abs()));
    1e-9 * max_abs.max(f64::MIN_POSITIVE)
}

fn coin(rng: &mut ChaCha8Rng) -> i8 {
    if rng.random::<bool>() {
        1
    } else {
        -1
    }
}

fn hyperplane_signs(z: &GramVectors, rng: &mut ChaCha8Rng) -> Vec<i8> {
    let g: Vec<f64> = (0..z.dim).map(|_| rng.sample(StandardNormal)).collect();
    (0..z.n)
        .map(|i| {
            let zi = z.vector(i);
            let proj = dot(&g, zi);
            if z.norm(i) <= ZERO_NORM || proj == 0.0 {
                coin(rng)
            } else if proj > 0.0 {
                1
            } else {
                -1
            }
        })
        .collect()
}

/// Random-hyperplane rounding: `x(i) = sign(<g, z_i>)` for Gaussian `g`,
/// keeping the best of `trials` draws. Zero Gram vectors get fair coins.
pub fn gaussian_sign_round(
    z: &GramVectors,
    a: &SymmetricMatrix,
    trials: usize,
    seed: u64,
) -> Result<BipartitionResult> {
    if z.len() != a.dim() {
        return input(format!("{} Gram vectors for a {}x{} matrix", z.len(), a.dim(), a.dim()));
    }
    if trials == 0 {
        return input("trials must be at least 1");
    }
    let eps = value_tolerance(a);
    let stream = Seed(seed).child(tags::ROUNDING);
    let mut best: Option<BipartitionResult> = None;
    for t in 0..trials {
        let mut rng = stream.child(t as u64).rng();
        let signs = hyperplane_signs(z, &mut rng);
        let cand = BipartitionResult { value: quadratic_surplus(a, &signs), signs, trials, flips: 0 };
        if best.as_ref().is_none_or(|b| cand.beats(b, eps)) {
            best = Some(cand);
        }
    }
    Ok(best.expect("trials >= 1"))
}

/// First-improvement single-flip local search, scanning vertices cyclically
/// until no flip strictly increases the quadratic surplus.
pub fn local_search_1flip(a: &SymmetricMatrix, x: &[i8]) -> Result<BipartitionResult> {
    check_signs(a, x)?;
    Ok(local_search_unchecked(a, x.to_vec(), value_tolerance(a)))
}

fn local_search_unchecked(a: &SymmetricMatrix, mut x: Vec<i8>, eps: f64) -> BipartitionResult {
    let n = x.len();
    // field[i] = sum_{j != i} A(i,j) x(j); flipping i changes the value by x(i) field[i]
    let mut field: Vec<f64> = (0..n)
        .map(|i| {
            a.row(i)
                .iter()
                .zip(&x)
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, (aij, &xj))| aij * f64::from(xj))
                .sum()
        })
        .collect();
    let mut flips = 0;
    let mut since_improvement = 0;
    let mut i = 0;
    while n > 0 && since_improvement < n {
        let gain = f64::from(x[i]) * field[i];
        if gain > eps {
            let old = f64::from(x[i]);
            x[i] = -x[i];
            for (j, f) in field.iter_mut().enumerate() {
                if j != i {
                    *f -= 2.0 * a.get(j, i) * old;
                }
            }
            flips += 1;
            since_improvement = 0;
        } else {
            since_improvement += 1;
        }
        i = (i + 1) % n;
    }
    BipartitionResult { value: quadratic_surplus(a, &x), signs: x, trials: 1, flips }
}

/// Default rounding budget `100 * ceil(log2(n + 1))`.
pub fn default_trials(n: usize) -> usize {
    let bits = (usize::BITS - n.leading_zeros()) as usize; // ceil(log2(n+1))
    100 * bits.max(1)
}

/// Best ±1 vector found by combining hyperplane rounding of the negative
/// eigenspace, the sign pattern of each negative eigenvector, and random
/// starts, each polished by [`local_search_1flip`].
///
/// The result is normalized so the first sign is `+1`; among equal values the
/// lexicographically smallest sign vector wins.
pub fn best_bipartition(a: &SymmetricMatrix, trials: usize, seed: u64) -> Result<BipartitionResult> {
    if !a.has_zero_diagonal() {
        return input("best_bipartition needs a zero diagonal");
    }
    if trials == 0 {
        return input("trials must be at least 1");
    }
    let n = a.dim();
    if n == 0 {
        return Ok(BipartitionResult { signs: Vec::new(), value: 0.0, trials: 0, flips: 0 });
    }
    let eps = value_tolerance(a);
    let root = Seed(seed);
    let e = eigen_decompose(a, DEFAULT_TOL)?;
    let z = gram_vectors(&e);

    let mut starts: Vec<Vec<i8>> = Vec::new();
    starts.push(gaussian_sign_round(&z, a, trials, seed)?.signs);

    let mut rng = root.child(tags::BASELINE).rng();
    for idx in e.negative_indices() {
        let v = e.vector(idx);
        starts.push(
            v.iter()
                .map(|&c| {
                    if c > 0.0 {
                        1
                    } else if c < 0.0 {
                        -1
                    } else {
                        coin(&mut rng)
                    }
                })
                .collect(),
        );
    }
    let random_starts = (trials / 25).max(1);
    for _ in 0..random_starts {
        starts.push((0..n).map(|_| coin(&mut rng)).collect());
    }

    let used = trials + starts.len() - 1;
    let mut best: Option<BipartitionResult> = None;
    for start in starts {
        let mut cand = local_search_unchecked(a, start, eps);
        if cand.signs[0] < 0 {
            cand.signs.iter_mut().for_each(|s| *s = -*s);
        }
        if best.as_ref().is_none_or(|b| cand.beats(b, eps)) {
            best = Some(cand);
        }
    }
    let mut best = best.expect("at least one start");
    best.trials = used;
    Ok(best)
}
