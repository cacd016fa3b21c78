//! Dense symmetric matrices, a cyclic Jacobi eigensolver, graph energy and
//! the negative-eigenspace PSD certificate.

use std::fmt::Write as _;

use crate::error::{input, Error, Result};

/// Default relative off-diagonal tolerance for [`eigen_decompose`].
pub const DEFAULT_TOL: f64 = 1e-10;

/// Maximum number of full Jacobi sweeps.
pub const SWEEP_CAP: usize = 100;

/// Dense real symmetric matrix, row-major. Symmetry is exact: every setter
/// writes both triangles.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix { n, data: vec![0.0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    /// Builds from the upper triangle: `f(i, j)` is called for `i <= j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            for j in i..n {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    /// Builds from full rows; the rows must form an exactly symmetric square.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return input("matrix rows must all have length n");
        }
        let data: Vec<f64> = rows.iter().flatten().copied().collect();
        for i in 0..n {
            for j in (i + 1)..n {
                if data[i * n + j] != data[j * n + i] {
                    return input(format!("matrix is not symmetric at ({i}, {j})"));
                }
            }
        }
        Ok(SymmetricMatrix { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    /// Sets `(i, j)` and `(j, i)`.
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    /// Adds `value` to `(i, j)` and `(j, i)` (once on the diagonal).
    #[inline]
    pub fn add_sym(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] += value;
        if i != j {
            self.data[j * self.n + i] += value;
        }
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// Entrywise inner product `<A, B> = sum A(i,j) B(i,j)`.
    pub fn inner(&self, other: &SymmetricMatrix) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.data.iter().zip(&other.data).map(|(a, b)| a * b).sum()
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i) == 0.0)
    }

    /// `alpha * self + beta * other`.
    pub fn combine(&self, alpha: f64, other: &SymmetricMatrix, beta: f64) -> SymmetricMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| alpha * a + beta * b).collect();
        SymmetricMatrix { n: self.n, data }
    }

    pub fn scaled(&self, alpha: f64) -> SymmetricMatrix {
        SymmetricMatrix { n: self.n, data: self.data.iter().map(|x| alpha * x).collect() }
    }

    /// Principal submatrix on the given indices (in the given order).
    pub fn principal_submatrix(&self, idx: &[usize]) -> SymmetricMatrix {
        let k = idx.len();
        let mut data = Vec::with_capacity(k * k);
        for &i in idx {
            for &j in idx {
                data.push(self.get(i, j));
            }
        }
        SymmetricMatrix { n: k, data }
    }

    /// Quadratic form `x^T A x`.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        (0..self.n).map(|i| x[i] * self.row(i).iter().zip(x).map(|(a, b)| a * b).sum::<f64>()).sum()
    }

    /// Dense whitespace text: `n` on the first line, then `n` rows.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x:?}")).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, head) = lines.next().ok_or_else(|| Error::Parse { line: 1, message: "empty matrix text".into() })?;
        let n: usize =
            head.trim().parse().map_err(|_| Error::Parse { line: 1, message: format!("bad dimension {head:?}") })?;
        let mut rows = Vec::with_capacity(n);
        for (idx, line) in lines {
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<f64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::Parse { line: idx + 1, message: e.to_string() })?;
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::Parse {
                line: text.lines().count(),
                message: format!("expected {n} rows, found {}", rows.len()),
            });
        }
        Self::from_rows(&rows)
    }
}

/// Eigenvalues sorted descending with matching orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenDecomposition {
    n: usize,
    eigenvalues: Vec<f64>,
    /// Column-major: eigenvector `i` occupies `vectors[i*n..(i+1)*n]`.
    vectors: Vec<f64>,
    residual: f64,
    tol: f64,
    sweeps: usize,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn vector(&self, i: usize) -> &[f64] {
        &self.vectors[i * self.n..(i + 1) * self.n]
    }

    /// `max_i max_j |(A v_i - λ_i v_i)(j)|` against the input matrix.
    pub fn residual(&self) -> f64 {
        self.residual
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn sweeps(&self) -> usize {
        self.sweeps
    }

    /// `max |λ|`.
    pub fn spectral_radius(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0f64, |acc, x| acc.max(x.abs()))
    }

    pub fn energy(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x.abs()).sum()
    }

    /// `max_{i,j} |<v_i, v_j> - δ_ij|`.
    pub fn orthonormality_error(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.n {
            for j in i..self.n {
                let dot: f64 = self.vector(i).iter().zip(self.vector(j)).map(|(a, b)| a * b).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    /// `sum λ_i v_i v_i^T`.
    pub fn reconstruct(&self) -> SymmetricMatrix {
        self.outer_sum(0..self.n, |i| self.eigenvalues[i])
    }

    /// Eigenvalues below `-n * tol * ‖A‖` count as negative; numerically zero
    /// eigenvalues stay out of the negative eigenspace.
    pub fn negative_threshold(&self) -> f64 {
        -(self.n as f64) * self.tol * self.spectral_radius()
    }

    /// Indices of the negative eigenvalues (ascending index, so descending value).
    pub fn negative_indices(&self) -> Vec<usize> {
        let thr = self.negative_threshold();
        (0..self.n).filter(|&i| self.eigenvalues[i] < thr).collect()
    }

    fn outer_sum(&self, idx: impl IntoIterator<Item = usize>, weight: impl Fn(usize) -> f64) -> SymmetricMatrix {
        let n = self.n;
        let mut out = SymmetricMatrix::zeros(n);
        for i in idx {
            let w = weight(i);
            let v = self.vector(i);
            for a in 0..n {
                let wa = w * v[a];
                for (b, vb) in v.iter().enumerate().skip(a) {
                    out.data[a * n + b] += wa * vb;
                }
            }
        }
        for a in 0..n {
            for b in (a + 1)..n {
                out.data[b * n + a] = out.data[a * n + b];
            }
        }
        out
    }
}

/// Cyclic Jacobi eigendecomposition. Sweeps until every off-diagonal entry is
/// at most `tol * ‖A‖_F`.
pub fn eigen_decompose(a: &SymmetricMatrix, tol: f64) -> Result<EigenDecomposition> {
    let n = a.n;
    if n == 0 {
        return input("cannot decompose a 0x0 matrix");
    }
    if !(tol > 0.0 && tol.is_finite()) {
        return input(format!("tolerance must be positive, got {tol}"));
    }
    if a.data.iter().any(|x| !x.is_finite()) {
        return input("matrix has non-finite entries");
    }
    let scale = a.frobenius();
    let threshold = tol * scale;
    let negligible = f64::EPSILON * 1e-3 * scale;

    let mut w = a.data.clone();
    let mut v = SymmetricMatrix::identity(n).data;
    let mut sweeps = 0;
    loop {
        let off = max_off_diagonal(&w, n);
        if off <= threshold {
            break;
        }
        if sweeps == SWEEP_CAP {
            return Err(Error::NoConvergence { sweeps, off_diagonal: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = w[p * n + q];
                if apq.abs() <= negligible {
                    continue;
                }
                let theta = (w[q * n + q] - w[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    if k == p || k == q {
                        continue;
                    }
                    let akp = w[k * n + p];
                    let akq = w[k * n + q];
                    let np = c * akp - s * akq;
                    let nq = s * akp + c * akq;
                    w[k * n + p] = np;
                    w[p * n + k] = np;
                    w[k * n + q] = nq;
                    w[q * n + k] = nq;
                }
                w[p * n + p] -= t * apq;
                w[q * n + q] += t * apq;
                w[p * n + q] = 0.0;
                w[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| w[j * n + j].total_cmp(&w[i * n + i]).then(i.cmp(&j)));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| w[i * n + i]).collect();
    let mut vectors = Vec::with_capacity(n * n);
    for &i in &order {
        vectors.extend((0..n).map(|k| v[k * n + i]));
    }

    let mut residual = 0.0f64;
    for (idx, &lambda) in eigenvalues.iter().enumerate() {
        let vec = &vectors[idx * n..(idx + 1) * n];
        for row in 0..n {
            let av: f64 = a.row(row).iter().zip(vec).map(|(x, y)| x * y).sum();
            residual = residual.max((av - lambda * vec[row]).abs());
        }
    }

    Ok(EigenDecomposition { n, eigenvalues, vectors, residual, tol, sweeps })
}

fn max_off_diagonal(w: &[f64], n: usize) -> f64 {
    let mut off = 0.0f64;
    for p in 0..n {
        for q in (p + 1)..n {
            off = off.max(w[p * n + q].abs());
        }
    }
    off
}

/// Graph energy `sum |λ_i|`.
pub fn energy(a: &SymmetricMatrix) -> Result<f64> {
    if a.dim() == 0 {
        return Ok(0.0);
    }
    Ok(eigen_decompose(a, DEFAULT_TOL)?.energy())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralStats {
    pub spectral_radius: f64,
    pub frobenius: f64,
    pub trace: f64,
}

pub fn spectral_stats(a: &SymmetricMatrix) -> Result<SpectralStats> {
    let spectral_radius = if a.dim() == 0 { 0.0 } else { eigen_decompose(a, DEFAULT_TOL)?.spectral_radius() };
    Ok(SpectralStats { spectral_radius, frobenius: a.frobenius(), trace: a.trace() })
}

/// `X = sum_{λ_i < 0} v_i v_i^T`, the projector onto the negative eigenspace.
/// It is PSD with every diagonal entry at most one.
pub fn negative_eigenspace_psd(e: &EigenDecomposition) -> SymmetricMatrix {
    e.outer_sum(e.negative_indices(), |_| 1.0)
}

/// The objective `-½⟨X, A⟩` of the negative-eigenspace certificate, which for
/// a traceless `A` equals `E(A) / 4`.
pub fn sdp_energy_bound(a: &SymmetricMatrix) -> Result<f64> {
    let n = a.dim();
    if n == 0 {
        return Ok(0.0);
    }
    let trace = a.trace();
    if trace.abs() > n as f64 * DEFAULT_TOL * a.frobenius() {
        return Err(Error::Precondition(format!("trace must be zero, got {trace:e}")));
    }
    let e = eigen_decompose(a, DEFAULT_TOL)?;
    let x = negative_eigenspace_psd(&e);
    Ok(-0.5 * x.inner(a))
}
