//! Universal adjacency matrices, the Jacobi eigensolver, eigenvalue clusters
//! and core vertex detection.

#![allow(clippy::needless_range_loop)]

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Numerical tolerances shared by the analyses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Bound on `max |QᵀQ - I|` for computed eigenvectors.
    pub orthogonality: f64,
    /// Residual bound relative to `max(1, ‖U‖_F)`.
    pub residual: f64,
    /// Eigenvalue clustering tolerance relative to `max(1, spectral radius)`.
    pub cluster: f64,
    /// Projector diagonal entries above this are nonzero.
    pub zero: f64,
    /// Absolute tolerance on per-vertex block sums.
    pub equitable: f64,
    /// Absolute distance allowed between a user-quoted eigenvalue and the
    /// cluster it selects.
    pub target: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            orthogonality: 1e-9,
            residual: 1e-8,
            cluster: 1e-7,
            zero: 1e-8,
            equitable: 1e-6,
            target: 1e-3,
        }
    }
}

impl Tolerances {
    /// Absolute residual tolerance for a matrix of Frobenius norm `norm`.
    pub fn residual_for(&self, norm: f64) -> f64 {
        self.residual * norm.max(1.0)
    }
}

/// Coefficients of `γ_A·A + γ_D·D + γ_I·I + γ_J·J`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UniversalParams {
    gamma_a: f64,
    gamma_d: f64,
    gamma_i: f64,
    gamma_j: f64,
}

impl UniversalParams {
    pub const ADJACENCY: UniversalParams = UniversalParams::raw(1.0, 0.0, 0.0, 0.0);
    pub const LAPLACIAN: UniversalParams = UniversalParams::raw(-1.0, 1.0, 0.0, 0.0);
    pub const SIGNLESS_LAPLACIAN: UniversalParams = UniversalParams::raw(1.0, 1.0, 0.0, 0.0);
    /// `J - I - 2A`.
    pub const SEIDEL: UniversalParams = UniversalParams::raw(-2.0, 0.0, -1.0, 1.0);

    const fn raw(gamma_a: f64, gamma_d: f64, gamma_i: f64, gamma_j: f64) -> Self {
        UniversalParams { gamma_a, gamma_d, gamma_i, gamma_j }
    }

    pub fn new(gamma_a: f64, gamma_d: f64, gamma_i: f64, gamma_j: f64) -> Result<Self> {
        if gamma_a == 0.0 || !gamma_a.is_finite() {
            return Err(Error::ZeroGammaA);
        }
        Ok(UniversalParams::raw(gamma_a, gamma_d, gamma_i, gamma_j))
    }

    /// Hückel Hamiltonian `αI + βA`.
    pub fn huckel(alpha: f64, beta: f64) -> Result<Self> {
        UniversalParams::new(beta, 0.0, alpha, 0.0)
    }

    pub fn gamma_a(&self) -> f64 {
        self.gamma_a
    }
    pub fn gamma_d(&self) -> f64 {
        self.gamma_d
    }
    pub fn gamma_i(&self) -> f64 {
        self.gamma_i
    }
    pub fn gamma_j(&self) -> f64 {
        self.gamma_j
    }

    pub fn as_array(&self) -> [f64; 4] {
        [self.gamma_a, self.gamma_d, self.gamma_i, self.gamma_j]
    }
}

/// Dense real symmetric matrix, stored in full and mirrored on write.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix { n, data: vec![0.0; n * n] }
    }

    /// Accepts rows only if they form an exactly symmetric square matrix.
    pub fn from_rows(rows: &[Vec<f64>]) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        for i in 0..n {
            for j in 0..i {
                if rows[i][j] != rows[j][i] {
                    return None;
                }
            }
        }
        Some(SymmetricMatrix { n, data: rows.concat() })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value;
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }
}

/// `U(i, j) = γ_A·a_ij + γ_J + [i = j]·(γ_D·deg(i) + γ_I)`.
pub fn build_universal(g: &Graph, p: &UniversalParams) -> SymmetricMatrix {
    let n = g.order();
    let mut m = SymmetricMatrix::zeros(n);
    for i in 0..n {
        for j in 0..=i {
            let mut value = p.gamma_j;
            if i == j {
                value += p.gamma_d * g.degree(i + 1) as f64 + p.gamma_i;
            } else if g.has_edge(i + 1, j + 1) {
                value += p.gamma_a;
            }
            m.set(i, j, value);
        }
    }
    m
}

/// Full eigendecomposition of a symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSystem {
    /// Eigenvalues in ascending order.
    pub values: Vec<f64>,
    /// `vectors[i]` is the unit eigenvector paired with `values[i]`.
    pub vectors: Vec<Vec<f64>>,
    /// `max_i ‖U xᵢ - λᵢ xᵢ‖`.
    pub residual: f64,
    /// `max |QᵀQ - I|`.
    pub orthogonality_error: f64,
    /// Frobenius norm of the decomposed matrix.
    pub matrix_norm: f64,
    pub sweeps: usize,
}

impl EigenSystem {
    pub fn order(&self) -> usize {
        self.values.len()
    }

    pub fn spectral_radius(&self) -> f64 {
        self.values.iter().fold(0.0, |acc: f64, v| acc.max(v.abs()))
    }

    /// Max entrywise deviation of `Q·diag(values)·Qᵀ` from `m`.
    pub fn reconstruction_error(&self, m: &SymmetricMatrix) -> f64 {
        let n = self.order();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let approx: f64 = (0..n)
                    .map(|k| self.vectors[k][i] * self.values[k] * self.vectors[k][j])
                    .sum();
                worst = worst.max((approx - m.get(i, j)).abs());
            }
        }
        worst
    }
}

const MAX_SWEEPS: usize = 100;
const CONVERGENCE: f64 = 1e-12;

fn off_diagonal_norm(a: &[Vec<f64>]) -> f64 {
    let mut sum = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                sum += x * x;
            }
        }
    }
    sum.sqrt()
}

/// Cyclic Jacobi rotations. Converged when the off-diagonal Frobenius norm is
/// at most `1e-12·‖m‖_F`; gives up after 100 sweeps.
pub fn eigendecompose(m: &SymmetricMatrix, tol: &Tolerances) -> Result<EigenSystem> {
    let n = m.order();
    let mut a = m.to_rows();
    // v[i] is row i of the accumulated rotation, so column k is v[.][k]
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let norm = m.frobenius_norm();
    let target = CONVERGENCE * norm;

    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= target {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, off_norm: off });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let tau = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for row in v.iter_mut() {
                    let (vkp, vkq) = (row[p], row[q]);
                    row[p] = c * vkp - s * vkq;
                    row[q] = s * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i][i].total_cmp(&a[j][j]));
    let values: Vec<f64> = order.iter().map(|&k| a[k][k]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&k| (0..n).map(|i| v[i][k]).collect())
        .collect();

    let residual = vectors
        .iter()
        .zip(&values)
        .map(|(x, &lambda)| {
            m.mul_vec(x)
                .iter()
                .zip(x)
                .map(|(ux, xi)| (ux - lambda * xi).powi(2))
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max);
    let mut orthogonality_error: f64 = 0.0;
    for i in 0..n {
        for j in 0..=i {
            let dot: f64 = vectors[i].iter().zip(&vectors[j]).map(|(a, b)| a * b).sum();
            let expected = if i == j { 1.0 } else { 0.0 };
            orthogonality_error = orthogonality_error.max((dot - expected).abs());
        }
    }

    let residual_tol = tol.residual_for(norm);
    if residual > residual_tol {
        return Err(Error::Residual { residual, tolerance: residual_tol });
    }
    if orthogonality_error > tol.orthogonality {
        return Err(Error::Invariant(format!(
            "eigenvectors not orthonormal (error {orthogonality_error:e})"
        )));
    }
    Ok(EigenSystem { values, vectors, residual, orthogonality_error, matrix_norm: norm, sweeps })
}

/// A numerically distinct eigenvalue and the eigensystem columns spanning its
/// eigenspace.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EigenCluster {
    /// Mean of the member eigenvalues.
    pub value: f64,
    pub multiplicity: usize,
    pub columns: Vec<usize>,
}

/// Groups ascending eigenvalues left to right. A value joins the current
/// cluster when it lies within `tol·max(1, ρ)` of the running mean.
pub fn cluster_eigenvalues(es: &EigenSystem, tol: f64) -> Vec<EigenCluster> {
    let width = tol * es.spectral_radius().max(1.0);
    let mut clusters: Vec<EigenCluster> = Vec::new();
    for (i, &value) in es.values.iter().enumerate() {
        match clusters.last_mut() {
            Some(c) if (value - c.value).abs() <= width => {
                c.value = (c.value * c.multiplicity as f64 + value) / (c.multiplicity + 1) as f64;
                c.multiplicity += 1;
                c.columns.push(i);
            }
            _ => clusters.push(EigenCluster { value, multiplicity: 1, columns: vec![i] }),
        }
    }
    clusters
}

/// Index of the cluster nearest `value`, if within `tolerance`.
pub fn nearest_cluster(clusters: &[EigenCluster], value: f64, tolerance: f64) -> Result<usize> {
    let (index, nearest) = clusters
        .iter()
        .enumerate()
        .map(|(i, c)| (i, c.value))
        .min_by(|a, b| (a.1 - value).abs().total_cmp(&(b.1 - value).abs()))
        .ok_or(Error::NoSuchEigenvalue { requested: value, nearest: f64::NAN, tolerance })?;
    if (nearest - value).abs() > tolerance {
        return Err(Error::NoSuchEigenvalue { requested: value, nearest, tolerance });
    }
    Ok(index)
}

/// λ-core and λ-core-forbidden vertices of one eigenvalue cluster.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoreSet {
    pub cluster: EigenCluster,
    pub core: VertexSet,
    pub core_forbidden: VertexSet,
    /// Diagonal of the orthogonal projector onto the eigenspace.
    pub projector_diagonal: Vec<f64>,
}

/// Diagonal of `P = Σ x xᵀ` over the cluster's columns. A vertex is core when
/// its entry exceeds `zero_tol`; this does not depend on the basis chosen for
/// the eigenspace.
pub fn core_vertices(es: &EigenSystem, cluster: &EigenCluster, zero_tol: f64) -> Result<CoreSet> {
    let n = es.order();
    check_cluster(es, cluster)?;
    let mut diagonal = vec![0.0; n];
    for &c in &cluster.columns {
        for (d, x) in diagonal.iter_mut().zip(&es.vectors[c]) {
            *d += x * x;
        }
    }
    let trace: f64 = diagonal.iter().sum();
    if (trace - cluster.multiplicity as f64).abs() > 1e-8 * cluster.multiplicity as f64 {
        return Err(Error::Invariant(format!(
            "projector trace {trace} differs from multiplicity {}",
            cluster.multiplicity
        )));
    }
    let core: VertexSet = (1..=n).filter(|&v| diagonal[v - 1] > zero_tol).collect();
    if core.is_empty() {
        return Err(Error::Invariant("eigenspace projector has zero diagonal".into()));
    }
    let core_forbidden = core.complement(n);
    Ok(CoreSet { cluster: cluster.clone(), core, core_forbidden, projector_diagonal: diagonal })
}

fn check_cluster(es: &EigenSystem, cluster: &EigenCluster) -> Result<()> {
    let n = es.order();
    if cluster.columns.is_empty()
        || cluster.columns.len() != cluster.multiplicity
        || cluster.columns.iter().any(|&c| c >= n)
    {
        return Err(Error::ClusterMismatch);
    }
    let spread = cluster
        .columns
        .iter()
        .map(|&c| (es.values[c] - cluster.value).abs())
        .fold(0.0, f64::max);
    if spread > 1e-6 * es.spectral_radius().max(1.0) {
        return Err(Error::ClusterMismatch);
    }
    Ok(())
}

/// Orthogonal projector onto a cluster's eigenspace, as a dense matrix.
pub fn cluster_projector(es: &EigenSystem, cluster: &EigenCluster) -> SymmetricMatrix {
    let n = es.order();
    let mut p = SymmetricMatrix::zeros(n);
    for i in 0..n {
        for j in 0..=i {
            let value = cluster.columns.iter().map(|&c| es.vectors[c][i] * es.vectors[c][j]).sum();
            p.set(i, j, value);
        }
    }
    p
}

/// A universal matrix together with its eigensystem and clusters.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub matrix: SymmetricMatrix,
    pub eigen: EigenSystem,
    pub clusters: Vec<EigenCluster>,
    pub tolerances: Tolerances,
}

impl Spectrum {
    pub fn of_matrix(matrix: SymmetricMatrix, tolerances: &Tolerances) -> Result<Self> {
        let eigen = eigendecompose(&matrix, tolerances)?;
        let clusters = cluster_eigenvalues(&eigen, tolerances.cluster);
        Ok(Spectrum { matrix, eigen, clusters, tolerances: *tolerances })
    }

    pub fn new(g: &Graph, params: &UniversalParams, tolerances: &Tolerances) -> Result<Self> {
        Spectrum::of_matrix(build_universal(g, params), tolerances)
    }

    /// Clustering width in absolute terms.
    pub fn cluster_width(&self) -> f64 {
        self.tolerances.cluster * self.eigen.spectral_radius().max(1.0)
    }

    /// Cluster within the clustering tolerance of `value`, if any.
    pub fn cluster_at(&self, value: f64) -> Option<&EigenCluster> {
        nearest_cluster(&self.clusters, value, self.cluster_width())
            .ok()
            .map(|i| &self.clusters[i])
    }

    /// Cluster selected by a user-quoted (possibly rounded) eigenvalue.
    pub fn target(&self, value: f64) -> Result<&EigenCluster> {
        let tol = self.tolerances.target.max(self.cluster_width());
        nearest_cluster(&self.clusters, value, tol).map(|i| &self.clusters[i])
    }

    pub fn core_set(&self, cluster: &EigenCluster) -> Result<CoreSet> {
        core_vertices(&self.eigen, cluster, self.tolerances.zero)
    }
}

/// Dimension of the kernel of the adjacency matrix.
pub fn nullity(g: &Graph, tol: &Tolerances) -> Result<usize> {
    let spectrum = Spectrum::new(g, &UniversalParams::ADJACENCY, tol)?;
    Ok(spectrum.cluster_at(0.0).map_or(0, |c| c.multiplicity))
}
