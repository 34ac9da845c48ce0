//! Core distance partitions, equitable partitions and divisor matrices.

#![allow(clippy::needless_range_loop)]

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{check_partition, Graph, VertexSet};
use crate::spectral::{
    cluster_eigenvalues, eigendecompose, nearest_cluster, CoreSet, EigenCluster, EigenSystem,
    SymmetricMatrix, Tolerances,
};

/// Vertices grouped by distance to the nearest λ-core vertex. Block `i`
/// holds the vertices at distance exactly `i`; block 0 is the core.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoreDistancePartition {
    pub cluster: EigenCluster,
    pub blocks: Vec<VertexSet>,
}

impl CoreDistancePartition {
    /// Largest distance to the core.
    pub fn d_max(&self) -> usize {
        self.blocks.len() - 1
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(VertexSet::len).sum()
    }

    pub fn core(&self) -> &VertexSet {
        &self.blocks[0]
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(VertexSet::len).collect()
    }

    /// Distance of every vertex to the core; entry `i` is vertex `i + 1`.
    pub fn distances(&self) -> Vec<usize> {
        let mut d = vec![0; self.order()];
        for (i, block) in self.blocks.iter().enumerate() {
            for v in block.iter() {
                d[v - 1] = i;
            }
        }
        d
    }
}

pub fn compute_cdp(g: &Graph, cs: &CoreSet) -> Result<CoreDistancePartition> {
    if cs.core.is_empty() {
        return Err(Error::EmptySources);
    }
    let distances = g.multi_source_distances(&cs.core)?;
    let d_max = distances.iter().copied().max().unwrap_or(0);
    let mut blocks = vec![Vec::new(); d_max + 1];
    for (i, &d) in distances.iter().enumerate() {
        blocks[d].push(i + 1);
    }
    Ok(CoreDistancePartition {
        cluster: cs.cluster.clone(),
        blocks: blocks.into_iter().map(VertexSet::new).collect(),
    })
}

/// Vertices at distance two or more from the core.
pub fn remote_core_forbidden(p: &CoreDistancePartition) -> VertexSet {
    p.blocks.iter().skip(2).flat_map(VertexSet::iter).collect()
}

/// Quotient matrix of an equitable partition: `B(r, s)` is the common value
/// of `Σ_{u ∈ V_s} U(v, u)` over `v ∈ V_r`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DivisorMatrix {
    pub entries: Vec<Vec<f64>>,
    pub block_sizes: Vec<usize>,
}

impl DivisorMatrix {
    pub fn order(&self) -> usize {
        self.block_sizes.len()
    }

    pub fn get(&self, r: usize, s: usize) -> f64 {
        self.entries[r][s]
    }
}

/// Two vertices of block `row` whose sums into block `col` differ.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquitabilityWitness {
    pub row: usize,
    pub col: usize,
    pub vertices: (usize, usize),
    pub sums: (f64, f64),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Equitability {
    Equitable(DivisorMatrix),
    NotEquitable(EquitabilityWitness),
}

impl Equitability {
    pub fn divisor(&self) -> Option<&DivisorMatrix> {
        match self {
            Equitability::Equitable(b) => Some(b),
            Equitability::NotEquitable(_) => None,
        }
    }
}

/// Tests whether `blocks` is equitable for `u`, within `tol` on the block
/// sums.
pub fn check_equitable(u: &SymmetricMatrix, blocks: &[VertexSet], tol: f64) -> Result<Equitability> {
    let n = u.order();
    check_partition(blocks, n)?;
    let k = blocks.len();
    let mut entries = vec![vec![0.0; k]; k];
    for (r, block_r) in blocks.iter().enumerate() {
        for (s, block_s) in blocks.iter().enumerate() {
            let sum = |v: usize| block_s.iter().map(|w| u.get(v - 1, w - 1)).sum::<f64>();
            let first = block_r.as_slice()[0];
            let reference = sum(first);
            for v in block_r.iter().skip(1) {
                let other = sum(v);
                if (other - reference).abs() > tol {
                    return Ok(Equitability::NotEquitable(EquitabilityWitness {
                        row: r,
                        col: s,
                        vertices: (first, v),
                        sums: (reference, other),
                    }));
                }
            }
            entries[r][s] = reference;
        }
    }
    Ok(Equitability::Equitable(DivisorMatrix {
        entries,
        block_sizes: blocks.iter().map(VertexSet::len).collect(),
    }))
}

/// `max |U·C - C·B|` where `C` is the characteristic matrix of `blocks`.
pub fn quotient_residual(u: &SymmetricMatrix, blocks: &[VertexSet], b: &DivisorMatrix) -> f64 {
    let n = u.order();
    let mut block_of = vec![0; n];
    for (r, block) in blocks.iter().enumerate() {
        for v in block.iter() {
            block_of[v - 1] = r;
        }
    }
    let mut worst: f64 = 0.0;
    for v in 0..n {
        for (s, block) in blocks.iter().enumerate() {
            let uc: f64 = block.iter().map(|w| u.get(v, w - 1)).sum();
            worst = worst.max((uc - b.get(block_of[v], s)).abs());
        }
    }
    worst
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DivisorEigenpair {
    pub value: f64,
    /// Eigenvector of `B`, normalised to unit length in the size-weighted
    /// inner product `Σ |V_r| x_r²`.
    pub vector: Vec<f64>,
    /// The same eigenvector of the symmetrised matrix `Δ^{1/2} B Δ^{-1/2}`.
    pub symmetric_vector: Vec<f64>,
}

/// Eigenpairs of `B` in ascending order, via the symmetric similarity
/// `S = Δ^{1/2} B Δ^{-1/2}` with `Δ = diag(block sizes)`.
pub fn divisor_spectrum(b: &DivisorMatrix, tol: &Tolerances) -> Result<Vec<DivisorEigenpair>> {
    let k = b.order();
    let scale = b.entries.iter().flatten().fold(1.0f64, |m, x| m.max(x.abs()));
    let sizes: Vec<f64> = b.block_sizes.iter().map(|&s| s as f64).collect();
    let mut s = SymmetricMatrix::zeros(k);
    for r in 0..k {
        for c in 0..=r {
            let deviation = sizes[r] * b.get(r, c) - sizes[c] * b.get(c, r);
            if deviation.abs() > tol.equitable * scale * sizes[r].max(sizes[c]) {
                return Err(Error::AsymmetricDivisor { row: r, col: c, deviation });
            }
            let value = (sizes[r] * b.get(r, c) + sizes[c] * b.get(c, r)) / (2.0 * (sizes[r] * sizes[c]).sqrt());
            s.set(r, c, value);
        }
    }
    let es = eigendecompose(&s, tol)?;
    Ok(es
        .values
        .iter()
        .zip(&es.vectors)
        .map(|(&value, y)| DivisorEigenpair {
            value,
            vector: y.iter().zip(&sizes).map(|(yi, si)| yi / si.sqrt()).collect(),
            symmetric_vector: y.clone(),
        })
        .collect())
}

/// Checks that every divisor eigenvalue lies in a cluster of `U` and that
/// its multiplicity in `B` does not exceed the one in `U`.
pub fn check_divisibility(
    spectrum: &[DivisorEigenpair],
    u_clusters: &[EigenCluster],
    width: f64,
) -> Result<()> {
    for b_cluster in cluster_divisor(spectrum, width) {
        let i = nearest_cluster(u_clusters, b_cluster.value, width)
            .map_err(|_| Error::DivisibilityViolated { value: b_cluster.value })?;
        if b_cluster.multiplicity > u_clusters[i].multiplicity {
            return Err(Error::MultiplicityExceeds {
                mu: b_cluster.value,
                m_b: b_cluster.multiplicity,
                m_u: u_clusters[i].multiplicity,
            });
        }
    }
    Ok(())
}

fn cluster_divisor(spectrum: &[DivisorEigenpair], width: f64) -> Vec<EigenCluster> {
    // reuse the eigensystem clustering with an absolute width
    let es = EigenSystem {
        values: spectrum.iter().map(|p| p.value).collect(),
        vectors: spectrum.iter().map(|p| p.symmetric_vector.clone()).collect(),
        residual: 0.0,
        orthogonality_error: 0.0,
        matrix_norm: 0.0,
        sweeps: 0,
    };
    // cluster_eigenvalues scales by max(1, ρ); undo that scaling
    let scale = es.spectral_radius().max(1.0);
    cluster_eigenvalues(&es, width / scale)
}

/// Outcome of rebuilding the μ-CDP from an equitable λ-CDP.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReconstructionResult {
    /// The eigenvalue of `B` that was matched.
    pub mu: f64,
    /// `X_B^0, X_B^1, ...` as 1-based block indices of the λ-CDP.
    pub index_layers: Vec<Vec<usize>>,
    /// Union of the λ-CDP blocks indexed by `X_B^0`; always inside `CV_μ`.
    pub core_subset: VertexSet,
    /// Present only when `m_U(μ) = m_B(μ)`.
    pub full_cdp: Option<CoreDistancePartition>,
    /// `(m_U(μ), m_B(μ))`.
    pub multiplicities: (usize, usize),
    /// Block indices never reached by the layer recursion.
    pub stranded_indices: Vec<usize>,
}

/// Rebuilds as much of the μ-CDP as the divisor matrix of `p_lambda` allows.
///
/// `b` must be the divisor matrix of `p_lambda` for the matrix that produced
/// `es`. `mu` may be rounded; it is matched to the nearest eigenvalue of `b`
/// within `tol.target`.
pub fn reconstruct_cdp(
    p_lambda: &CoreDistancePartition,
    b: &DivisorMatrix,
    mu: f64,
    es: &EigenSystem,
    tol: &Tolerances,
) -> Result<ReconstructionResult> {
    let k = b.order();
    if k != p_lambda.blocks.len() || b.block_sizes != p_lambda.block_sizes() || p_lambda.order() != es.order() {
        return Err(Error::LengthMismatch { expected: p_lambda.blocks.len(), got: k });
    }
    let width = tol.cluster * es.spectral_radius().max(1.0);
    let spectrum = divisor_spectrum(b, tol)?;
    let b_clusters = cluster_divisor(&spectrum, width);
    let b_index = nearest_cluster(&b_clusters, mu, tol.target.max(width)).map_err(|_| {
        let nearest = b_clusters
            .iter()
            .map(|c| c.value)
            .min_by(|x, y| (x - mu).abs().total_cmp(&(y - mu).abs()))
            .unwrap_or(f64::NAN);
        Error::NotDivisorEigenvalue { mu, nearest }
    })?;
    let b_cluster = &b_clusters[b_index];
    let u_clusters = cluster_eigenvalues(es, tol.cluster);
    let u_index = nearest_cluster(&u_clusters, b_cluster.value, width)
        .map_err(|_| Error::DivisibilityViolated { value: b_cluster.value })?;
    let u_cluster = &u_clusters[u_index];
    let (m_u, m_b) = (u_cluster.multiplicity, b_cluster.multiplicity);
    if m_b > m_u {
        return Err(Error::MultiplicityExceeds { mu: b_cluster.value, m_b, m_u });
    }

    // Projector diagonal of S's eigenspace: row r is nonzero in some basis
    // vector of B's eigenspace exactly when this entry is positive.
    let support: Vec<usize> = (0..k)
        .filter(|&r| {
            let d: f64 = b_cluster
                .columns
                .iter()
                .map(|&c| spectrum[c].symmetric_vector[r].powi(2))
                .sum();
            d > tol.zero
        })
        .map(|r| r + 1)
        .collect();
    let union_of = |indices: &[usize]| -> VertexSet {
        indices.iter().flat_map(|&i| p_lambda.blocks[i - 1].iter()).collect()
    };
    let core_subset = union_of(&support);

    let mut index_layers = vec![support];
    let mut stranded_indices = Vec::new();
    let mut full_cdp = None;
    if m_u == m_b {
        let mut used = vec![false; k + 1];
        for &i in &index_layers[0] {
            used[i] = true;
        }
        loop {
            let previous = index_layers.last().expect("at least one layer");
            let mut next: Vec<usize> = previous
                .iter()
                .flat_map(|&j| [j.checked_sub(1), Some(j + 1)])
                .flatten()
                .filter(|&i| (1..=k).contains(&i) && !used[i])
                .collect();
            next.sort_unstable();
            next.dedup();
            if next.is_empty() {
                break;
            }
            for &i in &next {
                used[i] = true;
            }
            index_layers.push(next);
        }
        stranded_indices = (1..=k).filter(|&i| !used[i]).collect();
        if stranded_indices.is_empty() {
            full_cdp = Some(CoreDistancePartition {
                cluster: u_cluster.clone(),
                blocks: index_layers.iter().map(|layer| union_of(layer)).collect(),
            });
        }
    }
    Ok(ReconstructionResult {
        mu: b_cluster.value,
        index_layers,
        core_subset,
        full_cdp,
        multiplicities: (m_u, m_b),
        stranded_indices,
    })
}
