//! Oracles and fixtures shared by the integration tests.
#![allow(dead_code)]

use std::collections::VecDeque;

use lambda_cdp::graph::{Graph, VertexSet};
use lambda_cdp::spectral::{cluster_projector, Spectrum};

/// Single-source BFS distances, written independently of the library.
pub fn bfs(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let n = g.order();
    let mut dist = vec![None; n];
    dist[source - 1] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u - 1].unwrap();
        for w in 1..=n {
            if g.has_edge(u, w) && dist[w - 1].is_none() {
                dist[w - 1] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Minimum over sources of single-source distances.
pub fn distance_to_set(g: &Graph, sources: &VertexSet) -> Vec<usize> {
    let mut best = vec![usize::MAX; g.order()];
    for s in sources.iter() {
        for (v, d) in bfs(g, s).into_iter().enumerate() {
            if let Some(d) = d {
                best[v] = best[v].min(d);
            }
        }
    }
    best
}

/// Blocks of vertices grouped by distance to `core`.
pub fn layers_from(g: &Graph, core: &VertexSet) -> Vec<VertexSet> {
    let dist = distance_to_set(g, core);
    let depth = dist.iter().copied().max().unwrap_or(0);
    (0..=depth)
        .map(|d| (1..=g.order()).filter(|&v| dist[v - 1] == d).collect())
        .collect()
}

/// `-Σ p ln p` over block sizes.
pub fn shannon(sizes: &[usize]) -> f64 {
    let n: usize = sizes.iter().sum();
    sizes
        .iter()
        .filter(|&&s| s > 0)
        .map(|&s| {
            let p = s as f64 / n as f64;
            -p * p.ln()
        })
        .sum()
}

pub fn sizes(blocks: &[VertexSet]) -> Vec<usize> {
    blocks.iter().map(VertexSet::len).collect()
}

/// Worst observed numerical-hygiene ratios, each normalised so that values
/// above 1 are violations.
#[derive(Debug, Default, Clone)]
pub struct Hygiene {
    pub spectra: usize,
    pub clusters: usize,
    pub idempotence: f64,
    pub trace: f64,
    pub reconstruction: f64,
}

impl Hygiene {
    pub fn record(&mut self, s: &Spectrum) {
        let n = s.eigen.order();
        let resid = s.tolerances.residual_for(s.matrix.frobenius_norm());
        self.spectra += 1;
        self.reconstruction = self.reconstruction.max(s.eigen.reconstruction_error(&s.matrix) / (n as f64 * resid));
        for cluster in &s.clusters {
            self.clusters += 1;
            let p = cluster_projector(&s.eigen, cluster);
            let mut worst: f64 = 0.0;
            let mut trace = 0.0;
            for i in 0..n {
                trace += p.get(i, i);
                for j in 0..n {
                    let sq: f64 = (0..n).map(|k| p.get(i, k) * p.get(k, j)).sum();
                    worst = worst.max((sq - p.get(i, j)).abs());
                }
            }
            self.idempotence = self.idempotence.max(worst / resid);
            self.trace = self.trace.max((trace - cluster.multiplicity as f64).abs() / resid);
        }
    }

    pub fn holds(&self) -> bool {
        self.idempotence <= 1.0 && self.trace <= 1.0 && self.reconstruction <= 1.0
    }
}
