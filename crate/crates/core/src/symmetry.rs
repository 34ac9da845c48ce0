//! Automorphism orbits by colour refinement plus backtracking, and the
//! orbit-consistency checks for core sets and core distance partitions.

use std::collections::HashMap;

use serde::Serialize;

use crate::cdp::CoreDistancePartition;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::spectral::CoreSet;

pub const DEFAULT_VERTEX_CAP: usize = 64;

/// Orbits of the automorphism group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitPartition {
    /// Disjoint orbits covering `{1..n}`, ordered by smallest member.
    pub orbits: Vec<VertexSet>,
    /// Automorphisms discovered during the search; `g[v - 1]` is the image of
    /// `v`. They generate a group with exactly these orbits.
    pub generators: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn orbit_of(&self, v: usize) -> &VertexSet {
        self.orbits
            .iter()
            .find(|o| o.contains(v))
            .expect("orbits cover every vertex")
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(VertexSet::len).collect()
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Refines two colourings of the same graph in lock step to the coarsest
/// equitable refinement. Colour names are shared between the two sides, so
/// colour `c` on the left corresponds to colour `c` on the right. Returns
/// false when the two sides stop matching.
fn refine_pair(g: &Graph, left: &mut [usize], right: &mut [usize]) -> bool {
    let n = g.order();
    let mut classes = count_colours(left);
    loop {
        let signature = |colours: &[usize], v: usize| {
            let mut nbr: Vec<usize> = g.neighbors(v + 1).iter().map(|&w| colours[w - 1]).collect();
            nbr.sort_unstable();
            (colours[v], nbr)
        };
        let sig_left: Vec<_> = (0..n).map(|v| signature(left, v)).collect();
        let sig_right: Vec<_> = (0..n).map(|v| signature(right, v)).collect();
        let mut all: Vec<_> = sig_left.iter().chain(&sig_right).cloned().collect();
        all.sort_unstable();
        all.dedup();
        let rank: HashMap<_, usize> = all.into_iter().enumerate().map(|(i, s)| (s, i)).collect();
        for v in 0..n {
            left[v] = rank[&sig_left[v]];
            right[v] = rank[&sig_right[v]];
        }
        let mut hist_left = vec![0usize; rank.len()];
        let mut hist_right = vec![0usize; rank.len()];
        for v in 0..n {
            hist_left[left[v]] += 1;
            hist_right[right[v]] += 1;
        }
        if hist_left != hist_right {
            return false;
        }
        let now = count_colours(left);
        if now == classes {
            return true;
        }
        classes = now;
    }
}

fn count_colours(colours: &[usize]) -> usize {
    let mut c = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn degree_colours(g: &Graph) -> Vec<usize> {
    g.vertices().map(|v| g.degree(v)).collect()
}

/// Coarsest equitable refinement of the degree partition (1-dimensional
/// Weisfeiler-Leman). Every orbit lies inside one of these cells.
pub fn color_refinement(g: &Graph) -> Vec<VertexSet> {
    cells(&refined_colours(g))
}

/// Stable colours of the refinement, one per vertex. Colour names depend
/// only on the isomorphism class of the graph.
pub(crate) fn refined_colours(g: &Graph) -> Vec<usize> {
    let mut left = degree_colours(g);
    let mut right = left.clone();
    refine_pair(g, &mut left, &mut right);
    left
}

fn cells(colours: &[usize]) -> Vec<VertexSet> {
    let mut by_colour: HashMap<usize, Vec<usize>> = HashMap::new();
    for (v, &c) in colours.iter().enumerate() {
        by_colour.entry(c).or_default().push(v + 1);
    }
    let mut out: Vec<VertexSet> = by_colour.into_values().map(VertexSet::new).collect();
    out.sort();
    out
}

fn individualize(colours: &mut [usize], v: usize) {
    let fresh = colours.iter().max().map_or(0, |m| m + 1);
    colours[v] = fresh;
}

/// Searches for an automorphism consistent with the paired colourings.
fn extend(g: &Graph, left: Vec<usize>, right: Vec<usize>) -> Option<Vec<usize>> {
    let n = g.order();
    let mut left = left;
    let mut right = right;
    if !refine_pair(g, &mut left, &mut right) {
        return None;
    }
    // smallest non-singleton cell on the left, by colour
    let mut count = vec![0usize; left.iter().max().map_or(0, |m| m + 1)];
    for &c in &left {
        count[c] += 1;
    }
    let target = (0..count.len()).find(|&c| count[c] > 1);
    let Some(colour) = target else {
        let mut image_of_colour = vec![0; count.len()];
        for v in 0..n {
            image_of_colour[right[v]] = v + 1;
        }
        let sigma: Vec<usize> = left.iter().map(|&c| image_of_colour[c]).collect();
        return is_automorphism(g, &sigma).then_some(sigma);
    };
    let x = left.iter().position(|&c| c == colour).expect("cell is non-empty");
    for y in (0..n).filter(|&y| right[y] == colour) {
        let mut l = left.clone();
        let mut r = right.clone();
        individualize(&mut l, x);
        individualize(&mut r, y);
        if let Some(sigma) = extend(g, l, r) {
            return Some(sigma);
        }
    }
    None
}

/// True when `sigma` (with `sigma[v - 1]` the image of `v`) maps edges onto
/// edges.
pub fn is_automorphism(g: &Graph, sigma: &[usize]) -> bool {
    sigma.len() == g.order()
        && g.edges().iter().all(|&(u, v)| g.has_edge(sigma[u - 1], sigma[v - 1]))
}

/// Exact orbit partition of `Aut(g)`.
///
/// For every pair of vertices that share a refinement cell and are not yet
/// known to share an orbit, looks for an automorphism mapping one to the
/// other. Found automorphisms are merged into a union-find, so each pair is
/// decided at most once.
pub fn automorphism_orbits(g: &Graph, vertex_cap: usize) -> Result<OrbitPartition> {
    let n = g.order();
    if n > vertex_cap {
        return Err(Error::VertexCap { n, cap: vertex_cap });
    }
    let base = refined_colours(g);
    let mut uf = UnionFind::new(n);
    let mut generators = Vec::new();
    for v in 0..n {
        for w in v + 1..n {
            if base[v] != base[w] || uf.find(v) == uf.find(w) {
                continue;
            }
            let mut l = base.clone();
            let mut r = base.clone();
            individualize(&mut l, v);
            individualize(&mut r, w);
            if let Some(sigma) = extend(g, l, r) {
                for (x, &y) in sigma.iter().enumerate() {
                    uf.union(x, y - 1);
                }
                generators.push(sigma);
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|v| uf.find(v)).collect();
    Ok(OrbitPartition { orbits: cells(&roots), generators })
}

/// Result of a consistency check, with an offending orbit on failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitCheck {
    pub holds: bool,
    pub witness: Option<VertexSet>,
}

impl OrbitCheck {
    fn from_witness(witness: Option<&VertexSet>) -> Self {
        OrbitCheck { holds: witness.is_none(), witness: witness.cloned() }
    }
}

/// Every orbit is wholly core or wholly core-forbidden.
pub fn verify_core_orbit_consistency(cs: &CoreSet, op: &OrbitPartition) -> OrbitCheck {
    OrbitCheck::from_witness(
        op.orbits
            .iter()
            .find(|o| !(o.is_subset(&cs.core) || o.is_subset(&cs.core_forbidden))),
    )
}

/// Every orbit lies inside a single block of the partition.
pub fn verify_cdp_orbit_refinement(p: &CoreDistancePartition, op: &OrbitPartition) -> OrbitCheck {
    OrbitCheck::from_witness(verify_refines(&p.blocks, op))
}

/// First orbit not contained in a single block, if any.
pub fn verify_refines<'a>(blocks: &[VertexSet], op: &'a OrbitPartition) -> Option<&'a VertexSet> {
    op.orbits.iter().find(|o| !blocks.iter().any(|b| o.is_subset(b)))
}
