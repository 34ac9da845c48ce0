//! Small-graph generation: every connected graph up to isomorphism for tiny
//! orders, and random connected graphs.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::Graph;
use crate::symmetry::refined_colours;

/// Largest order handled by [`connected_graphs`]; canonical forms are packed
/// into a `u64` adjacency bitmap.
pub const MAX_ENUMERATION_ORDER: usize = 10;

/// Canonical adjacency bitmap: the lexicographically smallest upper-triangle
/// bitmap over all vertex orders that list the colour-refinement cells in
/// canonical order. Isomorphic graphs get equal forms.
pub fn canonical_form(g: &Graph) -> u64 {
    let n = g.order();
    assert!(n <= MAX_ENUMERATION_ORDER, "canonical_form supports n ≤ {MAX_ENUMERATION_ORDER}");
    let cells = canonical_cells(g);
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut best = u64::MAX;
    permute_cells(g, &cells, 0, &mut order, &mut best);
    best
}

// Refinement cells in order of their colour. Colour names depend only on
// the isomorphism class, so this order is canonical.
fn canonical_cells(g: &Graph) -> Vec<Vec<usize>> {
    let colours = refined_colours(g);
    let count = colours.iter().max().map_or(0, |m| m + 1);
    let mut cells = vec![Vec::new(); count];
    for (v, &c) in colours.iter().enumerate() {
        cells[c].push(v + 1);
    }
    cells.retain(|c| !c.is_empty());
    cells
}

fn permute_cells(g: &Graph, cells: &[Vec<usize>], depth: usize, order: &mut Vec<usize>, best: &mut u64) {
    if depth == cells.len() {
        let code = bitmap(g, order);
        if code < *best {
            *best = code;
        }
        return;
    }
    let mut cell = cells[depth].clone();
    permutations(&mut cell, 0, &mut |perm| {
        let len = order.len();
        order.extend_from_slice(perm);
        permute_cells(g, cells, depth + 1, order, best);
        order.truncate(len);
    });
}

fn permutations(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, visit);
        items.swap(k, i);
    }
}

fn bitmap(g: &Graph, order: &[usize]) -> u64 {
    let mut code = 0u64;
    let mut bit = 0;
    for i in 0..order.len() {
        for j in i + 1..order.len() {
            if g.has_edge(order[i], order[j]) {
                code |= 1 << bit;
            }
            bit += 1;
        }
    }
    code
}

/// All graphs (connected or not) on `n` vertices, one per isomorphism class.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=MAX_ENUMERATION_ORDER).contains(&n));
    if n == 1 {
        return vec![Graph::new(1, []).expect("K1")];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for smaller in all_graphs(n - 1) {
        for mask in 0u32..(1 << (n - 1)) {
            let edges = smaller
                .edges()
                .iter()
                .copied()
                .chain((1..n).filter(|&v| mask & (1 << (v - 1)) != 0).map(|v| (v, n)));
            let g = Graph::new(n, edges).expect("valid extension");
            if seen.insert(canonical_form(&g)) {
                out.push(g);
            }
        }
    }
    out
}

/// Connected graphs on `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// Connected graphs on `1..=max_n` vertices, one per isomorphism class.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut layer = Vec::new();
    for n in 1..=max_n {
        layer = if n == 1 { all_graphs(1) } else { extend_layer(&layer, n) };
        out.extend(layer.iter().filter(|g| g.is_connected()).cloned());
    }
    out
}

fn extend_layer(previous: &[Graph], n: usize) -> Vec<Graph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for smaller in previous {
        for mask in 0u32..(1 << (n - 1)) {
            let edges = smaller
                .edges()
                .iter()
                .copied()
                .chain((1..n).filter(|&v| mask & (1 << (v - 1)) != 0).map(|v| (v, n)));
            let g = Graph::new(n, edges).expect("valid extension");
            if seen.insert(canonical_form(&g)) {
                out.push(g);
            }
        }
    }
    out
}

/// Random connected graph: a uniformly shuffled random recursive tree plus
/// each remaining pair independently with probability `extra_edge_p`.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, extra_edge_p: f64, rng: &mut R) -> Graph {
    assert!(n >= 1);
    let mut labels: Vec<usize> = (1..=n).collect();
    labels.shuffle(rng);
    let mut edges = HashSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (u, v) = (labels[i], labels[j]);
        edges.insert((u.min(v), u.max(v)));
    }
    for u in 1..=n {
        for v in u + 1..=n {
            if !edges.contains(&(u, v)) && rng.gen_bool(extra_edge_p) {
                edges.insert((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("valid random graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_path};
    use rand::SeedableRng;

    #[test]
    fn counts_match_known_sequences() {
        // graphs: 1, 2, 4, 11, 34, 156; connected: 1, 1, 2, 6, 21, 112
        let all: Vec<usize> = (1..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
        assert_eq!(connected_graphs_up_to(6).len(), 143);
    }

    #[test]
    fn canonical_form_is_label_invariant() {
        let p4 = make_path(4).unwrap();
        let relabelled = Graph::new(4, [(3, 1), (1, 4), (4, 2)]).unwrap();
        assert_eq!(canonical_form(&p4), canonical_form(&relabelled));
        assert_ne!(canonical_form(&p4), canonical_form(&Graph::new(4, [(1, 2), (1, 3), (1, 4)]).unwrap()));
        assert_ne!(canonical_form(&make_cycle(6).unwrap()), canonical_form(&Graph::new(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap()));
    }

    #[test]
    fn random_graphs_are_connected() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for n in 1..15 {
            let g = random_connected_graph(n, 0.2, &mut rng);
            assert_eq!(g.order(), n);
            assert!(g.is_connected());
        }
    }
}
