//! Simple undirected graphs with 1-indexed vertices.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, GraphError, ParseError, Position, Result};

/// Sorted, duplicate-free set of 1-indexed vertex labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    /// `{1, ..., n}`.
    pub fn all(n: usize) -> Self {
        VertexSet((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().chain(other.iter()).collect())
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    /// Complement within `{1, ..., n}`.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet((1..=n).filter(|&v| !self.contains(v)).collect())
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Checks that `blocks` are non-empty, pairwise disjoint and cover `{1..n}`.
pub fn check_partition(blocks: &[VertexSet], n: usize) -> Result<()> {
    let mut seen = vec![false; n];
    for (i, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::NotAPartition(format!("block {i} is empty")));
        }
        for v in block.iter() {
            if v == 0 || v > n {
                return Err(Error::NotAPartition(format!("vertex {v} out of range 1..={n}")));
            }
            if std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::NotAPartition(format!("vertex {v} appears twice")));
            }
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(Error::NotAPartition(format!("vertex {} is not covered", v + 1)));
    }
    Ok(())
}

/// Input formats understood by [`parse_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Json,
}

impl Format {
    /// Guesses the format from the first non-whitespace character.
    pub fn detect(text: &str) -> Format {
        match text.trim_start().chars().next() {
            Some('{') => Format::Json,
            _ => Format::EdgeList,
        }
    }
}

/// Connected-or-not simple undirected graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    // normalised (u, v) with u < v, sorted lexicographically
    edges: Vec<(usize, usize)>,
    // adjacency[v - 1] holds the sorted 1-indexed neighbours of v
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n ≥ 1` vertices. Rejects loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> std::result::Result<Self, GraphError> {
        let mut builder = Builder::new(n)?;
        for (u, v) in edges {
            builder.add(u, v)?;
        }
        Ok(builder.finish())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v - 1].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u >= 1 && u <= self.n && self.adjacency[u - 1].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    fn check_vertex(&self, v: usize) -> std::result::Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// True iff a BFS from vertex 1 reaches every vertex.
    pub fn is_connected(&self) -> bool {
        self.bfs(&[1]).iter().all(Option::is_some)
    }

    fn bfs(&self, sources: &[usize]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s - 1].is_none() {
                dist[s - 1] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u - 1].unwrap_or_default();
            for &w in self.neighbors(u) {
                if dist[w - 1].is_none() {
                    dist[w - 1] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path distance from every vertex to the nearest member of
    /// `sources`. Entry `i` belongs to vertex `i + 1`.
    pub fn multi_source_distances(&self, sources: &VertexSet) -> Result<Vec<usize>> {
        if sources.is_empty() {
            return Err(Error::EmptySources);
        }
        for v in sources.iter() {
            self.check_vertex(v)?;
        }
        self.bfs(sources.as_slice())
            .into_iter()
            .map(|d| d.ok_or(Error::Disconnected))
            .collect()
    }

    /// Subgraph induced on `keep`, relabelled `1..=|keep|` in increasing
    /// order of the original labels. Returns `None` for an empty set.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Option<Graph> {
        if keep.is_empty() {
            return None;
        }
        let position = |v: usize| keep.as_slice().binary_search(&v).ok().map(|i| i + 1);
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((position(u)?, position(v)?)));
        Some(Graph::new(keep.len(), edges).expect("induced subgraph of a valid graph"))
    }

    /// The graph with `v` deleted, or `None` when `v` is the only vertex.
    pub fn without_vertex(&self, v: usize) -> Option<Graph> {
        self.induced_subgraph(&VertexSet::all(self.n).difference(&VertexSet::new(vec![v])))
    }

    /// True when deleting `v` disconnects the remaining vertices.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.without_vertex(v).is_some_and(|g| !g.is_connected())
    }

    /// Whether a BFS 2-colouring succeeds on every component.
    pub fn is_bipartite(&self) -> bool {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 1..=self.n {
            if side[start - 1].is_some() {
                continue;
            }
            side[start - 1] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let s = side[u - 1].unwrap_or_default();
                for &w in self.neighbors(u) {
                    match side[w - 1] {
                        None => {
                            side[w - 1] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// True when no edge has both endpoints in `set`.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        self.edges.iter().all(|&(u, v)| !(set.contains(u) && set.contains(v)))
    }

    /// Edge-list text: header `n <count>` followed by one `e <u> <v>` per
    /// edge, lexicographically sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in &self.edges {
            out.push_str(&format!("e {u} {v}\n"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&JsonGraph {
            n: self.n as i64,
            edges: self.edges.iter().map(|&(u, v)| [u as i64, v as i64]).collect(),
        })
        .expect("graph serialises")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

struct Builder {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Builder {
    fn new(n: usize) -> std::result::Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidSize { n, min: 1 });
        }
        Ok(Builder { n, edges: BTreeSet::new() })
    }

    fn add(&mut self, u: usize, v: usize) -> std::result::Result<(), GraphError> {
        for w in [u, v] {
            if w == 0 || w > self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Err(GraphError::DuplicateEdge(key.0, key.1));
        }
        Ok(())
    }

    fn finish(self) -> Graph {
        let mut adjacency = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adjacency[u - 1].push(v);
            adjacency[v - 1].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            n: self.n,
            edges: self.edges.into_iter().collect(),
            adjacency,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: i64,
    edges: Vec<[i64; 2]>,
}

/// Parses a graph in either supported text format. Connectivity is not
/// checked here.
pub fn parse_graph(text: &str, format: Format) -> std::result::Result<Graph, ParseError> {
    match format {
        Format::EdgeList => parse_edge_list(text),
        Format::Json => parse_json(text),
    }
}

fn parse_edge_list(text: &str) -> std::result::Result<Graph, ParseError> {
    let mut builder: Option<Builder> = None;
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let at = Position::Line(line);
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        let malformed = |message: &str| ParseError::Malformed { at, message: message.to_string() };
        let number = |tok: &str| {
            tok.parse::<usize>()
                .map_err(|_| malformed(&format!("expected a non-negative integer, found `{tok}`")))
        };
        match (&mut builder, tokens.as_slice()) {
            (None, ["n", count]) => {
                let n = number(count)?;
                builder = Some(Builder::new(n).map_err(|source| ParseError::Graph { at, source })?);
            }
            (None, _) => return Err(ParseError::MissingHeader { at }),
            (Some(_), ["n", ..]) => return Err(malformed("repeated header line")),
            (Some(b), ["e", u, v]) => {
                let (u, v) = (number(u)?, number(v)?);
                b.add(u, v).map_err(|source| ParseError::Graph { at, source })?;
            }
            (Some(_), _) => return Err(malformed("expected `e <u> <v>`")),
        }
    }
    builder
        .map(Builder::finish)
        .ok_or(ParseError::MissingHeader { at: Position::Line(last_line.max(1)) })
}

fn parse_json(text: &str) -> std::result::Result<Graph, ParseError> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| ParseError::Malformed {
        at: Position::JsonSyntax { line: e.line(), column: e.column() },
        message: e.to_string(),
    })?;
    let header = Position::JsonSyntax { line: 1, column: 1 };
    let n = usize::try_from(doc.n).map_err(|_| ParseError::Malformed {
        at: header,
        message: format!("vertex count {} is negative", doc.n),
    })?;
    let mut builder = Builder::new(n).map_err(|source| ParseError::Graph { at: header, source })?;
    for (i, [u, v]) in doc.edges.into_iter().enumerate() {
        let at = Position::JsonEdge(i + 1);
        let index = |x: i64| {
            usize::try_from(x).map_err(|_| ParseError::Graph {
                at,
                source: GraphError::VertexOutOfRange { vertex: 0, n },
            })
        };
        builder
            .add(index(u)?, index(v)?)
            .map_err(|source| ParseError::Graph { at, source })?;
    }
    Ok(builder.finish())
}

/// Identifies vertex `v1` of `g1` with vertex `v2` of `g2`.
///
/// Vertices of `g1` keep their labels. The remaining vertices of `g2` become
/// `n1 + 1, ..., n1 + n2 - 1`, in their original order.
pub fn coalesce(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> std::result::Result<Graph, GraphError> {
    g1.check_vertex(v1)?;
    g2.check_vertex(v2)?;
    let n1 = g1.order();
    let relabel = |w: usize| match w.cmp(&v2) {
        std::cmp::Ordering::Equal => v1,
        std::cmp::Ordering::Less => n1 + w,
        std::cmp::Ordering::Greater => n1 + w - 1,
    };
    let edges = g1
        .edges()
        .iter()
        .copied()
        .chain(g2.edges().iter().map(|&(a, b)| (relabel(a), relabel(b))));
    Graph::new(n1 + g2.order() - 1, edges)
}

pub fn make_path(n: usize) -> std::result::Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidSize { n, min: 1 });
    }
    Graph::new(n, (1..n).map(|i| (i, i + 1)))
}

pub fn make_cycle(n: usize) -> std::result::Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidSize { n, min: 3 });
    }
    Graph::new(n, (1..n).map(|i| (i, i + 1)).chain(std::iter::once((1, n))))
}

pub fn make_complete(n: usize) -> std::result::Result<Graph, GraphError> {
    if n == 0 {
        return Err(GraphError::InvalidSize { n, min: 1 });
    }
    Graph::new(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
}

/// Edge list of the bundled 12-vertex cubic example graph.
pub const CUBIC_12_EDGES: [(usize, usize); 18] = [
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 1),
    (1, 7),
    (6, 7),
    (2, 8),
    (5, 8),
    (3, 9),
    (4, 9),
    (7, 10),
    (8, 11),
    (9, 12),
    (10, 11),
    (11, 12),
    (10, 12),
];

/// 12-vertex cubic graph: a hexagon `1..6` whose opposite-edge pairs are
/// capped by vertices `7, 8, 9`, joined in turn to a triangle `10, 11, 12`.
pub fn cubic_12() -> Graph {
    Graph::new(12, CUBIC_12_EDGES).expect("bundled graph is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_source(g: &Graph, s: usize) -> Vec<usize> {
        g.bfs(&[s]).into_iter().map(Option::unwrap).collect()
    }

    #[test]
    fn parses_small_path() {
        let g = parse_graph("n 3\ne 1 2\ne 2 3\n", Format::EdgeList).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges(), &[(1, 2), (2, 3)]);
        assert_eq!(g.neighbors(2), &[1, 3]);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let text = "# a path\n\nn 3\n# middle\ne 2 1\n  e 3 2  \n";
        let g = parse_graph(text, Format::EdgeList).unwrap();
        assert_eq!(g, make_path(3).unwrap());
    }

    #[test]
    fn parse_errors_name_the_line() {
        let loop_err = parse_graph("n 2\ne 1 1", Format::EdgeList).unwrap_err();
        assert_eq!(
            loop_err,
            ParseError::Graph { at: Position::Line(2), source: GraphError::Loop(1) }
        );
        let dup = parse_graph("n 3\ne 1 2\ne 2 1", Format::EdgeList).unwrap_err();
        assert!(matches!(
            dup,
            ParseError::Graph { at: Position::Line(3), source: GraphError::DuplicateEdge(1, 2) }
        ));
        let range = parse_graph("n 3\n\ne 1 4", Format::EdgeList).unwrap_err();
        assert!(matches!(
            range,
            ParseError::Graph {
                at: Position::Line(3),
                source: GraphError::VertexOutOfRange { vertex: 4, n: 3 }
            }
        ));
        let junk = parse_graph("n 3\nedge 1 2", Format::EdgeList).unwrap_err();
        assert!(matches!(junk, ParseError::Malformed { at: Position::Line(2), .. }));
        let headless = parse_graph("e 1 2", Format::EdgeList).unwrap_err();
        assert!(matches!(headless, ParseError::MissingHeader { at: Position::Line(1) }));
        assert!(parse_graph("# nothing\n", Format::EdgeList).is_err());
        assert!(parse_graph("n 0", Format::EdgeList).is_err());
    }

    #[test]
    fn parses_json() {
        let g = parse_graph(r#"{"n": 3, "edges": [[1, 2], [3, 2]]}"#, Format::Json).unwrap();
        assert_eq!(g, make_path(3).unwrap());
        let err = parse_graph(r#"{"n": 3, "edges": [[1, 2], [2, 2]]}"#, Format::Json).unwrap_err();
        assert!(matches!(err, ParseError::Graph { at: Position::JsonEdge(2), source: GraphError::Loop(2) }));
        assert!(matches!(
            parse_graph(r#"{"n": 3, "edges": [[1, 2]"#, Format::Json),
            Err(ParseError::Malformed { .. })
        ));
        assert_eq!(Format::detect("  {\"n\":1}"), Format::Json);
        assert_eq!(Format::detect("n 1"), Format::EdgeList);
    }

    #[test]
    fn serialisation_sorts_edges() {
        let g = Graph::new(4, [(4, 3), (2, 1), (1, 3)]).unwrap();
        assert_eq!(g.to_edge_list(), "n 4\ne 1 2\ne 1 3\ne 3 4\n");
        assert_eq!(g.to_json(), r#"{"n":4,"edges":[[1,2],[1,3],[3,4]]}"#);
    }

    #[test]
    fn connectivity() {
        assert!(make_path(3).unwrap().is_connected());
        assert!(!Graph::new(4, [(1, 2), (3, 4)]).unwrap().is_connected());
        assert!(cubic_12().is_connected());
        assert!(make_path(1).unwrap().is_connected());
    }

    #[test]
    fn cycle_distances() {
        let c4 = make_cycle(4).unwrap();
        assert_eq!(c4.multi_source_distances(&VertexSet::new(vec![1])).unwrap(), vec![0, 1, 2, 1]);
    }

    #[test]
    fn cubic_distances_from_hexagon() {
        let g = cubic_12();
        let d = g.multi_source_distances(&VertexSet::all(6)).unwrap();
        assert_eq!(d, vec![0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 2, 2]);
        let all = g.multi_source_distances(&VertexSet::all(12)).unwrap();
        assert!(all.iter().all(|&x| x == 0));
    }

    #[test]
    fn distance_errors() {
        let g = make_path(3).unwrap();
        assert!(matches!(g.multi_source_distances(&VertexSet::empty()), Err(Error::EmptySources)));
        let split = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert!(matches!(
            split.multi_source_distances(&VertexSet::new(vec![1])),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn multi_source_is_min_of_single_sources() {
        let g = cubic_12();
        let sources = VertexSet::new(vec![2, 11]);
        let multi = g.multi_source_distances(&sources).unwrap();
        let a = single_source(&g, 2);
        let b = single_source(&g, 11);
        for v in 0..12 {
            assert_eq!(multi[v], a[v].min(b[v]));
        }
    }

    #[test]
    fn coalescing_two_paths_gives_p5() {
        let p3 = make_path(3).unwrap();
        let g = coalesce(&p3, 1, &p3, 1).unwrap();
        assert_eq!(g.edges(), &[(1, 2), (1, 4), (2, 3), (4, 5)]);
        // tree with degree sequence (1,1,2,2,2) and diameter 4
        assert_eq!(g.edge_count(), g.order() - 1);
        assert!(g.is_connected());
        let mut degrees: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 2, 2, 2]);
        let diameter = g.vertices().flat_map(|v| single_source(&g, v)).max().unwrap();
        assert_eq!(diameter, 4);
    }

    #[test]
    fn coalescing_with_k1_is_identity() {
        let k1 = make_path(1).unwrap();
        let c5 = make_cycle(5).unwrap();
        assert_eq!(coalesce(&k1, 1, &c5, 1).unwrap(), c5);
        assert_eq!(coalesce(&c5, 3, &k1, 1).unwrap(), c5);
    }

    #[test]
    fn bowtie() {
        let c3 = make_cycle(3).unwrap();
        let g = coalesce(&c3, 2, &c3, 3).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degree(2), 4);
        assert!(g.is_cut_vertex(2));
        assert!(coalesce(&c3, 4, &c3, 1).is_err());
    }

    #[test]
    fn fixtures() {
        assert_eq!(make_path(1).unwrap().order(), 1);
        assert_eq!(make_path(1).unwrap().edge_count(), 0);
        assert_eq!(make_cycle(3).unwrap(), make_complete(3).unwrap());
        assert_eq!(make_complete(4).unwrap().edge_count(), 6);
        assert!(make_cycle(2).is_err());
        assert!(make_path(0).is_err());
        assert!(make_complete(0).is_err());
    }

    #[test]
    fn cubic_example_is_cubic() {
        let g = cubic_12();
        assert_eq!(g.edge_count(), 18);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn structural_helpers() {
        let p4 = make_path(4).unwrap();
        assert!(p4.is_bipartite());
        assert!(!make_cycle(5).unwrap().is_bipartite());
        assert!(p4.is_cut_vertex(2));
        assert!(!p4.is_cut_vertex(1));
        assert!(!make_path(1).unwrap().is_cut_vertex(1));
        assert!(p4.is_independent(&VertexSet::new(vec![1, 3])));
        assert!(!p4.is_independent(&VertexSet::new(vec![1, 2])));
        let sub = p4.induced_subgraph(&VertexSet::new(vec![1, 3, 4])).unwrap();
        assert_eq!(sub.edges(), &[(2, 3)]);
    }

    #[test]
    fn partition_checks() {
        let ok = [VertexSet::new(vec![1, 3]), VertexSet::new(vec![2])];
        assert!(check_partition(&ok, 3).is_ok());
        assert!(check_partition(&ok, 4).is_err());
        assert!(check_partition(&[VertexSet::new(vec![1, 2]), VertexSet::new(vec![2, 3])], 3).is_err());
        assert!(check_partition(&[VertexSet::all(3), VertexSet::empty()], 3).is_err());
    }
}
