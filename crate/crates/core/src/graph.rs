//! Finite simple graphs with an ordered vertex list.
//!
//! The stored vertex order doubles as the tracing function: a graph is
//! traceable exactly when consecutive vertices in that order are adjacent.
//! Adjacency is kept as one bitset row per vertex position, so the search
//! routines below work on positions and translate back to labels at the end.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertex labels are natural numbers.
pub type Vertex = u64;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex {0} listed more than once")]
    DuplicateVertex(Vertex),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("edge ({0}, {1}) listed more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex list is not strictly ascending at {0}")]
    UnorderedVertices(Vertex),
    #[error("edge ({0}, {1}) must be written with its smaller endpoint first")]
    UnorderedEdge(Vertex, Vertex),
    #[error("sequence repeats vertex {0}")]
    RepeatedVertex(Vertex),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Undirected simple graph over labelled vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<Vertex>,
    position: HashMap<Vertex, usize>,
    rows: Vec<FixedBitSet>,
    edge_count: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from an ordered vertex list and an edge list.
    ///
    /// Repeated edges collapse into one; repeated vertices, self-loops and
    /// dangling endpoints are rejected.
    pub fn new<I>(vertices: Vec<Vertex>, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut position = HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            if position.insert(v, i).is_some() {
                return Err(GraphError::DuplicateVertex(v));
            }
        }
        let n = vertices.len();
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let pu = *position.get(&u).ok_or(GraphError::UnknownVertex(u))?;
            let pv = *position.get(&v).ok_or(GraphError::UnknownVertex(v))?;
            if !rows[pu].put(pv) {
                edge_count += 1;
            }
            rows[pv].insert(pu);
        }
        Ok(Graph {
            vertices,
            position,
            rows,
            edge_count,
        })
    }

    /// Graph on `0..n` with the given edges.
    pub fn on_range<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Graph::new((0..n as Vertex).collect(), edges)
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges = (1..n as Vertex).map(|v| (v - 1, v));
        Graph::on_range(n, edges).expect("path edges are valid")
    }

    /// The complete graph on `0..n`.
    pub fn complete(n: usize) -> Self {
        let n = n as Vertex;
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::on_range(n as usize, edges).expect("clique edges are valid")
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices in stored (tracing) order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, pos: usize) -> Vertex {
        self.vertices[pos]
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.position.get(&v).copied()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.position.contains_key(&v)
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Adjacency by label; false when either endpoint is absent.
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        match (self.position(u), self.position(v)) {
            (Some(pu), Some(pv)) => self.rows[pu].contains(pv),
            _ => false,
        }
    }

    /// Adjacency by position.
    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    /// Neighbour positions of the vertex at position `i`.
    pub fn row(&self, i: usize) -> &FixedBitSet {
        &self.rows[i]
    }

    pub fn degree(&self, v: Vertex) -> Option<usize> {
        self.position(v).map(|p| self.rows[p].count_ones(..))
    }

    /// Neighbours of `v` in stored order.
    pub fn neighbors(&self, v: Vertex) -> Vec<Vertex> {
        match self.position(v) {
            Some(p) => self.rows[p].ones().map(|q| self.vertices[q]).collect(),
            None => Vec::new(),
        }
    }

    /// All edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (i, row) in self.rows.iter().enumerate() {
            let u = self.vertices[i];
            for j in row.ones() {
                let v = self.vertices[j];
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether the stored vertex order is a Hamiltonian path.
    pub fn is_traceable(&self) -> bool {
        (1..self.len()).all(|i| self.adjacent(i - 1, i))
    }

    fn positions_of(&self, seq: &[Vertex]) -> Result<Vec<usize>, GraphError> {
        let mut seen = FixedBitSet::with_capacity(self.len());
        seq.iter()
            .map(|&v| {
                let p = self.position(v).ok_or(GraphError::UnknownVertex(v))?;
                if seen.put(p) {
                    return Err(GraphError::RepeatedVertex(v));
                }
                Ok(p)
            })
            .collect()
    }

    /// True iff `path` is a path in this graph whose only edges are between
    /// consecutive entries.
    pub fn is_chordless(&self, path: &PathSeq) -> Result<bool, GraphError> {
        let pos = self.positions_of(path.vertices())?;
        for (i, &a) in pos.iter().enumerate() {
            for (j, &b) in pos.iter().enumerate().skip(i + 1) {
                if self.adjacent(a, b) != (j == i + 1) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Lexicographically least (in stored order) chordless path on exactly
    /// `n` vertices. `n == 0` yields the empty path.
    pub fn find_chordless_path(&self, n: usize) -> Option<PathSeq> {
        if n == 0 {
            return Some(PathSeq::default());
        }
        let mut path = Vec::with_capacity(n);
        let mut blocked = FixedBitSet::with_capacity(self.len());
        for start in 0..self.len() {
            path.push(start);
            if self.extend_chordless(&mut path, &mut blocked, n) {
                return Some(PathSeq(path.iter().map(|&p| self.vertices[p]).collect()));
            }
            path.pop();
        }
        None
    }

    /// `blocked` holds the closed neighbourhoods of every path entry except
    /// the last; a valid continuation is a neighbour of the last entry that
    /// avoids it.
    fn extend_chordless(&self, path: &mut Vec<usize>, blocked: &mut FixedBitSet, n: usize) -> bool {
        if path.len() == n {
            return true;
        }
        let last = *path.last().expect("non-empty path");
        let mut candidates = self.rows[last].clone();
        candidates.difference_with(blocked);
        if candidates.is_clear() {
            return false;
        }
        let saved = blocked.clone();
        blocked.union_with(&self.rows[last]);
        blocked.insert(last);
        for next in candidates.ones() {
            path.push(next);
            if self.extend_chordless(path, blocked, n) {
                return true;
            }
            path.pop();
        }
        *blocked = saved;
        false
    }

    /// Lexicographically least embedding of `pattern`, where pattern
    /// vertices are assigned in the order `a0, b0, a1, b1, ...`.
    pub fn find_embedding(&self, pattern: PatternKind) -> Option<Embedding> {
        let k = pattern.side();
        if 2 * k > self.len() {
            return None;
        }
        let order: Vec<PatternVertex> = (0..k)
            .flat_map(|i| [PatternVertex::A(i), PatternVertex::B(i)])
            .collect();
        let mut assigned: Vec<usize> = Vec::with_capacity(order.len());
        let mut used = FixedBitSet::with_capacity(self.len());
        if !self.extend_embedding(pattern, &order, &mut assigned, &mut used) {
            return None;
        }
        let mut a = vec![0; k];
        let mut b = vec![0; k];
        for (pv, &p) in order.iter().zip(&assigned) {
            match *pv {
                PatternVertex::A(i) => a[i] = self.vertices[p],
                PatternVertex::B(i) => b[i] = self.vertices[p],
            }
        }
        let emb = Embedding { pattern, a, b };
        debug_assert!(emb.validate(self).is_ok());
        Some(emb)
    }

    fn extend_embedding(
        &self,
        pattern: PatternKind,
        order: &[PatternVertex],
        assigned: &mut Vec<usize>,
        used: &mut FixedBitSet,
    ) -> bool {
        let depth = assigned.len();
        if depth == order.len() {
            return true;
        }
        let current = order[depth];
        let mut candidates = FixedBitSet::with_capacity(self.len());
        candidates.insert_range(..);
        candidates.difference_with(used);
        for (prev, &host) in order[..depth].iter().zip(assigned.iter()) {
            if pattern.has_edge(current, *prev) {
                candidates.intersect_with(&self.rows[host]);
            }
        }
        for cand in candidates.ones() {
            assigned.push(cand);
            used.insert(cand);
            if self.extend_embedding(pattern, order, assigned, used) {
                return true;
            }
            used.set(cand, false);
            assigned.pop();
        }
        false
    }

    /// Subgraph induced on `keep`, preserving stored order.
    pub fn induced(&self, keep: &[Vertex]) -> Result<Graph, GraphError> {
        let pos = self.positions_of(keep)?;
        let mut edges = Vec::new();
        for (i, &a) in pos.iter().enumerate() {
            for &b in &pos[i + 1..] {
                if self.adjacent(a, b) {
                    edges.push((self.vertices[a], self.vertices[b]));
                }
            }
        }
        Graph::new(keep.to_vec(), edges)
    }

    /// Deterministic Graphviz rendering: vertices ascending, edges `u -- v`
    /// with `u < v` in lexicographic order.
    pub fn to_dot(&self) -> String {
        let mut vs = self.vertices.clone();
        vs.sort_unstable();
        let mut out = String::from("graph G {\n");
        for v in vs {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph, GraphError> {
        let raw: GraphJson = serde_json::from_str(text)?;
        Graph::try_from(raw)
    }
}

/// Wire form: `{"vertices":[...], "edges":[[u,v],...]}` with ascending
/// vertices and `u < v` on every edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<[Vertex; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        let mut vertices = g.vertices.clone();
        vertices.sort_unstable();
        let edges = g.edges().into_iter().map(|(u, v)| [u, v]).collect();
        GraphJson { vertices, edges }
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = GraphError;

    fn try_from(raw: GraphJson) -> Result<Self, Self::Error> {
        for w in raw.vertices.windows(2) {
            if w[0] >= w[1] {
                return Err(GraphError::UnorderedVertices(w[1]));
            }
        }
        let mut seen = std::collections::HashSet::with_capacity(raw.edges.len());
        for &[u, v] in &raw.edges {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u > v {
                return Err(GraphError::UnorderedEdge(u, v));
            }
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
        }
        Graph::new(raw.vertices, raw.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        Graph::try_from(raw).map_err(serde::de::Error::custom)
    }
}

/// Minimal read access needed to validate witnesses against a host.
pub trait HostGraph {
    fn has_vertex(&self, v: Vertex) -> bool;
    fn joins(&self, u: Vertex, v: Vertex) -> bool;
}

impl HostGraph for Graph {
    fn has_vertex(&self, v: Vertex) -> bool {
        self.contains(v)
    }

    fn joins(&self, u: Vertex, v: Vertex) -> bool {
        self.has_edge(u, v)
    }
}

/// A sequence of vertices read as a path.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathSeq(pub Vec<Vertex>);

impl PathSeq {
    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> PathSeq {
        PathSeq(self.0.iter().rev().copied().collect())
    }
}

impl From<Vec<Vertex>> for PathSeq {
    fn from(v: Vec<Vertex>) -> Self {
        PathSeq(v)
    }
}

/// The bipartite patterns searched for. `A(k)` and `Kkk(k)` are the finite
/// truncations with sides `a_0..a_{k-1}` and `b_0..b_{k-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PatternKind {
    K22,
    /// Edges `a_n - b_m` exactly when `n <= m`.
    A(usize),
    /// Complete bipartite on `k + k` vertices.
    Kkk(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternVertex {
    A(usize),
    B(usize),
}

impl PatternKind {
    /// Size of each side.
    pub fn side(self) -> usize {
        match self {
            PatternKind::K22 => 2,
            PatternKind::A(k) | PatternKind::Kkk(k) => k,
        }
    }

    pub fn has_edge(self, x: PatternVertex, y: PatternVertex) -> bool {
        let (a, b) = match (x, y) {
            (PatternVertex::A(a), PatternVertex::B(b)) | (PatternVertex::B(b), PatternVertex::A(a)) => (a, b),
            _ => return false,
        };
        let k = self.side();
        if a >= k || b >= k {
            return false;
        }
        match self {
            PatternKind::A(_) => a <= b,
            PatternKind::K22 | PatternKind::Kkk(_) => true,
        }
    }

    /// Pattern edges as `(a_index, b_index)` pairs.
    pub fn edges(self) -> Vec<(usize, usize)> {
        let k = self.side();
        (0..k)
            .flat_map(|a| (0..k).map(move |b| (a, b)))
            .filter(|&(a, b)| self.has_edge(PatternVertex::A(a), PatternVertex::B(b)))
            .collect()
    }

    /// The pattern itself as a graph: `a_i` is vertex `i`, `b_j` is `k + j`.
    pub fn to_graph(self) -> Graph {
        let k = self.side() as Vertex;
        let edges = self.edges().into_iter().map(|(a, b)| (a as Vertex, k + b as Vertex));
        Graph::on_range(2 * k as usize, edges).expect("pattern edges are valid")
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternKind::K22 => write!(f, "K22"),
            PatternKind::A(k) => write!(f, "A:{k}"),
            PatternKind::Kkk(k) => write!(f, "Kkk:{k}"),
        }
    }
}

impl std::str::FromStr for PatternKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("K22") {
            return Ok(PatternKind::K22);
        }
        let (kind, k) = s
            .split_once(':')
            .ok_or_else(|| format!("pattern `{s}` is not K22, A:k or Kkk:k"))?;
        let k: usize = k.parse().map_err(|_| format!("bad pattern size in `{s}`"))?;
        match kind {
            "A" => Ok(PatternKind::A(k)),
            "Kkk" => Ok(PatternKind::Kkk(k)),
            _ => Err(format!("unknown pattern family `{kind}`")),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("assignment has {got} vertices on a side, pattern needs {want}")]
    WrongSize { want: usize, got: usize },
    #[error("host has no vertex {0}")]
    MissingVertex(Vertex),
    #[error("host vertex {0} is used twice")]
    NotInjective(Vertex),
    #[error("pattern edge a{a}-b{b} maps to non-edge ({u}, {v})")]
    MissingEdge { a: usize, b: usize, u: Vertex, v: Vertex },
}

/// Injective, edge-preserving map from a pattern into a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub pattern: PatternKind,
    /// Images of `a_0..a_{k-1}`.
    pub a: Vec<Vertex>,
    /// Images of `b_0..b_{k-1}`.
    pub b: Vec<Vertex>,
}

impl Embedding {
    pub fn image(&self, v: PatternVertex) -> Vertex {
        match v {
            PatternVertex::A(i) => self.a[i],
            PatternVertex::B(i) => self.b[i],
        }
    }

    pub fn validate<H: HostGraph + ?Sized>(&self, host: &H) -> Result<(), EmbeddingError> {
        let k = self.pattern.side();
        for side in [&self.a, &self.b] {
            if side.len() != k {
                return Err(EmbeddingError::WrongSize { want: k, got: side.len() });
            }
        }
        let mut seen = std::collections::HashSet::new();
        for &v in self.a.iter().chain(&self.b) {
            if !host.has_vertex(v) {
                return Err(EmbeddingError::MissingVertex(v));
            }
            if !seen.insert(v) {
                return Err(EmbeddingError::NotInjective(v));
            }
        }
        for (a, b) in self.pattern.edges() {
            let (u, v) = (self.a[a], self.b[b]);
            if !host.joins(u, v) {
                return Err(EmbeddingError::MissingEdge { a, b, u, v });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
        Graph::on_range(n, edges.iter().copied()).unwrap()
    }

    fn c4() -> Graph {
        g(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])
    }

    fn paw() -> Graph {
        g(4, &[(0, 1), (1, 2), (2, 3), (0, 2)])
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert!(matches!(Graph::on_range(2, [(1, 1)]), Err(GraphError::SelfLoop(1))));
        assert!(matches!(Graph::on_range(2, [(0, 5)]), Err(GraphError::UnknownVertex(5))));
        assert!(matches!(Graph::new(vec![3, 3], []), Err(GraphError::DuplicateVertex(3))));
    }

    #[test]
    fn adjacency_is_symmetric_and_deduplicated() {
        let h = g(3, &[(0, 1), (1, 0), (1, 2)]);
        assert_eq!(h.edge_count(), 2);
        assert!(h.has_edge(1, 0) && h.has_edge(0, 1));
        assert_eq!(h.degree(1), Some(2));
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn chordless_examples() {
        assert!(Graph::path(4).is_chordless(&PathSeq(vec![0, 1, 2, 3])).unwrap());
        assert!(!c4().is_chordless(&PathSeq(vec![0, 1, 2, 3])).unwrap());
        assert!(!paw().is_chordless(&PathSeq(vec![0, 1, 2, 3])).unwrap());
        // not a path at all
        assert!(!Graph::path(4).is_chordless(&PathSeq(vec![0, 2])).unwrap());
    }

    #[test]
    fn chordless_rejects_bad_sequences() {
        let p = Graph::path(3);
        assert!(matches!(p.is_chordless(&PathSeq(vec![0, 1, 0])), Err(GraphError::RepeatedVertex(0))));
        assert!(matches!(p.is_chordless(&PathSeq(vec![0, 9])), Err(GraphError::UnknownVertex(9))));
    }

    #[test]
    fn finds_chordless_paths() {
        assert_eq!(Graph::path(5).find_chordless_path(5), Some(PathSeq(vec![0, 1, 2, 3, 4])));
        assert_eq!(Graph::complete(4).find_chordless_path(3), None);
        assert_eq!(paw().find_chordless_path(4), None);
        assert_eq!(paw().find_chordless_path(3), Some(PathSeq(vec![0, 2, 3])));
        assert_eq!(Graph::path(2).find_chordless_path(0), Some(PathSeq::default()));
        assert_eq!(Graph::path(0).find_chordless_path(1), None);
    }

    #[test]
    fn finds_embeddings() {
        let e = c4().find_embedding(PatternKind::K22).unwrap();
        assert_eq!(e.a, vec![0, 2]);
        assert_eq!(e.b, vec![1, 3]);
        assert_eq!(paw().find_embedding(PatternKind::K22), None);
        let k6 = Graph::complete(6);
        let e = k6.find_embedding(PatternKind::Kkk(3)).unwrap();
        e.validate(&k6).unwrap();
        assert_eq!(Graph::complete(5).find_embedding(PatternKind::Kkk(3)), None);
    }

    #[test]
    fn embedding_validation_catches_violations() {
        let host = c4();
        let bad = Embedding { pattern: PatternKind::K22, a: vec![0, 1], b: vec![2, 3] };
        assert!(matches!(bad.validate(&host), Err(EmbeddingError::MissingEdge { .. })));
        let dup = Embedding { pattern: PatternKind::K22, a: vec![0, 2], b: vec![1, 1] };
        assert_eq!(dup.validate(&host), Err(EmbeddingError::NotInjective(1)));
    }

    #[test]
    fn pattern_shapes() {
        assert_eq!(PatternKind::A(3).edges().len(), 6);
        assert_eq!(PatternKind::Kkk(3).edges().len(), 9);
        assert_eq!(PatternKind::K22.edges().len(), 4);
        assert_eq!("A:3".parse::<PatternKind>().unwrap(), PatternKind::A(3));
        assert_eq!("Kkk:4".parse::<PatternKind>().unwrap(), PatternKind::Kkk(4));
        assert!("B:2".parse::<PatternKind>().is_err());
    }

    #[test]
    fn traceability() {
        assert!(Graph::path(4).is_traceable());
        assert!(!g(2, &[]).is_traceable());
        assert!(g(1, &[]).is_traceable());
    }

    #[test]
    fn json_is_strict() {
        let ok = Graph::from_json(r#"{"vertices":[0,1,2],"edges":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(ok, Graph::path(3));
        assert!(matches!(
            Graph::from_json(r#"{"vertices":[1,0],"edges":[]}"#),
            Err(GraphError::UnorderedVertices(0))
        ));
        assert!(matches!(
            Graph::from_json(r#"{"vertices":[0,1],"edges":[[1,0]]}"#),
            Err(GraphError::UnorderedEdge(1, 0))
        ));
        assert!(matches!(
            Graph::from_json(r#"{"vertices":[0,1],"edges":[[0,1],[0,1]]}"#),
            Err(GraphError::DuplicateEdge(0, 1))
        ));
    }

    #[test]
    fn dot_output_is_stable() {
        let dot = c4().to_dot();
        assert_eq!(dot, "graph G {\n  0;\n  1;\n  2;\n  3;\n  0 -- 1;\n  0 -- 3;\n  1 -- 2;\n  2 -- 3;\n}\n");
    }
}
