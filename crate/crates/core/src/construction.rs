//! The staged dump construction of a traceable graph with no chordless
//! 4-paths, driven by an injective input sequence `f`.
//!
//! At stage `s` the vertex set is `0..=k_s`, cut into convex blocks
//! `B_0, ..., B_s` whose maxima are the coding vertices `c_0 < ... < c_s`.
//! Blocks are never stored: they are read off the coding list.
//!
//! Stage `s + 1` consumes `n = f(s)`:
//! * `n > s` appends one vertex as a new singleton block, joined to every
//!   coding vertex;
//! * `n <= s` dumps blocks `n..=s` plus a fresh vertex into block `n`, opens
//!   `s + 1 - n` fresh singleton blocks, joins every new coding vertex to all
//!   other coding vertices, and joins the new `c_n` to its whole block.
//!
//! Every edge added at a stage has a fresh endpoint, so the graph of stage
//! `s` is the final graph restricted to `0..=k_s`.

use std::collections::HashMap;
use std::ops::RangeInclusive;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Embedding, EmbeddingError, Graph, HostGraph, PathSeq, PatternKind, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("input value {value} appears at positions {first} and {second}; f must be injective")]
    DuplicateInput { value: u64, first: usize, second: usize },
    #[error("input has {have} values but {need} stages were requested")]
    ShortInput { have: usize, need: usize },
    #[error("pattern needs {needed} stable coding vertices, horizon has {available}; run at least {more_stages} more stages")]
    Capacity { needed: usize, available: usize, more_stages: usize },
    #[error("invalid construction state: {0}")]
    InvalidState(String),
}

/// One stage of the construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionState {
    stage: usize,
    k: Vertex,
    coding: Vec<Vertex>,
    /// Sorted neighbour lists indexed by vertex.
    adjacency: Vec<Vec<Vertex>>,
}

impl Default for ConstructionState {
    fn default() -> Self {
        Self::init()
    }
}

impl ConstructionState {
    /// Stage 0: the single vertex 0, which is its own block and coding vertex.
    pub fn init() -> Self {
        ConstructionState {
            stage: 0,
            k: 0,
            coding: vec![0],
            adjacency: vec![Vec::new()],
        }
    }

    /// Assembles a state from raw parts, checking only structural shape:
    /// `stage + 1` strictly increasing coding vertices ending at the largest
    /// vertex, and edges within `0..=k`. Lemma-level properties are left to
    /// [`check_stage_lemmas`].
    pub fn from_parts<I>(stage: usize, coding: Vec<Vertex>, edges: I) -> Result<Self, ConstructionError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if coding.len() != stage + 1 {
            return Err(ConstructionError::InvalidState(format!(
                "stage {stage} needs {} coding vertices, got {}",
                stage + 1,
                coding.len()
            )));
        }
        if coding.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ConstructionError::InvalidState("coding vertices must increase".into()));
        }
        let k = *coding.last().expect("non-empty coding list");
        let mut adjacency = vec![Vec::new(); k as usize + 1];
        for (u, v) in edges {
            if u == v || u > k || v > k {
                return Err(ConstructionError::InvalidState(format!("edge ({u}, {v}) outside 0..={k}")));
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for row in &mut adjacency {
            row.sort_unstable();
            row.dedup();
        }
        Ok(ConstructionState { stage, k, coding, adjacency })
    }

    pub fn stage(&self) -> usize {
        self.stage
    }

    /// Largest vertex.
    pub fn k(&self) -> Vertex {
        self.k
    }

    pub fn coding(&self) -> &[Vertex] {
        &self.coding
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency
            .get(u as usize)
            .is_some_and(|row| row.binary_search(&v).is_ok())
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        self.adjacency.get(v as usize).map_or(&[], |r| r.as_slice())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, row)| {
            let u = u as Vertex;
            row.iter().filter(move |&&v| v > u).map(move |&v| (u, v))
        })
    }

    /// Index of the block containing `x`.
    pub fn block_of(&self, x: Vertex) -> Option<usize> {
        (x <= self.k).then(|| self.coding.partition_point(|&c| c < x))
    }

    pub fn block(&self, j: usize) -> RangeInclusive<Vertex> {
        let lo = if j == 0 { 0 } else { self.coding[j - 1] + 1 };
        lo..=self.coding[j]
    }

    /// All blocks, materialised from the coding boundaries.
    pub fn blocks(&self) -> Vec<RangeInclusive<Vertex>> {
        (0..self.coding.len()).map(|j| self.block(j)).collect()
    }

    pub fn is_coding(&self, x: Vertex) -> bool {
        self.coding.binary_search(&x).is_ok()
    }

    pub fn to_graph(&self) -> Graph {
        Graph::on_range(self.vertex_count(), self.edges()).expect("state edges lie within 0..=k")
    }

    /// The next stage, consuming `n = f(stage)`.
    pub fn step(&self, n: u64) -> ConstructionState {
        let mut next = self.clone();
        next.advance(n);
        next
    }

    /// Advances in place and returns the edges added, as sorted `(u, v)`
    /// pairs with `u < v`.
    pub fn advance(&mut self, n: u64) -> Vec<(Vertex, Vertex)> {
        let s = self.stage;
        let k = self.k;
        let mut added = Vec::new();
        if n > s as u64 {
            let fresh = k + 1;
            added.extend(self.coding.iter().map(|&c| (c, fresh)));
            self.coding.push(fresh);
            self.k = fresh;
        } else {
            let n = n as usize;
            let u = (s + 1 - n) as Vertex;
            let block_lo = if n == 0 { 0 } else { self.coding[n - 1] + 1 };
            self.coding.truncate(n);
            self.coding.extend((1..=u + 1).map(|v| k + v));
            self.k = k + u + 1;
            // every pair of coding vertices with at least one new member
            for a in n..self.coding.len() {
                for b in 0..a {
                    added.push((self.coding[b], self.coding[a]));
                }
            }
            let head = self.coding[n];
            added.extend((block_lo..head).map(|x| (x, head)));
        }
        self.stage = s + 1;
        self.adjacency.resize(self.k as usize + 1, Vec::new());
        added.sort_unstable();
        let mut touched = Vec::with_capacity(added.len() * 2);
        for &(x, y) in &added {
            self.adjacency[x as usize].push(y);
            self.adjacency[y as usize].push(x);
            touched.push(x);
            touched.push(y);
        }
        touched.sort_unstable();
        touched.dedup();
        for v in touched {
            self.adjacency[v as usize].sort_unstable();
        }
        added
    }
}

impl HostGraph for ConstructionState {
    fn has_vertex(&self, v: Vertex) -> bool {
        v <= self.k
    }

    fn joins(&self, u: Vertex, v: Vertex) -> bool {
        self.has_edge(u, v)
    }
}

/// Per-stage summary kept by a [`StagedHistory`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StageSnapshot {
    pub stage: usize,
    pub k: Vertex,
    pub coding: Vec<Vertex>,
    /// Number of edges present at this stage; a prefix length of the edge log.
    pub edge_count: usize,
}

/// Every stage of one run, stored compactly: snapshots plus the edge log in
/// insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StagedHistory {
    f: Vec<u64>,
    snapshots: Vec<StageSnapshot>,
    edge_log: Vec<(Vertex, Vertex)>,
    last: ConstructionState,
}

pub fn check_injective(f: &[u64]) -> Result<(), ConstructionError> {
    let mut seen = HashMap::with_capacity(f.len());
    for (i, &v) in f.iter().enumerate() {
        if let Some(first) = seen.insert(v, i) {
            return Err(ConstructionError::DuplicateInput { value: v, first, second: i });
        }
    }
    Ok(())
}

/// Runs `stages` stages on the injective sequence `f`, which may extend
/// past the horizon; the tail only matters for stability questions.
pub fn run(f: &[u64], stages: usize) -> Result<StagedHistory, ConstructionError> {
    check_injective(f)?;
    if f.len() < stages {
        return Err(ConstructionError::ShortInput { have: f.len(), need: stages });
    }
    let mut state = ConstructionState::init();
    let mut edge_log = Vec::new();
    let mut snapshots = Vec::with_capacity(stages + 1);
    snapshots.push(StageSnapshot { stage: 0, k: 0, coding: vec![0], edge_count: 0 });
    for &n in &f[..stages] {
        edge_log.extend(state.advance(n));
        snapshots.push(StageSnapshot {
            stage: state.stage,
            k: state.k,
            coding: state.coding.clone(),
            edge_count: edge_log.len(),
        });
    }
    Ok(StagedHistory { f: f.to_vec(), snapshots, edge_log, last: state })
}

impl StagedHistory {
    /// Reassembles a history from its recorded parts (for example a trace).
    /// The final state is rebuilt from the last snapshot and the full log.
    pub fn from_parts(
        f: Vec<u64>,
        snapshots: Vec<StageSnapshot>,
        edge_log: Vec<(Vertex, Vertex)>,
    ) -> Result<Self, ConstructionError> {
        let last_snap = snapshots
            .last()
            .ok_or_else(|| ConstructionError::InvalidState("history has no stages".into()))?;
        let last = ConstructionState::from_parts(last_snap.stage, last_snap.coding.clone(), edge_log.iter().copied())?;
        Ok(StagedHistory { f, snapshots, edge_log, last })
    }

    pub fn f(&self) -> &[u64] {
        &self.f
    }

    /// Number of stages run (the horizon `T`).
    pub fn stages(&self) -> usize {
        self.snapshots.len() - 1
    }

    pub fn snapshots(&self) -> &[StageSnapshot] {
        &self.snapshots
    }

    pub fn snapshot(&self, s: usize) -> &StageSnapshot {
        &self.snapshots[s]
    }

    pub fn final_state(&self) -> &ConstructionState {
        &self.last
    }

    pub fn final_graph(&self) -> Graph {
        self.last.to_graph()
    }

    /// All edges in insertion order.
    pub fn edge_log(&self) -> &[(Vertex, Vertex)] {
        &self.edge_log
    }

    /// Edges added on the way into stage `s` (empty for stage 0).
    pub fn new_edges(&self, s: usize) -> &[(Vertex, Vertex)] {
        if s == 0 {
            return &[];
        }
        &self.edge_log[self.snapshots[s - 1].edge_count..self.snapshots[s].edge_count]
    }

    /// Rebuilds the full state of stage `s`.
    pub fn state_at(&self, s: usize) -> ConstructionState {
        if s == self.stages() {
            return self.last.clone();
        }
        let snap = &self.snapshots[s];
        ConstructionState::from_parts(snap.stage, snap.coding.clone(), self.edge_log[..snap.edge_count].iter().copied())
            .expect("recorded snapshots are well formed")
    }

    /// Coding vertex of index `k` at stage `s`, if the index exists then.
    pub fn coding_at(&self, k: usize, s: usize) -> Option<Vertex> {
        self.snapshots.get(s)?.coding.get(k).copied()
    }

    /// Final value of coding index `k`, when certified: the index exists at
    /// the horizon and no unconsumed input value is `<= k`, so no later stage
    /// could redefine it.
    pub fn stable_coding(&self, k: usize) -> Option<Vertex> {
        let t = self.stages();
        if k > t || self.f[t..].iter().any(|&v| v <= k as u64) {
            return None;
        }
        Some(self.last.coding[k])
    }

    /// Stable coding vertices `c_0 < c_1 < ...`; always a prefix of the
    /// coding list.
    pub fn stable_codings(&self) -> Vec<Vertex> {
        (0..=self.stages()).map_while(|k| self.stable_coding(k)).collect()
    }

    /// First `(k, s)` where `c_{k,s+1} != c_{k,s}` disagrees with `f(s) <= k`.
    pub fn coding_change_violation(&self) -> Option<(usize, usize)> {
        for s in 0..self.stages() {
            let (before, after) = (&self.snapshots[s].coding, &self.snapshots[s + 1].coding);
            for k in 0..=s {
                let changed = before.get(k) != after.get(k);
                if changed != (self.f[s] <= k as u64) {
                    return Some((k, s));
                }
            }
        }
        None
    }

    /// `c_{k,s+1} != c_{k,s}` iff `f(s) <= k`, for all `k <= s < T`.
    pub fn coding_change_law(&self) -> bool {
        self.coding_change_violation().is_none()
    }

    /// Maps `a_i` to the `i`-th and `b_j` to the `(side + j)`-th stable
    /// coding vertex. Coding vertices are pairwise adjacent, so every
    /// bipartite pattern fits.
    pub fn embed_via_coding(&self, pattern: PatternKind) -> Result<Embedding, ConstructionError> {
        let side = pattern.side();
        let stable = self.stable_codings();
        if stable.len() < 2 * side {
            return Err(ConstructionError::Capacity {
                needed: 2 * side,
                available: stable.len(),
                more_stages: 2 * side - stable.len(),
            });
        }
        let emb = Embedding {
            pattern,
            a: stable[..side].to_vec(),
            b: stable[side..2 * side].to_vec(),
        };
        debug_assert!(emb.validate(&self.last).is_ok());
        Ok(emb)
    }
}

/// The five per-stage structural lemmas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StageLemma {
    /// Each coding vertex is its block's maximum and adjacent to the rest of it.
    Greatest,
    /// Coding vertices are pairwise adjacent.
    CodeConnection,
    /// `d` and `d + 1` are adjacent for all `d < k`.
    Tracing,
    /// An edge `x < y` stays inside a block unless `x` is a coding vertex.
    Components,
    /// If `x < y` are adjacent across blocks, `x` sees all of `y`'s block.
    GoUp,
}

impl StageLemma {
    pub const ALL: [StageLemma; 5] = [
        StageLemma::Greatest,
        StageLemma::CodeConnection,
        StageLemma::Tracing,
        StageLemma::Components,
        StageLemma::GoUp,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaCheck {
    pub lemma: StageLemma,
    pub passed: bool,
    /// Lexicographically least counterexample when the lemma fails.
    pub witness: Option<Vec<Vertex>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub stage: usize,
    pub checks: Vec<LemmaCheck>,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, lemma: StageLemma) -> &LemmaCheck {
        self.checks.iter().find(|c| c.lemma == lemma).expect("report covers every lemma")
    }
}

pub fn check_stage_lemmas(state: &ConstructionState) -> LemmaReport {
    let checks = StageLemma::ALL
        .iter()
        .map(|&lemma| {
            let witness = match lemma {
                StageLemma::Greatest => greatest_violation(state),
                StageLemma::CodeConnection => code_connection_violation(state),
                StageLemma::Tracing => tracing_violation(state),
                StageLemma::Components => components_violation(state),
                StageLemma::GoUp => go_up_violation(state),
            };
            LemmaCheck { lemma, passed: witness.is_none(), witness }
        })
        .collect();
    LemmaReport { stage: state.stage, checks }
}

fn greatest_violation(state: &ConstructionState) -> Option<Vec<Vertex>> {
    for j in 0..state.coding.len() {
        let c = state.coding[j];
        for x in state.block(j) {
            if x != c && !state.has_edge(x, c) {
                return Some(vec![x, c]);
            }
        }
    }
    None
}

fn code_connection_violation(state: &ConstructionState) -> Option<Vec<Vertex>> {
    let c = &state.coding;
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            if !state.has_edge(c[i], c[j]) {
                return Some(vec![c[i], c[j]]);
            }
        }
    }
    None
}

fn tracing_violation(state: &ConstructionState) -> Option<Vec<Vertex>> {
    (0..state.k).find(|&d| !state.has_edge(d, d + 1)).map(|d| vec![d, d + 1])
}

fn components_violation(state: &ConstructionState) -> Option<Vec<Vertex>> {
    for x in 0..=state.k {
        if state.is_coding(x) {
            continue;
        }
        let bx = state.block_of(x);
        if let Some(&y) = state.neighbors(x).iter().find(|&&y| y > x && state.block_of(y) != bx) {
            return Some(vec![x, y]);
        }
    }
    None
}

fn go_up_violation(state: &ConstructionState) -> Option<Vec<Vertex>> {
    for x in 0..=state.k {
        let bx = state.block_of(x).expect("x <= k");
        let row = state.neighbors(x);
        // neighbours in later blocks, grouped into contiguous runs per block
        let mut i = row.partition_point(|&y| y <= state.coding[bx]);
        while i < row.len() {
            let j = state.block_of(row[i]).expect("neighbour within 0..=k");
            let block = state.block(j);
            let end = row.partition_point(|&y| y <= *block.end());
            let seen = (end - i) as u64;
            if seen != block.end() - block.start() + 1 {
                let z = block.clone().find(|z| !state.has_edge(x, *z)).expect("some block member is missed");
                return Some(vec![x, row[i], z]);
            }
            i = end;
        }
    }
    None
}

/// Some chordless 4-path of the state's graph, if one exists; the
/// construction guarantees there is none.
pub fn check_no_chordless4(state: &ConstructionState) -> Option<PathSeq> {
    state.to_graph().find_chordless_path(4)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecodeError {
    #[error("embedding does not fit the host: {0}")]
    InvalidEmbedding(#[from] EmbeddingError),
    #[error("query {k} is outside the decoded range 0..{side}")]
    QueryOutOfRange { k: u64, side: usize },
}

/// An embedding into the constructed graph together with the running maxima
/// `g'(n) = max { g(a_j) : j <= n }` of its `a`-side images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecodeContext {
    pub embedding: Embedding,
    pub gprime: Vec<Vertex>,
}

impl DecodeContext {
    pub fn new<H: HostGraph + ?Sized>(host: &H, embedding: Embedding) -> Result<Self, DecodeError> {
        embedding.validate(host)?;
        let gprime = embedding
            .a
            .iter()
            .scan(0, |max, &v| {
                *max = (*max).max(v);
                Some(*max)
            })
            .collect();
        Ok(DecodeContext { embedding, gprime })
    }

    /// Whether some `x <= g'(k)` has `f(x) = k`. When the `a`-side images are
    /// stable coding vertices in ascending order this is exactly whether
    /// `k` is in the range of `f`.
    pub fn decode_range(&self, f: &[u64], k: u64) -> Result<bool, DecodeError> {
        let bound = *self
            .gprime
            .get(k as usize)
            .ok_or(DecodeError::QueryOutOfRange { k, side: self.gprime.len() })?;
        let upto = (bound as usize).saturating_add(1).min(f.len());
        Ok(f[..upto].contains(&k))
    }
}

/// First `len` entries of a seeded shuffle of `0..2*len`: an injective
/// sequence mixing small and large values.
pub fn seeded_injective(seed: u64, len: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<u64> = (0..2 * len as u64).collect();
    pool.shuffle(&mut rng);
    pool.truncate(len);
    pool
}

/// A seeded permutation of `0..len`.
pub fn seeded_permutation(seed: u64, len: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<u64> = (0..len as u64).collect();
    pool.shuffle(&mut rng);
    pool
}
