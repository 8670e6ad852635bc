use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{Embedding, Graph, GraphJson, PathSeq, PatternKind, Vertex};

use super::coloring::{find_homogeneous, grs_coloring, GrsColor, HomogeneousCertificate};
use super::extract::{extract_chordless, extract_k22, GreedyExtraction};
use super::paths::IncreasingPathTable;
use super::GrsError;

/// Largest host size `estimate_min_m` will enumerate exhaustively.
pub const MAX_EXHAUSTIVE_SIZE: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum DichotomyWitness {
    ChordlessPath { path: PathSeq },
    K22Copy { embedding: Embedding },
    Neither,
}

impl DichotomyWitness {
    pub fn is_neither(&self) -> bool {
        matches!(self, DichotomyWitness::Neither)
    }

    pub fn kind(&self) -> &'static str {
        match self {
            DichotomyWitness::ChordlessPath { .. } => "ChordlessPath",
            DichotomyWitness::K22Copy { .. } => "K22Copy",
            DichotomyWitness::Neither => "Neither",
        }
    }
}

/// A chordless `n`-path if there is one, else a `K_{2,2}` copy if there is
/// one, else `Neither` (possible only below the threshold size `m(n)`).
pub fn dichotomy(g: &Graph, n: usize) -> Result<DichotomyWitness, GrsError> {
    if !g.is_traceable() {
        return Err(GrsError::NotTraceable);
    }
    if let Some(path) = g.find_chordless_path(n) {
        return Ok(DichotomyWitness::ChordlessPath { path });
    }
    if let Some(embedding) = g.find_embedding(PatternKind::K22) {
        return Ok(DichotomyWitness::K22Copy { embedding });
    }
    Ok(DichotomyWitness::Neither)
}

/// Chords of the fixed Hamiltonian path `0 - 1 - ... - (size-1)`: all pairs
/// `(i, j)` with `j >= i + 2`, in lexicographic order.
pub fn chords(size: usize) -> Vec<(Vertex, Vertex)> {
    let size = size as Vertex;
    (0..size).flat_map(|i| (i + 2..size).map(move |j| (i, j))).collect()
}

/// The traceable graph on `0..size` whose chords are selected by `mask`.
pub fn traceable_from_mask(size: usize, chord_list: &[(Vertex, Vertex)], mask: u64) -> Graph {
    let spine = (1..size as Vertex).map(|v| (v - 1, v));
    let extra = chord_list
        .iter()
        .enumerate()
        .filter(|(b, _)| mask >> b & 1 == 1)
        .map(|(_, &e)| e);
    Graph::on_range(size, spine.chain(extra)).expect("chords lie within range")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeRow {
    pub size: usize,
    pub graphs: u64,
    pub neither: u64,
    /// Lowest-mask `Neither` instance of this size.
    pub example: Option<GraphJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinMReport {
    pub n: usize,
    pub sizes: Vec<SizeRow>,
    /// One more than the largest size with a `Neither` instance.
    pub empirical_lower_bound: usize,
}

/// Runs [`dichotomy`] on every traceable graph with at most `size_bound`
/// vertices (fixed spine, every chord subset) and counts `Neither` outcomes.
/// Work is split across the current rayon pool; results do not depend on
/// the number of workers.
pub fn estimate_min_m(n: usize, size_bound: usize) -> Result<MinMReport, GrsError> {
    if size_bound > MAX_EXHAUSTIVE_SIZE {
        return Err(GrsError::ResourceLimit { requested: size_bound, max: MAX_EXHAUSTIVE_SIZE });
    }
    let mut sizes = Vec::with_capacity(size_bound);
    for size in 1..=size_bound {
        let chord_list = chords(size);
        let total = 1u64 << chord_list.len();
        let (neither, first) = (0..total)
            .into_par_iter()
            .map(|mask| {
                let g = traceable_from_mask(size, &chord_list, mask);
                let neither = dichotomy(&g, n).expect("spine makes it traceable").is_neither();
                (u64::from(neither), neither.then_some(mask))
            })
            .reduce(
                || (0, None),
                |(c1, m1), (c2, m2)| {
                    let first = match (m1, m2) {
                        (Some(a), Some(b)) => Some(a.min(b)),
                        (a, b) => a.or(b),
                    };
                    (c1 + c2, first)
                },
            );
        let example = first.map(|mask| GraphJson::from(&traceable_from_mask(size, &chord_list, mask)));
        sizes.push(SizeRow { size, graphs: total, neither, example });
    }
    let empirical_lower_bound = sizes
        .iter()
        .filter(|r| r.neither > 0)
        .map(|r| r.size + 1)
        .max()
        .unwrap_or(1);
    Ok(MinMReport { n, sizes, empirical_lower_bound })
}

/// What the colouring pipeline ended with.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PipelineOutcome {
    /// Some fixed increasing path already has `n` or more vertices.
    LongIncreasingPath { path: PathSeq },
    /// The host is too small to force a homogeneous set of the required size.
    NoHomogeneousSet,
    K22 { embedding: Embedding },
    Chordless { extraction: GreedyExtraction },
}

/// Step-by-step record of one pipeline run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipelineTrace {
    pub n: usize,
    /// Homogeneous set size requested, `max(n + 1, 8)`.
    pub q: usize,
    pub palette: u32,
    pub longest_increasing_edges: usize,
    pub certificate: Option<HomogeneousCertificate>,
    pub color: Option<GrsColor>,
    pub outcome: PipelineOutcome,
}

/// Homogeneous size requested by the proof pipeline.
pub fn homogeneous_size(n: usize) -> usize {
    (n + 1).max(8)
}

/// Increasing-path table, 4-subset colouring, homogeneous search, then
/// extraction according to the homogeneous colour.
pub fn run_pipeline(g: &Graph, n: usize) -> Result<PipelineTrace, GrsError> {
    if n < 2 {
        return Err(GrsError::InvalidParameter(format!("path length n = {n} must be at least 2")));
    }
    let table = IncreasingPathTable::build(g)?;
    let longest = table.longest().map_or(0, |(_, _, len)| len);
    let q = homogeneous_size(n);
    let palette = GrsColor::palette(n);
    let mut trace = PipelineTrace {
        n,
        q,
        palette,
        longest_increasing_edges: longest,
        certificate: None,
        color: None,
        outcome: PipelineOutcome::NoHomogeneousSet,
    };
    let coloring = match grs_coloring(&table, n) {
        Ok(c) => c,
        Err(GrsError::HasChordlessPath(path)) => {
            trace.outcome = PipelineOutcome::LongIncreasingPath { path };
            return Ok(trace);
        }
        Err(e) => return Err(e),
    };
    let all: Vec<usize> = (0..g.len()).collect();
    let Some(cert) = find_homogeneous(&coloring, &all, q)? else {
        return Ok(trace);
    };
    let color = GrsColor::decode(cert.color, n);
    trace.outcome = match color {
        GrsColor::Pair { .. } => PipelineOutcome::K22 { embedding: extract_k22(&table, n, &cert)? },
        GrsColor::Residual => PipelineOutcome::Chordless { extraction: extract_chordless(&table, n, &cert)? },
    };
    trace.certificate = Some(cert);
    trace.color = Some(color);
    Ok(trace)
}
