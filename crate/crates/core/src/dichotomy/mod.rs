//! Finite dichotomy for traceable graphs: every large enough traceable graph
//! contains a `K_{2,2}` copy or a chordless `n`-path.
//!
//! Two routes are provided. [`dichotomy`] searches directly. The colouring
//! pipeline ([`run_pipeline`]) follows the Ramsey argument: fix a shortest
//! increasing path between every pair of vertices, colour 4-subsets by
//! which path vertices touch, find a homogeneous set, and read off either a
//! `K_{2,2}` (colour `K_{i,j}`) or a chordless path (residual colour `K`).

mod coloring;
mod extract;
mod paths;
mod search;
mod tower;

use thiserror::Error;

use crate::graph::{PathSeq, Vertex};

pub use coloring::{
    color_4subset, find_homogeneous, for_each_homogeneous, four_subsets, grs_coloring, FourColoring, GrsColor,
    HomogeneousCertificate,
};
pub use extract::{extract_chordless, extract_k22, GreedyExtraction};
pub use paths::IncreasingPathTable;
pub use search::{
    chords, dichotomy, estimate_min_m, homogeneous_size, run_pipeline, traceable_from_mask, DichotomyWitness,
    MinMReport, PipelineOutcome, PipelineTrace, SizeRow, MAX_EXHAUSTIVE_SIZE,
};
pub use tower::{tower, tower_bound, TowerBound, TowerValue};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GrsError {
    #[error("graph is not traced by its stored vertex order")]
    NotTraceable,
    #[error("{0}")]
    InvalidParameter(String),
    #[error("host already contains the chordless path {0:?}")]
    HasChordlessPath(PathSeq),
    #[error("certificate has {got} elements, extraction needs {need}")]
    SubsetTooSmall { need: usize, got: usize },
    #[error("certificate colour {got} is not {want}")]
    WrongColor { want: &'static str, got: GrsColor },
    #[error("extracted K22 vertices collide: {0:?}")]
    ImageCollision(Vec<Vertex>),
    #[error("greedy walk ran out of path after {step} steps")]
    GreedyExhausted { step: usize },
    #[error("greedy step {step} reached {y}, beyond anchor {bound}")]
    ProgressBound { step: usize, y: Vertex, bound: Vertex },
    #[error("extracted witness failed validation: {0}")]
    InvalidWitness(String),
    #[error("exhaustive search up to size {requested} exceeds the limit {max}")]
    ResourceLimit { requested: usize, max: usize },
}
