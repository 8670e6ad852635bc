use serde::{Deserialize, Serialize};

use crate::dichotomy::{dichotomy, DichotomyWitness, GrsError};
use crate::graph::{Graph, Vertex};

use super::order::FiniteLattice;
use super::tree::{build_tree, closure_and_rank, GenTree, RankTable};
use super::LatticeError;

/// `x_0 < x_1 > x_2 < ... x_n` with `n` odd and no other comparabilities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Fence(pub Vec<usize>);

impl Fence {
    /// The `n` in `x_0, ..., x_n`.
    pub fn length(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FenceViolation {
    EvenLength { len: usize },
    Repeated { element: usize },
    /// `x_i` and `x_j` should be related as `lower < upper` but are not.
    Missing { i: usize, j: usize },
    /// `x_i` and `x_j` are comparable but should not be.
    Extra { i: usize, j: usize },
}

/// Full pairwise scan of the fence conditions.
pub fn validate_fence(lat: &FiniteLattice, seq: &[usize]) -> Result<(), FenceViolation> {
    if seq.len() % 2 != 0 || seq.is_empty() {
        return Err(FenceViolation::EvenLength { len: seq.len().saturating_sub(1) });
    }
    for (i, &x) in seq.iter().enumerate() {
        if seq[..i].contains(&x) {
            return Err(FenceViolation::Repeated { element: x });
        }
    }
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if j == i + 1 {
                // the even-indexed end is the lower one
                let (lo, hi) = if i % 2 == 0 { (seq[i], seq[j]) } else { (seq[j], seq[i]) };
                if !lat.lt(lo, hi) {
                    return Err(FenceViolation::Missing { i, j });
                }
            } else if lat.comparable(seq[i], seq[j]) {
                return Err(FenceViolation::Extra { i, j });
            }
        }
    }
    Ok(())
}

/// Graph on `elems` (in the given order) joining comparable elements.
pub fn comparability_graph(lat: &FiniteLattice, elems: &[usize]) -> Graph {
    let mut edges = Vec::new();
    for (i, &x) in elems.iter().enumerate() {
        for &y in &elems[i + 1..] {
            if lat.comparable(x, y) {
                edges.push((x as Vertex, y as Vertex));
            }
        }
    }
    Graph::new(elems.iter().map(|&x| x as Vertex).collect(), edges).expect("distinct elements")
}

/// Everything `find_fences` computed on the way to its answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FenceSearch {
    pub ranks: RankTable,
    pub tree: GenTree,
    pub branches_tried: usize,
    pub branch: Option<Vec<usize>>,
    pub fence: Option<Fence>,
}

/// Ranks the lattice from `generators`, builds the whole tree, and runs the
/// dichotomy for a chordless path on `target + 1` vertices over the
/// comparability graph of each maximal branch long enough, deepest first.
/// A path that starts at a coatom is read backwards.
pub fn find_fences(lat: &FiniteLattice, generators: &[usize], target: usize) -> Result<FenceSearch, LatticeError> {
    if target % 2 == 0 {
        return Err(LatticeError::EvenTarget(target));
    }
    let ranks = closure_and_rank(lat, generators)?;
    let tree = build_tree(lat, &ranks, ranks.max_rank())?;
    let mut search = FenceSearch { ranks, tree, branches_tried: 0, branch: None, fence: None };
    for (level, idx) in search.tree.maximal_branches() {
        if level < target {
            break;
        }
        search.branches_tried += 1;
        let branch = search.tree.branch(level, idx);
        let g = comparability_graph(lat, &branch);
        match dichotomy(&g, target + 1) {
            Ok(DichotomyWitness::ChordlessPath { path }) => {
                let mut seq: Vec<usize> = path.vertices().iter().map(|&v| v as usize).collect();
                if lat.is_coatom(seq[0]) && !lat.is_atom(seq[0]) {
                    seq.reverse();
                }
                validate_fence(lat, &seq).map_err(LatticeError::Fence)?;
                search.branch = Some(branch);
                search.fence = Some(Fence(seq));
                return Ok(search);
            }
            Ok(DichotomyWitness::K22Copy { embedding }) => {
                let mut w: Vec<usize> = embedding.a.iter().chain(&embedding.b).map(|&v| v as usize).collect();
                w.sort_unstable();
                return Err(LatticeError::DoubleCover(w));
            }
            Ok(DichotomyWitness::Neither) => {}
            Err(GrsError::NotTraceable) => return Err(LatticeError::BranchNotTraceable(branch)),
            Err(e) => return Err(LatticeError::Internal(e.to_string())),
        }
    }
    Ok(search)
}
