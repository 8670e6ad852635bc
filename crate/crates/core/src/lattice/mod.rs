//! Finite lattices of length 3: validation, the double-cover scan, rank
//! closure from a generating set, the generation tree, and fence
//! extraction through the graph dichotomy.

pub mod families;
mod fence;
mod order;
mod tree;

use thiserror::Error;

pub use families::LatticeSpec;
pub use fence::{comparability_graph, find_fences, validate_fence, Fence, FenceSearch, FenceViolation};
pub use order::{check_length3, check_no_double_cover, validate_lattice, Axiom, AxiomViolation, FiniteLattice, Poset};
pub use tree::{
    audit_tree, build_tree, closure_and_rank, GenTree, RankTable, Step, StepOp, TreeNode, TreeViolation,
    MAX_TREE_NODES,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("element {element} outside 0..{n}")]
    OutOfRange { element: usize, n: usize },
    #[error("not a lattice: {0}")]
    Axiom(AxiomViolation),
    #[error("lattice does not have length 3")]
    NotLength3,
    #[error("generating set is empty")]
    EmptyGenerators,
    #[error("generators do not reach {unreached:?}")]
    Coverage { unreached: Vec<usize> },
    #[error("tree exceeds {nodes} nodes")]
    TreeLimit { nodes: usize },
    #[error("tree property fails: {0:?}")]
    Tree(TreeViolation),
    #[error("fence target {0} is not odd")]
    EvenTarget(usize),
    #[error("branch {0:?} is not traced by its order")]
    BranchNotTraceable(Vec<usize>),
    #[error("atoms and coatoms {0:?} form a double cover in a validated lattice")]
    DoubleCover(Vec<usize>),
    #[error("extracted sequence is not a fence: {0:?}")]
    Fence(FenceViolation),
    #[error("{0}")]
    Internal(String),
    #[error("invalid lattice JSON: {0}")]
    Json(String),
}

/// Parses, validates, and checks length 3.
pub fn load_length3(spec: &LatticeSpec) -> Result<FiniteLattice, LatticeError> {
    let lat = FiniteLattice::new(spec.poset()?).map_err(LatticeError::Axiom)?;
    if !check_length3(&lat) {
        return Err(LatticeError::NotLength3);
    }
    Ok(lat)
}
