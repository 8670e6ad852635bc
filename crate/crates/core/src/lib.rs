//! Executable versions of three constructions around traceable graphs:
//! the dump construction of a traceable graph without chordless 4-paths,
//! the finite dichotomy between `K_{2,2}` copies and long chordless paths,
//! and fence extraction in finitely generated lattices of length 3.

pub mod construction;
pub mod dichotomy;
pub mod graph;
pub mod lattice;

pub use graph::{Embedding, Graph, GraphError, PathSeq, PatternKind, Vertex};
