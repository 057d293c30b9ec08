//! Semi-complete digraphs and the decomposition artifacts built on them:
//! vertex orderings, separations, separation chains and path decompositions.

#![allow(clippy::needless_range_loop)]

pub mod decomposition;
pub mod digraph;
pub mod error;
pub mod generate;
pub mod io;
pub mod ordering;
pub mod pattern;

pub use decomposition::{
    chain_to_decomposition, decomposition_to_chain, make_nice, nice_steps, verify_path_decomposition, NiceStep,
    PathDecomposition, Separation, SeparationChain,
};
pub use digraph::{vertex_set, SemiCompleteDigraph};
pub use error::{CoreError, Result};
pub use fixedbitset::FixedBitSet;
pub use generate::{generate, tournament_from_code, Model};
pub use ordering::{ordering_width, outdegree_ordering, prefix_cuts, VertexOrdering};
pub use pattern::{ModelKind, ModelMap, ModelViolation, Pattern};

/// The directed triangle 0 → 1 → 2 → 0.
pub fn directed_triangle() -> SemiCompleteDigraph {
    SemiCompleteDigraph::from_fn(3, |u, v| (u + 1) % 3 == v).expect("triangle is a tournament")
}

/// Transitive tournament TT_n: arc (v_i, v_j) iff i > j.
pub fn transitive(n: usize) -> SemiCompleteDigraph {
    SemiCompleteDigraph::from_fn(n, |u, v| u > v).expect("transitive tournament")
}
