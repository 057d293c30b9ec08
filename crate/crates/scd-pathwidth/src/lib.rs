//! Pathwidth of semi-complete digraphs.
//!
//! Both algorithms work along the outdegree ordering. The approximation cuts
//! it into windows and patches each cut with the matching selector; the exact
//! search enumerates thin separations and looks for a chain through them.

mod approx;
mod exact;

pub use approx::approx_pathwidth;
pub use exact::{exact_pathwidth, ExactPathwidth, ThinStats};

use scd_core::{PathDecomposition, SemiCompleteDigraph};
use scd_obstacles::{DegreeTangle, MatchingTangle};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathwidthOutcome {
    /// `width` is 0 for the empty digraph; see [`OptimalPathwidth::empty`].
    Decomposition {
        decomposition: PathDecomposition,
        width: usize,
    },
    Degree(DegreeTangle),
    Matching(MatchingTangle),
    /// Exact search found no chain of thin separations.
    Exhausted,
}

impl PathwidthOutcome {
    pub fn decomposition(&self) -> Option<&PathDecomposition> {
        match self {
            PathwidthOutcome::Decomposition { decomposition, .. } => Some(decomposition),
            _ => None,
        }
    }

    pub fn is_yes(&self) -> bool {
        matches!(self, PathwidthOutcome::Decomposition { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalPathwidth {
    pub value: usize,
    pub decomposition: PathDecomposition,
    /// The digraph has no vertices; its true width is −1.
    pub empty: bool,
    pub runs: Vec<ThinStats>,
}

/// Smallest k accepted by [`exact_pathwidth`].
pub fn pathwidth(t: &SemiCompleteDigraph) -> OptimalPathwidth {
    let mut runs = Vec::new();
    for k in 0.. {
        let run = exact_pathwidth(t, k);
        runs.push(run.stats);
        if let PathwidthOutcome::Decomposition { decomposition, width } = run.outcome {
            return OptimalPathwidth { value: width, decomposition, empty: t.n() == 0, runs };
        }
        assert!(k < t.n(), "exact search refused k = n");
    }
    unreachable!()
}
