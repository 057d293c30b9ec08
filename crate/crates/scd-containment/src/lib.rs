//! Topological containment of a small pattern digraph H in a semi-complete host.
//!
//! Along a nice path decomposition the DP keeps the set of signatures that
//! some partial expansion realises. A signature records where each pattern
//! vertex went and, for each pattern arc, the endpoints of the pieces of its
//! path that are already placed. The end-to-end test first approximates
//! pathwidth: a decomposition goes to the DP, an obstacle means H is there.

mod dp;
mod signature;
mod topological;

pub use dp::{
    contains_on_decomposition, contains_on_decomposition_with_budget, forget_vertex, introduce_vertex, DpRun, DpTable,
    Move, TableStats, DEFAULT_TABLE_BUDGET, HISTORY_FACTOR,
};
pub use signature::{enumerate_signatures, signature_bound, End, Signature, Slot, FORGOTTEN_CODE, UNKNOWN_CODE};
pub use topological::{contains_topological, contains_topological_with_budget, Certificate, Containment};

use scd_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ContainmentError {
    #[error("signature count bound {bound} exceeds budget {budget}")]
    BudgetExceeded { bound: u128, budget: u128 },
    #[error("a DP table reached {entries} entries, budget is {budget}")]
    TableBudgetExceeded { entries: usize, budget: usize },
    #[error("the DP stored {entries} parent pointers, budget is {budget}")]
    HistoryBudgetExceeded { entries: usize, budget: usize },
    #[error(transparent)]
    InvalidDecomposition(#[from] CoreError),
    #[error("no certificate: {0}")]
    CertificateUnavailable(String),
}
