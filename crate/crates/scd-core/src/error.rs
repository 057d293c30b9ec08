use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("loop arc at vertex {0}")]
    LoopArc(usize),
    #[error("vertices {0} and {1} are not joined by any arc")]
    NotSemiComplete(usize, usize),
    #[error("vertices {0} and {1} are joined in both directions (tournament required)")]
    Digon(usize, usize),
    #[error("matrix shape mismatch: expected {expected}x{expected}, row {row} has {found} entries")]
    ShapeError { expected: usize, row: usize, found: usize },
    #[error("vertex {0} is out of range")]
    BadVertex(usize),
    #[error("not a permutation of 0..{0}")]
    NotPermutation(usize),
    #[error("property (i) violated: vertex {0} is in no bag")]
    CoverageViolation(usize),
    #[error("property (ii) violated: vertex {v} is in bags {i} and {k} but not in bag {j}")]
    ContiguityViolation { v: usize, i: usize, j: usize, k: usize },
    #[error("property (iii) violated for arc ({0},{1})")]
    ArcViolation(usize, usize),
    #[error("not a separation: {0}")]
    InvalidSeparation(String),
    #[error("not a separation chain: {0}")]
    InvalidChain(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, CoreError>;
