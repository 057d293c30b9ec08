use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstacleError {
    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),
    /// A branch the construction proves unreachable was reached; the input
    /// was not what it claimed to be, or the thresholds were lowered too far.
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown or invalid constant `{0}`")]
    BadConstant(String),
}

/// The first clause of a certificate that fails against the host.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("vertex {0} is out of range")]
    BadVertex(usize),
    #[error("vertex {0} is listed twice")]
    Repeated(usize),
    #[error("has {have} vertices, needs at least {need}")]
    TooSmall { have: usize, need: usize },
    #[error("outdegrees of {v} and {w} differ by more than {ell}")]
    DegreeSpread { v: usize, w: usize, ell: usize },
    #[error("sides have sizes {x} and {y}, expected {k}")]
    SideSizes { x: usize, y: usize, k: usize },
    #[error("vertex {0} lies on both sides")]
    NotDisjoint(usize),
    #[error("matching pair ({0},{1}) is not an arc")]
    MissingMatchingArc(usize, usize),
    #[error("d+({w}) does not exceed d+({v}) + {ell}")]
    DegreeGap { v: usize, w: usize, ell: usize },
    #[error("vertex {0} is on neither side")]
    NotPartition(usize),
    #[error("only {have} arcs from X to Y, needs {need}")]
    TooFewArcs { have: usize, need: usize },
    #[error("d+({w}) < d+({v}) with {v} in X and {w} in Y")]
    BackwardDegree { v: usize, w: usize },
    #[error("pair ({v},{w}) has {have} paths, needs {need}")]
    MissingPaths { v: usize, w: usize, have: usize, need: usize },
    #[error("pair ({v},{w}) path #{idx}: {reason}")]
    BadPath { v: usize, w: usize, idx: usize, reason: String },
    #[error("pair ({v},{w}) paths #{i} and #{j} are not disjoint")]
    PathsNotDisjoint { v: usize, w: usize, i: usize, j: usize },
}
