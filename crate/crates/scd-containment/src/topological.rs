use scd_core::{ModelKind, ModelMap, PathDecomposition, Pattern, SemiCompleteDigraph};
use scd_obstacles::{
    embed_pattern, jungle_from_degree_tangle, jungle_from_matching_tangle, Obstacle, ObstacleError, ShortJungle,
    Thresholds,
};
use scd_pathwidth::{approx_pathwidth, exact_pathwidth, PathwidthOutcome};

use crate::dp::{contains_on_decomposition_with_budget, DpRun, DEFAULT_TABLE_BUDGET};
use crate::ContainmentError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// The DP ran on a decomposition; its run holds the expansion when the
    /// answer is yes.
    Dp(DpRun),
    /// A jungle found inside the obstacle, and H embedded in it.
    Jungle { obstacle: Obstacle, jungle: ShortJungle, model: ModelMap },
    /// The obstacle was found but no jungle could be extracted from it.
    Unavailable { obstacle: Obstacle, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Containment {
    pub contains: bool,
    pub certificate: Certificate,
    /// False when a yes rests on an obstacle found under lowered constants.
    pub theory_backed: bool,
}

impl Containment {
    pub fn model(&self) -> Option<&ModelMap> {
        match &self.certificate {
            Certificate::Dp(run) => run.model.as_ref(),
            Certificate::Jungle { model, .. } => Some(model),
            Certificate::Unavailable { .. } => None,
        }
    }

    /// Turns an answer without a checkable certificate into an error.
    pub fn require_certificate(self) -> Result<Self, ContainmentError> {
        match self.certificate {
            Certificate::Unavailable { reason, .. } => Err(ContainmentError::CertificateUnavailable(reason)),
            _ => Ok(self),
        }
    }
}

/// Widest decomposition the exact search is asked for before running the DP.
pub const REFINE_WIDTH: usize = 4;

/// The DP is exponential in the bag size, so a thinner exact decomposition
/// replaces the approximate one when one of width at most [`REFINE_WIDTH`] exists.
fn refine(t: &SemiCompleteDigraph, decomposition: PathDecomposition, width: usize) -> PathDecomposition {
    for j in 0..width.min(REFINE_WIDTH + 1) {
        if let PathwidthOutcome::Decomposition { decomposition, .. } = exact_pathwidth(t, j).outcome {
            return decomposition;
        }
    }
    decomposition
}

fn lowered(th: &Thresholds) -> bool {
    let d = Thresholds::default();
    th.containment_width < d.containment_width
        || th.containment_window < d.containment_window
        || th.degree_jungle > d.degree_jungle
        || th.matching_jungle_size > d.matching_jungle_size
        || th.matching_jungle_gap > d.matching_jungle_gap
}

pub fn contains_topological(
    t: &SemiCompleteDigraph,
    h: &Pattern,
    th: &Thresholds,
) -> Result<Containment, ContainmentError> {
    contains_topological_with_budget(t, h, th, DEFAULT_TABLE_BUDGET)
}

/// Approximates pathwidth with parameters scaled by |H|; runs the DP on a
/// decomposition, or embeds H into a jungle inside the obstacle.
pub fn contains_topological_with_budget(
    t: &SemiCompleteDigraph,
    h: &Pattern,
    th: &Thresholds,
    budget: usize,
) -> Result<Containment, ContainmentError> {
    let k = h.size();
    if h.vertex_count() == 0 {
        let model = ModelMap { kind: ModelKind::Expansion, vertices: Vec::new(), paths: Vec::new() };
        let run = DpRun { accepted: true, model: Some(model), tables: Vec::new() };
        return Ok(Containment { contains: true, certificate: Certificate::Dp(run), theory_backed: true });
    }
    let (obstacle, jungle) = match approx_pathwidth(t, th.containment_width * k, th.containment_window * k) {
        PathwidthOutcome::Decomposition { decomposition, width } => {
            let decomposition = refine(t, decomposition, width);
            let run = contains_on_decomposition_with_budget(t, h, &decomposition, budget)?;
            let contains = run.accepted;
            return Ok(Containment { contains, certificate: Certificate::Dp(run), theory_backed: true });
        }
        PathwidthOutcome::Degree(d) => {
            let kk = d.ell.min(d.x.len() / th.degree_jungle.max(1));
            let jungle = jungle_from_degree_tangle(t, &d.x, kk, th);
            (Obstacle::Degree(d), jungle)
        }
        PathwidthOutcome::Matching(m) => {
            let kk = (m.k / th.matching_jungle_size.max(1)).min(m.ell / th.matching_jungle_gap.max(1));
            let jungle = jungle_from_matching_tangle(t, &m, kk, th);
            (Obstacle::Matching(m), jungle)
        }
        PathwidthOutcome::Exhausted => unreachable!("the approximation never exhausts"),
    };
    let theory_backed = !lowered(th);
    let certificate = match jungle.and_then(|j| embed_pattern(&j, h).map(|model| (j, model))) {
        Ok((jungle, model)) => match model.verify(t, h) {
            Ok(()) => Certificate::Jungle { obstacle, jungle, model },
            Err(e) => Certificate::Unavailable { obstacle, reason: format!("embedded model fails verification: {e}") },
        },
        Err(ObstacleError::PreconditionUnmet(reason) | ObstacleError::InternalContradiction(reason)) => {
            Certificate::Unavailable { obstacle, reason }
        }
        Err(e) => Certificate::Unavailable { obstacle, reason: e.to_string() },
    };
    Ok(Containment { contains: true, certificate, theory_backed })
}
