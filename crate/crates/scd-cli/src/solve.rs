//! One solver run turned into a verdict, a headline and a certificate text.

use scd_containment::{
    contains_on_decomposition_with_budget, contains_topological_with_budget, Certificate, ContainmentError, DpRun,
};
use scd_core::io::{format_decomposition, format_ordering};
use scd_core::{ordering_width, verify_path_decomposition, PathDecomposition, Pattern, SemiCompleteDigraph};
use scd_cutwidth::{approx_cutwidth, cutwidth, exact_cutwidth, CutwidthOutcome};
use scd_obstacles::{format_obstacle, Obstacle, Thresholds};
use scd_pathwidth::{approx_pathwidth, exact_pathwidth, pathwidth, PathwidthOutcome};

use crate::args::Mode;
use crate::model_io::format_model;
use crate::report::OutcomeKind;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Task {
    CutwidthApprox(usize),
    CutwidthExact(usize),
    CutwidthOpt,
    PathwidthApprox { k: usize, ell: Option<usize> },
    PathwidthExact(usize),
    PathwidthOpt,
}

fn need_k(k: Option<usize>, what: &str) -> Result<usize, CliError> {
    k.ok_or_else(|| CliError::Usage(format!("{what} needs -k")))
}

impl Task {
    pub fn cutwidth(mode: Mode, k: Option<usize>) -> Result<Task, CliError> {
        Ok(match mode {
            Mode::Approx => Task::CutwidthApprox(need_k(k, "cutwidth approx")?),
            Mode::Exact => Task::CutwidthExact(need_k(k, "cutwidth exact")?),
            Mode::Opt => Task::CutwidthOpt,
        })
    }

    pub fn pathwidth(mode: Mode, k: Option<usize>, ell: Option<usize>) -> Result<Task, CliError> {
        Ok(match mode {
            Mode::Approx => Task::PathwidthApprox { k: need_k(k, "pathwidth approx")?, ell },
            Mode::Exact => Task::PathwidthExact(need_k(k, "pathwidth exact")?),
            Mode::Opt => Task::PathwidthOpt,
        })
    }

    pub fn k(self) -> Option<usize> {
        match self {
            Task::CutwidthApprox(k) | Task::CutwidthExact(k) | Task::PathwidthExact(k) => Some(k),
            Task::PathwidthApprox { k, .. } => Some(k),
            Task::CutwidthOpt | Task::PathwidthOpt => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Solved {
    pub verdict: Verdict,
    pub outcome: OutcomeKind,
    /// Width of the returned ordering or decomposition, or the optimum.
    pub width: Option<usize>,
    pub headline: String,
    pub certificate: Option<String>,
    pub stats: Option<String>,
    pub note: Option<String>,
}

impl Solved {
    fn yes(outcome: OutcomeKind, width: Option<usize>, headline: String, certificate: String) -> Self {
        Solved {
            verdict: Verdict::Yes,
            outcome,
            width,
            headline,
            certificate: Some(certificate),
            stats: None,
            note: None,
        }
    }

    fn tangle(headline: String, obstacle: &Obstacle) -> Self {
        Solved {
            verdict: Verdict::No,
            outcome: OutcomeKind::Tangle,
            width: None,
            headline,
            certificate: Some(format_obstacle(obstacle)),
            stats: None,
            note: None,
        }
    }

    fn exhausted(headline: String) -> Self {
        Solved {
            verdict: Verdict::No,
            outcome: OutcomeKind::No,
            width: None,
            headline,
            certificate: None,
            stats: None,
            note: Some("search exhausted; no obstacle to print".into()),
        }
    }

    fn with_stats(mut self, stats: String) -> Self {
        self.stats = Some(stats);
        self
    }
}

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), CliError> {
    if ok {
        Ok(())
    } else {
        Err(CliError::SelfCheck(what()))
    }
}

fn check_obstacle(t: &SemiCompleteDigraph, o: &Obstacle) -> Result<(), CliError> {
    o.verify(t).map_err(|e| CliError::SelfCheck(format!("obstacle does not verify: {e}")))
}

fn check_ordering(
    t: &SemiCompleteDigraph,
    ordering: &scd_core::VertexOrdering,
    width: usize,
    limit: usize,
) -> Result<(), CliError> {
    let actual = ordering_width(t, ordering);
    check(actual == width && width <= limit, || format!("ordering has width {actual}, reported {width}, limit {limit}"))
}

fn check_decomposition(
    t: &SemiCompleteDigraph,
    w: &PathDecomposition,
    width: usize,
    limit: usize,
) -> Result<(), CliError> {
    match verify_path_decomposition(t, w) {
        Ok(actual) => check(actual == width && width <= limit, || {
            format!("decomposition has width {actual}, reported {width}, limit {limit}")
        }),
        Err(e) => Err(CliError::SelfCheck(format!("decomposition does not verify: {e}"))),
    }
}

pub fn solve(t: &SemiCompleteDigraph, task: Task, th: &Thresholds, selfcheck: bool) -> Result<Solved, CliError> {
    let cut = |o: CutwidthOutcome, k: usize, limit: usize| -> Result<Solved, CliError> {
        Ok(match o {
            CutwidthOutcome::Ordering { ordering, width } => {
                if selfcheck {
                    check_ordering(t, &ordering, width, limit)?;
                }
                Solved::yes(
                    OutcomeKind::Ordering,
                    Some(width),
                    format!("YES width {width}"),
                    format_ordering(&ordering),
                )
            }
            CutwidthOutcome::Backward(b) => {
                let o = Obstacle::Backward(b);
                if selfcheck {
                    check_obstacle(t, &o)?;
                }
                Solved::tangle(format!("NO cutwidth > {k}"), &o)
            }
            CutwidthOutcome::Degree(d) => {
                let o = Obstacle::Degree(d);
                if selfcheck {
                    check_obstacle(t, &o)?;
                }
                Solved::tangle(format!("NO cutwidth > {k}"), &o)
            }
            CutwidthOutcome::Exhausted => Solved::exhausted(format!("NO cutwidth > {k}")),
        })
    };
    let path = |o: PathwidthOutcome, k: usize, limit: usize| -> Result<Solved, CliError> {
        Ok(match o {
            PathwidthOutcome::Decomposition { decomposition, width } => {
                if selfcheck {
                    check_decomposition(t, &decomposition, width, limit)?;
                }
                let text = format_decomposition(&decomposition);
                Solved::yes(OutcomeKind::Decomposition, Some(width), format!("YES width {width}"), text)
            }
            PathwidthOutcome::Degree(d) => {
                let o = Obstacle::Degree(d);
                if selfcheck {
                    check_obstacle(t, &o)?;
                }
                Solved::tangle(format!("NO pathwidth > {k}"), &o)
            }
            PathwidthOutcome::Matching(m) => {
                let o = Obstacle::Matching(m);
                if selfcheck {
                    check_obstacle(t, &o)?;
                }
                Solved::tangle(format!("NO pathwidth > {k}"), &o)
            }
            PathwidthOutcome::Exhausted => Solved::exhausted(format!("NO pathwidth > {k}")),
        })
    };
    match task {
        Task::CutwidthApprox(k) => {
            let bound = th.cutwidth_bound(k);
            Ok(cut(approx_cutwidth(t, k, th), k, bound)?.with_stats(format!("width bound {bound}")))
        }
        Task::CutwidthExact(k) => {
            let run = exact_cutwidth(t, k, th);
            let stats = format!(
                "states {} transitions {} window {} bound {}",
                run.stats.states,
                run.stats.transitions,
                run.stats.window,
                run.stats.state_bound(t.n())
            );
            Ok(cut(run.outcome, k, k)?.with_stats(stats))
        }
        Task::CutwidthOpt => {
            let opt = cutwidth(t, th);
            if selfcheck {
                check_ordering(t, &opt.ordering, opt.value, opt.value)?;
            }
            let states: usize = opt.runs.iter().map(|r| r.states).sum();
            Ok(Solved::yes(
                OutcomeKind::Ordering,
                Some(opt.value),
                opt.value.to_string(),
                format_ordering(&opt.ordering),
            )
            .with_stats(format!("runs {} states {states}", opt.runs.len())))
        }
        Task::PathwidthApprox { k, ell } => {
            let ell = ell.unwrap_or(th.pathwidth_window * k);
            Ok(path(approx_pathwidth(t, k, ell), k, ell + 2 * k)?
                .with_stats(format!("window {ell} width bound {}", ell + 2 * k)))
        }
        Task::PathwidthExact(k) => {
            let run = exact_pathwidth(t, k);
            let stats = format!(
                "candidates {} nodes {} arcs tested {} bound {}",
                run.stats.candidates, run.stats.nodes, run.stats.arcs_tested, run.stats.characterization_bound
            );
            Ok(path(run.outcome, k, k)?.with_stats(stats))
        }
        Task::PathwidthOpt => {
            let opt = pathwidth(t);
            if selfcheck {
                check_decomposition(t, &opt.decomposition, opt.value, opt.value)?;
            }
            let headline = if opt.empty { "-1".to_string() } else { opt.value.to_string() };
            let nodes: usize = opt.runs.iter().map(|r| r.nodes).sum();
            let text = format_decomposition(&opt.decomposition);
            Ok(Solved::yes(OutcomeKind::Decomposition, Some(opt.value), headline, text)
                .with_stats(format!("runs {} nodes {nodes}", opt.runs.len())))
        }
    }
}

fn containment_error(e: ContainmentError) -> CliError {
    match e {
        ContainmentError::BudgetExceeded { .. }
        | ContainmentError::TableBudgetExceeded { .. }
        | ContainmentError::HistoryBudgetExceeded { .. } => CliError::Budget(e.to_string()),
        ContainmentError::InvalidDecomposition(e) => CliError::Core(e),
        ContainmentError::CertificateUnavailable(reason) => CliError::Usage(reason),
    }
}

fn dp_solved(t: &SemiCompleteDigraph, h: &Pattern, run: &DpRun, selfcheck: bool) -> Result<Solved, CliError> {
    let stats = format!("tables {} largest {}", run.tables.len(), run.max_table());
    let Some(model) = run.model.as_ref().filter(|_| run.accepted) else {
        return Ok(Solved {
            verdict: Verdict::No,
            outcome: OutcomeKind::No,
            width: None,
            headline: "NO".into(),
            certificate: None,
            stats: Some(stats),
            note: None,
        });
    };
    if selfcheck {
        model.verify(t, h).map_err(|e| CliError::SelfCheck(format!("model does not verify: {e}")))?;
    }
    Ok(Solved::yes(OutcomeKind::Yes, None, "YES".into(), format_model(model)).with_stats(stats))
}

/// Runs the DP on `decomposition` when given, else the full containment test.
pub fn contains(
    t: &SemiCompleteDigraph,
    h: &Pattern,
    decomposition: Option<&PathDecomposition>,
    th: &Thresholds,
    budget: usize,
    selfcheck: bool,
) -> Result<Solved, CliError> {
    if let Some(w) = decomposition {
        let run = contains_on_decomposition_with_budget(t, h, w, budget).map_err(containment_error)?;
        return dp_solved(t, h, &run, selfcheck);
    }
    let c = contains_topological_with_budget(t, h, th, budget).map_err(containment_error)?;
    let mut solved = match &c.certificate {
        Certificate::Dp(run) => dp_solved(t, h, run, selfcheck)?,
        Certificate::Jungle { obstacle, jungle, model } => {
            if selfcheck {
                check_obstacle(t, obstacle)?;
                jungle.verify(t).map_err(|e| CliError::SelfCheck(format!("jungle does not verify: {e}")))?;
                model.verify(t, h).map_err(|e| CliError::SelfCheck(format!("model does not verify: {e}")))?;
            }
            let mut s = Solved::yes(OutcomeKind::Jungle, None, "YES".into(), format_model(model));
            s.note = Some(format!("model embedded in a ({}, {})-short jungle", jungle.k, jungle.d));
            s
        }
        Certificate::Unavailable { obstacle, reason } => {
            if selfcheck {
                check_obstacle(t, obstacle)?;
            }
            let mut s = Solved::yes(OutcomeKind::Tangle, None, "YES".into(), format_obstacle(obstacle));
            s.note = Some(format!("no model extracted: {reason}"));
            s
        }
    };
    if !c.theory_backed {
        let warning = "answer rests on an obstacle under lowered constants";
        solved.note = Some(match solved.note {
            Some(n) => format!("{n}; {warning}"),
            None => warning.into(),
        });
    }
    Ok(solved)
}
