//! Batch runs: one [`RunReport`] per generated instance, written as CSV.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;
use scd_core::{generate, Model, Pattern};
use scd_obstacles::Thresholds;

use crate::args::{BenchArgs, BenchCmd, GenModel};
use crate::solve::{self, Solved, Task};
use crate::{certificate_path, CliError};

pub const CSV_HEADER: &str = "instance,n,seed,cmd,k,outcome,width,time_ms";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutcomeKind {
    Ordering,
    Decomposition,
    Tangle,
    Jungle,
    Yes,
    No,
    Error,
}

impl fmt::Display for OutcomeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutcomeKind::Ordering => "ordering",
            OutcomeKind::Decomposition => "decomposition",
            OutcomeKind::Tangle => "tangle",
            OutcomeKind::Jungle => "jungle",
            OutcomeKind::Yes => "yes",
            OutcomeKind::No => "no",
            OutcomeKind::Error => "error",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub instance: String,
    pub n: usize,
    pub seed: u64,
    pub cmd: &'static str,
    pub k: Option<usize>,
    pub outcome: OutcomeKind,
    pub width: Option<usize>,
    pub certificate: Option<PathBuf>,
    pub time_ms: f64,
}

impl RunReport {
    pub fn csv_row(&self) -> String {
        let opt = |v: Option<usize>| v.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{:.3}",
            self.instance,
            self.n,
            self.seed,
            self.cmd,
            opt(self.k),
            self.outcome,
            opt(self.width),
            self.time_ms
        )
    }
}

fn model(m: GenModel, p: Option<f64>) -> Model {
    match m {
        GenModel::Random => Model::Random,
        GenModel::Transitive => Model::Transitive,
        GenModel::Qr => Model::QuadraticResidue,
        GenModel::Noise => Model::TransitiveNoise(p.unwrap_or(0.1)),
        GenModel::Semicomplete => Model::SemiComplete(p.unwrap_or(0.3)),
    }
}

fn task(cmd: BenchCmd, k: usize) -> Option<Task> {
    Some(match cmd {
        BenchCmd::CutwidthApprox => Task::CutwidthApprox(k),
        BenchCmd::CutwidthExact => Task::CutwidthExact(k),
        BenchCmd::CutwidthOpt => Task::CutwidthOpt,
        BenchCmd::PathwidthApprox => Task::PathwidthApprox { k, ell: None },
        BenchCmd::PathwidthExact => Task::PathwidthExact(k),
        BenchCmd::PathwidthOpt => Task::PathwidthOpt,
        BenchCmd::Contains => return None,
    })
}

fn run_one(b: &BenchArgs, th: &Thresholds, pattern: Option<&Pattern>, n: usize, seed: u64) -> RunReport {
    let instance = format!("{}-n{n}-s{seed}", b.model.as_str());
    let cmd = b.cmd.as_str();
    let start = Instant::now();
    let result: Result<Solved, CliError> =
        generate(model(b.model, b.p), n, seed).map_err(CliError::from).and_then(|t| {
            match (task(b.cmd, b.k), pattern) {
                (Some(task), _) => solve::solve(&t, task, th, b.selfcheck),
                (None, Some(h)) => solve::contains(&t, h, None, th, scd_containment::DEFAULT_TABLE_BUDGET, b.selfcheck),
                (None, None) => Err(CliError::Usage("--cmd contains needs --pattern".into())),
            }
        });
    let time_ms = start.elapsed().as_secs_f64() * 1e3;
    let k = match b.cmd {
        BenchCmd::Contains => pattern.map(Pattern::size),
        _ => task(b.cmd, b.k).and_then(Task::k),
    };
    let mut report =
        RunReport { instance, n, seed, cmd, k, outcome: OutcomeKind::Error, width: None, certificate: None, time_ms };
    match result {
        Ok(solved) => {
            report.outcome = solved.outcome;
            report.width = solved.width;
            if let (Some(dir), Some(text)) = (&b.cert_dir, &solved.certificate) {
                let path = certificate_path(dir, &report.instance, cmd);
                if fs::write(&path, text).is_ok() {
                    report.certificate = Some(path);
                } else {
                    report.outcome = OutcomeKind::Error;
                }
            }
        }
        Err(e) => eprintln!("{}: {e}", report.instance),
    }
    report
}

/// Runs every (size, seed) pair on a worker pool; rows come back in sweep
/// order, so everything but the timings is a function of the arguments.
pub fn bench(b: &BenchArgs, th: &Thresholds, pattern: Option<&Pattern>) -> Result<Vec<RunReport>, CliError> {
    if b.cmd == BenchCmd::Contains && pattern.is_none() {
        return Err(CliError::Usage("--cmd contains needs --pattern".into()));
    }
    if let Some(dir) = &b.cert_dir {
        fs::create_dir_all(dir)?;
    }
    let jobs: Vec<(usize, u64)> = b.sizes.iter().flat_map(|&n| (0..b.count).map(move |i| (n, b.seed + i))).collect();
    let work = || jobs.par_iter().map(|&(n, seed)| run_one(b, th, pattern, n, seed)).collect::<Vec<_>>();
    match b.threads {
        Some(threads) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            Ok(pool.install(work))
        }
        None => Ok(work()),
    }
}
