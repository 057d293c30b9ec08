//! Command-line front end: instance generation, the solvers, certificate
//! checking, oracle cross-checks and CSV batch reports.
//!
//! Exit codes: 0 yes, 1 no, 2 usage or input error, 3 budget exceeded.

/// `println!` that ignores a closed stdout, e.g. when piped into `head`.
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

/// `print!` counterpart of `outln!`.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = write!(std::io::stdout().lock(), $($arg)*);
    }};
}

pub mod args;
pub mod model_io;
pub mod report;
pub mod solve;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::Parser;
use scd_core::io::{format_digraph, parse_decomposition, parse_digraph, parse_ordering, parse_pattern};
use scd_core::{generate, ordering_width, verify_path_decomposition, CoreError, Model, Pattern, SemiCompleteDigraph};
use scd_obstacles::{
    cutwidth_bound_from_backward_tangle, parse_obstacle, pathwidth_bound_from_degree_tangle,
    pathwidth_bound_from_matching_tangle, Obstacle, ObstacleError, Thresholds,
};
use scd_oracles::{oracle_contains, oracle_cutwidth, oracle_pathwidth, OracleError};
use thiserror::Error;

use args::{CertKind, Cli, Command, GenModel, OracleCmd};
use solve::{Task, Verdict};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {msg}")]
    Input { path: String, msg: String },
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("self-check failed: {0}")]
    SelfCheck(String),
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error("{0}")]
    Obstacle(#[from] ObstacleError),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Budget(_) => EXIT_BUDGET,
            _ => EXIT_INPUT,
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Budget(e.to_string())
    }
}

/// Parses `argv`, runs the subcommand and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli.command) {
        Ok(Verdict::Yes) => EXIT_YES,
        Ok(Verdict::No) => EXIT_NO,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input { path: path.display().to_string(), msg: e.to_string() })
}

fn with_path<T, E: std::fmt::Display>(path: &Path, r: Result<T, E>) -> Result<T, CliError> {
    r.map_err(|e| CliError::Input { path: path.display().to_string(), msg: e.to_string() })
}

pub fn load_digraph(path: &Path) -> Result<SemiCompleteDigraph, CliError> {
    with_path(path, parse_digraph(&read(path)?))
}

pub fn load_pattern(path: &Path) -> Result<Pattern, CliError> {
    with_path(path, parse_pattern(&read(path)?))
}

/// Reads a constants profile: one `key = value` per line, TOML syntax,
/// keys as in [`Thresholds::KEYS`].
pub fn load_constants(path: Option<&Path>) -> Result<Thresholds, CliError> {
    let mut th = Thresholds::default();
    let Some(path) = path else { return Ok(th) };
    let table: toml::Table = with_path(path, read(path)?.parse())?;
    for (key, value) in table {
        let v = value.as_integer().and_then(|v| usize::try_from(v).ok()).ok_or_else(|| CliError::Input {
            path: path.display().to_string(),
            msg: format!("`{key}` needs a non-negative integer"),
        })?;
        with_path(path, th.set(&key, v))?;
    }
    Ok(th)
}

/// Prints a certificate, or writes it to `out` and prints the path.
fn emit(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => {
            fs::write(path, text)?;
            outln!("certificate: {}", path.display());
        }
        None => out!("{text}"),
    }
    Ok(())
}

fn dispatch(command: Command) -> Result<Verdict, CliError> {
    match command {
        Command::Gen { model, n, p, seed, out } => {
            let model = match model {
                GenModel::Random => Model::Random,
                GenModel::Transitive => Model::Transitive,
                GenModel::Qr => Model::QuadraticResidue,
                GenModel::Noise => Model::TransitiveNoise(p.unwrap_or(0.1)),
                GenModel::Semicomplete => Model::SemiComplete(p.unwrap_or(0.3)),
            };
            let text = format_digraph(&generate(model, n, seed)?);
            match out {
                Some(path) => fs::write(&path, text)?,
                None => out!("{text}"),
            }
            Ok(Verdict::Yes)
        }
        Command::Validate { file, tournament, pattern } => validate(&file, tournament, pattern),
        Command::Cutwidth { mode, file, k, selfcheck, stats, constants, out } => {
            let th = load_constants(constants.as_deref())?;
            let t = load_digraph(&file)?;
            let task = Task::cutwidth(mode, k)?;
            finish(solve::solve(&t, task, &th, selfcheck)?, stats, out.as_deref())
        }
        Command::Pathwidth { mode, file, k, ell, selfcheck, stats, constants, out } => {
            let th = load_constants(constants.as_deref())?;
            let t = load_digraph(&file)?;
            let task = Task::pathwidth(mode, k, ell)?;
            finish(solve::solve(&t, task, &th, selfcheck)?, stats, out.as_deref())
        }
        Command::Contains { host, pattern, decomposition, budget, selfcheck, constants, out } => {
            let th = load_constants(constants.as_deref())?;
            let t = load_digraph(&host)?;
            let h = load_pattern(&pattern)?;
            let w = match &decomposition {
                Some(path) => Some(with_path(path, parse_decomposition(&read(path)?))?),
                None => None,
            };
            let solved = solve::contains(&t, &h, w.as_ref(), &th, budget, selfcheck)?;
            finish(solved, false, out.as_deref())
        }
        Command::VerifyCert { host, cert, kind, pattern, k } => verify_cert(&host, &cert, kind, pattern.as_deref(), k),
        Command::Oracle(cmd) => oracle(cmd),
        Command::Bench(b) => {
            let th = load_constants(b.constants.as_deref())?;
            let pattern = match &b.pattern {
                Some(path) => Some(load_pattern(path)?),
                None => None,
            };
            let reports = report::bench(&b, &th, pattern.as_ref())?;
            outln!("{}", report::CSV_HEADER);
            for r in &reports {
                outln!("{}", r.csv_row());
            }
            Ok(Verdict::Yes)
        }
    }
}

fn finish(solved: solve::Solved, stats: bool, out: Option<&Path>) -> Result<Verdict, CliError> {
    outln!("{}", solved.headline);
    if stats {
        if let Some(s) = &solved.stats {
            eprintln!("{s}");
        }
    }
    if let Some(note) = &solved.note {
        eprintln!("note: {note}");
    }
    if let Some(cert) = &solved.certificate {
        emit(cert, out)?;
    }
    Ok(solved.verdict)
}

fn validate(file: &Path, tournament: bool, pattern: bool) -> Result<Verdict, CliError> {
    let text = read(file)?;
    if pattern {
        let h = with_path(file, parse_pattern(&text))?;
        outln!("pattern: {} vertices, {} arcs", h.vertex_count(), h.arc_count());
        return Ok(Verdict::Yes);
    }
    match parse_digraph(&text) {
        Ok(t) => {
            let is_t = t.is_tournament();
            outln!("semi-complete: n={} arcs={} tournament={}", t.n(), t.arc_count(), if is_t { "yes" } else { "no" });
            if tournament && !is_t {
                let (u, v) = t.arcs().find(|&(u, v)| t.arc(v, u)).expect("a non-tournament has a digon");
                outln!("INVALID: {}", CoreError::Digon(u.min(v), u.max(v)));
                return Ok(Verdict::No);
            }
            Ok(Verdict::Yes)
        }
        Err(e @ (CoreError::LoopArc(_) | CoreError::NotSemiComplete(..) | CoreError::Digon(..))) => {
            outln!("INVALID: {e}");
            Ok(Verdict::No)
        }
        Err(e) => Err(CliError::Input { path: file.display().to_string(), msg: e.to_string() }),
    }
}

fn detect_kind(text: &str) -> CertKind {
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    let first = lines.first().copied().unwrap_or("");
    let head = first.split_whitespace().next().unwrap_or("");
    if head == model_io::MODEL_HEADER {
        CertKind::Model
    } else if head.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) {
        CertKind::Obstacle
    } else if lines.len() == 1 && first.split_whitespace().count() > 1 {
        CertKind::Ordering
    } else {
        CertKind::Decomposition
    }
}

fn verify_cert(
    host: &Path,
    cert: &Path,
    kind: CertKind,
    pattern: Option<&Path>,
    k: Option<usize>,
) -> Result<Verdict, CliError> {
    let t = load_digraph(host)?;
    let text = read(cert)?;
    let kind = if kind == CertKind::Auto { detect_kind(&text) } else { kind };
    let within = |width: usize| k.is_none_or(|k| width <= k);
    let verdict = |ok: bool| if ok { Verdict::Yes } else { Verdict::No };
    match kind {
        CertKind::Ordering => {
            let pi = with_path(cert, parse_ordering(t.n(), &text))?;
            let width = ordering_width(&t, &pi);
            outln!("ordering width {width}");
            Ok(verdict(within(width)))
        }
        CertKind::Decomposition => {
            let w = with_path(cert, parse_decomposition(&text))?;
            match verify_path_decomposition(&t, &w) {
                Ok(width) => {
                    outln!("decomposition width {width}");
                    Ok(verdict(within(width)))
                }
                Err(e) => {
                    outln!("INVALID: {e}");
                    Ok(Verdict::No)
                }
            }
        }
        CertKind::Obstacle => {
            let o = with_path(cert, parse_obstacle(&text))?;
            if let Err(e) = o.verify(&t) {
                outln!("INVALID: {e}");
                return Ok(Verdict::No);
            }
            let claim = match &o {
                Obstacle::Degree(d) => bound_claim("pathwidth", pathwidth_bound_from_degree_tangle(d)),
                Obstacle::Matching(m) => bound_claim("pathwidth", pathwidth_bound_from_matching_tangle(m)),
                Obstacle::Backward(b) => bound_claim("cutwidth", cutwidth_bound_from_backward_tangle(b)),
                Obstacle::Jungle(j) => format!("({}, {})-short {} jungle", j.k, j.d, j.kind.as_str()),
            };
            outln!("valid obstacle: {claim}");
            Ok(Verdict::Yes)
        }
        CertKind::Model => {
            let path = pattern.ok_or_else(|| CliError::Usage("a model certificate needs --pattern".into()))?;
            let h = load_pattern(path)?;
            let m = with_path(cert, model_io::parse_model(&text))?;
            match m.verify(&t, &h) {
                Ok(()) => {
                    outln!("valid {} model", model_io::kind_name(m.kind));
                    Ok(Verdict::Yes)
                }
                Err(e) => {
                    outln!("INVALID: {e}");
                    Ok(Verdict::No)
                }
            }
        }
        CertKind::Auto => unreachable!("resolved above"),
    }
}

fn bound_claim(what: &str, bound: Option<usize>) -> String {
    match bound {
        Some(b) => format!("certifies {what} > {b}"),
        None => format!("too small to certify a {what} bound"),
    }
}

fn oracle(cmd: OracleCmd) -> Result<Verdict, CliError> {
    match cmd {
        OracleCmd::Cutwidth { file } => {
            let r = oracle_cutwidth(&load_digraph(&file)?)?;
            outln!("{}", r.value);
            out!("{}", scd_core::io::format_ordering(&r.witness));
            Ok(Verdict::Yes)
        }
        OracleCmd::Pathwidth { file } => {
            let t = load_digraph(&file)?;
            let r = oracle_pathwidth(&t)?;
            outln!("{}", if t.n() == 0 { "-1".to_string() } else { r.value.to_string() });
            out!("{}", scd_core::io::format_decomposition(&r.witness));
            Ok(Verdict::Yes)
        }
        OracleCmd::Contains { host, pattern } => {
            let t = load_digraph(&host)?;
            let h = load_pattern(&pattern)?;
            let r = oracle_contains(&t, &h)?;
            match r.witness {
                Some(m) if r.value => {
                    outln!("YES");
                    out!("{}", model_io::format_model(&m));
                    Ok(Verdict::Yes)
                }
                _ => {
                    outln!("NO");
                    Ok(Verdict::No)
                }
            }
        }
    }
}

/// Default file name for a bench certificate.
pub fn certificate_path(dir: &Path, instance: &str, cmd: &str) -> PathBuf {
    dir.join(format!("{instance}.{cmd}.cert"))
}
