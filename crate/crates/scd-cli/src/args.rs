use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "scd", version, about = "Cutwidth, pathwidth and containment for semi-complete digraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenModel {
    Random,
    Transitive,
    /// Quadratic-residue tournament; n prime and 3 mod 4.
    Qr,
    /// Transitive tournament with arcs reversed with probability p.
    Noise,
    /// Digons with probability p, otherwise a fair coin.
    Semicomplete,
}

impl GenModel {
    pub fn as_str(self) -> &'static str {
        match self {
            GenModel::Random => "random",
            GenModel::Transitive => "transitive",
            GenModel::Qr => "qr",
            GenModel::Noise => "noise",
            GenModel::Semicomplete => "semicomplete",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Approx,
    Exact,
    Opt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CertKind {
    Auto,
    Ordering,
    Decomposition,
    Obstacle,
    Model,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchCmd {
    CutwidthApprox,
    CutwidthExact,
    CutwidthOpt,
    PathwidthApprox,
    PathwidthExact,
    PathwidthOpt,
    Contains,
}

impl BenchCmd {
    pub fn as_str(self) -> &'static str {
        match self {
            BenchCmd::CutwidthApprox => "cutwidth-approx",
            BenchCmd::CutwidthExact => "cutwidth-exact",
            BenchCmd::CutwidthOpt => "cutwidth-opt",
            BenchCmd::PathwidthApprox => "pathwidth-approx",
            BenchCmd::PathwidthExact => "pathwidth-exact",
            BenchCmd::PathwidthOpt => "pathwidth-opt",
            BenchCmd::Contains => "contains",
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a seeded random instance in .scd format.
    Gen {
        #[arg(long, value_enum)]
        model: GenModel,
        #[arg(short, long)]
        n: usize,
        /// Probability for the noise and semicomplete models.
        #[arg(long)]
        p: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check that a file holds a semi-complete digraph (or a pattern).
    Validate {
        file: PathBuf,
        /// Also require exactly one arc per pair.
        #[arg(long)]
        tournament: bool,
        /// Read the file as a pattern digraph.
        #[arg(long, conflicts_with = "tournament")]
        pattern: bool,
    },
    /// Ordering of width bounded in k, or an obstacle; `opt` prints the cutwidth.
    Cutwidth {
        #[arg(value_enum)]
        mode: Mode,
        file: PathBuf,
        /// Target width; required except for `opt`.
        #[arg(short)]
        k: Option<usize>,
        /// Re-verify the certificate before printing it.
        #[arg(long)]
        selfcheck: bool,
        /// Print search statistics on stderr.
        #[arg(long)]
        stats: bool,
        /// Profile of `key = value` constant overrides.
        #[arg(long)]
        constants: Option<PathBuf>,
        /// Write the certificate here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Path decomposition of width bounded in k, or an obstacle; `opt` prints the pathwidth.
    Pathwidth {
        #[arg(value_enum)]
        mode: Mode,
        file: PathBuf,
        /// Target width; required except for `opt`.
        #[arg(short)]
        k: Option<usize>,
        /// Window length for the approximation; defaults to pathwidth_window · k.
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        selfcheck: bool,
        #[arg(long)]
        stats: bool,
        #[arg(long)]
        constants: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Decide whether the host contains an expansion of the pattern.
    Contains {
        host: PathBuf,
        pattern: PathBuf,
        /// Run the DP on this decomposition instead of computing one.
        #[arg(long)]
        decomposition: Option<PathBuf>,
        /// Largest DP table allowed.
        #[arg(long, default_value_t = scd_containment::DEFAULT_TABLE_BUDGET)]
        budget: usize,
        #[arg(long)]
        selfcheck: bool,
        #[arg(long)]
        constants: Option<PathBuf>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against a host digraph.
    VerifyCert {
        host: PathBuf,
        cert: PathBuf,
        #[arg(long, value_enum, default_value_t = CertKind::Auto)]
        kind: CertKind,
        /// Pattern for model certificates.
        #[arg(long)]
        pattern: Option<PathBuf>,
        /// Fail when an ordering or decomposition is wider than this.
        #[arg(short)]
        k: Option<usize>,
    },
    /// Brute-force ground truth at desk scale.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Sweep sizes and seeds, one CSV line per run.
    Bench(BenchArgs),
}

#[derive(Debug, Subcommand)]
pub enum OracleCmd {
    Cutwidth { file: PathBuf },
    Pathwidth { file: PathBuf },
    Contains { host: PathBuf, pattern: PathBuf },
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub cmd: BenchCmd,
    #[arg(long, value_enum, default_value_t = GenModel::Random)]
    pub model: GenModel,
    #[arg(long)]
    pub p: Option<f64>,
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    /// Instances per size.
    #[arg(long, default_value_t = 5)]
    pub count: u64,
    /// First seed; instance i of a size uses seed + i.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, default_value_t = 1)]
    pub k: usize,
    /// Pattern for `--cmd contains`.
    #[arg(long)]
    pub pattern: Option<PathBuf>,
    #[arg(long)]
    pub constants: Option<PathBuf>,
    #[arg(long)]
    pub selfcheck: bool,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Write each certificate into this directory.
    #[arg(long)]
    pub cert_dir: Option<PathBuf>,
}
