use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "tworow", version, about = "Exact tree immanants, two-row character sums and lattice-path checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; tables and single values default to text, verdicts to json.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write to this file instead of stdout. Relative paths resolve against
    /// $TWOROW_OUTPUT_DIR when it is set.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Table of alpha_{n,k,i}: rows i, columns k.
    AlphaTable {
        n: usize,
        /// `recursive` uses the Pascal-type recursion, `characters` sums characters directly.
        #[arg(long, value_enum, default_value_t = AlphaMethod::Recursive)]
        method: AlphaMethod,
    },
    /// Table of last_{l,k} for l <= L, by trinomial differences and by recursion.
    LastTable {
        l: usize,
        #[arg(long, value_enum, default_value_t = LastMethod::Both)]
        method: LastMethod,
    },
    /// Irreducible character value chi_lambda(rho), e.g. `char 3,1 2,1^2`.
    Char { shape: String, cycle_type: String },
    /// Immanant of the q-Laplacian of a tree.
    Immanant {
        #[arg(long)]
        tree: String,
        #[arg(long)]
        shape: String,
        /// Divide by chi_lambda(id).
        #[arg(long)]
        normalized: bool,
        #[arg(long, value_enum, default_value_t = AlgorithmArg::Matching)]
        algorithm: AlgorithmArg,
    },
    /// The polynomials a_i(q) of a tree.
    ACoeffs {
        #[arg(long)]
        tree: String,
    },
    /// Run verifiers and stream verdicts.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlphaMethod {
    Recursive,
    Characters,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum LastMethod {
    Trinomial,
    Recursion,
    Both,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmArg {
    Matching,
    Bruteforce,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    TwoRow,
    Hook,
    AlphaRatios,
    GeneralSr,
    Paths,
    Probability,
    Identities,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub target: Target,

    /// Largest tree size for exhaustive tree sweeps.
    #[arg(long, default_value_t = 7)]
    pub n_max: usize,

    /// Raise every cap.
    #[arg(long)]
    pub deep: bool,

    #[arg(long, default_value_t = 20240601)]
    pub seed: u64,

    /// Random trees added to the two-row sweep once n-max reaches their size.
    #[arg(long, default_value_t = 1000)]
    pub random_trees: usize,

    /// Check a single tree instead of sweeping (two-row and hook only).
    #[arg(long)]
    pub tree: Option<String>,

    /// Grid of q values as `lo:hi:step`, rationals allowed.
    #[arg(long, default_value = "-10:10:1/2")]
    pub q_grid: String,

    /// general-sr: a single (l, s, r) instead of the default grid.
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,

    /// Emit only failures and the summary.
    #[arg(long)]
    pub quiet: bool,
}
