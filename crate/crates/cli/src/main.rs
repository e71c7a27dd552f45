mod commands;
mod input;

use std::process::ExitCode;

use adjdom::harness::{ChoiceId, ChoicePolicy, SweepConfig};
use clap::{Args, Parser, Subcommand};

/// Exact domination tooling for edge-adjoined Cartesian products.
///
/// Graph arguments are graph6 files, `-` for standard input, or a literal
/// graph6 string. Records go to standard output as JSON lines; diagnostics go
/// to standard error.
#[derive(Debug, Parser)]
#[command(name = "adjdom", version)]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Options {
    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Seed for sampled choice tuples.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Choice tuples per pair: first, all, or sample:K.
    #[arg(long, global = true, default_value = "first")]
    choices: ChoicePolicy,
    /// Also solve G □ H exactly and check Vizing's inequality.
    #[arg(long, global = true)]
    cross_check: bool,
    /// Largest product that gets the cross-check.
    #[arg(long, global = true, default_value_t = 20)]
    cross_check_max_vertices: usize,
    #[arg(long, global = true, default_value_t = adjdom::product::DEFAULT_MAX_PRODUCT_VERTICES)]
    max_product_vertices: usize,
    /// Vertex limit for exhaustive enumeration and the brute-force oracle.
    #[arg(long, global = true, default_value_t = adjdom::domination::DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
    /// Canonical sets enumerated per graph.
    #[arg(long, global = true, default_value_t = 64)]
    canonical_cap: usize,
    /// Surjections enumerated per canonical set.
    #[arg(long, global = true, default_value_t = 64)]
    surjection_cap: usize,
    /// Choice tuples evaluated per pair.
    #[arg(long, global = true, default_value_t = 4096)]
    max_tuples: usize,
    /// Skip corpus graphs with more vertices (defaults to the oracle limit).
    #[arg(long, global = true)]
    max_n: Option<usize>,
    /// Fill in per-report elapsed seconds (output is then no longer reproducible).
    #[arg(long, global = true)]
    timings: bool,
}

impl Options {
    fn sweep_config(&self) -> SweepConfig {
        let max_n = self.max_n.unwrap_or(self.oracle_limit);
        SweepConfig {
            max_n_g: max_n,
            max_n_h: max_n,
            choice_policy: self.choices,
            seed: self.seed,
            cross_check_product: self.cross_check,
            cross_check_max_vertices: self.cross_check_max_vertices,
            parallelism: self.jobs,
            canonical_cap: self.canonical_cap,
            surjection_cap: self.surjection_cap,
            max_tuples: self.max_tuples,
            oracle_limit: self.oracle_limit,
            max_product_vertices: self.max_product_vertices,
            timings: self.timings,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Domination number and a minimum dominating set of each graph.
    Gamma {
        input: String,
        /// Also run the brute-force oracle and report its value.
        #[arg(long)]
        oracle: bool,
    },
    /// Canonical minimum dominating sets: the repair-loop result under
    /// --choices=first, otherwise the enumeration.
    Canonical { input: String },
    /// Surjections onto canonical dominating sets.
    Surjection { input: String },
    /// Cartesian product of every G with every H.
    Product { g: String, h: String },
    /// Adjoint graph for every (G, H) pair.
    Adjoint {
        g: String,
        h: String,
        /// Tuple to build, as dg,dh,fg,fh.
        #[arg(long, default_value = "0,0,0,0")]
        choice_id: ChoiceId,
        /// Include the private-neighbor witnesses for minimality.
        #[arg(long)]
        witnesses: bool,
    },
    /// Evaluate the conjecture on every (G, H) pair.
    CheckPair {
        g: String,
        h: String,
        /// Evaluate only this tuple, as dg,dh,fg,fh.
        #[arg(long)]
        choice_id: Option<ChoiceId>,
    },
    /// Evaluate the conjecture over G-corpus × H-corpus (H defaults to G).
    Sweep { g: String, h: Option<String> },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = cli.opts.sweep_config();
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match commands::run(cli.command, &cfg) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
