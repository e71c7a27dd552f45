//! Evaluates whether D_G × D_H is a minimum dominating set of the adjoint
//! graph, pair by pair and over whole graph6 corpora.

mod check;
mod choices;
mod sweep;

pub use check::{
    check_choice, check_pair, vizing_cross_check, PairReport, ReportStatus, VizingCheck,
};
pub use choices::{ChoiceId, ChoiceSpace};
pub use sweep::{sweep, write_sweep, Record, SweepSummary};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::domination::DEFAULT_ORACLE_LIMIT;
use crate::error::{Error, Result};
use crate::product::DEFAULT_MAX_PRODUCT_VERTICES;

/// Which (D_G, D_H, F_G, F_H) tuples to evaluate for each pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChoicePolicy {
    /// The lexicographically first canonical set and surjection on each side.
    #[default]
    First,
    /// Every tuple, up to `max_tuples`.
    All,
    /// The first tuple plus `k` distinct others drawn with the configured seed.
    Sample { k: usize },
}

impl fmt::Display for ChoicePolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChoicePolicy::First => write!(f, "first"),
            ChoicePolicy::All => write!(f, "all"),
            ChoicePolicy::Sample { k } => write!(f, "sample:{k}"),
        }
    }
}

impl FromStr for ChoicePolicy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" => Ok(ChoicePolicy::First),
            "all" => Ok(ChoicePolicy::All),
            _ => s
                .strip_prefix("sample:")
                .and_then(|k| k.parse().ok())
                .map(|k| ChoicePolicy::Sample { k })
                .ok_or_else(|| {
                    Error::InvalidConfig(format!(
                        "unknown choice policy {s:?}; use first, all or sample:K"
                    ))
                }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    /// Graphs with more vertices are skipped.
    pub max_n_g: usize,
    pub max_n_h: usize,
    pub choice_policy: ChoicePolicy,
    /// Seed for sampled choices; recorded in every report.
    pub seed: u64,
    /// Compute γ(G □ H) for the Vizing cross-check.
    pub cross_check_product: bool,
    /// Products above this many vertices skip the cross-check.
    pub cross_check_max_vertices: usize,
    /// Worker threads for sweeps; output does not depend on it.
    pub parallelism: usize,
    pub canonical_cap: usize,
    pub surjection_cap: usize,
    /// Upper bound on tuples evaluated per pair.
    pub max_tuples: usize,
    pub oracle_limit: usize,
    pub max_product_vertices: usize,
    /// Fill in `elapsed` on reports. Off by default so output is reproducible byte for byte.
    pub timings: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n_g: DEFAULT_ORACLE_LIMIT,
            max_n_h: DEFAULT_ORACLE_LIMIT,
            choice_policy: ChoicePolicy::First,
            seed: 0,
            cross_check_product: false,
            cross_check_max_vertices: 20,
            parallelism: 1,
            canonical_cap: 64,
            surjection_cap: 64,
            max_tuples: 4096,
            oracle_limit: DEFAULT_ORACLE_LIMIT,
            max_product_vertices: DEFAULT_MAX_PRODUCT_VERTICES,
            timings: false,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("max_n_g", self.max_n_g),
            ("max_n_h", self.max_n_h),
            ("parallelism", self.parallelism),
            ("canonical_cap", self.canonical_cap),
            ("surjection_cap", self.surjection_cap),
            ("max_tuples", self.max_tuples),
            ("oracle_limit", self.oracle_limit),
            ("max_product_vertices", self.max_product_vertices),
        ];
        match positive.iter().find(|(_, v)| *v == 0) {
            Some((name, _)) => Err(Error::InvalidConfig(format!("{name} must be positive"))),
            None => Ok(()),
        }
    }
}
