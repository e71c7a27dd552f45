use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use super::{check_pair, PairReport, ReportStatus, SweepConfig};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{read_graph6_lines, Graph6Line};

/// Pairs handed to the worker pool at a time; results are emitted in order
/// after each batch.
const BATCH: usize = 64;

/// Totals for a sweep, emitted as the last record.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub pairs_evaluated: usize,
    pub choice_tuples_evaluated: usize,
    pub counterexamples: usize,
    pub vizing_violations: usize,
    pub invariant_violations: usize,
    pub parse_errors: usize,
    pub skipped_graphs: usize,
    pub pair_errors: usize,
    pub choices: String,
    pub seed: u64,
    pub exit_status: i32,
}

impl SweepSummary {
    fn absorb(&mut self, r: &PairReport) {
        self.choice_tuples_evaluated += 1;
        self.counterexamples += r.is_counterexample() as usize;
        self.vizing_violations += (r.vizing_ok == Some(false)) as usize;
        self.invariant_violations += (r.status == ReportStatus::InvariantViolation) as usize;
    }

    /// 4 when a proven property failed, 3 when a counterexample was found,
    /// 0 otherwise.
    pub fn status_code(&self) -> i32 {
        if self.invariant_violations > 0 || self.vizing_violations > 0 {
            4
        } else if self.counterexamples > 0 {
            3
        } else {
            0
        }
    }
}

/// One line of sweep output.
#[derive(Debug, Serialize)]
#[serde(tag = "record", rename_all = "lowercase")]
pub enum Record<'a> {
    Pair(&'a PairReport),
    Summary(&'a SweepSummary),
}

fn usable<'a>(
    lines: &'a [Graph6Line],
    label: &str,
    max_n: usize,
    summary: &mut SweepSummary,
    diag: &mut impl FnMut(String),
) -> Vec<&'a Graph> {
    let mut out = Vec::new();
    for line in lines {
        match &line.graph {
            Err(e) => {
                summary.parse_errors += 1;
                diag(format!(
                    "{label}:{}: {e} (input {:?})",
                    line.line_no, line.text
                ));
            }
            Ok(g) if g.n() > max_n => {
                summary.skipped_graphs += 1;
                diag(format!(
                    "{label}:{}: skipped, {} vertices exceeds limit {max_n}",
                    line.line_no,
                    g.n()
                ));
            }
            Ok(g) => out.push(g),
        }
    }
    out
}

/// Runs [`check_pair`] over G-corpus × H-corpus in line order (H defaults to
/// the G corpus). Reports reach `on_report` in a fixed order whatever the
/// worker count; bad lines and failing pairs go to `diag` and are counted.
pub fn sweep(
    corpus_g: &[Graph6Line],
    corpus_h: Option<&[Graph6Line]>,
    cfg: &SweepConfig,
    mut on_report: impl FnMut(&PairReport) -> Result<()>,
    mut diag: impl FnMut(String),
) -> Result<SweepSummary> {
    cfg.validate()?;
    let mut summary = SweepSummary {
        choices: cfg.choice_policy.to_string(),
        seed: cfg.seed,
        ..SweepSummary::default()
    };
    let (gs, hs) = match corpus_h {
        Some(h) => (
            usable(corpus_g, "g", cfg.max_n_g, &mut summary, &mut diag),
            usable(h, "h", cfg.max_n_h, &mut summary, &mut diag),
        ),
        None => {
            let gs = usable(
                corpus_g,
                "g",
                cfg.max_n_g.min(cfg.max_n_h).max(1),
                &mut summary,
                &mut diag,
            );
            (gs.clone(), gs)
        }
    };
    let pairs: Vec<(&Graph, &Graph)> = gs
        .iter()
        .flat_map(|&g| hs.iter().map(move |&h| (g, h)))
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.parallelism)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("worker pool: {e}")))?;
    for batch in pairs.chunks(BATCH) {
        let results: Vec<Result<Vec<PairReport>>> = pool.install(|| {
            batch
                .par_iter()
                .map(|&(g, h)| check_pair(g, h, cfg))
                .collect()
        });
        for (&(g, h), result) in batch.iter().zip(results) {
            match result {
                Ok(reports) => {
                    summary.pairs_evaluated += 1;
                    for r in &reports {
                        summary.absorb(r);
                        on_report(r)?;
                    }
                }
                Err(e) => {
                    summary.pair_errors += 1;
                    diag(format!(
                        "pair ({}, {}): {e}",
                        crate::graph6::to_graph6(g),
                        crate::graph6::to_graph6(h)
                    ));
                }
            }
        }
    }
    summary.exit_status = summary.status_code();
    Ok(summary)
}

/// Text-in, JSON-lines-out wrapper around [`sweep`]: one `pair` record per
/// report and a final `summary` record on `out`, diagnostics on `diag`.
pub fn write_sweep(
    text_g: &str,
    text_h: Option<&str>,
    cfg: &SweepConfig,
    out: &mut impl Write,
    diag: &mut impl Write,
) -> Result<SweepSummary> {
    let corpus_g = read_graph6_lines(text_g);
    let corpus_h = text_h.map(read_graph6_lines);
    let mut diag_err = None;
    let summary = sweep(
        &corpus_g,
        corpus_h.as_deref(),
        cfg,
        |r| write_record(out, &Record::Pair(r)),
        |msg| {
            if let Err(e) = writeln!(diag, "{msg}") {
                diag_err.get_or_insert(e);
            }
        },
    )?;
    if let Some(e) = diag_err {
        return Err(e.into());
    }
    write_record(out, &Record::Summary(&summary))?;
    out.flush()?;
    Ok(summary)
}

pub(crate) fn write_record(out: &mut impl Write, record: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, record).map_err(|e| Error::Io(e.to_string()))?;
    out.write_all(b"\n")?;
    Ok(())
}
