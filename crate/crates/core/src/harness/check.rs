use std::time::Instant;

use serde::Serialize;

use super::choices::pair_seed;
use super::{ChoiceId, ChoicePolicy, ChoiceSpace, SweepConfig};
use crate::domination::{build_surjection, canonicalize, gamma_exact, TieBreak};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::product::{
    build_adjoint, cartesian_product, verify_dominates, verify_minimal, AdjointGraph,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportStatus {
    Ok,
    /// D_G × D_H is not minimum: a counterexample to the conjecture.
    Counterexample,
    /// A proven property failed; points at a bug.
    InvariantViolation,
}

/// Outcome of one (G, H, choice) evaluation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PairReport {
    pub g6_g: String,
    pub g6_h: String,
    pub gamma_g: usize,
    pub gamma_h: usize,
    pub choice_id: ChoiceId,
    pub seed: u64,
    pub d_g: Vec<usize>,
    pub d_h: Vec<usize>,
    pub e_s_count: usize,
    pub gamma_adjoint: usize,
    pub minimal_ok: bool,
    /// `gamma_adjoint == gamma_g * gamma_h`.
    pub minimum_ok: bool,
    pub gamma_product: Option<usize>,
    /// `gamma_g * gamma_h <= gamma_product`, when the product was solved.
    pub vizing_ok: Option<bool>,
    pub status: ReportStatus,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<String>,
    /// Seconds spent on this tuple; `None` unless timings were requested.
    pub elapsed: Option<f64>,
}

impl PairReport {
    pub fn is_counterexample(&self) -> bool {
        !self.minimum_ok
    }
}

fn product_gamma(g: &Graph, h: &Graph, cfg: &SweepConfig) -> Result<Option<usize>> {
    if !cfg.cross_check_product || g.n() * h.n() > cfg.cross_check_max_vertices {
        return Ok(None);
    }
    let product = cartesian_product(g, h, cfg.max_product_vertices)?;
    Ok(Some(gamma_exact(&product).0))
}

fn check_product_size(g: &Graph, h: &Graph, cfg: &SweepConfig) -> Result<()> {
    if g.n().saturating_mul(h.n()) > cfg.max_product_vertices {
        return Err(Error::ProductTooLarge {
            n_g: g.n(),
            n_h: h.n(),
            cap: cfg.max_product_vertices,
        });
    }
    Ok(())
}

struct PairContext<'a> {
    g: &'a Graph,
    h: &'a Graph,
    g6_g: String,
    g6_h: String,
    gamma_g: usize,
    gamma_h: usize,
    gamma_product: Option<usize>,
}

impl<'a> PairContext<'a> {
    fn new(g: &'a Graph, h: &'a Graph, cfg: &SweepConfig) -> Result<Self> {
        check_product_size(g, h, cfg)?;
        Ok(PairContext {
            g,
            h,
            g6_g: to_graph6(g),
            g6_h: to_graph6(h),
            gamma_g: gamma_exact(g).0,
            gamma_h: gamma_exact(h).0,
            gamma_product: product_gamma(g, h, cfg)?,
        })
    }

    fn evaluate(&self, space: &ChoiceSpace, id: ChoiceId, cfg: &SweepConfig) -> Result<PairReport> {
        let start = Instant::now();
        let (dg, dh, fg, fh) = space.get(id).ok_or_else(|| {
            Error::InvalidConfig(format!("choice id {id} is out of range for this pair"))
        })?;
        let adjoint = build_adjoint(self.g, self.h, dg, dh, fg, fh, cfg.max_product_vertices)?;
        let dominates = verify_dominates(&adjoint);
        let minimal_ok = dominates && verify_minimal(&adjoint)?;
        let gamma_adjoint = gamma_exact(&adjoint.combined).0;
        let bound = self.gamma_g * self.gamma_h;
        let minimum_ok = gamma_adjoint == bound;
        let vizing_ok = self.gamma_product.map(|p| bound <= p);

        let violations = self.violations(&adjoint, dominates, minimal_ok, gamma_adjoint, vizing_ok);
        let status = if !violations.is_empty() {
            ReportStatus::InvariantViolation
        } else if !minimum_ok {
            ReportStatus::Counterexample
        } else {
            ReportStatus::Ok
        };
        Ok(PairReport {
            g6_g: self.g6_g.clone(),
            g6_h: self.g6_h.clone(),
            gamma_g: self.gamma_g,
            gamma_h: self.gamma_h,
            choice_id: id,
            seed: cfg.seed,
            d_g: dg.set().to_vec(),
            d_h: dh.set().to_vec(),
            e_s_count: adjoint.adjoined_count(),
            gamma_adjoint,
            minimal_ok,
            minimum_ok,
            gamma_product: self.gamma_product,
            vizing_ok,
            status,
            violations,
            elapsed: cfg.timings.then(|| start.elapsed().as_secs_f64()),
        })
    }

    fn violations(
        &self,
        a: &AdjointGraph,
        dominates: bool,
        minimal_ok: bool,
        gamma_adjoint: usize,
        vizing_ok: Option<bool>,
    ) -> Vec<String> {
        let mut out = Vec::new();
        let expected_es = (self.g.n() - self.gamma_g) * (self.h.n() - self.gamma_h);
        if a.adjoined_count() != expected_es {
            out.push(format!(
                "|E_S| = {} but expected {expected_es}",
                a.adjoined_count()
            ));
        }
        if !a.s_is_surjective() {
            out.push("S is not surjective onto D_G x D_H".into());
        }
        if !dominates {
            out.push("D_G x D_H does not dominate the adjoint".into());
        } else if !minimal_ok {
            out.push("D_G x D_H is not minimal".into());
        }
        if gamma_adjoint > self.gamma_g * self.gamma_h {
            out.push(format!(
                "gamma_adjoint {gamma_adjoint} exceeds |D_G x D_H| = {}",
                self.gamma_g * self.gamma_h
            ));
        }
        if let Some(p) = self.gamma_product {
            if gamma_adjoint > p {
                out.push(format!(
                    "gamma_adjoint {gamma_adjoint} exceeds gamma_product {p}"
                ));
            }
        }
        if vizing_ok == Some(false) {
            out.push("Vizing inequality violated".into());
        }
        out
    }
}

/// Evaluates every tuple `cfg.choice_policy` selects for (G, H).
/// A report with `minimum_ok == false` is a counterexample, not an error.
pub fn check_pair(g: &Graph, h: &Graph, cfg: &SweepConfig) -> Result<Vec<PairReport>> {
    cfg.validate()?;
    let ctx = PairContext::new(g, h, cfg)?;
    let space = ChoiceSpace::new(g, h, cfg)?;
    let seed = pair_seed(cfg.seed, &ctx.g6_g, &ctx.g6_h);
    space
        .select(cfg.choice_policy, seed, cfg.max_tuples)
        .into_iter()
        .map(|id| ctx.evaluate(&space, id, cfg))
        .collect()
}

/// Re-evaluates a single recorded tuple, e.g. to reproduce a counterexample.
pub fn check_choice(g: &Graph, h: &Graph, id: ChoiceId, cfg: &SweepConfig) -> Result<PairReport> {
    cfg.validate()?;
    let ctx = PairContext::new(g, h, cfg)?;
    let full = SweepConfig {
        choice_policy: ChoicePolicy::All,
        ..cfg.clone()
    };
    let space = ChoiceSpace::new(g, h, &full)?;
    ctx.evaluate(&space, id, cfg)
}

/// γ(G □ H) against γ(G)·γ(H), plus the subgraph bound for the adjoint built
/// from the repair-loop canonical sets and lowest-neighbor surjections.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VizingCheck {
    pub gamma_g: usize,
    pub gamma_h: usize,
    pub gamma_product: usize,
    pub gamma_adjoint: usize,
    /// γ(G)·γ(H) ≤ γ(G □ H).
    pub inequality_holds: bool,
    /// γ(A) ≤ γ(G □ H).
    pub adjoint_bound_holds: bool,
}

pub fn vizing_cross_check(g: &Graph, h: &Graph, cap: usize) -> Result<VizingCheck> {
    let product = cartesian_product(g, h, cap)?;
    let (gamma_g, seed_g) = gamma_exact(g);
    let (gamma_h, seed_h) = gamma_exact(h);
    let dg = canonicalize(g, &seed_g)?.certificate;
    let dh = canonicalize(h, &seed_h)?.certificate;
    let fg = build_surjection(g, &dg, TieBreak::Lowest)?;
    let fh = build_surjection(h, &dh, TieBreak::Lowest)?;
    let adjoint = build_adjoint(g, h, &dg, &dh, &fg, &fh, cap)?;
    let gamma_product = gamma_exact(&product).0;
    let gamma_adjoint = gamma_exact(&adjoint.combined).0;
    Ok(VizingCheck {
        gamma_g,
        gamma_h,
        gamma_product,
        gamma_adjoint,
        inequality_holds: gamma_g * gamma_h <= gamma_product,
        adjoint_bound_holds: gamma_adjoint <= gamma_product,
    })
}
