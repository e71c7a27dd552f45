//! Dominating sets: predicates, the exact solver and its brute-force oracle,
//! canonical forms and the surjections built from them.

mod canonical;
mod oracle;
mod solver;
mod surjection;

pub use canonical::{canonicalize, enumerate_canonical, Canonicalization};
pub use oracle::{gamma_bruteforce, DEFAULT_ORACLE_LIMIT};
pub use solver::gamma_exact;
pub use surjection::{build_surjection, enumerate_surjections, Surjection, TieBreak};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// How much a [`DominationCertificate`] has been checked to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Dominating,
    Minimum,
    Canonical,
}

/// A vertex set together with the strongest property it was verified to have.
/// Each kind implies the ones before it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationCertificate {
    set: VertexSet,
    kind: CertificateKind,
}

impl DominationCertificate {
    pub fn dominating(g: &Graph, set: VertexSet) -> Result<Self> {
        if !is_dominating(g, &set)? {
            return Err(Error::NotDominating);
        }
        Ok(DominationCertificate {
            set,
            kind: CertificateKind::Dominating,
        })
    }

    /// Checks domination and that `|set| = γ(g)` via the exact solver.
    pub fn minimum(g: &Graph, set: VertexSet) -> Result<Self> {
        let cert = Self::dominating(g, set)?;
        let (gamma, _) = gamma_exact(g);
        if cert.len() != gamma {
            return Err(Error::NotMinimum {
                size: cert.len(),
                gamma,
            });
        }
        Ok(cert.with_kind(CertificateKind::Minimum))
    }

    pub fn canonical(g: &Graph, set: VertexSet) -> Result<Self> {
        let cert = Self::minimum(g, set)?;
        if let Some(vertex) = first_without_private_neighbor(g, &cert.set) {
            return Err(Error::NotCanonical { vertex });
        }
        Ok(cert.with_kind(CertificateKind::Canonical))
    }

    pub(crate) fn trusted(set: VertexSet, kind: CertificateKind) -> Self {
        DominationCertificate { set, kind }
    }

    fn with_kind(mut self, kind: CertificateKind) -> Self {
        self.kind = kind;
        self
    }

    pub fn set(&self) -> &VertexSet {
        &self.set
    }

    pub fn kind(&self) -> CertificateKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn into_set(self) -> VertexSet {
        self.set
    }
}

/// True iff every vertex outside `d` has a neighbor in `d`.
pub fn is_dominating(g: &Graph, d: &VertexSet) -> Result<bool> {
    g.check_host(d)?;
    let mut reached = d.clone();
    for u in d.iter() {
        reached.union_with(g.neighbors(u)?);
    }
    Ok(reached.len() == g.n())
}

/// P(u): vertices outside `d` adjacent to `u` whose only neighbor in `d` is `u`.
pub fn private_neighbors(g: &Graph, d: &VertexSet, u: usize) -> Result<VertexSet> {
    g.check_host(d)?;
    if u >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            n: g.n(),
        });
    }
    if !d.contains(u) {
        return Err(Error::NotInDominatingSet { vertex: u });
    }
    let mut private = VertexSet::empty(g.n());
    for &v in g.neighbor_list(u) {
        if !d.contains(v) && g.neighbors(v)?.intersection_count(d) == 1 {
            private.insert(v)?;
        }
    }
    Ok(private)
}

/// True iff every member of `d` has at least one private neighbor.
/// Says nothing about domination or minimality.
pub fn has_private_neighbors(g: &Graph, d: &VertexSet) -> Result<bool> {
    g.check_host(d)?;
    Ok(first_without_private_neighbor(g, d).is_none())
}

pub(crate) fn first_without_private_neighbor(g: &Graph, d: &VertexSet) -> Option<usize> {
    d.iter().find(|&u| {
        !g.neighbor_list(u).iter().any(|&v| {
            !d.contains(v)
                && g.neighbor_list(v)
                    .iter()
                    .filter(|&&w| d.contains(w))
                    .count()
                    == 1
        })
    })
}
