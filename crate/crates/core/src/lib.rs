//! Exact domination tooling for edge-adjoined Cartesian products.
//!
//! Given graphs G and H with canonical minimum dominating sets D_G, D_H (every
//! member has a private neighbor) and surjections F_G, F_H onto them, the
//! adjoint graph adds one edge from each (u, v) with u ∉ D_G, v ∉ D_H to
//! (F_G(u), F_H(v)). D_G × D_H is then a minimal dominating set of the result;
//! the [`harness`] measures whether it is also minimum.

pub mod domination;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod product;
pub mod vertex_set;

pub use domination::{
    build_surjection, canonicalize, enumerate_canonical, enumerate_surjections, gamma_bruteforce,
    gamma_exact, is_dominating, private_neighbors, CertificateKind, DominationCertificate,
    Surjection, TieBreak,
};
pub use error::{Error, Result};
pub use graph::Graph;
pub use graph6::{parse_graph6, to_graph6};
pub use product::{
    build_adjoint, cartesian_product, s_map, verify_dominates, verify_minimal, AdjointGraph,
    ProductIndex,
};
pub use vertex_set::VertexSet;
