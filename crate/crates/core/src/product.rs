//! Cartesian products and the edge-adjoined product built from a pair of
//! canonical dominating sets and their surjections.

use serde::Serialize;

use crate::domination::{
    first_without_private_neighbor, is_dominating, DominationCertificate, Surjection,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_MAX_PRODUCT_VERTICES: usize = 4096;

/// Row-major numbering of V(G) × V(H): `(u, v) ↦ u·n_h + v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProductIndex {
    pub n_g: usize,
    pub n_h: usize,
}

impl ProductIndex {
    pub fn new(n_g: usize, n_h: usize) -> Self {
        ProductIndex { n_g, n_h }
    }

    pub fn len(&self) -> usize {
        self.n_g * self.n_h
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn encode(&self, u: usize, v: usize) -> usize {
        debug_assert!(u < self.n_g && v < self.n_h);
        u * self.n_h + v
    }

    pub fn decode(&self, p: usize) -> (usize, usize) {
        (p / self.n_h, p % self.n_h)
    }
}

fn check_size(g: &Graph, h: &Graph, cap: usize) -> Result<ProductIndex> {
    let idx = ProductIndex::new(g.n(), h.n());
    match g.n().checked_mul(h.n()) {
        Some(n) if n <= cap => Ok(idx),
        _ => Err(Error::ProductTooLarge {
            n_g: g.n(),
            n_h: h.n(),
            cap,
        }),
    }
}

/// G □ H, numbered by [`ProductIndex`]. Fails with `ProductTooLarge` when
/// `n_g·n_h > cap`.
pub fn cartesian_product(g: &Graph, h: &Graph, cap: usize) -> Result<Graph> {
    let idx = check_size(g, h, cap)?;
    let mut adj = vec![VertexSet::empty(idx.len()); idx.len()];
    for u in 0..g.n() {
        for v in 0..h.n() {
            let p = idx.encode(u, v);
            for &w in h.neighbor_list(v) {
                adj[p].insert(idx.encode(u, w))?;
            }
            for &w in g.neighbor_list(u) {
                adj[p].insert(idx.encode(w, v))?;
            }
        }
    }
    Graph::from_adjacency(adj)
}

/// D_G × D_H as a product vertex set.
pub fn product_set(idx: ProductIndex, dg: &VertexSet, dh: &VertexSet) -> VertexSet {
    let members = dg
        .iter()
        .flat_map(|u| dh.iter().map(move |v| idx.encode(u, v)));
    VertexSet::from_vertices(idx.len(), members).expect("members lie in the product")
}

/// S(u, v): sends a product vertex outside D_G × D_H to a vertex of D_G × D_H,
/// moving each coordinate that lies outside its dominating set through its
/// surjection. In the doubly-outside case both coordinates move, reading the
/// first coordinate's range as V(G) − D_G.
pub fn s_map(u: usize, v: usize, fg: &Surjection, fh: &Surjection) -> Result<(usize, usize)> {
    let (dg, dh) = (fg.dom_set(), fh.dom_set());
    if u >= dg.host_n() {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            n: dg.host_n(),
        });
    }
    if v >= dh.host_n() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: dh.host_n(),
        });
    }
    let image = |f: &Surjection, x: usize| f.image(x).expect("surjection is total off D");
    match (dg.contains(u), dh.contains(v)) {
        (true, true) => Err(Error::DomainViolation { u, v }),
        (false, true) => Ok((image(fg, u), v)),
        (true, false) => Ok((u, image(fh, v))),
        (false, false) => Ok((image(fg, u), image(fh, v))),
    }
}

/// The product G □ H together with the adjoined edge set E_S and the choices
/// that produced it.
#[derive(Debug, Clone)]
pub struct AdjointGraph {
    pub index: ProductIndex,
    pub base: Graph,
    /// One `(source, S(source))` pair per source in (V(G) − D_G) × (V(H) − D_H),
    /// as product indices, in increasing source order.
    pub adjoined: Vec<(usize, usize)>,
    pub combined: Graph,
    pub dg: DominationCertificate,
    pub dh: DominationCertificate,
    pub fg: Surjection,
    pub fh: Surjection,
    /// D_G × D_H.
    pub dominating: VertexSet,
}

fn check_choice(g: &Graph, d: &DominationCertificate, f: &Surjection) -> Result<()> {
    g.check_host(d.set())?;
    if !is_dominating(g, d.set())? {
        return Err(Error::NotDominating);
    }
    if let Some(vertex) = first_without_private_neighbor(g, d.set()) {
        return Err(Error::NotCanonical { vertex });
    }
    if f.dom_set() != d.set() {
        return Err(Error::InvalidSurjection(
            "surjection targets a different set".into(),
        ));
    }
    f.validate(g)
}

/// Builds A = (V(G □ H), E(G □ H) ∪ E_S).
pub fn build_adjoint(
    g: &Graph,
    h: &Graph,
    dg: &DominationCertificate,
    dh: &DominationCertificate,
    fg: &Surjection,
    fh: &Surjection,
    cap: usize,
) -> Result<AdjointGraph> {
    check_choice(g, dg, fg)?;
    check_choice(h, dh, fh)?;
    let index = check_size(g, h, cap)?;
    let base = cartesian_product(g, h, cap)?;

    let mut adjoined = Vec::with_capacity((g.n() - dg.len()) * (h.n() - dh.len()));
    for u in (0..g.n()).filter(|&u| !dg.set().contains(u)) {
        for v in (0..h.n()).filter(|&v| !dh.set().contains(v)) {
            let (su, sv) = s_map(u, v, fg, fh)?;
            let (a, b) = (index.encode(u, v), index.encode(su, sv));
            if base.adjacent(a, b) {
                return Err(Error::InternalContradiction(format!(
                    "adjoined edge {{({u},{v}),({su},{sv})}} is already a product edge"
                )));
            }
            adjoined.push((a, b));
        }
    }

    let mut adj: Vec<VertexSet> = (0..index.len())
        .map(|p| base.neighbors(p).cloned())
        .collect::<Result<_>>()?;
    for &(a, b) in &adjoined {
        adj[a].insert(b)?;
        adj[b].insert(a)?;
    }
    let combined = Graph::from_adjacency(adj)?;

    Ok(AdjointGraph {
        dominating: product_set(index, dg.set(), dh.set()),
        index,
        base,
        adjoined,
        combined,
        dg: dg.clone(),
        dh: dh.clone(),
        fg: fg.clone(),
        fh: fh.clone(),
    })
}

impl AdjointGraph {
    /// |E_S|.
    pub fn adjoined_count(&self) -> usize {
        self.adjoined.len()
    }

    /// Adjoined edges as coordinate pairs.
    pub fn adjoined_coords(&self) -> Vec<((usize, usize), (usize, usize))> {
        self.adjoined
            .iter()
            .map(|&(a, b)| (self.index.decode(a), self.index.decode(b)))
            .collect()
    }

    /// True iff S is total on the complement of D_G × D_H and every member of
    /// D_G × D_H is some vertex's image.
    pub fn s_is_surjective(&self) -> bool {
        let mut hit = VertexSet::empty(self.index.len());
        for p in (0..self.index.len()).filter(|&p| !self.dominating.contains(p)) {
            let (u, v) = self.index.decode(p);
            match s_map(u, v, &self.fg, &self.fh) {
                Ok((su, sv)) => hit.insert(self.index.encode(su, sv)).expect("in range"),
                Err(_) => return false,
            }
        }
        self.dominating.is_subset(&hit)
    }
}

/// Whether D_G × D_H dominates the adjoint graph, by a direct domination test.
pub fn verify_dominates(a: &AdjointGraph) -> bool {
    is_dominating(&a.combined, &a.dominating).expect("sets share the product host")
}

/// Whether D_G × D_H is a minimal dominating set of the adjoint graph: every
/// single-vertex removal must break domination.
pub fn verify_minimal(a: &AdjointGraph) -> Result<bool> {
    if !verify_dominates(a) {
        return Err(Error::NotDominating);
    }
    is_minimal_dominating(&a.combined, &a.dominating)
}

/// True iff `d` dominates `g` and no `d − {x}` does.
pub fn is_minimal_dominating(g: &Graph, d: &VertexSet) -> Result<bool> {
    if !is_dominating(g, d)? {
        return Err(Error::NotDominating);
    }
    let mut trial = d.clone();
    for x in d.iter() {
        trial.remove(x);
        let still = is_dominating(g, &trial)?;
        trial.insert(x)?;
        if still {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For one removed vertex `(u, v)` of D_G × D_H: the vertices of P(u) × P(v)
/// and whether each is left undominated by the smaller set.
#[derive(Debug, Clone, Serialize)]
pub struct MinimalityWitness {
    pub removed: (usize, usize),
    pub witnesses: Vec<(usize, usize)>,
    pub undominated: Vec<bool>,
}

impl MinimalityWitness {
    /// At least one witness exists and every witness is undominated.
    pub fn certifies(&self) -> bool {
        !self.witnesses.is_empty() && self.undominated.iter().all(|&x| x)
    }
}

/// The private-neighbor witnesses for each single removal from D_G × D_H.
pub fn minimality_witnesses(
    g: &Graph,
    h: &Graph,
    a: &AdjointGraph,
) -> Result<Vec<MinimalityWitness>> {
    use crate::domination::private_neighbors;
    let mut out = Vec::with_capacity(a.dominating.len());
    for p in a.dominating.iter() {
        let (u, v) = a.index.decode(p);
        let pu = private_neighbors(g, a.dg.set(), u)?;
        let pv = private_neighbors(h, a.dh.set(), v)?;
        let mut witnesses = Vec::new();
        let mut undominated = Vec::new();
        for x in pu.iter() {
            for y in pv.iter() {
                let q = a.index.encode(x, y);
                let reached = a
                    .combined
                    .neighbor_list(q)
                    .iter()
                    .any(|&w| w != p && a.dominating.contains(w));
                witnesses.push((x, y));
                undominated.push(!reached);
            }
        }
        out.push(MinimalityWitness {
            removed: (u, v),
            witnesses,
            undominated,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::{build_surjection, CertificateKind, TieBreak};
    use crate::graph::named::*;

    fn canon(g: &Graph, vs: &[usize]) -> (DominationCertificate, Surjection) {
        let d = DominationCertificate::canonical(
            g,
            VertexSet::from_vertices(g.n(), vs.iter().copied()).unwrap(),
        )
        .unwrap();
        let f = build_surjection(g, &d, TieBreak::Lowest).unwrap();
        (d, f)
    }

    fn adjoint(g: &Graph, dg: &[usize], h: &Graph, dh: &[usize]) -> AdjointGraph {
        let (cg, fg) = canon(g, dg);
        let (ch, fh) = canon(h, dh);
        build_adjoint(g, h, &cg, &ch, &fg, &fh, DEFAULT_MAX_PRODUCT_VERTICES).unwrap()
    }

    #[test]
    fn index_roundtrip() {
        let idx = ProductIndex::new(3, 5);
        for u in 0..3 {
            for v in 0..5 {
                assert_eq!(idx.decode(idx.encode(u, v)), (u, v));
            }
        }
        assert_eq!(idx.encode(2, 4), 14);
    }

    #[test]
    fn k2_square_is_c4() {
        let p = cartesian_product(&complete(2), &complete(2), 16).unwrap();
        // (0,0)=0 (0,1)=1 (1,0)=2 (1,1)=3 ; C4 is 0-1-3-2-0
        assert_eq!(
            p.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 3), (2, 3)]
        );
    }

    #[test]
    fn ladder() {
        let p = cartesian_product(&complete(2), &path(3), 16).unwrap();
        assert_eq!(p.n(), 6);
        assert_eq!(p.edge_count(), 7);
        assert!(p.adjacent(0, 1) && p.adjacent(1, 2) && p.adjacent(0, 3) && !p.adjacent(0, 4));
    }

    #[test]
    fn product_cap() {
        assert_eq!(
            cartesian_product(&path(5), &path(5), 24).unwrap_err(),
            Error::ProductTooLarge {
                n_g: 5,
                n_h: 5,
                cap: 24
            }
        );
    }

    #[test]
    fn s_map_cases() {
        let k2 = complete(2);
        let (_, f) = canon(&k2, &[0]);
        assert_eq!(s_map(1, 1, &f, &f), Ok((0, 0)));
        assert_eq!(s_map(0, 1, &f, &f), Ok((0, 0)));
        assert_eq!(s_map(1, 0, &f, &f), Ok((0, 0)));
        assert_eq!(
            s_map(0, 0, &f, &f),
            Err(Error::DomainViolation { u: 0, v: 0 })
        );
    }

    #[test]
    fn k2_adjoint() {
        let a = adjoint(&complete(2), &[0], &complete(2), &[0]);
        assert_eq!(a.adjoined_coords(), vec![((1, 1), (0, 0))]);
        assert_eq!(a.combined.edge_count(), 5);
        assert!(verify_dominates(&a));
        assert_eq!(verify_minimal(&a), Ok(true));
        assert!(a.s_is_surjective());
    }

    #[test]
    fn star_adjoint_count() {
        let a = adjoint(&star(3), &[0], &star(3), &[0]);
        assert_eq!(a.adjoined_count(), 9);
        assert!(verify_dominates(&a));
        assert_eq!(verify_minimal(&a), Ok(true));
    }

    #[test]
    fn stripping_adjoined_edges_breaks_domination() {
        let c4 = cycle(4);
        let a = adjoint(&c4, &[0, 1], &c4, &[0, 1]);
        assert_eq!(a.adjoined_count(), 4);
        assert!(verify_dominates(&a));
        // (2,2) and (3,3) etc. only reach D_G x D_H through E_S
        assert!(!is_dominating(&a.base, &a.dominating).unwrap());
    }

    #[test]
    fn full_set_is_never_minimal() {
        let a = adjoint(&path(4), &[1, 2], &complete(2), &[0]);
        let all = VertexSet::full(a.combined.n());
        assert_eq!(is_minimal_dominating(&a.combined, &all), Ok(false));
    }

    #[test]
    fn witnesses_certify_each_removal() {
        let a = adjoint(&path(4), &[1, 2], &cycle(4), &[1, 2]);
        let ws = minimality_witnesses(&path(4), &cycle(4), &a).unwrap();
        assert_eq!(ws.len(), 4);
        assert!(ws.iter().all(MinimalityWitness::certifies));
    }

    #[test]
    fn rejects_non_canonical_choice() {
        let c4 = cycle(4);
        let anti = DominationCertificate::trusted(
            VertexSet::from_vertices(4, [0, 2]).unwrap(),
            CertificateKind::Canonical,
        );
        let (good, f) = canon(&c4, &[0, 1]);
        assert_eq!(
            build_adjoint(&c4, &c4, &anti, &good, &f, &f, 64).unwrap_err(),
            Error::NotCanonical { vertex: 0 }
        );
    }
}
