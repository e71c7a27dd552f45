use super::{
    gamma_exact, is_dominating, private_neighbors, CertificateKind, DominationCertificate,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Result of [`canonicalize`]: the canonical set plus the swap trace.
#[derive(Debug, Clone)]
pub struct Canonicalization {
    pub certificate: DominationCertificate,
    /// `(removed, added)` per swap, in order.
    pub swaps: Vec<(usize, usize)>,
    /// Induced edge count of the working set before the first swap and after
    /// each swap; strictly increasing.
    pub induced_edges: Vec<usize>,
}

/// Turns a minimum dominating set into one where every member has a private
/// neighbor.
///
/// A member `u` with no private neighbor cannot be adjacent to another member
/// (dropping it would leave a smaller dominating set), so it is swapped for its
/// lowest-indexed neighbor. That neighbor is not private to `u`, hence is
/// adjacent to some other member, and the induced edge count rises by at least
/// one per swap. The loop therefore stops after at most `|E(g)|` swaps.
pub fn canonicalize(g: &Graph, seed: &DominationCertificate) -> Result<Canonicalization> {
    let mut d = seed.set().clone();
    g.check_host(&d)?;
    if !is_dominating(g, &d)? {
        return Err(Error::NotDominating);
    }
    let (gamma, _) = gamma_exact(g);
    if d.len() != gamma {
        return Err(Error::NotMinimum {
            size: d.len(),
            gamma,
        });
    }

    let mut swaps = Vec::new();
    let mut induced_edges = vec![g.induced_edge_count(&d)];
    loop {
        let mut stuck = None;
        for u in d.iter() {
            if private_neighbors(g, &d, u)?.is_empty() {
                stuck = Some(u);
                break;
            }
        }
        let Some(u) = stuck else { break };

        if g.neighbors(u)?.intersection_count(&d) > 0 {
            return Err(Error::InternalContradiction(format!(
                "member {u} has no private neighbor but touches the set; {d} is not minimum"
            )));
        }
        let v = *g.neighbor_list(u).first().expect("no isolated vertices");
        d.remove(u);
        d.insert(v)?;
        swaps.push((u, v));

        let edges = g.induced_edge_count(&d);
        let prev = *induced_edges.last().expect("seeded above");
        if edges <= prev || swaps.len() > g.edge_count() || !is_dominating(g, &d)? {
            return Err(Error::InternalContradiction(format!(
                "swap {u} -> {v} broke the repair invariants"
            )));
        }
        induced_edges.push(edges);
    }

    Ok(Canonicalization {
        certificate: DominationCertificate::trusted(d, CertificateKind::Canonical),
        swaps,
        induced_edges,
    })
}

/// Lists canonical minimum dominating sets in lexicographic order of their
/// sorted member lists, at most `cap` of them. Scans every `γ`-subset, so
/// `g` must have at most `limit` vertices.
pub fn enumerate_canonical(
    g: &Graph,
    cap: usize,
    limit: usize,
) -> Result<Vec<DominationCertificate>> {
    let n = g.n();
    if n > limit {
        return Err(Error::OracleLimitExceeded { n, limit });
    }
    let (gamma, _) = gamma_exact(g);
    let mut found = Vec::new();
    if cap == 0 {
        return Ok(found);
    }
    let mut combo: Vec<usize> = (0..gamma).collect();
    loop {
        let d = VertexSet::from_vertices(n, combo.iter().copied())?;
        if is_dominating(g, &d)? && super::has_private_neighbors(g, &d)? {
            found.push(DominationCertificate::trusted(
                d,
                CertificateKind::Canonical,
            ));
            if found.len() == cap {
                break;
            }
        }
        // next combination in lexicographic order
        let Some(i) = (0..gamma).rev().find(|&i| combo[i] < n - gamma + i) else {
            break;
        };
        combo[i] += 1;
        for j in i + 1..gamma {
            combo[j] = combo[j - 1] + 1;
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn min_cert(g: &Graph, vs: &[usize]) -> DominationCertificate {
        DominationCertificate::minimum(
            g,
            VertexSet::from_vertices(g.n(), vs.iter().copied()).unwrap(),
        )
        .unwrap()
    }

    fn sets(certs: &[DominationCertificate]) -> Vec<Vec<usize>> {
        certs.iter().map(|c| c.set().to_vec()).collect()
    }

    #[test]
    fn c4_antipodal_seed_takes_one_swap() {
        let c4 = cycle(4);
        let out = canonicalize(&c4, &min_cert(&c4, &[0, 2])).unwrap();
        // 0 is stuck first and its lowest neighbor is 1
        assert_eq!(out.swaps, vec![(0, 1)]);
        assert_eq!(out.certificate.set().to_vec(), vec![1, 2]);
        assert_eq!(out.induced_edges, vec![0, 1]);
    }

    #[test]
    fn already_canonical_is_unchanged() {
        let s = star(3);
        let out = canonicalize(&s, &min_cert(&s, &[0])).unwrap();
        assert!(out.swaps.is_empty());
        assert_eq!(out.certificate.set().to_vec(), vec![0]);
        let k2 = complete(2);
        let out = canonicalize(&k2, &min_cert(&k2, &[0])).unwrap();
        assert_eq!(out.certificate.set().to_vec(), vec![0]);
    }

    #[test]
    fn rejects_non_minimum_seed() {
        let c4 = cycle(4);
        let seed =
            DominationCertificate::dominating(&c4, VertexSet::from_vertices(4, [0, 1, 2]).unwrap())
                .unwrap();
        assert_eq!(
            canonicalize(&c4, &seed).unwrap_err(),
            Error::NotMinimum { size: 3, gamma: 2 }
        );
    }

    #[test]
    fn enumerates_in_lex_order() {
        assert_eq!(
            sets(&enumerate_canonical(&complete(2), 10, 20).unwrap()),
            vec![vec![0], vec![1]]
        );
        assert_eq!(
            sets(&enumerate_canonical(&cycle(4), 10, 20).unwrap()),
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );
        assert_eq!(
            sets(&enumerate_canonical(&star(3), 10, 20).unwrap()),
            vec![vec![0]]
        );
        assert_eq!(enumerate_canonical(&cycle(4), 2, 20).unwrap().len(), 2);
    }

    #[test]
    fn enumeration_limit() {
        assert_eq!(
            enumerate_canonical(&path(21), 1, 20).unwrap_err(),
            Error::OracleLimitExceeded { n: 21, limit: 20 }
        );
    }
}
