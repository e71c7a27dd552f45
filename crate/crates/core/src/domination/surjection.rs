use serde::Serialize;

use super::{is_dominating, DominationCertificate};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Which dominator a vertex with several dominating neighbors is sent to.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub enum TieBreak {
    #[default]
    Lowest,
    Highest,
}

/// A total map F: V − D → D with F(v) ∈ N(v) that hits every member of D.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surjection {
    dom_set: VertexSet,
    map: Vec<Option<usize>>,
}

impl Surjection {
    /// Validates `map` (indexed by vertex, `None` exactly on `dom_set`).
    pub fn new(g: &Graph, dom_set: VertexSet, map: Vec<Option<usize>>) -> Result<Self> {
        let s = Surjection { dom_set, map };
        s.validate(g)?;
        Ok(s)
    }

    pub fn dom_set(&self) -> &VertexSet {
        &self.dom_set
    }

    /// F(v), or `None` when `v` is in D or out of range.
    pub fn image(&self, v: usize) -> Option<usize> {
        self.map.get(v).copied().flatten()
    }

    /// `(v, F(v))` for every `v` outside D, in increasing `v`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.map
            .iter()
            .enumerate()
            .filter_map(|(v, img)| img.map(|u| (v, u)))
    }

    /// Checks totality, the edge condition and surjectivity against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSurjection(msg));
        g.check_host(&self.dom_set)?;
        if self.map.len() != g.n() {
            return bad(format!(
                "map covers {} vertices, graph has {}",
                self.map.len(),
                g.n()
            ));
        }
        let mut hit = VertexSet::empty(g.n());
        for (v, img) in self.map.iter().enumerate() {
            match (self.dom_set.contains(v), img) {
                (true, Some(_)) => return bad(format!("{v} is in D but has an image")),
                (true, None) => {}
                (false, None) => return bad(format!("{v} has no image")),
                (false, Some(u)) => {
                    if !self.dom_set.contains(*u) {
                        return bad(format!("F({v}) = {u} is not in D"));
                    }
                    if !g.adjacent(v, *u) {
                        return bad(format!("F({v}) = {u} is not a neighbor"));
                    }
                    hit.insert(*u)?;
                }
            }
        }
        if let Some(u) = self.dom_set.iter().find(|&u| !hit.contains(u)) {
            return bad(format!("{u} is not in the image"));
        }
        Ok(())
    }
}

/// For each vertex outside D, the dominators it may map to: a single forced
/// choice for private neighbors, every dominating neighbor otherwise.
fn choices(g: &Graph, d: &DominationCertificate) -> Result<Vec<Option<Vec<usize>>>> {
    let set = d.set();
    g.check_host(set)?;
    if !is_dominating(g, set)? {
        return Err(Error::NotDominating);
    }
    let mut has_private = VertexSet::empty(g.n());
    let options: Vec<Option<Vec<usize>>> = (0..g.n())
        .map(|v| {
            (!set.contains(v)).then(|| {
                g.neighbor_list(v)
                    .iter()
                    .copied()
                    .filter(|&u| set.contains(u))
                    .collect::<Vec<_>>()
            })
        })
        .collect();
    for opts in options.iter().flatten() {
        if let [u] = opts[..] {
            has_private.insert(u)?;
        }
    }
    if let Some(vertex) = set.iter().find(|&u| !has_private.contains(u)) {
        return Err(Error::NotCanonical { vertex });
    }
    Ok(options)
}

/// Builds F: private neighbors go to their unique dominator, every other vertex
/// outside D to a dominating neighbor chosen by `policy`.
pub fn build_surjection(
    g: &Graph,
    d: &DominationCertificate,
    policy: TieBreak,
) -> Result<Surjection> {
    let options = choices(g, d)?;
    let map = options
        .iter()
        .map(|opts| {
            opts.as_ref().map(|o| match policy {
                TieBreak::Lowest => o[0],
                TieBreak::Highest => o[o.len() - 1],
            })
        })
        .collect();
    Surjection::new(g, d.set().clone(), map)
}

/// Every surjection obtainable from the forced private-neighbor assignments,
/// in lexicographic order of `(F(v))` over increasing `v`, at most `cap`.
pub fn enumerate_surjections(
    g: &Graph,
    d: &DominationCertificate,
    cap: usize,
) -> Result<Vec<Surjection>> {
    let options = choices(g, d)?;
    let free: Vec<(usize, &[usize])> = options
        .iter()
        .enumerate()
        .filter_map(|(v, o)| o.as_deref().map(|o| (v, o)))
        .collect();
    let mut odometer = vec![0usize; free.len()];
    let mut out = Vec::new();
    while out.len() < cap {
        let mut map = vec![None; g.n()];
        for (&(v, opts), &k) in free.iter().zip(&odometer) {
            map[v] = Some(opts[k]);
        }
        out.push(Surjection::new(g, d.set().clone(), map)?);
        // last vertex varies fastest
        let Some(i) = (0..free.len())
            .rev()
            .find(|&i| odometer[i] + 1 < free[i].1.len())
        else {
            break;
        };
        odometer[i] += 1;
        odometer[i + 1..].fill(0);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::CertificateKind;
    use crate::graph::named::*;

    fn cert(n: usize, vs: &[usize]) -> DominationCertificate {
        DominationCertificate::trusted(
            VertexSet::from_vertices(n, vs.iter().copied()).unwrap(),
            CertificateKind::Canonical,
        )
    }

    fn as_pairs(s: &Surjection) -> Vec<(usize, usize)> {
        s.pairs().collect()
    }

    /// Path 0-1-2-3-4-5 plus vertex 6 joined to 1 and 4. D = {1,4}.
    fn path_with_hub() -> Graph {
        Graph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (6, 1), (6, 4)]).unwrap()
    }

    #[test]
    fn forced_assignments() {
        let f = build_surjection(&cycle(4), &cert(4, &[1, 2]), TieBreak::Lowest).unwrap();
        assert_eq!(as_pairs(&f), vec![(0, 1), (3, 2)]);
        let f = build_surjection(&star(3), &cert(4, &[0]), TieBreak::Lowest).unwrap();
        assert_eq!(as_pairs(&f), vec![(1, 0), (2, 0), (3, 0)]);
        let f = build_surjection(&path(4), &cert(4, &[1, 2]), TieBreak::Lowest).unwrap();
        assert_eq!(as_pairs(&f), vec![(0, 1), (3, 2)]);
    }

    #[test]
    fn tie_break_only_touches_free_vertices() {
        let g = path_with_hub();
        let d = cert(7, &[1, 4]);
        let low = build_surjection(&g, &d, TieBreak::Lowest).unwrap();
        let high = build_surjection(&g, &d, TieBreak::Highest).unwrap();
        assert_eq!(low.image(6), Some(1));
        assert_eq!(high.image(6), Some(4));
        for v in [0, 2, 3, 5] {
            assert_eq!(low.image(v), high.image(v));
        }
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(
            enumerate_surjections(&cycle(4), &cert(4, &[1, 2]), 10)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_surjections(&star(3), &cert(4, &[0]), 10)
                .unwrap()
                .len(),
            1
        );
        let all = enumerate_surjections(&path_with_hub(), &cert(7, &[1, 4]), 10).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].image(6), Some(1));
        assert_eq!(all[1].image(6), Some(4));
        assert_eq!(
            enumerate_surjections(&path_with_hub(), &cert(7, &[1, 4]), 1)
                .unwrap()
                .len(),
            1
        );
    }

    #[test]
    fn diamond_pair_is_not_canonical() {
        // C4 plus chord 1-3; vertices 0 and 2 both see 1 and 3, so neither
        // dominator has a private neighbor
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).unwrap();
        assert_eq!(
            build_surjection(&g, &cert(4, &[1, 3]), TieBreak::Lowest).unwrap_err(),
            Error::NotCanonical { vertex: 1 }
        );
        assert_eq!(
            enumerate_surjections(&g, &cert(4, &[1, 3]), 10).unwrap_err(),
            Error::NotCanonical { vertex: 1 }
        );
    }

    #[test]
    fn validation_catches_bad_maps() {
        let c4 = cycle(4);
        let d = VertexSet::from_vertices(4, [1, 2]).unwrap();
        // 0 -> 2 is not an edge
        let bad = Surjection::new(&c4, d.clone(), vec![Some(2), None, None, Some(2)]);
        assert!(matches!(bad, Err(Error::InvalidSurjection(_))));
        // 3 is never hit
        let odd = VertexSet::from_vertices(4, [1, 3]).unwrap();
        let bad = Surjection::new(&c4, odd, vec![Some(1), None, Some(1), None]);
        assert!(matches!(bad, Err(Error::InvalidSurjection(m)) if m.contains("not in the image")));
        let missing = Surjection::new(&c4, d, vec![None, None, None, Some(2)]);
        assert!(matches!(missing, Err(Error::InvalidSurjection(_))));
    }
}
