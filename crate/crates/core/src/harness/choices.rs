use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{ChoicePolicy, SweepConfig};
use crate::domination::{
    enumerate_canonical, enumerate_surjections, DominationCertificate, Surjection,
};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Indices of (D_G, D_H, F_G, F_H) within their enumerations: `dg`/`dh` into
/// the canonical sets, `fg`/`fh` into the surjections of the chosen set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct ChoiceId {
    pub dg: usize,
    pub dh: usize,
    pub fg: usize,
    pub fh: usize,
}

impl fmt::Display for ChoiceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.dg, self.dh, self.fg, self.fh)
    }
}

impl FromStr for ChoiceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<usize> = s
            .split(',')
            .map(|p| p.trim().parse())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::InvalidConfig(format!("bad choice id {s:?}")))?;
        match parts[..] {
            [dg, dh, fg, fh] => Ok(ChoiceId { dg, dh, fg, fh }),
            _ => Err(Error::InvalidConfig(format!(
                "choice id {s:?} needs four indices"
            ))),
        }
    }
}

#[derive(Debug, Clone)]
struct Side {
    certs: Vec<DominationCertificate>,
    surjections: Vec<Vec<Surjection>>,
}

impl Side {
    fn new(g: &Graph, canonical_cap: usize, surjection_cap: usize, limit: usize) -> Result<Self> {
        let certs = enumerate_canonical(g, canonical_cap, limit)?;
        let surjections = certs
            .iter()
            .map(|d| enumerate_surjections(g, d, surjection_cap))
            .collect::<Result<Vec<_>>>()?;
        if certs.is_empty() {
            return Err(Error::InternalContradiction(
                "no canonical minimum dominating set found".into(),
            ));
        }
        Ok(Side { certs, surjections })
    }

    fn count(&self) -> usize {
        self.surjections.iter().map(Vec::len).sum()
    }
}

/// The enumerated choices for one (G, H) pair, ordered lexicographically by
/// [`ChoiceId`].
#[derive(Debug, Clone)]
pub struct ChoiceSpace {
    g: Side,
    h: Side,
}

impl ChoiceSpace {
    /// Enumerates as much as `cfg.choice_policy` needs; `First` only looks at
    /// the first canonical set and surjection of each side.
    pub fn new(g: &Graph, h: &Graph, cfg: &SweepConfig) -> Result<Self> {
        let (dcap, fcap) = match cfg.choice_policy {
            ChoicePolicy::First => (1, 1),
            _ => (cfg.canonical_cap, cfg.surjection_cap),
        };
        Self::with_caps(g, h, dcap, fcap, cfg.oracle_limit)
    }

    pub fn with_caps(
        g: &Graph,
        h: &Graph,
        canonical_cap: usize,
        surjection_cap: usize,
        limit: usize,
    ) -> Result<Self> {
        Ok(ChoiceSpace {
            g: Side::new(g, canonical_cap, surjection_cap, limit)?,
            h: Side::new(h, canonical_cap, surjection_cap, limit)?,
        })
    }

    /// Number of tuples.
    pub fn total(&self) -> usize {
        self.g.count() * self.h.count()
    }

    /// The `k`-th tuple in lexicographic order.
    pub fn nth(&self, mut k: usize) -> Option<ChoiceId> {
        for (dg, sg) in self.g.surjections.iter().enumerate() {
            for (dh, sh) in self.h.surjections.iter().enumerate() {
                let block = sg.len() * sh.len();
                if k < block {
                    return Some(ChoiceId {
                        dg,
                        dh,
                        fg: k / sh.len(),
                        fh: k % sh.len(),
                    });
                }
                k -= block;
            }
        }
        None
    }

    pub fn get(
        &self,
        id: ChoiceId,
    ) -> Option<(
        &DominationCertificate,
        &DominationCertificate,
        &Surjection,
        &Surjection,
    )> {
        Some((
            self.g.certs.get(id.dg)?,
            self.h.certs.get(id.dh)?,
            self.g.surjections.get(id.dg)?.get(id.fg)?,
            self.h.surjections.get(id.dh)?.get(id.fh)?,
        ))
    }

    /// Tuples to evaluate under `policy`, in increasing order. `pair_seed`
    /// drives sampling.
    pub fn select(&self, policy: ChoicePolicy, pair_seed: u64, max_tuples: usize) -> Vec<ChoiceId> {
        let total = self.total();
        let indices: Vec<usize> = match policy {
            ChoicePolicy::First => vec![0],
            ChoicePolicy::All => (0..total.min(max_tuples)).collect(),
            ChoicePolicy::Sample { k } => {
                let others = total - 1;
                let k = k.min(max_tuples.saturating_sub(1));
                if k >= others {
                    (0..total).collect()
                } else {
                    let mut rng = ChaCha8Rng::seed_from_u64(pair_seed);
                    let mut picked: Vec<usize> = rand::seq::index::sample(&mut rng, others, k)
                        .into_iter()
                        .map(|i| i + 1)
                        .collect();
                    picked.sort_unstable();
                    std::iter::once(0).chain(picked).collect()
                }
            }
        };
        indices
            .into_iter()
            .map(|i| self.nth(i).expect("index below total"))
            .collect()
    }
}

/// Seed for one pair, derived from the sweep seed and both graph6 strings so
/// a pair's sampled tuples do not depend on where it sits in the corpus.
pub(crate) fn pair_seed(seed: u64, g6_g: &str, g6_h: &str) -> u64 {
    // FNV-1a
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    let bytes = seed
        .to_le_bytes()
        .into_iter()
        .chain(g6_g.bytes())
        .chain(*b"\n")
        .chain(g6_h.bytes());
    for b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x0100_0000_01b3);
    }
    hash
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn choice_id_text() {
        let id = ChoiceId {
            dg: 1,
            dh: 0,
            fg: 2,
            fh: 3,
        };
        assert_eq!(id.to_string(), "1,0,2,3");
        assert_eq!("1,0,2,3".parse::<ChoiceId>().unwrap(), id);
        assert!("1,2,3".parse::<ChoiceId>().is_err());
        assert!("a,b,c,d".parse::<ChoiceId>().is_err());
    }

    #[test]
    fn nth_walks_lexicographically() {
        let c4 = cycle(4);
        let space = ChoiceSpace::with_caps(&c4, &c4, 10, 10, 20).unwrap();
        // four canonical sets, one surjection each
        assert_eq!(space.total(), 16);
        let all: Vec<ChoiceId> = (0..16).map(|k| space.nth(k).unwrap()).collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(
            all[5],
            ChoiceId {
                dg: 1,
                dh: 1,
                fg: 0,
                fh: 0
            }
        );
        assert_eq!(space.nth(16), None);
    }

    #[test]
    fn sampling_is_seeded_and_keeps_first() {
        let c4 = cycle(4);
        let space = ChoiceSpace::with_caps(&c4, &c4, 10, 10, 20).unwrap();
        let a = space.select(ChoicePolicy::Sample { k: 3 }, 7, 4096);
        let b = space.select(ChoicePolicy::Sample { k: 3 }, 7, 4096);
        assert_eq!(a, b);
        assert_eq!(a.len(), 4);
        assert_eq!(a[0], ChoiceId::default());
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(
            space.select(ChoicePolicy::Sample { k: 100 }, 7, 4096).len(),
            16
        );
        assert_eq!(space.select(ChoicePolicy::All, 0, 5).len(), 5);
    }

    #[test]
    fn pair_seed_depends_on_inputs() {
        assert_eq!(pair_seed(1, "A_", "Bw"), pair_seed(1, "A_", "Bw"));
        assert_ne!(pair_seed(1, "A_", "Bw"), pair_seed(2, "A_", "Bw"));
        assert_ne!(pair_seed(1, "A_", "Bw"), pair_seed(1, "Bw", "A_"));
    }
}
