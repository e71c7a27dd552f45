//! Exact minimum dominating set by branch and bound.
//!
//! Domination is treated as set cover: every vertex must be covered by the
//! closed neighborhood of some chosen vertex. The search branches on an
//! undominated vertex with the fewest remaining candidate dominators and, in
//! the i-th branch, forbids the candidates tried in branches 0..i so no set is
//! explored twice. Bounds:
//!
//! * upper: greedy max-coverage solution, improved as the search finds better;
//! * lower: a greedy packing of undominated vertices whose candidate sets are
//!   pairwise disjoint (each needs its own dominator), and the coverage bound
//!   `ceil(undominated / best single gain)`.

use fixedbitset::FixedBitSet;

use super::{CertificateKind, DominationCertificate};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Returns `γ(g)` and a minimum dominating set witnessing it.
pub fn gamma_exact(g: &Graph) -> (usize, DominationCertificate) {
    let mut search = Search::new(g);
    search.run();
    let set = VertexSet::from_vertices(g.n(), search.best.iter().copied())
        .expect("solver only picks vertices of g");
    (
        search.best.len(),
        DominationCertificate::trusted(set, CertificateKind::Minimum),
    )
}

struct Search {
    n: usize,
    closed: Vec<FixedBitSet>,
    best: Vec<usize>,
}

impl Search {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let closed = (0..n)
            .map(|u| g.closed_neighborhood(u).bits().clone())
            .collect();
        Search {
            n,
            closed,
            best: Vec::new(),
        }
    }

    fn run(&mut self) {
        self.best = self.greedy();
        let dominated = FixedBitSet::with_capacity(self.n);
        let forbidden = FixedBitSet::with_capacity(self.n);
        let mut chosen = Vec::new();
        self.branch(&mut chosen, &dominated, &forbidden);
    }

    fn greedy(&self) -> Vec<usize> {
        let mut dominated = FixedBitSet::with_capacity(self.n);
        let mut picks = Vec::new();
        while dominated.count_ones(..) < self.n {
            let u = (0..self.n)
                .max_by_key(|&u| {
                    (
                        self.closed[u].difference_count(&dominated),
                        std::cmp::Reverse(u),
                    )
                })
                .expect("graph is nonempty");
            dominated.union_with(&self.closed[u]);
            picks.push(u);
        }
        picks
    }

    fn branch(
        &mut self,
        chosen: &mut Vec<usize>,
        dominated: &FixedBitSet,
        forbidden: &FixedBitSet,
    ) {
        let mut undominated = dominated.clone();
        undominated.toggle_range(..);
        let remaining = undominated.count_ones(..);
        if remaining == 0 {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        // at least one more vertex is needed
        if chosen.len() + 1 >= self.best.len() {
            return;
        }

        let mut allowed = forbidden.clone();
        allowed.toggle_range(..);

        // candidate dominators per undominated vertex
        let mut cands: Vec<(usize, FixedBitSet)> = Vec::with_capacity(remaining);
        for x in undominated.ones() {
            let mut c = self.closed[x].clone();
            c.intersect_with(&allowed);
            if c.is_clear() {
                return;
            }
            cands.push((x, c));
        }
        cands.sort_by_key(|(x, c)| (c.count_ones(..), *x));

        let mut packed = FixedBitSet::with_capacity(self.n);
        let mut packing = 0;
        for (_, c) in &cands {
            if c.is_disjoint(&packed) {
                packed.union_with(c);
                packing += 1;
            }
        }
        let best_gain = allowed
            .ones()
            .map(|u| self.closed[u].intersection_count(&undominated))
            .max()
            .unwrap_or(0);
        let coverage = remaining.div_ceil(best_gain.max(1));
        if chosen.len() + packing.max(coverage) >= self.best.len() {
            return;
        }

        let (_, pivot) = &cands[0];
        let mut options: Vec<(usize, usize)> = pivot
            .ones()
            .map(|u| (self.closed[u].intersection_count(&undominated), u))
            .collect();
        options.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

        let mut forbid = forbidden.clone();
        for (_, u) in options {
            let mut next = dominated.clone();
            next.union_with(&self.closed[u]);
            chosen.push(u);
            self.branch(chosen, &next, &forbid);
            chosen.pop();
            forbid.insert(u);
            if chosen.len() + 1 >= self.best.len() {
                return;
            }
        }
    }
}
