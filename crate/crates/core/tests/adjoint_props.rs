mod common;

use adjdom::domination::gamma_bruteforce;
use adjdom::graph::named::*;
use adjdom::harness::ChoiceSpace;
use adjdom::product::{
    build_adjoint, cartesian_product, is_minimal_dominating, minimality_witnesses, s_map,
    verify_dominates, verify_minimal, AdjointGraph,
};
use adjdom::{gamma_exact, Graph, VertexSet};
use common::*;
use proptest::prelude::*;

/// Product adjacency straight from the definition.
fn product_adjacent(g: &Graph, h: &Graph, (u, v): (usize, usize), (x, y): (usize, usize)) -> bool {
    (u == x && h.adjacent(v, y)) || (v == y && g.adjacent(u, x))
}

fn every_choice(g: &Graph, h: &Graph) -> Vec<AdjointGraph> {
    let space = ChoiceSpace::with_caps(g, h, usize::MAX, usize::MAX, 20).unwrap();
    (0..space.total())
        .map(|k| {
            let (dg, dh, fg, fh) = space.get(space.nth(k).unwrap()).unwrap();
            build_adjoint(g, h, dg, dh, fg, fh, 4096).unwrap()
        })
        .collect()
}

#[test]
fn product_matches_definition() {
    let gs = corpus(4);
    for g in &gs {
        for h in &gs {
            let p = cartesian_product(g, h, 4096).unwrap();
            assert_eq!(
                p.edge_count(),
                g.n() * h.edge_count() + h.n() * g.edge_count()
            );
            for a in 0..p.n() {
                for b in 0..p.n() {
                    let (ua, va) = (a / h.n(), a % h.n());
                    let (ub, vb) = (b / h.n(), b % h.n());
                    assert_eq!(p.adjacent(a, b), product_adjacent(g, h, (ua, va), (ub, vb)));
                }
            }
        }
    }
}

#[test]
fn times_k2_edge_count() {
    for g in corpus(6) {
        let p = cartesian_product(&g, &complete(2), 4096).unwrap();
        assert_eq!(p.edge_count(), 2 * g.edge_count() + g.n());
    }
}

#[test]
fn adjoint_invariants_over_all_choices() {
    let gs = corpus(4);
    for g in &gs {
        for h in &gs {
            let (gamma_g, gamma_h) = (gamma_exact(g).0, gamma_exact(h).0);
            for a in every_choice(g, h) {
                assert_eq!(a.adjoined_count(), (g.n() - gamma_g) * (h.n() - gamma_h));
                for ((u, v), (x, y)) in a.adjoined_coords() {
                    assert!(!a.dg.set().contains(u) && !a.dh.set().contains(v));
                    assert!(a.dg.set().contains(x) && a.dh.set().contains(y));
                    assert!(u != x && v != y);
                    assert!(!product_adjacent(g, h, (u, v), (x, y)));
                    assert_eq!(a.fg.image(u), Some(x));
                    assert_eq!(a.fh.image(v), Some(y));
                }
                assert!(a.s_is_surjective());
                // single-coordinate cases of S ride on product edges
                for u in 0..g.n() {
                    for v in 0..h.n() {
                        let (in_g, in_h) = (a.dg.set().contains(u), a.dh.set().contains(v));
                        if in_g != in_h {
                            let target = s_map(u, v, &a.fg, &a.fh).unwrap();
                            assert!(product_adjacent(g, h, (u, v), target));
                        }
                    }
                }
                assert!(verify_dominates(&a));
                assert_eq!(verify_minimal(&a), Ok(true));
                let witnesses = minimality_witnesses(g, h, &a).unwrap();
                assert!(witnesses.iter().all(|w| w.certifies()));
            }
        }
    }
}

#[test]
fn without_adjoined_edges_the_set_can_fail() {
    let c4 = cycle(4);
    let mut failures = 0;
    for a in every_choice(&c4, &c4) {
        if !adjdom::is_dominating(&a.base, &a.dominating).unwrap() {
            failures += 1;
        }
    }
    assert!(failures > 0);
}

#[test]
fn full_vertex_set_is_not_minimal() {
    let a = &every_choice(&path(3), &cycle(4))[0];
    assert_eq!(
        is_minimal_dominating(&a.combined, &VertexSet::full(a.combined.n())),
        Ok(false)
    );
}

#[test]
fn product_domination_numbers() {
    // brute force over 2^4, 2^16 and 2^9 subsets
    let c4 = cartesian_product(&complete(2), &complete(2), 4096).unwrap();
    assert_eq!(gamma_bruteforce(&c4, 20), Ok(2));
    let torus = cartesian_product(&cycle(4), &cycle(4), 4096).unwrap();
    assert_eq!(gamma_bruteforce(&torus, 20), Ok(4));
    assert_eq!(gamma_exact(&torus).0, 4);
    let grid = cartesian_product(&path(3), &path(3), 4096).unwrap();
    assert_eq!(gamma_bruteforce(&grid, 20), Ok(3));
    assert_eq!(gamma_exact(&grid).0, 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn adjoint_is_sandwiched(g in arb_graph(5), h in arb_graph(4)) {
        let a = &every_choice(&g, &h)[0];
        let gamma_adj = gamma_exact(&a.combined).0;
        let gamma_prod = gamma_exact(&a.base).0;
        prop_assert!(gamma_adj <= gamma_prod);
        prop_assert!(gamma_adj <= a.dominating.len());
        prop_assert_eq!(gamma_bruteforce(&a.combined, 20).unwrap(), gamma_adj);
    }
}
