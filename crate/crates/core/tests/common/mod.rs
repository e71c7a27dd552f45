#![allow(dead_code)]

use std::path::PathBuf;

use adjdom::{parse_graph6, Graph};
use proptest::prelude::*;

pub fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

/// graph6 lines of the connected graphs on exactly `n` vertices.
pub fn corpus_lines(n: usize) -> Vec<String> {
    let path = data_dir().join(format!("connected{n}.g6"));
    std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}", path.display()))
        .lines()
        .map(str::to_string)
        .collect()
}

/// Connected graphs on 2..=max_n vertices.
pub fn corpus(max_n: usize) -> Vec<Graph> {
    (2..=max_n)
        .flat_map(corpus_lines)
        .map(|l| parse_graph6(&l).unwrap())
        .collect()
}

/// Random graph on 2..=max_n vertices; isolated vertices get joined to their successor.
pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            let mut deg = vec![0; n];
            for &(a, b) in &edges {
                deg[a] += 1;
                deg[b] += 1;
            }
            for v in 0..n {
                if deg[v] == 0 {
                    let w = (v + 1) % n;
                    edges.push((v, w));
                    deg[v] += 1;
                    deg[w] += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

/// Every subset of 0..n as a bitmask, with an independent domination test.
pub fn dominates_mask(g: &Graph, mask: u32) -> bool {
    (0..g.n()).all(|v| mask >> v & 1 == 1 || g.neighbor_list(v).iter().any(|&u| mask >> u & 1 == 1))
}

/// All minimum dominating sets by exhaustive subset scan, lexicographic by members.
pub fn all_minimum_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    assert!(n <= 16);
    let mut best = usize::MAX;
    let mut sets = Vec::new();
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k > best || !dominates_mask(g, mask) {
            continue;
        }
        if k < best {
            best = k;
            sets.clear();
        }
        sets.push((0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>());
    }
    sets.sort();
    sets
}

/// Private-neighbor test written from the definition.
pub fn has_private(g: &Graph, d: &[usize], u: usize) -> bool {
    g.neighbor_list(u).iter().any(|&v| {
        !d.contains(&v) && g.neighbor_list(v).iter().filter(|w| d.contains(w)).count() == 1
    })
}
