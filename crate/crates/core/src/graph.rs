use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Simple undirected graph on vertices `0..n` with no self-loops and no
/// isolated vertices. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    lists: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops,
    /// out-of-range endpoints and isolated vertices are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![VertexSet::empty(n); n];
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { vertex: a });
            }
            adj[a].insert(b)?;
            adj[b].insert(a)?;
        }
        Self::from_adjacency(adj)
    }

    /// Takes symmetric, irreflexive adjacency sets and checks for isolated vertices.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        if adj.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let lists: Vec<Vec<usize>> = adj.iter().map(VertexSet::to_vec).collect();
        if let Some(vertex) = lists.iter().position(Vec::is_empty) {
            return Err(Error::IsolatedVertex { vertex });
        }
        let degree_sum: usize = lists.iter().map(Vec::len).sum();
        debug_assert!(degree_sum.is_multiple_of(2));
        Ok(Graph {
            adj,
            lists,
            edge_count: degree_sum / 2,
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// The open neighborhood N(u).
    pub fn neighbors(&self, u: usize) -> Result<&VertexSet> {
        self.adj.get(u).ok_or(Error::VertexOutOfRange {
            vertex: u,
            n: self.n(),
        })
    }

    /// Neighbors of `u` in increasing order. Panics if `u` is out of range.
    pub fn neighbor_list(&self, u: usize) -> &[usize] {
        &self.lists[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.lists[u].len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// N[u] = N(u) ∪ {u}.
    pub fn closed_neighborhood(&self, u: usize) -> VertexSet {
        let mut set = self.adj[u].clone();
        set.insert(u).expect("u is in range");
        set
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.lists
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Number of edges of the subgraph induced by `set`.
    pub fn induced_edge_count(&self, set: &VertexSet) -> usize {
        set.iter()
            .map(|u| self.adj[u].intersection_count(set))
            .sum::<usize>()
            / 2
    }

    pub(crate) fn check_host(&self, set: &VertexSet) -> Result<()> {
        if set.host_n() != self.n() {
            return Err(Error::HostMismatch {
                set_n: set.host_n(),
                graph_n: self.n(),
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Small named graphs used throughout the tests and examples.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph on n >= 2 vertices")
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("path on n >= 2 vertices")
    }

    pub fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle on n >= 3 vertices")
    }

    /// K_{1,leaves} with center 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star with a leaf")
    }
}
