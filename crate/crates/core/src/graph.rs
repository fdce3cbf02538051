//! Immutable simple undirected graphs on dense vertex ids `0..n`.

use thiserror::Error;

/// A vertex id. Vertices of a graph with `n` vertices are `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("malformed DIMACS header: {0}")]
    MalformedHeader(String),
    #[error("malformed DIMACS line {line}: {text}")]
    MalformedLine { line: usize, text: String },
    #[error("DIMACS header declares {declared} edges, found {found}")]
    EdgeCountMismatch { declared: usize, found: usize },
}

/// Simple undirected graph with sorted adjacency lists.
///
/// Invariants, checked by every constructor: no self-loops, no repeated
/// neighbors, `u ∈ adj[v] ⇔ v ∈ adj[u]`, each list ascending, and
/// `m = Σ|adj[v]| / 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoint order within a pair is
    /// irrelevant; `(u, v)` and `(v, u)` in the same list are duplicates.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        let graph = Graph {
            adj,
            m: edges.len(),
        };
        debug_assert!(graph.check_invariants());
        Ok(graph)
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        Graph {
            adj,
            m: n * n.saturating_sub(1) / 2,
        }
    }

    /// The chordless cycle `0 - 1 - … - (n-1) - 0`; needs `n ≥ 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle edges are simple")
    }

    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<Vertex>>) -> Graph {
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let graph = Graph { adj, m };
        debug_assert!(graph.check_invariants());
        graph
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.m);
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Subgraph induced by `keep`. Duplicates in `keep` are ignored and the
    /// new ids follow ascending old ids.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Result<InducedSubgraph, GraphError> {
        let mut to_new = vec![None; self.n()];
        let mut to_old: Vec<Vertex> = Vec::with_capacity(keep.len());
        for &v in keep {
            if v >= self.n() {
                return Err(GraphError::VertexOutOfRange(v));
            }
            to_new[v] = Some(0);
        }
        for v in self.vertices() {
            if to_new[v].is_some() {
                to_new[v] = Some(to_old.len());
                to_old.push(v);
            }
        }
        let adj = to_old
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter_map(|&w| to_new[w])
                    .collect::<Vec<_>>()
            })
            .collect();
        Ok(InducedSubgraph {
            graph: Graph::from_sorted_adjacency(adj),
            to_old,
            to_new,
        })
    }

    /// Two-colors the graph by BFS, or returns `None` if it has an odd cycle.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n()];
        let mut queue = std::collections::VecDeque::new();
        for root in self.vertices() {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap()).collect())
    }

    pub fn is_stable_set(&self, set: &[Vertex]) -> bool {
        set.iter().enumerate().all(|(i, &u)| {
            u < self.n() && set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v))
        })
    }

    pub fn is_clique(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| u < self.n() && set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub(crate) fn check_invariants(&self) -> bool {
        let mut total = 0;
        for (u, list) in self.adj.iter().enumerate() {
            total += list.len();
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return false;
            }
            for &v in list {
                if v == u || v >= self.n() || self.adj[v].binary_search(&u).is_err() {
                    return false;
                }
            }
        }
        total == 2 * self.m
    }
}

/// Result of [`Graph::induced_subgraph`] with the id maps in both directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `to_old[new] = old`.
    pub to_old: Vec<Vertex>,
    /// `to_new[old] = Some(new)` for kept vertices.
    pub to_new: Vec<Option<Vertex>>,
}

/// Vertex names of the built-in counterexample, in id order.
pub const COUNTEREXAMPLE_NAMES: [char; 10] = ['a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i', 'j'];

/// Edges of the built-in counterexample in name form.
pub const COUNTEREXAMPLE_EDGES: [(char, char); 15] = [
    ('a', 'b'),
    ('a', 'c'),
    ('b', 'c'),
    ('c', 'f'),
    ('c', 'd'),
    ('c', 'g'),
    ('f', 'h'),
    ('d', 'e'),
    ('e', 'j'),
    ('j', 'h'),
    ('h', 'g'),
    ('g', 'f'),
    ('i', 'e'),
    ('i', 'j'),
    ('i', 'h'),
];

/// The MCColor order a, b, …, j that uses four colors on the counterexample.
pub const COUNTEREXAMPLE_ORDER: [Vertex; 10] = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9];

/// Colors assigned along [`COUNTEREXAMPLE_ORDER`].
pub const COUNTEREXAMPLE_COLORS: [usize; 10] = [1, 2, 3, 1, 2, 1, 2, 3, 1, 4];

/// Maps a counterexample vertex name (`a`..`j`) to its id.
pub fn counterexample_vertex(name: char) -> Option<Vertex> {
    COUNTEREXAMPLE_NAMES.iter().position(|&c| c == name)
}

/// The ten-vertex Meyniel graph on which MCColor can use four colors while
/// its chromatic number is three. Vertex `a` is 0, …, `j` is 9.
pub fn counterexample_graph() -> Graph {
    let edges: Vec<_> = COUNTEREXAMPLE_EDGES
        .iter()
        .map(|&(u, v)| {
            (
                counterexample_vertex(u).unwrap(),
                counterexample_vertex(v).unwrap(),
            )
        })
        .collect();
    Graph::from_edges(COUNTEREXAMPLE_NAMES.len(), &edges).expect("builtin edge list is simple")
}
