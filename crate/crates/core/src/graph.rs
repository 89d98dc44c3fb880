//! Simple undirected graphs with stable vertex indices.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

/// An unordered vertex pair, always stored with the smaller index first.
pub type Edge = (usize, usize);

/// Normalises a vertex pair into an [`Edge`].
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("maximum degree {max_degree} exceeds cap {cap}")]
    DegreeExceedsCap { max_degree: usize, cap: usize },
    #[error("degree profiles have different caps ({0} vs {1})")]
    ProfileMismatch(usize, usize),
    #[error("adjacency is not symmetric at {0}-{1}")]
    Asymmetric(usize, usize),
}

/// A simple undirected graph on vertices `0..n`.
///
/// Adjacency is kept in ordered sets so that every iteration order is
/// deterministic.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![BTreeSet::new(); n],
            m: 0,
        }
    }

    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if !g.add_edge(u, v)? {
                let (a, b) = edge(u, v);
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Maximum degree, 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(&v)
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n() {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n() })
        } else {
            Ok(())
        }
    }

    /// Adds `uv`; returns `Ok(false)` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.adj[u].insert(v) {
            return Ok(false);
        }
        self.adj[v].insert(u);
        self.m += 1;
        Ok(true)
    }

    /// Removes `uv`; returns whether it was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.n() || v >= self.n() || !self.adj[u].remove(&v) {
            return false;
        }
        self.adj[v].remove(&u);
        self.m -= 1;
        true
    }

    /// Appends an isolated vertex and returns its index.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(BTreeSet::new());
        self.adj.len() - 1
    }

    /// Deletes the given vertices and compacts indices.
    ///
    /// Returns the old→new index map (`None` for deleted vertices). Surviving
    /// vertices keep their relative order.
    pub fn delete_vertices(&mut self, doomed: &[usize]) -> Vec<Option<usize>> {
        let mut keep = vec![true; self.n()];
        for &v in doomed {
            keep[v] = false;
        }
        let mut map = vec![None; self.n()];
        let mut next = 0;
        for (v, &k) in keep.iter().enumerate() {
            if k {
                map[v] = Some(next);
                next += 1;
            }
        }
        let mut adj = vec![BTreeSet::new(); next];
        let mut m = 0;
        for (u, ns) in self.adj.iter().enumerate() {
            if let Some(nu) = map[u] {
                for &v in ns {
                    if let Some(nv) = map[v] {
                        adj[nu].insert(nv);
                        if nu < nv {
                            m += 1;
                        }
                    }
                }
            }
        }
        self.adj = adj;
        self.m = m;
        map
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut h = Graph::new(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = pos[w];
                if j != usize::MAX && i < j {
                    h.adj[i].insert(j);
                    h.adj[j].insert(i);
                    h.m += 1;
                }
            }
        }
        h
    }

    /// True when some component is a single edge.
    pub fn has_isolated_edge(&self) -> bool {
        self.edges().any(|(u, v)| self.degree(u) == 1 && self.degree(v) == 1)
    }

    /// Full scan of symmetry and simplicity.
    pub fn validate(&self) -> Result<(), GraphError> {
        let mut count = 0;
        for (u, ns) in self.adj.iter().enumerate() {
            for &v in ns {
                self.check_vertex(v)?;
                if u == v {
                    return Err(GraphError::SelfLoop(u));
                }
                if !self.adj[v].contains(&u) {
                    return Err(GraphError::Asymmetric(u, v));
                }
                count += 1;
            }
        }
        debug_assert_eq!(count % 2, 0);
        if count / 2 != self.m {
            return Err(GraphError::Asymmetric(0, 0));
        }
        Ok(())
    }

    /// Number of vertices of each degree, capped at `cap`.
    pub fn degree_profile(&self, cap: usize) -> Result<DegreeProfile, GraphError> {
        let max_degree = self.max_degree();
        if max_degree > cap {
            return Err(GraphError::DegreeExceedsCap { max_degree, cap });
        }
        let mut counts = vec![0; cap];
        for v in 0..self.n() {
            let d = self.degree(v);
            if d > 0 {
                counts[d - 1] += 1;
            }
        }
        Ok(DegreeProfile { counts })
    }
}

/// Vertex counts per degree `1..=k`; isolated vertices are not recorded.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeProfile {
    counts: Vec<usize>,
}

impl DegreeProfile {
    pub fn cap(&self) -> usize {
        self.counts.len()
    }

    /// Number of vertices of degree `d` (`1 ≤ d ≤ cap`).
    pub fn count(&self, d: usize) -> usize {
        self.counts[d - 1]
    }

    /// Strict lexicographic comparison of `(n_k, …, n_1)`.
    pub fn precedes(&self, other: &DegreeProfile) -> Result<bool, GraphError> {
        if self.cap() != other.cap() {
            return Err(GraphError::ProfileMismatch(self.cap(), other.cap()));
        }
        Ok(self.counts.iter().rev().lt(other.counts.iter().rev()))
    }
}

impl fmt::Display for DegreeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate().rev() {
            if i + 1 != self.counts.len() {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Small named families used throughout the tests and examples.
pub mod families {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle")
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("complete")
    }

    /// `K_{1,leaves}` with the centre at index 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star")
    }
}
