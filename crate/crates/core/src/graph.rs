//! Simple undirected graphs with 1-based vertex labels, plus the
//! Mycielskian and graph-power operators.
//!
//! Graphs are immutable after construction and safe to share across
//! threads; every operation here is a pure function of its inputs.

use std::collections::BTreeSet;
use std::collections::VecDeque;

use thiserror::Error;

/// 1-based vertex label.
pub type Vertex = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: u32 },
    #[error("graph not connected")]
    NotConnected,
    #[error("graph power exponent must be >= 1")]
    InvalidPower,
}

/// A simple undirected graph: vertex count `n` (vertices are `1..=n`)
/// and a set of unordered edges stored as pairs `(u, v)` with `u < v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: u32,
    edges: BTreeSet<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Build a graph from an edge list. Endpoint order within a pair is
    /// irrelevant; self-loops, duplicates and out-of-range endpoints are
    /// rejected.
    pub fn new(n: u32, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Graph, GraphError> {
        let mut set = BTreeSet::new();
        let mut adj = vec![Vec::new(); n as usize];
        for (a, b) in edges {
            for v in [a, b] {
                if v < 1 || v > n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if !set.insert((u, v)) {
                return Err(GraphError::DuplicateEdge(u, v));
            }
            adj[u as usize - 1].push(v);
            adj[v as usize - 1].push(u);
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph { n, edges: set, adj })
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.edges.contains(&(u, v))
    }

    /// Neighbours of `v` in ascending order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize - 1].len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        1..=self.n
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n as usize];
        let mut queue = VecDeque::from([1u32]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if !seen[w as usize - 1] {
                    seen[w as usize - 1] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn has_triangle(&self) -> bool {
        for &(u, v) in &self.edges {
            let (mut i, mut j) = (0, 0);
            let (nu, nv) = (self.neighbors(u), self.neighbors(v));
            while i < nu.len() && j < nv.len() {
                match nu[i].cmp(&nv[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => return true,
                }
            }
        }
        false
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    fn bfs_distances(&self, source: Vertex) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n as usize];
        dist[source as usize - 1] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v as usize - 1].unwrap();
            for &w in self.neighbors(v) {
                if dist[w as usize - 1].is_none() {
                    dist[w as usize - 1] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// The Mycielskian of `g`, with the fixed labelling
/// `v_i = i` (1..=n), `u_i = n + i`, apex `u = 2n + 1`.
///
/// Edges are the original ones, `{u_i, v_j}` whenever `{v_i, v_j}` is an
/// edge of `g`, and `{u, u_i}` for every shadow vertex, giving `3m + n`
/// edges on `2n + 1` vertices.
pub fn mycielskian(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let apex = 2 * n + 1;
    let mut edges: Vec<(Vertex, Vertex)> = g.edges().collect();
    for (u, v) in g.edges() {
        edges.push((n + u, v));
        edges.push((u, n + v));
    }
    for i in 1..=n {
        edges.push((n + i, apex));
    }
    Graph::new(apex, edges).expect("mycielskian construction is always valid")
}

/// `r`-th power: same vertices, adjacency iff the distance in `g` is
/// between 1 and `r`. Vertices in different components stay non-adjacent.
pub fn graph_power(g: &Graph, r: u32) -> Result<Graph, GraphError> {
    if r < 1 {
        return Err(GraphError::InvalidPower);
    }
    let mut edges = Vec::new();
    for v in g.vertices() {
        for (idx, d) in g.bfs_distances(v).iter().enumerate() {
            let w = idx as Vertex + 1;
            if w > v {
                if let Some(d) = d {
                    if *d >= 1 && *d <= r {
                        edges.push((v, w));
                    }
                }
            }
        }
    }
    Graph::new(g.vertex_count(), edges)
}

/// Maximum shortest-path distance over all vertex pairs.
/// Fails on disconnected input.
pub fn diameter(g: &Graph) -> Result<u32, GraphError> {
    let mut best = 0;
    for v in g.vertices() {
        for d in g.bfs_distances(v) {
            match d {
                Some(d) => best = best.max(d),
                None => return Err(GraphError::NotConnected),
            }
        }
    }
    Ok(best)
}

/// True iff no edge of `g` has both endpoints in `set`.
pub fn is_independent_set(g: &Graph, set: &[Vertex]) -> Result<bool, GraphError> {
    let n = g.vertex_count();
    for &v in set {
        if v < 1 || v > n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n });
        }
    }
    for (i, &u) in set.iter().enumerate() {
        for &v in &set[i + 1..] {
            if u != v && g.has_edge(u, v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
