//! Simple undirected graphs with dense integer vertex ids.

use std::collections::VecDeque;

use thiserror::Error;

/// Vertices are dense integers `0..n`. External labels, if any, live in the
/// I/O layer; every algorithm in this crate indexes arrays by vertex.
pub type Vertex = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("BFS requires a non-empty source set")]
    EmptySources,
}

/// Immutable simple undirected graph in adjacency-list form.
///
/// Adjacency lists are strictly increasing, so the representation is
/// canonical: two graphs built from the same edge set in any order compare
/// equal. Multi-edges in the input are collapsed; self-loops are rejected.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    m_edges: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut m_edges = 0;
        for list in adjacency.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m_edges += list.len();
        }
        debug_assert!(m_edges % 2 == 0);
        Ok(Graph {
            adjacency,
            m_edges: m_edges / 2,
        })
    }

    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Graph {
        Graph {
            adjacency: vec![Vec::new(); n],
            m_edges: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m_edges(&self) -> usize {
        self.m_edges
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Iterates over edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Multi-source BFS truncated at distance `cap`.
    ///
    /// Distances beyond the cap are not tracked; they come back as
    /// [`DistanceMap::beyond`]. The sources must be non-empty.
    pub fn bfs_capped(&self, sources: &[Vertex], cap: usize) -> Result<DistanceMap, GraphError> {
        if sources.is_empty() {
            return Err(GraphError::EmptySources);
        }
        let n = self.n();
        let mut dist = vec![None; n];
        let mut queue = VecDeque::new();
        for &s in sources {
            if s >= n {
                return Err(GraphError::VertexOutOfRange { vertex: s, n });
            }
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            if d == cap {
                continue;
            }
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        Ok(DistanceMap { cap, dist })
    }

    /// Replaces every edge by a path with `t` internal vertices.
    ///
    /// The original vertices keep their ids; the internal vertices of the
    /// i-th edge (in lexicographic edge order) are `n + i*t .. n + (i+1)*t`,
    /// in path order. The result has `n + t*m` vertices and `(t+1)*m` edges.
    pub fn subdivide(&self, t: usize) -> Graph {
        if t == 0 {
            return self.clone();
        }
        let n = self.n();
        let mut edges = Vec::with_capacity((t + 1) * self.m_edges);
        for (i, (u, v)) in self.edges().enumerate() {
            let base = n + i * t;
            edges.push((u, base));
            for j in 0..t - 1 {
                edges.push((base + j, base + j + 1));
            }
            edges.push((base + t - 1, v));
        }
        Graph::new(n + t * self.m_edges, &edges).expect("subdivision edges are valid")
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n(), self.m_edges)
    }
}

/// Distances from a source set, truncated at a cap.
///
/// "Beyond the cap" is a first-class value rather than infinity: the
/// algorithms here only ever need distances up to a small radius.
#[derive(Debug, Clone)]
pub struct DistanceMap {
    cap: usize,
    dist: Vec<Option<usize>>,
}

impl DistanceMap {
    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Distance of `v` from the source set, or `None` if it exceeds the cap.
    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.dist[v]
    }

    pub fn within_cap(&self, v: Vertex) -> bool {
        self.dist[v].is_some()
    }

    pub fn beyond(&self, v: Vertex) -> bool {
        self.dist[v].is_none()
    }

    pub fn is_source(&self, v: Vertex) -> bool {
        self.dist[v] == Some(0)
    }

    /// Largest tracked distance, `None` when no vertex is within the cap.
    pub fn max_finite(&self) -> Option<usize> {
        self.dist.iter().flatten().copied().max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_path() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m_edges(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.degree(0), 1);
    }

    #[test]
    fn builds_complete_graph() {
        let pairs: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let g = Graph::new(4, &pairs).unwrap();
        assert_eq!(g.m_edges(), 6);
        assert!((0..4).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
    }

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn collapses_duplicate_edges() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.m_edges(), 1);
        assert_eq!(g.neighbors(0), &[1]);
    }

    #[test]
    fn edge_order_does_not_matter() {
        let a = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let b = Graph::new(4, &[(2, 3), (3, 0), (2, 1), (1, 0)]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bfs_on_path_with_cap() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let d = g.bfs_capped(&[0], 2).unwrap();
        assert_eq!(d.get(0), Some(0));
        assert_eq!(d.get(1), Some(1));
        assert_eq!(d.get(2), Some(2));
        assert!(d.beyond(3));
        assert!(d.beyond(4));
        assert_eq!(d.max_finite(), Some(2));
    }

    #[test]
    fn bfs_two_sources_on_cycle() {
        // Expected values recomputed with the all-pairs reference in the
        // oracle tests; frozen here: every vertex of C6 is adjacent to
        // {v0, v3} or in it.
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let d = g.bfs_capped(&[0, 3], 6).unwrap();
        let got: Vec<_> = (0..6).map(|v| d.get(v).unwrap()).collect();
        assert_eq!(got, vec![0, 1, 1, 0, 1, 1]);
        assert_eq!(d.max_finite(), Some(1));
    }

    #[test]
    fn bfs_all_sources_cap_zero() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let d = g.bfs_capped(&[0, 1, 2, 3], 0).unwrap();
        assert!((0..4).all(|v| d.get(v) == Some(0)));
    }

    #[test]
    fn bfs_requires_sources() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.bfs_capped(&[], 1).unwrap_err(), GraphError::EmptySources);
    }

    #[test]
    fn subdivide_zero_is_identity() {
        let pairs: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let g = Graph::new(4, &pairs).unwrap();
        assert_eq!(g.subdivide(0), g);
    }

    #[test]
    fn subdivide_triangle_once_gives_six_cycle() {
        let g = Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        let sd = g.subdivide(1);
        assert_eq!(sd.n(), 6);
        assert_eq!(sd.m_edges(), 6);
        assert!((0..6).all(|v| sd.degree(v) == 2));
        // connected 2-regular on 6 vertices = C6
        let d = sd.bfs_capped(&[0], 6).unwrap();
        assert!((0..6).all(|v| d.within_cap(v)));
    }

    #[test]
    fn subdivide_k4_counts() {
        let pairs: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        let g = Graph::new(4, &pairs).unwrap();
        let sd = g.subdivide(1);
        assert_eq!(sd.n(), 10);
        assert_eq!(sd.m_edges(), 12);
    }

    #[test]
    fn subdivide_count_formulas() {
        for (n, edges) in [
            (5usize, vec![(0, 1), (1, 2), (2, 3), (3, 4)]),
            (4, vec![(0, 1), (0, 2), (0, 3)]),
            (6, vec![(0, 1), (2, 3), (4, 5), (0, 5)]),
        ] {
            let g = Graph::new(n, &edges).unwrap();
            for t in 0..4 {
                let sd = g.subdivide(t);
                assert_eq!(sd.n(), g.n() + t * g.m_edges());
                assert_eq!(sd.m_edges(), (t + 1) * g.m_edges());
            }
        }
    }
}
