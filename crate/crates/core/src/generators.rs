//! Deterministic graph constructors: the standard families used as a test
//! corpus, seeded random sparse graphs, and the subdivided-clique family
//! whose domination number escapes its independence numbers.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::orderings::VertexOrdering;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("cannot place {requested} edges on {n} vertices (max {max})")]
    InfeasibleEdgeCount {
        n: usize,
        requested: usize,
        max: usize,
    },
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges).expect("complete graph edges are valid")
}

/// Star with `leaves` leaves; vertex 0 is the center.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::new(leaves + 1, &edges).expect("star edges are valid")
}

/// Path on `n` vertices, numbered along the path.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges).expect("path edges are valid")
}

/// Cycle on `n` vertices. Degenerates to a single vertex or a single edge
/// for `n < 3` rather than a multigraph.
pub fn cycle(n: usize) -> Graph {
    if n <= 2 {
        return path(n);
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::new(n, &edges).expect("cycle edges are valid")
}

/// `rows x cols` grid, row-major vertex numbering.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::new(rows * cols, &edges).expect("grid edges are valid")
}

/// Complete binary tree on `n` vertices in heap order: the parent of `v > 0`
/// is `(v - 1) / 2`.
pub fn binary_tree(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|v| ((v - 1) / 2, v)).collect();
    Graph::new(n, &edges).expect("tree edges are valid")
}

/// The named standard families, for dispatch from configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    Star(usize),
    Path(usize),
    Cycle(usize),
    Grid(usize, usize),
    BinaryTree(usize),
}

pub fn standard_family(family: Family) -> Graph {
    match family {
        Family::Complete(n) => complete(n),
        Family::Star(leaves) => star(leaves),
        Family::Path(n) => path(n),
        Family::Cycle(n) => cycle(n),
        Family::Grid(r, c) => grid(r, c),
        Family::BinaryTree(n) => binary_tree(n),
    }
}

/// Uniform simple graph with exactly `m_edges` edges; identical output for
/// identical `(n, m_edges, seed)`.
pub fn random_sparse(n: usize, m_edges: usize, seed: u64) -> Result<Graph, GeneratorError> {
    let max = n * n.saturating_sub(1) / 2;
    if m_edges > max {
        return Err(GeneratorError::InfeasibleEdgeCount {
            n,
            requested: m_edges,
            max,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<(Vertex, Vertex)> = if max <= 1 << 20 {
        // small universe: draw a partial shuffle of all pairs
        let mut pairs: Vec<(Vertex, Vertex)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for i in 0..m_edges {
            let j = rng.gen_range(i..pairs.len());
            pairs.swap(i, j);
        }
        pairs.truncate(m_edges);
        pairs
    } else {
        // sparse regime: rejection-sample distinct pairs
        let mut seen = std::collections::HashSet::with_capacity(m_edges * 2);
        let mut out = Vec::with_capacity(m_edges);
        while out.len() < m_edges {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v {
                continue;
            }
            let e = (u.min(v), u.max(v));
            if seen.insert(e) {
                out.push(e);
            }
        }
        out
    };
    Ok(Graph::new(n, &edges).expect("sampled edges are valid"))
}

/// The subdivided-clique family with an apex over the midpoints.
///
/// Start from K_n, subdivide every edge `2k - 1` times, and add one new
/// vertex adjacent to the midpoint of every subdivided edge. Any two branch
/// vertices stay exactly `2k` apart, every vertex off the branch set sits
/// within `k` of the apex, yet covering the `n` branch vertices needs at
/// least `n / 2` balls of radius `k`.
#[derive(Debug, Clone)]
pub struct LowerBoundInstance {
    pub graph: Graph,
    /// The added vertex adjacent to all midpoints.
    pub apex: Vertex,
    /// Midpoints of the subdivided edges, one per K_n edge.
    pub middle: Vec<Vertex>,
    /// The original K_n vertices (degree n - 1 in the subdivision).
    pub branch: Vec<Vertex>,
    /// Apex first, then the branch vertices, then everything else.
    pub prescribed_ordering: VertexOrdering,
    pub k: usize,
}

/// Builds the instance for `n >= 3` branch vertices and radius `k >= 1`.
///
/// Vertex numbering: branch vertices `0..n` as in K_n, then the subdivision
/// vertices edge by edge in lexicographic edge order, the apex last.
pub fn lower_bound_gn(n: usize, k: usize) -> LowerBoundInstance {
    assert!(n >= 3, "need at least 3 branch vertices");
    assert!(k >= 1, "radius must be at least 1");
    let t = 2 * k - 1;
    let base = complete(n);
    let subdivided = base.subdivide(t);
    let apex = subdivided.n();
    // the j-th internal vertex of edge e is subdivided-id n + e*t + j; the
    // midpoint (distance k from both ends) is j = k - 1
    let middle: Vec<Vertex> = (0..base.m_edges()).map(|e| n + e * t + (k - 1)).collect();
    let mut edges: Vec<(Vertex, Vertex)> = subdivided.edges().collect();
    for &x in &middle {
        edges.push((x, apex));
    }
    let graph = Graph::new(apex + 1, &edges).expect("instance edges are valid");

    let mut order = Vec::with_capacity(graph.n());
    order.push(apex);
    order.extend(0..n);
    order.extend(n..apex);
    let prescribed_ordering =
        VertexOrdering::from_order(order).expect("prescription is a permutation");

    LowerBoundInstance {
        graph,
        apex,
        middle,
        branch: (0..n).collect(),
        prescribed_ordering,
        k,
    }
}

/// A graph with a name, for corpora and benchmark tables.
#[derive(Debug, Clone)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

fn named(name: impl Into<String>, graph: Graph) -> NamedGraph {
    NamedGraph {
        name: name.into(),
        graph,
    }
}

/// A deterministic ladder of instances from every family, capped at `max_n`
/// vertices. The random members derive their seeds from `seed`.
pub fn corpus(max_n: usize, seed: u64) -> Vec<NamedGraph> {
    let mut out: Vec<NamedGraph> = Vec::new();
    let mut push = |ng: NamedGraph| {
        if ng.graph.n() <= max_n {
            out.push(ng);
        }
    };

    for n in [1usize, 2, 3, 5, 9, 14, 60, 1000, 10000] {
        push(named(format!("path-{n}"), path(n)));
    }
    for n in [3usize, 4, 6, 9, 13, 50, 1024, 10000] {
        push(named(format!("cycle-{n}"), cycle(n)));
    }
    for leaves in [1usize, 3, 7, 12, 100, 9999] {
        push(named(format!("star-{leaves}"), star(leaves)));
    }
    for n in [2usize, 4, 6, 8, 14, 32, 64] {
        push(named(format!("complete-{n}"), complete(n)));
    }
    for (r, c) in [
        (2usize, 3usize),
        (3, 4),
        (4, 5),
        (7, 9),
        (20, 20),
        (100, 100),
    ] {
        push(named(format!("grid-{r}x{c}"), grid(r, c)));
    }
    for n in [7usize, 13, 62, 1023, 8191] {
        push(named(format!("btree-{n}"), binary_tree(n)));
    }
    for (n, k) in [
        (3usize, 1usize),
        (4, 1),
        (5, 1),
        (6, 1),
        (3, 2),
        (4, 2),
        (10, 1),
        (7, 2),
        (40, 1),
        (100, 1),
    ] {
        push(named(format!("gn-{n}-k{k}"), lower_bound_gn(n, k).graph));
    }
    for legs in [3usize, 5, 8, 40, 400] {
        push(named(format!("spider-{legs}"), star(legs).subdivide(1)));
    }
    for (n, m) in [
        (8usize, 11usize),
        (12, 18),
        (14, 21),
        (30, 60),
        (200, 500),
        (2000, 5000),
        (10000, 25000),
    ] {
        let g = random_sparse(n, m, seed ^ (n as u64) ^ ((m as u64) << 20))
            .expect("corpus edge counts are feasible");
        push(named(format!("random-{n}-{m}"), g));
    }
    out
}
