//! Undirected simple graphs, the family constructors used throughout the
//! crate, and exact distance-based matrices (distance, transmission,
//! distance Laplacian).
//!
//! Vertex ordering conventions (these make quotient block structures literal
//! sub-blocks of the matrices):
//! - `join(g1, g2)` keeps `g1`'s vertices first, then `g2`'s.
//! - `generalized_wheel(m, n)`: apex vertices `0..m`, then cycle vertices.
//! - `egw(a, m, n)`: the `a*m` apex vertices copy by copy, then the cycle.
//! - `dumbbell(m, n)`: copy 1 in full (apexes, then cycle), then copy 2.

use std::collections::VecDeque;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;

/// Undirected simple graph on vertices `0..n`.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>, // row-major n*n, symmetric, false diagonal
    label: Option<String>,
}

impl Graph {
    pub fn new(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![false; n * n],
            label: None,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Add the undirected edge `{u, v}`. Self-loops and out-of-range
    /// endpoints are programming errors.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        assert_ne!(u, v, "self-loops are not allowed");
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn degree(&self, u: usize) -> usize {
        (0..self.n).filter(|&v| self.adj[u * self.n + v]).count()
    }

    /// True when the two graphs have the same order and identical adjacency
    /// (labels are ignored).
    pub fn same_adjacency(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        self.bfs_distances(0).iter().all(|&d| d >= 0)
    }

    /// Adjacency matrix with 0/1 entries.
    pub fn adjacency_matrix(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.n, |i, j| {
            if self.has_edge(i, j) {
                BigInt::from(1)
            } else {
                BigInt::from(0)
            }
        })
    }

    /// Single-source shortest path lengths by breadth-first search;
    /// unreachable vertices get -1.
    fn bfs_distances(&self, src: usize) -> Vec<i64> {
        let mut dist = vec![-1i64; self.n];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for v in 0..self.n {
                if self.adj[u * self.n + v] && dist[v] < 0 {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Cycle C_n (n >= 3).
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle requires n >= 3, got n={n}"
        )));
    }
    let mut g = Graph::new(n);
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    Ok(g.with_label(format!("cycle({n})")))
}

/// Edgeless graph on m vertices (m >= 1).
pub fn empty_graph(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::InvalidParameter(
            "empty graph requires at least one vertex".into(),
        ));
    }
    Ok(Graph::new(m).with_label(format!("empty({m})")))
}

/// Complete graph K_n (n >= 1).
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "complete graph requires at least one vertex".into(),
        ));
    }
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge(i, j);
        }
    }
    Ok(g.with_label(format!("complete({n})")))
}

/// Complete bipartite graph K_{p,q} (p, q >= 1); part one is `0..p`.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidParameter(
            "complete bipartite graph requires both parts nonempty".into(),
        ));
    }
    let mut g = Graph::new(p + q);
    for i in 0..p {
        for j in 0..q {
            g.add_edge(i, p + j);
        }
    }
    Ok(g.with_label(format!("complete_bipartite({p},{q})")))
}

/// Disjoint union; vertices of `g2` are shifted by `g1.order()`.
pub fn union(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let mut g = Graph::new(n1 + g2.order());
    for u in 0..n1 {
        for v in u + 1..n1 {
            if g1.has_edge(u, v) {
                g.add_edge(u, v);
            }
        }
    }
    for u in 0..g2.order() {
        for v in u + 1..g2.order() {
            if g2.has_edge(u, v) {
                g.add_edge(n1 + u, n1 + v);
            }
        }
    }
    g
}

/// Join: disjoint union plus every cross edge between the two parts.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.order();
    let mut g = union(g1, g2);
    for u in 0..n1 {
        for v in 0..g2.order() {
            g.add_edge(u, n1 + v);
        }
    }
    g
}

/// Generalized wheel: m mutually non-adjacent apex vertices joined to an
/// n-cycle (m >= 1, n >= 3).
pub fn generalized_wheel(m: usize, n: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::InvalidParameter(format!(
            "generalized wheel requires m >= 1, got m={m}"
        )));
    }
    let g = join(&empty_graph(m)?, &cycle(n)?);
    Ok(g.with_label(format!("wheel(m={m},n={n})")))
}

/// Join of `a` disjoint copies of the edgeless graph on `m` vertices with an
/// n-cycle (a >= 1, m >= 1, n >= 3). Vertex count is a*m + n.
pub fn egw(a: usize, m: usize, n: usize) -> Result<Graph> {
    if a < 1 {
        return Err(Error::InvalidParameter(format!(
            "apex group count must satisfy a >= 1, got a={a}"
        )));
    }
    let mut apexes = empty_graph(m)?;
    for _ in 1..a {
        apexes = union(&apexes, &empty_graph(m)?);
    }
    let g = join(&apexes, &cycle(n)?);
    Ok(g.with_label(format!("egw(a={a},m={m},n={n})")))
}

/// Dumbbell: two copies of the generalized wheel with a perfect matching
/// between corresponding apex vertices (m >= 1, n >= 3). Copy 1 occupies
/// vertices 0..m+n, copy 2 the rest; apex j of copy 1 is matched to apex j
/// of copy 2.
pub fn dumbbell(m: usize, n: usize) -> Result<Graph> {
    let w = generalized_wheel(m, n)?;
    let mut g = union(&w, &w);
    let shift = m + n;
    for j in 0..m {
        g.add_edge(j, shift + j);
    }
    Ok(g.with_label(format!("dumbbell(m={m},n={n})")))
}

/// Matrix of pairwise shortest-path lengths. Errors on disconnected input
/// (the distance of an unreachable pair is undefined).
pub fn distance_matrix(g: &Graph) -> Result<ExactMatrix> {
    let n = g.order();
    if n == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let rows: Vec<Vec<i64>> = (0..n).into_par_iter().map(|s| g.bfs_distances(s)).collect();
    Ok(ExactMatrix::from_fn(n, |i, j| BigInt::from(rows[i][j])))
}

/// Diagonal matrix of row sums of the distance matrix (each vertex's total
/// distance to all others).
pub fn transmission(g: &Graph) -> Result<ExactMatrix> {
    let d = distance_matrix(g)?;
    let n = d.order();
    Ok(ExactMatrix::from_fn(n, |i, j| {
        if i == j {
            d.row_sum(i)
        } else {
            BigInt::from(0)
        }
    }))
}

/// Distance Laplacian: transmission minus distance matrix. Every row sums
/// to zero; the matrix is positive semidefinite.
pub fn distance_laplacian(g: &Graph) -> Result<ExactMatrix> {
    let d = distance_matrix(g)?;
    let n = d.order();
    Ok(ExactMatrix::from_fn(n, |i, j| {
        if i == j {
            d.row_sum(i)
        } else {
            -d.entry(i, j).clone()
        }
    }))
}
