//! Oriented simple graphs, the standard generator families and the
//! edge-pair incidence classification used by the odd Laplacian.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// A directed edge `tail -> head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
}

impl Edge {
    pub fn new(tail: usize, head: usize) -> Self {
        Edge { tail, head }
    }

    pub fn reversed(self) -> Self {
        Edge {
            tail: self.head,
            head: self.tail,
        }
    }

    pub fn touches(self, v: usize) -> bool {
        self.tail == v || self.head == v
    }

    /// Incidence entry of this edge at vertex `v`: +1 if the edge ends at
    /// `v`, -1 if it starts there, 0 otherwise.
    pub fn incidence(self, v: usize) -> i32 {
        if self.head == v {
            1
        } else if self.tail == v {
            -1
        } else {
            0
        }
    }

    fn key(self) -> (usize, usize) {
        (self.tail.min(self.head), self.tail.max(self.head))
    }
}

impl From<(usize, usize)> for Edge {
    fn from((tail, head): (usize, usize)) -> Self {
        Edge { tail, head }
    }
}

/// An oriented simple graph: vertices `0..n_vertices` and an ordered edge list.
///
/// The edge order is significant. It fixes the row/column order of the
/// incidence matrix and the odd Laplacian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    n_vertices: usize,
    edges: Vec<Edge>,
}

impl OrientedGraph {
    /// Validates and builds a graph. Rejects out-of-range endpoints,
    /// self-loops and parallel edges (in either orientation).
    pub fn new<E: Into<Edge>>(n_vertices: usize, edges: impl IntoIterator<Item = E>) -> Result<Self> {
        let edges: Vec<Edge> = edges.into_iter().map(Into::into).collect();
        let mut seen = HashSet::with_capacity(edges.len());
        for e in &edges {
            for v in [e.tail, e.head] {
                if v >= n_vertices {
                    return Err(Error::IndexOutOfRange {
                        index: v,
                        limit: n_vertices,
                    });
                }
            }
            if e.tail == e.head {
                return Err(Error::SelfLoop(e.tail));
            }
            if !seen.insert(e.key()) {
                return Err(Error::ParallelEdge(e.tail, e.head));
            }
        }
        Ok(OrientedGraph { n_vertices, edges })
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        OrientedGraph {
            n_vertices: n,
            edges: Vec::new(),
        }
    }

    /// Complete graph K_n, edges oriented low index to high index in
    /// lexicographic order.
    pub fn complete(n: usize) -> Result<Self> {
        check_min("complete graph", n, 1)?;
        let edges = (0..n).flat_map(|i| ((i + 1)..n).map(move |j| Edge::new(i, j)));
        Ok(OrientedGraph {
            n_vertices: n,
            edges: edges.collect(),
        })
    }

    /// Path graph P_n with edges `(i, i + 1)`.
    pub fn path(n: usize) -> Result<Self> {
        check_min("path graph", n, 1)?;
        Ok(OrientedGraph {
            n_vertices: n,
            edges: (1..n).map(|i| Edge::new(i - 1, i)).collect(),
        })
    }

    /// Cycle graph C_n: the path P_n plus the closing edge, oriented
    /// `(0, n - 1)` to keep the low-to-high convention.
    pub fn cycle(n: usize) -> Result<Self> {
        check_min("cycle graph", n, 3)?;
        let mut g = Self::path(n)?;
        g.edges.push(Edge::new(0, n - 1));
        Ok(g)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> Result<Edge> {
        self.edges.get(i).copied().ok_or(Error::IndexOutOfRange {
            index: i,
            limit: self.edges.len(),
        })
    }

    /// Index of the edge joining `u` and `v` in either orientation.
    pub fn find_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.edges
            .iter()
            .position(|e| (e.tail == u && e.head == v) || (e.tail == v && e.head == u))
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.find_edge(u, v).is_some()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.touches(v)).count()
    }

    /// Undirected neighbour lists.
    pub fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n_vertices];
        for e in &self.edges {
            adj[e.tail].push(e.head);
            adj[e.head].push(e.tail);
        }
        adj
    }

    /// Returns a copy with one more edge appended.
    pub fn with_edge(&self, e: impl Into<Edge>) -> Result<Self> {
        let mut edges = self.edges.clone();
        edges.push(e.into());
        Self::new(self.n_vertices, edges)
    }

    /// Disjoint union; the vertices of `other` are shifted by
    /// `self.n_vertices()` and its edges are appended after ours.
    pub fn disjoint_union(&self, other: &OrientedGraph) -> OrientedGraph {
        let shift = self.n_vertices;
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|e| Edge::new(e.tail + shift, e.head + shift)),
        );
        OrientedGraph {
            n_vertices: self.n_vertices + other.n_vertices,
            edges,
        }
    }

    /// Relabels the graph. `vertex_order[k]` is the old index of the vertex
    /// placed at position `k`; `edge_order[k]` likewise for edges. Both must
    /// be permutations.
    pub fn relabel(&self, vertex_order: &[usize], edge_order: &[usize]) -> Result<OrientedGraph> {
        let new_of_old = invert_permutation(vertex_order, self.n_vertices)?;
        invert_permutation(edge_order, self.edges.len())?;
        let edges = edge_order
            .iter()
            .map(|&old| {
                let e = self.edges[old];
                Edge::new(new_of_old[e.tail], new_of_old[e.head])
            })
            .collect();
        Ok(OrientedGraph {
            n_vertices: self.n_vertices,
            edges,
        })
    }
}

fn check_min(what: &'static str, got: usize, min: usize) -> Result<()> {
    if got < min {
        Err(Error::TooSmall { what, min, got })
    } else {
        Ok(())
    }
}

/// Inverse of a permutation given as "new position -> old index".
pub(crate) fn invert_permutation(order: &[usize], len: usize) -> Result<Vec<usize>> {
    if order.len() != len {
        return Err(Error::DimensionMismatch(format!(
            "permutation of length {} for {} items",
            order.len(),
            len
        )));
    }
    let mut inv = vec![usize::MAX; len];
    for (new, &old) in order.iter().enumerate() {
        if old >= len {
            return Err(Error::IndexOutOfRange {
                index: old,
                limit: len,
            });
        }
        if inv[old] != usize::MAX {
            return Err(Error::DimensionMismatch(format!(
                "index {old} repeated in permutation"
            )));
        }
        inv[old] = new;
    }
    Ok(inv)
}

/// The three mutually exclusive relations between two distinct edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZetaCondition {
    /// The edges share no vertex.
    NotIncident,
    /// Both edges start, or both end, at the shared vertex.
    SameEndpointRole,
    /// One edge starts and the other ends at the shared vertex.
    OppositeEndpointRole,
}

impl ZetaCondition {
    pub fn value(self) -> i32 {
        match self {
            ZetaCondition::NotIncident => 0,
            ZetaCondition::SameEndpointRole => 1,
            ZetaCondition::OppositeEndpointRole => -1,
        }
    }

    /// Classifies two distinct edges of a simple graph. Simple graphs let
    /// two distinct edges share at most one vertex.
    pub fn classify(a: Edge, b: Edge) -> ZetaCondition {
        let shared = [a.tail, a.head].into_iter().find(|&v| b.touches(v));
        match shared {
            None => ZetaCondition::NotIncident,
            Some(v) if a.incidence(v) == b.incidence(v) => ZetaCondition::SameEndpointRole,
            Some(_) => ZetaCondition::OppositeEndpointRole,
        }
    }
}

/// Classifies edges `i` and `j` of `g`.
pub fn zeta(g: &OrientedGraph, i: usize, j: usize) -> Result<ZetaCondition> {
    let a = g.edge(i)?;
    let b = g.edge(j)?;
    if i == j {
        return Err(Error::SameEdge(i));
    }
    Ok(ZetaCondition::classify(a, b))
}

/// Reverses every edge whose index is in `flipped`. Repeated indices are
/// treated as a set.
pub fn flip_orientation(g: &OrientedGraph, flipped: &[usize]) -> Result<OrientedGraph> {
    let mut mask = vec![false; g.n_edges()];
    for &i in flipped {
        if i >= mask.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: mask.len(),
            });
        }
        mask[i] = true;
    }
    let edges = g
        .edges
        .iter()
        .zip(&mask)
        .map(|(&e, &f)| if f { e.reversed() } else { e })
        .collect();
    Ok(OrientedGraph {
        n_vertices: g.n_vertices,
        edges,
    })
}

/// Connected components of the underlying undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    /// Component label of each vertex, labels assigned in order of first
    /// appearance.
    pub labels: Vec<usize>,
}

pub fn connected_components(g: &OrientedGraph) -> Components {
    let n = g.n_vertices;
    let adj = g.neighbours();
    let mut labels = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for start in 0..n {
        if labels[start] != usize::MAX {
            continue;
        }
        labels[start] = count;
        stack.push(start);
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if labels[w] == usize::MAX {
                    labels[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    Components { count, labels }
}

/// χ = |V| - |E|.
pub fn euler_characteristic(g: &OrientedGraph) -> i64 {
    g.n_vertices as i64 - g.edges.len() as i64
}
