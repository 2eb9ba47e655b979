//! Interface and bridge gluing at the level of vertex and edge sets.
//!
//! Both constructions produce a [`GluedGraph`] in a fixed canonical layout:
//!
//! * interface gluing: vertices are `Γ1 \ I`, then `I` (in interface order),
//!   then `Γ2 \ I`; edges are `E(Γ1) \ E(I)`, then `E(I)`, then `E(Γ2) \ E(I)`.
//! * bridge gluing: vertices are `Γ1` then `Γ2`; edges are `E(Γ1)`, then the
//!   bridges, then `E(Γ2)`.
//!
//! The matrix-level gluing formulas in [`crate::matrix_gluing`] index into
//! exactly this layout.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Edge, OrientedGraph};

/// Positional identification of a common directed subgraph of two graphs.
///
/// `vertices_1[k]` in Γ1 is identified with `vertices_2[k]` in Γ2, and
/// likewise for edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct InterfaceSpec {
    pub vertices_1: Vec<usize>,
    pub vertices_2: Vec<usize>,
    pub edges_1: Vec<usize>,
    pub edges_2: Vec<usize>,
}

impl InterfaceSpec {
    /// Interface made of identified vertices only.
    pub fn vertices(vertices_1: Vec<usize>, vertices_2: Vec<usize>) -> Self {
        InterfaceSpec {
            vertices_1,
            vertices_2,
            ..Default::default()
        }
    }

    /// Interface made of vertex pairs; the interface edges are completed
    /// from Γ1 so that the closure rule holds. Returns an error if Γ2 does
    /// not carry matching edges.
    pub fn closed_over(
        g1: &OrientedGraph,
        g2: &OrientedGraph,
        vertices_1: Vec<usize>,
        vertices_2: Vec<usize>,
    ) -> Result<Self> {
        if vertices_1.len() != vertices_2.len() {
            return Err(Error::InvalidInterface(format!(
                "{} interface vertices in Γ1 but {} in Γ2",
                vertices_1.len(),
                vertices_2.len()
            )));
        }
        let mut spec = InterfaceSpec::vertices(vertices_1, vertices_2);
        for (i, e) in g1.edges().iter().enumerate() {
            let a = spec.vertices_1.iter().position(|&v| v == e.tail);
            let b = spec.vertices_1.iter().position(|&v| v == e.head);
            if let (Some(a), Some(b)) = (a, b) {
                let (u, w) = (spec.vertices_2[a], spec.vertices_2[b]);
                let j = g2.find_edge(u, w).ok_or_else(|| {
                    Error::InvalidInterface(format!("Γ2 has no edge between {u} and {w}"))
                })?;
                spec.edges_1.push(i);
                spec.edges_2.push(j);
            }
        }
        spec.validate(g1, g2)?;
        Ok(spec)
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices_1.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges_1.len()
    }

    /// The interface as a standalone graph, labelled by interface position.
    pub fn as_graph(&self, g1: &OrientedGraph) -> Result<OrientedGraph> {
        let edges = self
            .edges_1
            .iter()
            .map(|&i| {
                let e = g1.edge(i)?;
                let a = position(&self.vertices_1, e.tail)?;
                let b = position(&self.vertices_1, e.head)?;
                Ok(Edge::new(a, b))
            })
            .collect::<Result<Vec<_>>>()?;
        OrientedGraph::new(self.n_vertices(), edges)
    }

    /// Checks lengths, ranges, uniqueness, directed isomorphism of the two
    /// interface copies and the closure rule on both sides.
    pub fn validate(&self, g1: &OrientedGraph, g2: &OrientedGraph) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidInterface(msg));
        if self.vertices_1.len() != self.vertices_2.len() {
            return bad("vertex correspondence lists differ in length".into());
        }
        if self.edges_1.len() != self.edges_2.len() {
            return bad("edge correspondence lists differ in length".into());
        }
        check_side("Γ1 vertex", &self.vertices_1, g1.n_vertices())?;
        check_side("Γ2 vertex", &self.vertices_2, g2.n_vertices())?;
        check_side("Γ1 edge", &self.edges_1, g1.n_edges())?;
        check_side("Γ2 edge", &self.edges_2, g2.n_edges())?;

        for (&i1, &i2) in self.edges_1.iter().zip(&self.edges_2) {
            let e1 = g1.edges()[i1];
            let e2 = g2.edges()[i2];
            let (a, b) = match (
                self.vertices_1.iter().position(|&v| v == e1.tail),
                self.vertices_1.iter().position(|&v| v == e1.head),
            ) {
                (Some(a), Some(b)) => (a, b),
                _ => return bad(format!("Γ1 edge {i1} leaves the interface")),
            };
            if e2.tail != self.vertices_2[a] || e2.head != self.vertices_2[b] {
                return bad(format!(
                    "Γ1 edge {i1} and Γ2 edge {i2} do not match in endpoints and orientation"
                ));
            }
        }

        for (g, verts, iface_edges, side) in [
            (g1, &self.vertices_1, &self.edges_1, "Γ1"),
            (g2, &self.vertices_2, &self.edges_2, "Γ2"),
        ] {
            let in_iface: HashSet<usize> = verts.iter().copied().collect();
            let listed: HashSet<usize> = iface_edges.iter().copied().collect();
            for (i, e) in g.edges().iter().enumerate() {
                if in_iface.contains(&e.tail) && in_iface.contains(&e.head) && !listed.contains(&i) {
                    return bad(format!(
                        "{side} edge {i} joins two interface vertices but is not an interface edge"
                    ));
                }
            }
        }
        Ok(())
    }
}

fn position(list: &[usize], v: usize) -> Result<usize> {
    list.iter()
        .position(|&x| x == v)
        .ok_or_else(|| Error::InvalidInterface(format!("vertex {v} is not in the interface")))
}

fn check_side(what: &str, indices: &[usize], limit: usize) -> Result<()> {
    let mut seen = HashSet::new();
    for &i in indices {
        if i >= limit {
            return Err(Error::InvalidInterface(format!(
                "{what} index {i} out of range (limit {limit})"
            )));
        }
        if !seen.insert(i) {
            return Err(Error::InvalidInterface(format!("{what} index {i} identified twice")));
        }
    }
    Ok(())
}

/// A bridge graph: `pairs[i] = (v1, v2)` adds an edge from `v1 ∈ Γ1` to
/// `v2 ∈ Γ2`. Each vertex takes part in at most one bridge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeSpec {
    pub pairs: Vec<(usize, usize)>,
}

impl BridgeSpec {
    pub fn new(pairs: Vec<(usize, usize)>) -> Self {
        BridgeSpec { pairs }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn validate(&self, g1: &OrientedGraph, g2: &OrientedGraph) -> Result<()> {
        self.validate_sizes(g1.n_vertices(), g2.n_vertices())
    }

    /// Validation against vertex counts only, for the matrix-level formulas.
    pub fn validate_sizes(&self, n1: usize, n2: usize) -> Result<()> {
        if self.pairs.is_empty() {
            return Err(Error::InvalidBridge("no bridge edges".into()));
        }
        let mut used_1 = HashSet::new();
        let mut used_2 = HashSet::new();
        for &(a, b) in &self.pairs {
            if a >= n1 {
                return Err(Error::InvalidBridge(format!(
                    "Γ1 vertex {a} out of range (limit {n1})"
                )));
            }
            if b >= n2 {
                return Err(Error::InvalidBridge(format!(
                    "Γ2 vertex {b} out of range (limit {n2})"
                )));
            }
            if !used_1.insert(a) {
                return Err(Error::InvalidBridge(format!("Γ1 vertex {a} used by two bridges")));
            }
            if !used_2.insert(b) {
                return Err(Error::InvalidBridge(format!("Γ2 vertex {b} used by two bridges")));
            }
        }
        Ok(())
    }

    /// χ(B) = |V(B)| - |E(B)| = 2k - k.
    pub fn euler_characteristic(&self) -> i64 {
        self.pairs.len() as i64
    }
}

/// Result of a gluing together with where each input vertex and edge went.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedGraph {
    pub graph: OrientedGraph,
    pub vmap_1: Vec<usize>,
    pub vmap_2: Vec<usize>,
    pub emap_1: Vec<usize>,
    pub emap_2: Vec<usize>,
    /// Output indices of the bridge edges (empty for interface gluing).
    pub bridge_edges: Vec<usize>,
}

/// Identifies the interface copies in Γ1 and Γ2 and unions the rest.
pub fn glue_interface(
    g1: &OrientedGraph,
    g2: &OrientedGraph,
    iface: &InterfaceSpec,
) -> Result<GluedGraph> {
    iface.validate(g1, g2)?;
    let n1 = g1.n_vertices();
    let q = iface.n_vertices();
    let r = iface.n_edges();

    const UNSET: usize = usize::MAX;
    let mut vmap_1 = vec![UNSET; n1];
    let mut vmap_2 = vec![UNSET; g2.n_vertices()];
    for (k, (&a, &b)) in iface.vertices_1.iter().zip(&iface.vertices_2).enumerate() {
        vmap_1[a] = n1 - q + k;
        vmap_2[b] = n1 - q + k;
    }
    let mut next = 0;
    for slot in vmap_1.iter_mut().filter(|s| **s == UNSET) {
        *slot = next;
        next += 1;
    }
    let mut next = n1;
    for slot in vmap_2.iter_mut().filter(|s| **s == UNSET) {
        *slot = next;
        next += 1;
    }
    let n_out = next;

    let p1 = g1.n_edges();
    let mut emap_1 = vec![UNSET; p1];
    let mut emap_2 = vec![UNSET; g2.n_edges()];
    for (k, (&a, &b)) in iface.edges_1.iter().zip(&iface.edges_2).enumerate() {
        emap_1[a] = p1 - r + k;
        emap_2[b] = p1 - r + k;
    }
    let mut edges = vec![Edge::new(0, 0); p1 + g2.n_edges() - r];
    let mut next = 0;
    for (i, e) in g1.edges().iter().enumerate() {
        if emap_1[i] == UNSET {
            emap_1[i] = next;
            next += 1;
        }
        edges[emap_1[i]] = Edge::new(vmap_1[e.tail], vmap_1[e.head]);
    }
    let mut next = p1;
    for (i, e) in g2.edges().iter().enumerate() {
        if emap_2[i] == UNSET {
            emap_2[i] = next;
            next += 1;
            edges[emap_2[i]] = Edge::new(vmap_2[e.tail], vmap_2[e.head]);
        }
    }

    Ok(GluedGraph {
        graph: OrientedGraph::new(n_out, edges)?,
        vmap_1,
        vmap_2,
        emap_1,
        emap_2,
        bridge_edges: Vec::new(),
    })
}

/// Places Γ1 and Γ2 side by side and adds one edge per bridge pair,
/// oriented from the Γ1 endpoint to the Γ2 endpoint.
pub fn glue_bridge(g1: &OrientedGraph, g2: &OrientedGraph, bridges: &BridgeSpec) -> Result<GluedGraph> {
    bridges.validate(g1, g2)?;
    let n1 = g1.n_vertices();
    let p1 = g1.n_edges();
    let k = bridges.len();

    let mut edges: Vec<Edge> = g1.edges().to_vec();
    edges.extend(bridges.pairs.iter().map(|&(a, b)| Edge::new(a, n1 + b)));
    edges.extend(g2.edges().iter().map(|e| Edge::new(e.tail + n1, e.head + n1)));

    Ok(GluedGraph {
        graph: OrientedGraph::new(n1 + g2.n_vertices(), edges)?,
        vmap_1: (0..n1).collect(),
        vmap_2: (n1..n1 + g2.n_vertices()).collect(),
        emap_1: (0..p1).collect(),
        emap_2: (p1 + k..p1 + k + g2.n_edges()).collect(),
        bridge_edges: (p1..p1 + k).collect(),
    })
}

/// Γ1, Γ2 and the interface relabelled into the layout the gluing
/// theorems assume: the interface occupies the last `q` vertices and last
/// `r` edges of Γ1 and the first `q` vertices and first `r` edges of Γ2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalInterface {
    pub g1: OrientedGraph,
    pub g2: OrientedGraph,
    pub iface: InterfaceSpec,
}

impl CanonicalInterface {
    pub fn q(&self) -> usize {
        self.iface.n_vertices()
    }

    pub fn r(&self) -> usize {
        self.iface.n_edges()
    }
}

/// Relabels an arbitrary valid interface gluing problem into canonical
/// layout. Non-interface vertices and edges keep their relative order, so
/// gluing the canonical problem yields the same graph as gluing the
/// original one.
pub fn canonical_interface_layout(
    g1: &OrientedGraph,
    g2: &OrientedGraph,
    iface: &InterfaceSpec,
) -> Result<CanonicalInterface> {
    iface.validate(g1, g2)?;
    let rest = |n: usize, taken: &[usize]| -> Vec<usize> {
        let taken: HashSet<usize> = taken.iter().copied().collect();
        (0..n).filter(|i| !taken.contains(i)).collect()
    };

    let mut v1 = rest(g1.n_vertices(), &iface.vertices_1);
    v1.extend_from_slice(&iface.vertices_1);
    let mut e1 = rest(g1.n_edges(), &iface.edges_1);
    e1.extend_from_slice(&iface.edges_1);

    let mut v2 = iface.vertices_2.clone();
    v2.extend(rest(g2.n_vertices(), &iface.vertices_2));
    let mut e2 = iface.edges_2.clone();
    e2.extend(rest(g2.n_edges(), &iface.edges_2));

    let c1 = g1.relabel(&v1, &e1)?;
    let c2 = g2.relabel(&v2, &e2)?;
    let (n1, p1) = (g1.n_vertices(), g1.n_edges());
    let (q, r) = (iface.n_vertices(), iface.n_edges());
    let spec = InterfaceSpec {
        vertices_1: (n1 - q..n1).collect(),
        vertices_2: (0..q).collect(),
        edges_1: (p1 - r..p1).collect(),
        edges_2: (0..r).collect(),
    };
    Ok(CanonicalInterface {
        g1: c1,
        g2: c2,
        iface: spec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::euler_characteristic;

    #[test]
    fn two_edges_wedge_to_a_path() {
        let p2 = OrientedGraph::path(2).unwrap();
        let g = glue_interface(&p2, &p2, &InterfaceSpec::vertices(vec![1], vec![0])).unwrap();
        assert_eq!(g.graph, OrientedGraph::path(3).unwrap());
        assert_eq!(g.vmap_1, vec![0, 1]);
        assert_eq!(g.vmap_2, vec![1, 2]);
    }

    #[test]
    fn k2_k2_at_vertex_is_p3_up_to_orientation() {
        let k2 = OrientedGraph::complete(2).unwrap();
        let g = glue_interface(&k2, &k2, &InterfaceSpec::vertices(vec![0], vec![0])).unwrap();
        assert_eq!(g.graph.n_vertices(), 3);
        assert_eq!(g.graph.n_edges(), 2);
        assert_eq!(g.vmap_1, vec![1, 0]);
        assert_eq!(g.graph.edges(), &[Edge::new(1, 0), Edge::new(1, 2)]);
    }

    #[test]
    fn triangles_along_an_edge() {
        let c3 = OrientedGraph::cycle(3).unwrap();
        // edge (0,1) is edge 0 in both copies
        let iface = InterfaceSpec {
            vertices_1: vec![0, 1],
            vertices_2: vec![0, 1],
            edges_1: vec![0],
            edges_2: vec![0],
        };
        let g = glue_interface(&c3, &c3, &iface).unwrap();
        assert_eq!(g.graph.n_vertices(), 4);
        assert_eq!(g.graph.n_edges(), 5);
        let i_chi = 2 - 1;
        assert_eq!(
            euler_characteristic(&g.graph),
            2 * euler_characteristic(&c3) - i_chi
        );
    }

    #[test]
    fn closure_rule_enforced() {
        let c3 = OrientedGraph::cycle(3).unwrap();
        let iface = InterfaceSpec::vertices(vec![0, 1], vec![0, 1]);
        assert!(matches!(
            glue_interface(&c3, &c3, &iface),
            Err(Error::InvalidInterface(_))
        ));
        let closed = InterfaceSpec::closed_over(&c3, &c3, vec![0, 1], vec![0, 1]).unwrap();
        assert_eq!(closed.edges_1, vec![0]);
    }

    #[test]
    fn orientation_mismatch_rejected() {
        let a = OrientedGraph::new(2, [(0, 1)]).unwrap();
        let b = OrientedGraph::new(2, [(1, 0)]).unwrap();
        let iface = InterfaceSpec {
            vertices_1: vec![0, 1],
            vertices_2: vec![0, 1],
            edges_1: vec![0],
            edges_2: vec![0],
        };
        assert!(glue_interface(&a, &b, &iface).is_err());
        let dup = InterfaceSpec::vertices(vec![0, 0], vec![0, 1]);
        assert!(dup.validate(&OrientedGraph::empty(2), &OrientedGraph::empty(2)).is_err());
    }

    #[test]
    fn empty_interface_is_disjoint_union() {
        let a = OrientedGraph::path(3).unwrap();
        let b = OrientedGraph::cycle(3).unwrap();
        let g = glue_interface(&a, &b, &InterfaceSpec::default()).unwrap();
        assert_eq!(g.graph, a.disjoint_union(&b));
    }

    #[test]
    fn bridges() {
        let k2 = OrientedGraph::complete(2).unwrap();
        let g = glue_bridge(&k2, &k2, &BridgeSpec::new(vec![(1, 0)])).unwrap();
        assert_eq!(g.graph, OrientedGraph::path(4).unwrap());
        assert_eq!(g.bridge_edges, vec![1]);

        let pt = OrientedGraph::empty(1);
        let g = glue_bridge(&pt, &pt, &BridgeSpec::new(vec![(0, 0)])).unwrap();
        assert_eq!(g.graph, OrientedGraph::path(2).unwrap());

        let c3 = OrientedGraph::cycle(3).unwrap();
        let g = glue_bridge(&c3, &c3, &BridgeSpec::new(vec![(0, 1), (2, 2)])).unwrap();
        assert_eq!((g.graph.n_vertices(), g.graph.n_edges()), (6, 8));
        assert_eq!(g.emap_2, vec![5, 6, 7]);

        assert!(glue_bridge(&c3, &c3, &BridgeSpec::new(vec![(0, 1), (0, 2)])).is_err());
        assert!(glue_bridge(&c3, &c3, &BridgeSpec::new(vec![(0, 1), (1, 1)])).is_err());
        assert!(glue_bridge(&c3, &c3, &BridgeSpec::new(vec![(3, 1)])).is_err());
        assert!(glue_bridge(&c3, &c3, &BridgeSpec::new(vec![])).is_err());
    }

    #[test]
    fn canonical_layout_glues_to_same_graph() {
        let g1 = OrientedGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let g2 = OrientedGraph::new(3, [(2, 0), (0, 1)]).unwrap();
        let iface = InterfaceSpec {
            vertices_1: vec![2, 0],
            vertices_2: vec![0, 2],
            edges_1: vec![4],
            edges_2: vec![0],
        };
        let direct = glue_interface(&g1, &g2, &iface).unwrap();
        let c = canonical_interface_layout(&g1, &g2, &iface).unwrap();
        let canon = glue_interface(&c.g1, &c.g2, &c.iface).unwrap();
        assert_eq!(direct.graph, canon.graph);
        assert_eq!(c.g1.edges().last(), Some(&Edge::new(3, 2)));
        assert_eq!(c.g2.edges()[0], Edge::new(1, 0));
    }
}
