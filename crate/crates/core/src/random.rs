//! Seeded random graphs and gluing instances.
//!
//! Every generator takes the RNG explicitly; [`rng`] builds the ChaCha
//! stream used throughout so that a seed pins an instance across platforms.

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gluing::{BridgeSpec, InterfaceSpec};
use crate::graph::{Edge, OrientedGraph};
use crate::quantum::WaveFunction;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn oriented(rng: &mut impl Rng, u: usize, v: usize) -> Edge {
    if rng.gen_bool(0.5) {
        Edge::new(u, v)
    } else {
        Edge::new(v, u)
    }
}

fn build(n: usize, edges: Vec<Edge>) -> OrientedGraph {
    OrientedGraph::new(n, edges).expect("generators emit simple graphs")
}

/// G(n, p) with random orientations and a shuffled edge order.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> OrientedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push(oriented(rng, u, v));
            }
        }
    }
    edges.shuffle(rng);
    build(n, edges)
}

/// A random spanning tree plus G(n, p) extra edges; always connected.
pub fn random_connected_graph(rng: &mut impl Rng, n: usize, p: f64) -> OrientedGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut present = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    for k in 1..n {
        let (u, v) = (order[k], order[rng.gen_range(0..k)]);
        present[u][v] = true;
        present[v][u] = true;
        edges.push(oriented(rng, u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present[u][v] && rng.gen_bool(p) {
                edges.push(oriented(rng, u, v));
            }
        }
    }
    edges.shuffle(rng);
    build(n, edges)
}

/// Random subset of `0..m`, each index kept with probability 1/2.
pub fn random_flips(rng: &mut impl Rng, m: usize) -> Vec<usize> {
    (0..m).filter(|_| rng.gen_bool(0.5)).collect()
}

pub fn random_wave(rng: &mut impl Rng, n: usize) -> WaveFunction {
    WaveFunction::new(
        (0..n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterfaceInstance {
    pub g1: OrientedGraph,
    pub g2: OrientedGraph,
    pub iface: InterfaceSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeInstance {
    pub g1: OrientedGraph,
    pub g2: OrientedGraph,
    pub bridges: BridgeSpec,
}

/// A side containing the interface graph on its first `q` vertices, with
/// `extra` further vertices. Edges between two interface vertices are
/// exactly the interface edges, so the closure rule holds. Returns the
/// relabelled graph plus where the interface vertices and edges ended up.
fn side_with_interface(
    rng: &mut impl Rng,
    interface: &[Edge],
    q: usize,
    extra: usize,
    p: f64,
) -> (OrientedGraph, Vec<usize>, Vec<usize>) {
    let n = q + extra;
    let mut edges: Vec<Edge> = interface.to_vec();
    for u in 0..n {
        for v in (u + 1).max(q)..n {
            if rng.gen_bool(p) {
                edges.push(oriented(rng, u, v));
            }
        }
    }
    let mut vperm: Vec<usize> = (0..n).collect();
    vperm.shuffle(rng);
    let mut eperm: Vec<usize> = (0..edges.len()).collect();
    eperm.shuffle(rng);
    // vperm[old] = new vertex label, eperm[old] = new edge position
    let mut placed = vec![Edge::new(0, 0); edges.len()];
    for (old, e) in edges.iter().enumerate() {
        placed[eperm[old]] = Edge::new(vperm[e.tail], vperm[e.head]);
    }
    let g = build(n, placed);
    (g, vperm[..q].to_vec(), eperm[..interface.len()].to_vec())
}

/// Two graphs sharing a common oriented subgraph on `q` vertices, with
/// shuffled labels on both sides. `q` may be zero; `p_interface = 0` gives
/// a vertex-only interface.
pub fn random_interface_instance(
    rng: &mut impl Rng,
    q: usize,
    extra_max: usize,
    p_interface: f64,
    p: f64,
) -> InterfaceInstance {
    let mut interface = Vec::new();
    for u in 0..q {
        for v in u + 1..q {
            if rng.gen_bool(p_interface) {
                interface.push(oriented(rng, u, v));
            }
        }
    }
    let extra1 = rng.gen_range(0..=extra_max);
    let extra2 = rng.gen_range(0..=extra_max);
    let (g1, vertices_1, edges_1) = side_with_interface(rng, &interface, q, extra1, p);
    let (g2, vertices_2, edges_2) = side_with_interface(rng, &interface, q, extra2, p);
    InterfaceInstance {
        g1,
        g2,
        iface: InterfaceSpec {
            vertices_1,
            vertices_2,
            edges_1,
            edges_2,
        },
    }
}

/// Two random graphs on `k..=n_max` vertices each joined by `k` bridges.
pub fn random_bridge_instance(rng: &mut impl Rng, n_max: usize, k: usize, p: f64) -> BridgeInstance {
    let n1 = rng.gen_range(k.max(1)..=n_max.max(k).max(1));
    let n2 = rng.gen_range(k.max(1)..=n_max.max(k).max(1));
    let g1 = random_graph(rng, n1, p);
    let g2 = random_graph(rng, n2, p);
    let mut a: Vec<usize> = (0..n1).collect();
    let mut b: Vec<usize> = (0..n2).collect();
    a.shuffle(rng);
    b.shuffle(rng);
    BridgeInstance {
        g1,
        g2,
        bridges: BridgeSpec::new(a.into_iter().zip(b).take(k).collect()),
    }
}

/// A graph and two distinct non-adjacent vertices, if the graph has any.
pub fn random_edge_addition(rng: &mut impl Rng, n: usize, p: f64) -> Option<(OrientedGraph, usize, usize)> {
    let g = random_graph(rng, n, p);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.are_adjacent(u, v))
        .collect();
    pairs.shuffle(rng);
    let (u, v) = pairs.pop()?;
    Some(if rng.gen_bool(0.5) { (g, u, v) } else { (g, v, u) })
}
