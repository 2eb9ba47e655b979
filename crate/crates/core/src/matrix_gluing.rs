//! Laplacians of glued graphs assembled entrywise from the Laplacians of
//! the pieces.
//!
//! Every function here works in the canonical layout described in
//! [`crate::gluing`]. The graph-taking variants relabel their inputs with
//! [`canonical_interface_layout`] first; the matrix-taking variant for even
//! interface gluing expects already-canonical matrices.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::gluing::{canonical_interface_layout, BridgeSpec, InterfaceSpec};
use crate::graph::{Edge, OrientedGraph, ZetaCondition};
use crate::laplacian::odd_laplacian;
use crate::matrix::IntMatrix;

fn zeta_value(a: Edge, b: Edge) -> BigInt {
    BigInt::from(ZetaCondition::classify(a, b).value())
}

/// Even Laplacian of an interface gluing from the two even Laplacians.
///
/// `l1` is n×n with the q interface vertices in its last q positions; `l2`
/// has them in its first q positions, in the same order. The result is
/// (n + dim l2 - q) square. Interface diagonals add up and subtract μ, the
/// number of interface neighbours; interface off-diagonals are
/// `-l1(i,j) * l2(i',j')`.
///
/// The interface blocks of `l1` and `l2` must agree off the diagonal (both
/// describe the same interface subgraph); a disagreement is reported as an
/// invalid interface.
pub fn even_laplacian_interface_glued(l1: &IntMatrix, l2: &IntMatrix, q: usize) -> Result<IntMatrix> {
    let n = l1.require_square()?;
    let n2 = l2.require_square()?;
    if q > n || q > n2 {
        return Err(Error::DimensionMismatch(format!(
            "interface of {q} vertices does not fit matrices of size {n} and {n2}"
        )));
    }
    let first = n - q;
    let total = n + n2 - q;

    let mu: Vec<BigInt> = (first..n)
        .map(|i| {
            (first..n)
                .filter(|&j| j != i)
                .map(|j| l1[(i, j)].abs())
                .fold(BigInt::zero(), |a, x| a + x)
        })
        .collect();
    for i in first..n {
        let mu2 = (first..n)
            .filter(|&j| j != i)
            .map(|j| l2[(i - first, j - first)].abs())
            .fold(BigInt::zero(), |a, x| a + x);
        if mu2 != mu[i - first] {
            return Err(Error::InvalidInterface(format!(
                "interface vertex {} has {} interface neighbours in Γ1 but {} in Γ2",
                i - first,
                mu[i - first],
                mu2
            )));
        }
    }

    Ok(IntMatrix::from_fn(total, total, |i, j| {
        if (i < n && j < first) || (j < n && i < first) {
            l1[(i, j)].clone()
        } else if (i >= n && j >= first) || (j >= n && i >= first) {
            l2[(i - first, j - first)].clone()
        } else if i == j {
            // here first <= i < n
            &l1[(i, i)] + &l2[(i - first, i - first)] - &mu[i - first]
        } else if i < n && j < n {
            -(&l1[(i, j)] * &l2[(i - first, j - first)])
        } else {
            BigInt::zero()
        }
    }))
}

/// Edges of the glued graph in canonical layout, rebuilt from the canonical
/// pieces without going through [`crate::gluing::glue_interface`].
fn canonical_glued_edges(g1: &OrientedGraph, g2: &OrientedGraph, q: usize, r: usize) -> Vec<Edge> {
    let shift = g1.n_vertices() - q;
    let mut edges = g1.edges().to_vec();
    edges.extend(
        g2.edges()[r..]
            .iter()
            .map(|e| Edge::new(e.tail + shift, e.head + shift)),
    );
    edges
}

/// Odd Laplacian of an interface gluing: Γ1's block, Γ2's block (they
/// overlap on the r interface edges) and ζ values across.
///
/// The output is indexed by the canonical edge layout, which coincides with
/// the edge order produced by [`crate::gluing::glue_interface`].
pub fn odd_laplacian_interface_glued(
    g1: &OrientedGraph,
    g2: &OrientedGraph,
    iface: &InterfaceSpec,
) -> Result<IntMatrix> {
    let c = canonical_interface_layout(g1, g2, iface)?;
    let (q, r) = (c.q(), c.r());
    let l1 = odd_laplacian(&c.g1);
    let l2 = odd_laplacian(&c.g2);
    let p = c.g1.n_edges();
    let edges = canonical_glued_edges(&c.g1, &c.g2, q, r);
    let t = edges.len();
    let start2 = p - r;

    Ok(IntMatrix::from_fn(t, t, |i, j| {
        if i < p && j < p {
            l1[(i, j)].clone()
        } else if i >= start2 && j >= start2 {
            l2[(i - start2, j - start2)].clone()
        } else {
            zeta_value(edges[i], edges[j])
        }
    }))
}

/// The coupling block Q of a vertex-only interface gluing:
/// `Q(i, j) = ζ(e_{p+i}, e_j)` for Γ2 edge i and Γ1 edge j.
pub fn odd_interface_coupling(
    g1: &OrientedGraph,
    g2: &OrientedGraph,
    iface: &InterfaceSpec,
) -> Result<IntMatrix> {
    if iface.n_edges() != 0 {
        return Err(Error::InvalidInterface(
            "coupling block form needs an interface without edges".into(),
        ));
    }
    let c = canonical_interface_layout(g1, g2, iface)?;
    let edges = canonical_glued_edges(&c.g1, &c.g2, c.q(), 0);
    let p = c.g1.n_edges();
    Ok(IntMatrix::from_fn(c.g2.n_edges(), p, |i, j| {
        zeta_value(edges[p + i], edges[j])
    }))
}

/// Assembles `[[a, qᵗ], [q, b]]`.
pub fn block_symmetric(a: &IntMatrix, b: &IntMatrix, q: &IntMatrix) -> Result<IntMatrix> {
    let na = a.require_square()?;
    let nb = b.require_square()?;
    if q.rows() != nb || q.cols() != na {
        return Err(Error::DimensionMismatch(format!(
            "coupling block is {}x{}, expected {nb}x{na}",
            q.rows(),
            q.cols()
        )));
    }
    Ok(IntMatrix::from_fn(na + nb, na + nb, |i, j| match (i < na, j < na) {
        (true, true) => a[(i, j)].clone(),
        (false, false) => b[(i - na, j - na)].clone(),
        (false, true) => q[(i - na, j)].clone(),
        (true, false) => q[(j - na, i)].clone(),
    }))
}

/// Odd Laplacian of a vertex-only interface gluing in block form
/// `[[Δ⁻(Γ1), Qᵗ], [Q, Δ⁻(Γ2)]]`.
pub fn odd_laplacian_vertex_interface_glued(
    g1: &OrientedGraph,
    g2: &OrientedGraph,
    iface: &InterfaceSpec,
) -> Result<IntMatrix> {
    let q = odd_interface_coupling(g1, g2, iface)?;
    let c = canonical_interface_layout(g1, g2, iface)?;
    block_symmetric(&odd_laplacian(&c.g1), &odd_laplacian(&c.g2), &q)
}

/// Even Laplacian of a bridge gluing: bridge endpoints gain one on the
/// diagonal and each bridge contributes -1 across the two blocks.
pub fn even_laplacian_bridge_glued(
    l1: &IntMatrix,
    l2: &IntMatrix,
    bridges: &BridgeSpec,
) -> Result<IntMatrix> {
    let n = l1.require_square()?;
    let n2 = l2.require_square()?;
    bridges.validate_sizes(n, n2)?;
    let total = n + n2;
    let mut in_bridge = vec![false; total];
    let mut partner = vec![usize::MAX; total];
    for &(a, b) in &bridges.pairs {
        in_bridge[a] = true;
        in_bridge[n + b] = true;
        partner[a] = n + b;
        partner[n + b] = a;
    }
    Ok(IntMatrix::from_fn(total, total, |i, j| {
        let bump = |x: &BigInt| if in_bridge[i] { x + 1 } else { x.clone() };
        match (i < n, j < n) {
            (true, true) if i == j => bump(&l1[(i, i)]),
            (true, true) => l1[(i, j)].clone(),
            (false, false) if i == j => bump(&l2[(i - n, i - n)]),
            (false, false) => l2[(i - n, j - n)].clone(),
            _ if partner[i] == j => BigInt::from(-1),
            _ => BigInt::zero(),
        }
    }))
}

/// Odd Laplacian of a bridge gluing with edges ordered Γ1, bridges, Γ2.
pub fn odd_laplacian_bridge_glued(
    g1: &OrientedGraph,
    g2: &OrientedGraph,
    bridges: &BridgeSpec,
) -> Result<IntMatrix> {
    bridges.validate(g1, g2)?;
    let l1 = odd_laplacian(g1);
    let l2 = odd_laplacian(g2);
    let n1 = g1.n_vertices();
    let p = g1.n_edges();
    let k = bridges.len();

    let mut edges = g1.edges().to_vec();
    edges.extend(bridges.pairs.iter().map(|&(a, b)| Edge::new(a, n1 + b)));
    edges.extend(g2.edges().iter().map(|e| Edge::new(e.tail + n1, e.head + n1)));
    let t = edges.len();
    let is_bridge = |i: usize| (p..p + k).contains(&i);

    Ok(IntMatrix::from_fn(t, t, |i, j| {
        if i < p && j < p {
            l1[(i, j)].clone()
        } else if i >= p + k && j >= p + k {
            l2[(i - p - k, j - p - k)].clone()
        } else if (i < p && j >= p + k) || (j < p && i >= p + k) {
            BigInt::zero()
        } else if is_bridge(i) && is_bridge(j) {
            if i == j {
                BigInt::from(2)
            } else {
                BigInt::zero()
            }
        } else {
            zeta_value(edges[i], edges[j])
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gluing::{glue_bridge, glue_interface};
    use crate::laplacian::even_laplacian;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn two_k2_at_a_vertex_give_p3() {
        let l = even_laplacian(&OrientedGraph::complete(2).unwrap());
        let glued = even_laplacian_interface_glued(&l, &l, 1).unwrap();
        assert_eq!(glued, m(&[vec![1, -1, 0], vec![-1, 2, -1], vec![0, -1, 1]]));
    }

    #[test]
    fn empty_interface_is_block_diagonal() {
        let a = even_laplacian(&OrientedGraph::path(3).unwrap());
        let b = even_laplacian(&OrientedGraph::complete(2).unwrap());
        let glued = even_laplacian_interface_glued(&a, &b, 0).unwrap();
        let zero = IntMatrix::zeros(2, 3);
        assert_eq!(glued, block_symmetric(&a, &b, &zero).unwrap());
    }

    #[test]
    fn triangles_along_an_edge() {
        let c3 = OrientedGraph::cycle(3).unwrap();
        // canonical: interface is the last two vertices of the first copy and
        // the first two of the second; edge (1,2) in the first, (0,1) in the second.
        let iface = InterfaceSpec {
            vertices_1: vec![1, 2],
            vertices_2: vec![0, 1],
            edges_1: vec![1],
            edges_2: vec![0],
        };
        let l = even_laplacian(&c3);
        let glued = even_laplacian_interface_glued(&l, &l, 2).unwrap();
        let diag: Vec<i64> = (0..4).map(|i| i64::try_from(&glued[(i, i)]).unwrap()).collect();
        assert_eq!(diag, vec![2, 3, 3, 2]);
        let direct = glue_interface(&c3, &c3, &iface).unwrap();
        assert_eq!(glued, even_laplacian(&direct.graph));

        let odd = odd_laplacian_interface_glued(&c3, &c3, &iface).unwrap();
        assert_eq!((odd.rows(), odd.cols()), (5, 5));
        assert_eq!(odd, odd_laplacian(&direct.graph));
    }

    #[test]
    fn mismatched_interface_blocks_rejected() {
        let a = even_laplacian(&OrientedGraph::path(2).unwrap());
        let b = even_laplacian(&OrientedGraph::empty(2));
        assert!(matches!(
            even_laplacian_interface_glued(&a, &b, 2),
            Err(Error::InvalidInterface(_))
        ));
        assert!(matches!(
            even_laplacian_interface_glued(&a, &b, 3),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn single_edges_sharing_a_vertex() {
        let p2 = OrientedGraph::path(2).unwrap();
        // head of the first edge is identified with the head of the second
        let iface = InterfaceSpec::vertices(vec![1], vec![1]);
        let glued = odd_laplacian_interface_glued(&p2, &p2, &iface).unwrap();
        assert_eq!(glued, m(&[vec![2, 1], vec![1, 2]]));
        let blocks = odd_laplacian_vertex_interface_glued(&p2, &p2, &iface).unwrap();
        assert_eq!(blocks, glued);
        let q = odd_interface_coupling(&p2, &p2, &iface).unwrap();
        assert_eq!(q, m(&[vec![1]]));

        let iface = InterfaceSpec::vertices(vec![1], vec![0]);
        let glued = odd_laplacian_interface_glued(&p2, &p2, &iface).unwrap();
        assert_eq!(glued, m(&[vec![2, -1], vec![-1, 2]]));
    }

    #[test]
    fn vertex_free_interface_is_block_diagonal_odd() {
        let a = OrientedGraph::cycle(3).unwrap();
        let b = OrientedGraph::path(3).unwrap();
        let glued = odd_laplacian_interface_glued(&a, &b, &InterfaceSpec::default()).unwrap();
        let zero = IntMatrix::zeros(2, 3);
        assert_eq!(
            glued,
            block_symmetric(&odd_laplacian(&a), &odd_laplacian(&b), &zero).unwrap()
        );
    }

    #[test]
    fn bridge_even_examples() {
        let k2 = OrientedGraph::complete(2).unwrap();
        let l = even_laplacian(&k2);
        let b = BridgeSpec::new(vec![(1, 0)]);
        assert_eq!(
            even_laplacian_bridge_glued(&l, &l, &b).unwrap(),
            even_laplacian(&OrientedGraph::path(4).unwrap())
        );

        let pt = IntMatrix::zeros(1, 1);
        assert_eq!(
            even_laplacian_bridge_glued(&pt, &pt, &BridgeSpec::new(vec![(0, 0)])).unwrap(),
            m(&[vec![1, -1], vec![-1, 1]])
        );

        let k3 = OrientedGraph::complete(3).unwrap();
        let l3 = even_laplacian(&k3);
        let b = BridgeSpec::new(vec![(2, 0)]);
        let glued = even_laplacian_bridge_glued(&l3, &l3, &b).unwrap();
        let diag: Vec<i64> = (0..6).map(|i| i64::try_from(&glued[(i, i)]).unwrap()).collect();
        assert_eq!(diag, vec![2, 2, 3, 3, 2, 2]);
        assert_eq!(glued, even_laplacian(&glue_bridge(&k3, &k3, &b).unwrap().graph));
        assert!(even_laplacian_bridge_glued(&l3, &l3, &BridgeSpec::new(vec![(3, 0)])).is_err());
    }

    #[test]
    fn bridge_odd_examples() {
        let p2 = OrientedGraph::path(2).unwrap();
        let b = BridgeSpec::new(vec![(1, 0)]);
        let glued = odd_laplacian_bridge_glued(&p2, &p2, &b).unwrap();
        assert_eq!(glued, odd_laplacian(&OrientedGraph::path(4).unwrap()));
        assert_eq!(glued, m(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]));

        let c3 = OrientedGraph::cycle(3).unwrap();
        let b = BridgeSpec::new(vec![(0, 1), (2, 2)]);
        let glued = odd_laplacian_bridge_glued(&c3, &c3, &b).unwrap();
        assert_eq!(glued[(3, 4)], BigInt::zero());
        assert_eq!(glued, odd_laplacian(&glue_bridge(&c3, &c3, &b).unwrap().graph));

        // the single bridge at Γ2 vertex 0 misses Γ2's edge (1,2)
        let g2 = OrientedGraph::new(3, [(1, 2)]).unwrap();
        let glued = odd_laplacian_bridge_glued(&p2, &g2, &BridgeSpec::new(vec![(0, 0)])).unwrap();
        assert_eq!(glued[(1, 2)], BigInt::zero());
    }
}
