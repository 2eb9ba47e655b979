//! Incidence, adjacency, even and odd Laplacians of an oriented graph.
//!
//! With `I` the |V|×|E| incidence matrix, the even Laplacian is `I Iᵗ`
//! (vertex indexed, orientation independent) and the odd Laplacian is
//! `Iᵗ I` (edge indexed, orientation dependent entrywise).

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, ZetaCondition};
use crate::matrix::IntMatrix;

/// Entry (i, j) is +1 if edge j ends at vertex i, -1 if it starts there.
pub fn incidence_matrix(g: &OrientedGraph) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.n_vertices(), g.n_edges());
    for (j, e) in g.edges().iter().enumerate() {
        m[(e.tail, j)] = BigInt::from(-1);
        m[(e.head, j)] = BigInt::from(1);
    }
    m
}

pub fn adjacency_matrix(g: &OrientedGraph) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.n_vertices(), g.n_vertices());
    for e in g.edges() {
        m[(e.tail, e.head)] = BigInt::from(1);
        m[(e.head, e.tail)] = BigInt::from(1);
    }
    m
}

/// Valence on the diagonal, -1 between adjacent vertices.
pub fn even_laplacian(g: &OrientedGraph) -> IntMatrix {
    let mut m = IntMatrix::zeros(g.n_vertices(), g.n_vertices());
    for e in g.edges() {
        m[(e.tail, e.head)] = BigInt::from(-1);
        m[(e.head, e.tail)] = BigInt::from(-1);
        m[(e.tail, e.tail)] += 1;
        m[(e.head, e.head)] += 1;
    }
    m
}

/// 2 on the diagonal, the ζ value of the edge pair off it.
pub fn odd_laplacian(g: &OrientedGraph) -> IntMatrix {
    let edges = g.edges();
    IntMatrix::from_fn(edges.len(), edges.len(), |i, j| {
        if i == j {
            BigInt::from(2)
        } else {
            BigInt::from(ZetaCondition::classify(edges[i], edges[j]).value())
        }
    })
}

/// `I Iᵗ`, the product form of the even Laplacian.
pub fn even_laplacian_product(g: &OrientedGraph) -> IntMatrix {
    let inc = incidence_matrix(g);
    inc.mul(&inc.transpose()).expect("conformable")
}

/// `Iᵗ I`, the product form of the odd Laplacian.
pub fn odd_laplacian_product(g: &OrientedGraph) -> IntMatrix {
    let inc = incidence_matrix(g);
    inc.transpose().mul(&inc).expect("conformable")
}

/// Odd Laplacian after reversing the edges in `flipped`: entries with
/// exactly one index in the set change sign.
pub fn flip_odd_laplacian(lminus: &IntMatrix, flipped: &[usize]) -> Result<IntMatrix> {
    let n = lminus.require_square()?;
    let mut mask = vec![false; n];
    for &i in flipped {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, limit: n });
        }
        mask[i] = true;
    }
    Ok(IntMatrix::from_fn(n, n, |i, j| {
        let x = lminus[(i, j)].clone();
        if mask[i] != mask[j] {
            -x
        } else {
            x
        }
    }))
}

/// Sum of each row; zero for every even Laplacian.
pub fn row_sums(m: &IntMatrix) -> Vec<BigInt> {
    (0..m.rows())
        .map(|i| m.row(i).iter().fold(BigInt::zero(), |a, x| a + x))
        .collect()
}
