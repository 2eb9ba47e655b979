//! Characteristic polynomials of glued graphs from data of the pieces.
//!
//! All polynomials are even-Laplacian characteristic polynomials
//! `det(Δ⁺ - λI)`. The formulas are rank-one determinant expansions and hold
//! exactly over ℤ:
//!
//! * one shared vertex: `p1·p2v + p1v·p2 + λ·p1v·p2v`
//! * one new edge (v1, v2): `p + p(v1) + p(v2) - 2(-1)^{v1+v2} det((Δ-λI)_{(v1,v2)})`
//! * one bridge: `p1·p2 + p1·p2v + p1v·p2`
//!
//! where `pXv` is the characteristic polynomial of the Laplacian with the
//! glued vertex's row and column removed.

use crate::charpoly::{charpoly, minor_charpoly, offdiag_minor_det};
use crate::error::{Error, Result};
use crate::gluing::{glue_bridge, BridgeSpec};
use crate::graph::{euler_characteristic, OrientedGraph};
use crate::laplacian::{even_laplacian, odd_laplacian};
use crate::matrix::IntMatrix;
use crate::poly::IntPoly;
use num_bigint::BigInt;

/// How independent summands of a gluing formula are evaluated. Both modes
/// give bit-identical polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    fn join<A, B, RA, RB>(self, a: A, b: B) -> (RA, RB)
    where
        A: FnOnce() -> RA + Send,
        B: FnOnce() -> RB + Send,
        RA: Send,
        RB: Send,
    {
        match self {
            Execution::Sequential => (a(), b()),
            Execution::Parallel => rayon::join(a, b),
        }
    }
}

/// Gluing two graphs at a single vertex.
pub fn vertex_interface_charpoly(p1: &IntPoly, p1v: &IntPoly, p2: &IntPoly, p2v: &IntPoly) -> IntPoly {
    vertex_interface_charpoly_with(p1, p1v, p2, p2v, Execution::Sequential)
}

pub fn vertex_interface_charpoly_with(
    p1: &IntPoly,
    p1v: &IntPoly,
    p2: &IntPoly,
    p2v: &IntPoly,
    exec: Execution,
) -> IntPoly {
    let ((a, b), c) = exec.join(
        || exec.join(|| p1 * p2v, || p1v * p2),
        || IntPoly::lambda() * (p1v * p2v),
    );
    a + b + c
}

/// Joining two graphs by one bridge edge.
pub fn bridge_charpoly(p1: &IntPoly, p1v: &IntPoly, p2: &IntPoly, p2v: &IntPoly) -> IntPoly {
    bridge_charpoly_with(p1, p1v, p2, p2v, Execution::Sequential)
}

pub fn bridge_charpoly_with(
    p1: &IntPoly,
    p1v: &IntPoly,
    p2: &IntPoly,
    p2v: &IntPoly,
    exec: Execution,
) -> IntPoly {
    let ((a, b), c) = exec.join(|| exec.join(|| p1 * p2, || p1 * p2v), || p1v * p2);
    a + b + c
}

/// The three correction terms of an edge insertion into a Laplacian,
/// added to the current characteristic polynomial `p`.
fn edge_insertion_update(
    p: &IntPoly,
    l: &IntMatrix,
    v1: usize,
    v2: usize,
    exec: Execution,
) -> Result<IntPoly> {
    let n = l.require_square()?;
    for v in [v1, v2] {
        if v >= n {
            return Err(Error::IndexOutOfRange { index: v, limit: n });
        }
    }
    if v1 == v2 {
        return Err(Error::SameIndex(v1));
    }
    if l[(v1, v2)] != BigInt::from(0) {
        return Err(Error::VerticesAdjacent(v1, v2));
    }
    let ((m1, m2), off) = exec.join(
        || exec.join(|| minor_charpoly(l, v1), || minor_charpoly(l, v2)),
        || offdiag_minor_det(l, v1, v2),
    );
    // -2 (-1)^{v1+v2}; the parity is unchanged by a shift to 1-based labels
    let sign = if (v1 + v2) % 2 == 0 { -2 } else { 2 };
    Ok(p + &m1? + m2? + off?.scale(&BigInt::from(sign)))
}

/// Characteristic polynomial of the even Laplacian `l` after inserting the
/// edge (v1, v2) between two non-adjacent vertices.
pub fn add_edge_charpoly(l: &IntMatrix, v1: usize, v2: usize) -> Result<IntPoly> {
    add_edge_charpoly_with(l, v1, v2, Execution::Sequential)
}

pub fn add_edge_charpoly_with(l: &IntMatrix, v1: usize, v2: usize, exec: Execution) -> Result<IntPoly> {
    let p = charpoly(l)?;
    edge_insertion_update(&p, l, v1, v2, exec)
}

/// Characteristic polynomial of `Γ1 ⊔_B Γ2` for k ≥ 1 bridges: the first
/// bridge by the single-bridge formula, the remaining ones as successive
/// edge insertions into the growing glued graph. Bridge endpoints are
/// addressed in the glued layout (Γ1 vertices, then Γ2 vertices).
pub fn multi_bridge_charpoly(g1: &OrientedGraph, g2: &OrientedGraph, bridges: &BridgeSpec) -> Result<IntPoly> {
    multi_bridge_charpoly_with(g1, g2, bridges, Execution::default())
}

pub fn multi_bridge_charpoly_with(
    g1: &OrientedGraph,
    g2: &OrientedGraph,
    bridges: &BridgeSpec,
    exec: Execution,
) -> Result<IntPoly> {
    bridges.validate(g1, g2)?;
    let (a, b) = bridges.pairs[0];
    let l1 = even_laplacian(g1);
    let l2 = even_laplacian(g2);
    let ((p1, p1v), (p2, p2v)) = exec.join(
        || exec.join(|| charpoly(&l1), || minor_charpoly(&l1, a)),
        || exec.join(|| charpoly(&l2), || minor_charpoly(&l2, b)),
    );
    let mut p = bridge_charpoly_with(&p1?, &p1v?, &p2?, &p2v?, exec);

    let mut glued = glue_bridge(g1, g2, &BridgeSpec::new(vec![(a, b)]))?.graph;
    let n1 = g1.n_vertices();
    for &(a, b) in &bridges.pairs[1..] {
        let (v1, v2) = (a, n1 + b);
        let l = even_laplacian(&glued);
        p = edge_insertion_update(&p, &l, v1, v2, exec)?;
        glued = glued.with_edge((v1, v2))?;
    }
    Ok(p)
}

/// `p⁺ / p⁻ = (-λ)^χ`, verified by exact polynomial division.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerRatio {
    /// χ = |V| - |E|.
    pub exponent: i64,
    pub even: IntPoly,
    pub odd: IntPoly,
}

/// Divides the even by the odd characteristic polynomial (or the reverse
/// when χ < 0) and checks that the quotient is exactly `(-λ)^{|χ|}` with no
/// remainder.
pub fn euler_ratio(g: &OrientedGraph) -> Result<EulerRatio> {
    let even = charpoly(&even_laplacian(g))?;
    let odd = charpoly(&odd_laplacian(g))?;
    let chi = euler_characteristic(g);
    let (num, den) = if chi >= 0 { (&even, &odd) } else { (&odd, &even) };
    let want = IntPoly::neg_lambda_pow(chi.unsigned_abs() as usize);
    let quotient = num.div_exact(den)?;
    if quotient != want {
        return Err(Error::InexactDivision(format!(
            "quotient {quotient} differs from (-λ)^{}",
            chi.unsigned_abs()
        )));
    }
    Ok(EulerRatio {
        exponent: chi,
        even,
        odd,
    })
}
