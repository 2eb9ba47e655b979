//! Closed-form characteristic polynomials of complete and cycle graphs and
//! of complete graphs glued at a vertex or by one bridge. These serve as
//! oracles for the general machinery.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

fn check(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::TooSmall { what, min, got: n })
    } else {
        Ok(())
    }
}

fn sign(k: usize) -> IntPoly {
    IntPoly::constant(if k % 2 == 0 { 1 } else { -1 })
}

fn lin(root: usize) -> IntPoly {
    IntPoly::linear_factor(root as i64)
}

/// `(-1)^n λ (λ - n)^{n-1}`.
pub fn complete_charpoly(n: usize) -> Result<IntPoly> {
    check("complete graph", n, 2)?;
    Ok(sign(n) * IntPoly::lambda() * lin(n).pow(n as u32 - 1))
}

/// `(-1)^{n-1} (λ - 1)(λ - n)^{n-2}`: K_n's Laplacian with one vertex removed.
pub fn complete_minor_charpoly(n: usize) -> Result<IntPoly> {
    check("complete graph", n, 2)?;
    Ok(sign(n - 1) * lin(1) * lin(n).pow(n as u32 - 2))
}

/// `λ³ - (m+n+2)λ² + (1+(m+1)(n+1))λ - (m+n)`.
pub fn q_poly(m: usize, n: usize) -> Result<IntPoly> {
    check("complete graph", m, 2)?;
    check("complete graph", n, 2)?;
    let (m, n) = (m as i64, n as i64);
    Ok(IntPoly::from_i64(&[-(m + n), 1 + (m + 1) * (n + 1), -(m + n + 2), 1]))
}

/// K_m and K_n glued at one vertex:
/// `(-1)^{m+n-1} λ (λ-m)^{m-2} (λ-n)^{n-2} (λ-1)(λ-(m+n-1))`.
pub fn complete_interface_glue_charpoly(m: usize, n: usize) -> Result<IntPoly> {
    check("complete graph", m, 2)?;
    check("complete graph", n, 2)?;
    Ok(sign(m + n - 1)
        * IntPoly::lambda()
        * lin(m).pow(m as u32 - 2)
        * lin(n).pow(n as u32 - 2)
        * lin(1)
        * lin(m + n - 1))
}

/// K_m and K_n joined by one bridge:
/// `(-1)^{m+n} λ (λ-m)^{m-2} (λ-n)^{n-2} q_{m,n}(λ)`.
pub fn complete_bridge_glue_charpoly(m: usize, n: usize) -> Result<IntPoly> {
    Ok(sign(m + n)
        * IntPoly::lambda()
        * lin(m).pow(m as u32 - 2)
        * lin(n).pow(n as u32 - 2)
        * q_poly(m, n)?)
}

/// `∏_{j=0}^{n-1} (2[1 - cos(2πj/n)] - λ)`.
pub fn cycle_charpoly_eval(n: usize, lambda: f64) -> Result<f64> {
    check("cycle graph", n, 3)?;
    Ok((0..n)
        .map(|j| 2.0 * (1.0 - (2.0 * PI * j as f64 / n as f64).cos()) - lambda)
        .product())
}

/// `∏_{j=1}^{n-1} (2[1 - cos(πj/n)] - λ)`: C_n's Laplacian with one vertex
/// removed.
pub fn cycle_minor_charpoly_eval(n: usize, lambda: f64) -> Result<f64> {
    check("cycle graph", n, 3)?;
    Ok((1..n)
        .map(|j| 2.0 * (1.0 - (PI * j as f64 / n as f64).cos()) - lambda)
        .product())
}

/// C_m and C_n glued at one vertex, evaluated from the trigonometric
/// products through the vertex-gluing template.
pub fn cycle_interface_glue_eval(m: usize, n: usize, lambda: f64) -> Result<f64> {
    let (p1, p1v) = (cycle_charpoly_eval(m, lambda)?, cycle_minor_charpoly_eval(m, lambda)?);
    let (p2, p2v) = (cycle_charpoly_eval(n, lambda)?, cycle_minor_charpoly_eval(n, lambda)?);
    Ok(p1 * p2v + p1v * p2 + lambda * p1v * p2v)
}

/// C_m and C_n joined by one bridge, through the bridge template.
pub fn cycle_bridge_glue_eval(m: usize, n: usize, lambda: f64) -> Result<f64> {
    let (p1, p1v) = (cycle_charpoly_eval(m, lambda)?, cycle_minor_charpoly_eval(m, lambda)?);
    let (p2, p2v) = (cycle_charpoly_eval(n, lambda)?, cycle_minor_charpoly_eval(n, lambda)?);
    Ok(p1 * p2 + p1 * p2v + p1v * p2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::{charpoly, minor_charpoly};
    use crate::gluing::{glue_bridge, glue_interface, BridgeSpec, InterfaceSpec};
    use crate::graph::OrientedGraph;
    use crate::laplacian::even_laplacian;

    #[test]
    fn expansions() {
        assert_eq!(complete_charpoly(3).unwrap(), IntPoly::from_i64(&[0, -9, 6, -1]));
        assert_eq!(q_poly(2, 2).unwrap(), IntPoly::from_i64(&[-4, 10, -6, 1]));
        assert_eq!(
            complete_interface_glue_charpoly(2, 2).unwrap(),
            IntPoly::from_i64(&[0, -3, 4, -1])
        );
        assert_eq!(
            complete_bridge_glue_charpoly(2, 2).unwrap(),
            IntPoly::from_i64(&[0, -4, 10, -6, 1])
        );
        assert!(complete_charpoly(1).is_err());
        assert!(q_poly(1, 3).is_err());
    }

    #[test]
    fn q_factors_when_sizes_match() {
        for n in 2..=6 {
            let want = IntPoly::linear_factor(n as i64) * IntPoly::from_i64(&[2, -(n as i64 + 2), 1]);
            assert_eq!(q_poly(n, n).unwrap(), want);
        }
    }

    #[test]
    fn small_closed_forms_match_direct() {
        for m in 2..=4 {
            for n in 2..=4 {
                let km = OrientedGraph::complete(m).unwrap();
                let kn = OrientedGraph::complete(n).unwrap();
                let iface = InterfaceSpec::vertices(vec![m - 1], vec![0]);
                let g = glue_interface(&km, &kn, &iface).unwrap().graph;
                assert_eq!(
                    charpoly(&even_laplacian(&g)).unwrap(),
                    complete_interface_glue_charpoly(m, n).unwrap()
                );
                let g = glue_bridge(&km, &kn, &BridgeSpec::new(vec![(m - 1, 0)])).unwrap().graph;
                assert_eq!(
                    charpoly(&even_laplacian(&g)).unwrap(),
                    complete_bridge_glue_charpoly(m, n).unwrap()
                );
            }
        }
    }

    #[test]
    fn cycle_products() {
        assert!(cycle_charpoly_eval(3, 0.0).unwrap().abs() < 1e-12);
        assert!(cycle_charpoly_eval(4, 2.0).unwrap().abs() < 1e-12);
        assert!(cycle_charpoly_eval(2, 0.0).is_err());
        for n in 3..=8 {
            let l = even_laplacian(&OrientedGraph::cycle(n).unwrap());
            let p = charpoly(&l).unwrap();
            let pv = minor_charpoly(&l, 0).unwrap();
            for x in [-1.3, 0.25, 1.7, 3.9] {
                let exact = p.eval_f64(x);
                assert!((cycle_charpoly_eval(n, x).unwrap() - exact).abs() <= 1e-8 * (1.0 + exact.abs()));
                let exact = pv.eval_f64(x);
                assert!(
                    (cycle_minor_charpoly_eval(n, x).unwrap() - exact).abs() <= 1e-8 * (1.0 + exact.abs())
                );
            }
        }
    }

    #[test]
    fn cycle_gluing_templates() {
        for (m, n) in [(3, 3), (4, 5), (6, 3)] {
            let cm = OrientedGraph::cycle(m).unwrap();
            let cn = OrientedGraph::cycle(n).unwrap();
            let vi = glue_interface(&cm, &cn, &InterfaceSpec::vertices(vec![0], vec![0])).unwrap();
            let br = glue_bridge(&cm, &cn, &BridgeSpec::new(vec![(0, 0)])).unwrap();
            let pv = charpoly(&even_laplacian(&vi.graph)).unwrap();
            let pb = charpoly(&even_laplacian(&br.graph)).unwrap();
            for x in [-0.5, 0.8, 2.2, 4.1] {
                let e = pv.eval_f64(x);
                assert!((cycle_interface_glue_eval(m, n, x).unwrap() - e).abs() <= 1e-8 * (1.0 + e.abs()));
                let e = pb.eval_f64(x);
                assert!((cycle_bridge_glue_eval(m, n, x).unwrap() - e).abs() <= 1e-8 * (1.0 + e.abs()));
            }
        }
    }
}
