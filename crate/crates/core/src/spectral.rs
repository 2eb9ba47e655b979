//! Numeric spectra and the graph invariants read off them: Fiedler value,
//! spanning-tree counts, Betti numbers, even/odd isospectrality and the
//! Cheeger constant.
//!
//! Zero-eigenvalue multiplicities always come from the graph's components
//! and cycles, never from a numeric threshold.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;
use rayon::prelude::*;

use crate::charpoly::charpoly;
use crate::eigen::jacobi_eigen;
use crate::error::{Error, Result};
use crate::graph::{connected_components, euler_characteristic, OrientedGraph};
use crate::laplacian::{even_laplacian, odd_laplacian};
use crate::matrix::IntMatrix;

pub const CHEEGER_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Exact multiplicity of zero: `dim - rank` for a bare matrix, b₀ or
    /// b₁ for a graph Laplacian.
    pub zero_count: usize,
}

impl Spectrum {
    /// Eigenvalues past the first `zero_count`, which are the nonzero ones.
    pub fn nonzero(&self) -> &[f64] {
        &self.eigenvalues[self.zero_count.min(self.eigenvalues.len())..]
    }
}

/// Ascending eigenvalues of a symmetric integer matrix.
pub fn eigenvalues_sym(m: &IntMatrix, tol: f64) -> Result<Spectrum> {
    m.require_square()?;
    if let Some((i, j)) = m.first_asymmetry() {
        return Err(Error::NotSymmetric(i, j));
    }
    Ok(Spectrum {
        eigenvalues: jacobi_eigen(&m.to_f64_rows(), tol)?.values,
        zero_count: m.rows() - m.rank(),
    })
}

/// Spectrum of Δ⁺ with `zero_count = b₀`.
pub fn even_spectrum(g: &OrientedGraph, tol: f64) -> Result<Spectrum> {
    let mut s = eigenvalues_sym(&even_laplacian(g), tol)?;
    s.zero_count = betti_numbers(g).0;
    Ok(s)
}

/// Spectrum of Δ⁻ with `zero_count = b₁`.
pub fn odd_spectrum(g: &OrientedGraph, tol: f64) -> Result<Spectrum> {
    let mut s = eigenvalues_sym(&odd_laplacian(g), tol)?;
    s.zero_count = betti_numbers(g).1;
    Ok(s)
}

/// `(b₀, b₁)` with `b₁ = b₀ - (|V| - |E|)`.
pub fn betti_numbers(g: &OrientedGraph) -> (usize, usize) {
    let b0 = connected_components(g).count;
    let b1 = b0 as i64 - euler_characteristic(g);
    (b0, b1 as usize)
}

/// Smallest nonzero eigenvalue of Δ⁺, i.e. the eigenvalue at index b₀.
///
/// For a disconnected graph this is still the smallest *nonzero*
/// eigenvalue, not the conventional algebraic connectivity 0. A graph
/// without edges has no nonzero eigenvalue and is rejected.
pub fn fiedler_value(g: &OrientedGraph) -> Result<f64> {
    if g.n_vertices() < 2 {
        return Err(Error::TooSmall {
            what: "graph for a Fiedler value",
            min: 2,
            got: g.n_vertices(),
        });
    }
    if g.n_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let s = even_spectrum(g, crate::eigen::DEFAULT_TOL)?;
    Ok(s.nonzero()[0])
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiedlerBounds {
    pub lower: f64,
    pub upper: f64,
}

impl FiedlerBounds {
    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.lower - tol <= x && x <= self.upper + tol
    }
}

/// Laguerre-type bounds on the Fiedler value of K_m joined to K_n by one
/// bridge: `min{m, n, (m+n+2 ∓ 2√(m²+n²-mn+m+n-6))/3}`.
pub fn fiedler_bounds_complete_bridge(m: usize, n: usize) -> Result<FiedlerBounds> {
    for k in [m, n] {
        if k < 2 {
            return Err(Error::TooSmall { what: "complete graph", min: 2, got: k });
        }
    }
    let (mf, nf) = (m as f64, n as f64);
    let radicand = mf * mf + nf * nf - mf * nf + mf + nf - 6.0;
    let root = 2.0 * radicand.sqrt();
    let cap = mf.min(nf);
    Ok(FiedlerBounds {
        lower: cap.min((mf + nf + 2.0 - root) / 3.0),
        upper: cap.min((mf + nf + 2.0 + root) / 3.0),
    })
}

/// Fiedler value of K_n joined to K_n by one bridge: `(n+2-√(n²+4n-4))/2`.
pub fn fiedler_complete_bridge_same(n: usize) -> f64 {
    let n = n as f64;
    (n + 2.0 - (n * n + 4.0 * n - 4.0).sqrt()) / 2.0
}

/// Number of spanning trees, `-c₁ / |V|` from the λ coefficient of
/// `det(Δ⁺ - λI)`. Zero for disconnected graphs.
pub fn spanning_tree_count(g: &OrientedGraph) -> Result<BigInt> {
    let n = g.n_vertices();
    if n == 0 {
        return Ok(BigInt::zero());
    }
    let c1 = charpoly(&even_laplacian(g))?.coeff(1);
    let (t, r) = (-c1).div_rem(&BigInt::from(n));
    if !r.is_zero() {
        return Err(Error::InexactDivision(format!(
            "λ coefficient not divisible by |V| = {n}"
        )));
    }
    Ok(t)
}

/// Kirchhoff's cofactor form: `det Δ⁺` with row and column `v` removed.
pub fn spanning_tree_count_cofactor(g: &OrientedGraph, v: usize) -> Result<BigInt> {
    even_laplacian(g).minor(v, v)?.determinant()
}

/// Whether Δ⁺ and Δ⁻ share their nonzero spectrum (within `tol`), with
/// zero multiplicities b₀ and b₁. The numeric zero counts are checked too:
/// the first b₀ (resp. b₁) eigenvalues must be within `tol` of zero and the
/// rest must not.
pub fn isospectral_check(g: &OrientedGraph, tol: f64) -> Result<bool> {
    if g.n_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let even = even_spectrum(g, crate::eigen::DEFAULT_TOL)?;
    let odd = odd_spectrum(g, crate::eigen::DEFAULT_TOL)?;
    let zeros_ok = |s: &Spectrum| {
        let z = s.zero_count;
        s.eigenvalues[..z].iter().all(|x| x.abs() <= tol)
            && s.eigenvalues[z..].iter().all(|x| *x > tol)
    };
    let (a, b) = (even.nonzero(), odd.nonzero());
    Ok(zeros_ok(&even)
        && zeros_ok(&odd)
        && a.len() == b.len()
        && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol))
}

/// `h(Γ) = min |∂X| / |X|` over vertex subsets with `0 < |X| < |V|/2`
/// (strict), by exhaustive enumeration.
///
/// Graphs on 2 or 3 vertices admit only singletons; a single vertex admits
/// nothing and is rejected as too small.
pub fn cheeger_constant(g: &OrientedGraph) -> Result<Ratio<BigInt>> {
    let n = g.n_vertices();
    if n < 2 {
        return Err(Error::TooSmall { what: "graph for a Cheeger constant", min: 2, got: n });
    }
    if n > CHEEGER_MAX_VERTICES {
        return Err(Error::TooLarge { what: "graph for a Cheeger constant", max: CHEEGER_MAX_VERTICES, got: n });
    }
    if connected_components(g).count != 1 {
        return Err(Error::Disconnected);
    }
    let edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|e| (1u32 << e.tail, 1u32 << e.head))
        .collect();
    let best = (1u32..1 << n)
        .into_par_iter()
        .filter(|x| 2 * (x.count_ones() as usize) < n)
        .map(|x| {
            let cut = edges
                .iter()
                .filter(|&&(a, b)| (x & a != 0) != (x & b != 0))
                .count();
            (cut as u64, x.count_ones() as u64)
        })
        // cross-multiplied comparison keeps the minimum exact
        .min_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)))
        .expect("every graph with at least two vertices has a singleton");
    Ok(Ratio::new(BigInt::from(best.0), BigInt::from(best.1)))
}

/// Largest |λ| in a spectrum; handy for scale-aware tolerances.
pub fn spectral_radius(s: &Spectrum) -> f64 {
    s.eigenvalues.iter().map(|x| x.abs()).fold(0.0, f64::max)
}

/// `Σ λ_i` of Δ⁺ equals `2|E|`; a cheap sanity check on a computed spectrum.
pub fn trace_defect(g: &OrientedGraph, s: &Spectrum) -> f64 {
    (s.eigenvalues.iter().sum::<f64>() - 2.0 * g.n_edges() as f64).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gluing::{glue_bridge, glue_interface, BridgeSpec, InterfaceSpec};

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9)
    }

    #[test]
    fn spectra_examples() {
        let k3 = even_laplacian(&OrientedGraph::complete(3).unwrap());
        assert!(close(&eigenvalues_sym(&k3, 1e-12).unwrap().eigenvalues, &[0.0, 3.0, 3.0]));
        let c4 = even_laplacian(&OrientedGraph::cycle(4).unwrap());
        let s = eigenvalues_sym(&c4, 1e-12).unwrap();
        assert!(close(&s.eigenvalues, &[0.0, 2.0, 2.0, 4.0]));
        assert_eq!(s.zero_count, 1);
        let z = IntMatrix::zeros(3, 3);
        let s = eigenvalues_sym(&z, 1e-12).unwrap();
        assert!(close(&s.eigenvalues, &[0.0; 3]));
        assert_eq!(s.zero_count, 3);
        let asym = IntMatrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert!(matches!(eigenvalues_sym(&asym, 1e-12), Err(Error::NotSymmetric(..))));
    }

    #[test]
    fn fiedler_examples() {
        assert!((fiedler_value(&OrientedGraph::path(2).unwrap()).unwrap() - 2.0).abs() < 1e-12);
        assert!(fiedler_value(&OrientedGraph::empty(1)).is_err());
        for m in 2..=6 {
            for n in 2..=6 {
                let km = OrientedGraph::complete(m).unwrap();
                let kn = OrientedGraph::complete(n).unwrap();
                let g = glue_interface(&km, &kn, &InterfaceSpec::vertices(vec![0], vec![0]))
                    .unwrap()
                    .graph;
                assert!((fiedler_value(&g).unwrap() - 1.0).abs() < 1e-9);
            }
            let km = OrientedGraph::complete(m).unwrap();
            let g = glue_bridge(&km, &km, &BridgeSpec::new(vec![(0, 0)])).unwrap().graph;
            assert!((fiedler_value(&g).unwrap() - fiedler_complete_bridge_same(m)).abs() < 1e-9);
        }
        // disconnected: smallest nonzero eigenvalue, not zero
        let two_edges = OrientedGraph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!((fiedler_value(&two_edges).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn bound_formula_instantiation() {
        let b = fiedler_bounds_complete_bridge(2, 2).unwrap();
        let r = 2f64.sqrt();
        assert!((b.lower - (6.0 - 2.0 * r) / 3.0).abs() < 1e-15);
        assert!((b.upper - 2.0).abs() < 1e-15);
        assert!(b.lower <= b.upper);
        assert!(fiedler_bounds_complete_bridge(1, 4).is_err());
    }

    #[test]
    fn tree_counts() {
        for n in 1..=10 {
            assert_eq!(spanning_tree_count(&OrientedGraph::path(n).unwrap()).unwrap(), 1.into());
        }
        for n in 3..=10 {
            let c = OrientedGraph::cycle(n).unwrap();
            assert_eq!(spanning_tree_count(&c).unwrap(), n.into());
            assert_eq!(spanning_tree_count_cofactor(&c, n - 1).unwrap(), n.into());
        }
        let k5 = OrientedGraph::complete(5).unwrap();
        assert_eq!(spanning_tree_count(&k5).unwrap(), 125.into());
        assert_eq!(spanning_tree_count(&OrientedGraph::empty(3)).unwrap(), 0.into());
    }

    #[test]
    fn betti_examples() {
        assert_eq!(betti_numbers(&OrientedGraph::path(5).unwrap()), (1, 0));
        assert_eq!(betti_numbers(&OrientedGraph::cycle(6).unwrap()), (1, 1));
        assert_eq!(betti_numbers(&OrientedGraph::complete(4).unwrap()), (1, 3));
        assert_eq!(betti_numbers(&OrientedGraph::empty(3)), (3, 0));
    }

    #[test]
    fn isospectral_examples() {
        assert!(isospectral_check(&OrientedGraph::path(5).unwrap(), 1e-8).unwrap());
        assert!(isospectral_check(&OrientedGraph::cycle(5).unwrap(), 1e-8).unwrap());
        assert!(isospectral_check(&OrientedGraph::complete(5).unwrap(), 1e-8).unwrap());
        assert_eq!(isospectral_check(&OrientedGraph::empty(2), 1e-8), Err(Error::NoEdges));
    }

    /// Sequential enumeration with f64-free rational comparison.
    fn cheeger_oracle(g: &OrientedGraph) -> Ratio<BigInt> {
        let n = g.n_vertices();
        let mut best: Option<Ratio<BigInt>> = None;
        for x in 1usize..1 << n {
            let size = x.count_ones() as usize;
            if 2 * size >= n {
                continue;
            }
            let cut = g
                .edges()
                .iter()
                .filter(|e| ((x >> e.tail) & 1) != ((x >> e.head) & 1))
                .count();
            let r = Ratio::new(BigInt::from(cut), BigInt::from(size));
            if best.as_ref().map_or(true, |b| r < *b) {
                best = Some(r);
            }
        }
        best.unwrap()
    }

    #[test]
    fn cheeger_examples() {
        let one = Ratio::from_integer(BigInt::from(1));
        let k4 = OrientedGraph::complete(4).unwrap();
        assert_eq!(cheeger_oracle(&k4), Ratio::from_integer(3.into()));
        assert_eq!(cheeger_constant(&k4).unwrap(), Ratio::from_integer(3.into()));
        let p4 = OrientedGraph::path(4).unwrap();
        assert_eq!(cheeger_oracle(&p4), one);
        assert_eq!(cheeger_constant(&p4).unwrap(), one);
        let c6 = OrientedGraph::cycle(6).unwrap();
        assert_eq!(cheeger_oracle(&c6), one);
        assert_eq!(cheeger_constant(&c6).unwrap(), one);
        let p7 = OrientedGraph::path(7).unwrap();
        assert_eq!(cheeger_constant(&p7).unwrap(), Ratio::new(1.into(), 3.into()));
        assert_eq!(cheeger_constant(&OrientedGraph::empty(2)), Err(Error::Disconnected));
        assert!(matches!(
            cheeger_constant(&OrientedGraph::path(21).unwrap()),
            Err(Error::TooLarge { .. })
        ));
    }
}
