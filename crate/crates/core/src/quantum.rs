//! Free-particle Schrödinger evolution on a graph:
//! `Ψ(t) = exp(i · coeff · (t - t₀) · Δ⁺) Ψ(t₀)`.
//!
//! The propagator is built from an orthonormal eigenbasis of Δ⁺ as
//! `E · exp(i s Λ) · Eᵗ`; a truncated power series gives an independent
//! cross-check. Sums run in ascending index order so results are
//! reproducible bit for bit.

use num_complex::Complex64;

use crate::eigen::{jacobi_eigen, SymmetricEigen, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::graph::OrientedGraph;
use crate::laplacian::even_laplacian;

#[derive(Debug, Clone, PartialEq)]
pub struct WaveFunction {
    pub amplitudes: Vec<Complex64>,
}

impl WaveFunction {
    pub fn new(amplitudes: Vec<Complex64>) -> Self {
        WaveFunction { amplitudes }
    }

    pub fn from_real(values: &[f64]) -> Self {
        Self::new(values.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// The basis state concentrated on vertex `v`.
    pub fn basis(n: usize, v: usize) -> Result<Self> {
        if v >= n {
            return Err(Error::IndexOutOfRange { index: v, limit: n });
        }
        let mut a = vec![Complex64::new(0.0, 0.0); n];
        a[v] = Complex64::new(1.0, 0.0);
        Ok(Self::new(a))
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest entrywise modulus of the difference.
    pub fn max_diff(&self, other: &WaveFunction) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvolutionParams {
    /// ħ/2m collapsed into one dimensionless factor.
    pub coeff: f64,
    pub dt: f64,
}

impl EvolutionParams {
    pub fn new(coeff: f64, dt: f64) -> Self {
        EvolutionParams { coeff, dt }
    }

    /// The exponent scale `s = coeff · dt`.
    pub fn scale(&self) -> f64 {
        self.coeff * self.dt
    }
}

/// Dense |V|×|V| complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Propagator {
    pub entries: Vec<Vec<Complex64>>,
}

impl Propagator {
    pub fn identity(n: usize) -> Self {
        Propagator {
            entries: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn apply(&self, psi: &WaveFunction) -> Result<WaveFunction> {
        if psi.len() != self.dim() {
            return Err(Error::DimensionMismatch(format!(
                "wave function has {} amplitudes, graph has {} vertices",
                psi.len(),
                self.dim()
            )));
        }
        Ok(WaveFunction::new(
            self.entries
                .iter()
                .map(|row| row.iter().zip(&psi.amplitudes).map(|(k, a)| k * a).sum())
                .collect(),
        ))
    }

    pub fn mul(&self, other: &Propagator) -> Propagator {
        let n = self.dim();
        Propagator {
            entries: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).map(|k| self.entries[i][k] * other.entries[k][j]).sum())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn conjugate_transpose(&self) -> Propagator {
        let n = self.dim();
        Propagator {
            entries: (0..n)
                .map(|i| (0..n).map(|j| self.entries[j][i].conj()).collect())
                .collect(),
        }
    }

    /// `‖K K* - I‖_max`.
    pub fn unitarity_defect(&self) -> f64 {
        self.mul(&self.conjugate_transpose())
            .max_diff(&Propagator::identity(self.dim()))
    }

    pub fn max_diff(&self, other: &Propagator) -> f64 {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Orthonormal eigenbasis of Δ⁺.
pub fn laplacian_eigenbasis(g: &OrientedGraph) -> Result<SymmetricEigen> {
    jacobi_eigen(&even_laplacian(g).to_f64_rows(), DEFAULT_TOL)
}

/// `exp(i · coeff · dt · Δ⁺)` from the eigendecomposition of Δ⁺.
pub fn propagator(g: &OrientedGraph, p: EvolutionParams) -> Result<Propagator> {
    let eig = laplacian_eigenbasis(g)?;
    let n = g.n_vertices();
    let s = p.scale();
    let phases: Vec<Complex64> = eig
        .values
        .iter()
        .map(|&l| Complex64::from_polar(1.0, s * l))
        .collect();
    let e = &eig.vectors;
    Ok(Propagator {
        entries: (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| phases[k] * (e[k][i] * e[k][j])).sum())
                    .collect()
            })
            .collect(),
    })
}

pub fn evolve(psi0: &WaveFunction, g: &OrientedGraph, p: EvolutionParams) -> Result<WaveFunction> {
    if psi0.len() != g.n_vertices() {
        return Err(Error::DimensionMismatch(format!(
            "wave function has {} amplitudes, graph has {} vertices",
            psi0.len(),
            g.n_vertices()
        )));
    }
    propagator(g, p)?.apply(psi0)
}

/// `Σ_{j < terms} (i · coeff · dt · Δ⁺)^j / j!`.
pub fn propagator_series(g: &OrientedGraph, p: EvolutionParams, terms: usize) -> Result<Propagator> {
    if terms == 0 {
        return Err(Error::TooSmall { what: "series terms", min: 1, got: 0 });
    }
    let n = g.n_vertices();
    let i_s = Complex64::new(0.0, p.scale());
    let a = Propagator {
        entries: even_laplacian(g)
            .to_f64_rows()
            .into_iter()
            .map(|row| row.into_iter().map(|x| i_s * x).collect())
            .collect(),
    };
    let mut sum = Propagator::identity(n);
    let mut term = Propagator::identity(n);
    for j in 1..terms {
        term = term.mul(&a);
        let inv = 1.0 / j as f64;
        for row in term.entries.iter_mut() {
            for z in row.iter_mut() {
                *z *= inv;
            }
        }
        for (srow, trow) in sum.entries.iter_mut().zip(&term.entries) {
            for (s, t) in srow.iter_mut().zip(trow) {
                *s += t;
            }
        }
    }
    Ok(sum)
}
