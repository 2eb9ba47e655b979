//! Cyclic Jacobi diagonalization of real symmetric matrices.

use crate::error::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

/// Eigenpairs sorted by ascending eigenvalue; `vectors[k]` is a unit
/// eigenvector for `values[k]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricEigen {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

fn off_diagonal_max(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut m = 0.0f64;
    for i in 0..n {
        for j in i + 1..n {
            m = m.max(a[i][j].abs());
        }
    }
    m
}

/// Diagonalizes `a` by plane rotations swept over all (p, q), p < q, in
/// row-major order. Stops once every off-diagonal magnitude drops below
/// `tol · ‖a‖_F`.
pub fn jacobi_eigen(a: &[Vec<f64>], tol: f64) -> Result<SymmetricEigen> {
    let n = a.len();
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare { rows: n, cols: row.len() });
        }
        for j in 0..i {
            if a[i][j] != a[j][i] {
                return Err(Error::NotSymmetric(i, j));
            }
        }
    }
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let norm = m.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let threshold = tol * norm;

    let mut sweeps = 0;
    while off_diagonal_max(&m) >= threshold && threshold > 0.0 {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p][q];
                if apq == 0.0 {
                    continue;
                }
                // rotation angle zeroing m[p][q]
                let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
                m[p][q] = 0.0;
                m[q][p] = 0.0;
                for row in v.iter_mut() {
                    let (vp, vq) = (row[p], row[q]);
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i][i].total_cmp(&m[j][j]));
    Ok(SymmetricEigen {
        values: order.iter().map(|&k| m[k][k]).collect(),
        vectors: order
            .iter()
            .map(|&k| (0..n).map(|i| v[i][k]).collect())
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn residual(a: &[Vec<f64>], e: &SymmetricEigen) -> f64 {
        let n = a.len();
        let mut worst = 0.0f64;
        for (lam, x) in e.values.iter().zip(&e.vectors) {
            for i in 0..n {
                let ax: f64 = (0..n).map(|j| a[i][j] * x[j]).sum();
                worst = worst.max((ax - lam * x[i]).abs());
            }
        }
        worst
    }

    #[test]
    fn two_by_two() {
        let a = vec![vec![2.0, 1.0], vec![1.0, 2.0]];
        let e = jacobi_eigen(&a, DEFAULT_TOL).unwrap();
        assert!((e.values[0] - 1.0).abs() < 1e-12);
        assert!((e.values[1] - 3.0).abs() < 1e-12);
        assert!(residual(&a, &e) < 1e-12);
    }

    #[test]
    fn orthonormal_vectors() {
        let a: Vec<Vec<f64>> = (0..6)
            .map(|i| (0..6).map(|j| ((i * j + i + j) % 5) as f64 - 2.0).collect())
            .collect();
        let e = jacobi_eigen(&a, DEFAULT_TOL).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let d: f64 = (0..6).map(|k| e.vectors[i][k] * e.vectors[j][k]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((d - want).abs() < 1e-12);
            }
        }
        assert!(residual(&a, &e) < 1e-10);
        assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn degenerate_inputs() {
        assert!(jacobi_eigen(&[], DEFAULT_TOL).unwrap().values.is_empty());
        let z = vec![vec![0.0; 3]; 3];
        assert_eq!(jacobi_eigen(&z, DEFAULT_TOL).unwrap().values, vec![0.0; 3]);
        let bad = vec![vec![0.0, 1.0], vec![2.0, 0.0]];
        assert_eq!(jacobi_eigen(&bad, DEFAULT_TOL), Err(Error::NotSymmetric(1, 0)));
    }
}
