//! Characteristic polynomials `p_M(λ) = det(M - λI)` over ℤ.
//!
//! The full polynomial comes from Berkowitz's division-free recursion. The
//! off-diagonal minors `det((M - λI)_{(v1,v2)})` are recovered from exact
//! integer determinants at λ = 0, 1, …, n-1 by forward-difference
//! interpolation; the unused top difference must vanish, which gives a
//! built-in consistency check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::poly::IntPoly;

/// Coefficients of `det(λI - A)` in descending powers of λ.
fn berkowitz_descending(a: &IntMatrix) -> Vec<BigInt> {
    let n = a.rows();
    if n == 0 {
        return vec![BigInt::one()];
    }
    let mut vect = vec![BigInt::one(), -a[(0, 0)].clone()];
    for r in 1..n {
        // leading block A_r is r×r; R is row r, S is column r, both restricted to 0..r
        let mut col = Vec::with_capacity(r + 2);
        col.push(BigInt::one());
        col.push(-a[(r, r)].clone());
        let mut w: Vec<BigInt> = (0..r).map(|i| a[(i, r)].clone()).collect();
        for k in 0..r {
            let rw = (0..r).fold(BigInt::zero(), |acc, j| acc + &a[(r, j)] * &w[j]);
            col.push(-rw);
            if k + 1 < r {
                w = (0..r)
                    .map(|i| (0..r).fold(BigInt::zero(), |acc, j| acc + &a[(i, j)] * &w[j]))
                    .collect();
            }
        }
        let next: Vec<BigInt> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(BigInt::zero(), |acc, j| acc + &col[i - j] * &vect[j])
            })
            .collect();
        vect = next;
    }
    vect
}

/// `det(M - λI)` with exact integer coefficients.
pub fn charpoly(m: &IntMatrix) -> Result<IntPoly> {
    let n = m.require_square()?;
    let mut coeffs = berkowitz_descending(m);
    coeffs.reverse();
    if n % 2 == 1 {
        for c in &mut coeffs {
            *c = -std::mem::take(c);
        }
    }
    Ok(IntPoly::new(coeffs))
}

/// Characteristic polynomial of `M` with row and column `v` deleted.
pub fn minor_charpoly(m: &IntMatrix, v: usize) -> Result<IntPoly> {
    m.require_square()?;
    charpoly(&m.minor(v, v)?)
}

/// Polynomial through the points `(k, values[k])`, k = 0..len, assuming it
/// has integer coefficients. Errors if a scaled forward difference is not
/// an integer, which cannot happen for integer-coefficient polynomials.
pub fn interpolate_consecutive(values: &[BigInt]) -> Result<IntPoly> {
    // Newton form: p(λ) = Σ_k (Δ^k p(0) / k!) · λ(λ-1)…(λ-k+1)
    let mut diffs = values.to_vec();
    let mut newton = Vec::with_capacity(values.len());
    let mut factorial = BigInt::one();
    for k in 0..values.len() {
        if k > 0 {
            factorial *= k;
        }
        let (c, r) = diffs[0].div_rem(&factorial);
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!(
                "forward difference {} of order {k} not divisible by {k}!",
                diffs[0]
            )));
        }
        newton.push(c);
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut poly = IntPoly::zero();
    let mut falling = IntPoly::one();
    for (k, c) in newton.iter().enumerate() {
        poly = poly + falling.scale(c);
        falling = falling * IntPoly::linear_factor(k as i64);
    }
    Ok(poly)
}

/// `det((M - λI)_{(v1, v2)})`: row `v1` and column `v2` of `M - λI` removed.
///
/// Evaluated at λ = 0..n-1 (in parallel; integer arithmetic keeps the
/// result independent of scheduling) and interpolated.
pub fn offdiag_minor_det(m: &IntMatrix, v1: usize, v2: usize) -> Result<IntPoly> {
    let n = m.require_square()?;
    for v in [v1, v2] {
        if v >= n {
            return Err(Error::IndexOutOfRange { index: v, limit: n });
        }
    }
    if v1 == v2 {
        return Err(Error::SameIndex(v1));
    }
    let values = (0..n)
        .into_par_iter()
        .map(|x| {
            m.shift_diagonal(&-BigInt::from(x))
                .minor(v1, v2)?
                .determinant()
        })
        .collect::<Result<Vec<BigInt>>>()?;
    let poly = interpolate_consecutive(&values)?;
    match poly.degree() {
        Some(d) if d + 2 > n => Err(Error::InexactDivision(format!(
            "off-diagonal minor interpolated to degree {d}, expected at most {}",
            n - 2
        ))),
        _ => Ok(poly),
    }
}
