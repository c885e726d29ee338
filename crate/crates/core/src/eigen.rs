//! Hermitian eigendecomposition by cyclic Jacobi rotations, and numerical rank.

use std::fmt::Debug;

use num_complex::Complex;
use num_traits::{Float, Zero};
use thiserror::Error;

use crate::matrix::Matrix;

pub const MAX_SWEEPS: usize = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EigenError {
    #[error("matrix is not square: {0:?}")]
    NotSquare((usize, usize)),
    #[error("matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),
    #[error("Jacobi iteration did not converge in {sweeps} sweeps (off-diagonal norm {off:e})")]
    NotConverged { sweeps: usize, off: f64 },
}

/// `A = V diag(values) V†`, eigenvalues ascending, eigenvectors in the columns of `vectors`.
#[derive(Debug, Clone)]
pub struct HermitianEigen<F> {
    pub values: Vec<F>,
    pub vectors: Matrix<Complex<F>>,
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Each rotation first makes the pivot `a_pq` real with a diagonal phase, then annihilates it
/// with a real plane rotation. Sweeps cycle over `p < q` in row order.
pub fn hermitian_eigen<F>(a: &Matrix<Complex<F>>) -> Result<HermitianEigen<F>, EigenError>
where
    F: Float + Debug + Send + Sync + 'static,
{
    if !a.is_square() {
        return Err(EigenError::NotSquare(a.shape()));
    }
    let n = a.rows();
    let scale = a.max_abs().max(f64::MIN_POSITIVE);
    let herm_dev = a.max_abs_diff(&a.adjoint());
    if herm_dev > 1e3 * F::epsilon().to_f64().unwrap() * scale * (n as f64).max(1.0) {
        return Err(EigenError::NotHermitian(herm_dev));
    }

    let mut m: Vec<Vec<Complex<F>>> = a.to_rows();
    let mut v: Vec<Vec<Complex<F>>> = Matrix::<Complex<F>>::identity(n).to_rows();
    let total = frobenius(&m);
    let target = F::epsilon() * total;

    for _ in 0..MAX_SWEEPS {
        if off_diagonal(&m) <= target {
            return Ok(finish(m, v));
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
    }
    let off = off_diagonal(&m);
    if off <= target * F::from(16).unwrap() {
        return Ok(finish(m, v));
    }
    Err(EigenError::NotConverged { sweeps: MAX_SWEEPS, off: off.to_f64().unwrap() })
}

/// Real symmetric convenience wrapper; eigenvectors come back real.
pub fn symmetric_eigen<F>(a: &Matrix<F>) -> Result<(Vec<F>, Matrix<F>), EigenError>
where
    F: Float + Debug + Send + Sync + 'static + crate::scalar::Scalar,
{
    let c = a.map(|&x| Complex::new(x, F::zero()));
    let eig = hermitian_eigen(&c)?;
    Ok((eig.values, eig.vectors.map(|z| z.re)))
}

fn rotate<F: Float>(m: &mut [Vec<Complex<F>>], v: &mut [Vec<Complex<F>>], p: usize, q: usize) {
    let apq = m[p][q];
    let r = apq.norm();
    if r.is_zero() {
        return;
    }
    let n = m.len();
    let two = F::one() + F::one();

    // Phase: scale column q by u and row q by conj(u) so that a_pq becomes r.
    let u = apq.conj() / r;
    for k in 0..n {
        m[k][q] = m[k][q] * u;
    }
    for k in 0..n {
        m[q][k] = m[q][k] * u.conj();
    }
    for row in v.iter_mut() {
        row[q] = row[q] * u;
    }

    let app = m[p][p].re;
    let aqq = m[q][q].re;
    let theta = (two * r).atan2(aqq - app) / two;
    let (s, c) = theta.sin_cos();

    for k in 0..n {
        let (kp, kq) = (m[k][p], m[k][q]);
        m[k][p] = kp * c - kq * s;
        m[k][q] = kp * s + kq * c;
    }
    for k in 0..n {
        let (pk, qk) = (m[p][k], m[q][k]);
        m[p][k] = pk * c - qk * s;
        m[q][k] = pk * s + qk * c;
    }
    for row in v.iter_mut() {
        let (kp, kq) = (row[p], row[q]);
        row[p] = kp * c - kq * s;
        row[q] = kp * s + kq * c;
    }
    m[p][q] = Complex::zero();
    m[q][p] = Complex::zero();
    m[p][p] = Complex::new(m[p][p].re, F::zero());
    m[q][q] = Complex::new(m[q][q].re, F::zero());
}

fn frobenius<F: Float>(m: &[Vec<Complex<F>>]) -> F {
    m.iter().flatten().fold(F::zero(), |acc, z| acc + z.norm_sqr()).sqrt()
}

fn off_diagonal<F: Float>(m: &[Vec<Complex<F>>]) -> F {
    let mut s = F::zero();
    for (i, row) in m.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            if i != j {
                s = s + z.norm_sqr();
            }
        }
    }
    s.sqrt()
}

fn finish<F>(m: Vec<Vec<Complex<F>>>, v: Vec<Vec<Complex<F>>>) -> HermitianEigen<F>
where
    F: Float + Debug + Send + Sync + 'static,
{
    let n = m.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i][i].re.partial_cmp(&m[j][j].re).unwrap_or(std::cmp::Ordering::Equal));
    let values = order.iter().map(|&i| m[i][i].re).collect();
    let vectors = Matrix::from_fn(n, n, |r, c| v[r][order[c]]);
    HermitianEigen { values, vectors }
}

/// Rank of the row set by Gaussian elimination with partial pivoting.
///
/// A pivot counts only if its magnitude exceeds `pivot_tol` times the largest entry.
pub fn numerical_rank<F: Float>(rows: &[Vec<F>], pivot_tol: F) -> usize {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let scale = m.iter().flatten().fold(F::zero(), |acc, x| acc.max(x.abs()));
    if scale.is_zero() {
        return 0;
    }
    let threshold = pivot_tol * scale;
    let mut rank = 0;
    for col in 0..cols {
        if rank == m.len() {
            break;
        }
        let (best, val) = (rank..m.len())
            .map(|r| (r, m[r][col].abs()))
            .fold((rank, F::zero()), |acc, x| if x.1 > acc.1 { x } else { acc });
        if val <= threshold {
            continue;
        }
        m.swap(rank, best);
        let pivot = m[rank][col];
        for r in rank + 1..m.len() {
            let factor = m[r][col] / pivot;
            if factor.is_zero() {
                continue;
            }
            for c in col..cols {
                let sub = factor * m[rank][c];
                m[r][c] = m[r][c] - sub;
            }
        }
        rank += 1;
    }
    rank
}
