//! Determinants by LU with partial pivoting, and Hermitian linear solves by
//! spectral decomposition.

use num_complex::Complex64;

use crate::eig::hermitian_eig;
use crate::error::LinalgError;
use crate::matrix::ComplexMatrix;

/// Determinant of a square complex matrix via partial-pivoted LU.
/// A zero pivot simply yields determinant zero.
pub fn determinant(a: &ComplexMatrix) -> Result<Complex64, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let mut lu = a.clone();
    let mut det = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let mut pivot_row = col;
        let mut pivot_size = lu[(col, col)].norm();
        for row in col + 1..n {
            let size = lu[(row, col)].norm();
            if size > pivot_size {
                pivot_size = size;
                pivot_row = row;
            }
        }
        if pivot_size == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        if pivot_row != col {
            for j in 0..n {
                let tmp = lu[(col, j)];
                lu[(col, j)] = lu[(pivot_row, j)];
                lu[(pivot_row, j)] = tmp;
            }
            det = -det;
        }
        let pivot = lu[(col, col)];
        det *= pivot;
        for row in col + 1..n {
            let factor = lu[(row, col)] / pivot;
            if factor.norm() == 0.0 {
                continue;
            }
            for j in col + 1..n {
                let delta = factor * lu[(col, j)];
                lu[(row, j)] -= delta;
            }
        }
    }
    Ok(det)
}

/// Solves A X = B for Hermitian positive definite A through its
/// eigendecomposition. Requires min eigenvalue > 1e-10 * max eigenvalue.
pub fn solve_hermitian(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix, LinalgError> {
    let decomp = hermitian_eig(a, 1e-10)?;
    let n = a.rows();
    if b.rows() != n {
        return Err(LinalgError::NotSquare { rows: b.rows(), cols: b.cols() });
    }
    let max_eig = decomp.eigenvalues[0];
    let min_eig = decomp.eigenvalues[n - 1];
    if min_eig <= 1e-10 * max_eig.max(0.0) || min_eig <= 0.0 {
        return Err(LinalgError::Singular);
    }
    // X = U diag(1/lambda) U* B.
    let projected = decomp.vectors.adjoint_mul(b);
    let mut scaled = projected;
    for i in 0..n {
        let inv = 1.0 / decomp.eigenvalues[i];
        for j in 0..scaled.cols() {
            scaled[(i, j)] = scaled[(i, j)].scale(inv);
        }
    }
    Ok(decomp.vectors.mul(&scaled))
}
