//! Hermitian eigendecomposition by cyclic Jacobi rotations.
//!
//! Each off-diagonal entry is first made real by a phase similarity, then
//! annihilated by a real Givens rotation; both transforms are accumulated
//! into the eigenvector frame. Sweeps repeat until the off-diagonal
//! Frobenius mass drops below `1e-14 * (1 + ||A||_F)`. Dimensions are capped
//! at 64, so the cubic sweep cost never matters.

use num_complex::Complex64;

use crate::error::LinalgError;
use crate::matrix::ComplexMatrix;

pub const MAX_EIG_DIM: usize = 64;

const OFF_DIAGONAL_TARGET: f64 = 1e-14;
const MAX_SWEEPS: usize = 60;

/// Eigenvalues (descending) with a matching orthonormal eigenvector frame.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    pub eigenvalues: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl SpectralDecomposition {
    /// Max entry modulus of `A - U diag(lambda) U*`.
    pub fn reconstruction_residual(&self, a: &ComplexMatrix) -> f64 {
        let n = self.eigenvalues.len();
        let mut scaled = self.vectors.clone();
        for j in 0..n {
            for i in 0..n {
                scaled[(i, j)] = scaled[(i, j)].scale(self.eigenvalues[j]);
            }
        }
        scaled.mul(&self.vectors.adjoint()).max_abs_diff(a)
    }
}

fn off_diagonal_mass(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Full eigendecomposition of a Hermitian matrix.
///
/// `hermitian_tol` bounds the accepted asymmetry relative to `1 + max|A|`;
/// the symmetric average of the input is what actually gets diagonalized.
pub fn hermitian_eig(
    a: &ComplexMatrix,
    hermitian_tol: f64,
) -> Result<SpectralDecomposition, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    if n > MAX_EIG_DIM {
        return Err(LinalgError::DimensionTooLarge { n, cap: MAX_EIG_DIM });
    }
    let defect = a.hermitian_defect();
    if defect > hermitian_tol * (1.0 + a.max_abs()) {
        return Err(LinalgError::NotHermitian { defect });
    }

    let mut m = a.hermitian_part();
    let mut v = ComplexMatrix::identity(n);
    let threshold = OFF_DIAGONAL_TARGET * (1.0 + m.frobenius_norm());

    if n == 1 {
        return Ok(SpectralDecomposition {
            eigenvalues: vec![m[(0, 0)].re],
            vectors: v,
        });
    }

    let mut converged = false;
    let mut off = off_diagonal_mass(&m);
    for _ in 0..MAX_SWEEPS {
        if off <= threshold {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut m, &mut v, p, q);
            }
        }
        off = off_diagonal_mass(&m);
    }
    if !converged && off > threshold {
        return Err(LinalgError::NoConvergence { sweeps: MAX_SWEEPS, off });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        m[(j, j)]
            .re
            .partial_cmp(&m[(i, i)].re)
            .expect("eigenvalues are finite")
    });
    let eigenvalues: Vec<f64> = order.iter().map(|&i| m[(i, i)].re).collect();
    let mut vectors = ComplexMatrix::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            vectors[(row, new_col)] = v[(row, old_col)];
        }
    }
    Ok(SpectralDecomposition { eigenvalues, vectors })
}

/// Annihilates `m[(p, q)]` with the unitary J = P(phase) * R(angle) acting on
/// the (p, q) plane; applies `m <- J* m J` and `v <- v J`.
fn rotate(m: &mut ComplexMatrix, v: &mut ComplexMatrix, p: usize, q: usize) {
    let n = m.rows();
    let apq = m[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let phase = apq / r;

    let alpha = m[(p, p)].re;
    let beta = m[(q, q)].re;
    let tau = (beta - alpha) / (2.0 * r);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    // Column mixing: col_p <- phase*c*col_p - s*col_q, col_q <- phase*s*col_p + c*col_q.
    let jpp = phase.scale(c);
    let jpq = phase.scale(s);
    for k in 0..n {
        let mkp = m[(k, p)];
        let mkq = m[(k, q)];
        m[(k, p)] = mkp * jpp - mkq.scale(s);
        m[(k, q)] = mkp * jpq + mkq.scale(c);
    }
    // Row mixing with the conjugate coefficients.
    let jpp_c = jpp.conj();
    let jpq_c = jpq.conj();
    for k in 0..n {
        let mpk = m[(p, k)];
        let mqk = m[(q, k)];
        m[(p, k)] = mpk * jpp_c - mqk.scale(s);
        m[(q, k)] = mpk * jpq_c + mqk.scale(c);
    }
    m[(p, q)] = Complex64::new(0.0, 0.0);
    m[(q, p)] = Complex64::new(0.0, 0.0);
    m[(p, p)] = Complex64::new(m[(p, p)].re, 0.0);
    m[(q, q)] = Complex64::new(m[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * jpp - vkq.scale(s);
        v[(k, q)] = vkp * jpq + vkq.scale(c);
    }
}

/// Eigenvalues only, descending.
pub fn hermitian_eigenvalues(a: &ComplexMatrix, tol: f64) -> Result<Vec<f64>, LinalgError> {
    hermitian_eig(a, tol).map(|d| d.eigenvalues)
}

/// Hermitian square root `A^{1/2}` via eigendecomposition; negative
/// eigenvalue dust from roundoff is clamped to zero.
pub fn hermitian_sqrt(a: &ComplexMatrix, tol: f64) -> Result<ComplexMatrix, LinalgError> {
    let decomp = hermitian_eig(a, tol)?;
    let n = a.rows();
    let mut scaled = decomp.vectors.clone();
    for j in 0..n {
        let root = decomp.eigenvalues[j].max(0.0).sqrt();
        for i in 0..n {
            scaled[(i, j)] = scaled[(i, j)].scale(root);
        }
    }
    Ok(scaled.mul(&decomp.vectors.adjoint()))
}
