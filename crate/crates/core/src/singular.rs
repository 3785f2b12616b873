//! Singular values through the Gram-matrix route: the singular values of A
//! are the square roots of the eigenvalues of A*A.

use crate::eig::hermitian_eigenvalues;
use crate::error::LinalgError;
use crate::matrix::ComplexMatrix;

/// Gram eigenvalues below this fraction of the largest one are solver noise
/// (the route cannot resolve singular values under ~1e-6 of sigma_1, since
/// squaring pushes them into the eigensolver's roundoff floor) and would
/// otherwise surface as spurious sqrt(noise) singular values on
/// rank-deficient input.
const GRAM_RELATIVE_FLOOR: f64 = 1e-12;

/// Singular values of a (possibly rectangular) complex matrix, descending.
pub fn singular_values(a: &ComplexMatrix) -> Result<Vec<f64>, LinalgError> {
    let gram = a.gram();
    let eigenvalues = hermitian_eigenvalues(&gram, 1e-10)?;
    let cutoff = GRAM_RELATIVE_FLOOR * eigenvalues[0].max(0.0);
    Ok(eigenvalues
        .into_iter()
        .map(|v| if v <= cutoff { 0.0 } else { v.sqrt() })
        .collect())
}

/// Largest singular value.
pub fn sigma_max(a: &ComplexMatrix) -> Result<f64, LinalgError> {
    Ok(singular_values(a)?[0])
}
