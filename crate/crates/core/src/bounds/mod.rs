//! Every inequality and identity under test, as executable checks.
//!
//! Each check validates its preconditions, evaluates both sides of the
//! statement, and returns one report per asserted inequality link. All
//! checks are pure functions, so concurrent invocation is free.

mod contraction;
mod counterexamples;
mod frames;
mod psd;
mod scalar;

pub use contraction::{
    contraction_main_bound, hua_det_inequality, hua_identity_residual, hua_reversal_det,
    hua_strengthened_det, marcus_bounds, reversal_bound, reversal_det, sum_identity_residual,
};
pub use counterexamples::{counterexample_reports, reproduce_counterexamples};
pub use frames::{
    fan_min_det, nested_frame_det_bound, nested_frame_det_bound_with, partial_isometry_reduction,
};
pub use psd::{
    fiedler_chain, hartfiel_det, head_tail_power, lidskii_product, main_bounds, minkowski_det,
    oppenheim_tail_power, pairwise_bound, tail_chain,
};
pub use scalar::scalar_product_bound;

use crate::eig::{hermitian_eig, SpectralDecomposition};
use crate::error::CheckError;
use crate::matrix::ComplexMatrix;
use crate::singular::sigma_max;

/// Default tolerance for inequality margins.
pub const DEFAULT_BOUND_TOL: f64 = 1e-9;
/// Default tolerance for identity residuals.
pub const DEFAULT_IDENTITY_TOL: f64 = 1e-10;

/// Hermitian asymmetry accepted on user-supplied matrices.
pub const HERMITIAN_INPUT_TOL: f64 = 1e-10;
/// PSD acceptance: min eigenvalue may not drop below -1e-10 * lambda_1.
const PSD_RELATIVE_FLOOR: f64 = 1e-10;
/// User-facing strictness threshold for strict contractions.
const STRICT_CONTRACTION_CEILING: f64 = 1.0 - 1e-6;
/// Roundoff allowance when accepting non-strict contractions.
const CONTRACTION_SLACK: f64 = 1e-10;

pub(crate) fn require_same_n(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<usize, CheckError> {
    if !a.is_square() {
        return Err(CheckError::Linalg(crate::error::LinalgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        }));
    }
    if !b.is_square() {
        return Err(CheckError::Linalg(crate::error::LinalgError::NotSquare {
            rows: b.rows(),
            cols: b.cols(),
        }));
    }
    if a.rows() != b.rows() {
        return Err(CheckError::DimensionMismatch { n1: a.rows(), n2: b.rows() });
    }
    Ok(a.rows())
}

/// Eigendecomposition of a PSD matrix, rejecting indefinite input.
pub(crate) fn psd_decomposition(a: &ComplexMatrix) -> Result<SpectralDecomposition, CheckError> {
    let decomp = hermitian_eig(a, HERMITIAN_INPUT_TOL)?;
    let top = decomp.eigenvalues[0];
    let bottom = decomp.eigenvalues[decomp.eigenvalues.len() - 1];
    if bottom < -PSD_RELATIVE_FLOOR * top.max(0.0) {
        return Err(CheckError::NotPsd { min_eig: bottom });
    }
    Ok(decomp)
}

/// Eigenvalues (descending) of a PSD matrix.
pub(crate) fn psd_eigenvalues(a: &ComplexMatrix) -> Result<Vec<f64>, CheckError> {
    Ok(psd_decomposition(a)?.eigenvalues)
}

pub(crate) fn require_strict_contraction(a: &ComplexMatrix) -> Result<(), CheckError> {
    let top = sigma_max(a)?;
    if top > STRICT_CONTRACTION_CEILING {
        return Err(CheckError::NotStrictContraction { sigma_max: top });
    }
    Ok(())
}

pub(crate) fn require_contraction(a: &ComplexMatrix) -> Result<(), CheckError> {
    let top = sigma_max(a)?;
    if top > 1.0 + CONTRACTION_SLACK {
        return Err(CheckError::NotContraction { sigma_max: top });
    }
    Ok(())
}

/// `2^k - 2` as a float, the coefficient on every cross term.
pub(crate) fn cross_coefficient(k: usize) -> f64 {
    (k as f64).exp2() - 2.0
}

/// Real determinant of a Hermitian matrix given as the real part of the LU
/// determinant (the imaginary part is roundoff).
pub(crate) fn hermitian_determinant(a: &ComplexMatrix) -> Result<f64, CheckError> {
    Ok(crate::det::determinant(a)?.re)
}

/// |det(M)|^2 via the LU path.
pub(crate) fn abs_det_squared(a: &ComplexMatrix) -> Result<f64, CheckError> {
    Ok(crate::det::determinant(a)?.norm_sqr())
}
