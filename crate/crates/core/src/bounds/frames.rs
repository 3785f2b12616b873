//! Determinant bounds over partial isometries and nested frames: the
//! reduction lemma, the key lemma behind the main theorem, and the Fan
//! minimum.

use crate::eig::{hermitian_eigenvalues, SpectralDecomposition};
use crate::error::CheckError;
use crate::index_seq::IndexSequence;
use crate::matrix::ComplexMatrix;
use crate::products::{head_product, indexed_product, tail_product};
use crate::report::{BoundReport, Report};

use super::{psd_decomposition, psd_eigenvalues};

const ISOMETRY_TOL: f64 = 1e-10;
const ZERO_PATTERN_TOL: f64 = 1e-12;
const NESTING_TOL: f64 = 1e-8;
/// Assembling U* M U from a Hermitian M leaves an asymmetry of a few ulps,
/// far below this acceptance threshold.
const COMPRESSION_HERMITIAN_TOL: f64 = 1e-10;

/// Determinant of a PSD compression, taken as the clamped product of its
/// eigenvalues. An LU determinant of a rank-deficient compression returns
/// roundoff of arbitrary sign, which can dip below a right-hand side that
/// is exactly zero; the eigenvalue product clamps that dust to zero instead.
fn psd_compression_det(c: &ComplexMatrix) -> Result<f64, CheckError> {
    let mu = hermitian_eigenvalues(c, COMPRESSION_HERMITIAN_TOL)?;
    Ok(head_product(&mu, mu.len()))
}

fn require_partial_isometry(u: &ComplexMatrix, n: usize) -> Result<usize, CheckError> {
    if u.rows() != n || u.cols() < 1 || u.cols() > n {
        return Err(CheckError::DimensionMismatch { n1: n, n2: u.rows() });
    }
    let defect = u.orthonormality_defect();
    if defect > ISOMETRY_TOL {
        return Err(CheckError::NotPartialIsometry { defect });
    }
    Ok(u.cols())
}

/// det of U* diag(lambdas) U.
fn compressed_diag_det(lambdas: &[f64], u: &ComplexMatrix) -> Result<f64, CheckError> {
    let mut scaled = u.clone();
    for i in 0..u.rows() {
        for j in 0..u.cols() {
            scaled[(i, j)] = scaled[(i, j)].scale(lambdas[i]);
        }
    }
    psd_compression_det(&u.adjoint_mul(&scaled))
}

/// det(U* D U) >= lambda_m * det(V* D_m V), where V drops U's first column
/// and D_m replaces the leading m diagonal entries by lambda_m. Requires the
/// first column of U to vanish on rows m+1..n.
pub fn partial_isometry_reduction(
    lambdas: &[f64],
    u: &ComplexMatrix,
    m: usize,
    tol: f64,
) -> Result<Report, CheckError> {
    let n = lambdas.len();
    if n == 0
        || lambdas.iter().any(|v| !v.is_finite() || *v < 0.0)
        || lambdas.windows(2).any(|w| w[0] < w[1])
    {
        return Err(CheckError::BadSequence { what: "lambdas" });
    }
    if m < 1 || m > n {
        return Err(CheckError::BadParameter {
            what: "m",
            constraint: "1 <= m <= n",
            got: m,
        });
    }
    let k = require_partial_isometry(u, n)?;
    for row in m..n {
        let size = u[(row, 0)].norm();
        if size > ZERO_PATTERN_TOL {
            return Err(CheckError::ZeroPatternViolated {
                first_bad_row: row + 1,
                size,
            });
        }
    }

    let lhs = compressed_diag_det(lambdas, u)?;
    let lambda_m = lambdas[m - 1];
    let rhs = if k == 1 {
        lambda_m
    } else {
        let v = u.column_slice(1, k);
        let mut capped = lambdas.to_vec();
        for value in capped.iter_mut().take(m) {
            *value = lambda_m;
        }
        lambda_m * compressed_diag_det(&capped, &v)?
    };
    Ok(Report::Bound(BoundReport::chain(
        "partial_isometry_reduction",
        lhs,
        vec![rhs],
        tol,
    )))
}

/// det(X* A X) >= prod lambda_{i_t}(A) for a frame X whose t-th column lies
/// in the span of A's first i_t eigenvectors.
pub fn nested_frame_det_bound(
    a: &ComplexMatrix,
    idx: &IndexSequence,
    frame: &ComplexMatrix,
    tol: f64,
) -> Result<Report, CheckError> {
    let decomp = psd_decomposition(a)?;
    nested_frame_det_bound_with(&decomp, a, idx, frame, tol)
}

/// Same check against a caller-supplied decomposition of `a`, so batch
/// callers can reuse one factorization for many frames.
pub fn nested_frame_det_bound_with(
    decomp: &SpectralDecomposition,
    a: &ComplexMatrix,
    idx: &IndexSequence,
    frame: &ComplexMatrix,
    tol: f64,
) -> Result<Report, CheckError> {
    let n = decomp.eigenvalues.len();
    if idx.n() != n {
        return Err(CheckError::BadIndexSequence {
            indices: idx.indices().to_vec(),
            n,
        });
    }
    let k = idx.len();
    if frame.rows() != n || frame.cols() != k {
        return Err(CheckError::DimensionMismatch { n1: n, n2: frame.rows() });
    }
    let defect = frame.orthonormality_defect();
    if defect > ISOMETRY_TOL {
        return Err(CheckError::NotOrthonormal { defect });
    }
    let coords = decomp.vectors.adjoint_mul(frame);
    for (t, &i_t) in idx.indices().iter().enumerate() {
        let out_of_span: f64 = (i_t..n)
            .map(|row| coords[(row, t)].norm_sqr())
            .sum::<f64>()
            .sqrt();
        if out_of_span > NESTING_TOL {
            return Err(CheckError::FrameNotNested {
                column: t + 1,
                residual: out_of_span,
            });
        }
    }

    let lhs = psd_compression_det(&frame.adjoint_mul(&a.mul(frame)))?;
    let rhs = indexed_product(&decomp.eigenvalues, idx);
    Ok(Report::Bound(BoundReport::chain(
        "nested_frame_det_bound",
        lhs,
        vec![rhs],
        tol,
    )))
}

/// det(U* B U) >= product of the k smallest eigenvalues of B, for any
/// partial isometry U with k columns.
pub fn fan_min_det(b: &ComplexMatrix, u: &ComplexMatrix, tol: f64) -> Result<Report, CheckError> {
    let eigs = psd_eigenvalues(b)?;
    let k = require_partial_isometry(u, eigs.len())?;
    let lhs = psd_compression_det(&u.adjoint_mul(&b.mul(u)))?;
    let rhs = tail_product(&eigs, k);
    Ok(Report::Bound(BoundReport::chain(
        "fan_min_det",
        lhs,
        vec![rhs],
        tol,
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eig::hermitian_eig;
    use num_complex::Complex64;

    const TOL: f64 = 1e-9;

    /// Canonical coordinate columns e_{c+1} for each c in `cols` (0-based).
    fn coordinate_frame(n: usize, cols: &[usize]) -> ComplexMatrix {
        let mut u = ComplexMatrix::zeros(n, cols.len());
        for (j, &c) in cols.iter().enumerate() {
            u[(c, j)] = Complex64::new(1.0, 0.0);
        }
        u
    }

    fn bound(r: &Report) -> &BoundReport {
        match r {
            Report::Bound(b) => b,
            _ => panic!("expected bound report"),
        }
    }

    #[test]
    fn reduction_on_coordinate_isometry() {
        let u = coordinate_frame(3, &[0, 2]);
        let r = partial_isometry_reduction(&[3.0, 2.0, 1.0], &u, 2, TOL).unwrap();
        let r = bound(&r);
        assert_eq!(r.lhs, 3.0);
        assert_eq!(r.rhs_terms[0], 2.0);
        assert!(r.satisfied);
    }

    #[test]
    fn reduction_single_column_is_equality() {
        let u = coordinate_frame(3, &[0]);
        let r = partial_isometry_reduction(&[3.0, 2.0, 1.0], &u, 1, TOL).unwrap();
        let r = bound(&r);
        assert_eq!(r.lhs, 3.0);
        assert_eq!(r.rhs_terms[0], 3.0);
    }

    #[test]
    fn reduction_rejects_pattern_violation() {
        let u = coordinate_frame(3, &[2]);
        assert!(matches!(
            partial_isometry_reduction(&[3.0, 2.0, 1.0], &u, 2, TOL),
            Err(CheckError::ZeroPatternViolated { .. })
        ));
    }

    #[test]
    fn reduction_rejects_unsorted_lambdas() {
        let u = coordinate_frame(2, &[0]);
        assert!(matches!(
            partial_isometry_reduction(&[1.0, 2.0], &u, 1, TOL),
            Err(CheckError::BadSequence { .. })
        ));
    }

    #[test]
    fn nested_frame_eigenvector_equality() {
        let a = ComplexMatrix::diagonal(&[5.0, 3.0, 1.0]);
        let idx = IndexSequence::new(vec![1, 3], 3).unwrap();
        let frame = coordinate_frame(3, &[0, 2]);
        let r = nested_frame_det_bound(&a, &idx, &frame, TOL).unwrap();
        let r = bound(&r);
        assert!((r.lhs - 5.0).abs() < 1e-12);
        assert_eq!(r.rhs_terms[0], 5.0);
    }

    #[test]
    fn nested_frame_identity_matrix() {
        let a = ComplexMatrix::identity(4);
        let idx = IndexSequence::new(vec![2, 3], 4).unwrap();
        let decomp = hermitian_eig(&a, 1e-12).unwrap();
        let frame = crate::generators::nested_frame(&decomp, &idx, 5).unwrap();
        let r = nested_frame_det_bound(&a, &idx, &frame, TOL).unwrap();
        let r = bound(&r);
        assert!((r.lhs - 1.0).abs() < 1e-10);
        assert_eq!(r.rhs_terms[0], 1.0);
    }

    #[test]
    fn nested_frame_rejects_wide_vectors() {
        // Last eigenvector used while I = {1}: out of span.
        let a = ComplexMatrix::diagonal(&[5.0, 3.0, 1.0]);
        let idx = IndexSequence::new(vec![1], 3).unwrap();
        let frame = coordinate_frame(3, &[2]);
        assert!(matches!(
            nested_frame_det_bound(&a, &idx, &frame, TOL),
            Err(CheckError::FrameNotNested { .. })
        ));
    }

    #[test]
    fn fan_min_identity() {
        let b = ComplexMatrix::identity(3);
        let u = coordinate_frame(3, &[1]);
        let r = fan_min_det(&b, &u, TOL).unwrap();
        let r = bound(&r);
        assert_eq!(r.lhs, 1.0);
        assert_eq!(r.rhs_terms[0], 1.0);
    }

    #[test]
    fn fan_min_minimizing_isometry() {
        let b = ComplexMatrix::diagonal(&[3.0, 1.0]);
        let u = coordinate_frame(2, &[1]);
        let r = fan_min_det(&b, &u, TOL).unwrap();
        let r = bound(&r);
        assert_eq!(r.lhs, 1.0);
        assert_eq!(r.rhs_terms[0], 1.0);
        assert_eq!(r.margin, 0.0);
    }

    #[test]
    fn fan_min_rejects_non_isometry() {
        let b = ComplexMatrix::identity(2);
        let mut u = coordinate_frame(2, &[0]);
        u[(0, 0)] = Complex64::new(2.0, 0.0);
        assert!(matches!(
            fan_min_det(&b, &u, TOL),
            Err(CheckError::NotPartialIsometry { .. })
        ));
    }
}
