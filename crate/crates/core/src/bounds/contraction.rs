//! Hua-Marcus inequalities for contractions and their reversals, plus the
//! two matrix identities the proofs run through.

use crate::det::{determinant, solve_hermitian};
use crate::eig::hermitian_eigenvalues;
use crate::error::CheckError;
use crate::index_seq::IndexSequence;
use crate::matrix::ComplexMatrix;
use crate::products::{indexed_product, tail_product};
use crate::report::{BoundReport, IdentityReport, Report};
use crate::schur::eigenvalue_moduli;
use crate::singular::singular_values;

use super::{
    abs_det_squared, cross_coefficient, hermitian_determinant, require_contraction,
    require_same_n, require_strict_contraction,
};

/// Accuracy floor for reports that depend on general (non-Hermitian)
/// eigenvalue moduli.
const GENERAL_EIG_TOL: f64 = 1e-8;

/// Hermitian-symmetry slack for matrices assembled from linear solves.
const SOLVED_HERMITIAN_TOL: f64 = 1e-8;

fn identity(n: usize) -> ComplexMatrix {
    ComplexMatrix::identity(n)
}

/// I - A*B.
fn one_minus_pair(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    identity(a.rows()).sub(&a.adjoint_mul(b))
}

/// A A* (the outer Gram matrix).
fn outer_gram(a: &ComplexMatrix) -> ComplexMatrix {
    a.mul(&a.adjoint())
}

/// H = (A-B)* (I - AA*)^{-1} (A-B), assembled from its explicit Hermitian
/// form.
fn hua_h_matrix(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<ComplexMatrix, CheckError> {
    let diff = a.sub(b);
    let solved = solve_hermitian(&identity(a.rows()).sub(&outer_gram(a)), &diff)?;
    Ok(diff.adjoint_mul(&solved))
}

/// Residual of F + H = (I - B*A)(I - A*A)^{-1}(I - A*B) for strict
/// contractions, with F = I - B*B.
pub fn hua_identity_residual(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    tol: f64,
) -> Result<Report, CheckError> {
    let n = require_same_n(a, b)?;
    require_strict_contraction(a)?;
    require_strict_contraction(b)?;
    let f = identity(n).sub(&b.gram());
    let lhs = f.add(&hua_h_matrix(a, b)?);
    let solved = solve_hermitian(&identity(n).sub(&a.gram()), &one_minus_pair(a, b))?;
    let rhs = identity(n).sub(&b.adjoint_mul(a)).mul(&solved);
    let residual = lhs.max_abs_diff(&rhs);
    let scale = lhs.max_abs().max(rhs.max_abs());
    Ok(Report::Identity(IdentityReport::new(
        "hua_identity_residual",
        residual,
        scale,
        tol,
    )))
}

/// Residual of I + A*A = P + Q with P = (A+B)*(I+BB*)^{-1}(A+B) and
/// Q = (I-A*B)(I+B*B)^{-1}(I-A*B)*; holds for arbitrary square A, B.
pub fn sum_identity_residual(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    tol: f64,
) -> Result<Report, CheckError> {
    let n = require_same_n(a, b)?;
    let sum = a.add(b);
    let p = sum.adjoint_mul(&solve_hermitian(&identity(n).add(&outer_gram(b)), &sum)?);
    let m = one_minus_pair(a, b);
    let q = m.mul(&solve_hermitian(&identity(n).add(&b.gram()), &m.adjoint())?);
    let lhs = identity(n).add(&a.gram());
    let rhs = p.add(&q);
    let residual = lhs.max_abs_diff(&rhs);
    let scale = lhs.max_abs().max(rhs.max_abs());
    Ok(Report::Identity(IdentityReport::new(
        "sum_identity_residual",
        residual,
        scale,
        tol,
    )))
}

/// |det(I-A*B)|^2 >= det(I-A*A)det(I-B*B) + |det(A-B)|^2, chained with the
/// weaker form that drops the difference term.
pub fn hua_det_inequality(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    tol: f64,
) -> Result<Report, CheckError> {
    let n = require_same_n(a, b)?;
    require_strict_contraction(a)?;
    require_strict_contraction(b)?;
    let lhs = abs_det_squared(&one_minus_pair(a, b))?;
    let weak = hermitian_determinant(&identity(n).sub(&a.gram()))?
        * hermitian_determinant(&identity(n).sub(&b.gram()))?;
    let strong = weak + abs_det_squared(&a.sub(b))?;
    Ok(Report::Bound(BoundReport::chain(
        "hua_det_inequality",
        lhs,
        vec![strong, weak],
        tol,
    )))
}

/// |det(I-A*B)|^2 <= det(I+A*A)det(I+B*B) - |det(A+B)|^2, stated as the
/// descending chain upper >= lower; no contraction hypothesis.
pub fn hua_reversal_det(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    tol: f64,
) -> Result<Report, CheckError> {
    let n = require_same_n(a, b)?;
    let upper = hermitian_determinant(&identity(n).add(&a.gram()))?
        * hermitian_determinant(&identity(n).add(&b.gram()))?
        - abs_det_squared(&a.add(b))?;
    let lower = abs_det_squared(&one_minus_pair(a, b))?;
    Ok(Report::Bound(BoundReport::chain(
        "hua_reversal_det",
        upper,
        vec![lower],
        tol,
    )))
}

/// The Marcus tail bounds for contractions: the eigenvalue-modulus form, the
/// stronger singular-value form, and the Weyl tail relation between them.
pub fn marcus_bounds(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    k: usize,
    tol: f64,
) -> Result<Vec<Report>, CheckError> {
    let n = require_same_n(a, b)?;
    if k < 1 || k > n {
        return Err(CheckError::BadParameter {
            what: "k",
            constraint: "1 <= k <= n",
            got: k,
        });
    }
    require_contraction(a)?;
    require_contraction(b)?;
    let m = one_minus_pair(a, b);
    let sigmas = singular_values(&m)?;
    let moduli = eigenvalue_moduli(&m)?;
    let ga = hermitian_eigenvalues(&a.gram(), 1e-10)?;
    let gb = hermitian_eigenvalues(&b.gram(), 1e-10)?;
    let rhs: f64 = (0..k)
        .map(|t| (1.0 - ga[t]).max(0.0) * (1.0 - gb[t]).max(0.0))
        .product();

    let eigen_tol = tol.max(GENERAL_EIG_TOL);
    let eigen = BoundReport::chain(
        "marcus_bounds/eigen_form",
        tail_product(&moduli, k).powi(2),
        vec![rhs],
        eigen_tol,
    );
    let singular = BoundReport::chain(
        "marcus_bounds/singular_form",
        tail_product(&sigmas, k).powi(2),
        vec![rhs],
        tol,
    );
    let weyl = BoundReport::chain(
        "marcus_bounds/weyl_tail",
        tail_product(&moduli, k),
        vec![tail_product(&sigmas, k)],
        eigen_tol,
    );
    Ok(vec![
        Report::Bound(eigen),
        Report::Bound(singular),
        Report::Bound(weyl),
    ])
}

/// The indexed strengthening of the Marcus bound for strict contractions:
/// prod sigma^2_{i_t}(I-A*B) >= T1 + T2 + T3.
pub fn contraction_main_bound(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    idx: &IndexSequence,
    tol: f64,
) -> Result<Report, CheckError> {
    let n = require_same_n(a, b)?;
    if idx.n() != n {
        return Err(CheckError::BadIndexSequence {
            indices: idx.indices().to_vec(),
            n,
        });
    }
    require_strict_contraction(a)?;
    require_strict_contraction(b)?;
    let k = idx.len();
    let sigmas_m = singular_values(&one_minus_pair(a, b))?;
    let lhs = indexed_product(&sigmas_m, idx).powi(2);

    let ga = hermitian_eigenvalues(&a.gram(), 1e-10)?;
    let gb = hermitian_eigenvalues(&b.gram(), 1e-10)?;
    let f_eigs = hermitian_eigenvalues(&identity(n).sub(&b.gram()), 1e-10)?;
    let h_eigs = hermitian_eigenvalues(&hua_h_matrix(a, b)?, SOLVED_HERMITIAN_TOL)?;
    let sig_diff = singular_values(&a.sub(b))?;

    let mut t1 = 1.0;
    let mut t2 = 1.0;
    let mut t3 = 1.0;
    for (t, &i_t) in idx.indices().iter().enumerate() {
        let head_a = (1.0 - ga[t]).max(0.0);
        t1 *= head_a * (1.0 - gb[n - i_t]).max(0.0);
        t2 *= head_a * sig_diff[n - 1 - t].powi(2) / (1.0 - ga[n - 1 - t]);
        t3 *= head_a * (f_eigs[i_t - 1].max(0.0) * h_eigs[n - 1 - t].max(0.0)).sqrt();
    }
    let rhs = t1 + t2 + cross_coefficient(k) * t3;
    Ok(Report::Bound(BoundReport::chain(
        "contraction_main_bound",
        lhs,
        vec![rhs],
        tol,
    )))
}

/// Full-size case of the indexed strengthening: the determinant form with
/// the (2^n - 2) cross term.
pub fn hua_strengthened_det(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    tol: f64,
) -> Result<Report, CheckError> {
    let n = require_same_n(a, b)?;
    require_strict_contraction(a)?;
    require_strict_contraction(b)?;
    let lhs = abs_det_squared(&one_minus_pair(a, b))?;
    let da = hermitian_determinant(&identity(n).sub(&a.gram()))?.max(0.0);
    let db = hermitian_determinant(&identity(n).sub(&b.gram()))?.max(0.0);
    let abs_det_diff = determinant(&a.sub(b))?.norm();
    let rhs = da * db
        + abs_det_diff.powi(2)
        + cross_coefficient(n) * (da * db).sqrt() * abs_det_diff;
    Ok(Report::Bound(BoundReport::chain(
        "hua_strengthened_det",
        lhs,
        vec![rhs],
        tol,
    )))
}

/// Reversal of the indexed bound, for arbitrary square A, B:
/// prod sigma^2_{i_t}(I-A*B) <= prod [1+lambda_{i_t}(A*A)][1+lambda_t(B*B)]
///   - prod sigma^2_{n-t+1}(A+B)
///   - (2^k-2) prod sigma_{i_t}(I-A*B) sigma_{n-t+1}(A+B).
pub fn reversal_bound(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    idx: &IndexSequence,
    tol: f64,
) -> Result<Report, CheckError> {
    let n = require_same_n(a, b)?;
    if idx.n() != n {
        return Err(CheckError::BadIndexSequence {
            indices: idx.indices().to_vec(),
            n,
        });
    }
    let k = idx.len();
    let sig_m = singular_values(&one_minus_pair(a, b))?;
    let sig_s = singular_values(&a.add(b))?;
    let ga = hermitian_eigenvalues(&a.gram(), 1e-10)?;
    let gb = hermitian_eigenvalues(&b.gram(), 1e-10)?;

    let mut term1 = 1.0;
    let mut term3 = 1.0;
    for (t, &i_t) in idx.indices().iter().enumerate() {
        term1 *= (1.0 + ga[i_t - 1]) * (1.0 + gb[t]);
        term3 *= sig_m[i_t - 1] * sig_s[n - 1 - t];
    }
    let term2 = tail_product(&sig_s, k).powi(2);
    let upper = term1 - term2 - cross_coefficient(k) * term3;
    let lower = indexed_product(&sig_m, idx).powi(2);
    Ok(Report::Bound(BoundReport::chain(
        "reversal_bound",
        upper,
        vec![lower],
        tol,
    )))
}

/// Determinant case of the reversal, chained with its weaker form:
/// upper_weak >= upper_strong >= |det(I-A*B)|^2.
pub fn reversal_det(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> Result<Report, CheckError> {
    let n = require_same_n(a, b)?;
    let upper_weak = hermitian_determinant(&identity(n).add(&a.gram()))?
        * hermitian_determinant(&identity(n).add(&b.gram()))?
        - abs_det_squared(&a.add(b))?;
    let abs_det_m = determinant(&one_minus_pair(a, b))?.norm();
    let abs_det_s = determinant(&a.add(b))?.norm();
    let upper_strong = upper_weak - cross_coefficient(n) * abs_det_m * abs_det_s;
    Ok(Report::Bound(BoundReport::chain(
        "reversal_det",
        upper_weak,
        vec![upper_strong, abs_det_m.powi(2)],
        tol,
    )))
}
