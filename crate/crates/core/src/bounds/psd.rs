//! Eigenvalue-product inequalities for sums of positive semidefinite
//! matrices: the Fiedler, Oppenheim, Minkowski, Hartfiel, and Lidskii
//! classics, the main indexed bounds, and their corollaries.

use crate::error::CheckError;
use crate::index_seq::IndexSequence;
use crate::matrix::ComplexMatrix;
use crate::products::{clamp_spectrum, head_product, indexed_product, tail_product};
use crate::report::{BoundReport, Report};

use super::{cross_coefficient, psd_decomposition, psd_eigenvalues, require_same_n};

/// Eigenvalues obtained through the solved product A^{1/2} B A^{1/2} carry
/// the factorization's roundoff, and on full index sequences both links of
/// the Lidskii chain are exact equalities, so the margin there is pure
/// noise. Comparisons involving those eigenvalues get this accuracy floor.
const SIMILARITY_EIG_TOL: f64 = 1e-8;

fn validate_k(k: usize, n: usize) -> Result<(), CheckError> {
    if k < 1 || k > n {
        return Err(CheckError::BadParameter {
            what: "k",
            constraint: "1 <= k <= n",
            got: k,
        });
    }
    Ok(())
}

/// Eigenvalues of A, B, and A+B, all validated PSD and descending.
fn summed_spectra(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
) -> Result<(usize, Vec<f64>, Vec<f64>, Vec<f64>), CheckError> {
    let n = require_same_n(a, b)?;
    let ea = psd_eigenvalues(a)?;
    let eb = psd_eigenvalues(b)?;
    let es = psd_eigenvalues(&a.add(b).hermitian_part())?;
    Ok((n, ea, eb, es))
}

/// prod_{t=k}^n of lambda_t(A+B) >= prod [lambda_t(A) + lambda_t(B)]
///                                >= prod lambda_t(A) + prod lambda_t(B).
pub fn fiedler_chain(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    k: usize,
    tol: f64,
) -> Result<Report, CheckError> {
    let (n, ea, eb, es) = summed_spectra(a, b)?;
    validate_k(k, n)?;
    let m = n - k + 1;
    let ca = clamp_spectrum(&ea);
    let cb = clamp_spectrum(&eb);
    let lhs = tail_product(&es, m);
    let mid: f64 = (k - 1..n).map(|t| ca[t] + cb[t]).product();
    let last = tail_product(&ea, m) + tail_product(&eb, m);
    Ok(Report::Bound(BoundReport::chain(
        "fiedler_chain",
        lhs,
        vec![mid, last],
        tol,
    )))
}

fn tail_power_report(
    name: &str,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    k: usize,
    tol: f64,
) -> Result<Report, CheckError> {
    let (n, ea, eb, es) = summed_spectra(a, b)?;
    validate_k(k, n)?;
    let m = n - k + 1;
    let root = 1.0 / m as f64;
    let lhs = tail_product(&es, m).powf(root);
    let rhs = tail_product(&ea, m).powf(root) + tail_product(&eb, m).powf(root);
    Ok(Report::Bound(BoundReport::chain(name, lhs, vec![rhs], tol)))
}

/// [prod_{t=k}^n lambda_t(A+B)]^{1/(n-k+1)} >= the same power of A's tail
/// product plus the same power of B's.
pub fn oppenheim_tail_power(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    k: usize,
    tol: f64,
) -> Result<Report, CheckError> {
    tail_power_report("oppenheim_tail_power", a, b, k, tol)
}

/// det(A+B)^{1/n} >= det(A)^{1/n} + det(B)^{1/n}; the k=1 tail power.
pub fn minkowski_det(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> Result<Report, CheckError> {
    tail_power_report("minkowski_det", a, b, 1, tol)
}

/// det(A+B) >= det A + det B + (2^n - 2) sqrt(det A det B).
pub fn hartfiel_det(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> Result<Report, CheckError> {
    let (n, ea, eb, es) = summed_spectra(a, b)?;
    let det_s = head_product(&es, n);
    let det_a = head_product(&ea, n);
    let det_b = head_product(&eb, n);
    let rhs = det_a + det_b + cross_coefficient(n) * (det_a * det_b).sqrt();
    Ok(Report::Bound(BoundReport::chain(
        "hartfiel_det",
        det_s,
        vec![rhs],
        tol,
    )))
}

/// Two-sided product bound for lambda(AB):
/// prod lambda_{i_t}(A) lambda_t(B) >= prod lambda_{i_t}(AB)
///                                  >= prod lambda_{i_t}(A) lambda_{n-t+1}(B).
/// lambda(AB) is evaluated on the Hermitian A^{1/2} B A^{1/2}.
pub fn lidskii_product(
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
    let da = psd_decomposition(a)?;
    let eb_check = psd_eigenvalues(b)?;
    let ca = clamp_spectrum(&da.eigenvalues);
    let cb = clamp_spectrum(&eb_check);

    let mut root = da.vectors.clone();
    for j in 0..n {
        let r = da.eigenvalues[j].max(0.0).sqrt();
        for i in 0..n {
            root[(i, j)] = root[(i, j)].scale(r);
        }
    }
    let root = root.mul(&da.vectors.adjoint());
    let product = root.mul(&b.hermitian_part()).mul(&root);
    let eigs_ab = crate::eig::hermitian_eigenvalues(&product, SIMILARITY_EIG_TOL)?;

    let mut upper = 1.0;
    let mut lower = 1.0;
    for (t, &i_t) in idx.indices().iter().enumerate() {
        upper *= ca[i_t - 1] * cb[t];
        lower *= ca[i_t - 1] * cb[n - 1 - t];
    }
    let mid = indexed_product(&eigs_ab, idx);
    Ok(Report::Bound(BoundReport::chain(
        "lidskii_product",
        upper,
        vec![mid, lower],
        tol.max(SIMILARITY_EIG_TOL),
    )))
}

/// The indexed main bounds, reported as three linked checks: the power form,
/// the three-term form, and the bridge showing the power form implies it.
pub fn main_bounds(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    idx: &IndexSequence,
    tol: f64,
) -> Result<Vec<Report>, CheckError> {
    let (n, ea, eb, es) = summed_spectra(a, b)?;
    if idx.n() != n {
        return Err(CheckError::BadIndexSequence {
            indices: idx.indices().to_vec(),
            n,
        });
    }
    let k = idx.len();
    let root = 1.0 / k as f64;
    let lhs_product = indexed_product(&es, idx);
    let x = indexed_product(&ea, idx);
    let y = tail_product(&eb, k);

    let power_rhs = x.powf(root) + y.powf(root);
    let power = BoundReport::chain(
        "main_bounds/power_form",
        lhs_product.powf(root),
        vec![power_rhs],
        tol,
    );

    let three_rhs = x + y + cross_coefficient(k) * (x * y).sqrt();
    let three = BoundReport::chain("main_bounds/three_term", lhs_product, vec![three_rhs], tol);

    let bridge = BoundReport::chain(
        "main_bounds/power_dominates_three_term",
        power_rhs.powi(k as i32),
        vec![three_rhs],
        tol,
    );
    Ok(vec![
        Report::Bound(power),
        Report::Bound(three),
        Report::Bound(bridge),
    ])
}

/// Head power form: the k largest eigenvalues of the sum against the k
/// largest of A and the k smallest of B.
pub fn head_tail_power(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    k: usize,
    tol: f64,
) -> Result<Report, CheckError> {
    let (n, ea, eb, es) = summed_spectra(a, b)?;
    validate_k(k, n)?;
    let root = 1.0 / k as f64;
    let lhs = head_product(&es, k).powf(root);
    let rhs = head_product(&ea, k).powf(root) + tail_product(&eb, k).powf(root);
    Ok(Report::Bound(BoundReport::chain(
        "head_tail_power",
        lhs,
        vec![rhs],
        tol,
    )))
}

/// Lower bound on the product of two selected eigenvalues of the sum.
pub fn pairwise_bound(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    i: usize,
    j: usize,
    tol: f64,
) -> Result<Report, CheckError> {
    let (n, ea, eb, es) = summed_spectra(a, b)?;
    if i < 1 || i >= j || j > n {
        return Err(CheckError::BadIndices { i, j, n });
    }
    let ca = clamp_spectrum(&ea);
    let cb = clamp_spectrum(&eb);
    let cs = clamp_spectrum(&es);
    let lhs = cs[i - 1] * cs[j - 1];
    let pa = ca[i - 1] * ca[j - 1];
    let pb = cb[n - 2] * cb[n - 1];
    let rhs = pa + pb + 2.0 * (pa * pb).sqrt();
    Ok(Report::Bound(BoundReport::chain(
        "pairwise_bound",
        lhs,
        vec![rhs],
        tol,
    )))
}

/// The two tail-chain corollaries: the aligned tail chain and the
/// head-versus-tail three-term bound.
pub fn tail_chain(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    k: usize,
    tol: f64,
) -> Result<Vec<Report>, CheckError> {
    let (n, ea, eb, es) = summed_spectra(a, b)?;
    validate_k(k, n)?;
    let ca = clamp_spectrum(&ea);
    let cb = clamp_spectrum(&eb);

    let lhs_tail = tail_product(&es, k);
    let mid: f64 = (n - k..n).map(|t| ca[t] + cb[t]).product();
    let pa = tail_product(&ea, k);
    let pb = tail_product(&eb, k);
    let last = pa + pb + cross_coefficient(k) * (pa * pb).sqrt();
    let tail = BoundReport::chain("tail_chain/tail", lhs_tail, vec![mid, last], tol);

    let ha = head_product(&ea, k);
    let head_rhs = ha + pb + cross_coefficient(k) * (ha * pb).sqrt();
    let head = BoundReport::chain("tail_chain/head", head_product(&es, k), vec![head_rhs], tol);

    Ok(vec![Report::Bound(tail), Report::Bound(head)])
}
