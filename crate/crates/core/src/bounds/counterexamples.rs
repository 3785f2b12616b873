//! Fixed counterexamples showing which strengthenings of the additive
//! eigenvalue-product bounds fail, plus the fallback forms that survive.
//!
//! The witnesses are 2x2 diagonal projections. Running them through the
//! full eigenvalue pipeline both documents the failure and pins down the
//! exact values, so the reproduction check can compare bit for bit.

use crate::eig::hermitian_eigenvalues;
use crate::error::CheckError;
use crate::matrix::ComplexMatrix;
use crate::report::{BoundReport, IdentityReport, Report};

use super::DEFAULT_BOUND_TOL;

struct Expected {
    name: &'static str,
    lhs: f64,
    rhs: &'static [f64],
    satisfied: bool,
}

/// Frozen values for the four fixed instances.
const EXPECTED: &[Expected] = &[
    // A = B = diag(1,0), I = {1,2}: the mixed product
    // prod (lambda_{i_t}(A) + lambda_{n-t+1}(B)) = (1+0)(0+1) = 1 exceeds
    // lambda_1 lambda_2 (A+B) = 2*0 = 0, so the tentative lower bound fails.
    Expected {
        name: "counterexample/mixed_product",
        lhs: 0.0,
        rhs: &[1.0],
        satisfied: false,
    },
    // A = diag(1,0), B = diag(0,1): lambda_1(A+B) = 1 < 2 = lambda_1(A) +
    // lambda_1(B), so top eigenvalues do not add.
    Expected {
        name: "counterexample/top_eigenvalue",
        lhs: 1.0,
        rhs: &[2.0],
        satisfied: false,
    },
    // Same pair: the Weyl-type fallback lambda_i(A+B) >= lambda_i(A) +
    // lambda_n(B) holds with equality at i = 1 ...
    Expected {
        name: "counterexample/fallback_top",
        lhs: 1.0,
        rhs: &[1.0],
        satisfied: true,
    },
    // ... and with slack at i = 2.
    Expected {
        name: "counterexample/fallback_bottom",
        lhs: 1.0,
        rhs: &[0.0],
        satisfied: true,
    },
];

fn spectra() -> Result<(Vec<f64>, Vec<f64>, Vec<f64>, Vec<f64>), CheckError> {
    let a = ComplexMatrix::diagonal(&[1.0, 0.0]);
    let b = ComplexMatrix::diagonal(&[0.0, 1.0]);
    let ea = hermitian_eigenvalues(&a, 1e-10)?;
    let eb = hermitian_eigenvalues(&b, 1e-10)?;
    let e_same = hermitian_eigenvalues(&a.add(&a), 1e-10)?;
    let e_cross = hermitian_eigenvalues(&a.add(&b), 1e-10)?;
    Ok((ea, eb, e_same, e_cross))
}

/// The four fixed instances, evaluated through the eigenvalue pipeline.
/// The first two reports are genuine violations and come back unsatisfied.
pub fn counterexample_reports(tol: f64) -> Result<Vec<Report>, CheckError> {
    let (ea, eb, e_same, e_cross) = spectra()?;
    let mixed = BoundReport::chain(
        "counterexample/mixed_product",
        e_same[0] * e_same[1],
        vec![(ea[0] + ea[1]) * (ea[1] + ea[0])],
        tol,
    );
    let top = BoundReport::chain(
        "counterexample/top_eigenvalue",
        e_cross[0],
        vec![ea[0] + eb[0]],
        tol,
    );
    let fallback_top = BoundReport::chain(
        "counterexample/fallback_top",
        e_cross[0],
        vec![ea[0] + eb[1]],
        tol,
    );
    let fallback_bottom = BoundReport::chain(
        "counterexample/fallback_bottom",
        e_cross[1],
        vec![ea[1] + eb[1]],
        tol,
    );
    Ok(vec![
        Report::Bound(mixed),
        Report::Bound(top),
        Report::Bound(fallback_top),
        Report::Bound(fallback_bottom),
    ])
}

/// Meta-check: recompute the four instances and compare every value and
/// every satisfied flag against the frozen expectations. The residual is
/// the largest deviation, exactly zero when reproduction is bit for bit.
pub fn reproduce_counterexamples(tol: f64) -> Result<Report, CheckError> {
    let reports = counterexample_reports(DEFAULT_BOUND_TOL)?;
    let mut residual: f64 = 0.0;
    for (report, expected) in reports.iter().zip(EXPECTED) {
        let bound = match report {
            Report::Bound(b) => b,
            _ => unreachable!("counterexample reports are bounds"),
        };
        residual = residual.max((bound.lhs - expected.lhs).abs());
        for (got, want) in bound.rhs_terms.iter().zip(expected.rhs) {
            residual = residual.max((got - want).abs());
        }
        if bound.satisfied != expected.satisfied || bound.check_name != expected.name {
            residual = residual.max(1.0);
        }
    }
    Ok(Report::Identity(IdentityReport::new(
        "reproduce_counterexamples",
        residual,
        1.0,
        tol,
    )))
}
