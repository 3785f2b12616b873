//! Product bound for nonnegative scalar sequences, the arithmetic-geometric
//! engine behind every three-term matrix inequality here.

use crate::error::CheckError;
use crate::report::{BoundReport, Report};

use super::cross_coefficient;

/// For nonnegative sequences a, b of length n, checks
/// `prod(a_t + b_t) >= prod(a) + prod(b) + (2^n - 2) sqrt(prod(a) prod(b))`
/// and its power form `(x^{1/n} + y^{1/n})^n >= x + y + (2^n - 2) sqrt(xy)`
/// for x = prod(a), y = prod(b).
pub fn scalar_product_bound(a: &[f64], b: &[f64], tol: f64) -> Result<Vec<Report>, CheckError> {
    if a.len() != b.len() {
        return Err(CheckError::LengthMismatch { a: a.len(), b: b.len() });
    }
    if a.is_empty() {
        return Err(CheckError::BadParameter {
            what: "sequence length",
            constraint: "n >= 1",
            got: 0,
        });
    }
    for &v in a.iter().chain(b) {
        if !(v >= 0.0) {
            return Err(CheckError::NegativeInput { value: v });
        }
    }
    let n = a.len();
    let lhs: f64 = a.iter().zip(b).map(|(x, y)| x + y).product();
    let x: f64 = a.iter().product();
    let y: f64 = b.iter().product();
    let cross = cross_coefficient(n) * (x * y).sqrt();
    let main = BoundReport::chain("scalar_product_bound", lhs, vec![x + y + cross], tol);

    let root_sum = x.powf(1.0 / n as f64) + y.powf(1.0 / n as f64);
    let power = BoundReport::chain(
        "scalar_product_bound/power_form",
        root_sum.powi(n as i32),
        vec![x + y + cross],
        tol,
    );
    Ok(vec![Report::Bound(main), Report::Bound(power)])
}
