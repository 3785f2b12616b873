//! Eigenvalues of general complex matrices: Householder reduction to upper
//! Hessenberg form, then shifted QR iteration with Givens rotations.
//!
//! Only eigenvalues are produced (no Schur vectors); the sole consumers are
//! eigenvalue-modulus comparisons, which tolerate 1e-8 relative accuracy.

use num_complex::Complex64;

use crate::error::LinalgError;
use crate::matrix::ComplexMatrix;

const MAX_ITERS_PER_EIGENVALUE: usize = 120;

/// Eigenvalues of a square complex matrix, in no particular order.
pub fn general_eigenvalues(a: &ComplexMatrix) -> Result<Vec<Complex64>, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    match n {
        1 => return Ok(vec![a[(0, 0)]]),
        2 => return Ok(eig2(a[(0, 0)], a[(0, 1)], a[(1, 0)], a[(1, 1)]).to_vec()),
        _ => {}
    }

    let mut h = a.clone();
    hessenberg_in_place(&mut h);

    let scale = h.max_abs().max(1.0);
    let mut values = Vec::with_capacity(n);
    let mut hi = n; // active block is rows/cols lo..hi
    let mut iters = 0usize;
    while hi > 0 {
        if hi == 1 {
            values.push(h[(0, 0)]);
            break;
        }
        // Zero out negligible subdiagonals, then find the active block start.
        let mut lo = hi - 1;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let local = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            if sub <= f64::EPSILON * (local + scale) {
                h[(lo, lo - 1)] = Complex64::new(0.0, 0.0);
                break;
            }
            lo -= 1;
        }

        if lo == hi - 1 {
            values.push(h[(hi - 1, hi - 1)]);
            hi -= 1;
            iters = 0;
            continue;
        }
        if lo == hi - 2 {
            let [l1, l2] = eig2(
                h[(lo, lo)],
                h[(lo, lo + 1)],
                h[(lo + 1, lo)],
                h[(lo + 1, lo + 1)],
            );
            values.push(l1);
            values.push(l2);
            hi -= 2;
            iters = 0;
            continue;
        }

        iters += 1;
        if iters > MAX_ITERS_PER_EIGENVALUE {
            return Err(LinalgError::NoConvergence {
                sweeps: MAX_ITERS_PER_EIGENVALUE,
                off: h[(hi - 1, hi - 2)].norm(),
            });
        }
        let shift = if iters % 20 == 0 {
            // Exceptional shift to break rare limit cycles.
            h[(hi - 1, hi - 1)] + Complex64::new(0.75 * h[(hi - 1, hi - 2)].norm(), 0.0)
        } else {
            wilkinson_shift(&h, hi)
        };
        qr_step(&mut h, lo, hi, shift);
    }
    Ok(values)
}

/// Eigenvalue moduli, descending.
pub fn eigenvalue_moduli(a: &ComplexMatrix) -> Result<Vec<f64>, LinalgError> {
    let mut moduli: Vec<f64> = general_eigenvalues(a)?.iter().map(|z| z.norm()).collect();
    moduli.sort_by(|x, y| y.partial_cmp(x).expect("finite moduli"));
    Ok(moduli)
}

/// Eigenvalues of a 2x2 complex matrix by the quadratic formula.
fn eig2(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> [Complex64; 2] {
    let half_trace = (a + d).scale(0.5);
    let det = a * d - b * c;
    let disc = (half_trace * half_trace - det).sqrt();
    // Pick the larger root first to avoid cancellation, recover the other
    // from the determinant when possible.
    let r1 = if (half_trace + disc).norm() >= (half_trace - disc).norm() {
        half_trace + disc
    } else {
        half_trace - disc
    };
    if r1.norm() > 0.0 {
        [r1, det / r1]
    } else {
        [r1, half_trace.scale(2.0) - r1]
    }
}

fn wilkinson_shift(h: &ComplexMatrix, hi: usize) -> Complex64 {
    let p = hi - 1;
    let [l1, l2] = eig2(h[(p - 1, p - 1)], h[(p - 1, p)], h[(p, p - 1)], h[(p, p)]);
    let target = h[(p, p)];
    if (l1 - target).norm() <= (l2 - target).norm() {
        l1
    } else {
        l2
    }
}

/// Householder reduction to upper Hessenberg form, in place.
fn hessenberg_in_place(h: &mut ComplexMatrix) {
    let n = h.rows();
    for j in 0..n.saturating_sub(2) {
        let mut norm_sq = 0.0;
        for i in j + 1..n {
            norm_sq += h[(i, j)].norm_sqr();
        }
        let norm = norm_sq.sqrt();
        if norm == 0.0 {
            continue;
        }
        let x0 = h[(j + 1, j)];
        let phase = if x0.norm() > 0.0 {
            x0 / x0.norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        // v = x + phase*||x||*e1; reflector P = I - 2 v v*/(v* v).
        let mut v: Vec<Complex64> = (j + 1..n).map(|i| h[(i, j)]).collect();
        v[0] += phase.scale(norm);
        let vnorm_sq: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        if vnorm_sq == 0.0 {
            continue;
        }
        let coef = 2.0 / vnorm_sq;

        // Left multiply: rows j+1..n of all columns.
        for col in j..n {
            let mut dot = Complex64::new(0.0, 0.0);
            for (k, vi) in v.iter().enumerate() {
                dot += vi.conj() * h[(j + 1 + k, col)];
            }
            let dot = dot.scale(coef);
            for (k, vi) in v.iter().enumerate() {
                let delta = vi * dot;
                h[(j + 1 + k, col)] -= delta;
            }
        }
        // Right multiply: columns j+1..n of all rows.
        for row in 0..n {
            let mut dot = Complex64::new(0.0, 0.0);
            for (k, vi) in v.iter().enumerate() {
                dot += h[(row, j + 1 + k)] * vi;
            }
            let dot = dot.scale(coef);
            for (k, vi) in v.iter().enumerate() {
                let delta = dot * vi.conj();
                h[(row, j + 1 + k)] -= delta;
            }
        }
        for i in j + 2..n {
            h[(i, j)] = Complex64::new(0.0, 0.0);
        }
    }
}

/// Complex Givens pair (c real, s) with G = [[c, s], [-conj(s), c]] mapping
/// (a, b) to (r, 0).
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    if b.norm() == 0.0 {
        return (1.0, Complex64::new(0.0, 0.0));
    }
    if a.norm() == 0.0 {
        return (0.0, b.conj() / b.norm());
    }
    let denom = (a.norm_sqr() + b.norm_sqr()).sqrt();
    let c = a.norm() / denom;
    let s = (a / a.norm()) * b.conj() / denom;
    (c, s)
}

/// One explicit-shift QR step on the active Hessenberg block `lo..hi`.
fn qr_step(h: &mut ComplexMatrix, lo: usize, hi: usize, shift: Complex64) {
    let n = h.cols();
    for i in lo..hi {
        h[(i, i)] -= shift;
    }
    let mut rotations = Vec::with_capacity(hi - lo - 1);
    for i in lo..hi - 1 {
        let (c, s) = givens(h[(i, i)], h[(i + 1, i)]);
        for col in i..n {
            let top = h[(i, col)];
            let bot = h[(i + 1, col)];
            h[(i, col)] = top.scale(c) + s * bot;
            h[(i + 1, col)] = -s.conj() * top + bot.scale(c);
        }
        rotations.push((c, s));
    }
    for (offset, &(c, s)) in rotations.iter().enumerate() {
        let i = lo + offset;
        let row_hi = (i + 2).min(hi);
        for row in 0..row_hi {
            let left = h[(row, i)];
            let right = h[(row, i + 1)];
            h[(row, i)] = left.scale(c) + right * s.conj();
            h[(row, i + 1)] = -left * s + right.scale(c);
        }
    }
    for i in lo..hi {
        h[(i, i)] += shift;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sorted_moduli(mut v: Vec<f64>) -> Vec<f64> {
        v.sort_by(|x, y| y.partial_cmp(x).unwrap());
        v
    }

    #[test]
    fn triangular_eigenvalues_are_the_diagonal() {
        let a = ComplexMatrix::new(3, 3, vec![
            c(2.0, 1.0), c(5.0, 0.0), c(-1.0, 2.0),
            c(0.0, 0.0), c(-3.0, 0.5), c(4.0, 0.0),
            c(0.0, 0.0), c(0.0, 0.0), c(0.25, -1.0),
        ])
        .unwrap();
        let moduli = eigenvalue_moduli(&a).unwrap();
        let expected = sorted_moduli(vec![c(2.0, 1.0).norm(), c(-3.0, 0.5).norm(), c(0.25, -1.0).norm()]);
        for (got, want) in moduli.iter().zip(&expected) {
            assert!((got - want).abs() < 1e-10, "got {got}, want {want}");
        }
    }

    #[test]
    fn known_nonnormal_4x4() {
        // Companion matrix of z^4 - 1: eigenvalues are the 4th roots of unity.
        let a = ComplexMatrix::new(4, 4, vec![
            c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0),
            c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0),
            c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0),
            c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0),
        ])
        .unwrap();
        for m in eigenvalue_moduli(&a).unwrap() {
            assert!((m - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn matches_hermitian_solver_on_hermitian_input() {
        let a = ComplexMatrix::new(3, 3, vec![
            c(4.0, 0.0), c(1.0, 1.0), c(0.5, 0.0),
            c(1.0, -1.0), c(3.0, 0.0), c(0.0, 2.0),
            c(0.5, 0.0), c(0.0, -2.0), c(5.0, 0.0),
        ])
        .unwrap();
        let herm = crate::eig::hermitian_eigenvalues(&a, 1e-12).unwrap();
        let general = eigenvalue_moduli(&a).unwrap();
        let herm_moduli = sorted_moduli(herm.iter().map(|v| v.abs()).collect());
        for (g, h) in general.iter().zip(&herm_moduli) {
            assert!((g - h).abs() < 1e-8 * (1.0 + h.abs()));
        }
    }
}
