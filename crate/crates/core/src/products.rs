//! Products of selected eigenvalues, in plain and log-domain forms.
//!
//! Entries below `1e-12` times the largest entry are clamped to exact zero
//! before multiplying, so products over near-singular spectra come out as an
//! exact 0 instead of underflow dust.

use crate::index_seq::IndexSequence;

const ZERO_CLAMP_RELATIVE: f64 = 1e-12;

/// A nonnegative product carried as (zero flag, log magnitude).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogProduct {
    pub is_zero: bool,
    pub log_magnitude: f64,
}

impl LogProduct {
    pub fn one() -> Self {
        Self { is_zero: false, log_magnitude: 0.0 }
    }

    pub fn value(&self) -> f64 {
        if self.is_zero {
            0.0
        } else {
            self.log_magnitude.exp()
        }
    }

    /// k-th root, staying in log domain.
    pub fn root(&self, k: usize) -> Self {
        assert!(k >= 1);
        Self {
            is_zero: self.is_zero,
            log_magnitude: self.log_magnitude / k as f64,
        }
    }
}

/// Clamps entries of a descending nonnegative sequence: anything at or below
/// `1e-12 * max(values[0], 0)` becomes exactly zero (this also flushes
/// negative roundoff dust left by the eigensolver).
pub fn clamp_spectrum(values: &[f64]) -> Vec<f64> {
    let top = values.first().copied().unwrap_or(0.0).max(0.0);
    let threshold = ZERO_CLAMP_RELATIVE * top;
    values
        .iter()
        .map(|&v| if v <= threshold { 0.0 } else { v })
        .collect()
}

fn product(values: impl Iterator<Item = f64>) -> f64 {
    values.fold(1.0, |acc, v| acc * v)
}

fn log_product(values: impl Iterator<Item = f64>) -> LogProduct {
    let mut log_magnitude = 0.0;
    for v in values {
        if v == 0.0 {
            return LogProduct { is_zero: true, log_magnitude: f64::NEG_INFINITY };
        }
        log_magnitude += v.ln();
    }
    LogProduct { is_zero: false, log_magnitude }
}

/// ∏ values[i_t] over the (1-based) indices of `idx`.
pub fn indexed_product(values: &[f64], idx: &IndexSequence) -> f64 {
    product(idx.select(&clamp_spectrum(values)).into_iter())
}

pub fn indexed_log_product(values: &[f64], idx: &IndexSequence) -> LogProduct {
    log_product(idx.select(&clamp_spectrum(values)).into_iter())
}

/// Product of the k largest entries (the sequence is descending).
pub fn head_product(values: &[f64], k: usize) -> f64 {
    assert!(k <= values.len());
    product(clamp_spectrum(values).into_iter().take(k))
}

/// Product of the k smallest entries.
pub fn tail_product(values: &[f64], k: usize) -> f64 {
    assert!(k <= values.len());
    let n = values.len();
    product(clamp_spectrum(values).into_iter().skip(n - k))
}

pub fn head_log_product(values: &[f64], k: usize) -> LogProduct {
    assert!(k <= values.len());
    log_product(clamp_spectrum(values).into_iter().take(k))
}

pub fn tail_log_product(values: &[f64], k: usize) -> LogProduct {
    assert!(k <= values.len());
    let n = values.len();
    log_product(clamp_spectrum(values).into_iter().skip(n - k))
}
