//! Seeded instance generation: PSD matrices with prescribed spectra, strict
//! contractions, patterned partial isometries, and nested orthonormal frames.
//!
//! Everything is a pure function of (seed, parameters). Campaign trials derive
//! their seeds with [`derive_seed`], so any trial can be replayed in isolation
//! and parallel scheduling cannot change the result.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eig::SpectralDecomposition;
use crate::index_seq::IndexSequence;
use crate::matrix::ComplexMatrix;
use crate::singular::sigma_max;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("prescribed spectrum must be descending and nonnegative, got {0:?}")]
    BadSpectrum(Vec<f64>),

    #[error("prescribed spectrum has {got} values for dimension {n}")]
    SpectrumLengthMismatch { n: usize, got: usize },

    #[error("contraction margin delta must lie in (0,1), got {0}")]
    BadDelta(f64),

    #[error("dimension must be at least 1")]
    BadDimension,

    #[error("pattern row cap m={m} is infeasible for dimension {n} (need 1 <= m <= n)")]
    InfeasiblePattern { m: usize, n: usize },

    #[error("isometry columns k={k} exceed dimension {n}")]
    TooManyColumns { k: usize, n: usize },

    #[error("degenerate draw persisted through {0} attempts")]
    DegenerateDraw(usize),
}

/// Matrix entry field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Field {
    Real,
    Complex,
}

/// Eigenvalue profile for [`random_psd`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpectrumMode {
    Uniform,
    Clustered,
    RankDeficient,
    Prescribed(Vec<f64>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenConfig {
    pub seed: u64,
    pub n: usize,
    pub field: Field,
    pub delta: f64,
    pub spectrum: SpectrumMode,
}

impl GenConfig {
    pub fn new(seed: u64, n: usize) -> Self {
        Self {
            seed,
            n,
            field: Field::Complex,
            delta: 0.05,
            spectrum: SpectrumMode::Uniform,
        }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.n == 0 {
            return Err(GenError::BadDimension);
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(GenError::BadDelta(self.delta));
        }
        if let SpectrumMode::Prescribed(values) = &self.spectrum {
            if values.len() != self.n {
                return Err(GenError::SpectrumLengthMismatch {
                    n: self.n,
                    got: values.len(),
                });
            }
            if values.iter().any(|v| !v.is_finite() || *v < 0.0)
                || values.windows(2).any(|w| w[0] < w[1])
            {
                return Err(GenError::BadSpectrum(values.clone()));
            }
        }
        Ok(())
    }
}

/// FNV-1a over the bytes of a check name; stable across platforms.
fn fnv1a(text: &str) -> u64 {
    let mut hash = 0xcbf29ce484222325u64;
    for byte in text.bytes() {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    hash
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Seed for the (check, n, trial) stream of a campaign with the given master
/// seed. Mixing through splitmix64 keeps nearby trials statistically
/// unrelated.
pub fn derive_seed(master_seed: u64, check_name: &str, n: usize, trial: u64) -> u64 {
    let mut state = master_seed ^ fnv1a(check_name);
    let a = splitmix64(&mut state);
    state ^= (n as u64).wrapping_mul(0x9e3779b97f4a7c15);
    let b = splitmix64(&mut state);
    state ^= trial;
    let c = splitmix64(&mut state);
    a ^ b.rotate_left(21) ^ c.rotate_left(42)
}

pub fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Standard normal samples by the Box-Muller transform.
pub struct NormalSource<'a, R: Rng> {
    rng: &'a mut R,
    spare: Option<f64>,
}

impl<'a, R: Rng> NormalSource<'a, R> {
    pub fn new(rng: &'a mut R) -> Self {
        Self { rng, spare: None }
    }

    pub fn sample(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        // u1 in (0,1] so the log is finite.
        let u1: f64 = 1.0 - self.rng.gen::<f64>();
        let u2: f64 = self.rng.gen();
        let radius = (-2.0 * u1.ln()).sqrt();
        let angle = 2.0 * std::f64::consts::PI * u2;
        self.spare = Some(radius * angle.sin());
        radius * angle.cos()
    }

    pub fn sample_complex(&mut self, field: Field) -> Complex64 {
        match field {
            Field::Real => Complex64::new(self.sample(), 0.0),
            Field::Complex => Complex64::new(self.sample(), self.sample()),
        }
    }
}

/// Gaussian matrix with iid entries (complex: independent re/im normals).
pub fn gaussian_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, field: Field) -> ComplexMatrix {
    let mut normals = NormalSource::new(rng);
    let mut m = ComplexMatrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m[(i, j)] = normals.sample_complex(field);
        }
    }
    m
}

/// Two-pass Gram-Schmidt; `None` when a column degenerates (to let the
/// caller redraw). The first column is only ever rescaled, so zero patterns
/// imposed on it survive exactly.
fn orthonormalize(mut m: ComplexMatrix, norm_floor: f64) -> Option<ComplexMatrix> {
    let k = m.cols();
    let n = m.rows();
    for _pass in 0..2 {
        for j in 0..k {
            for prev in 0..j {
                let mut dot = Complex64::new(0.0, 0.0);
                for row in 0..n {
                    dot += m[(row, prev)].conj() * m[(row, j)];
                }
                for row in 0..n {
                    let delta = m[(row, prev)] * dot;
                    m[(row, j)] -= delta;
                }
            }
            let norm: f64 = (0..n).map(|row| m[(row, j)].norm_sqr()).sum::<f64>().sqrt();
            if norm < norm_floor {
                return None;
            }
            let inv = 1.0 / norm;
            for row in 0..n {
                m[(row, j)] = m[(row, j)].scale(inv);
            }
        }
    }
    Some(m)
}

fn draw_spectrum<R: Rng>(cfg: &GenConfig, rng: &mut R) -> Vec<f64> {
    let n = cfg.n;
    // Nonzero draws are floored at 0.05 so the smallest surviving eigenvalue
    // stays well separated from roundoff; exercising near-zero spectra is the
    // job of the rank-deficient mode, whose trailing entries are exactly zero.
    let mut values: Vec<f64> = match &cfg.spectrum {
        SpectrumMode::Prescribed(list) => return list.clone(),
        SpectrumMode::Uniform => (0..n).map(|_| 0.05 + rng.gen::<f64>() * 10.0).collect(),
        SpectrumMode::Clustered => {
            let base_a = 0.5 + 1.5 * rng.gen::<f64>();
            let base_b = 0.5 + 1.5 * rng.gen::<f64>();
            (0..n)
                .map(|_| {
                    let base = if rng.gen::<bool>() { base_a } else { base_b };
                    base * (1.0 + 1e-8 * (rng.gen::<f64>() - 0.5))
                })
                .collect()
        }
        SpectrumMode::RankDeficient => {
            let mut v: Vec<f64> = (0..n).map(|_| 0.05 + rng.gen::<f64>() * 10.0).collect();
            let zeros = if n == 1 { 1 } else { rng.gen_range(1..n) };
            for slot in v.iter_mut().rev().take(zeros) {
                *slot = 0.0;
            }
            v
        }
    };
    values.sort_by(|a, b| b.partial_cmp(a).expect("finite spectrum"));
    values
}

/// Hermitian PSD matrix `U diag(spectrum) U*` with Haar-like `U`.
pub fn random_psd(cfg: &GenConfig) -> Result<ComplexMatrix, GenError> {
    cfg.validate()?;
    let mut rng = rng_from(cfg.seed);
    let spectrum = draw_spectrum(cfg, &mut rng);
    let u = haar_like_unitary(&mut rng, cfg.n, cfg.field)?;
    let mut scaled = u.clone();
    for j in 0..cfg.n {
        for i in 0..cfg.n {
            scaled[(i, j)] = scaled[(i, j)].scale(spectrum[j]);
        }
    }
    Ok(scaled.mul(&u.adjoint()).hermitian_part())
}

fn haar_like_unitary<R: Rng>(rng: &mut R, n: usize, field: Field) -> Result<ComplexMatrix, GenError> {
    for _ in 0..8 {
        let g = gaussian_matrix(rng, n, n, field);
        if let Some(u) = orthonormalize(g, 1e-10) {
            return Ok(u);
        }
    }
    Err(GenError::DegenerateDraw(8))
}

/// Square matrix with `sigma_1 = (1 - delta) * u`, `u` uniform in (0,1].
pub fn random_strict_contraction(cfg: &GenConfig) -> Result<ComplexMatrix, GenError> {
    cfg.validate()?;
    let mut rng = rng_from(cfg.seed);
    let g = gaussian_matrix(&mut rng, cfg.n, cfg.n, cfg.field);
    let u: f64 = 1.0 - rng.gen::<f64>();
    let target = (1.0 - cfg.delta) * u;
    let top = sigma_max(&g).expect("gaussian matrix is well formed");
    if top == 0.0 {
        return Ok(ComplexMatrix::zeros(cfg.n, cfg.n));
    }
    Ok(g.scale_real(target / top))
}

/// Unstructured square matrix, Gaussian entries scaled by a uniform factor
/// in (0, 2]. Instances for the checks that need no contraction hypothesis.
pub fn random_square(cfg: &GenConfig) -> Result<ComplexMatrix, GenError> {
    cfg.validate()?;
    let mut rng = rng_from(cfg.seed);
    let g = gaussian_matrix(&mut rng, cfg.n, cfg.n, cfg.field);
    let factor: f64 = 2.0 * (1.0 - rng.gen::<f64>());
    Ok(g.scale_real(factor))
}

/// n-by-k partial isometry whose first column vanishes on rows m+1..n.
pub fn random_patterned_isometry(
    n: usize,
    k: usize,
    m: usize,
    seed: u64,
) -> Result<ComplexMatrix, GenError> {
    if n == 0 {
        return Err(GenError::BadDimension);
    }
    if m < 1 || m > n {
        return Err(GenError::InfeasiblePattern { m, n });
    }
    if k < 1 || k > n {
        return Err(GenError::TooManyColumns { k, n });
    }
    let mut rng = rng_from(seed);
    for _ in 0..8 {
        let mut g = gaussian_matrix(&mut rng, n, k, Field::Complex);
        for row in m..n {
            g[(row, 0)] = Complex64::new(0.0, 0.0);
        }
        if let Some(u) = orthonormalize(g, 1e-10) {
            return Ok(u);
        }
    }
    Err(GenError::DegenerateDraw(8))
}

/// Orthonormal columns x_1..x_k with x_t in the span of the first i_t
/// eigenvectors of `decomp`; the nesting i_1 <= ... <= i_k makes
/// Gram-Schmidt preserve the span structure.
pub fn nested_frame(
    decomp: &SpectralDecomposition,
    idx: &IndexSequence,
    seed: u64,
) -> Result<ComplexMatrix, GenError> {
    let n = decomp.eigenvalues.len();
    let k = idx.len();
    let mut rng = rng_from(seed);
    for _ in 0..8 {
        let mut normals = NormalSource::new(&mut rng);
        let mut coeffs = ComplexMatrix::zeros(n, k);
        for (t, &i_t) in idx.indices().iter().enumerate() {
            for row in 0..i_t {
                coeffs[(row, t)] = normals.sample_complex(Field::Complex);
            }
        }
        if let Some(q) = orthonormalize(coeffs, 1e-10) {
            return Ok(decomp.vectors.mul(&q));
        }
    }
    Err(GenError::DegenerateDraw(8))
}
