//! Deterministic randomized verification campaigns.
//!
//! A campaign evaluates a set of named checks over seeded random instances.
//! Every trial derives its RNG stream from `(master_seed, check, n, trial)`,
//! so trials are independent work units: the same configuration produces the
//! same report whether trials run sequentially or on any number of workers.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::eig::hermitian_eig;
use crate::error::CheckError;
use crate::generators::{
    derive_seed, nested_frame, random_patterned_isometry, random_psd, random_square,
    random_strict_contraction, rng_from, Field, GenConfig, SpectrumMode,
};
use crate::index_seq::IndexSequence;
use crate::report::Report;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Hard dimension ceiling, matching the eigensolver cap.
pub const MAX_CAMPAIGN_DIM: usize = 64;

/// One report produced inside a trial, tagged with the shape-dependent
/// parameter that produced it (an index subsequence, `[k]`, `[i, j]`, or
/// `[k, m]`; empty when the check takes no such parameter).
type Entry = (Vec<usize>, Report);
type Runner = fn(&TrialCtx) -> Result<Vec<Entry>, String>;

/// A registered check: its public name, a short anchor naming the classical
/// result it exercises, a precondition summary, the smallest dimension it
/// applies to, and the trial runner.
pub struct CheckDef {
    pub name: &'static str,
    pub anchor: &'static str,
    pub preconditions: &'static str,
    pub min_n: usize,
    runner: Runner,
}

/// Campaign parameters. Serialized as the config echo inside reports, so
/// everything here must be plain data; the worker count is deliberately a
/// run parameter, not config, because it must not affect the report body.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    /// Check names to run, in order. Defaults to the full registry.
    #[serde(default = "all_check_names")]
    pub checks: Vec<String>,
    /// Dimensions to run each check at; checks skip dims below their minimum.
    #[serde(default = "default_dims")]
    pub dims: Vec<usize>,
    /// Trials per (check, dimension).
    #[serde(default = "default_trials")]
    pub trials: u64,
    #[serde(default)]
    pub master_seed: u64,
    /// Relative tolerance for inequality margins.
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    /// Relative tolerance for identity residuals.
    #[serde(default = "default_identity_tolerance")]
    pub identity_tolerance: f64,
    /// Contraction margin for generated strict contractions.
    #[serde(default = "default_delta")]
    pub delta: f64,
    #[serde(default = "default_field")]
    pub field: Field,
    /// Index subsequences sampled per trial when n > 6 (below that the
    /// 2^n - 1 nonempty subsequences are enumerated exhaustively).
    #[serde(default = "default_index_samples")]
    pub index_samples: usize,
}

fn all_check_names() -> Vec<String> {
    registry().iter().map(|c| c.name.to_string()).collect()
}

fn default_dims() -> Vec<usize> {
    (1..=8).collect()
}

fn default_trials() -> u64 {
    1000
}

fn default_tolerance() -> f64 {
    bounds::DEFAULT_BOUND_TOL
}

fn default_identity_tolerance() -> f64 {
    bounds::DEFAULT_IDENTITY_TOL
}

fn default_delta() -> f64 {
    0.05
}

fn default_field() -> Field {
    Field::Complex
}

fn default_index_samples() -> usize {
    32
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self {
            checks: all_check_names(),
            dims: default_dims(),
            trials: default_trials(),
            master_seed: 0,
            tolerance: default_tolerance(),
            identity_tolerance: default_identity_tolerance(),
            delta: default_delta(),
            field: default_field(),
            index_samples: default_index_samples(),
        }
    }
}

impl CampaignConfig {
    pub fn validate(&self) -> Result<(), CheckError> {
        if self.trials < 1 {
            return Err(CheckError::InvalidConfig("trials must be >= 1".into()));
        }
        if self.checks.is_empty() {
            return Err(CheckError::InvalidConfig("checks must be nonempty".into()));
        }
        if self.dims.is_empty() {
            return Err(CheckError::InvalidConfig("dims must be nonempty".into()));
        }
        for &n in &self.dims {
            if n < 1 || n > MAX_CAMPAIGN_DIM {
                return Err(CheckError::InvalidConfig(format!(
                    "dimension {n} outside 1..={MAX_CAMPAIGN_DIM}"
                )));
            }
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(CheckError::InvalidConfig(format!(
                "tolerance must be positive and finite, got {}",
                self.tolerance
            )));
        }
        if !(self.identity_tolerance > 0.0 && self.identity_tolerance.is_finite()) {
            return Err(CheckError::InvalidConfig(format!(
                "identity_tolerance must be positive and finite, got {}",
                self.identity_tolerance
            )));
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(CheckError::InvalidConfig(format!(
                "delta must lie in (0,1), got {}",
                self.delta
            )));
        }
        if self.index_samples < 1 {
            return Err(CheckError::InvalidConfig(
                "index_samples must be >= 1".into(),
            ));
        }
        for name in &self.checks {
            lookup(name)?;
        }
        Ok(())
    }
}

/// Reproduction data for one unsatisfied report: rebuilding the trial from
/// `seed` with the same config replays the exact instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub report_name: String,
    pub n: usize,
    pub trial: u64,
    pub seed: u64,
    /// Shape-dependent parameter of the failing report (see [`CheckDef`]).
    pub indices: Vec<usize>,
    /// Bound margin (negative) or identity residual (positive), whichever
    /// the failing report carries.
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenerationFailure {
    pub n: usize,
    pub trial: u64,
    pub seed: u64,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub name: String,
    pub trials_run: u64,
    /// Total reports evaluated (a trial can produce many, one per k or I).
    pub evaluations: u64,
    pub violation_count: usize,
    pub violations: Vec<Violation>,
    pub min_margin: Option<f64>,
    pub max_identity_residual: Option<f64>,
    pub generation_failures: Vec<GenerationFailure>,
}

/// Aggregated campaign outcome. `wall_time_seconds` is informational and
/// excluded from serialization so that report bodies are byte-identical
/// across reruns and worker counts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub checks: Vec<CheckSummary>,
    #[serde(skip)]
    pub wall_time_seconds: f64,
}

impl CampaignReport {
    pub fn total_violations(&self) -> usize {
        self.checks.iter().map(|c| c.violation_count).sum()
    }

    pub fn total_generation_failures(&self) -> usize {
        self.checks.iter().map(|c| c.generation_failures.len()).sum()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("campaign report serializes")
    }

    pub fn from_json_str(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

struct TrialCtx<'a> {
    cfg: &'a CampaignConfig,
    n: usize,
    trial: u64,
    seed: u64,
}

impl TrialCtx<'_> {
    fn rng(&self) -> ChaCha8Rng {
        rng_from(self.seed)
    }

    /// Spectrum profile cycles with the trial number so uniform, clustered,
    /// and rank-deficient instances all appear in every campaign.
    fn spectrum_mode(&self) -> SpectrumMode {
        match self.trial % 3 {
            0 => SpectrumMode::Uniform,
            1 => SpectrumMode::Clustered,
            _ => SpectrumMode::RankDeficient,
        }
    }

    fn gen_config(&self, seed: u64) -> GenConfig {
        GenConfig {
            seed,
            n: self.n,
            field: self.cfg.field,
            delta: self.cfg.delta,
            spectrum: self.spectrum_mode(),
        }
    }

    fn tol(&self) -> f64 {
        self.cfg.tolerance
    }

    fn id_tol(&self) -> f64 {
        self.cfg.identity_tolerance
    }
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn psd_pair(ctx: &TrialCtx) -> Result<(crate::ComplexMatrix, crate::ComplexMatrix, ChaCha8Rng), String> {
    let mut rng = ctx.rng();
    let sa = rng.gen::<u64>();
    let sb = rng.gen::<u64>();
    let a = random_psd(&ctx.gen_config(sa)).map_err(fail)?;
    let b = random_psd(&ctx.gen_config(sb)).map_err(fail)?;
    Ok((a, b, rng))
}

fn contraction_pair(
    ctx: &TrialCtx,
) -> Result<(crate::ComplexMatrix, crate::ComplexMatrix, ChaCha8Rng), String> {
    let mut rng = ctx.rng();
    let sa = rng.gen::<u64>();
    let sb = rng.gen::<u64>();
    let a = random_strict_contraction(&ctx.gen_config(sa)).map_err(fail)?;
    let b = random_strict_contraction(&ctx.gen_config(sb)).map_err(fail)?;
    Ok((a, b, rng))
}

fn square_pair(
    ctx: &TrialCtx,
) -> Result<(crate::ComplexMatrix, crate::ComplexMatrix, ChaCha8Rng), String> {
    let mut rng = ctx.rng();
    let sa = rng.gen::<u64>();
    let sb = rng.gen::<u64>();
    let a = random_square(&ctx.gen_config(sa)).map_err(fail)?;
    let b = random_square(&ctx.gen_config(sb)).map_err(fail)?;
    Ok((a, b, rng))
}

fn index_set(ctx: &TrialCtx, rng: &mut ChaCha8Rng) -> Vec<IndexSequence> {
    IndexSequence::campaign_set(ctx.n, ctx.cfg.index_samples, rng)
}

fn no_param(reports: Vec<Report>) -> Vec<Entry> {
    reports.into_iter().map(|r| (Vec::new(), r)).collect()
}

fn run_scalar_product(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let mut rng = ctx.rng();
    let a: Vec<f64> = (0..ctx.n).map(|_| rng.gen::<f64>() * 10.0).collect();
    let b: Vec<f64> = (0..ctx.n).map(|_| rng.gen::<f64>() * 10.0).collect();
    let reports = bounds::scalar_product_bound(&a, &b, ctx.tol()).map_err(fail)?;
    Ok(no_param(reports))
}

fn run_fiedler_chain(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, _) = psd_pair(ctx)?;
    let mut out = Vec::new();
    for k in 1..=ctx.n {
        out.push((vec![k], bounds::fiedler_chain(&a, &b, k, ctx.tol()).map_err(fail)?));
    }
    Ok(out)
}

fn run_oppenheim(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, _) = psd_pair(ctx)?;
    let mut out = Vec::new();
    for k in 1..=ctx.n {
        out.push((
            vec![k],
            bounds::oppenheim_tail_power(&a, &b, k, ctx.tol()).map_err(fail)?,
        ));
    }
    Ok(out)
}

fn run_minkowski(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, _) = psd_pair(ctx)?;
    Ok(no_param(vec![bounds::minkowski_det(&a, &b, ctx.tol()).map_err(fail)?]))
}

fn run_hartfiel(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, _) = psd_pair(ctx)?;
    Ok(no_param(vec![bounds::hartfiel_det(&a, &b, ctx.tol()).map_err(fail)?]))
}

fn run_lidskii(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, mut rng) = psd_pair(ctx)?;
    let mut out = Vec::new();
    for idx in index_set(ctx, &mut rng) {
        let report = bounds::lidskii_product(&a, &b, &idx, ctx.tol()).map_err(fail)?;
        out.push((idx.indices().to_vec(), report));
    }
    Ok(out)
}

fn run_main_bounds(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, mut rng) = psd_pair(ctx)?;
    let mut out = Vec::new();
    for idx in index_set(ctx, &mut rng) {
        for report in bounds::main_bounds(&a, &b, &idx, ctx.tol()).map_err(fail)? {
            out.push((idx.indices().to_vec(), report));
        }
    }
    Ok(out)
}

fn run_head_tail_power(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, _) = psd_pair(ctx)?;
    let mut out = Vec::new();
    for k in 1..=ctx.n {
        out.push((
            vec![k],
            bounds::head_tail_power(&a, &b, k, ctx.tol()).map_err(fail)?,
        ));
    }
    Ok(out)
}

fn run_pairwise(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, _) = psd_pair(ctx)?;
    let mut out = Vec::new();
    for i in 1..ctx.n {
        for j in (i + 1)..=ctx.n {
            out.push((
                vec![i, j],
                bounds::pairwise_bound(&a, &b, i, j, ctx.tol()).map_err(fail)?,
            ));
        }
    }
    Ok(out)
}

fn run_tail_chain(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, _) = psd_pair(ctx)?;
    let mut out = Vec::new();
    for k in 1..=ctx.n {
        for report in bounds::tail_chain(&a, &b, k, ctx.tol()).map_err(fail)? {
            out.push((vec![k], report));
        }
    }
    Ok(out)
}

fn run_partial_isometry_reduction(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let mut rng = ctx.rng();
    let n = ctx.n;
    let mut lambdas: Vec<f64> = (0..n).map(|_| 0.05 + rng.gen::<f64>() * 10.0).collect();
    // Exercise the zero tail on every third trial, mirroring the
    // rank-deficient spectrum mode.
    if ctx.trial % 3 == 2 && n > 1 {
        let zeros = rng.gen_range(1..n);
        for slot in lambdas.iter_mut().take(zeros) {
            *slot = 0.0;
        }
    }
    lambdas.sort_by(|x, y| y.partial_cmp(x).expect("finite"));
    let k = rng.gen_range(1..=n);
    let m = rng.gen_range(1..=n);
    let u = random_patterned_isometry(n, k, m, rng.gen::<u64>()).map_err(fail)?;
    let report = bounds::partial_isometry_reduction(&lambdas, &u, m, ctx.tol()).map_err(fail)?;
    Ok(vec![(vec![k, m], report)])
}

fn run_nested_frame_det(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let mut rng = ctx.rng();
    let seed = rng.gen::<u64>();
    let a = random_psd(&ctx.gen_config(seed)).map_err(fail)?;
    let decomp = hermitian_eig(&a, bounds::HERMITIAN_INPUT_TOL).map_err(fail)?;
    let mut out = Vec::new();
    for idx in index_set(ctx, &mut rng) {
        let frame = nested_frame(&decomp, &idx, rng.gen::<u64>()).map_err(fail)?;
        let report = bounds::nested_frame_det_bound_with(&decomp, &a, &idx, &frame, ctx.tol())
            .map_err(fail)?;
        out.push((idx.indices().to_vec(), report));
    }
    Ok(out)
}

fn run_fan_min_det(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let mut rng = ctx.rng();
    let seed = rng.gen::<u64>();
    let b = random_psd(&ctx.gen_config(seed)).map_err(fail)?;
    let mut out = Vec::new();
    for k in 1..=ctx.n {
        let u = random_patterned_isometry(ctx.n, k, ctx.n, rng.gen::<u64>()).map_err(fail)?;
        out.push((vec![k], bounds::fan_min_det(&b, &u, ctx.tol()).map_err(fail)?));
    }
    Ok(out)
}

fn run_hua_identity(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, _) = contraction_pair(ctx)?;
    let report = bounds::hua_identity_residual(&a, &b, ctx.id_tol()).map_err(fail)?;
    Ok(no_param(vec![report]))
}

fn run_sum_identity(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, _) = square_pair(ctx)?;
    let report = bounds::sum_identity_residual(&a, &b, ctx.id_tol()).map_err(fail)?;
    Ok(no_param(vec![report]))
}

fn run_hua_det(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, _) = contraction_pair(ctx)?;
    Ok(no_param(vec![
        bounds::hua_det_inequality(&a, &b, ctx.tol()).map_err(fail)?,
    ]))
}

fn run_hua_reversal_det(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, _) = square_pair(ctx)?;
    Ok(no_param(vec![
        bounds::hua_reversal_det(&a, &b, ctx.tol()).map_err(fail)?,
    ]))
}

fn run_marcus(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, _) = contraction_pair(ctx)?;
    let mut out = Vec::new();
    for k in 1..=ctx.n {
        for report in bounds::marcus_bounds(&a, &b, k, ctx.tol()).map_err(fail)? {
            out.push((vec![k], report));
        }
    }
    Ok(out)
}

fn run_contraction_main(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, mut rng) = contraction_pair(ctx)?;
    let mut out = Vec::new();
    for idx in index_set(ctx, &mut rng) {
        let report = bounds::contraction_main_bound(&a, &b, &idx, ctx.tol()).map_err(fail)?;
        out.push((idx.indices().to_vec(), report));
    }
    Ok(out)
}

fn run_hua_strengthened(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, _) = contraction_pair(ctx)?;
    Ok(no_param(vec![
        bounds::hua_strengthened_det(&a, &b, ctx.tol()).map_err(fail)?,
    ]))
}

fn run_reversal_bound(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, mut rng) = square_pair(ctx)?;
    let mut out = Vec::new();
    for idx in index_set(ctx, &mut rng) {
        let report = bounds::reversal_bound(&a, &b, &idx, ctx.tol()).map_err(fail)?;
        out.push((idx.indices().to_vec(), report));
    }
    Ok(out)
}

fn run_reversal_det(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let (a, b, _) = square_pair(ctx)?;
    Ok(no_param(vec![
        bounds::reversal_det(&a, &b, ctx.tol()).map_err(fail)?,
    ]))
}

fn run_counterexamples(ctx: &TrialCtx) -> Result<Vec<Entry>, String> {
    let report = bounds::reproduce_counterexamples(ctx.id_tol()).map_err(fail)?;
    Ok(no_param(vec![report]))
}

static REGISTRY: [CheckDef; 23] = [
    CheckDef {
        name: "scalar_product_bound",
        anchor: "n-term product bound for nonnegative reals",
        preconditions: "a_t, b_t >= 0, equal lengths",
        min_n: 1,
        runner: run_scalar_product,
    },
    CheckDef {
        name: "fiedler_chain",
        anchor: "Fiedler's tail-product inequalities for A+B",
        preconditions: "A, B PSD; 1 <= k <= n",
        min_n: 1,
        runner: run_fiedler_chain,
    },
    CheckDef {
        name: "oppenheim_tail_power",
        anchor: "Oppenheim-type root mean of tail products",
        preconditions: "A, B PSD; 1 <= k <= n",
        min_n: 1,
        runner: run_oppenheim,
    },
    CheckDef {
        name: "minkowski_det",
        anchor: "Minkowski determinant inequality",
        preconditions: "A, B PSD",
        min_n: 1,
        runner: run_minkowski,
    },
    CheckDef {
        name: "hartfiel_det",
        anchor: "Hartfiel's refinement of the Minkowski bound",
        preconditions: "A, B PSD",
        min_n: 1,
        runner: run_hartfiel,
    },
    CheckDef {
        name: "lidskii_product",
        anchor: "Lidskii two-sided products for lambda(AB)",
        preconditions: "A, B PSD; valid index subsequence",
        min_n: 1,
        runner: run_lidskii,
    },
    CheckDef {
        name: "main_bounds",
        anchor: "indexed power and three-term bounds for A+B",
        preconditions: "A, B PSD; valid index subsequence",
        min_n: 1,
        runner: run_main_bounds,
    },
    CheckDef {
        name: "head_tail_power",
        anchor: "head-versus-tail k-th root bound",
        preconditions: "A, B PSD; 1 <= k <= n",
        min_n: 1,
        runner: run_head_tail_power,
    },
    CheckDef {
        name: "pairwise_bound",
        anchor: "two-index cross-term bound for A+B",
        preconditions: "A, B PSD; 1 <= i < j <= n",
        min_n: 2,
        runner: run_pairwise,
    },
    CheckDef {
        name: "tail_chain",
        anchor: "tail chain refining Fiedler's inequalities",
        preconditions: "A, B PSD; 1 <= k <= n",
        min_n: 1,
        runner: run_tail_chain,
    },
    CheckDef {
        name: "partial_isometry_reduction",
        anchor: "determinant reduction for patterned partial isometries",
        preconditions: "lambda descending >= 0; U*U = I; column 1 zero below row m",
        min_n: 1,
        runner: run_partial_isometry_reduction,
    },
    CheckDef {
        name: "nested_frame_det_bound",
        anchor: "compression determinant vs indexed eigenvalue product",
        preconditions: "A PSD; frame orthonormal and nested for I",
        min_n: 1,
        runner: run_nested_frame_det,
    },
    CheckDef {
        name: "fan_min_det",
        anchor: "Fan-type minimum principle for compression determinants",
        preconditions: "B PSD; U*U = I",
        min_n: 1,
        runner: run_fan_min_det,
    },
    CheckDef {
        name: "hua_identity_residual",
        anchor: "Hua's matrix identity for strict contractions",
        preconditions: "sigma_1(A), sigma_1(B) < 1",
        min_n: 1,
        runner: run_hua_identity,
    },
    CheckDef {
        name: "sum_identity_residual",
        anchor: "companion identity splitting I + A*A",
        preconditions: "square A, B of equal size",
        min_n: 1,
        runner: run_sum_identity,
    },
    CheckDef {
        name: "hua_det_inequality",
        anchor: "Hua's determinant inequality, strong and weak",
        preconditions: "sigma_1(A), sigma_1(B) < 1",
        min_n: 1,
        runner: run_hua_det,
    },
    CheckDef {
        name: "hua_reversal_det",
        anchor: "reversal of Hua's determinant inequality",
        preconditions: "square A, B of equal size",
        min_n: 1,
        runner: run_hua_reversal_det,
    },
    CheckDef {
        name: "marcus_bounds",
        anchor: "Marcus tail bounds and the Weyl tail relation",
        preconditions: "sigma_1(A), sigma_1(B) <= 1; 1 <= k <= n",
        min_n: 1,
        runner: run_marcus,
    },
    CheckDef {
        name: "contraction_main_bound",
        anchor: "indexed three-term strengthening of the Marcus bound",
        preconditions: "sigma_1(A), sigma_1(B) < 1; valid index subsequence",
        min_n: 1,
        runner: run_contraction_main,
    },
    CheckDef {
        name: "hua_strengthened_det",
        anchor: "Hua determinant bound with the 2^n - 2 cross term",
        preconditions: "sigma_1(A), sigma_1(B) < 1",
        min_n: 1,
        runner: run_hua_strengthened,
    },
    CheckDef {
        name: "reversal_bound",
        anchor: "indexed reversal with singular values of A+B",
        preconditions: "square A, B; valid index subsequence",
        min_n: 1,
        runner: run_reversal_bound,
    },
    CheckDef {
        name: "reversal_det",
        anchor: "determinant reversal chain, strong and weak",
        preconditions: "square A, B of equal size",
        min_n: 1,
        runner: run_reversal_det,
    },
    CheckDef {
        name: "reproduce_counterexamples",
        anchor: "fixed counterexamples to the failed strengthenings",
        preconditions: "none (fixed instances)",
        min_n: 1,
        runner: run_counterexamples,
    },
];

/// The full check registry, in campaign order.
pub fn registry() -> &'static [CheckDef] {
    &REGISTRY
}

/// Looks up a registered check by name.
pub fn lookup(name: &str) -> Result<&'static CheckDef, CheckError> {
    REGISTRY
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| CheckError::UnknownCheck(name.to_string()))
}

struct WorkItem {
    check_pos: usize,
    def: &'static CheckDef,
    n: usize,
    trial: u64,
}

struct TrialOutcome {
    check_pos: usize,
    n: usize,
    trial: u64,
    seed: u64,
    result: Result<Vec<Entry>, String>,
}

fn evaluate(item: &WorkItem, cfg: &CampaignConfig) -> TrialOutcome {
    let seed = derive_seed(cfg.master_seed, item.def.name, item.n, item.trial);
    let ctx = TrialCtx {
        cfg,
        n: item.n,
        trial: item.trial,
        seed,
    };
    TrialOutcome {
        check_pos: item.check_pos,
        n: item.n,
        trial: item.trial,
        seed,
        result: (item.def.runner)(&ctx),
    }
}

/// Runs the configured campaign. `workers` selects the thread pool size;
/// `None` uses the global pool. The report body is identical for every
/// worker count because trials are merged in work-item order.
pub fn run_campaign(
    cfg: &CampaignConfig,
    workers: Option<usize>,
) -> Result<CampaignReport, CheckError> {
    cfg.validate()?;
    let defs: Vec<&'static CheckDef> = cfg
        .checks
        .iter()
        .map(|name| lookup(name))
        .collect::<Result<_, _>>()?;

    let mut items = Vec::new();
    for (check_pos, def) in defs.iter().enumerate() {
        for &n in &cfg.dims {
            if n < def.min_n {
                continue;
            }
            for trial in 0..cfg.trials {
                items.push(WorkItem {
                    check_pos,
                    def,
                    n,
                    trial,
                });
            }
        }
    }

    let started = Instant::now();
    let outcomes: Vec<TrialOutcome> = match workers {
        Some(count) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(count)
                .build()
                .map_err(|e| CheckError::InvalidConfig(e.to_string()))?;
            pool.install(|| items.par_iter().map(|item| evaluate(item, cfg)).collect())
        }
        None => items.par_iter().map(|item| evaluate(item, cfg)).collect(),
    };
    let wall = started.elapsed().as_secs_f64();

    let mut summaries: Vec<CheckSummary> = defs
        .iter()
        .map(|def| CheckSummary {
            name: def.name.to_string(),
            trials_run: 0,
            evaluations: 0,
            violation_count: 0,
            violations: Vec::new(),
            min_margin: None,
            max_identity_residual: None,
            generation_failures: Vec::new(),
        })
        .collect();

    for outcome in outcomes {
        let summary = &mut summaries[outcome.check_pos];
        summary.trials_run += 1;
        match outcome.result {
            Err(error) => summary.generation_failures.push(GenerationFailure {
                n: outcome.n,
                trial: outcome.trial,
                seed: outcome.seed,
                error,
            }),
            Ok(entries) => {
                for (indices, report) in entries {
                    summary.evaluations += 1;
                    let value = match &report {
                        Report::Bound(b) => {
                            summary.min_margin = Some(match summary.min_margin {
                                Some(m) => m.min(b.margin),
                                None => b.margin,
                            });
                            b.margin
                        }
                        Report::Identity(i) => {
                            summary.max_identity_residual =
                                Some(match summary.max_identity_residual {
                                    Some(m) => m.max(i.residual),
                                    None => i.residual,
                                });
                            i.residual
                        }
                    };
                    if !report.satisfied() {
                        summary.violations.push(Violation {
                            report_name: report.check_name().to_string(),
                            n: outcome.n,
                            trial: outcome.trial,
                            seed: outcome.seed,
                            indices,
                            value,
                        });
                    }
                }
            }
        }
    }
    for summary in &mut summaries {
        summary.violation_count = summary.violations.len();
    }

    Ok(CampaignReport {
        config: cfg.clone(),
        checks: summaries,
        wall_time_seconds: wall,
    })
}
