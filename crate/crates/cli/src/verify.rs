//! Dispatch for the `verify` subcommand: maps a check name plus matrix
//! files (and the shape-dependent `--index` argument) onto the library
//! call, with per-check defaults.

use std::fs;
use std::path::PathBuf;

use logmaj_core::bounds::{self, DEFAULT_BOUND_TOL, DEFAULT_IDENTITY_TOL, HERMITIAN_INPUT_TOL};
use logmaj_core::eig::hermitian_eigenvalues;
use logmaj_core::index_seq::{parse_index_list, IndexSequence};
use logmaj_core::matrix::ComplexMatrix;
use logmaj_core::report::Report;

pub struct VerifyArgs {
    pub name: String,
    pub a: Option<PathBuf>,
    pub b: Option<PathBuf>,
    pub index: Option<String>,
    pub tol: Option<f64>,
}

/// Evaluation result: `reports` decide the exit code, `details` are
/// informational (the fixed counterexample instances, which are unsatisfied
/// by design).
pub struct VerifyOutput {
    pub reports: Vec<Report>,
    pub details: Vec<Report>,
}

fn load_matrix(path: &Option<PathBuf>, flag: &str, check: &str) -> Result<ComplexMatrix, String> {
    let path = path
        .as_ref()
        .ok_or_else(|| format!("check {check} requires --{flag} FILE"))?;
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    ComplexMatrix::from_json_str(&text)
        .map_err(|e| format!("cannot parse {}: {e}", path.display()))
}

/// Reads a real sequence: a row vector, a column vector, or the diagonal of
/// a square matrix. Entries must be real.
fn load_sequence(path: &Option<PathBuf>, flag: &str, check: &str) -> Result<Vec<f64>, String> {
    let m = load_matrix(path, flag, check)?;
    let entries: Vec<_> = if m.rows() == 1 {
        (0..m.cols()).map(|j| m[(0, j)]).collect()
    } else if m.cols() == 1 {
        (0..m.rows()).map(|i| m[(i, 0)]).collect()
    } else if m.rows() == m.cols() {
        (0..m.rows()).map(|i| m[(i, i)]).collect()
    } else {
        return Err(format!(
            "--{flag} must be a vector or a square matrix, got {}x{}",
            m.rows(),
            m.cols()
        ));
    };
    if entries.iter().any(|z| z.im.abs() > 1e-12) {
        return Err(format!("--{flag} entries must be real for {check}"));
    }
    Ok(entries.iter().map(|z| z.re).collect())
}

fn parse_single(index: &Option<String>, what: &str, default: usize) -> Result<usize, String> {
    match index {
        None => Ok(default),
        Some(text) => text
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("--index must be a single integer ({what}), got '{text}'")),
    }
}

fn parse_pair(index: &Option<String>, n: usize) -> Result<(usize, usize), String> {
    let text = match index {
        None if n >= 2 => return Ok((1, 2)),
        None => return Err("pairwise_bound needs n >= 2".to_string()),
        Some(t) => t,
    };
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(format!("--index must be 'i,j' for pairwise_bound, got '{text}'"));
    }
    let i = parts[0].parse::<usize>().map_err(|_| format!("bad index '{}'", parts[0]))?;
    let j = parts[1].parse::<usize>().map_err(|_| format!("bad index '{}'", parts[1]))?;
    Ok((i, j))
}

fn parse_subsequence(
    index: &Option<String>,
    n: usize,
    default: IndexSequence,
) -> Result<IndexSequence, String> {
    match index {
        None => Ok(default),
        Some(text) => parse_index_list(text, n).map_err(|e| e.to_string()),
    }
}

fn single(report: Report) -> VerifyOutput {
    VerifyOutput {
        reports: vec![report],
        details: Vec::new(),
    }
}

fn many(reports: Vec<Report>) -> VerifyOutput {
    VerifyOutput {
        reports,
        details: Vec::new(),
    }
}

pub fn dispatch(args: &VerifyArgs) -> Result<VerifyOutput, String> {
    let name = args.name.as_str();
    let bound_tol = args.tol.unwrap_or(DEFAULT_BOUND_TOL);
    let id_tol = args.tol.unwrap_or(DEFAULT_IDENTITY_TOL);
    let err = |e: logmaj_core::CheckError| e.to_string();

    match name {
        "scalar_product_bound" => {
            let a = load_sequence(&args.a, "a", name)?;
            let b = load_sequence(&args.b, "b", name)?;
            Ok(many(bounds::scalar_product_bound(&a, &b, bound_tol).map_err(err)?))
        }
        "fiedler_chain" | "oppenheim_tail_power" | "head_tail_power" | "tail_chain" => {
            let a = load_matrix(&args.a, "a", name)?;
            let b = load_matrix(&args.b, "b", name)?;
            let k = parse_single(&args.index, "k", a.rows())?;
            match name {
                "fiedler_chain" => Ok(single(bounds::fiedler_chain(&a, &b, k, bound_tol).map_err(err)?)),
                "oppenheim_tail_power" => {
                    Ok(single(bounds::oppenheim_tail_power(&a, &b, k, bound_tol).map_err(err)?))
                }
                "head_tail_power" => {
                    Ok(single(bounds::head_tail_power(&a, &b, k, bound_tol).map_err(err)?))
                }
                _ => Ok(many(bounds::tail_chain(&a, &b, k, bound_tol).map_err(err)?)),
            }
        }
        "minkowski_det" | "hartfiel_det" => {
            let a = load_matrix(&args.a, "a", name)?;
            let b = load_matrix(&args.b, "b", name)?;
            let report = if name == "minkowski_det" {
                bounds::minkowski_det(&a, &b, bound_tol)
            } else {
                bounds::hartfiel_det(&a, &b, bound_tol)
            };
            Ok(single(report.map_err(err)?))
        }
        "lidskii_product" | "main_bounds" => {
            let a = load_matrix(&args.a, "a", name)?;
            let b = load_matrix(&args.b, "b", name)?;
            let idx = parse_subsequence(&args.index, a.rows(), IndexSequence::full(a.rows()))?;
            if name == "lidskii_product" {
                Ok(single(bounds::lidskii_product(&a, &b, &idx, bound_tol).map_err(err)?))
            } else {
                Ok(many(bounds::main_bounds(&a, &b, &idx, bound_tol).map_err(err)?))
            }
        }
        "pairwise_bound" => {
            let a = load_matrix(&args.a, "a", name)?;
            let b = load_matrix(&args.b, "b", name)?;
            let (i, j) = parse_pair(&args.index, a.rows())?;
            Ok(single(bounds::pairwise_bound(&a, &b, i, j, bound_tol).map_err(err)?))
        }
        "partial_isometry_reduction" => {
            // --a: Hermitian matrix supplying the spectrum; --b: the
            // patterned partial isometry; --index: m (defaults to n).
            let a = load_matrix(&args.a, "a", name)?;
            let u = load_matrix(&args.b, "b", name)?;
            let lambdas = hermitian_eigenvalues(&a, HERMITIAN_INPUT_TOL).map_err(|e| e.to_string())?;
            let m = parse_single(&args.index, "m", lambdas.len())?;
            Ok(single(
                bounds::partial_isometry_reduction(&lambdas, &u, m, bound_tol).map_err(err)?,
            ))
        }
        "nested_frame_det_bound" => {
            // --b holds the frame; --index defaults to {1..k} for a k-column
            // frame.
            let a = load_matrix(&args.a, "a", name)?;
            let frame = load_matrix(&args.b, "b", name)?;
            let default = IndexSequence::head(frame.cols(), a.rows()).map_err(err)?;
            let idx = parse_subsequence(&args.index, a.rows(), default)?;
            Ok(single(
                bounds::nested_frame_det_bound(&a, &idx, &frame, bound_tol).map_err(err)?,
            ))
        }
        "fan_min_det" => {
            let b = load_matrix(&args.a, "a", name)?;
            let u = load_matrix(&args.b, "b", name)?;
            Ok(single(bounds::fan_min_det(&b, &u, bound_tol).map_err(err)?))
        }
        "hua_identity_residual" | "sum_identity_residual" => {
            let a = load_matrix(&args.a, "a", name)?;
            let b = load_matrix(&args.b, "b", name)?;
            let report = if name == "hua_identity_residual" {
                bounds::hua_identity_residual(&a, &b, id_tol)
            } else {
                bounds::sum_identity_residual(&a, &b, id_tol)
            };
            Ok(single(report.map_err(err)?))
        }
        "hua_det_inequality" | "hua_reversal_det" | "hua_strengthened_det" | "reversal_det" => {
            let a = load_matrix(&args.a, "a", name)?;
            let b = load_matrix(&args.b, "b", name)?;
            let report = match name {
                "hua_det_inequality" => bounds::hua_det_inequality(&a, &b, bound_tol),
                "hua_reversal_det" => bounds::hua_reversal_det(&a, &b, bound_tol),
                "hua_strengthened_det" => bounds::hua_strengthened_det(&a, &b, bound_tol),
                _ => bounds::reversal_det(&a, &b, bound_tol),
            };
            Ok(single(report.map_err(err)?))
        }
        "marcus_bounds" => {
            let a = load_matrix(&args.a, "a", name)?;
            let b = load_matrix(&args.b, "b", name)?;
            let k = parse_single(&args.index, "k", a.rows())?;
            Ok(many(bounds::marcus_bounds(&a, &b, k, bound_tol).map_err(err)?))
        }
        "contraction_main_bound" | "reversal_bound" => {
            let a = load_matrix(&args.a, "a", name)?;
            let b = load_matrix(&args.b, "b", name)?;
            let idx = parse_subsequence(&args.index, a.rows(), IndexSequence::full(a.rows()))?;
            let report = if name == "contraction_main_bound" {
                bounds::contraction_main_bound(&a, &b, &idx, bound_tol)
            } else {
                bounds::reversal_bound(&a, &b, &idx, bound_tol)
            };
            Ok(single(report.map_err(err)?))
        }
        "reproduce_counterexamples" => {
            let meta = bounds::reproduce_counterexamples(id_tol).map_err(err)?;
            let details = bounds::counterexample_reports(bound_tol).map_err(err)?;
            Ok(VerifyOutput {
                reports: vec![meta],
                details,
            })
        }
        other => Err(format!("unknown check name: {other}")),
    }
}
