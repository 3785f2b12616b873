//! Report types produced by every check.

use serde::{Deserialize, Serialize};

/// Result of one inequality check, stored as a descending chain
/// `lhs >= rhs_terms[0] >= rhs_terms[1] >= ...`.
///
/// The margin is the smallest gap over adjacent links; the check is
/// satisfied when the margin is no worse than `-tolerance * scale` with
/// `scale = max(1, |lhs|, max |rhs_terms|)`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct BoundReport {
    pub check_name: String,
    pub lhs: f64,
    pub rhs_terms: Vec<f64>,
    pub margin: f64,
    pub tolerance: f64,
    pub satisfied: bool,
}

impl BoundReport {
    pub fn chain(check_name: impl Into<String>, lhs: f64, rhs_terms: Vec<f64>, tolerance: f64) -> Self {
        assert!(!rhs_terms.is_empty(), "a bound needs at least one rhs term");
        let mut margin = f64::INFINITY;
        let mut prev = lhs;
        for &term in &rhs_terms {
            margin = margin.min(prev - term);
            prev = term;
        }
        let scale = Self::scale_of(lhs, &rhs_terms);
        let satisfied = margin >= -tolerance * scale;
        Self {
            check_name: check_name.into(),
            lhs,
            rhs_terms,
            margin,
            tolerance,
            satisfied,
        }
    }

    pub fn scale(&self) -> f64 {
        Self::scale_of(self.lhs, &self.rhs_terms)
    }

    fn scale_of(lhs: f64, rhs_terms: &[f64]) -> f64 {
        rhs_terms
            .iter()
            .map(|t| t.abs())
            .fold(1.0f64.max(lhs.abs()), f64::max)
    }
}

/// Result of one matrix-identity check: residual is the max absolute
/// entrywise deviation, satisfied when `residual <= tolerance * (1 + scale)`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct IdentityReport {
    pub check_name: String,
    pub residual: f64,
    pub scale: f64,
    pub tolerance: f64,
    pub satisfied: bool,
}

impl IdentityReport {
    pub fn new(check_name: impl Into<String>, residual: f64, scale: f64, tolerance: f64) -> Self {
        Self {
            check_name: check_name.into(),
            residual,
            scale,
            tolerance,
            satisfied: residual <= tolerance * (1.0 + scale),
        }
    }
}

/// A single check evaluation; identity checks and bound checks travel
/// through the same campaign plumbing.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Report {
    Bound(BoundReport),
    Identity(IdentityReport),
}

impl Report {
    pub fn check_name(&self) -> &str {
        match self {
            Report::Bound(r) => &r.check_name,
            Report::Identity(r) => &r.check_name,
        }
    }

    pub fn satisfied(&self) -> bool {
        match self {
            Report::Bound(r) => r.satisfied,
            Report::Identity(r) => r.satisfied,
        }
    }

    /// Margin for bounds, negated excess residual for identities; anything
    /// `>= -tolerance*scale` passes, so this is the quantity a violation log
    /// sorts by.
    pub fn severity(&self) -> f64 {
        match self {
            Report::Bound(r) => r.margin,
            Report::Identity(r) => r.tolerance * (1.0 + r.scale) - r.residual,
        }
    }
}
