//! Numerical verification of eigenvalue and singular-value product bounds
//! for positive semidefinite sums and for contractions.
//!
//! The crate is self-contained: dense complex matrices, a Jacobi
//! eigensolver for Hermitian input, a shifted-QR solver for general
//! spectra, and singular values via the Gram matrix. On top of that sit
//! the bound checks themselves (`bounds`), instance generators
//! (`generators`), and a deterministic randomized campaign driver
//! (`campaign`).
//!
//! Every check produces a [`report::Report`]: either an inequality chain
//! with a signed margin or an identity with a residual. A check never
//! panics on bad input; preconditions surface as [`error::CheckError`].

pub mod bounds;
pub mod campaign;
pub mod det;
pub mod eig;
pub mod error;
pub mod generators;
pub mod index_seq;
pub mod matrix;
pub mod products;
pub mod report;
pub mod schur;
pub mod singular;

pub use error::{CheckError, LinalgError};
pub use index_seq::IndexSequence;
pub use matrix::ComplexMatrix;
pub use report::{BoundReport, IdentityReport, Report};
