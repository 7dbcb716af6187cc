//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Partition text that could not be parsed; carries the offending token.
    #[error("cannot parse partition token `{token}`: {reason}")]
    Parse { token: String, reason: String },

    /// Two partitions that must partition the same integer do not.
    #[error("weight mismatch: |lambda| = {lambda}, |mu| = {mu}")]
    WeightMismatch { lambda: u64, mu: u64 },

    /// Laurent polynomials over different variable sets.
    #[error("variable count mismatch: {left} vs {right}")]
    NumVarsMismatch { left: usize, right: usize },

    /// A request whose parameters violate a documented precondition.
    #[error("invalid request: {0}")]
    InvalidRequest(String),

    /// A derived closed form disagreed with brute force inside its
    /// certification window. Never ignored: the formula is not emitted.
    #[error("certification failed for {kind} at n = {n}: formula gives {formula}, brute force gives {brute}")]
    CertificationFailed {
        kind: String,
        n: i64,
        formula: String,
        brute: String,
    },

    /// Closed-form evaluation below the certified starting point.
    #[error("evaluation at n = {n} is below valid_from = {valid_from}")]
    BelowValidFrom { n: i64, valid_from: i64 },

    /// Not enough sequence terms to attempt even the smallest recurrence.
    #[error("insufficient terms: got {got}, need at least {need}")]
    InsufficientTerms { got: usize, need: usize },

    /// Leading recurrence coefficient vanishes at an extension point.
    #[error("singular point: leading coefficient vanishes at n = {n}")]
    SingularPoint { n: i64 },

    /// Recurrence extension required a non-exact division, which signals
    /// that the recurrence does not hold for the sequence.
    #[error("inconsistent recurrence: division at n = {n} is not exact")]
    InexactDivision { n: i64 },
}
