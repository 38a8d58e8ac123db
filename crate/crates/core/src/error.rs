//! Error type shared by every module of the crate.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building representations, ideals,
/// fixed points or interpolants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two operands live over different numbers of variables.
    #[error("ambient mismatch: P^{left} versus P^{right}")]
    AmbientMismatch { left: usize, right: usize },

    /// A degree argument was negative.
    #[error("negative degree {0}")]
    NegativeDegree(i64),

    /// A character with a negative exponent appeared where only honest
    /// monomials are allowed.
    #[error("character {0} has a negative exponent")]
    NegativeExponent(String),

    /// `expand` met a negative multiplicity.
    #[error("virtual representation not effective: {0}")]
    NotEffective(String),

    /// A blow-up center tangent is not contained in the ambient tangent.
    #[error("center tangent not a subrepresentation: {0}")]
    CenterNotSubrep(String),

    /// A normal character occurs more than once, so the fixed points on the
    /// exceptional fiber would not be isolated.
    #[error("non-isolated fixed points on exceptional fiber: {0} repeats")]
    NonIsolated(String),

    /// Internal consistency failure in a generator or classification step.
    #[error("internal error: {0}")]
    Internal(String),

    /// A tangent character has weight zero, or the weight entries collide.
    #[error("degenerate weights: {0}")]
    DegenerateWeights(String),

    /// The Bott sum did not come out as a nonnegative integer.
    #[error("weight or fixed-point data inconsistent: total {0}")]
    NonIntegerTotal(String),

    /// Lagrange interpolation received a repeated node.
    #[error("duplicate abscissa {0}")]
    DuplicateAbscissa(i64),

    /// Lagrange interpolation received no nodes.
    #[error("interpolation needs at least one point")]
    NoPoints,

    /// The Hilbert function did not settle on a polynomial below the ceiling.
    #[error("Hilbert polynomial did not stabilize below degree {0}")]
    HilbertNotStabilized(i64),

    /// Family parameters outside the supported range.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A degree below the family's threshold was requested.
    #[error("below flatness/injectivity threshold: d = {d} < {d_min}")]
    BelowThreshold { d: i64, d_min: i64 },

    /// A textual representation could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}
