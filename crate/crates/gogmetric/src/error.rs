//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by validation, normal forms, and the geometric algorithms.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// The underlying graph is not connected.
    #[error("graph of groups is not connected")]
    DisconnectedGraph,

    /// A finite vertex group table is not a group (associativity, identity,
    /// or inverses fail).
    #[error("finite vertex group table at `{vertex}` is not a group: {reason}")]
    NonGroupTable { vertex: String, reason: String },

    /// An edge-group inclusion is not an injective homomorphism into the
    /// vertex group, or the two inclusions of an edge are incompatible.
    #[error("edge `{edge}` has an invalid inclusion: {reason}")]
    NonInjectiveInclusion { edge: String, reason: String },

    /// An edge has length <= 0.
    #[error("edge `{edge}` has nonpositive length")]
    NonpositiveLength { edge: String },

    /// A word is syntactically or structurally malformed (edge endpoints do
    /// not match, letters live at the wrong vertex, not a loop where a loop
    /// is required, ...).
    #[error("malformed word: {0}")]
    MalformedWord(String),

    /// The brute-force tree ball exceeded its vertex budget (or the tree is
    /// not locally finite at some vertex).
    #[error("tree ball budget exceeded ({0})")]
    BallBudgetExceeded(String),

    /// A requested elementary move is not applicable.
    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),

    /// Chain-following for maximal elliptic subgroups ran into a cycle with
    /// growing index (no maximal elliptic subgroup above the edge group).
    #[error("elliptic chain diverges: {0}")]
    ChainDiverges(String),

    /// Candidate enumeration exceeded its explosion cap.
    #[error("candidate enumeration exceeded cap: {0}")]
    ExplosionGuard(String),

    /// `make_optimal` dropped the Lipschitz constant strictly below the
    /// supplied candidate bound: the input map did not realize the distance.
    #[error("map was not minimal-stretch: constant dropped below bound ({0})")]
    NotMinimal(String),

    /// Rescaling produced a degenerate (entirely collapsed) component.
    #[error("rescaling collapses a whole component: {0}")]
    ZeroLengthComponent(String),

    /// A witness certificate failed verification.
    #[error("witness check failed: {0}")]
    WitnessInvalid(String),

    /// An iteration budget was exhausted before reaching a certified state.
    #[error("iteration budget exhausted: {0}")]
    BudgetExhausted(String),

    /// Parse error in the text formats.
    #[error("parse error: {0}")]
    Parse(String),

    /// Generic invariant violation (internal consistency failure surfaced to
    /// the caller instead of panicking).
    #[error("invariant violation: {0}")]
    Invariant(String),
}
