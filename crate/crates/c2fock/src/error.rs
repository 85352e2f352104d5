//! The single error type shared by every module of the crate.

use alloc::string::String;

/// Failures reported by the algebraic and combinatorial operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A quantum integer or factorial was requested for a negative argument.
    #[error("negative argument {0}")]
    NegativeArgument(i64),
    /// Division by the zero polynomial.
    #[error("division by zero")]
    DivisionByZero,
    /// An exact division in ℤ[q, q⁻¹] had a non-zero remainder.
    #[error("NON_DIVISIBLE: quotient is not a Laurent polynomial with integer coefficients")]
    NonDivisible,
    /// A textual literal (polynomial, wall, weight) could not be parsed.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    /// A column configuration violates the stacking pattern or the wall rules.
    #[error("invalid wall: {0}")]
    InvalidWall(String),
    /// Adding a block would not produce a proper Young wall.
    #[error("INADMISSIBLE: cannot add a {color}-block to column {column}")]
    Inadmissible { column: usize, color: u8 },
    /// Removing a block would not produce a proper Young wall.
    #[error("NOT_REMOVABLE: column {column} has no removable {color}-block")]
    NotRemovable { column: usize, color: u8 },
    /// An operation that requires a reduced wall received a non-reduced one.
    #[error("NOT_REDUCED: {0} contains a removable delta-column")]
    NotReduced(String),
    /// Peeling was requested on the ground-state wall.
    #[error("GROUND: the ground-state wall cannot be peeled")]
    Ground,
    /// No admissible chain of single additions connects the two walls.
    #[error("NO_CHAIN: {0}")]
    NoChain(String),
    /// Two operands live over different ground-state walls.
    #[error("ground-state mismatch: {0} vs {1}")]
    GroundMismatch(u8, u8),
}
