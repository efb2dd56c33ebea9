use thiserror::Error;

use crate::algebra::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table entry {value} at ({row}, {col}) is out of range for a universe of size {size}")]
    Range {
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },

    #[error("malformed table: {0}")]
    Shape(String),

    #[error("not a Hilbert algebra: {0}")]
    Invalid(ValidationReport),

    #[error("variable x{index} is unbound (assignment has {len} values)")]
    UnboundVariable { index: usize, len: usize },

    #[error("size {size} exceeds the configured cap of {cap}")]
    SizeLimit { size: usize, cap: usize },

    #[error("the set {0} is not an implicative filter")]
    NotAFilter(String),

    #[error("filter {0} is not a member of the lattice")]
    NotInLattice(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A step that a proof guarantees to succeed did not. Always a bug.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}
