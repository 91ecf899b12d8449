//! Error types shared across the library.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("matrix is not unitriangular with respect to the given order")]
    NotUnitriangular,
    #[error("no bar-invariant solution exists for the requested lattice")]
    NoSolution,
    #[error("division is not exact")]
    NotDivisible,
    #[error("matrix shapes are incompatible")]
    ShapeMismatch,
    #[error("cannot parse Laurent polynomial literal {0:?}")]
    BadPolyLiteral(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("charge entries must be weakly decreasing and lie in the index set")]
    BadCharge,
    #[error("charges disagree")]
    ChargeMismatch,
    #[error("residue {0} lies outside the index set")]
    ResidueOutsideIndexSet(i64),
    #[error("column reading of an unbounded diagram requires a truncation level")]
    UnboundedWithoutTruncation,
    #[error("transpose requires the two-sided index set Z")]
    BoundedIndexSet,
    #[error("weights disagree")]
    WeightMismatch,
    #[error("parts do not form a partition: {0:?}")]
    BadPartition(Vec<i64>),
    #[error("number of components differs from the level of the charge")]
    LevelMismatch,
    #[error("tableau is not reverse-standard")]
    NotReverseStandard,
    #[error("tableau is not standard")]
    NotStandard,
    #[error("malformed input: {0}")]
    BadInput(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FockError {
    #[error("weight space is empty for this charge and content")]
    EmptyBlock,
    #[error("vector does not belong to the block")]
    BlockMismatch,
    #[error("operation requires the other tensor-order structure")]
    WrongStructure,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("workspace bound exceeded: {0} cells needed, {1} allowed")]
    DeskBoundExceeded(usize, usize),
    #[error("a polynomial generator has a non-integer eigenvalue")]
    NonIntegerEigenvalue,
    #[error("defining relation failed: {0}")]
    RelationFailed(String),
    #[error("matrix shapes are incompatible")]
    ShapeMismatch,
    #[error("linear system is singular")]
    Singular,
}
