use thiserror::Error;

use crate::shape::Cell;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: parts must be positive and weakly decreasing, got {0:?}")]
    InvalidPartition(Vec<usize>),
    #[error("inner partition is not contained in the outer partition")]
    InnerNotContained,
    #[error("cell {0} lies outside the diagram")]
    CellOutside(Cell),
    #[error("cell coordinates are 1-indexed; got a zero row or column")]
    InvalidCell,
    #[error("row {row} is above the top row {top_row} of the strip")]
    RowAboveStrip { row: usize, top_row: usize },
    #[error("strip has no cell in column {0}")]
    NoCellInColumn(usize),
    #[error("unsupported shape: {0}")]
    UnsupportedShape(&'static str),
    #[error("cell {0} is not active")]
    InactiveCell(Cell),
    #[error("column {col} of strip {strip} is not active")]
    InactiveColumn { strip: usize, col: usize },
    #[error("tableau is not semistandard")]
    NotSemistandard,
    #[error("tableau is not a minimal tableau of its shape")]
    NotMinimal,
    #[error("filling is not a reverse plane partition")]
    NotReversePlanePartition,
    #[error("array shape does not match the diagram")]
    ShapeMismatch,
    #[error("strip index {0} out of range")]
    StripIndexOutOfRange(usize),
    #[error("array is not in the restricted Hillman-Grassl image of any excited diagram")]
    RestrictedImageViolation,
    #[error("array matches more than one excited diagram")]
    AmbiguousClassification,
    #[error("internal structural invariant violated: {0}")]
    Structural(&'static str),
    #[error("exact division failed: {0}")]
    NonIntegral(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
