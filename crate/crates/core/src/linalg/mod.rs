//! Exact integer linear algebra. Nothing here touches floating point.

mod diagonalize;
mod matrix;
pub mod poly;
mod smith;

pub use diagonalize::{congruent_diagonalize, congruent_pivots};
pub use matrix::IntMatrix;
pub use poly::IntPoly;
pub use smith::{
    hermite_normal_form, integer_kernel, rank, smith_normal_form, SmithDecomposition,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("cannot {op} a {}x{} matrix with a {}x{} matrix", left.0, left.1, right.0, right.1)]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("{rows}x{cols} matrix needs {} entries, found {found}", rows * cols)]
    EntryCount {
        rows: usize,
        cols: usize,
        found: usize,
    },
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("form is degenerate (determinant 0)")]
    Singular,
}
