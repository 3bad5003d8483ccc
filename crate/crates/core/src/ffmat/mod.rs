//! Exact linear algebra over a prime field `F_p`.
//!
//! Matrices are stored densely (row-major) or as sparse columns. Two elimination
//! routes exist: a dense row reduction to reduced row echelon form, and a sparse
//! column echelon that tracks the combination producing each echelon vector. Both
//! pivot deterministically and produce bit-identical ranks, kernel bases and
//! solutions, so the route is selected purely on size.

mod echelon;
mod field;
mod matrix;
mod sparse;

pub use echelon::{ColumnEchelon, Insert};
pub use field::PrimeField;
pub use matrix::{Elimination, FMatrix, Route};
pub use sparse::SparseVec;
