//! Exact linear algebra over the rationals and prime fields.

pub mod echelon;
pub mod field;
pub mod matrix;

pub use echelon::{
    image, kernel, kernel_with, quotient_dim, rank, rank_with, solve, Echelon, Insert, PivotRule,
    QuotientSpace, Solver, Subspace,
};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use matrix::{
    dense_from_sparse, sparse_add, sparse_collect, sparse_from_dense, sparse_lincomb, sparse_scale,
    sparse_sub, Matrix, SVec,
};
