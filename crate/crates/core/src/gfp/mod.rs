//! Exact linear algebra over prime fields.

mod dense;
mod elim;
mod field;
mod sparse;

pub use dense::DenseMatrix;
pub(crate) use elim::reduced_basis;

/// Sum of two sorted sparse rows.
pub(crate) fn merge_rows(f: FieldPrime, a: &[(u32, u32)], b: &[(u32, u32)]) -> Vec<(u32, u32)> {
    sparse::merge_axpy(f, a, 1, b)
}

pub use elim::{
    complement_in, echelon, echelon_with, nullspace, pivot_columns, rank, rank_with, solve,
    solve_many, EchelonResult, EliminationConfig, IncrementalBasis,
};
pub use field::FieldPrime;
pub use sparse::{MatrixJson, SparseMatrix, SparseVector};

/// Kronecker product with the row-major block convention.
pub fn kron(a: &SparseMatrix, b: &SparseMatrix) -> crate::Result<SparseMatrix> {
    a.kron(b)
}
