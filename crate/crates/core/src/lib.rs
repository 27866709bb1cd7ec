//! Exact homological algebra over group algebras of elementary abelian
//! p-groups.
//!
//! Modules over `kE = k[X_1..X_r]/(X_i^p)` are stored as commuting nilpotent
//! action matrices over GF(p). On top of that sit bounded chain complexes,
//! graded chain maps, mapping cones and homology, an exterior-algebra model,
//! and the constructions that assemble free complexes whose total homology
//! falls below `2^r`.

pub mod chaincx;
pub mod constructions;
mod error;
pub mod exterior;
pub mod gfp;
pub mod modrep;

pub use error::{Error, Result};
pub use gfp::{DenseMatrix, FieldPrime, SparseMatrix, SparseVector};
