//! Bounded chain complexes of `kE`-modules, graded chain maps, tensor
//! products with Koszul signs, mapping cones and homology.

mod chain_map;
mod complex;
mod homology;
mod kunneth;
mod serial;
mod tensor;

pub use chain_map::ChainMap;
pub use complex::Complex;
pub use homology::{cone_homology_dims, homology_dims, induced_map, is_quasi_iso, Homology, HomologyDegree};
pub use kunneth::Kunneth;
pub use serial::{ComplexJson, DegreeJson, COMPLEX_FORMAT};
pub use tensor::{nested_multidegrees, Summand, TensorComplex, TensorLayout};

/// Sum of the homology dimensions over all degrees.
pub fn total_homology_dim(c: &Complex) -> crate::Result<usize> {
    Ok(homology_dims(c)?.values().sum())
}
