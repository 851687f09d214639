//! Exact Pieri rules for Jack and Macdonald polynomials in superspace.

pub mod coeffield;
pub mod orthobasis;
pub mod pieri;
pub mod sixvertex;
pub mod verify;
pub mod superalgebra;
pub mod superpartitions;
