//! Exact large-complex-structure-limit computations for Calabi-Yau hypersurfaces in
//! toric varieties: from a reflexive polytope to Gröbner bases of the toric ideal,
//! indicial ideals, Chow-ring valued hypergeometric series, the mirror map, the
//! prepotential and instanton numbers.

pub mod chow;
pub mod cone;
pub mod constants;
pub mod error;
pub mod gkz;
pub mod graded;
pub mod groebner;
pub mod indicial;
pub mod io;
pub mod lattice;
pub mod mirror;
pub mod linalg;
pub mod pipeline;
pub mod poly;
pub mod polytope;
pub mod report;
pub mod series;
pub mod triangulation;

pub use error::{Error, Result};
