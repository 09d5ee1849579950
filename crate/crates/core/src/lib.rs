//! Exact construction of basic classical Lie superalgebras over F_p and Q,
//! with centralizers of even nilpotent elements, their gradings and
//! centers, and the reachability properties.

pub mod centralizer;
pub mod constructors;
pub mod error;
pub mod linalg;
pub mod orbits;
pub mod reachability;
pub mod report;
pub mod roots;
pub mod sample;
pub mod scalar;
pub mod superlie;
pub mod tables;

pub use constructors::{build, AlgebraKind, BuildOptions};
pub use error::{Error, Result};
pub use scalar::{Field, Scalar};
pub use superlie::{Element, Subspace, SuperAlgebra};
