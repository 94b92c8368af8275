//! Diagram monoids, their Green's structure and representation gaps.
//!
//! Scalars are generic over [`linalg::Field`]; [`RationalMatrix`] and
//! [`ModpMatrix`] are the two concrete instantiations.

pub mod acceptance;
pub mod combinat;
pub mod diagram;
pub mod error;
pub mod families;
pub mod linalg;
pub mod monoid;
pub mod protocol;
pub mod query;
pub mod rep;

pub use diagram::{Diagram, Family};
pub use error::{Error, Result};
pub use linalg::{FieldSpec, Fp, ModpMatrix, RationalMatrix};
pub use monoid::{Cells, FiniteMonoid};
