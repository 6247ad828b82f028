//! Exact verification toolkit for Dehn twist actions on surface homology,
//! the mod-2 stabilizer of a class and its orbits, the double cover defined
//! by a mod-2 class with its Prym representation, chain relations and their
//! lifts, and the Siegel-space extraction of Prym periods.
//!
//! Everything except the [`siegel`] module is exact integer arithmetic.

pub mod cover;
pub mod error;
pub mod finite;
pub mod linalg;
pub mod relations;
pub mod report;
pub mod siegel;
pub mod suites;
pub mod symplectic;

pub use error::{Error, Result};
pub use linalg::IntMatrix;
