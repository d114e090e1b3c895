//! Exact symbolic engine for universal affine vertex superalgebras, the
//! rectangular W-superalgebra generators W⁽¹⁾, W⁽²⁾ built from a column
//! determinant, and verifiers for their OPEs and for the affine super Yangian
//! maps into their mode algebras.

pub mod cli;
pub mod error;
pub mod appendix_suite;
pub mod foundation;
pub mod mutation;
pub mod ope_suite;
pub mod report;
pub mod superalgebra;
pub mod suites;
pub mod vertex;
pub mod w_construct;
pub mod yangian;

pub use error::{Error, Result};
pub use foundation::{Instance, Scalar, Q};
