//! Exact computation of Schur multipliers and related invariants of
//! finite-dimensional nilpotent Lie algebras over the rationals.
//!
//! Two independent routes to `dim M(L)` are provided:
//!
//! - [`multiplier`]: second cohomology with trivial coefficients, a
//!   polynomial-size linear system on the structure constants;
//! - [`hopf`]: the Hopf formula `(R ∩ F^2) / [R, F]` on a free nilpotent
//!   presentation built from a Hall basis.
//!
//! On top of these sit covers and epicenters (capability), the Ganea map of
//! class-two algebras, a catalogue of named low-dimensional algebras with
//! their published invariants, and a verification harness that recomputes
//! every one of them.
//!
//! ```
//! use liemult::{catalogue, multiplier};
//!
//! let l = catalogue::get("37B").unwrap();
//! let report = multiplier::multiplier_report(&l).unwrap();
//! assert_eq!((report.dim_m, report.s), (11, Some(5)));
//! ```

pub mod algebra;
pub mod catalogue;
pub mod cli;
pub mod error;
pub mod format;
pub mod hopf;
pub mod linalg;
pub mod multiplier;
pub mod verify;

pub use algebra::{LieAlgebra, SeriesReport, ValidationReport};
pub use error::{Error, Result};
pub use linalg::{Scalar, SparseVec, Subspace};
pub use multiplier::MultiplierReport;
