//! Generating functions as executable, cross-checked code.
//!
//! * [`series`]: exact truncated power series, composition and reversion.
//! * [`special`]: double-precision special functions.
//! * [`quadrature`]: adaptive Gauss-Kronrod integration used as an oracle.
//! * [`catalog`]: the registry of generating-function identities.
//! * [`lagrange`]: Lagrange inversion, Bethe-lattice and tree-function sums.
//! * [`harness`]: the verification engine and its reports.

// Domain checks are written `!(x < bound)` on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod catalog;
pub mod exact;
pub mod harness;
pub mod lagrange;
pub mod quadrature;
pub mod series;
pub mod special;

pub use exact::Rational;
pub use series::{Series, SeriesError};

/// Real-valued carrier for numeric evaluation (about 16 significant digits).
pub type Real = f64;
