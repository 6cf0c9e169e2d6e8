//! Exact multiple harmonic (q-)sums, connected sums and finite multiple zeta
//! values, with verifiers for the Ohno-type identities relating them.
//!
//! Everything is computed exactly: rationals for classical and q-sums at a
//! rational sample point, rational functions in `q` for symbolic checks,
//! truncated power series in `x` for connected sums, and residues modulo
//! `p^n` for finite multiple zeta values.

pub mod connect;
mod error;
pub mod exactnum;
pub mod fmzv;
pub mod indexcore;
pub mod qsum;
pub mod report;

pub use error::{Error, Result};
pub use indexcore::{ExponentTuple, Index};
pub use report::{Status, VerificationReport};
