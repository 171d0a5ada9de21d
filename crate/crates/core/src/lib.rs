//! Zeta-regularized Casimir energy of compact hyperbolic 2-orbifolds.
//!
//! The energy `ζ_Γ(-1/2)` splits into an identity term (area), an elliptic
//! term (cone points) and a hyperbolic term (closed geodesics). Each piece is
//! evaluated as a truncated series carrying a rigorous truncation bound, with
//! an adaptive quadrature route kept alongside as an independent check.
//!
//! The crate is `no_std` (it needs `alloc`); IO and the command line live in
//! the companion `casimir` crate.
#![cfg_attr(not(test), no_std)]
// `!(x > 0.0)` is used on purpose so that NaN fails domain checks.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod contributions;
pub mod error;
pub mod quadrature;
pub mod specfun;
pub mod sum;
pub mod triangle;

pub use error::{Error, Result};
