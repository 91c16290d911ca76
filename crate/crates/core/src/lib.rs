//! Verification engine for special values of zeta functions of number rings and
//! of varieties over finite fields.
//!
//! The crate is organized bottom-up:
//!
//! - [`numeric`]: ball arithmetic, Hurwitz zeta, Bernoulli numbers, Gamma factors.
//! - [`dirichlet`]: characters, Dirichlet and Dedekind zeta leading data, quadratic
//!   class-number and regulator oracles.
//! - [`hodge`]: archimedean Gamma factors from Hodge numbers and Deligne cohomology dimensions.
//! - [`number_ring`]: cohomology tables, vanishing orders and special-value predictions for
//!   rings of integers.
//! - [`charp`]: zeta functions of varieties over finite fields from Weil polynomials.
//! - [`harness`]: JSON ingestion, verification jobs and reports.

pub mod charp;
pub mod dirichlet;
pub mod error;
pub mod harness;
pub mod hodge;
pub mod number_ring;
pub mod numeric;

pub use error::{Error, Result};
