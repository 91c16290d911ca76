//! Archimedean bookkeeping: Gamma factors from Hodge numbers, their orders and
//! leading coefficients, real Deligne cohomology dimensions and the completed
//! zeta function of a number ring.

pub mod completed;
pub mod deligne;
pub mod gamma_factor;
pub mod structure;

pub use completed::{archimedean_leading, archimedean_order, completed_zeta_leading};
pub use deligne::{deligne_dims, deligne_dims_total};
pub use gamma_factor::{gamma_factor, linfty_order, GammaFactor, GammaTerm};
pub use structure::{number_ring_hodge, HodgeStructure};
