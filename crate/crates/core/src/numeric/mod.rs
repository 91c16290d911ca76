//! Arbitrary-precision kernel: balls, exact rationals and special functions.

pub mod ball;
pub mod bernoulli;
pub mod complex;
pub mod elementary;
pub mod gamma;
pub mod hurwitz;
pub mod leading;
pub mod mag;
pub mod rational;

pub use ball::BallReal;
pub use bernoulli::{bernoulli, bernoulli_poly, bernoulli_table};
pub use complex::ComplexBall;
pub use gamma::{gamma_leading, gamma_leading_exact, GammaKind};
pub use hurwitz::{hurwitz_constant_term, hurwitz_zeta, zeta_int, GUARD_BITS};
pub use leading::{Coefficient, LeadingTaylor, PiMonomial};
pub use mag::Mag;
pub use rational::ExactRational;
