//! Dirichlet characters, L-functions and Dedekind zeta functions of abelian
//! fields, with class-group and regulator oracles for quadratic fields.

pub mod character;
pub mod dedekind;
pub mod field;
pub mod lfunc;
pub mod quadratic;
pub mod torsion;

pub use character::{DirichletCharacter, Parity};
pub use dedekind::{dedekind_zeta_leading, field_gamma_leading, xi_leading};
pub use field::{kronecker, kronecker_character, KEntry, KTheoryData, NumberFieldRecord};
pub use lfunc::{dirichlet_l_complex, dirichlet_l_leading};
pub use quadratic::{fundamental_unit, is_fundamental, quadratic_invariants, QuadraticInvariants};
pub use torsion::torsion_w_n;
