//! Weil-etale cohomology of `Spec O_F` and the special values it predicts.

pub mod kdata;
pub mod order;
pub mod special;
pub mod tables;

pub use kdata::KSymbols;
pub use order::{
    duality_check, duality_report, epsilon_symmetry_failures, vanishing_order_prediction, DualityFailure,
    DualityReport, OrderPrediction, DUALITY_DEGREES,
};
pub use special::{
    closed_factor, correction_factor, derived_derham_det, fe_consistency_check, special_value_against,
    special_value_prediction, ClosedFactor, DerhamDeterminant, FeConsistency, FundamentalLineReport, Status,
};
pub use tables::{
    cohomology_tables, cohomology_tables_with, delta, epsilon, rank_h1, CohomologyTable, GroupDescriptor, Theory,
    TorsionFactor,
};
