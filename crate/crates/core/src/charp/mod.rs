//! Zeta functions of smooth projective varieties over finite fields.

pub mod leading;
pub mod points;
pub mod poly;
pub mod weil;

pub use leading::{
    detstar_trivialization, milne_chi, order_from_multiplicities, order_leading_at, root_multiplicities,
    single_block, weil_etale_rank_order, DetStar, DetStarDegree, HodgeNumbersFp, RankOrderReport,
};
pub use points::{point_count_curve, CurveSpec, PointCount, MAX_PRIME};
pub use poly::Poly;
pub use weil::{functional_equation, prime_power, zeta_from_weil_polys, FunctionalEquation, RationalFunction, WeilPolySet};
