use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use std::collections::BTreeMap;
use zetaval::charp::{
    detstar_trivialization, functional_equation, order_leading_at, point_count_curve, weil_etale_rank_order, CurveSpec,
    WeilPolySet,
};
use zetaval::dirichlet::{dedekind_zeta_leading, NumberFieldRecord};
use zetaval::hodge::{deligne_dims, gamma_factor, linfty_order, HodgeStructure};
use zetaval::number_ring::{cohomology_tables, vanishing_order_prediction};
use zetaval::numeric::BallReal;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn hodge_structure() -> impl Strategy<Value = HodgeStructure> {
    (0u32..=4, prop::collection::vec(0u32..=3, 5), 0u32..=3, 0u32..=3).prop_map(|(w, hs, plus, minus)| {
        let mut hpq = BTreeMap::new();
        for p in 0..=w {
            let qq = w - p;
            if p < qq && hs[p as usize] > 0 {
                hpq.insert((p, qq), hs[p as usize]);
                hpq.insert((qq, p), hs[p as usize]);
            }
        }
        let split = if w % 2 == 0 && plus + minus > 0 {
            hpq.insert((w / 2, w / 2), plus + minus);
            Some((plus, minus))
        } else {
            None
        };
        if hpq.is_empty() {
            hpq.insert((0, w), 1);
            hpq.insert((w, 0), 1);
            if w == 0 {
                return HodgeStructure::real_place();
            }
        }
        HodgeStructure::new(w, hpq, split).unwrap()
    })
}

fn prime_upto_100() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ball_operations_enclose_exact(a in -10_000i64..10_000, b in 1i64..10_000, c in -10_000i64..10_000, d in 1i64..10_000) {
        let prec = 40;
        let (x, y) = (BallReal::from_ratio(a, b, prec), BallReal::from_ratio(c, d, prec));
        let (qx, qy) = (q(a, b), q(c, d));
        prop_assert!(x.add(&y).contains_rational(&(&qx + &qy)));
        prop_assert!(x.sub(&y).contains_rational(&(&qx - &qy)));
        prop_assert!(x.mul(&y).contains_rational(&(&qx * &qy)));
        if c != 0 {
            prop_assert!(x.div(&y).unwrap().contains_rational(&(&qx / &qy)));
        }
        if a > 0 {
            let s = x.sqrt().unwrap();
            prop_assert!(s.sqr().contains_rational(&qx));
        }
    }

    #[test]
    fn archimedean_order_two_routes(h in hodge_structure(), n in -6i64..=6) {
        let order = linfty_order(&h, n).unwrap();
        prop_assert_eq!(order, gamma_factor(&h).leading_exact(n).0);
        prop_assert_eq!(gamma_factor(&h).degree(), h.dimension());
    }

    #[test]
    fn deligne_dimension_is_pole_order(h in hodge_structure(), n in -6i64..=6) {
        let i = i64::from(h.weight());
        let dims = deligne_dims(&h, n).unwrap();
        let order = linfty_order(&h, n).unwrap();
        if i >= 2 * n {
            prop_assert_eq!(dims.get(&i).copied().unwrap_or(0), -order);
        } else {
            prop_assert_eq!(order, 0);
        }
    }

    #[test]
    fn euler_characteristic_matches_closed_form(r1 in 0u32..=6, r2 in 0u32..=4, n in -8i64..=8) {
        prop_assume!(r1 + r2 > 0);
        let f = NumberFieldRecord::new_unchecked("F", r1 + 2 * r2, r1, r2, 5, None, None);
        let p = vanishing_order_prediction(&f, n).unwrap();
        prop_assert_eq!(p.closed_form, p.euler_characteristic);
        let [_, _, c] = cohomology_tables(&f, n);
        prop_assert_eq!(c.euler_order(), f.rho(n));
    }

    #[test]
    fn point_counted_curves(p in prime_upto_100(), a4 in 0i64..100, a6 in 0i64..100, n in -2i64..=3) {
        let spec = CurveSpec::Weierstrass { a: [0, 0, 0, a4, a6] };
        prop_assume!(point_count_curve(&spec, p).is_ok());
        let pc = point_count_curve(&spec, p).unwrap();
        let w = WeilPolySet::curve(p, &pc.p1).unwrap();
        // #E(F_p) = P_1(1)
        prop_assert_eq!(pc.p1.iter().sum::<i64>(), pc.count as i64);
        let fe = functional_equation(&w).unwrap();
        prop_assert_eq!(fe.chi, 0);
        let d = detstar_trivialization(&w, n);
        prop_assert_eq!(d.agrees_with_limit, Some(true));
        let l = order_leading_at(&w, n);
        prop_assert_eq!(l.coefficient().exact(), Some(&d.value));
        let r = weil_etale_rank_order(&w, n).unwrap();
        prop_assert_eq!(r.order_t, l.order());
        prop_assert_eq!(r.order_s, l.order());
    }
}

#[test]
fn hyperelliptic_genus_two() {
    let spec = CurveSpec::Hyperelliptic { f: vec![1, 0, 0, 0, 0, 1] };
    for p in [3u64, 7, 11, 13] {
        let pc = point_count_curve(&spec, p).unwrap();
        assert_eq!(pc.genus, 2);
        let w = WeilPolySet::curve(p, &pc.p1).unwrap();
        assert!(w.rh_deviation(1) < 1e-6);
        for n in -2..=3 {
            assert_eq!(detstar_trivialization(&w, n).agrees_with_limit, Some(true));
        }
    }
}

#[test]
fn precision_escalation_narrows_and_nests() {
    let f = NumberFieldRecord::quadratic("Q(sqrt 5)", 5).unwrap();
    for n in [-3, 2, 3] {
        let lo = dedekind_zeta_leading(&f, n, 96).unwrap().to_ball(96);
        let hi = dedekind_zeta_leading(&f, n, 256).unwrap().to_ball(256);
        assert!(lo.overlaps(&hi), "n={n}");
        assert!(hi.rel_width() <= lo.rel_width(), "n={n}");
        assert!(hi.rel_width() < 1e-60, "n={n}");
    }
}

#[test]
fn evaluation_is_deterministic() {
    let f = NumberFieldRecord::quadratic("Q(sqrt -23)", -23).unwrap();
    for n in [-2, 1, 4] {
        let a = dedekind_zeta_leading(&f, n, 128).unwrap().to_ball(128);
        let b = dedekind_zeta_leading(&f, n, 128).unwrap().to_ball(128);
        assert_eq!(a.mid_dyadic(), b.mid_dyadic());
        assert_eq!(a.radius(), b.radius());
    }
}
