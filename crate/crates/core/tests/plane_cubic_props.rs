mod common;

use common::*;
use lindet::algebra::arith::int;
use lindet::algebra::{LinMap3, ProjPoint};
use lindet::elliptic::{is_isomorphic, jacobian, EllipticCurve};
use lindet::plane_cubic::*;
use num_traits::Zero;
use proptest::prelude::*;

fn permutation() -> impl Strategy<Value = LinMap3> {
    (0usize..6).prop_map(|k| {
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        LinMap3::permutation(perms[k])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn flexes_lie_on_curve_and_hessian(v in cubic(3)) {
        let Ok(report) = rational_flexes(&v) else { return Ok(()) };
        let h = v.hessian().unwrap();
        for p in &report.rational_flexes {
            prop_assert!(v.eval_point(p).is_zero());
            prop_assert!(h.eval_point(p).is_zero());
        }
        prop_assert_eq!(report.total_expected, 9);
    }

    #[test]
    fn small_flexes_are_all_found(v in cubic(2)) {
        let Ok(report) = rational_flexes(&v) else { return Ok(()) };
        let h = v.hessian().unwrap();
        for p in search_curve_points(&v, 6) {
            if h.eval_point(&p).is_zero() {
                prop_assert!(report.rational_flexes.contains(&p));
            }
        }
    }

    #[test]
    fn planted_flex_is_found(a in -5i64..=5, b in -5i64..=5, g in unimodular_map()) {
        prop_assume!(4 * a * a * a + 27 * b * b != 0);
        let w = weierstrass_cubic(&int(a), &int(b));
        let v = w.substitute(&g);
        let flex = g.inverse().unwrap().apply_point(&ProjPoint::from_ints([0, 1, 0]).unwrap()).unwrap();
        prop_assert!(rational_flexes(&v).unwrap().rational_flexes.contains(&flex));
        prop_assert!(!is_generic(&v));
    }

    #[test]
    fn flexes_follow_permutations(v in cubic(3), p in permutation()) {
        let Ok(report) = rational_flexes(&v) else { return Ok(()) };
        let moved = rational_flexes(&v.substitute(&p)).unwrap().rational_flexes;
        let mut back: Vec<ProjPoint> = moved.iter().map(|q| p.apply_point(q).unwrap()).collect();
        back.sort();
        prop_assert_eq!(back, report.rational_flexes);
    }

    #[test]
    fn weierstrass_certificate(v in cubic(2)) {
        let Ok(report) = rational_flexes(&v) else { return Ok(()) };
        let Some(flex) = report.rational_flexes.first() else { return Ok(()) };
        let wc = to_weierstrass(&v, flex).unwrap();
        let back = v.substitute(&wc.g.inverse().unwrap());
        prop_assert_eq!(back, weierstrass_cubic(&wc.a, &wc.b).scale(&wc.scale));
        let e = EllipticCurve::new(wc.a, wc.b).unwrap();
        prop_assert!(is_isomorphic(&jacobian(&v).unwrap().curve, &e).is_some());
    }

    #[test]
    fn genericity_ignores_scaling(v in cubic(2), c in (2i64..=7).prop_union(-7..=-1)) {
        prop_assert_eq!(is_generic(&v), is_generic(&v.scale(&int(c))));
    }

    #[test]
    fn curve_point_search_is_sound_and_monotone(v in cubic(2), b in 1u64..4) {
        let small = search_curve_points(&v, b);
        let large = search_curve_points(&v, b + 2);
        for p in &small {
            prop_assert!(v.eval_point(p).is_zero());
            prop_assert!(large.contains(p));
        }
    }
}
