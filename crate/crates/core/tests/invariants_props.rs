mod common;

use common::*;
use lindet::algebra::arith::int;
use lindet::algebra::{LinMap3, Rational, TernaryForm};
use lindet::invariants::{aronhold_ab, discriminant, twisted_action};
use lindet::plane_cubic::weierstrass_cubic;
use num_traits::Zero;
use proptest::prelude::*;

fn linear(c: [i64; 3]) -> TernaryForm {
    TernaryForm::from_ints(1, &c).unwrap()
}

fn conic() -> impl Strategy<Value = TernaryForm> {
    prop::array::uniform6(-3i64..=3).prop_map(|c| TernaryForm::from_ints(2, &c).unwrap())
}

/// Cubics singular at `[0:0:1]`: no monomial with `X2^2` or `X2^3`.
fn singular_at_origin() -> impl Strategy<Value = TernaryForm> {
    prop::array::uniform10(-3i64..=3).prop_map(|mut c| {
        c[5] = 0;
        c[8] = 0;
        c[9] = 0;
        TernaryForm::cubic(c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn invariants_are_invariant(v in cubic(3), g in invertible_map()) {
        let w = twisted_action(&g, &v).unwrap();
        let (r, s) = (aronhold_ab(&v).unwrap(), aronhold_ab(&w).unwrap());
        prop_assert_eq!((&r.a, &r.b, &r.delta), (&s.a, &s.b, &s.delta));
    }

    #[test]
    fn records_are_coherent(v in cubic(5)) {
        prop_assert!(aronhold_ab(&v).unwrap().is_coherent());
    }

    #[test]
    fn scaling_has_weights_four_and_six(v in cubic(3), c in small_rational()) {
        let r = aronhold_ab(&v).unwrap();
        let s = aronhold_ab(&v.scale(&c)).unwrap();
        let c2 = &c * &c;
        prop_assert_eq!(s.a, &r.a * &c2 * &c2);
        prop_assert_eq!(s.b, &r.b * &c2 * &c2 * &c2);
    }

    #[test]
    fn singular_constructions_have_zero_discriminant(
        q in conic(),
        l in prop::array::uniform3(-3i64..=3),
        m in prop::array::uniform3(-3i64..=3),
        n in prop::array::uniform3(-3i64..=3),
        nodal in singular_at_origin(),
        g in invertible_map(),
    ) {
        let conic_line = &q * &linear(l);
        let three_lines = &(&linear(l) * &linear(m)) * &linear(n);
        for v in [conic_line, three_lines, nodal] {
            prop_assert!(discriminant(&v).unwrap().is_zero());
            prop_assert!(discriminant(&v.substitute(&g)).unwrap().is_zero());
        }
    }

    #[test]
    fn smooth_constructions_have_nonzero_discriminant(
        d in prop::array::uniform3((1i64..=5).prop_union(-5..=-1)),
        g in invertible_map(),
    ) {
        let diagonal = TernaryForm::cubic([d[0], 0, 0, 0, 0, 0, d[1], 0, 0, d[2]]);
        prop_assert!(!discriminant(&diagonal).unwrap().is_zero());
        prop_assert!(!discriminant(&diagonal.substitute(&g)).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn weierstrass_calibration(a in small_rational(), b in small_rational()) {
        prop_assume!(int(4) * &a * &a * &a + int(27) * &b * &b != Rational::zero());
        let r = aronhold_ab(&weierstrass_cubic(&a, &b)).unwrap();
        prop_assert_eq!(r.a, int(1296) * &a);
        prop_assert_eq!(r.b, int(46656) * &b);
    }
}

#[test]
fn cuspidal_cubic_is_singular() {
    // X1^2 X2 - X0^3
    let cusp = TernaryForm::cubic([-1, 0, 0, 0, 0, 0, 0, 1, 0, 0]);
    assert!(discriminant(&cusp).unwrap().is_zero());
    let g = LinMap3::from_ints([[1, 2, 0], [0, 1, -1], [3, 0, 1]]);
    assert!(discriminant(&cusp.substitute(&g)).unwrap().is_zero());
}
