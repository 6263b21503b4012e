mod common;

use common::*;
use lindet::algebra::arith::{frac, int};
use lindet::algebra::{LinearMatrixRep, Matrix, Rational, TernaryForm, UniPoly};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn int_matrix() -> impl Strategy<Value = Matrix> {
    prop::array::uniform3(prop::array::uniform3(-3i64..=3)).prop_map(|m| {
        let rows: Vec<&[i64]> = m.iter().map(|r| r.as_slice()).collect();
        Matrix::from_ints(&rows)
    })
}

fn linear_matrix() -> impl Strategy<Value = LinearMatrixRep> {
    prop::collection::vec(prop::array::uniform3(-3i64..=3), 9).prop_map(|e| {
        let grid: Vec<Vec<[i64; 3]>> = e.chunks(3).map(|r| r.to_vec()).collect();
        LinearMatrixRep::from_int_grid(&grid).unwrap()
    })
}

/// Rational roots by trying every `p/q` with `p | f(0)` and `q | lc`.
fn divisor_oracle(f: &UniPoly) -> Vec<Rational> {
    let c: Vec<i64> = f.coeffs().iter().map(|x| i64::try_from(x.to_integer()).unwrap()).collect();
    let mut roots = Vec::new();
    let k = c.iter().position(|x| *x != 0).unwrap();
    if k > 0 {
        roots.push(int(0));
    }
    let (a0, lc) = (c[k].abs(), c.last().unwrap().abs());
    for p in (1..=a0).filter(|p| a0 % p == 0) {
        for q in (1..=lc).filter(|q| lc % q == 0) {
            if p.gcd(&q) != 1 {
                continue;
            }
            for s in [p, -p] {
                let r = frac(s, q);
                if f.eval(&r).is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn substitution_composes(f in cubic(3), g in int_map(2), h in int_map(2)) {
        prop_assert_eq!(f.substitute(&(&g * &h)), f.substitute(&g).substitute(&h));
    }

    #[test]
    fn substitution_commutes_with_evaluation(f in cubic(3), g in invertible_map(), x in prop::array::uniform3(small_rational())) {
        prop_assert_eq!(f.substitute(&g).eval(&x), f.eval(&g.apply(&x)));
    }

    #[test]
    fn framing_multiplies_determinants(m in linear_matrix(), a in int_matrix(), b in int_matrix()) {
        let lhs = m.framed(&a, &b).det();
        let rhs = m.det().scale(&(a.det() * b.det()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rational_roots_match_divisor_search(f in poly(6, 12)) {
        prop_assert_eq!(f.rational_roots().unwrap(), divisor_oracle(&f));
    }

    #[test]
    fn planted_roots_are_found(roots in prop::collection::vec((-40i64..=40, 1i64..=30), 1..5), extra in poly(3, 5)) {
        let mut f = extra.clone();
        for &(n, d) in &roots {
            f = &f * &UniPoly::from_ints(&[-n, d]);
        }
        let found = f.rational_roots().unwrap();
        for &(n, d) in &roots {
            prop_assert!(found.contains(&frac(n, d)));
        }
        for r in &found {
            prop_assert!(f.eval(r).is_zero());
        }
    }

    #[test]
    fn interpolation_through_consecutive_points(f in poly(8, 50)) {
        let n = f.degree().unwrap() + 1;
        let values: Vec<_> = (0..n as i64).map(|x| f.eval(&int(x)).to_integer()).collect();
        prop_assert_eq!(UniPoly::from_consecutive_values(&values), f);
    }

    #[test]
    fn products_match_naive_expansion(a in cubic(4), l in prop::array::uniform3(small_rational())) {
        let lin = TernaryForm::linear(l.clone());
        let p = &a * &lin;
        let x = [frac(2, 3), int(-1), frac(5, 2)];
        prop_assert_eq!(p.eval(&x), a.eval(&x) * lin.eval(&x));
        for c in p.coeffs() {
            prop_assert!(c.denom().is_positive());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn resultant_vanishes_exactly_on_common_factors(f in poly(3, 4), g in poly(3, 4)) {
        let r = f.resultant(&g).unwrap();
        let common = f.gcd(&g).degree().unwrap_or(0) > 0;
        prop_assert_eq!(r.is_zero(), common);
    }
}
