#![allow(dead_code)]

use lindet::algebra::arith::{frac, int};
use lindet::algebra::{LinMap3, Rational, TernaryForm, UniPoly};
use proptest::prelude::*;

pub fn cubic(range: i64) -> impl Strategy<Value = TernaryForm> {
    prop::array::uniform10(-range..=range).prop_map(TernaryForm::cubic)
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

pub fn int_map(range: i64) -> impl Strategy<Value = LinMap3> {
    prop::array::uniform3(prop::array::uniform3(-range..=range)).prop_map(LinMap3::from_ints)
}

pub fn invertible_map() -> impl Strategy<Value = LinMap3> {
    prop::array::uniform3(prop::array::uniform3(small_rational()))
        .prop_map(LinMap3::new)
        .prop_filter("singular", |g| g.det() != int(0))
}

/// Unimodular: a product of elementary shears and a permutation.
pub fn unimodular_map() -> impl Strategy<Value = LinMap3> {
    (prop::array::uniform3(-3i64..=3), 0usize..6).prop_map(|(s, k)| {
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let lower = LinMap3::from_ints([[1, 0, 0], [s[0], 1, 0], [s[1], s[2], 1]]);
        let upper = LinMap3::from_ints([[1, s[2], s[0]], [0, 1, s[1]], [0, 0, 1]]);
        &(&lower * &upper) * &LinMap3::permutation(perms[k])
    })
}

pub fn poly(max_degree: usize, range: i64) -> impl Strategy<Value = UniPoly> {
    (1..=max_degree)
        .prop_flat_map(move |d| (prop::collection::vec(-range..=range, d), (1..=range).prop_union(-range..=-1)))
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            UniPoly::from_ints(&c)
        })
}
