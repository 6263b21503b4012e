//! Coefficient tables of the degree-4 and degree-6 invariants of a ternary cubic.
//!
//! Each entry is `(coefficient, [i, j, ...])` and contributes
//! `coefficient * c[i] * c[j] * ...`, where `c` is the coefficient vector in the
//! order `[X0^3, X0^2X1, X0^2X2, X0X1^2, X0X1X2, X0X2^2, X1^3, X1^2X2, X1X2^2, X2^3]`.
//! Scaled so that the Weierstrass cubic `X1^2X2 - X0^3 - aX0X2^2 - bX2^3` has
//! `A = 1296a` and `B = 46656b`.

pub(crate) const DEGREE4_TERMS: [(i64, [u8; 4]); 25] = [
    (-3888, [0, 3, 7, 9]),
    (1296, [0, 3, 8, 8]),
    (5832, [0, 4, 6, 9]),
    (-648, [0, 4, 7, 8]),
    (-3888, [0, 5, 6, 8]),
    (1296, [0, 5, 7, 7]),
    (1296, [1, 1, 7, 9]),
    (-432, [1, 1, 8, 8]),
    (-3888, [1, 2, 6, 9]),
    (432, [1, 2, 7, 8]),
    (-648, [1, 3, 4, 9]),
    (432, [1, 3, 5, 8]),
    (216, [1, 4, 4, 8]),
    (-648, [1, 4, 5, 7]),
    (1296, [1, 5, 5, 6]),
    (1296, [2, 2, 6, 8]),
    (-432, [2, 2, 7, 7]),
    (1296, [2, 3, 3, 9]),
    (-648, [2, 3, 4, 8]),
    (432, [2, 3, 5, 7]),
    (216, [2, 4, 4, 7]),
    (-648, [2, 4, 5, 6]),
    (-432, [3, 3, 5, 5]),
    (216, [3, 4, 4, 5]),
    (-27, [4, 4, 4, 4]),
];

pub(crate) const DEGREE6_TERMS: [(i64, [u8; 6]); 103] = [
    (-314928, [0, 0, 6, 6, 9, 9]),
    (209952, [0, 0, 6, 7, 8, 9]),
    (-46656, [0, 0, 6, 8, 8, 8]),
    (-46656, [0, 0, 7, 7, 7, 9]),
    (11664, [0, 0, 7, 7, 8, 8]),
    (209952, [0, 1, 3, 6, 9, 9]),
    (-69984, [0, 1, 3, 7, 8, 9]),
    (15552, [0, 1, 3, 8, 8, 8]),
    (-69984, [0, 1, 4, 6, 8, 9]),
    (46656, [0, 1, 4, 7, 7, 9]),
    (-7776, [0, 1, 4, 7, 8, 8]),
    (-69984, [0, 1, 5, 6, 7, 9]),
    (46656, [0, 1, 5, 6, 8, 8]),
    (-7776, [0, 1, 5, 7, 7, 8]),
    (-69984, [0, 2, 3, 6, 8, 9]),
    (46656, [0, 2, 3, 7, 7, 9]),
    (-7776, [0, 2, 3, 7, 8, 8]),
    (-69984, [0, 2, 4, 6, 7, 9]),
    (46656, [0, 2, 4, 6, 8, 8]),
    (-7776, [0, 2, 4, 7, 7, 8]),
    (209952, [0, 2, 5, 6, 6, 9]),
    (-69984, [0, 2, 5, 6, 7, 8]),
    (15552, [0, 2, 5, 7, 7, 7]),
    (-46656, [0, 3, 3, 3, 9, 9]),
    (46656, [0, 3, 3, 4, 8, 9]),
    (46656, [0, 3, 3, 5, 7, 9]),
    (-31104, [0, 3, 3, 5, 8, 8]),
    (-34992, [0, 3, 4, 4, 7, 9]),
    (-3888, [0, 3, 4, 4, 8, 8]),
    (-69984, [0, 3, 4, 5, 6, 9]),
    (38880, [0, 3, 4, 5, 7, 8]),
    (46656, [0, 3, 5, 5, 6, 8]),
    (-31104, [0, 3, 5, 5, 7, 7]),
    (29160, [0, 4, 4, 4, 6, 9]),
    (1944, [0, 4, 4, 4, 7, 8]),
    (-34992, [0, 4, 4, 5, 6, 8]),
    (-3888, [0, 4, 4, 5, 7, 7]),
    (46656, [0, 4, 5, 5, 6, 7]),
    (-46656, [0, 5, 5, 5, 6, 6]),
    (-46656, [1, 1, 1, 6, 9, 9]),
    (15552, [1, 1, 1, 7, 8, 9]),
    (-3456, [1, 1, 1, 8, 8, 8]),
    (46656, [1, 1, 2, 6, 8, 9]),
    (-31104, [1, 1, 2, 7, 7, 9]),
    (5184, [1, 1, 2, 7, 8, 8]),
    (11664, [1, 1, 3, 3, 9, 9]),
    (-7776, [1, 1, 3, 4, 8, 9]),
    (-7776, [1, 1, 3, 5, 7, 9]),
    (5184, [1, 1, 3, 5, 8, 8]),
    (-3888, [1, 1, 4, 4, 7, 9]),
    (2592, [1, 1, 4, 4, 8, 8]),
    (46656, [1, 1, 4, 5, 6, 9]),
    (-7776, [1, 1, 4, 5, 7, 8]),
    (-31104, [1, 1, 5, 5, 6, 8]),
    (11664, [1, 1, 5, 5, 7, 7]),
    (46656, [1, 2, 2, 6, 7, 9]),
    (-31104, [1, 2, 2, 6, 8, 8]),
    (5184, [1, 2, 2, 7, 7, 8]),
    (-7776, [1, 2, 3, 3, 8, 9]),
    (38880, [1, 2, 3, 4, 7, 9]),
    (-7776, [1, 2, 3, 4, 8, 8]),
    (-69984, [1, 2, 3, 5, 6, 9]),
    (2592, [1, 2, 3, 5, 7, 8]),
    (-34992, [1, 2, 4, 4, 6, 9]),
    (1296, [1, 2, 4, 4, 7, 8]),
    (38880, [1, 2, 4, 5, 6, 8]),
    (-7776, [1, 2, 4, 5, 7, 7]),
    (-7776, [1, 2, 5, 5, 6, 7]),
    (-7776, [1, 3, 3, 4, 5, 9]),
    (5184, [1, 3, 3, 5, 5, 8]),
    (1944, [1, 3, 4, 4, 4, 9]),
    (1296, [1, 3, 4, 4, 5, 8]),
    (-7776, [1, 3, 4, 5, 5, 7]),
    (15552, [1, 3, 5, 5, 5, 6]),
    (-648, [1, 4, 4, 4, 4, 8]),
    (1944, [1, 4, 4, 4, 5, 7]),
    (-3888, [1, 4, 4, 5, 5, 6]),
    (-46656, [2, 2, 2, 6, 6, 9]),
    (15552, [2, 2, 2, 6, 7, 8]),
    (-3456, [2, 2, 2, 7, 7, 7]),
    (-31104, [2, 2, 3, 3, 7, 9]),
    (11664, [2, 2, 3, 3, 8, 8]),
    (46656, [2, 2, 3, 4, 6, 9]),
    (-7776, [2, 2, 3, 4, 7, 8]),
    (-7776, [2, 2, 3, 5, 6, 8]),
    (5184, [2, 2, 3, 5, 7, 7]),
    (-3888, [2, 2, 4, 4, 6, 8]),
    (2592, [2, 2, 4, 4, 7, 7]),
    (-7776, [2, 2, 4, 5, 6, 7]),
    (11664, [2, 2, 5, 5, 6, 6]),
    (15552, [2, 3, 3, 3, 5, 9]),
    (-3888, [2, 3, 3, 4, 4, 9]),
    (-7776, [2, 3, 3, 4, 5, 8]),
    (5184, [2, 3, 3, 5, 5, 7]),
    (1944, [2, 3, 4, 4, 4, 8]),
    (1296, [2, 3, 4, 4, 5, 7]),
    (-7776, [2, 3, 4, 5, 5, 6]),
    (-648, [2, 4, 4, 4, 4, 7]),
    (1944, [2, 4, 4, 4, 5, 6]),
    (-3456, [3, 3, 3, 5, 5, 5]),
    (2592, [3, 3, 4, 4, 5, 5]),
    (-648, [3, 4, 4, 4, 4, 5]),
    (54, [4, 4, 4, 4, 4, 4]),
];
