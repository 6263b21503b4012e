//! Invariants of ternary cubics under the twisted `GL_3` action, heights, and
//! the conversions to the other common normalizations.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::arith::{clear_denominators, int, Rational};
use crate::algebra::{LinMap3, TernaryForm};
use crate::error::{Error, Result};
use crate::invariant_tables::{DEGREE4_TERMS, DEGREE6_TERMS};

/// The degree-4 and degree-6 invariants `A`, `B` of a cubic together with the
/// derived quantities. Invariants:
/// `delta = 4A^3 + 27B^2`, `c4 = -A/27`, `c6 = -B/54`,
/// `s = A/(1296*27)`, `t = -B/(5832*54)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantRecord {
    pub a: Rational,
    pub b: Rational,
    pub delta: Rational,
    pub c4: Rational,
    pub c6: Rational,
    pub s: Rational,
    pub t: Rational,
}

impl InvariantRecord {
    pub fn from_ab(a: Rational, b: Rational) -> Self {
        let delta = int(4) * &a * &a * &a + int(27) * &b * &b;
        let c4 = -&a / int(27);
        let c6 = -&b / int(54);
        let s = &a / int(1296 * 27);
        let t = -&b / int(5832 * 54);
        InvariantRecord { a, b, delta, c4, c6, s, t }
    }

    /// Checks the five identities tying the record together.
    pub fn is_coherent(&self) -> bool {
        let a = &self.a;
        let b = &self.b;
        self.delta == int(4) * a * a * a + int(27) * b * b
            && self.c4 == -a / int(27)
            && self.c6 == -b / int(54)
            && self.s == a / int(1296 * 27)
            && self.t == -b / int(5832 * 54)
    }
}

/// `H` = largest absolute coefficient, `H_J = max(4|A|^3, 27B^2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightPair {
    pub h: Rational,
    pub h_j: Rational,
}

fn eval_table<const N: usize>(table: &[(i64, [u8; N])], c: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (coef, idx) in table {
        if idx.iter().any(|&i| c[i as usize].is_zero()) {
            continue;
        }
        let mut term = BigInt::from(*coef);
        for &i in idx {
            term *= &c[i as usize];
        }
        acc += term;
    }
    acc
}

fn small_eval<const N: usize>(table: &[(i64, [u8; N])], c: &[i64]) -> Option<i128> {
    let mut acc: i128 = 0;
    for (coef, idx) in table {
        let mut term = *coef as i128;
        for &i in idx {
            term = term.checked_mul(c[i as usize] as i128)?;
        }
        acc = acc.checked_add(term)?;
    }
    Some(acc)
}

/// `A(v)` and `B(v)` for a cubic, normalized so that the Weierstrass cubic
/// `X1^2X2 - X0^3 - aX0X2^2 - bX2^3` has `A = 1296a`, `B = 46656b`.
pub fn aronhold_ab(v: &TernaryForm) -> Result<InvariantRecord> {
    v.expect_degree(3)?;
    let (ints, d) = clear_denominators(v.coeffs());
    let small: Option<Vec<i64>> = ints
        .iter()
        .map(|x| i64::try_from(x).ok().filter(|x| x.abs() < 1 << 12))
        .collect();
    let (a, b) = match small.and_then(|s| Some((small_eval(&DEGREE4_TERMS, &s)?, small_eval(&DEGREE6_TERMS, &s)?))) {
        Some((a, b)) => (BigInt::from(a), BigInt::from(b)),
        None => (eval_table(&DEGREE4_TERMS, &ints), eval_table(&DEGREE6_TERMS, &ints)),
    };
    let (a, b) = if d.is_one() {
        (Rational::from_integer(a), Rational::from_integer(b))
    } else {
        (Rational::new(a, d.pow(4)), Rational::new(b, d.pow(6)))
    };
    Ok(InvariantRecord::from_ab(a, b))
}

pub fn discriminant(v: &TernaryForm) -> Result<Rational> {
    Ok(aronhold_ab(v)?.delta)
}

/// `(det g)^-1 * v(g X)`.
pub fn twisted_action(g: &LinMap3, v: &TernaryForm) -> Result<TernaryForm> {
    v.expect_degree(3)?;
    let det = g.det();
    if det.is_zero() {
        return Err(Error::SingularMatrix);
    }
    Ok(v.substitute(g).scale(&det.recip()))
}

pub fn heights(v: &TernaryForm) -> Result<HeightPair> {
    let rec = aronhold_ab(v)?;
    Ok(HeightPair { h: v.height(), h_j: jacobian_height(&rec.a, &rec.b) })
}

/// `max(4|A|^3, 27B^2)`, shared with the elliptic-curve height.
pub fn jacobian_height(a: &Rational, b: &Rational) -> Rational {
    let x = int(4) * a.abs() * a.abs() * a.abs();
    let y = int(27) * b * b;
    x.max(y)
}
