//! Ternary forms, projective points and linear coordinate changes of P^2.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::arith::{clear_denominators, Rational};
use super::matrix::Matrix;
use super::poly::UniPoly;
use crate::error::{Error, Result};

/// Number of monomials of degree `d` in three variables.
pub const fn monomial_count(d: usize) -> usize {
    (d + 1) * (d + 2) / 2
}

/// Exponent vectors of degree `d` in canonical order: descending in the
/// exponent of X0, then of X1. For `d = 3` this is
/// `X0^3, X0^2X1, X0^2X2, X0X1^2, X0X1X2, X0X2^2, X1^3, X1^2X2, X1X2^2, X2^3`.
pub fn monomials(d: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(monomial_count(d));
    for e0 in (0..=d).rev() {
        for e1 in (0..=d - e0).rev() {
            out.push([e0, e1, d - e0 - e1]);
        }
    }
    out
}

pub fn monomial_index(d: usize, e: [usize; 3]) -> usize {
    debug_assert_eq!(e[0] + e[1] + e[2], d);
    let k = d - e[0];
    k * (k + 1) / 2 + (k - e[1])
}

/// Homogeneous polynomial in X0, X1, X2 with dense coefficients in the
/// canonical monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TernaryForm {
    degree: usize,
    coeffs: Vec<Rational>,
}

impl TernaryForm {
    pub fn new(degree: usize, coeffs: Vec<Rational>) -> Result<Self> {
        let expected = monomial_count(degree);
        if coeffs.len() != expected {
            return Err(Error::CoefficientCount { expected, found: coeffs.len() });
        }
        Ok(TernaryForm { degree, coeffs })
    }

    pub fn from_ints(degree: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(degree, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// Cubic from its ten integer coefficients; panics on a wrong count.
    pub fn cubic(coeffs: [i64; 10]) -> Self {
        Self::from_ints(3, &coeffs).unwrap()
    }

    pub fn zero(degree: usize) -> Self {
        TernaryForm { degree, coeffs: vec![Rational::zero(); monomial_count(degree)] }
    }

    pub fn constant(c: Rational) -> Self {
        TernaryForm { degree: 0, coeffs: vec![c] }
    }

    pub fn monomial(e: [usize; 3], c: Rational) -> Self {
        let d = e.iter().sum();
        let mut f = Self::zero(d);
        f.coeffs[monomial_index(d, e)] = c;
        f
    }

    /// The linear form `c0 X0 + c1 X1 + c2 X2`.
    pub fn linear(c: [Rational; 3]) -> Self {
        TernaryForm { degree: 1, coeffs: c.to_vec() }
    }

    pub fn variable(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: [usize; 3]) -> &Rational {
        &self.coeffs[monomial_index(self.degree, e)]
    }

    pub fn terms(&self) -> impl Iterator<Item = ([usize; 3], &Rational)> {
        monomials(self.degree).into_iter().zip(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    pub fn expect_degree(&self, d: usize) -> Result<()> {
        if self.degree != d {
            return Err(Error::DegreeMismatch { expected: d, found: self.degree });
        }
        Ok(())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        TernaryForm { degree: self.degree, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Maximum absolute value of the coefficients.
    pub fn height(&self) -> Rational {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_else(Rational::zero)
    }

    /// Integer multiple of `self` with content 1 (sign kept), and the factor used.
    pub fn primitive_integer(&self) -> (Vec<BigInt>, Rational) {
        let (mut ints, d) = clear_denominators(&self.coeffs);
        let c = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if c.is_zero() {
            return (ints, Rational::one());
        }
        for v in &mut ints {
            *v = &*v / &c;
        }
        (ints, Rational::new(d, c))
    }

    /// If `other = c * self` for some nonzero rational `c`, returns `c`.
    pub fn ratio_to(&self, other: &TernaryForm) -> Option<Rational> {
        if self.degree != other.degree || self.is_zero() {
            return None;
        }
        let k = self.coeffs.iter().position(|c| !c.is_zero())?;
        let c = &other.coeffs[k] / &self.coeffs[k];
        if c.is_zero() {
            return None;
        }
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| a * &c == *b)
            .then_some(c)
    }

    pub fn eval(&self, x: &[Rational; 3]) -> Rational {
        let powers: Vec<Vec<Rational>> = x.iter().map(|xi| powers_of(xi, self.degree)).collect();
        self.terms()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| c * &powers[0][e[0]] * &powers[1][e[1]] * &powers[2][e[2]])
            .sum()
    }

    /// Value at the canonical integer representative of `p`.
    pub fn eval_point(&self, p: &ProjPoint) -> Rational {
        self.eval(&p.to_rationals())
    }

    pub fn partial(&self, var: usize) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        let mut out = Self::zero(self.degree - 1);
        for (e, c) in self.terms() {
            if e[var] == 0 || c.is_zero() {
                continue;
            }
            let mut e2 = e;
            e2[var] -= 1;
            out.coeffs[monomial_index(self.degree - 1, e2)] += c * Rational::from_integer(e[var].into());
        }
        out
    }

    /// Determinant of the matrix of second partial derivatives.
    pub fn hessian(&self) -> Result<TernaryForm> {
        if self.degree < 2 {
            return Err(Error::DegreeTooLow(self.degree));
        }
        let (ints, den) = clear_denominators(&self.coeffs);
        let d = self.degree - 2;
        let second: Vec<Vec<Vec<BigInt>>> = (0..3)
            .map(|i| (0..3).map(|j| int_second_partial(self.degree, &ints, i, j)).collect())
            .collect();
        let minor = |a: usize, b: usize, c: usize, e: usize| {
            int_sub(
                &int_mul(d, &second[1][a], d, &second[2][b]),
                &int_mul(d, &second[1][c], d, &second[2][e]),
            )
        };
        let t0 = int_mul(d, &second[0][0], 2 * d, &minor(1, 2, 2, 1));
        let t1 = int_mul(d, &second[0][1], 2 * d, &minor(0, 2, 2, 0));
        let t2 = int_mul(d, &second[0][2], 2 * d, &minor(0, 1, 1, 0));
        let h = int_add(&int_sub(&t0, &t1), &t2);
        Ok(from_int_coeffs(3 * d, h, den.pow(3)))
    }

    pub fn gradient(&self) -> [TernaryForm; 3] {
        [self.partial(0), self.partial(1), self.partial(2)]
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = TernaryForm::constant(Rational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `X -> g X`: each X_i is replaced by `sum_j g[i][j] X_j`.
    pub fn substitute(&self, g: &LinMap3) -> Self {
        let d = self.degree;
        let (f, df) = clear_denominators(&self.coeffs);
        let entries: Vec<Rational> = g.rows().iter().flatten().cloned().collect();
        let (gi, dg) = clear_denominators(&entries);
        let pows: Vec<Vec<Vec<BigInt>>> = (0..3)
            .map(|i| {
                let l = gi[3 * i..3 * i + 3].to_vec();
                let mut v = vec![vec![BigInt::one()]];
                for k in 1..=d {
                    let next = int_mul(k - 1, &v[k - 1], 1, &l);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = vec![BigInt::zero(); monomial_count(d)];
        for (e, c) in monomials(d).into_iter().zip(&f) {
            if c.is_zero() {
                continue;
            }
            let ab = int_mul(e[0], &pows[0][e[0]], e[1], &pows[1][e[1]]);
            let term = int_mul(e[0] + e[1], &ab, e[2], &pows[2][e[2]]);
            for (o, t) in out.iter_mut().zip(term) {
                *o += c * t;
            }
        }
        from_int_coeffs(d, out, df * dg.pow(d as u32))
    }

    /// Restriction to the line `(x0, t, x2)` as a polynomial in `t`.
    pub fn poly_in_x1(&self, x0: &Rational, x2: &Rational) -> UniPoly {
        let p0 = powers_of(x0, self.degree);
        let p2 = powers_of(x2, self.degree);
        let mut c = vec![Rational::zero(); self.degree + 1];
        for (e, a) in self.terms() {
            if !a.is_zero() {
                c[e[1]] += a * &p0[e[0]] * &p2[e[2]];
            }
        }
        UniPoly::new(c)
    }
}

fn powers_of(x: &Rational, d: usize) -> Vec<Rational> {
    let mut v = Vec::with_capacity(d + 1);
    v.push(Rational::one());
    for k in 1..=d {
        let next = &v[k - 1] * x;
        v.push(next);
    }
    v
}

impl Add for &TernaryForm {
    type Output = TernaryForm;
    fn add(self, rhs: &TernaryForm) -> TernaryForm {
        assert_eq!(self.degree, rhs.degree, "adding forms of different degree");
        TernaryForm {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &TernaryForm {
    type Output = TernaryForm;
    fn sub(self, rhs: &TernaryForm) -> TernaryForm {
        self + &(-rhs.clone())
    }
}

impl Neg for TernaryForm {
    type Output = TernaryForm;
    fn neg(self) -> TernaryForm {
        TernaryForm { degree: self.degree, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Mul for &TernaryForm {
    type Output = TernaryForm;
    fn mul(self, rhs: &TernaryForm) -> TernaryForm {
        let (a, da) = clear_denominators(&self.coeffs);
        let (b, db) = clear_denominators(&rhs.coeffs);
        let prod = int_mul(self.degree, &a, rhs.degree, &b);
        from_int_coeffs(self.degree + rhs.degree, prod, da * db)
    }
}

fn from_int_coeffs(degree: usize, ints: Vec<BigInt>, den: BigInt) -> TernaryForm {
    let coeffs = if den.is_one() {
        ints.into_iter().map(Rational::from_integer).collect()
    } else {
        ints.into_iter().map(|c| Rational::new(c, den.clone())).collect()
    };
    TernaryForm { degree, coeffs }
}

/// Product of dense integer forms of degrees `da` and `db`.
fn int_mul(da: usize, a: &[BigInt], db: usize, b: &[BigInt]) -> Vec<BigInt> {
    let d = da + db;
    let mut out = vec![BigInt::zero(); monomial_count(d)];
    let mb = monomials(db);
    for (ea, x) in monomials(da).into_iter().zip(a) {
        if x.is_zero() {
            continue;
        }
        for (eb, y) in mb.iter().zip(b) {
            if y.is_zero() {
                continue;
            }
            out[monomial_index(d, [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]])] += x * y;
        }
    }
    out
}

fn int_add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn int_sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn int_second_partial(d: usize, f: &[BigInt], i: usize, j: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); monomial_count(d - 2)];
    for (e, c) in monomials(d).into_iter().zip(f) {
        let mut e2 = e;
        if e2[i] == 0 {
            continue;
        }
        let mut k = e2[i];
        e2[i] -= 1;
        if e2[j] == 0 {
            continue;
        }
        k *= e2[j];
        e2[j] -= 1;
        out[monomial_index(d - 2, e2)] += c * BigInt::from(k);
    }
    out
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("X{i}") } else { format!("X{i}^{k}") })
                .collect();
            let (neg, mag) = (c.is_negative(), c.abs());
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A point of P^2(Q) stored as its primitive integer representative whose
/// first nonzero coordinate is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [BigInt; 3],
}

impl ProjPoint {
    pub fn new(x: [BigInt; 3]) -> Result<Self> {
        let g = x.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if g.is_zero() {
            return Err(Error::InvalidArgument("all coordinates are zero".into()));
        }
        let first = x.iter().find(|v| !v.is_zero()).unwrap();
        let g = if first.is_negative() { -g } else { g };
        Ok(ProjPoint { coords: x.map(|v| v / &g) })
    }

    pub fn from_ints(x: [i64; 3]) -> Result<Self> {
        Self::new(x.map(BigInt::from))
    }

    pub fn from_rationals(x: &[Rational; 3]) -> Result<Self> {
        let (ints, _) = clear_denominators(x);
        Self::new([ints[0].clone(), ints[1].clone(), ints[2].clone()])
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.coords
    }

    pub fn to_rationals(&self) -> [Rational; 3] {
        self.coords.clone().map(Rational::from_integer)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.coords[0], self.coords[1], self.coords[2])
    }
}

/// A 3x3 rational matrix acting on column vectors of coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinMap3 {
    m: [[Rational; 3]; 3],
}

impl LinMap3 {
    pub fn new(m: [[Rational; 3]; 3]) -> Self {
        LinMap3 { m }
    }

    pub fn from_ints(m: [[i64; 3]; 3]) -> Self {
        LinMap3 { m: m.map(|r| r.map(|v| Rational::from_integer(v.into()))) }
    }

    pub fn identity() -> Self {
        Self::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn scalar(c: Rational) -> Self {
        Self::identity().scale(&c)
    }

    /// Matrix sending `e_j` to `e_{perm[j]}`.
    pub fn permutation(perm: [usize; 3]) -> Self {
        let mut m = [[0i64; 3]; 3];
        for (j, &i) in perm.iter().enumerate() {
            m[i][j] = 1;
        }
        Self::from_ints(m)
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.m[i][j]
    }

    pub fn row(&self, i: usize) -> [Rational; 3] {
        self.m[i].clone()
    }

    pub fn rows(&self) -> &[[Rational; 3]; 3] {
        &self.m
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LinMap3 { m: self.m.clone().map(|r| r.map(|v| v * c)) }
    }

    pub fn det(&self) -> Rational {
        let m = &self.m;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = self.to_matrix().inverse()?;
        Ok(Self::from_matrix(&inv))
    }

    pub fn transpose(&self) -> Self {
        let mut t = self.m.clone();
        for (i, row) in t.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = self.m[j][i].clone();
            }
        }
        LinMap3 { m: t }
    }

    pub fn apply(&self, x: &[Rational; 3]) -> [Rational; 3] {
        std::array::from_fn(|i| (0..3).map(|j| &self.m[i][j] * &x[j]).sum())
    }

    pub fn apply_point(&self, p: &ProjPoint) -> Result<ProjPoint> {
        ProjPoint::from_rationals(&self.apply(&p.to_rationals()))
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows(self.m.iter().map(|r| r.to_vec()).collect())
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        assert_eq!((m.rows(), m.cols()), (3, 3));
        LinMap3 { m: std::array::from_fn(|i| std::array::from_fn(|j| m[(i, j)].clone())) }
    }
}

impl Mul for &LinMap3 {
    type Output = LinMap3;
    fn mul(self, rhs: &LinMap3) -> LinMap3 {
        LinMap3 {
            m: std::array::from_fn(|i| {
                std::array::from_fn(|j| (0..3).map(|k| &self.m[i][k] * &rhs.m[k][j]).sum())
            }),
        }
    }
}

impl fmt::Display for LinMap3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|r| format!("[{}, {}, {}]", r[0], r[1], r[2]))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}
