//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::arith::{clear_denominators, content, primes_below, Rational};
use super::matrix::bareiss_det;
use crate::error::{Error, Result};

/// Coefficients from the constant term upward; the leading coefficient is
/// nonzero unless the polynomial is zero (empty vector).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x - r`
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] / &lc;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// Integer coefficients with content 1 and positive leading coefficient.
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let (mut ints, _) = clear_denominators(&self.coeffs);
        let c = content(&ints);
        if c.is_zero() {
            return ints;
        }
        let c = if ints.last().is_some_and(Signed::is_negative) { -c } else { c };
        for v in &mut ints {
            *v = &*v / &c;
        }
        ints
    }

    /// Sylvester resultant `Res(self, other)`, rows of `self` first.
    pub fn resultant(&self, other: &UniPoly) -> Result<Rational> {
        let m = self.degree().ok_or(Error::ZeroPolynomial)?;
        let n = other.degree().ok_or(Error::ZeroPolynomial)?;
        let (f, df) = clear_denominators(&self.coeffs);
        let (g, dg) = clear_denominators(&other.coeffs);
        let det = int_resultant(&f, &g);
        let scale = df.pow(n as u32) * dg.pow(m as u32);
        Ok(Rational::new(det, scale))
    }

    /// All distinct rational roots, sorted ascending.
    pub fn rational_roots(&self) -> Result<Vec<Rational>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let mut ints = self.primitive_integer();
        let mut roots = Vec::new();
        if ints[0].is_zero() {
            roots.push(Rational::zero());
            let k = ints.iter().position(|c| !c.is_zero()).unwrap();
            ints.drain(..k);
        }
        if ints.len() > 1 && has_root_mod_small_primes(&ints) {
            let found = match hensel_roots(&ints) {
                Some(r) => r,
                None => {
                    let q = UniPoly::new(ints.iter().cloned().map(Rational::from_integer).collect());
                    let sf = q.squarefree_part().primitive_integer();
                    hensel_roots(&sf).unwrap_or_else(|| nonzero_rational_roots(&sf))
                }
            };
            roots.extend(found);
        }
        roots.sort();
        Ok(roots)
    }

    /// The polynomial of degree below `values.len()` taking `values[k]` at `x = k`,
    /// by forward differences in integer arithmetic.
    pub fn from_consecutive_values(values: &[BigInt]) -> UniPoly {
        let n = values.len();
        if n == 0 {
            return UniPoly::zero();
        }
        let mut diffs = values.to_vec();
        let mut leading = Vec::with_capacity(n);
        for k in 0..n {
            leading.push(diffs[0].clone());
            for i in 0..n - 1 - k {
                diffs[i] = &diffs[i + 1] - &diffs[i];
            }
        }
        // sum_k leading[k] * x(x-1)...(x-k+1) / k!, scaled by (n-1)!
        let top: BigInt = (1..n).map(BigInt::from).product();
        let mut acc = vec![BigInt::zero(); n];
        let mut falling = vec![BigInt::one()];
        let mut kfact = BigInt::one();
        for (k, c) in leading.iter().enumerate() {
            if k > 0 {
                kfact *= k;
                let mut next = vec![BigInt::zero(); falling.len() + 1];
                for (i, f) in falling.iter().enumerate() {
                    next[i + 1] += f;
                    next[i] -= f * BigInt::from(k - 1);
                }
                falling = next;
            }
            if c.is_zero() {
                continue;
            }
            let w = c * (&top / &kfact);
            for (a, f) in acc.iter_mut().zip(&falling) {
                *a += &w * f;
            }
        }
        UniPoly::new(acc.into_iter().map(|a| Rational::new(a, top.clone())).collect())
    }

    /// Lagrange interpolation through `(x, y)` pairs with distinct `x`.
    pub fn interpolate(points: &[(Rational, Rational)]) -> UniPoly {
        let consecutive = points.iter().enumerate().all(|(k, (x, y))| *x == Rational::from_integer(k.into()) && y.is_integer());
        if consecutive {
            let values: Vec<BigInt> = points.iter().map(|(_, y)| y.to_integer()).collect();
            return UniPoly::from_consecutive_values(&values);
        }
        let mut acc = UniPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            if yi.is_zero() {
                continue;
            }
            let mut basis = UniPoly::constant(Rational::one());
            let mut denom = Rational::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = &basis * &UniPoly::linear_root(xj);
                    denom *= xi - xj;
                }
            }
            acc = &acc + &basis.scale(&(yi / denom));
        }
        acc
    }
}

/// Sylvester resultant of integer polynomials given from the constant term up,
/// both with nonzero leading coefficient.
pub fn int_resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let (m, n) = (f.len() - 1, g.len() - 1);
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut rows = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (j, c) in f.iter().rev().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.iter().rev().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    bareiss_det(rows)
}

/// Rejects polynomials with no root modulo some small prime not dividing the
/// leading coefficient; a rational root reduces to a root modulo every such prime.
fn has_root_mod_small_primes(ints: &[BigInt]) -> bool {
    let lc = ints.last().unwrap();
    let mut tested = 0;
    for p in primes_below(200).into_iter().skip(1) {
        let pb = BigInt::from(p);
        if (lc % &pb).is_zero() {
            continue;
        }
        let reduced: Vec<u64> = ints
            .iter()
            .map(|c| {
                let r = c.mod_floor(&pb);
                r.try_into().unwrap()
            })
            .collect();
        let any = (0..p).any(|x| {
            reduced
                .iter()
                .rev()
                .fold(0u64, |acc, &c| (acc * x + c) % p)
                == 0
        });
        if !any {
            return false;
        }
        tested += 1;
        if tested == 12 {
            break;
        }
    }
    true
}

/// Rational roots of an integer polynomial with nonzero constant term, by lifting
/// its roots modulo a prime `p` to `p^k` and reconstructing fractions. A root
/// `a/b` in lowest terms has `|a| <= |f(0)|` and `b | lc`, so a modulus above
/// `2 |f(0)| |lc|` determines it. Returns `None` when no small prime leaves every
/// root modulo `p` simple, which happens for repeated rational roots.
fn hensel_roots(f: &[BigInt]) -> Option<Vec<Rational>> {
    let n = f.len() - 1;
    if n == 1 {
        return Some(vec![Rational::new(-&f[0], f[1].clone())]);
    }
    let lc = &f[n];
    let df: Vec<BigInt> = f.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    let num_bound = f[0].abs();
    let den_bound = lc.abs();
    let target = &num_bound * &den_bound * 2u32;
    let mut tried = 0;
    for p in primes_below(1000).into_iter().skip(2) {
        let pb = BigInt::from(p);
        if (lc % &pb).is_zero() {
            continue;
        }
        tried += 1;
        if tried > 20 {
            break;
        }
        let fr = reduce_mod(f, &pb);
        let dr = reduce_mod(&df, &pb);
        let roots: Vec<u64> = (0..p).filter(|&x| eval_mod(&fr, x, p) == 0).collect();
        if roots.iter().any(|&r| eval_mod(&dr, r, p) == 0) {
            continue;
        }
        let mut out = Vec::new();
        for r in roots {
            let (r, m) = lift_root(f, &df, BigInt::from(r), pb.clone(), &target)?;
            if let Some(q) = reconstruct(&r, &m, &num_bound, &den_bound) {
                if is_root(f, &q) {
                    out.push(q);
                }
            }
        }
        return Some(out);
    }
    None
}

fn reduce_mod(f: &[BigInt], p: &BigInt) -> Vec<u64> {
    f.iter().map(|c| c.mod_floor(p).try_into().unwrap()).collect()
}

fn eval_mod(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p)
}

/// Newton iteration from a simple root modulo `p` until the modulus exceeds `target`.
fn lift_root(f: &[BigInt], df: &[BigInt], mut r: BigInt, mut m: BigInt, target: &BigInt) -> Option<(BigInt, BigInt)> {
    while m <= *target {
        m = &m * &m;
        let fv = eval_int(f, &r).mod_floor(&m);
        let dv = eval_int(df, &r).mod_floor(&m);
        let e = dv.extended_gcd(&m);
        if !e.gcd.is_one() {
            return None;
        }
        r = (r - fv * e.x).mod_floor(&m);
    }
    Some((r, m))
}

/// The fraction `a/b` with `|a| <= nb`, `0 < b <= db` congruent to `r` modulo `m`, if any.
fn reconstruct(r: &BigInt, m: &BigInt, nb: &BigInt, db: &BigInt) -> Option<Rational> {
    let (mut r0, mut r1) = (m.clone(), r.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > *nb {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > *db {
        return None;
    }
    Some(Rational::new(r1, t1))
}

fn is_root(f: &[BigInt], q: &Rational) -> bool {
    let (a, b) = (q.numer(), q.denom());
    let n = f.len() - 1;
    let mut acc = BigInt::zero();
    let mut apow = BigInt::one();
    let bpows: Vec<BigInt> = (0..=n).map(|k| b.pow(k as u32)).collect();
    for (i, c) in f.iter().enumerate() {
        acc += c * &apow * &bpows[n - i];
        apow *= a;
    }
    acc.is_zero()
}

/// Rational roots of a squarefree integer polynomial with nonzero constant term.
/// Substituting `x = y / lc` gives a monic integer polynomial whose rational
/// roots are integers; those are isolated with a Sturm sequence.
fn nonzero_rational_roots(ints: &[BigInt]) -> Vec<Rational> {
    let n = ints.len() - 1;
    let lc = ints[n].clone();
    let monic: Vec<BigInt> = (0..=n)
        .map(|i| {
            if i == n {
                BigInt::one()
            } else {
                &ints[i] * lc.pow((n - 1 - i) as u32)
            }
        })
        .collect();
    let bound = monic.iter().map(|c| c.abs()).max().unwrap() + 1u32;
    let sturm = SturmChain::new(&monic);
    let mut out = Vec::new();
    let lo = -bound.clone();
    let total = sturm.count_roots(&lo, &bound);
    isolate_integer_roots(&sturm, &monic, lo, bound, total, &mut out);
    out.into_iter().map(|y| Rational::new(y, lc.clone())).collect()
}

fn isolate_integer_roots(
    sturm: &SturmChain,
    poly: &[BigInt],
    lo: BigInt,
    hi: BigInt,
    count: usize,
    out: &mut Vec<BigInt>,
) {
    if count == 0 {
        return;
    }
    if &hi - &lo == BigInt::one() {
        if eval_int(poly, &hi).is_zero() {
            out.push(hi);
        }
        return;
    }
    let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
    let left = sturm.count_roots(&lo, &mid);
    isolate_integer_roots(sturm, poly, lo, mid.clone(), left, out);
    isolate_integer_roots(sturm, poly, mid, hi, count - left, out);
}

fn eval_int(poly: &[BigInt], x: &BigInt) -> BigInt {
    poly.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Sturm chain of a squarefree polynomial, each member scaled to primitive
/// integer coefficients by a positive factor.
struct SturmChain {
    chain: Vec<Vec<BigInt>>,
}

impl SturmChain {
    fn new(poly: &[BigInt]) -> Self {
        let to_q = |v: &[BigInt]| UniPoly::new(v.iter().map(|c| Rational::from_integer(c.clone())).collect());
        let mut polys = vec![to_q(poly)];
        polys.push(polys[0].derivative());
        loop {
            let k = polys.len();
            if polys[k - 1].is_zero() {
                polys.pop();
                break;
            }
            let (_, r) = polys[k - 2].div_rem(&polys[k - 1]);
            if r.is_zero() {
                break;
            }
            polys.push(-r);
        }
        let chain = polys
            .iter()
            .map(|p| {
                let (ints, _) = clear_denominators(p.coeffs());
                let c = content(&ints);
                ints.into_iter().map(|v| v / &c).collect()
            })
            .collect();
        SturmChain { chain }
    }

    fn sign_changes(&self, x: &BigInt) -> usize {
        let mut last = 0i8;
        let mut changes = 0;
        for p in &self.chain {
            let v = eval_int(p, x);
            let s = if v.is_positive() { 1 } else if v.is_negative() { -1 } else { 0 };
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Number of distinct real roots in `(lo, hi]`.
    fn count_roots(&self, lo: &BigInt, hi: &BigInt) -> usize {
        self.sign_changes(lo) - self.sign_changes(hi)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rational::zero();
        UniPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs.clone())
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}
