//! Short Weierstrass curves `y^2 = x^3 + Ax + B` over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::arith::{divisors, exact_root, exact_sqrt, factorize, int, primes_below, Rational};
use crate::algebra::{TernaryForm, UniPoly};
use crate::error::{Error, Result};
use crate::invariants::{aronhold_ab, jacobian_height};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EllipticCurve {
    a: Rational,
    b: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ECPoint {
    Infinity,
    Affine { x: Rational, y: Rational },
}

impl ECPoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        ECPoint::Affine { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        ECPoint::Affine { x: int(x), y: int(y) }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ECPoint::Infinity)
    }

    pub fn neg(&self) -> Self {
        match self {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine { x, y } => ECPoint::Affine { x: x.clone(), y: -y },
        }
    }

    pub fn coords(&self) -> Option<(&Rational, &Rational)> {
        match self {
            ECPoint::Infinity => None,
            ECPoint::Affine { x, y } => Some((x, y)),
        }
    }

    fn is_integral(&self) -> bool {
        match self {
            ECPoint::Infinity => true,
            ECPoint::Affine { x, y } => x.is_integer() && y.is_integer(),
        }
    }
}

impl fmt::Display for ECPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ECPoint::Infinity => write!(f, "O"),
            ECPoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

impl EllipticCurve {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        let e = EllipticCurve { a, b };
        if e.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(e)
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(int(a), int(b))
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    /// `4A^3 + 27B^2`.
    pub fn discriminant(&self) -> Rational {
        int(4) * &self.a * &self.a * &self.a + int(27) * &self.b * &self.b
    }

    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    pub fn contains(&self, p: &ECPoint) -> bool {
        match p {
            ECPoint::Infinity => true,
            ECPoint::Affine { x, y } => y * y == x * x * x + &self.a * x + &self.b,
        }
    }

    fn check(&self, p: &ECPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::PointNotOnCurve)
        }
    }

    /// The twist `(u^4 A, u^6 B)`, with points mapped by `(x, y) -> (u^2 x, u^3 y)`.
    pub fn twist(&self, u: &Rational) -> EllipticCurve {
        let u2 = u * u;
        let u4 = &u2 * &u2;
        EllipticCurve { a: &self.a * &u4, b: &self.b * &u4 * &u2 }
    }

    pub fn map_point(p: &ECPoint, u: &Rational) -> ECPoint {
        match p {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine { x, y } => {
                let u2 = u * u;
                ECPoint::Affine { x: x * &u2, y: y * &u2 * u }
            }
        }
    }

    /// The minimal integral model together with the twist scalar `u` such
    /// that the model is `self.twist(u)`.
    pub fn minimal_model(&self) -> Result<(EllipticCurve, Rational)> {
        let d = self.a.denom().lcm(self.b.denom());
        let u0 = Rational::from_integer(d);
        let integral = self.twist(&u0);
        let (a, b) = reduce_minimal(integral.a.numer(), integral.b.numer())?;
        let model = EllipticCurve { a: Rational::from_integer(a), b: Rational::from_integer(b) };
        let u = is_isomorphic(self, &model).ok_or(Error::SingularCurve)?;
        Ok((model, u))
    }

    /// `[n]P`, by double-and-add; negative `n` negates.
    pub fn multiply(&self, n: i64, p: &ECPoint) -> Result<ECPoint> {
        self.check(p)?;
        let mut base = if n < 0 { p.neg() } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = ECPoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            k >>= 1;
        }
        Ok(acc)
    }

    /// Order of `p` if it is at most `limit`, else `None`.
    pub fn order(&self, p: &ECPoint, limit: u32) -> Result<Option<u32>> {
        self.check(p)?;
        let mut q = p.clone();
        for n in 1..=limit {
            if q.is_infinity() {
                return Ok(Some(n));
            }
            q = self.add_unchecked(&q, p);
        }
        Ok(None)
    }

    fn add_unchecked(&self, p: &ECPoint, q: &ECPoint) -> ECPoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (ECPoint::Infinity, _) => return q.clone(),
            (_, ECPoint::Infinity) => return p.clone(),
            (ECPoint::Affine { x: x1, y: y1 }, ECPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return ECPoint::Infinity;
            }
            (int(3) * x1 * x1 + &self.a) / (int(2) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &slope * &slope - x1 - x2;
        let y3 = slope * (x1 - &x3) - y1;
        ECPoint::Affine { x: x3, y: y3 }
    }
}

impl fmt::Display for EllipticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3 + ({})x + ({})", self.a, self.b)
    }
}

/// Divides `(A, B)` by `(p^4, p^6)` until no prime allows it.
pub fn reduce_minimal(a: &BigInt, b: &BigInt) -> Result<(BigInt, BigInt)> {
    let delta = BigInt::from(4) * a * a * a + BigInt::from(27) * b * b;
    if delta.is_zero() {
        return Err(Error::SingularCurve);
    }
    let fac = factorize(&a.gcd(b));
    let (mut a, mut b) = (a.clone(), b.clone());
    for (p, _) in &fac.primes {
        let (p4, p6) = (p.pow(4), p.pow(6));
        while (&a % &p4).is_zero() && (&b % &p6).is_zero() {
            a /= &p4;
            b /= &p6;
        }
    }
    if !fac.is_complete() {
        // Every prime of the cofactor exceeds the trial-division limit, so
        // if its fourth power divided gcd(A, B) the gcd with m^4 would be huge.
        let shared = fac.unfactored.pow(4).gcd(&a.gcd(&b));
        if shared >= BigInt::from(10u64.pow(16)) {
            return Err(Error::Inconclusive(format!(
                "cannot factor {} to test minimality",
                fac.unfactored
            )));
        }
    }
    Ok((a, b))
}

pub fn is_minimal(a: &BigInt, b: &BigInt) -> Result<bool> {
    let (a2, b2) = reduce_minimal(a, b)?;
    Ok(&a2 == a && &b2 == b)
}

/// `max(4|A|^3, 27B^2)` of a minimal integral model.
pub fn curve_height(e: &EllipticCurve) -> Result<BigInt> {
    if !e.is_integral() {
        return Err(Error::NotIntegral);
    }
    if !is_minimal(e.a.numer(), e.b.numer())? {
        return Err(Error::NotMinimal);
    }
    Ok(jacobian_height(&e.a, &e.b).to_integer())
}

pub fn add_points(e: &EllipticCurve, p: &ECPoint, q: &ECPoint) -> Result<ECPoint> {
    e.check(p)?;
    e.check(q)?;
    Ok(e.add_unchecked(p, q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TorsionStructure {
    /// `Z/n`.
    Cyclic(u32),
    /// `Z/2 x Z/2n`.
    Product(u32),
}

impl TorsionStructure {
    pub fn order(&self) -> u32 {
        match *self {
            TorsionStructure::Cyclic(n) => n,
            TorsionStructure::Product(n) => 4 * n,
        }
    }
}

impl fmt::Display for TorsionStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionStructure::Cyclic(1) => write!(f, "trivial"),
            TorsionStructure::Cyclic(n) => write!(f, "Z/{n}"),
            TorsionStructure::Product(n) => write!(f, "Z/2 x Z/{}", 2 * n),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionGroup {
    pub structure: TorsionStructure,
    /// Sorted, including the origin.
    pub points: Vec<ECPoint>,
}

impl TorsionGroup {
    pub fn is_trivial(&self) -> bool {
        self.points.len() == 1
    }
}

/// `#E(F_p)` for a prime `p >= 5` of good reduction.
fn count_points_mod(a: i64, b: i64, p: i64) -> i64 {
    let mut squares = vec![0i64; p as usize];
    for y in 0..p {
        squares[(y * y % p) as usize] += 1;
    }
    let mut n = 1;
    for x in 0..p {
        let r = ((x * x % p * x + a * x + b) % p + p) % p;
        n += squares[r as usize];
    }
    n
}

/// gcd of `#E(F_p)` over a handful of good primes; the torsion subgroup
/// injects into each `E(F_p)`.
fn reduction_bound(a: &BigInt, b: &BigInt) -> u32 {
    let delta = BigInt::from(4) * a * a * a + BigInt::from(27) * b * b;
    let mut g = 0i64;
    let mut used = 0;
    for p in primes_below(1000).into_iter().skip(2) {
        let pb = BigInt::from(p);
        if (&delta % &pb).is_zero() {
            continue;
        }
        let am = a.mod_floor(&pb).to_i64().unwrap();
        let bm = b.mod_floor(&pb).to_i64().unwrap();
        g = g.gcd(&count_points_mod(am, bm, p as i64));
        used += 1;
        if used >= 6 {
            break;
        }
    }
    g as u32
}

/// The rational torsion subgroup of an integral model, by Lutz–Nagell with
/// the reduction bound as a completeness certificate.
pub fn torsion_subgroup(e: &EllipticCurve) -> Result<TorsionGroup> {
    if !e.is_integral() {
        return Err(Error::NotIntegral);
    }
    let (a, b) = (e.a.numer().clone(), e.b.numer().clone());
    let bound = reduction_bound(&a, &b);
    let mut points = vec![ECPoint::Infinity];
    if bound == 1 {
        return Ok(TorsionGroup { structure: TorsionStructure::Cyclic(1), points });
    }
    let delta = BigInt::from(4) * &a * &a * &a + BigInt::from(27) * &b * &b;
    let fac = factorize(&delta);
    let square_part: Vec<(BigInt, u32)> =
        fac.primes.iter().filter(|(_, k)| *k >= 2).map(|(p, k)| (p.clone(), k / 2)).collect();
    let mut ys: Vec<BigInt> = vec![BigInt::zero()];
    ys.extend(divisors(&square_part));
    for y in ys {
        let cubic = UniPoly::new(vec![
            Rational::from_integer(&b - &y * &y),
            Rational::from_integer(a.clone()),
            Rational::zero(),
            Rational::one(),
        ]);
        for x in cubic.rational_roots()? {
            if !x.is_integer() {
                continue;
            }
            for yy in [Rational::from_integer(y.clone()), Rational::from_integer(-&y)] {
                let p = ECPoint::Affine { x: x.clone(), y: yy };
                if !points.contains(&p) && has_torsion_order(e, &p) {
                    points.push(p);
                }
            }
        }
    }
    points.sort();
    let n = points.len() as u32;
    if !fac.is_complete() && n != bound {
        return Err(Error::Inconclusive(format!(
            "found {n} torsion points but reduction bound is {bound} and {} is unfactored",
            fac.unfactored
        )));
    }
    let two_torsion = points
        .iter()
        .filter(|p| matches!(p, ECPoint::Affine { y, .. } if y.is_zero()))
        .count();
    let structure = if two_torsion == 3 {
        TorsionStructure::Product(n / 4)
    } else {
        TorsionStructure::Cyclic(n)
    };
    Ok(TorsionGroup { structure, points })
}

/// Mazur: torsion orders are at most 12, and multiples of a torsion point on
/// an integral model stay integral.
fn has_torsion_order(e: &EllipticCurve, p: &ECPoint) -> bool {
    let mut q = p.clone();
    for _ in 1..12 {
        if q.is_infinity() {
            return true;
        }
        if !q.is_integral() {
            return false;
        }
        q = e.add_unchecked(&q, p);
    }
    q.is_infinity()
}

fn isqrt_exact(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    (r * r == n).then_some(r)
}

/// Affine points `(m/e^2, n/e^3)` with `gcd(m, e) = 1` and `|m|, |n|, e`
/// at most `bound`, sorted.
pub fn search_points(e: &EllipticCurve, bound: u64) -> Vec<ECPoint> {
    let bound = bound as i64;
    let small = e
        .is_integral()
        .then(|| (e.a.numer().to_i128(), e.b.numer().to_i128()))
        .and_then(|(a, b)| Some((a?, b?)));
    let mut out = Vec::new();
    for den in 1..=bound.max(1) {
        let d2 = (den * den) as i128;
        let d4 = d2 * d2;
        let d6 = d4 * d2;
        for m in -bound..=bound {
            if m.gcd(&den) != 1 {
                continue;
            }
            let fast = small.and_then(|(a, b)| {
                let m = m as i128;
                let t = a.checked_mul(m)?.checked_mul(d4)?;
                let u = b.checked_mul(d6)?;
                (m * m * m).checked_add(t)?.checked_add(u)
            });
            let n = match fast {
                Some(r) => isqrt_exact(r).map(BigInt::from),
                None => {
                    let x = Rational::new(m.into(), (den * den).into());
                    let rhs = &x * &x * &x + &e.a * &x + &e.b;
                    let scaled = rhs * Rational::from_integer(BigInt::from(d6));
                    if scaled.is_integer() {
                        exact_sqrt(&scaled).map(|r| r.to_integer())
                    } else {
                        None
                    }
                }
            };
            let Some(n) = n else { continue };
            if n > BigInt::from(bound) {
                continue;
            }
            let x = Rational::new(m.into(), BigInt::from(den * den));
            let d3 = BigInt::from(den).pow(3);
            let y = Rational::new(n.clone(), d3.clone());
            out.push(ECPoint::Affine { x: x.clone(), y: y.clone() });
            if !n.is_zero() {
                out.push(ECPoint::Affine { x, y: -y });
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Positive `u` with `(A', B') = (u^4 A, u^6 B)`, if one exists.
pub fn is_isomorphic(e: &EllipticCurve, f: &EllipticCurve) -> Option<Rational> {
    let (a, b, a2, b2) = (&e.a, &e.b, &f.a, &f.b);
    if a.is_zero() != a2.is_zero() || b.is_zero() != b2.is_zero() {
        return None;
    }
    let u = if a.is_zero() {
        exact_root(&(b2 / b), 6)?
    } else if b.is_zero() {
        exact_root(&(a2 / a), 4)?
    } else {
        exact_sqrt(&((b2 * a) / (b * a2)))?
    };
    let u = u.abs();
    (e.twist(&u) == *f).then_some(u)
}

/// Jacobian of a smooth cubic: `E_{A(v), B(v)}` and its minimal model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jacobian {
    pub curve: EllipticCurve,
    pub minimal: EllipticCurve,
    /// `minimal = curve.twist(u)`.
    pub u: Rational,
}

pub fn jacobian(v: &TernaryForm) -> Result<Jacobian> {
    let rec = aronhold_ab(v)?;
    let curve = EllipticCurve::new(rec.a, rec.b)?;
    let (minimal, u) = curve.minimal_model()?;
    Ok(Jacobian { curve, minimal, u })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> EllipticCurve {
        EllipticCurve::from_ints(a, b).unwrap()
    }

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn minimal_models() {
        assert_eq!(reduce_minimal(&bi(16), &bi(64)).unwrap(), (bi(1), bi(1)));
        assert_eq!(reduce_minimal(&bi(0), &bi(46656)).unwrap(), (bi(0), bi(1)));
        assert_eq!(reduce_minimal(&bi(1), &bi(1)).unwrap(), (bi(1), bi(1)));
        assert_eq!(reduce_minimal(&bi(-3), &bi(2)), Err(Error::SingularCurve));
        assert_eq!(reduce_minimal(&bi(16 * 81), &bi(0)).unwrap(), (bi(1), bi(0)));
    }

    #[test]
    fn heights() {
        assert_eq!(curve_height(&e(1, 1)).unwrap(), bi(27));
        assert_eq!(curve_height(&e(-2, 0)).unwrap(), bi(32));
        assert_eq!(curve_height(&e(0, -432)).unwrap(), bi(5038848));
        assert_eq!(curve_height(&e(16, 64)), Err(Error::NotMinimal));
    }

    #[test]
    fn group_law_examples() {
        let c = e(0, -432);
        let p = ECPoint::from_ints(12, 36);
        assert_eq!(add_points(&c, &p, &ECPoint::Infinity).unwrap(), p);
        assert_eq!(add_points(&c, &p, &p.neg()).unwrap(), ECPoint::Infinity);
        assert_eq!(add_points(&c, &p, &p).unwrap(), ECPoint::from_ints(12, -36));
        assert_eq!(c.order(&p, 12).unwrap(), Some(3));
        assert_eq!(add_points(&c, &ECPoint::from_ints(1, 1), &p), Err(Error::PointNotOnCurve));
    }

    #[test]
    fn torsion_examples() {
        let t = torsion_subgroup(&e(0, -432)).unwrap();
        assert_eq!(t.structure, TorsionStructure::Cyclic(3));
        assert_eq!(t.points, vec![ECPoint::Infinity, ECPoint::from_ints(12, -36), ECPoint::from_ints(12, 36)]);
        let t = torsion_subgroup(&e(-1, 0)).unwrap();
        assert_eq!(t.structure, TorsionStructure::Product(1));
        assert_eq!(t.points.len(), 4);
        assert!(torsion_subgroup(&e(1, 1)).unwrap().is_trivial());
        assert!(torsion_subgroup(&e(0, 7)).unwrap().is_trivial());
        assert_eq!(torsion_subgroup(&e(0, 1)).unwrap().structure, TorsionStructure::Cyclic(6));
    }

    #[test]
    fn point_search_examples() {
        let pts = search_points(&e(0, -432), 50);
        assert!(pts.contains(&ECPoint::from_ints(12, 36)));
        assert!(pts.contains(&ECPoint::from_ints(12, -36)));
        let pts = search_points(&e(0, 1), 10);
        for (x, y) in [(-1, 0), (0, 1), (0, -1), (2, 3), (2, -3)] {
            assert!(pts.contains(&ECPoint::from_ints(x, y)));
        }
        for p in &pts {
            assert!(pts.contains(&p.neg()));
        }
    }

    #[test]
    fn isomorphism_examples() {
        assert_eq!(is_isomorphic(&e(1, 1), &e(1, 1)), Some(int(1)));
        assert_eq!(is_isomorphic(&e(0, 1), &e(0, 64)), Some(int(2)));
        assert_eq!(is_isomorphic(&e(0, 1), &e(0, 2)), None);
        assert_eq!(is_isomorphic(&e(1, 1), &e(16, 64)), Some(int(2)));
        assert_eq!(is_isomorphic(&e(1, 1), &e(1, -1)), None);
    }

    #[test]
    fn jacobians() {
        let w = TernaryForm::cubic([-1, 0, 0, 0, 0, -2, 0, 1, 0, -3]);
        let j = jacobian(&w).unwrap();
        assert_eq!(j.minimal, e(2, 3));
        let c2 = TernaryForm::cubic([2, 0, 0, 0, 0, 0, 4, 0, 0, -1]);
        assert!(is_isomorphic(&jacobian(&c2).unwrap().curve, &e(0, -432)).is_some());
        let fermat = TernaryForm::cubic([1, 0, 0, 0, 0, 0, 1, 0, 0, 1]);
        assert!(is_isomorphic(&jacobian(&fermat).unwrap().curve, &e(0, -432)).is_some());
        let nodal = TernaryForm::cubic([-1, 0, -1, 0, 0, 0, 0, 1, 0, 0]);
        assert_eq!(jacobian(&nodal), Err(Error::SingularCurve));
    }
}
