//! Smooth plane cubics: smoothness, rational flexes, genericity, point search
//! and reduction to Weierstrass form from a rational flex.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::algebra::arith::{int, Rational};
use crate::algebra::form::monomials;
use crate::algebra::poly::int_resultant;
use crate::algebra::{LinMap3, ProjPoint, TernaryForm, UniPoly};
use crate::error::{Error, Result};
use crate::invariants::discriminant;

/// `X1^2 X2 - X0^3 - a X0 X2^2 - b X2^3`.
pub fn weierstrass_cubic(a: &Rational, b: &Rational) -> TernaryForm {
    let mut c = vec![Rational::zero(); 10];
    c[0] = int(-1);
    c[5] = -a;
    c[7] = int(1);
    c[9] = -b;
    TernaryForm::new(3, c).unwrap()
}

/// `X0^3 + X1^3 + X2^3 + lambda X0 X1 X2`.
pub fn hesse_cubic(lambda: &Rational) -> TernaryForm {
    let mut c = vec![Rational::zero(); 10];
    c[0] = int(1);
    c[6] = int(1);
    c[9] = int(1);
    c[4] = lambda.clone();
    TernaryForm::new(3, c).unwrap()
}

pub fn is_smooth(v: &TernaryForm) -> Result<bool> {
    v.expect_degree(3)?;
    if v.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(!discriminant(v)?.is_zero())
}

fn require_smooth(v: &TernaryForm) -> Result<()> {
    if is_smooth(v)? {
        Ok(())
    } else {
        Err(Error::SingularCurve)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlexReport {
    /// Canonical, sorted, duplicate-free.
    pub rational_flexes: Vec<ProjPoint>,
    /// Flexes over the algebraic closure, with multiplicity.
    pub total_expected: u32,
}

/// Unimodular change whose image of `[0:1:0]` avoids both curves, so that
/// both transformed forms have a nonzero `X1^3` coefficient.
fn projection_change(v: &TernaryForm, h: &TernaryForm) -> LinMap3 {
    for r in 0..=4i64 {
        for q0 in -r..=r {
            for q2 in -r..=r {
                if q0.abs().max(q2.abs()) != r {
                    continue;
                }
                let q = [int(q0), int(1), int(q2)];
                if !v.eval(&q).is_zero() && !h.eval(&q).is_zero() {
                    return LinMap3::from_ints([[1, q0, 0], [0, 1, 0], [0, q2, 1]]);
                }
            }
        }
    }
    unreachable!("a cubic and its Hessian cannot contain 81 points of a grid in general position")
}

/// The rational points of `C(v)` meeting the Hessian. A rational flex reduces to a
/// common zero modulo every prime, so a prime with none settles the question.
/// Otherwise `X1` is eliminated by a resultant on the chart `X2 = 1` and the
/// line `X2 = 0` is solved directly.
pub fn rational_flexes(v: &TernaryForm) -> Result<FlexReport> {
    require_smooth(v)?;
    let (ints, _) = v.primitive_integer();
    let w = TernaryForm::new(3, ints.into_iter().map(Rational::from_integer).collect())?;
    let h = w.hessian()?;
    if !common_zero_mod_small_primes(&w, &h) {
        return Ok(FlexReport { rational_flexes: Vec::new(), total_expected: 9 });
    }
    let g = projection_change(&w, &h);
    let vg = w.substitute(&g);
    let hg = h.substitute(&g);
    let mut found: Vec<[Rational; 3]> = Vec::new();

    let (vi, hi) = (integer_coeffs(&vg), integer_coeffs(&hg));
    let samples: Vec<BigInt> = (0..10).map(|x| int_resultant(&restrict_to_x(&vi, x), &restrict_to_x(&hi, x))).collect();
    let res = UniPoly::from_consecutive_values(&samples);
    if res.is_zero() {
        return Err(Error::SingularCurve);
    }
    for x in res.rational_roots()? {
        for y in vg.poly_in_x1(&x, &Rational::one()).rational_roots()? {
            let p = [x.clone(), y, Rational::one()];
            if hg.eval(&p).is_zero() {
                found.push(p);
            }
        }
    }
    for t in vg.poly_in_x1(&Rational::one(), &Rational::zero()).rational_roots()? {
        let p = [Rational::one(), t, Rational::zero()];
        if hg.eval(&p).is_zero() {
            found.push(p);
        }
    }

    let mut points: Vec<ProjPoint> = found
        .iter()
        .map(|p| ProjPoint::from_rationals(&g.apply(p)))
        .collect::<Result<_>>()?;
    points.sort();
    points.dedup();
    debug_assert!(points.iter().all(|p| v.eval_point(p).is_zero() && h.eval_point(p).is_zero()));
    Ok(FlexReport { rational_flexes: points, total_expected: 9 })
}

fn integer_coeffs(f: &TernaryForm) -> Vec<BigInt> {
    f.coeffs().iter().map(Rational::to_integer).collect()
}

/// Coefficients in `X1` of an integral cubic on the point `(x, X1, 1)`.
fn restrict_to_x(f: &[BigInt], x: i64) -> Vec<BigInt> {
    let xp: Vec<BigInt> = (0..4u32).map(|k| BigInt::from(x).pow(k)).collect();
    let mut c = vec![BigInt::zero(); 4];
    for (e, a) in monomials(3).into_iter().zip(f) {
        if !a.is_zero() {
            c[e[1]] += a * &xp[e[0]];
        }
    }
    c
}

const FILTER_PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];

/// False when some small prime leaves the integral cubics `v` and `h` without a
/// common zero in `P^2(F_p)`.
fn common_zero_mod_small_primes(v: &TernaryForm, h: &TernaryForm) -> bool {
    let mono = monomials(3);
    for p in FILTER_PRIMES {
        let pb = BigInt::from(p);
        let reduce = |f: &TernaryForm| -> Vec<u64> {
            f.coeffs().iter().map(|c| c.numer().mod_floor(&pb).to_u64().unwrap()).collect()
        };
        let (a, b) = (reduce(v), reduce(h));
        let eval = |c: &[u64], x: [u64; 3]| -> u64 {
            let pw: [[u64; 4]; 3] = x.map(|t| [1, t, t * t % p, t * t % p * t % p]);
            mono.iter()
                .zip(c)
                .fold(0, |acc, (e, &k)| (acc + k * (pw[0][e[0]] * pw[1][e[1]] % p) % p * pw[2][e[2]]) % p)
        };
        let mut points = vec![[0, 0, 1]];
        points.extend((0..p).map(|z| [0, 1, z]));
        points.extend((0..p).flat_map(|y| (0..p).map(move |z| [1, y, z])));
        if !points.iter().any(|&x| eval(&a, x) == 0 && eval(&b, x) == 0) {
            return false;
        }
    }
    true
}

/// Smooth with no rational flex. Anything that is not a smooth cubic is not generic.
pub fn is_generic(v: &TernaryForm) -> bool {
    match rational_flexes(v) {
        Ok(r) => r.rational_flexes.is_empty(),
        Err(_) => false,
    }
}

/// All canonical points with coordinates in `[-bound, bound]` on `C(v)`, sorted.
pub fn search_curve_points(v: &TernaryForm, bound: u64) -> Vec<ProjPoint> {
    let (ints, _) = v.primitive_integer();
    let b = bound as i64;
    let small: Option<Vec<i128>> = ints
        .iter()
        .map(|c| c.to_i128().filter(|c| c.unsigned_abs() < 1u128 << 60))
        .collect();
    let exps = crate::algebra::form::monomials(v.degree());
    let mut out = Vec::new();
    let mut visit = |x: [i64; 3]| {
        let on_curve = match &small {
            Some(c) if b < 1 << 20 => {
                let xs = x.map(|t| t as i128);
                let mut acc: i128 = 0;
                for (coef, e) in c.iter().zip(&exps) {
                    if *coef != 0 {
                        let mut t = *coef;
                        for (k, &ek) in e.iter().enumerate() {
                            for _ in 0..ek {
                                t *= xs[k];
                            }
                        }
                        acc += t;
                    }
                }
                acc == 0
            }
            _ => {
                let xs = x.map(BigInt::from);
                let mut acc = BigInt::zero();
                for (coef, e) in ints.iter().zip(&exps) {
                    if !coef.is_zero() {
                        acc += coef * xs[0].pow(e[0] as u32) * xs[1].pow(e[1] as u32) * xs[2].pow(e[2] as u32);
                    }
                }
                acc.is_zero()
            }
        };
        if on_curve {
            out.push(ProjPoint::from_ints(x).unwrap());
        }
    };
    visit([0, 0, 1]);
    for x1 in 1..=b {
        for x2 in -b..=b {
            if x1.gcd(&x2) == 1 {
                visit([0, x1, x2]);
            }
        }
    }
    for x0 in 1..=b {
        for x1 in -b..=b {
            let g = x0.gcd(&x1);
            for x2 in -b..=b {
                if g.gcd(&x2) == 1 {
                    visit([x0, x1, x2]);
                }
            }
        }
    }
    out.sort();
    out
}

/// Coordinate change to Weierstrass form: `substitute(v, g^-1) = scale * w(a, b)`,
/// with `g` sending the flex to `[0:1:0]` and its tangent to `X2 = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassChange {
    pub a: Rational,
    pub b: Rational,
    pub g: LinMap3,
    pub scale: Rational,
}

fn cross(p: &[Rational; 3], q: &[Rational; 3]) -> [Rational; 3] {
    [
        &p[1] * &q[2] - &p[2] * &q[1],
        &p[2] * &q[0] - &p[0] * &q[2],
        &p[0] * &q[1] - &p[1] * &q[0],
    ]
}

fn unit(i: usize) -> [Rational; 3] {
    std::array::from_fn(|k| if k == i { Rational::one() } else { Rational::zero() })
}

pub fn to_weierstrass(v: &TernaryForm, flex: &ProjPoint) -> Result<WeierstrassChange> {
    require_smooth(v)?;
    let h = v.hessian()?;
    if !v.eval_point(flex).is_zero() || !h.eval_point(flex).is_zero() {
        return Err(Error::NotAFlex);
    }
    let f = flex.to_rationals();
    let tangent: [Rational; 3] = std::array::from_fn(|i| v.partial(i).eval(&f));

    let mut vanishing: Vec<[Rational; 3]> = (0..3).filter(|&i| f[i].is_zero()).map(unit).collect();
    vanishing.extend((0..3).map(|k| cross(&f, &unit(k))));
    let picked = (0..3)
        .filter(|&i| !f[i].is_zero())
        .flat_map(|i| vanishing.iter().map(move |l| (l.clone(), unit(i))))
        .map(|(l, m1)| LinMap3::new([l, m1, tangent.clone()]))
        .find(|m| !m.det().is_zero())
        .expect("a flex with a nonzero tangent admits a frame");

    // Y = M X, so v(X) = v(M^-1 Y).
    let m_inv = picked.inverse()?;
    let vy = v.substitute(&m_inv);
    let c = vy.coeff([3, 0, 0]).clone();
    let alpha = vy.coeff([0, 2, 1]).clone();
    debug_assert!(vy.coeff([0, 3, 0]).is_zero() && vy.coeff([1, 2, 0]).is_zero() && vy.coeff([2, 1, 0]).is_zero());
    if c.is_zero() || alpha.is_zero() {
        return Err(Error::SingularCurve);
    }
    let beta = vy.coeff([1, 1, 1]).clone();
    let gamma = vy.coeff([0, 1, 2]).clone();
    let two_alpha = int(2) * &alpha;
    let zero = Rational::zero;
    let square = LinMap3::new([
        [Rational::one(), zero(), zero()],
        [-&beta / &two_alpha, Rational::one(), -&gamma / &two_alpha],
        [zero(), zero(), Rational::one()],
    ]);
    let vz = vy.substitute(&square);
    let p0 = vz.coeff([2, 0, 1]).clone();
    let cube = LinMap3::new([
        [Rational::one(), zero(), -p0 / (int(3) * &c)],
        [zero(), Rational::one(), zero()],
        [zero(), zero(), Rational::one()],
    ]);
    let vw = vz.substitute(&cube);
    let lambda = -&alpha / &c;
    let diag = LinMap3::new([
        [lambda.clone(), zero(), zero()],
        [zero(), lambda.clone(), zero()],
        [zero(), zero(), Rational::one()],
    ]);
    let vu = vw.substitute(&diag);
    let scale = &alpha * &alpha * &alpha / (&c * &c);
    let a = -vu.coeff([1, 0, 2]) / &scale;
    let b = -vu.coeff([0, 0, 3]) / &scale;

    let g_inv = &(&(&m_inv * &square) * &cube) * &diag;
    let w = weierstrass_cubic(&a, &b);
    if v.substitute(&g_inv) != w.scale(&scale) {
        return Err(Error::SingularCurve);
    }
    if (int(4) * &a * &a * &a + int(27) * &b * &b).is_zero() {
        return Err(Error::SingularCurve);
    }
    Ok(WeierstrassChange { a, b, g: g_inv.inverse()?, scale })
}

/// `Some(lambda)` when `v` is a nonzero multiple of the Hesse cubic with parameter `lambda`.
pub fn hesse_parameter(v: &TernaryForm) -> Option<Rational> {
    if v.degree() != 3 {
        return None;
    }
    let c = v.coeff([3, 0, 0]);
    if c.is_zero() || v.coeff([0, 3, 0]) != c || v.coeff([0, 0, 3]) != c {
        return None;
    }
    let support_ok = v
        .terms()
        .all(|(e, a)| a.is_zero() || matches!(e, [3, 0, 0] | [0, 3, 0] | [0, 0, 3] | [1, 1, 1]));
    support_ok.then(|| v.coeff([1, 1, 1]) / c)
}
