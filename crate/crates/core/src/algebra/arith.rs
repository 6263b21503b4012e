//! Integer and rational helpers: exact roots, primality and factorization.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Integer vector proportional to `values` with the same signs, scaled by the
/// common denominator. Returns the scale as well.
pub fn clear_denominators(values: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let d = common_denominator(values);
    let ints = values
        .iter()
        .map(|q| (q * Rational::from_integer(d.clone())).to_integer())
        .collect();
    (ints, d)
}

pub fn content(values: &[BigInt]) -> BigInt {
    values.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

/// Exact integer k-th root (`k >= 1`); negative inputs only for odd `k`.
pub fn exact_int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return exact_int_root(&-n, k).map(|r| -r);
    }
    let r = n.nth_root(k);
    (r.pow(k) == *n).then_some(r)
}

/// Exact rational k-th root, if one exists.
pub fn exact_root(q: &Rational, k: u32) -> Option<Rational> {
    let n = exact_int_root(q.numer(), k)?;
    let d = exact_int_root(q.denom(), k)?;
    Some(Rational::new(n, d))
}

/// Square root of a rational that is a perfect square, non-negative root.
pub fn exact_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    exact_root(q, 2)
}

/// Primes below `limit` by a plain sieve.
pub fn primes_below(limit: usize) -> Vec<u64> {
    if limit < 3 {
        return Vec::new();
    }
    let mut composite = vec![false; limit];
    let mut out = Vec::new();
    for i in 2..limit {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j < limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

pub fn is_prime_u64(n: u64) -> bool {
    is_probable_prime(&BigInt::from(n))
}

const WITNESSES: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53];

/// Miller–Rabin with the first 16 prime bases. Deterministic below 3.3e24,
/// overwhelmingly reliable above.
pub fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if *n < two {
        return false;
    }
    for &p in &WITNESSES {
        let p = BigInt::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Result of a bounded-effort factorization of `|n|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    /// Prime factors with multiplicities, sorted by prime.
    pub primes: Vec<(BigInt, u32)>,
    /// Composite cofactor that could not be split within the effort budget (1 when complete).
    pub unfactored: BigInt,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.unfactored.is_one()
    }
}

const TRIAL_LIMIT: usize = 10_000;
const RHO_ITERATIONS: u64 = 200_000;

/// Trial division, then Pollard–Brent rho on what is left. `n` must be nonzero.
pub fn factorize(n: &BigInt) -> Factorization {
    assert!(!n.is_zero(), "factorize(0)");
    let mut rest = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    for p in primes_below(TRIAL_LIMIT) {
        let p = BigInt::from(p);
        if &p * &p > rest {
            break;
        }
        let mut e = 0;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p, e));
        }
    }
    let mut unfactored = BigInt::one();
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push_prime(&mut primes, m);
            continue;
        }
        if let Some(r) = exact_int_root(&m, 2) {
            stack.push(r.clone());
            stack.push(r);
            continue;
        }
        match pollard_brent(&m) {
            Some(d) => {
                let q = &m / &d;
                stack.push(d);
                stack.push(q);
            }
            None => unfactored *= m,
        }
    }
    primes.sort();
    Factorization { primes, unfactored }
}

fn push_prime(primes: &mut Vec<(BigInt, u32)>, p: BigInt) {
    if let Some(entry) = primes.iter_mut().find(|(q, _)| *q == p) {
        entry.1 += 1;
    } else {
        primes.push((p, 1));
    }
}

fn pollard_brent(n: &BigInt) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    for c in 1u64..8 {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = BigInt::from(2);
        let mut r = 1u64;
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut steps = 0u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let m = (r - k).min(64);
                for _ in 0..m {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                g = q.gcd(n);
                k += m;
                steps += m;
            }
            r *= 2;
            if steps > RHO_ITERATIONS {
                break;
            }
        }
        if g == *n {
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
    }
    None
}

/// All positive divisors of a fully factored number.
pub fn divisors(primes: &[(BigInt, u32)]) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=*e {
                next.push(d * &pk);
                pk *= p;
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Legendre-style quadratic character of `a` modulo an odd prime `p`: 0, 1 or -1.
pub fn quadratic_character(a: i64, p: i64) -> i32 {
    let a = a.rem_euclid(p);
    if a == 0 {
        return 0;
    }
    let r = BigInt::from(a).modpow(&BigInt::from((p - 1) / 2), &BigInt::from(p));
    if r.is_one() {
        1
    } else {
        -1
    }
}

pub fn to_i64(n: &BigInt) -> Option<i64> {
    n.to_i64()
}

pub fn sign_of(q: &Rational) -> Sign {
    q.numer().sign()
}
