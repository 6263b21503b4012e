//! Exact enumeration and sampling over integral ternary cubics of bounded
//! height, and counts of minimal short Weierstrass curves.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::arith::{int, is_prime_u64};
use crate::algebra::{LinMap3, ProjPoint, TernaryForm};
use crate::detrep::{decide_existence, find_representation, verify_rep, Assertions, SearchBounds, Verdict};
use crate::elliptic::{is_isomorphic, jacobian, reduce_minimal, ECPoint, EllipticCurve};
use crate::error::{Error, Result};
use crate::invariants::aronhold_ab;
use crate::plane_cubic::{is_generic, is_smooth, rational_flexes, search_curve_points};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CensusMode {
    Exhaustive,
    Sample { count: u64, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusConfig {
    /// Coefficients range over `[-(X-1), X-1]`.
    pub height_bound: u64,
    pub mode: CensusMode,
    pub bounds: SearchBounds,
    /// Worker threads; 0 uses the global default.
    pub threads: usize,
    /// Largest exhaustive box that will be enumerated.
    pub budget: u128,
    /// Roughly one generic form in this many is re-checked independently.
    pub spot_check_every: u64,
}

impl CensusConfig {
    pub fn exhaustive(height_bound: u64) -> Self {
        CensusConfig {
            height_bound,
            mode: CensusMode::Exhaustive,
            bounds: SearchBounds { curve: 3, jacobian: 10 },
            threads: 0,
            budget: 10_000_000,
            spot_check_every: 100,
        }
    }

    pub fn sample(height_bound: u64, count: u64, seed: u64) -> Self {
        CensusConfig { mode: CensusMode::Sample { count, seed }, ..Self::exhaustive(height_bound) }
    }
}

/// Counts over the classified population. `decided_yes + decided_no +
/// unknown = nondegenerate`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CensusReport {
    pub height_bound: u64,
    pub seed: Option<u64>,
    pub total: u64,
    pub nondegenerate: u64,
    pub generic: u64,
    pub with_curve_point: u64,
    pub decided_yes: u64,
    pub decided_no: u64,
    pub unknown: u64,
    /// Decided-yes forms for which a representation was built and verified.
    pub representations: u64,
    pub spot_checked: u64,
    pub spot_failures: u64,
    /// Number of decimal digits of `H_J` against the number of forms.
    pub hj_histogram: Vec<(u32, u64)>,
}

#[derive(Clone, Debug, Default)]
struct Tally {
    total: u64,
    nondegenerate: u64,
    generic: u64,
    with_curve_point: u64,
    yes: u64,
    no: u64,
    unknown: u64,
    reps: u64,
    spot_checked: u64,
    spot_failures: u64,
    histogram: BTreeMap<u32, u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.total += other.total;
        self.nondegenerate += other.nondegenerate;
        self.generic += other.generic;
        self.with_curve_point += other.with_curve_point;
        self.yes += other.yes;
        self.no += other.no;
        self.unknown += other.unknown;
        self.reps += other.reps;
        self.spot_checked += other.spot_checked;
        self.spot_failures += other.spot_failures;
        for (k, v) in other.histogram {
            *self.histogram.entry(k).or_default() += v;
        }
        self
    }
}

fn digits(n: &BigInt) -> u32 {
    if n.is_zero() {
        0
    } else {
        n.abs().to_string().len() as u32
    }
}

/// splitmix64 finalizer, used to pick spot-check samples independently of scheduling.
fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Genericity through the cyclically permuted form, a different projection
/// for the flex elimination.
fn generic_by_permutation(v: &TernaryForm) -> bool {
    let w = v.substitute(&LinMap3::permutation([1, 2, 0]));
    rational_flexes(&w).map(|r| r.rational_flexes.is_empty()).unwrap_or(false)
}

fn classify(coeffs: [i64; 10], key: u64, config: &CensusConfig, t: &mut Tally) {
    t.total += 1;
    let v = TernaryForm::cubic(coeffs);
    let Ok(rec) = aronhold_ab(&v) else { return };
    if rec.delta.is_zero() {
        return;
    }
    t.nondegenerate += 1;
    let hj = crate::invariants::jacobian_height(&rec.a, &rec.b).to_integer();
    *t.histogram.entry(digits(&hj)).or_default() += 1;
    if is_generic(&v) {
        t.generic += 1;
        if config.spot_check_every > 0 && mix(key).is_multiple_of(config.spot_check_every) {
            t.spot_checked += 1;
            if !generic_by_permutation(&v) {
                t.spot_failures += 1;
            }
        }
    }
    if !search_curve_points(&v, config.bounds.curve).is_empty() {
        t.with_curve_point += 1;
    }
    match decide_existence(&v, &config.bounds, &Assertions::default()) {
        Ok(d) if d.verdict == Verdict::Yes => {
            t.yes += 1;
            if let Ok(Some(r)) = find_representation(&v, &config.bounds) {
                if verify_rep(&r.matrix, &v).is_ok() {
                    t.reps += 1;
                }
            }
        }
        Ok(d) if d.verdict == Verdict::No => t.no += 1,
        _ => t.unknown += 1,
    }
}

fn decode(mut index: u64, side: u64, offset: i64) -> [i64; 10] {
    let mut c = [0i64; 10];
    for slot in c.iter_mut() {
        *slot = (index % side) as i64 - offset;
        index /= side;
    }
    c
}

pub fn census_run(config: &CensusConfig) -> Result<CensusReport> {
    if config.height_bound == 0 {
        return Err(Error::InvalidArgument("height bound must be positive".into()));
    }
    let side = 2 * config.height_bound - 1;
    let offset = (config.height_bound - 1) as i64;
    let (count, seed) = match config.mode {
        CensusMode::Exhaustive => {
            let size = (side as u128).pow(10);
            if size > config.budget {
                return Err(Error::BudgetExceeded { size, budget: config.budget });
            }
            (size as u64, None)
        }
        CensusMode::Sample { count, seed } => (count, Some(seed)),
    };
    let item = |i: u64| -> [i64; 10] {
        match seed {
            None => decode(i, side, offset),
            Some(s) => {
                let mut rng = ChaCha8Rng::seed_from_u64(s);
                rng.set_stream(i);
                std::array::from_fn(|_| rng.gen_range(-offset..=offset))
            }
        }
    };
    let salt = seed.unwrap_or(0);
    let run = || {
        (0..count)
            .into_par_iter()
            .fold(Tally::default, |mut t, i| {
                classify(item(i), i ^ mix(salt), config, &mut t);
                t
            })
            .reduce(Tally::default, Tally::merge)
    };
    let tally = if config.threads == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .build()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .install(run)
    };
    Ok(CensusReport {
        height_bound: config.height_bound,
        seed,
        total: tally.total,
        nondegenerate: tally.nondegenerate,
        generic: tally.generic,
        with_curve_point: tally.with_curve_point,
        decided_yes: tally.yes,
        decided_no: tally.no,
        unknown: tally.unknown,
        representations: tally.reps,
        spot_checked: tally.spot_checked,
        spot_failures: tally.spot_failures,
        hj_histogram: tally.histogram.into_iter().collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllCensusReport {
    pub x: u64,
    pub count: u64,
    /// Sorted minimal pairs `(A, B)`.
    pub curves: Vec<(i64, i64)>,
}

fn height(a: i64, b: i64) -> i128 {
    let a = a.unsigned_abs() as i128;
    let b = b as i128;
    (4 * a * a * a).max(27 * b * b)
}

/// Largest `n >= 0` with `k * n^e < x`.
fn box_radius(x: u64, k: i128, e: u32) -> i64 {
    let mut n: i64 = 0;
    while k * (n as i128 + 1).pow(e) < x as i128 {
        n += 1;
    }
    n
}

fn minimal_small(a: i64, b: i64) -> bool {
    let mut p: i64 = 2;
    loop {
        let p4 = p.pow(4);
        let p6 = p4 * p * p;
        if (a != 0 && p4 > a.abs()) || (b != 0 && p6 > b.abs()) {
            return true;
        }
        if a % p4 == 0 && b % p6 == 0 {
            return false;
        }
        p += 1;
    }
}

/// Minimal curves of height below `x`, by a box scan with a minimality filter.
pub fn ell_census(x: u64) -> EllCensusReport {
    let ra = box_radius(x, 4, 3);
    let rb = box_radius(x, 27, 2);
    let mut curves = Vec::new();
    for a in -ra..=ra {
        for b in -rb..=rb {
            let delta = 4 * (a as i128).pow(3) + 27 * (b as i128).pow(2);
            if delta != 0 && height(a, b) < x as i128 && minimal_small(a, b) {
                curves.push((a, b));
            }
        }
    }
    EllCensusReport { x, count: curves.len() as u64, curves }
}

/// The same count, as the set of minimal models of every nonsingular pair in
/// the box.
pub fn ell_census_by_reduction(x: u64) -> Result<EllCensusReport> {
    let ra = box_radius(x, 4, 3);
    let rb = box_radius(x, 27, 2);
    let mut seen = BTreeSet::new();
    for a in -ra..=ra {
        for b in -rb..=rb {
            if height(a, b) >= x as i128 || 4 * (a as i128).pow(3) + 27 * (b as i128).pow(2) == 0 {
                continue;
            }
            let (ma, mb) = reduce_minimal(&BigInt::from(a), &BigInt::from(b))?;
            seen.insert((i64::try_from(ma).unwrap(), i64::try_from(mb).unwrap()));
        }
    }
    let curves: Vec<(i64, i64)> = seen.into_iter().collect();
    Ok(EllCensusReport { x, count: curves.len() as u64, curves })
}

/// Compares the two strategies at every `X` in `1..=max_x`; returns the
/// first disagreement.
pub fn ell_census_agreement(max_x: u64) -> Result<Option<u64>> {
    let direct = ell_census(max_x);
    let reduced = ell_census_by_reduction(max_x)?;
    let heights = |r: &EllCensusReport| {
        let mut h: Vec<i128> = r.curves.iter().map(|&(a, b)| height(a, b)).collect();
        h.sort();
        h
    };
    let (h1, h2) = (heights(&direct), heights(&reduced));
    let (mut i, mut j) = (0, 0);
    for x in 1..=max_x as i128 {
        while i < h1.len() && h1[i] < x {
            i += 1;
        }
        while j < h2.len() && h2[j] < x {
            j += 1;
        }
        if i != j {
            return Ok(Some(x as u64));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleReport {
    pub p: u64,
    pub checks: Vec<ExampleCheck>,
}

impl ExampleReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// `p X0^3 + p^2 X1^3 - X2^3`.
pub fn diagonal_example(p: u64) -> TernaryForm {
    let p = p as i64;
    TernaryForm::cubic([p, 0, 0, 0, 0, 0, p * p, 0, 0, -1])
}

/// Checks the diagonal cubic `C_p` against its expected arithmetic: inertness
/// of `p` in the cubic field of `u^3 - 9u + 9`, smoothness, genericity, the
/// Jacobian, a 3-torsion point and the absence of small points.
pub fn verify_paper_examples(p: u64) -> Result<ExampleReport> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    let mut checks = Vec::new();
    let root = (0..p).find(|&u| {
        let u = u as u128;
        let p = p as u128;
        (u * u % p * u + 9 * (p - u) + 9).is_multiple_of(p)
    });
    checks.push(ExampleCheck {
        name: "inert",
        passed: root.is_none(),
        detail: match root {
            None => format!("u^3 - 9u + 9 has no root mod {p}"),
            Some(r) => format!("not inert: u = {r} is a root mod {p}"),
        },
    });

    let v = diagonal_example(p);
    let smooth = is_smooth(&v)?;
    checks.push(ExampleCheck { name: "smooth", passed: smooth, detail: format!("C_{p}: {v}") });
    let generic = is_generic(&v);
    checks.push(ExampleCheck {
        name: "generic",
        passed: generic,
        detail: if generic { "no rational flex".into() } else { "has a rational flex or is singular".into() },
    });

    let pq = int(p as i64);
    let p3 = &pq * &pq * &pq;
    let p6 = &p3 * &p3;
    let target = EllipticCurve::new(int(0), -int(27) * &p6 / int(4))?;
    let iso = jacobian(&v).ok().and_then(|j| is_isomorphic(&j.curve, &target));
    checks.push(ExampleCheck {
        name: "jacobian",
        passed: iso.is_some(),
        detail: match &iso {
            Some(u) => format!("Jac(C_{p}) is isomorphic to {target} with u = {u}"),
            None => format!("Jac(C_{p}) is not isomorphic to {target}"),
        },
    });

    let point = ECPoint::affine(int(3) * &pq * &pq, -int(9) * &p3 / int(2));
    let order = if target.contains(&point) { target.order(&point, 12)? } else { None };
    checks.push(ExampleCheck {
        name: "three-torsion",
        passed: order == Some(3),
        detail: match order {
            Some(n) => format!("{point} has order {n}"),
            None if target.contains(&point) => format!("{point} has order above 12"),
            None => format!("{point} is not on the curve"),
        },
    });

    let found = search_curve_points(&v, 50);
    checks.push(ExampleCheck {
        name: "no-points",
        passed: found.is_empty(),
        detail: match found.first() {
            None => "no point with coordinates up to 50".into(),
            Some(q) => format!("found {q}"),
        },
    });
    Ok(ExampleReport { p, checks })
}

/// Projective form of the order-3 point, `[6p^2 : -9p^3 : 2]`.
pub fn example_point(p: u64) -> ProjPoint {
    let p = BigInt::from(p);
    ProjPoint::new([BigInt::from(6) * &p * &p, BigInt::from(-9) * &p * &p * &p, BigInt::from(2)]).unwrap()
}
