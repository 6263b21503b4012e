//! The twelve acceptance criteria, one line each.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use lindet::algebra::arith::{frac, int};
use lindet::algebra::{LinMap3, Matrix, ProjPoint, Rational, TernaryForm};
use lindet::census::{census_run, diagonal_example, ell_census, ell_census_agreement, verify_paper_examples, CensusConfig};
use lindet::detrep::{equivalent, find_representation, hom_space, rep_moore, rep_to_point, rep_weierstrass, verify_rep, Route, SearchBounds};
use lindet::elliptic::{is_isomorphic, jacobian, search_points, ECPoint, EllipticCurve};
use lindet::invariants::{aronhold_ab, discriminant, twisted_action};
use lindet::plane_cubic::{hesse_cubic, is_generic, is_smooth, rational_flexes, weierstrass_cubic};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn small_rational(rng: &mut impl Rng) -> Rational {
    frac(rng.gen_range(-40..=40), rng.gen_range(1..=9))
}

fn nonzero(rng: &mut impl Rng, r: i64) -> i64 {
    loop {
        let n = rng.gen_range(-r..=r);
        if n != 0 {
            return n;
        }
    }
}

fn random_cubic(rng: &mut impl Rng, r: i64) -> TernaryForm {
    TernaryForm::cubic(std::array::from_fn(|_| rng.gen_range(-r..=r)))
}

fn random_map(rng: &mut impl Rng) -> LinMap3 {
    loop {
        let g = LinMap3::new(std::array::from_fn(|_| std::array::from_fn(|_| small_rational(rng))));
        if !g.det().is_zero() {
            return g;
        }
    }
}

fn random_matrix(rng: &mut impl Rng) -> Matrix {
    loop {
        let m = Matrix::from_rows((0..3).map(|_| (0..3).map(|_| small_rational(rng)).collect()).collect());
        if !m.det().is_zero() {
            return m;
        }
    }
}

fn weierstrass_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut n = 0;
    while n < 500 {
        let (l, m, a) = (small_rational(&mut rng), small_rational(&mut rng), small_rational(&mut rng));
        let b = &m * &m - &l * &l * &l - &a * &l;
        if (int(4) * &a * &a * &a + int(27) * &b * &b).is_zero() {
            continue;
        }
        let rep = rep_weierstrass(&a, &b, &ECPoint::affine(l.clone(), m.clone())).map_err(|e| e.to_string())?;
        check(rep.det() == weierstrass_cubic(&a, &b), || format!("det differs at a={a}, point ({l}, {m})"))?;
        n += 1;
    }
    Ok(format!("{n} points"))
}

fn moore_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut n = 0;
    while n < 500 {
        let p = ProjPoint::from_ints(std::array::from_fn(|_| nonzero(&mut rng, 30))).unwrap();
        let a = p.to_rationals();
        let prod = &a[0] * &a[1] * &a[2];
        let lambda = -(&a[0] * &a[0] * &a[0] + &a[1] * &a[1] * &a[1] + &a[2] * &a[2] * &a[2]) / &prod;
        let h = hesse_cubic(&lambda);
        if discriminant(&h).unwrap().is_zero() {
            continue;
        }
        let rep = rep_moore(&lambda, &p).map_err(|e| e.to_string())?;
        check(rep.det() == h.scale(&prod), || format!("det differs at {p}"))?;
        n += 1;
    }
    Ok(format!("{n} points"))
}

fn calibration() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let (a, b) = (small_rational(&mut rng), small_rational(&mut rng));
        let r = aronhold_ab(&weierstrass_cubic(&a, &b)).map_err(|e| e.to_string())?;
        check(r.a == int(1296) * &a && r.b == int(46656) * &b, || format!("A, B wrong at ({a}, {b})"))?;
        check(r.c4 == -&r.a / int(27), || "c4".into())?;
        check(r.c6 == -&r.b / int(54), || "c6".into())?;
        check(r.s == &r.a / int(1296 * 27), || "S".into())?;
        check(r.t == -&r.b / int(5832 * 54), || "T".into())?;
        check(r.delta == int(4) * &r.a * &r.a * &r.a + int(27) * &r.b * &r.b, || "delta".into())?;
    }
    Ok("200 pairs".into())
}

fn pgl3_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut n = 0;
    while n < 100 {
        let v = random_cubic(&mut rng, 4);
        if discriminant(&v).unwrap().is_zero() {
            continue;
        }
        let g = random_map(&mut rng);
        let w = twisted_action(&g, &v).map_err(|e| e.to_string())?;
        let (r, s) = (aronhold_ab(&v).unwrap(), aronhold_ab(&w).unwrap());
        check(r.a == s.a && r.b == s.b && r.delta == s.delta, || format!("invariants moved under {g}"))?;
        let (jv, jw) = (jacobian(&v).unwrap(), jacobian(&w).unwrap());
        check(is_isomorphic(&jv.curve, &jw.curve).is_some(), || format!("Jacobian moved under {g}"))?;
        n += 1;
    }
    Ok(format!("{n} maps"))
}

fn singular_library() -> Vec<TernaryForm> {
    let lines = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, -2, 3], [2, 1, -1], [0, 1, -1]];
    let conics = [[1, 0, 0, 1, 0, -1], [0, 0, 1, -1, 0, 0], [1, 1, 0, 2, 0, -3], [2, 0, 1, 0, 1, 1], [1, 0, 0, 0, 1, 0]];
    let line = |c: [i64; 3]| TernaryForm::from_ints(1, &c).unwrap();
    let conic = |c: [i64; 6]| TernaryForm::from_ints(2, &c).unwrap();
    let mut lib = Vec::new();
    for (i, c) in conics.iter().enumerate() {
        lib.push(&conic(*c) * &line(lines[i]));
    }
    for i in 0..5 {
        lib.push(&(&line(lines[i]) * &line(lines[i + 1])) * &line(lines[i + 2]));
    }
    // no X2^3, X0X2^2, X1X2^2 terms: singular at [0:0:1], then moved
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..6 {
        let mut c: [i64; 10] = std::array::from_fn(|_| rng.gen_range(-5..=5));
        c[5] = 0;
        c[8] = 0;
        c[9] = 0;
        lib.push(TernaryForm::cubic(c).substitute(&random_map(&mut rng)));
    }
    lib.push(weierstrass_cubic(&int(0), &int(0)));
    lib.push(weierstrass_cubic(&int(-3), &int(2)));
    lib.push(weierstrass_cubic(&int(-27), &int(54)));
    lib.push(hesse_cubic(&int(-3)));
    lib
}

fn smooth_library() -> Vec<TernaryForm> {
    let mut lib = Vec::new();
    for (a, b) in [(0, 1), (1, 0), (-1, 1), (0, -432), (1, 1), (-2, 5), (3, -7), (-5, 2)] {
        lib.push(weierstrass_cubic(&int(a), &int(b)));
    }
    for l in [0, 1, -1, 2, 5, -7] {
        lib.push(hesse_cubic(&int(l)));
    }
    for (a, b, c) in [(1, 1, 1), (2, 4, -1), (3, 9, -1), (1, 2, 3), (-5, 7, 11), (5, 25, -1)] {
        lib.push(TernaryForm::cubic([a, 0, 0, 0, 0, 0, b, 0, 0, c]));
    }
    lib
}

fn singularity_detection() -> Outcome {
    let (sing, smooth) = (singular_library(), smooth_library());
    check(sing.len() == 20 && smooth.len() == 20, || "library sizes".into())?;
    for v in &sing {
        check(discriminant(v).unwrap().is_zero(), || format!("nonzero discriminant on singular {v}"))?;
    }
    for v in &smooth {
        check(!discriminant(v).unwrap().is_zero(), || format!("zero discriminant on smooth {v}"))?;
    }
    Ok("20 singular, 20 smooth".into())
}

fn flex_suite() -> Outcome {
    let pts = |v: &[[i64; 3]]| -> Vec<ProjPoint> {
        let mut p: Vec<ProjPoint> = v.iter().map(|x| ProjPoint::from_ints(*x).unwrap()).collect();
        p.sort();
        p
    };
    let definition = |v: &TernaryForm| is_smooth(v).unwrap() && rational_flexes(v).unwrap().rational_flexes.is_empty();
    let fermat = TernaryForm::cubic([1, 0, 0, 0, 0, 0, 1, 0, 0, 1]);
    let got = rational_flexes(&fermat).unwrap().rational_flexes;
    check(got == pts(&[[0, 1, -1], [1, 0, -1], [1, -1, 0]]), || format!("Fermat flexes {got:?}"))?;
    check(is_generic(&fermat) == definition(&fermat) && !is_generic(&fermat), || "Fermat genericity".into())?;

    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut n = 0;
    while n < 20 {
        let (a, b) = (int(rng.gen_range(-30..=30)), int(rng.gen_range(-30..=30)));
        if (int(4) * &a * &a * &a + int(27) * &b * &b).is_zero() {
            continue;
        }
        let w = weierstrass_cubic(&a, &b);
        let f = rational_flexes(&w).unwrap().rational_flexes;
        check(f.contains(&ProjPoint::from_ints([0, 1, 0]).unwrap()), || format!("[0:1:0] missing for ({a}, {b})"))?;
        check(is_generic(&w) == definition(&w), || "w genericity".into())?;
        n += 1;
    }

    let c2 = diagonal_example(2);
    check(rational_flexes(&c2).unwrap().rational_flexes.is_empty(), || "C_2 has a flex".into())?;
    check(is_generic(&c2) && definition(&c2), || "C_2 genericity".into())?;
    Ok("Fermat, 20 Weierstrass, C_2".into())
}

fn equivalence_classification() -> Outcome {
    let (a, b) = (int(0), int(-432));
    let e = EllipticCurve::new(a.clone(), b.clone()).unwrap();
    let points: Vec<ECPoint> = search_points(&e, 50).into_iter().filter(|p| !p.is_infinity()).collect();
    let reps: Vec<_> = points.iter().map(|p| rep_weierstrass(&a, &b, p).unwrap()).collect();
    for i in 0..reps.len() {
        for j in 0..reps.len() {
            let d = hom_space(&reps[i], &reps[j]).unwrap().dimension();
            check(d <= 1, || format!("hom dimension {d}"))?;
            check(equivalent(&reps[i], &reps[j]).unwrap() == (i == j), || format!("{} vs {}", points[i], points[j]))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 0..50 {
        let m = &reps[k % reps.len()];
        let framed = m.framed(&random_matrix(&mut rng), &random_matrix(&mut rng));
        check(equivalent(m, &framed).unwrap(), || "framing not equivalent".into())?;
        let d = hom_space(m, &framed).unwrap().dimension();
        check(d == 1, || format!("hom dimension {d} for a framing"))?;
    }
    Ok(format!("{} points pairwise distinct, 50 framings", points.len()))
}

fn example_suite() -> Outcome {
    for p in [2, 5] {
        let r = verify_paper_examples(p).map_err(|e| e.to_string())?;
        check(r.checks.len() == 6 && r.all_passed(), || format!("p = {p}: {:?}", r.checks))?;
        let point = ECPoint::affine(int(3 * (p * p) as i64), frac(-9 * (p * p * p) as i64, 2));
        let ep = EllipticCurve::new(int(0), frac(-27 * (p as i64).pow(6), 4)).unwrap();
        check(ep.contains(&point) && ep.order(&point, 12).unwrap() == Some(3), || format!("order-3 point for p = {p}"))?;
    }
    let r = verify_paper_examples(3).map_err(|e| e.to_string())?;
    check(!r.checks[0].passed && r.checks[0].detail.starts_with("not inert"), || "p = 3 should be not inert".into())?;
    Ok("p = 2, 5 pass; p = 3 not inert".into())
}

fn ell_census_check() -> Outcome {
    let c = ell_census(100).count;
    check(c == 14, || format!("ell_census(100) = {c}"))?;
    match ell_census_agreement(10_000).map_err(|e| e.to_string())? {
        None => Ok("14 curves; strategies agree up to 10^4".into()),
        Some(x) => Err(format!("strategies disagree at X = {x}")),
    }
}

fn exhaustive_census() -> Outcome {
    let run = |threads| census_run(&CensusConfig { threads, ..CensusConfig::exhaustive(2) }).map_err(|e| e.to_string());
    let one = run(1)?;
    check(one.total == 59049, || format!("total {}", one.total))?;
    for t in [4, 8] {
        check(run(t)? == one, || format!("report differs at {t} threads"))?;
    }
    check(one.representations == one.decided_yes, || {
        format!("{} representations for {} decided yes", one.representations, one.decided_yes)
    })?;
    Ok(format!(
        "total {}, decided yes {}, no {}, unknown {}, all yes represented",
        one.total, one.decided_yes, one.decided_no, one.unknown
    ))
}

fn end_to_end() -> Outcome {
    let fermat = TernaryForm::cubic([1, 0, 0, 0, 0, 0, 1, 0, 0, 1]);
    let r = find_representation(&fermat, &SearchBounds::default()).map_err(|e| e.to_string())?.ok_or("no representation")?;
    let c = verify_rep(&r.matrix, &fermat).map_err(|e| e.to_string())?;
    check(!c.is_zero(), || "zero constant".into())?;
    let Route::Flex { a, b, .. } = &r.route else { return Err(format!("route {:?}", r.route)) };
    let e = EllipticCurve::new(a.clone(), b.clone()).unwrap();
    check(is_isomorphic(&e, &EllipticCurve::from_ints(0, -432).unwrap()).is_some(), || format!("curve {e}"))?;
    Ok(format!("flex route through {e}, constant {c}"))
}

fn round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let (mut curves, mut points) = (0, 0);
    while curves < 20 {
        let (x, y, a) = (rng.gen_range(-6i64..=6), rng.gen_range(-8i64..=8), rng.gen_range(-6i64..=6));
        let b = y * y - x * x * x - a * x;
        let Ok(e) = EllipticCurve::from_ints(a, b) else { continue };
        for p in search_points(&e, 50).into_iter().filter(|p| !p.is_infinity()) {
            let m = rep_weierstrass(&int(a), &int(b), &p).unwrap();
            let back = rep_to_point(&m, &int(a), &int(b), 50).map_err(|e| e.to_string())?;
            check(back == p, || format!("{p} came back as {back} on ({a}, {b})"))?;
            points += 1;
        }
        curves += 1;
    }
    Ok(format!("{points} points on {curves} curves"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("Weierstrass determinant identity", weierstrass_identity, Some(10)),
        ("Moore determinant identity", moore_identity, Some(10)),
        ("invariant calibration", calibration, None),
        ("PGL3 invariance", pgl3_invariance, None),
        ("singularity detection", singularity_detection, None),
        ("flex suite", flex_suite, None),
        ("equivalence classification", equivalence_classification, Some(30)),
        ("diagonal cubic example suite", example_suite, None),
        ("elliptic curve census", ell_census_check, Some(60)),
        ("exhaustive census X = 2", exhaustive_census, Some(300)),
        ("end-to-end representation of the Fermat cubic", end_to_end, Some(5)),
        ("rep_to_point round trip", round_trip, None),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        if let (Ok(_), Some(s)) = (&result, limit) {
            if elapsed > Duration::from_secs(s) {
                result = Err(format!("took {elapsed:.1?}, limit {s} s"));
            }
        }
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("criterion {:>2} {tag} [{elapsed:.2?}] {name}: {detail}", i + 1);
        failed += result.is_err() as usize;
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
