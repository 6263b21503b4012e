//! Linear determinantal representations of lines, conics and cubics:
//! constructors, verification, equivalence and existence decisions.

use num_traits::{One, Zero};

use crate::algebra::arith::{int, Rational};
use crate::algebra::form::monomials;
use crate::algebra::matrix::kernel_basis;
use crate::algebra::{LinMap3, LinearMatrixRep, Matrix, ProjPoint, TernaryForm, UniPoly};
use crate::elliptic::{is_isomorphic, jacobian, search_points, torsion_subgroup, ECPoint, EllipticCurve};
use crate::error::{Error, Result};
use crate::plane_cubic::{
    hesse_cubic, hesse_parameter, is_smooth, rational_flexes, search_curve_points, to_weierstrass,
    weierstrass_cubic,
};

fn zero3() -> [Rational; 3] {
    [Rational::zero(), Rational::zero(), Rational::zero()]
}

fn lin(c0: Rational, c1: Rational, c2: Rational) -> [Rational; 3] {
    [c0, c1, c2]
}

/// The `1x1` matrix `[l]`.
pub fn rep_line(l: &TernaryForm) -> Result<LinearMatrixRep> {
    l.expect_degree(1)?;
    if l.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    LinearMatrixRep::new(1, vec![[l.coeff([1, 0, 0]).clone(), l.coeff([0, 1, 0]).clone(), l.coeff([0, 0, 1]).clone()]])
}

fn unit(i: usize) -> [Rational; 3] {
    std::array::from_fn(|k| if k == i { Rational::one() } else { Rational::zero() })
}

fn cross(p: &[Rational; 3], q: &[Rational; 3]) -> [Rational; 3] {
    [
        &p[1] * &q[2] - &p[2] * &q[1],
        &p[2] * &q[0] - &p[0] * &q[2],
        &p[0] * &q[1] - &p[1] * &q[0],
    ]
}

fn gradient_at(f: &TernaryForm, p: &[Rational; 3]) -> [Rational; 3] {
    std::array::from_fn(|i| f.partial(i).eval(p))
}

/// A `2x2` representation of a smooth conic through a rational point, pulled
/// back from `[[X0, X1], [X1, X2]]`; the result has determinant exactly `q`.
pub fn rep_conic(q: &TernaryForm, p: &ProjPoint) -> Result<LinearMatrixRep> {
    q.expect_degree(2)?;
    if q.is_zero() || q.hessian()?.is_zero() {
        return Err(Error::SingularConic);
    }
    if !q.eval_point(p).is_zero() {
        return Err(Error::PointNotOnCurve);
    }
    let pr = p.to_rationals();
    let tangent = gradient_at(q, &pr);
    let mut vanishing: Vec<[Rational; 3]> = (0..3).filter(|&i| pr[i].is_zero()).map(unit).collect();
    vanishing.extend((0..3).map(|k| cross(&pr, &unit(k))));
    let frame = (0..3)
        .filter(|&i| !pr[i].is_zero())
        .flat_map(|i| vanishing.iter().map(move |l| (l.clone(), unit(i))))
        .map(|(l, m2)| LinMap3::new([tangent.clone(), l, m2]))
        .find(|m| !m.det().is_zero())
        .ok_or(Error::SingularConic)?;
    // Y = frame X: P -> [0:0:1], tangent -> Y0 = 0, so q = d Y0Y2 + e Y0^2 + f Y0Y1 + h Y1^2.
    let m_inv = frame.inverse()?;
    let qy = q.substitute(&m_inv);
    let d = qy.coeff([1, 0, 1]).clone();
    let e = qy.coeff([2, 0, 0]).clone();
    let f = qy.coeff([1, 1, 0]).clone();
    let h = qy.coeff([0, 2, 0]).clone();
    if d.is_zero() || h.is_zero() {
        return Err(Error::SingularConic);
    }
    let one = Rational::one;
    let zero = Rational::zero;
    let shear = LinMap3::new([
        [one(), zero(), zero()],
        [zero(), one(), zero()],
        [-&e / &d, -&f / &d, one()],
    ]);
    let stretch = LinMap3::new([[-&h / &d, zero(), zero()], [zero(), one(), zero()], [zero(), zero(), one()]]);
    let g = &(&m_inv * &shear) * &stretch;
    let standard = LinearMatrixRep::new(
        2,
        vec![unit(0), unit(1), unit(1), unit(2)],
    )?;
    let m = pullback_rep(&standard, &g.inverse()?)?;
    let c = verify_rep(&m, q)?;
    Ok(m.scale_row(0, &c.recip()))
}

/// The matrix attached to an affine point `(l, m)` of `y^2 = x^3 + ax + b`,
/// with determinant `X1^2X2 - X0^3 - aX0X2^2 - bX2^3`.
pub fn rep_weierstrass(a: &Rational, b: &Rational, p: &ECPoint) -> Result<LinearMatrixRep> {
    let e = EllipticCurve::new(a.clone(), b.clone())?;
    let (l, m) = p.coords().ok_or(Error::PointAtInfinity)?;
    if !e.contains(p) {
        return Err(Error::PointNotOnCurve);
    }
    let z = Rational::zero;
    let one = Rational::one;
    let entries = vec![
        lin(one(), z(), -l),
        zero3(),
        lin(z(), -one(), -m),
        lin(z(), -one(), m.clone()),
        lin(one(), z(), l.clone()),
        lin(z(), z(), a + l * l),
        zero3(),
        lin(z(), z(), one()),
        lin(-one(), z(), z()),
    ];
    LinearMatrixRep::new(3, entries)
}

/// The Moore matrix of a point `[a0:a1:a2]` with nonzero coordinates on the
/// Hesse cubic with parameter `lambda`; determinant `a0a1a2` times the cubic.
pub fn rep_moore(lambda: &Rational, p: &ProjPoint) -> Result<LinearMatrixRep> {
    let a = p.to_rationals();
    if a.iter().any(Zero::is_zero) {
        return Err(Error::CoordinateZero);
    }
    let hesse = hesse_cubic(lambda);
    if !hesse.eval(&a).is_zero() {
        return Err(Error::PointNotOnCurve);
    }
    if !is_smooth(&hesse)? {
        return Err(Error::SingularCurve);
    }
    let at = |coef: &Rational, var: usize| {
        let mut t = zero3();
        t[var] = coef.clone();
        t
    };
    let entries = vec![
        at(&a[0], 0),
        at(&a[1], 2),
        at(&a[2], 1),
        at(&a[1], 1),
        at(&a[2], 0),
        at(&a[0], 2),
        at(&a[2], 2),
        at(&a[0], 1),
        at(&a[1], 0),
    ];
    LinearMatrixRep::new(3, entries)
}

/// Entry-wise substitution `X -> g X`.
pub fn pullback_rep(m: &LinearMatrixRep, g: &LinMap3) -> Result<LinearMatrixRep> {
    if g.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    Ok(m.pullback(g))
}

/// The nonzero `c` with `det(M) = c f`.
pub fn verify_rep(m: &LinearMatrixRep, f: &TernaryForm) -> Result<Rational> {
    if m.size() != f.degree() {
        return Err(Error::DegreeMismatch { expected: m.size(), found: f.degree() });
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let det = m.det();
    match f.ratio_to(&det) {
        Some(c) if !c.is_zero() => Ok(c),
        _ => Err(Error::NotARepresentation),
    }
}

/// Solutions `(U, V)` of `U M = M' V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub basis: Vec<(Matrix, Matrix)>,
}

impl HomSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

pub fn hom_space(m: &LinearMatrixRep, m2: &LinearMatrixRep) -> Result<HomSpace> {
    let d = m.size();
    if m2.size() != d {
        return Err(Error::DegreeMismatch { expected: d, found: m2.size() });
    }
    let n = 2 * d * d;
    let u_idx = |i: usize, l: usize| i * d + l;
    let v_idx = |l: usize, j: usize| d * d + l * d + j;
    let mut rows = Vec::with_capacity(3 * d * d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..3 {
                let mut row = vec![Rational::zero(); n];
                for l in 0..d {
                    row[u_idx(i, l)] += &m.entry(l, j)[k];
                    row[v_idx(l, j)] -= &m2.entry(i, l)[k];
                }
                rows.push(row);
            }
        }
    }
    let basis = kernel_basis(&rows, n)
        .into_iter()
        .map(|x| {
            let u = Matrix::from_rows((0..d).map(|i| x[i * d..(i + 1) * d].to_vec()).collect());
            let v = Matrix::from_rows((0..d).map(|l| x[d * d + l * d..d * d + (l + 1) * d].to_vec()).collect());
            (u, v)
        })
        .collect();
    Ok(HomSpace { basis })
}

fn same_curve(m: &LinearMatrixRep, m2: &LinearMatrixRep) -> Result<()> {
    let f = m.det();
    if f.is_zero() {
        return Err(Error::NotARepresentation);
    }
    verify_rep(m2, &f).map(|_| ())
}

/// `M' = A M B` for some invertible constant `A`, `B`.
pub fn equivalent(m: &LinearMatrixRep, m2: &LinearMatrixRep) -> Result<bool> {
    same_curve(m, m2)?;
    let hom = hom_space(m, m2)?;
    let d = m.size();
    match hom.dimension() {
        0 => Ok(false),
        1 => Ok(!hom.basis[0].0.det().is_zero()),
        k => {
            // det(sum t_i U_i) has degree d; a nonzero one survives on {0..d}^k.
            let total = (d + 1).pow(k as u32);
            Ok((1..total).any(|mut code| {
                let mut u = Matrix::zeros(d, d);
                for (ui, _) in &hom.basis {
                    let t = int((code % (d + 1)) as i64);
                    code /= d + 1;
                    u = u.add(&ui.scale(&t));
                }
                !u.det().is_zero()
            }))
        }
    }
}

/// The searched point `P` whose Weierstrass matrix is equivalent to `M`.
pub fn rep_to_point(m: &LinearMatrixRep, a: &Rational, b: &Rational, bound: u64) -> Result<ECPoint> {
    let e = EllipticCurve::new(a.clone(), b.clone())?;
    verify_rep(m, &weierstrass_cubic(a, b))?;
    for p in search_points(&e, bound) {
        if equivalent(m, &rep_weierstrass(a, b, &p)?)? {
            return Ok(p);
        }
    }
    Err(Error::NotFound)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    pub curve: u64,
    pub jacobian: u64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { curve: 50, jacobian: 50 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Route {
    /// Moore matrix of a point with nonzero coordinates on a Hesse cubic.
    Hesse { lambda: Rational, point: ProjPoint },
    /// Weierstrass matrix of `point` on `y^2 = x^3 + ax + b`, reached from `flex`.
    Flex { flex: ProjPoint, a: Rational, b: Rational, point: ECPoint },
    /// Syzygies of the conics through a length-3 scheme: the listed points,
    /// with `tangent` marking the point taken with its tangent direction.
    Scheme { points: Vec<ProjPoint>, tangent: Option<ProjPoint> },
    /// Syzygies of the conics through the residual of a quartic containing the
    /// fibre over `point` (on the minimal model) of the covering by the curve.
    Jacobian { point: ECPoint },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    /// Determinant equal to the input form.
    pub matrix: LinearMatrixRep,
    pub route: Route,
}

fn normalized(m: LinearMatrixRep, v: &TernaryForm) -> Result<LinearMatrixRep> {
    let c = verify_rep(&m, v)?;
    Ok(m.scale_row(0, &c.recip()))
}

fn hesse_route(v: &TernaryForm, bounds: &SearchBounds) -> Result<Option<Representation>> {
    let Some(lambda) = hesse_parameter(v) else { return Ok(None) };
    let found = search_curve_points(v, bounds.curve)
        .into_iter()
        .find(|p| p.coords().iter().all(|c| !c.is_zero()));
    let Some(point) = found else { return Ok(None) };
    let matrix = normalized(rep_moore(&lambda, &point)?, v)?;
    Ok(Some(Representation { matrix, route: Route::Hesse { lambda, point } }))
}

fn flex_route(v: &TernaryForm, bounds: &SearchBounds) -> Result<Option<Representation>> {
    let flexes = rational_flexes(v)?.rational_flexes;
    let Some(flex) = flexes.into_iter().next() else { return Ok(None) };
    let wc = to_weierstrass(v, &flex)?;
    let e = EllipticCurve::new(wc.a.clone(), wc.b.clone())?;
    let (minimal, u) = e.minimal_model()?;
    let mut candidates = search_points(&minimal, bounds.jacobian);
    if candidates.is_empty() {
        if let Ok(t) = torsion_subgroup(&minimal) {
            candidates = t.points.into_iter().filter(|p| !p.is_infinity()).collect();
        }
    }
    let Some(pm) = candidates.into_iter().next() else { return Ok(None) };
    let point = EllipticCurve::map_point(&pm, &u.recip());
    let mp = rep_weierstrass(&wc.a, &wc.b, &point)?;
    let matrix = normalized(pullback_rep(&mp, &wc.g)?, v)?;
    Ok(Some(Representation { matrix, route: Route::Flex { flex, a: wc.a, b: wc.b, point } }))
}

/// A point of the tangent line at `p` other than `p`.
fn tangent_direction(v: &TernaryForm, p: &[Rational; 3]) -> [Rational; 3] {
    let t = gradient_at(v, p);
    (0..3)
        .map(|k| cross(&t, &unit(k)))
        .find(|d| cross(d, p).iter().any(|c| !c.is_zero()))
        .expect("tangent line of a smooth point")
}

/// Third intersection of the chord through `p`, `q` (tangent when equal) with `C(v)`.
fn third_point(v: &TernaryForm, p: &ProjPoint, q: &ProjPoint) -> Option<ProjPoint> {
    let pr = p.to_rationals();
    let d = if p == q { tangent_direction(v, &pr) } else { q.to_rationals() };
    let samples: Vec<(Rational, Rational)> = (0..4)
        .map(|t| {
            let t = int(t);
            let x: [Rational; 3] = std::array::from_fn(|i| &pr[i] + &t * &d[i]);
            (t, v.eval(&x))
        })
        .collect();
    let phi = UniPoly::interpolate(&samples);
    let b: Vec<Rational> = (0..4).map(|k| phi.coeffs().get(k).cloned().unwrap_or_else(Rational::zero)).collect();
    let (s, t) = if p == q { (b[3].clone(), -&b[2]) } else { (b[2].clone(), -&b[1]) };
    let x: [Rational; 3] = std::array::from_fn(|i| &s * &pr[i] + &t * &d[i]);
    ProjPoint::from_rationals(&x).ok()
}

/// One chord-tangent round over `pool`, keeping at most `cap` points. False when nothing new appeared.
fn grow_pool(v: &TernaryForm, pool: &mut Vec<ProjPoint>, cap: usize) -> bool {
    let mut fresh = Vec::new();
    for i in 0..pool.len() {
        for j in i..pool.len() {
            if let Some(r) = third_point(v, &pool[i], &pool[j]) {
                if !pool.contains(&r) && !fresh.contains(&r) {
                    fresh.push(r);
                }
            }
        }
    }
    let before = pool.len();
    pool.extend(fresh);
    pool.truncate(cap.max(before));
    pool.len() > before
}

/// Representation from the Hilbert–Burch matrix of a length-3 scheme on the
/// curve: two linear syzygies of the conics through the scheme plus one
/// expression of `v` in terms of them.
fn scheme_rep(v: &TernaryForm, conditions: &[Vec<Rational>]) -> Option<LinearMatrixRep> {
    let conics = kernel_basis(conditions, 6);
    if conics.len() != 3 {
        return None;
    }
    let conics: Vec<TernaryForm> = conics.into_iter().map(|c| TernaryForm::new(2, c).unwrap()).collect();
    hilbert_burch(v, &conics)
}

/// Matrix from three independent conics whose ideal contains `v`.
fn hilbert_burch(v: &TernaryForm, conics: &[TernaryForm]) -> Option<LinearMatrixRep> {
    let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(10);
    for c in conics {
        for j in 0..3 {
            columns.push((&TernaryForm::variable(j) * c).coeffs().to_vec());
        }
    }
    columns.push(v.coeffs().iter().map(|c| -c).collect());
    let rows: Vec<Vec<Rational>> = (0..10).map(|r| columns.iter().map(|col| col[r].clone()).collect()).collect();
    let sols = kernel_basis(&rows, 10);
    if sols.len() != 3 {
        return None;
    }
    let pivot = sols.iter().position(|s| !s[9].is_zero())?;
    let top = sols[pivot].clone();
    let mut ordered: Vec<Vec<Rational>> = sols
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != pivot)
        .map(|(_, s)| {
            let f = &s[9] / &top[9];
            s.iter().zip(&top).map(|(x, y)| x - &f * y).collect()
        })
        .collect();
    ordered.push(top);
    let entries = ordered
        .iter()
        .flat_map(|s| (0..3).map(move |i| [s[3 * i].clone(), s[3 * i + 1].clone(), s[3 * i + 2].clone()]))
        .collect();
    let m = LinearMatrixRep::new(3, entries).ok()?;
    normalized(m, v).ok()
}

fn point_condition(p: &[Rational; 3]) -> Vec<Rational> {
    monomials(2).iter().map(|e| &p[0].pow(e[0] as i32) * &p[1].pow(e[1] as i32) * p[2].pow(e[2] as i32)).collect()
}

fn tangency_condition(p: &[Rational; 3], d: &[Rational; 3]) -> Vec<Rational> {
    monomials(2)
        .iter()
        .map(|e| {
            let m = TernaryForm::monomial(*e, Rational::one());
            let plus: [Rational; 3] = std::array::from_fn(|i| &p[i] + &d[i]);
            let minus: [Rational; 3] = std::array::from_fn(|i| &p[i] - &d[i]);
            (m.eval(&plus) - m.eval(&minus)) / int(2)
        })
        .collect()
}

/// Searches length-3 schemes among the found points, enlarging the pool by
/// chord-tangent rounds only while nothing works.
fn scheme_route(v: &TernaryForm, bounds: &SearchBounds) -> Result<Option<Representation>> {
    const CAP: usize = 8;
    let mut pool: Vec<ProjPoint> = search_curve_points(v, bounds.curve).into_iter().take(CAP).collect();
    if pool.is_empty() {
        return Ok(None);
    }
    let mut coords: Vec<[Rational; 3]> = Vec::new();
    let mut tangents: Vec<[Rational; 3]> = Vec::new();
    let mut done = 0;
    for round in 0..=3 {
        if round > 0 && (pool.len() >= CAP || !grow_pool(v, &mut pool, CAP)) {
            break;
        }
        let n = pool.len();
        coords.extend(pool[done..].iter().map(ProjPoint::to_rationals));
        tangents.extend(coords[done..].iter().map(|c| tangent_direction(v, c)));
        for k in done.max(2)..n {
            for j in 1..k {
                for i in 0..j {
                    let cond = vec![point_condition(&coords[i]), point_condition(&coords[j]), point_condition(&coords[k])];
                    if let Some(matrix) = scheme_rep(v, &cond) {
                        let points = vec![pool[i].clone(), pool[j].clone(), pool[k].clone()];
                        return Ok(Some(Representation { matrix, route: Route::Scheme { points, tangent: None } }));
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j || i.max(j) < done {
                    continue;
                }
                let cond = vec![
                    point_condition(&coords[i]),
                    tangency_condition(&coords[i], &tangents[i]),
                    point_condition(&coords[j]),
                ];
                if let Some(matrix) = scheme_rep(v, &cond) {
                    let route = Route::Scheme { points: vec![pool[i].clone(), pool[j].clone()], tangent: Some(pool[i].clone()) };
                    return Ok(Some(Representation { matrix, route }));
                }
            }
        }
        done = n;
    }
    Ok(None)
}

/// Uses a Jacobian point `P` with `[3]P != O`, which needs no point on the curve.
fn jacobian_route(v: &TernaryForm, bounds: &SearchBounds) -> Result<Option<Representation>> {
    let jac = jacobian(v)?;
    let e = &jac.minimal;
    let killed = |p: &ECPoint| e.multiply(3, p).map(|q| q.is_infinity()).unwrap_or(true);
    let mut candidates: Vec<ECPoint> = search_points(e, bounds.jacobian).into_iter().filter(|p| !killed(p)).collect();
    if candidates.is_empty() {
        if let Ok(t) = torsion_subgroup(e) {
            candidates = t.points.into_iter().filter(|p| !killed(p)).collect();
        }
    }
    let Some(point) = candidates.into_iter().next() else { return Ok(None) };
    let ECPoint::Affine { x, y } = EllipticCurve::map_point(&point, &jac.u.recip()) else {
        return Ok(None);
    };
    // unimodular change giving a nonzero X1^3 coefficient; invariants are unchanged
    let g = (0..=4i64)
        .flat_map(|q0| (0..=4i64).map(move |q2| (q0, q2)))
        .map(|(q0, q2)| LinMap3::from_ints([[1, q0, 0], [0, 1, 0], [0, q2, 1]]))
        .find(|g| !v.substitute(g).coeff([0, 3, 0]).is_zero())
        .ok_or(Error::SingularCurve)?;
    let w = v.substitute(&g);
    let Some(conics) = crate::covering::fibre_conics(&w, &x, &y) else { return Ok(None) };
    let Some(mw) = hilbert_burch(&w, &conics) else { return Ok(None) };
    let matrix = normalized(pullback_rep(&mw, &g.inverse()?)?, v)?;
    Ok(Some(Representation { matrix, route: Route::Jacobian { point } }))
}

/// Tries the Hesse route, the flex route, the point-scheme route, then the
/// Jacobian-point route.
/// `None` means no route applied within the bounds, not that no
/// representation exists.
pub fn find_representation(v: &TernaryForm, bounds: &SearchBounds) -> Result<Option<Representation>> {
    if !is_smooth(v)? {
        return Err(Error::SingularCurve);
    }
    if let Some(r) = hesse_route(v, bounds)? {
        return Ok(Some(r));
    }
    if let Some(r) = flex_route(v, bounds)? {
        return Ok(Some(r));
    }
    if let Some(r) = scheme_route(v, bounds)? {
        return Ok(Some(r));
    }
    jacobian_route(v, bounds)
}

/// External hypotheses about the Jacobian, in terms of its minimal model.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assertions {
    pub rank: Option<u32>,
    pub jacobian_witness: Option<ECPoint>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// At least two rational points on the curve.
    TwoCurvePoints,
    /// A rational point on the curve and a nonzero point on the Jacobian.
    PointAndJacobian,
    /// A Jacobian point not killed by 3.
    NotKilledByThree,
    /// Asserted rank 0 and computed trivial torsion.
    TrivialMordellWeil,
    NoRuleApplies,
}

impl Rule {
    pub fn tag(&self) -> &'static str {
        match self {
            Rule::TwoCurvePoints => "R1",
            Rule::PointAndJacobian => "R2",
            Rule::NotKilledByThree => "R3",
            Rule::TrivialMordellWeil => "MW0",
            Rule::NoRuleApplies => "none",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    CurvePoints(Vec<ProjPoint>),
    CurveAndJacobian { curve: ProjPoint, jacobian: ECPoint },
    JacobianPoint(ECPoint),
    Hypothesis { rank: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExistenceVerdict {
    pub verdict: Verdict,
    pub reason: Rule,
    pub witness: Option<Witness>,
}

impl ExistenceVerdict {
    fn yes(reason: Rule, witness: Witness) -> Self {
        ExistenceVerdict { verdict: Verdict::Yes, reason, witness: Some(witness) }
    }
}

fn not_killed_by_three(e: &EllipticCurve, p: &ECPoint) -> Result<bool> {
    Ok(!e.multiply(3, p)?.is_infinity())
}

/// Decides whether `v` has a linear determinantal representation. A
/// supplied Jacobian witness is examined first, then the curve-point rules,
/// then the searched Jacobian points; `No` needs an asserted rank of 0.
pub fn decide_existence(v: &TernaryForm, bounds: &SearchBounds, assertions: &Assertions) -> Result<ExistenceVerdict> {
    if !is_smooth(v)? {
        return Err(Error::SingularCurve);
    }
    let jac = jacobian(v)?.minimal;
    if let Some(w) = &assertions.jacobian_witness {
        if not_killed_by_three(&jac, w)? {
            return Ok(ExistenceVerdict::yes(Rule::NotKilledByThree, Witness::JacobianPoint(w.clone())));
        }
    }
    let curve_points = search_curve_points(v, bounds.curve);
    if curve_points.len() >= 2 {
        return Ok(ExistenceVerdict::yes(Rule::TwoCurvePoints, Witness::CurvePoints(curve_points[..2].to_vec())));
    }
    let jac_points = search_points(&jac, bounds.jacobian);
    if let (Some(c), Some(p)) = (curve_points.first(), jac_points.first()) {
        return Ok(ExistenceVerdict::yes(
            Rule::PointAndJacobian,
            Witness::CurveAndJacobian { curve: c.clone(), jacobian: p.clone() },
        ));
    }
    for p in &jac_points {
        if not_killed_by_three(&jac, p)? {
            return Ok(ExistenceVerdict::yes(Rule::NotKilledByThree, Witness::JacobianPoint(p.clone())));
        }
    }
    let needs_torsion = !curve_points.is_empty() || assertions.rank == Some(0);
    if needs_torsion {
        if let Ok(t) = torsion_subgroup(&jac) {
            if let (Some(c), Some(p)) = (curve_points.first(), t.points.iter().find(|p| !p.is_infinity())) {
                return Ok(ExistenceVerdict::yes(
                    Rule::PointAndJacobian,
                    Witness::CurveAndJacobian { curve: c.clone(), jacobian: p.clone() },
                ));
            }
            if assertions.rank == Some(0) && t.is_trivial() {
                return Ok(ExistenceVerdict {
                    verdict: Verdict::No,
                    reason: Rule::TrivialMordellWeil,
                    witness: Some(Witness::Hypothesis { rank: 0 }),
                });
            }
        }
    }
    Ok(ExistenceVerdict { verdict: Verdict::Unknown, reason: Rule::NoRuleApplies, witness: None })
}

/// Whether `v` and the Weierstrass cubic of `(a, b)` have isomorphic Jacobians.
pub fn same_jacobian(v: &TernaryForm, a: &Rational, b: &Rational) -> Result<bool> {
    let e = EllipticCurve::new(a.clone(), b.clone())?;
    Ok(is_isomorphic(&jacobian(v)?.curve, &e).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::arith::frac;

    fn fermat() -> TernaryForm {
        TernaryForm::cubic([1, 0, 0, 0, 0, 0, 1, 0, 0, 1])
    }

    fn pt(x: [i64; 3]) -> ProjPoint {
        ProjPoint::from_ints(x).unwrap()
    }

    #[test]
    fn lines() {
        let l = TernaryForm::from_ints(1, &[1, 2, 0]).unwrap();
        let m = rep_line(&l).unwrap();
        assert_eq!(m.det(), l);
        assert_eq!(rep_line(&TernaryForm::zero(1)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn conics() {
        let q = TernaryForm::from_ints(2, &[0, 0, 1, -1, 0, 0]).unwrap();
        let m = rep_conic(&q, &pt([0, 0, 1])).unwrap();
        let expected = LinearMatrixRep::from_int_grid(&[
            vec![[1, 0, 0], [0, 1, 0]],
            vec![[0, 1, 0], [0, 0, 1]],
        ])
        .unwrap();
        assert_eq!(m, expected);
        let circle = TernaryForm::from_ints(2, &[1, 0, 0, 1, 0, -1]).unwrap();
        assert_eq!(rep_conic(&circle, &pt([1, 0, 1])).unwrap().det(), circle);
        let empty = TernaryForm::from_ints(2, &[1, 0, 0, 1, 0, 1]).unwrap();
        assert_eq!(rep_conic(&empty, &pt([1, 0, 1])), Err(Error::PointNotOnCurve));
        let lines = TernaryForm::from_ints(2, &[0, 1, 0, 0, 0, 0]).unwrap();
        assert_eq!(rep_conic(&lines, &pt([1, 0, 0])), Err(Error::SingularConic));
    }

    #[test]
    fn weierstrass_matrix() {
        let (a, b) = (int(0), int(-432));
        let m = rep_weierstrass(&a, &b, &ECPoint::from_ints(12, -36)).unwrap();
        assert_eq!(m.det(), TernaryForm::cubic([-1, 0, 0, 0, 0, 0, 0, 1, 0, 432]));
        assert_eq!(verify_rep(&m, &weierstrass_cubic(&a, &b)).unwrap(), int(1));
        assert_eq!(rep_weierstrass(&a, &b, &ECPoint::Infinity), Err(Error::PointAtInfinity));
        assert_eq!(rep_weierstrass(&a, &b, &ECPoint::from_ints(1, 1)), Err(Error::PointNotOnCurve));
    }

    #[test]
    fn moore_matrix() {
        let lambda = int(-6);
        let m = rep_moore(&lambda, &pt([1, 2, 3])).unwrap();
        assert_eq!(verify_rep(&m, &hesse_cubic(&lambda)).unwrap(), int(6));
        assert_eq!(rep_moore(&int(1), &pt([1, -1, 0])), Err(Error::CoordinateZero));
        assert_eq!(rep_moore(&int(1), &pt([1, 2, 3])), Err(Error::PointNotOnCurve));
        let diag = LinearMatrixRep::from_int_grid(&[
            vec![[1, 0, 0], [0, 0, 0], [0, 0, 0]],
            vec![[0, 0, 0], [0, 1, 0], [0, 0, 0]],
            vec![[0, 0, 0], [0, 0, 0], [0, 0, 1]],
        ])
        .unwrap();
        assert_eq!(verify_rep(&diag, &fermat()), Err(Error::NotARepresentation));
    }

    #[test]
    fn hom_spaces_and_equivalence() {
        let (a, b) = (int(0), int(-432));
        let mp = rep_weierstrass(&a, &b, &ECPoint::from_ints(12, 36)).unwrap();
        let mq = rep_weierstrass(&a, &b, &ECPoint::from_ints(12, -36)).unwrap();
        assert_eq!(hom_space(&mp, &mp).unwrap().dimension(), 1);
        assert_eq!(hom_space(&mp, &mq).unwrap().dimension(), 0);
        assert_eq!(hom_space(&mp, &mp.scale(&frac(3, 2))).unwrap().dimension(), 1);
        assert!(!equivalent(&mp, &mq).unwrap());
        let fa = Matrix::from_ints(&[&[1, 2, 0], &[0, 1, 0], &[3, 0, 1]]);
        let fb = Matrix::from_ints(&[&[2, 0, 0], &[1, 1, 0], &[0, -1, 1]]);
        let framed = mp.framed(&fa, &fb);
        assert!(equivalent(&mp, &framed).unwrap());
        assert_eq!(rep_to_point(&framed, &a, &b, 50).unwrap(), ECPoint::from_ints(12, 36));
        assert_eq!(rep_to_point(&mp, &a, &b, 5), Err(Error::NotFound));
    }

    #[test]
    fn find_for_fermat_uses_flex_route() {
        let r = find_representation(&fermat(), &SearchBounds::default()).unwrap().unwrap();
        assert_eq!(verify_rep(&r.matrix, &fermat()).unwrap(), int(1));
        match r.route {
            Route::Flex { a, b, .. } => assert!(same_jacobian(&fermat(), &a, &b).unwrap()),
            other => panic!("unexpected route {other:?}"),
        }
    }

    #[test]
    fn find_for_weierstrass_and_generic() {
        let w = weierstrass_cubic(&int(0), &int(-432));
        let r = find_representation(&w, &SearchBounds::default()).unwrap().unwrap();
        let p = rep_to_point(&r.matrix, &int(0), &int(-432), 50).unwrap();
        assert!(p == ECPoint::from_ints(12, 36) || p == ECPoint::from_ints(12, -36));
        let c2 = TernaryForm::cubic([2, 0, 0, 0, 0, 0, 4, 0, 0, -1]);
        assert_eq!(find_representation(&c2, &SearchBounds { curve: 20, jacobian: 20 }).unwrap(), None);
    }

    #[test]
    fn scheme_route_on_a_flexless_curve_with_points() {
        // Diagonal, flexless, through [1:1:1].
        let v = TernaryForm::cubic([1, 0, 0, 0, 0, 0, 2, 0, 0, -3]);
        assert!(rational_flexes(&v).unwrap().rational_flexes.is_empty());
        let r = find_representation(&v, &SearchBounds { curve: 5, jacobian: 5 }).unwrap().unwrap();
        assert!(matches!(r.route, Route::Scheme { .. }));
        assert_eq!(verify_rep(&r.matrix, &v).unwrap(), int(1));
    }

    #[test]
    fn jacobian_route_without_curve_points() {
        let v = TernaryForm::cubic([1, 1, -1, 0, 0, 0, 1, -1, -1, -1]);
        let bounds = SearchBounds { curve: 3, jacobian: 10 };
        assert!(search_curve_points(&v, 30).is_empty());
        let d = decide_existence(&v, &bounds, &Assertions::default()).unwrap();
        assert_eq!((d.verdict, d.reason), (Verdict::Yes, Rule::NotKilledByThree));
        let r = find_representation(&v, &bounds).unwrap().unwrap();
        assert!(matches!(r.route, Route::Jacobian { .. }));
        assert_eq!(verify_rep(&r.matrix, &v).unwrap(), int(1));
    }

    #[test]
    fn hesse_route() {
        let v = hesse_cubic(&int(-6)).scale(&int(2));
        let r = find_representation(&v, &SearchBounds { curve: 5, jacobian: 5 }).unwrap().unwrap();
        assert!(matches!(r.route, Route::Hesse { .. }));
        assert_eq!(r.matrix.det(), v);
    }

    #[test]
    fn decisions() {
        let bounds = SearchBounds { curve: 10, jacobian: 20 };
        let d = decide_existence(&fermat(), &bounds, &Assertions::default()).unwrap();
        assert_eq!((d.verdict, d.reason), (Verdict::Yes, Rule::TwoCurvePoints));

        let w11 = weierstrass_cubic(&int(1), &int(1));
        let witness = Assertions { rank: Some(1), jacobian_witness: Some(ECPoint::from_ints(0, 1)) };
        let d = decide_existence(&w11, &bounds, &witness).unwrap();
        assert_eq!((d.verdict, d.reason), (Verdict::Yes, Rule::NotKilledByThree));

        let w07 = weierstrass_cubic(&int(0), &int(7));
        let rank0 = Assertions { rank: Some(0), jacobian_witness: None };
        let d = decide_existence(&w07, &bounds, &rank0).unwrap();
        assert_eq!((d.verdict, d.reason), (Verdict::No, Rule::TrivialMordellWeil));
        let d = decide_existence(&w07, &bounds, &Assertions::default()).unwrap();
        assert_eq!(d.verdict, Verdict::Unknown);
    }
}
