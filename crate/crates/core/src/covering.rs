//! The degree-9 covering of the Jacobian by a plane cubic, through the
//! classical covariants, and the length-3 schemes it produces.

use num_traits::{One, Zero};

use crate::algebra::arith::{int, Rational};
use crate::algebra::form::{monomial_index, monomials};
use crate::algebra::matrix::kernel_basis;
use crate::algebra::TernaryForm;

/// Second partials of `u` as a symmetric matrix of forms.
fn hessian_matrix(u: &TernaryForm) -> [[TernaryForm; 3]; 3] {
    let grad = u.gradient();
    std::array::from_fn(|i| std::array::from_fn(|j| grad[i].partial(j)))
}

/// The sextic covariant: the Hessian matrix of `u` bordered by the gradient of `h`.
pub(crate) fn theta(u: &TernaryForm, h: &TernaryForm) -> TernaryForm {
    let m = hessian_matrix(u);
    let b = h.gradient();
    let cof = |i: usize, j: usize| {
        let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
        let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
        &(&m[r0][c0] * &m[r1][c1]) - &(&m[r0][c1] * &m[r1][c0])
    };
    let mut out = TernaryForm::zero(6);
    for i in 0..3 {
        for j in 0..3 {
            // adjugate entry (i, j) is the cofactor (j, i)
            out = &out + &(&(&b[i] * &cof(j, i)) * &b[j]);
        }
    }
    -out
}

/// The degree-9 covariant: the Jacobian determinant of `u`, `h` and `theta`.
pub(crate) fn jcov(u: &TernaryForm, h: &TernaryForm, th: &TernaryForm) -> TernaryForm {
    let rows = [u.gradient(), h.gradient(), th.gradient()];
    let minor = |a: usize, b: usize| &(&rows[1][a] * &rows[2][b]) - &(&rows[1][b] * &rows[2][a]);
    let t0 = &rows[0][0] * &minor(1, 2);
    let t1 = &rows[0][1] * &minor(0, 2);
    let t2 = &rows[0][2] * &minor(0, 1);
    &(&t0 - &t1) + &t2
}

/// Normal forms modulo a cubic with nonzero `X1^3` coefficient: every form of
/// degree `d` reduces to the span of monomials with `X1`-exponent at most 2.
pub(crate) struct Reducer {
    tail: TernaryForm,
}

impl Reducer {
    pub(crate) fn new(u: &TernaryForm) -> Option<Self> {
        let c = u.coeff([0, 3, 0]).clone();
        if c.is_zero() {
            return None;
        }
        // X1^3 = tail on the curve
        let mut tail = u.scale(&-c.recip());
        let k = monomial_index(3, [0, 3, 0]);
        let mut coeffs = tail.coeffs().to_vec();
        coeffs[k] = Rational::zero();
        tail = TernaryForm::new(3, coeffs).unwrap();
        Some(Reducer { tail })
    }

    pub(crate) fn basis(d: usize) -> Vec<[usize; 3]> {
        monomials(d).into_iter().filter(|e| e[1] <= 2).collect()
    }

    pub(crate) fn reduce(&self, f: &TernaryForm) -> Vec<Rational> {
        let d = f.degree();
        let mut c = f.coeffs().to_vec();
        let mono = monomials(d);
        let tail: Vec<([usize; 3], Rational)> =
            self.tail.terms().filter(|(_, t)| !t.is_zero()).map(|(e, t)| (e, t.clone())).collect();
        for e1 in (3..=d).rev() {
            for (k, e) in mono.iter().enumerate() {
                if e[1] != e1 || c[k].is_zero() {
                    continue;
                }
                let lead = std::mem::replace(&mut c[k], Rational::zero());
                for (et, t) in &tail {
                    let e2 = [e[0] + et[0], e[1] - 3 + et[1], e[2] + et[2]];
                    c[monomial_index(d, e2)] += &lead * t;
                }
            }
        }
        Reducer::basis(d).iter().map(|e| c[monomial_index(d, *e)].clone()).collect()
    }
}

/// The covering `C -> E_{A,B}`, `P -> (Theta/H^2, J/(3 H^3))`, relies on the
/// identity `J^2 = 9 (Theta^3 + A Theta H^4 + B H^6)` on the curve.
///
/// For a point `(x0, y0)` of `E_{A,B}` other than `O`, the fibre `D` is a rational
/// divisor of degree 9 whose class differs from `3H` by the image of `[3]P`. A
/// quartic `G` through `D` cuts a residual scheme `Z` of length 3, and this
/// returns a basis of the conics through `Z`. The form `u` must have a nonzero
/// `X1^3` coefficient.
pub(crate) fn fibre_conics(u: &TernaryForm, x0: &Rational, y0: &Rational) -> Option<Vec<TernaryForm>> {
    let r = Reducer::new(u)?;
    let h = u.hessian().ok()?;
    let th = theta(u, &h);
    let j = jcov(u, &h, &th);
    let h2 = &h * &h;
    let s = &th - &h2.scale(x0);
    // vanishes simply on the fibre over -P and nowhere on the fibre over P
    let k = &j + &(&h2 * &h).scale(&(int(3) * y0));

    // G K = b S modulo u, with G of degree 4 and b of degree 7 in normal form
    let b4 = Reducer::basis(4);
    let b7 = Reducer::basis(7);
    let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(b4.len() + b7.len());
    for e in &b4 {
        cols.push(r.reduce(&(&TernaryForm::monomial(*e, Rational::one()) * &k)));
    }
    for e in &b7 {
        cols.push(r.reduce(&(&TernaryForm::monomial(*e, -Rational::one()) * &s)));
    }
    let quartics: Vec<TernaryForm> = kernel_basis(&transpose(&cols), cols.len())
        .into_iter()
        .map(|sol| form_from_normal(4, &b4, &sol[..b4.len()]))
        .collect();
    if quartics.len() != 3 {
        return None;
    }

    // conics q with q G' = b G modulo u; when the residual schemes of G and G'
    // are disjoint these are exactly the conics through the residual of G
    let pairs = [(0, 1), (1, 2), (2, 0)];
    let b2 = monomials(2);
    for (a, b) in pairs {
        let (g, g2) = (&quartics[a], &quartics[b]);
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(12);
        for e in &b2 {
            cols.push(r.reduce(&(&TernaryForm::monomial(*e, Rational::one()) * g2)));
        }
        for e in &b2 {
            cols.push(r.reduce(&(&TernaryForm::monomial(*e, -Rational::one()) * g)));
        }
        let conics: Vec<TernaryForm> = kernel_basis(&transpose(&cols), 12)
            .into_iter()
            .map(|sol| TernaryForm::new(2, sol[..6].to_vec()).unwrap())
            .filter(|q| !q.is_zero())
            .collect();
        if conics.len() == 3 {
            return Some(conics);
        }
    }
    None
}

fn transpose(cols: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    (0..cols[0].len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect()
}

fn form_from_normal(d: usize, basis: &[[usize; 3]], coords: &[Rational]) -> TernaryForm {
    let mut c = vec![Rational::zero(); monomials(d).len()];
    for (e, x) in basis.iter().zip(coords) {
        c[monomial_index(d, *e)] = x.clone();
    }
    TernaryForm::new(d, c).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::aronhold_ab;

    /// Constants `(alpha, beta, gamma)` with `J^2 = alpha Theta^3 + beta A Theta H^4 + gamma B H^6` on the curve.
    fn syzygy_constants(u: &TernaryForm, a: &Rational, b: &Rational) -> Option<[Rational; 3]> {
        let r = Reducer::new(u)?;
        let h = u.hessian().ok()?;
        let th = theta(u, &h);
        let j = jcov(u, &h, &th);
        let h2 = &h * &h;
        let h4 = &h2 * &h2;
        let cols = [
            r.reduce(&(&(&th * &th) * &th)),
            r.reduce(&(&th * &h4).scale(a)),
            r.reduce(&(&h4 * &h2).scale(b)),
            r.reduce(&(&j * &j)).into_iter().map(|x| -x).collect(),
        ];
        let rows: Vec<Vec<Rational>> = (0..cols[0].len()).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        let ker = kernel_basis(&rows, 4);
        if ker.len() != 1 || ker[0][3].is_zero() {
            return None;
        }
        let s = ker[0][3].clone();
        Some([&ker[0][0] / &s, &ker[0][1] / &s, &ker[0][2] / &s])
    }

    #[test]
    fn covariant_syzygy() {
        let nine = Some([int(9), int(9), int(9)]);
        for c in [[1, 1, -1, 0, 0, 0, 1, -1, -1, -1], [2, 0, 1, -1, 3, 0, 1, 0, 2, -1]] {
            let u = TernaryForm::cubic(c);
            let rec = aronhold_ab(&u).unwrap();
            assert_eq!(syzygy_constants(&u, &rec.a, &rec.b), nine);
        }
    }

    #[test]
    fn pointless_curve_gets_conics() {
        // E_{A,B} has the 2-torsion point (3, 0) on this curve's Jacobian model
        let u = TernaryForm::cubic([1, 1, -1, 0, 0, 0, 1, -1, -1, -1]);
        let rec = aronhold_ab(&u).unwrap();
        let e = crate::elliptic::EllipticCurve::new(rec.a, rec.b).unwrap();
        let two_torsion: Vec<_> = crate::elliptic::torsion_subgroup(&e).unwrap().points.into_iter().filter(|p| !p.is_infinity()).collect();
        let Some(crate::elliptic::ECPoint::Affine { x, y }) = two_torsion.first().cloned() else { panic!("no torsion") };
        let conics = fibre_conics(&u, &x, &y).unwrap();
        assert_eq!(conics.len(), 3);
    }
}
