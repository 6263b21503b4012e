//! Dense rational matrices, fraction-free determinants and exact kernels.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::arith::{clear_denominators, content, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|v| v * c).collect() }
    }

    pub fn add(&self, other: &Matrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let rows: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut scale = BigInt::one();
        let int_rows = rows
            .iter()
            .map(|r| {
                let (ints, d) = clear_denominators(r);
                scale *= d;
                ints
            })
            .collect();
        Rational::new(bareiss_det(int_rows), scale)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero()).ok_or(Error::SingularMatrix)?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let p = a[(col, col)].recip();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] * &p;
                inv[(col, j)] = &inv[(col, j)] * &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let (x, y) = (&a[(col, j)] * &f, &inv[(col, j)] * &f);
                    a[(r, j)] -= x;
                    inv[(r, j)] -= y;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.data.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Bareiss fraction-free determinant of a square integer matrix.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    if let Some(d) = small_bareiss_det(&a) {
        return d.into();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Bareiss in `i128`; `None` on overflow.
fn small_bareiss_det(a: &[Vec<BigInt>]) -> Option<i128> {
    let n = a.len();
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|v| v.to_i128()).collect::<Option<_>>())
        .collect::<Option<_>>()?;
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let r = (k + 1..n).find(|&r| m[r][k] != 0);
            match r {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return Some(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].checked_mul(m[k][k])?.checked_sub(m[i][k].checked_mul(m[k][j])?)?;
                m[i][j] = v / prev;
            }
        }
        prev = m[k][k];
    }
    Some(sign * m[n - 1][n - 1])
}

/// Basis of the right kernel `{x : rows * x = 0}`, via fraction-free
/// Gauss–Jordan elimination on the denominator-cleared rows. Each basis vector
/// has a 1 in its free coordinate.
pub fn kernel_basis(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), ncols);
            clear_denominators(r).0
        })
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot_row = m[rank].clone();
        let pv = pivot_row[col].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, pr) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &pv - &f * pr;
            }
            let c = content(row);
            if !c.is_zero() && !c.is_one() {
                for x in row.iter_mut() {
                    *x = x.div_floor(&c);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            if !m[r][free].is_zero() {
                v[pc] = -Rational::new(m[r][free].clone(), m[r][pc].clone());
            }
        }
        basis.push(v);
    }
    basis
}
