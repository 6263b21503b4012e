use std::fmt;

use super::arith::Rational;
use super::form::{LinMap3, TernaryForm};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// Square matrix whose entries are linear forms `c0 X0 + c1 X1 + c2 X2`,
/// stored row-major as coefficient triples.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearMatrixRep {
    size: usize,
    entries: Vec<[Rational; 3]>,
}

impl LinearMatrixRep {
    pub fn new(size: usize, entries: Vec<[Rational; 3]>) -> Result<Self> {
        if size == 0 || entries.len() != size * size {
            return Err(Error::InvalidArgument(format!(
                "{} entries do not form a nonempty {size}x{size} matrix",
                entries.len()
            )));
        }
        Ok(LinearMatrixRep { size, entries })
    }

    /// Builds from a grid of integer coefficient triples.
    pub fn from_int_grid(grid: &[Vec<[i64; 3]>]) -> Result<Self> {
        let size = grid.len();
        let entries = grid
            .iter()
            .flat_map(|row| row.iter().map(|t| t.map(|v| Rational::from_integer(v.into()))))
            .collect();
        Self::new(size, entries)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn entries(&self) -> &[[Rational; 3]] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> &[Rational; 3] {
        &self.entries[i * self.size + j]
    }

    pub fn entry_form(&self, i: usize, j: usize) -> TernaryForm {
        TernaryForm::linear(self.entry(i, j).clone())
    }

    /// Constant coefficient matrix of the variable `X_k`.
    pub fn coefficient_matrix(&self, k: usize) -> Matrix {
        Matrix::from_rows(
            (0..self.size)
                .map(|i| (0..self.size).map(|j| self.entry(i, j)[k].clone()).collect())
                .collect(),
        )
    }

    pub fn from_coefficient_matrices(mats: [&Matrix; 3]) -> Result<Self> {
        let n = mats[0].rows();
        let entries = (0..n * n)
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                [mats[0][(i, j)].clone(), mats[1][(i, j)].clone(), mats[2][(i, j)].clone()]
            })
            .collect();
        Self::new(n, entries)
    }

    /// Symbolic determinant, a form of degree `size`.
    pub fn det(&self) -> TernaryForm {
        let forms: Vec<TernaryForm> = (0..self.size * self.size)
            .map(|k| TernaryForm::linear(self.entries[k].clone()))
            .collect();
        let cols: Vec<usize> = (0..self.size).collect();
        laplace(&forms, self.size, 0, &cols)
    }

    /// Entry-wise substitution `X -> g X`.
    pub fn pullback(&self, g: &LinMap3) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|c| std::array::from_fn(|j| (0..3).map(|i| &c[i] * g.entry(i, j)).sum()))
            .collect();
        LinearMatrixRep { size: self.size, entries }
    }

    /// `A * self * B` for constant matrices `A`, `B`.
    pub fn framed(&self, a: &Matrix, b: &Matrix) -> Self {
        let parts: Vec<Matrix> = (0..3).map(|k| &(a * &self.coefficient_matrix(k)) * b).collect();
        Self::from_coefficient_matrices([&parts[0], &parts[1], &parts[2]]).unwrap()
    }

    pub fn scale_row(&self, row: usize, s: &Rational) -> Self {
        let mut out = self.clone();
        for j in 0..self.size {
            let e = &mut out.entries[row * self.size + j];
            for c in e.iter_mut() {
                *c = &*c * s;
            }
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        LinearMatrixRep {
            size: self.size,
            entries: self.entries.iter().map(|e| e.clone().map(|c| c * s)).collect(),
        }
    }
}

fn laplace(forms: &[TernaryForm], n: usize, row: usize, cols: &[usize]) -> TernaryForm {
    if cols.len() == 1 {
        return forms[row * n + cols[0]].clone();
    }
    let mut acc = TernaryForm::zero(cols.len());
    for (k, &c) in cols.iter().enumerate() {
        let entry = &forms[row * n + c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = laplace(forms, n, row + 1, &rest);
        let term = entry * &minor;
        acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

impl fmt::Display for LinearMatrixRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            let row: Vec<String> = (0..self.size)
                .map(|j| {
                    let form = self.entry_form(i, j);
                    if form.is_zero() { "0".to_string() } else { form.to_string() }
                })
                .collect();
            writeln!(f, "[ {} ]", row.join(" | "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::arith::int;

    #[test]
    fn diagonal_determinant() {
        let m = LinearMatrixRep::from_int_grid(&[
            vec![[1, 0, 0], [0, 0, 0], [0, 0, 0]],
            vec![[0, 0, 0], [0, 1, 0], [0, 0, 0]],
            vec![[0, 0, 0], [0, 0, 0], [0, 0, 1]],
        ])
        .unwrap();
        assert_eq!(m.det(), TernaryForm::monomial([1, 1, 1], int(1)));
    }

    #[test]
    fn conic_determinant() {
        let m = LinearMatrixRep::from_int_grid(&[
            vec![[1, 0, 0], [0, 1, 0]],
            vec![[0, 1, 0], [0, 0, 1]],
        ])
        .unwrap();
        assert_eq!(m.det(), TernaryForm::from_ints(2, &[0, 0, 1, -1, 0, 0]).unwrap());
    }

    #[test]
    fn framing_scales_determinant() {
        let m = LinearMatrixRep::from_int_grid(&[
            vec![[1, 0, 0], [0, 1, 0]],
            vec![[0, 1, 0], [0, 0, 1]],
        ])
        .unwrap();
        let a = Matrix::from_ints(&[&[2, 1], &[0, 1]]);
        let b = Matrix::from_ints(&[&[1, 0], &[3, 3]]);
        assert_eq!(m.framed(&a, &b).det(), m.det().scale(&int(6)));
    }
}
