//! Dense exact matrices: rank, inverse, and linear solves by Gaussian elimination.

use std::fmt;

use crate::scalars::{Field, ScalarError};

#[derive(Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (r, c): (usize, usize)) -> &F {
        &self.data[r * self.cols + c]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut F {
        &mut self.data[r * self.cols + c]
    }
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a.clone() * b);
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: &F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.clone() * s).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows)
                .all(|r| (0..self.cols).all(|c| if r == c { self[(r, c)].is_one() } else { self[(r, c)].is_zero() }))
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn row_reduce(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m[(r, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m[(row, col)].try_inv().expect("pivot is nonzero");
            for c in col..m.cols {
                let v = m[(row, c)].clone() * &inv;
                m[(row, c)] = v;
            }
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for c in col..m.cols {
                    if m[(row, c)].is_zero() {
                        continue;
                    }
                    let d = factor.clone() * &m[(row, c)];
                    m[(r, c)] -= &d;
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().1.len()
    }

    pub fn inverse(&self) -> Result<Matrix<F>, ScalarError> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                F::one()
            } else {
                F::zero()
            }
        });
        let (red, pivots) = aug.row_reduce();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Matrix::from_fn(n, n, |r, c| red[(r, c + n)].clone()))
    }

    /// Solves `self · x = b` for a square nonsingular `self`.
    pub fn solve(&self, b: &[F]) -> Result<Vec<F>, ScalarError> {
        assert_eq!(self.rows, b.len());
        let inv = self.inverse()?;
        Ok((0..inv.rows)
            .map(|r| {
                let mut acc = F::zero();
                for (c, bc) in b.iter().enumerate() {
                    if !bc.is_zero() {
                        acc += &(inv[(r, c)].clone() * bc);
                    }
                }
                acc
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{DeltaSign, QuadraticScalar};
    use num_traits::One;

    type S = QuadraticScalar;

    fn int(v: i64) -> S {
        S::from_i64(v)
    }

    #[test]
    fn rank_of_singular_matrix() {
        let m = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]);
        assert_eq!(m.rank(), 1);
        assert!(m.inverse().is_err());
    }

    #[test]
    fn inverse_over_quadratic_field() {
        let d = S::make_delta(2, DeltaSign::Plus).unwrap();
        let m = Matrix::from_rows(vec![vec![S::one(), d.clone()], vec![d.clone(), int(3)]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let x = m.solve(&[int(1), int(0)]).unwrap();
        assert_eq!(x[0], inv[(0, 0)]);
    }

    #[test]
    fn identity_detection() {
        assert!(Matrix::<S>::identity(3).is_identity());
        assert!(!Matrix::<S>::zeros(2, 2).is_identity());
        assert_eq!(Matrix::<S>::identity(4).rank(), 4);
    }
}
