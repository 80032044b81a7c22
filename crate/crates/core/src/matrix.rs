//! Dense row-major matrices of residues.
//!
//! Matrices act on column vectors: a morphism `A -> B` is a `dim B x dim A`
//! matrix and composition is the matrix product in application order.
//! Shapes `(0, n)` and `(n, 0)` are legal.

use std::fmt;

use crate::arith::{Residue, ResidueRing};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Residue> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length does not match shape");
        Self { rows, cols, data }
    }

    /// Builds from nested rows of width `cols`, which may have no rows.
    pub fn from_nested(rows: &[Vec<T>], cols: usize) -> Option<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        Some(Self { rows: rows.len(), cols, data: rows.concat() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_nested(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul(&self, rhs: &Self, ring: &ResidueRing<T>) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let q = ring.modulus().to_wide();
        Self::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = 0u128;
            for l in 0..self.cols {
                acc = (acc + self[(i, l)].to_wide() * rhs[(l, j)].to_wide()) % q;
            }
            T::from_wide(acc)
        })
    }

    pub fn mul_vec(&self, v: &[T], ring: &ResidueRing<T>) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(T::zero(), |acc, (&a, &b)| ring.add(acc, ring.mul(a, b))))
            .collect()
    }

    pub fn add(&self, rhs: &Self, ring: &ResidueRing<T>) -> Self {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| ring.add(a, b)).collect(),
        }
    }

    pub fn neg(&self, ring: &ResidueRing<T>) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| ring.neg(a)).collect() }
    }

    pub fn scale(&self, c: T, ring: &ResidueRing<T>) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| ring.mul(c, a)).collect() }
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows);
        Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self[(i, j)]
            } else {
                rhs[(i, j - self.cols)]
            }
        })
    }

    /// Sub-matrix of the given row and column ranges.
    pub fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows.start + i, cols.start + j)])
    }

    /// Matrix with the given columns.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i])
    }

    pub fn map_rows(&self, mut f: impl FnMut(usize, T) -> T) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| f(i, self[(i, j)]))
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += c * row[src]`
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, c: T, ring: &ResidueRing<T>) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = ring.add(self[(dst, j)], ring.mul(c, self[(src, j)]));
            self[(dst, j)] = v;
        }
    }

    /// `col[dst] += c * col[src]`
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, c: T, ring: &ResidueRing<T>) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = ring.add(self[(i, dst)], ring.mul(c, self[(i, src)]));
            self[(i, dst)] = v;
        }
    }

    pub(crate) fn scale_row(&mut self, r: usize, c: T, ring: &ResidueRing<T>) {
        for j in 0..self.cols {
            let v = ring.mul(c, self[(r, j)]);
            self[(r, j)] = v;
        }
    }

    pub(crate) fn scale_col(&mut self, col: usize, c: T, ring: &ResidueRing<T>) {
        for i in 0..self.rows {
            let v = ring.mul(c, self[(i, col)]);
            self[(i, col)] = v;
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_nested(self, f, |x, f| write!(f, "{x:?}"))
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_nested(self, f, |x, f| write!(f, "{x}"))
    }
}

fn write_nested<T>(
    m: &Matrix<T>,
    f: &mut fmt::Formatter<'_>,
    entry: impl Fn(&T, &mut fmt::Formatter<'_>) -> fmt::Result,
) -> fmt::Result {
    write!(f, "[")?;
    for i in 0..m.rows {
        if i > 0 {
            write!(f, ", ")?;
        }
        write!(f, "[")?;
        for j in 0..m.cols {
            if j > 0 {
                write!(f, ", ")?;
            }
            entry(&m.data[i * m.cols + j], f)?;
        }
        write!(f, "]")?;
    }
    write!(f, "]")?;
    if m.rows == 0 || m.cols == 0 {
        write!(f, " ({}x{})", m.rows, m.cols)?;
    }
    Ok(())
}
