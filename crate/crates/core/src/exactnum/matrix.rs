use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use num_traits::Zero;

use super::Ring;
use crate::error::{Error, Result};
use crate::multilinear::wedge_basis;

/// Dense row-major matrix over a ring.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("column length".into()));
        }
        Ok(Self::from_fn(rows, columns.len(), |r, c| columns[c][r].clone()))
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

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn negated(&self) -> Self {
        self.map(Ring::negated)
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let p = a.times(b);
                    out.get_mut(r, c).add_assign_ref(&p);
                }
            }
        }
        Ok(out)
    }

    /// Product, panicking on a shape mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("matrix shapes must agree")
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc.add_assign_ref(&a.times(b));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        if self.shape() != rhs.shape() {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.plus(b)).collect(),
        })
    }

    pub fn scaled(&self, s: &T) -> Self {
        self.map(|x| x.times(s))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }

    pub fn hstack(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch("hstack".into()));
        }
        Ok(Self::from_fn(self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                rhs.get(r, c - self.cols).clone()
            }
        }))
    }

    /// Kronecker product with `self` as the outer (major) factor.
    pub fn kronecker(&self, rhs: &Self) -> Self {
        Self::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, |r, c| {
            let a = self.get(r / rhs.rows, c / rhs.cols);
            if a.is_zero() {
                return T::zero();
            }
            a.times(rhs.get(r % rhs.rows, c % rhs.cols))
        })
    }

    /// Position and value of the first nonzero entry, scanning row-major.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &T)> {
        self.data.iter().position(|x| !x.is_zero()).map(|k| (k / self.cols, k % self.cols, &self.data[k]))
    }
}

/// Matrix of all `k x k` minors, rows indexed by `k`-subsets of the rows of `m`
/// and columns by `k`-subsets of its columns, both in lexicographic order.
pub fn compound<T: Ring>(m: &Matrix<T>, k: usize) -> Matrix<T> {
    let row_sets = wedge_basis(m.rows(), k as i64);
    let col_sets = wedge_basis(m.cols(), k as i64);
    if k == 0 {
        return Matrix::identity(1);
    }
    // Minors of size s indexed by (row subset, first s columns of each column subset).
    // Built by expansion along the last column.
    let mut prev: HashMap<(Vec<usize>, Vec<usize>), T> = HashMap::new();
    prev.insert((vec![], vec![]), T::one());
    for s in 1..=k {
        let rs = wedge_basis(m.rows(), s as i64);
        let cs = wedge_basis(m.cols(), s as i64);
        let mut next = HashMap::with_capacity(rs.len() * cs.len());
        for cset in &cs {
            let last = cset[s - 1];
            let head = &cset[..s - 1];
            for rset in &rs {
                let mut acc = T::zero();
                for (pos, &r) in rset.iter().enumerate() {
                    let x = m.get(r, last);
                    if x.is_zero() {
                        continue;
                    }
                    let mut sub = rset.clone();
                    sub.remove(pos);
                    let Some(minor) = prev.get(&(sub, head.to_vec())) else {
                        continue;
                    };
                    if minor.is_zero() {
                        continue;
                    }
                    let term = x.times(minor);
                    // cofactor sign (-1)^(pos + s - 1)
                    if (pos + s - 1) % 2 == 0 {
                        acc.add_assign_ref(&term);
                    } else {
                        acc = acc.minus(&term);
                    }
                }
                next.insert((rset.clone(), cset.clone()), acc);
            }
        }
        prev = next;
    }
    Matrix::from_fn(row_sets.len(), col_sets.len(), |r, c| prev[&(row_sets[r].clone(), col_sets[c].clone())].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn z(rows: Vec<Vec<i64>>) -> Matrix<BigInt> {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()).unwrap()
    }

    #[test]
    fn product_and_transpose() {
        let a = z(vec![vec![1, 2], vec![3, 4]]);
        let b = z(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b), z(vec![vec![2, 1], vec![4, 3]]));
        assert_eq!(a.transpose(), z(vec![vec![1, 3], vec![2, 4]]));
        assert!(a.try_mul(&z(vec![vec![1, 2, 3]])).is_err());
    }

    #[test]
    fn compound_of_3x3() {
        let a = z(vec![vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]);
        let c3 = compound(&a, 3);
        // 2*(3-2) - 0 + 1*(1-3) = 0
        assert_eq!(c3, z(vec![vec![0]]));
        let c2 = compound(&a, 2);
        assert_eq!(c2.shape(), (3, 3));
        // rows {0,1}, cols {0,1}: 2*3 - 0*1
        assert_eq!(*c2.get(0, 0), BigInt::from(6));
        // rows {1,2}, cols {1,2}: 3*1 - 2*1
        assert_eq!(*c2.get(2, 2), BigInt::from(1));
        assert_eq!(compound(&a, 1), a);
    }

    #[test]
    fn kronecker_shape() {
        let a = z(vec![vec![1, 2]]);
        let b = z(vec![vec![1], vec![-1]]);
        assert_eq!(a.kronecker(&b), z(vec![vec![1, 2], vec![-1, -2]]));
    }
}
