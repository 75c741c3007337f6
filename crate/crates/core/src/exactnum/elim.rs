use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{BigRat, Matrix, QAlgebra, QMatrix};
use crate::error::{Error, Result};

type SparseRow<I> = Vec<(usize, I)>;

/// Integer arithmetic for fraction-free elimination; `None` signals overflow.
trait ElimInt: Clone + PartialEq + Sized {
    fn is_zero(&self) -> bool;
    fn magnitude_lt(&self, other: &Self) -> bool;
    fn gcd(&self, other: &Self) -> Self;
    fn div_exact(&self, d: &Self) -> Self;
    fn is_unit(&self) -> bool;
    /// `a * x - b * y`
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn scaled(a: &Self, x: &Self) -> Option<Self>;
    /// `-(b * y)`
    fn neg_scaled(b: &Self, y: &Self) -> Option<Self>;
}

impl ElimInt for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn magnitude_lt(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        let r = a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)?;
        (r != i64::MIN).then_some(r)
    }
    fn scaled(a: &Self, x: &Self) -> Option<Self> {
        let r = a.checked_mul(*x)?;
        (r != i64::MIN).then_some(r)
    }
    fn neg_scaled(b: &Self, y: &Self) -> Option<Self> {
        let r = b.checked_mul(*y)?.checked_neg()?;
        (r != i64::MIN).then_some(r)
    }
}

impl ElimInt for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn magnitude_lt(&self, other: &Self) -> bool {
        self.magnitude() < other.magnitude()
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn scaled(a: &Self, x: &Self) -> Option<Self> {
        Some(a * x)
    }
    fn neg_scaled(b: &Self, y: &Self) -> Option<Self> {
        Some(-(b * y))
    }
}

fn remove_content<I: ElimInt>(row: &mut SparseRow<I>) {
    let mut g = row[0].1.clone();
    for (_, v) in row.iter().skip(1) {
        if g.is_unit() {
            return;
        }
        g = g.gcd(v);
    }
    if g.is_unit() {
        return;
    }
    for (_, v) in row.iter_mut() {
        *v = v.div_exact(&g);
    }
}

/// `(p/g) * row - (r/g) * pivot` where `p`, `r` are the leading entries.
fn eliminate<I: ElimInt>(pivot: &SparseRow<I>, row: &SparseRow<I>) -> Option<SparseRow<I>> {
    let p = &pivot[0].1;
    let r = &row[0].1;
    let g = p.gcd(r);
    let a = p.div_exact(&g);
    let b = r.div_exact(&g);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, I::scaled(&a, &row[i - 1].1)?)
        } else if cj < ci {
            j += 1;
            (cj, I::neg_scaled(&b, &pivot[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (ci, I::cross(&a, &row[i - 1].1, &b, &pivot[j - 1].1)?)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    Some(out)
}

fn sparse_rank<I: ElimInt>(rows: Vec<SparseRow<I>>) -> Option<usize> {
    let mut buckets: BTreeMap<usize, Vec<SparseRow<I>>> = BTreeMap::new();
    for mut row in rows {
        if row.is_empty() {
            continue;
        }
        remove_content(&mut row);
        buckets.entry(row[0].0).or_default().push(row);
    }
    let mut rank = 0;
    while let Some((_, mut group)) = buckets.pop_first() {
        let mut best = 0;
        for (k, row) in group.iter().enumerate().skip(1) {
            let (b, r) = (&group[best], row);
            if r[0].1.magnitude_lt(&b[0].1) || (r[0].1 == b[0].1 && r.len() < b.len()) {
                best = k;
            }
        }
        let pivot = group.swap_remove(best);
        rank += 1;
        for row in group {
            let mut reduced = eliminate(&pivot, &row)?;
            if reduced.is_empty() {
                continue;
            }
            remove_content(&mut reduced);
            buckets.entry(reduced[0].0).or_default().push(reduced);
        }
    }
    Some(rank)
}

fn integer_rows(m: &QMatrix) -> Vec<SparseRow<BigInt>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let lcm = row.iter().filter(|x| !Zero::is_zero(*x)).fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .enumerate()
                .filter(|(_, x)| !Zero::is_zero(*x))
                .map(|(c, x)| (c, x.numer() * (&lcm / x.denom())))
                .collect()
        })
        .collect()
}

/// Rank of sparse integer rows given as `(column, value)` lists sorted by column.
pub fn rank_of_rows(rows: Vec<Vec<(usize, BigInt)>>) -> usize {
    let small: Option<Vec<SparseRow<i64>>> = rows
        .iter()
        .map(|r| r.iter().map(|(c, v)| v.to_i64().filter(|x| *x != i64::MIN).map(|x| (*c, x))).collect())
        .collect();
    if let Some(small) = small {
        if let Some(r) = sparse_rank(small) {
            return r;
        }
    }
    sparse_rank(rows).expect("big integer elimination cannot overflow")
}

/// Exact rank by fraction-free elimination, pivoting on the smallest magnitude.
pub fn rank(m: &QMatrix) -> usize {
    rank_of_rows(integer_rows(m))
}

/// Reduced row echelon form over the rationals with its pivot columns.
pub fn rref(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols() {
        if r == a.rows() {
            break;
        }
        let Some(p) = (r..a.rows())
            .filter(|&i| !Zero::is_zero(a.get(i, c)))
            .min_by(|&i, &j| a.get(i, c).abs().cmp(&a.get(j, c).abs()))
        else {
            continue;
        };
        if p != r {
            for k in 0..a.cols() {
                let t = a.get(p, k).clone();
                a.set(p, k, a.get(r, k).clone());
                a.set(r, k, t);
            }
        }
        let inv = a.get(r, c).recip();
        for k in 0..a.cols() {
            let v = a.get(r, k) * &inv;
            a.set(r, k, v);
        }
        for i in 0..a.rows() {
            if i == r || Zero::is_zero(a.get(i, c)) {
                continue;
            }
            let f = a.get(i, c).clone();
            for k in 0..a.cols() {
                if Zero::is_zero(a.get(r, k)) {
                    continue;
                }
                let v = a.get(i, k) - &f * a.get(r, k);
                a.set(i, k, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Rational kernel basis: one column per free variable, set to 1.
pub fn nullspace(m: &QMatrix) -> QMatrix {
    let (red, pivots) = rref(m);
    let free: Vec<usize> = (0..m.cols()).filter(|c| !pivots.contains(c)).collect();
    let mut out = QMatrix::zeros(m.cols(), free.len());
    for (k, &fc) in free.iter().enumerate() {
        out.set(fc, k, BigRat::one());
        for (r, &pc) in pivots.iter().enumerate() {
            out.set(pc, k, -red.get(r, fc).clone());
        }
    }
    out
}

/// Repeated exact solves of `B c = v` against a full-column-rank `B`.
#[derive(Clone, Debug)]
pub struct SpanSolver {
    basis: QMatrix,
    pivot_rows: Vec<usize>,
    inverse: QMatrix,
}

impl SpanSolver {
    pub fn new(basis: &QMatrix) -> Result<Self> {
        let (_, pivot_rows) = rref(&basis.transpose());
        if pivot_rows.len() != basis.cols() {
            return Err(Error::DimensionMismatch("span solver needs linearly independent columns".into()));
        }
        let square = basis.submatrix(&pivot_rows, &(0..basis.cols()).collect::<Vec<_>>());
        let inverse = invert(&square)?;
        Ok(SpanSolver { basis: basis.clone(), pivot_rows, inverse })
    }

    pub fn basis(&self) -> &QMatrix {
        &self.basis
    }

    /// Coordinates of `v` in the basis columns, or `NotInSpan`.
    pub fn solve<T: QAlgebra>(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.basis.rows() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} rows",
                v.len(),
                self.basis.rows()
            )));
        }
        let k = self.basis.cols();
        let coords: Vec<T> = (0..k)
            .map(|i| {
                let mut acc = T::zero();
                for (j, &pr) in self.pivot_rows.iter().enumerate() {
                    let s = self.inverse.get(i, j);
                    if Zero::is_zero(s) || v[pr].is_zero() {
                        continue;
                    }
                    acc.add_assign_ref(&v[pr].scale(s));
                }
                acc
            })
            .collect();
        for (r, target) in v.iter().enumerate() {
            let mut acc = T::zero();
            for (c, x) in coords.iter().enumerate() {
                let b = self.basis.get(r, c);
                if Zero::is_zero(b) || x.is_zero() {
                    continue;
                }
                acc.add_assign_ref(&x.scale(b));
            }
            if acc != *target {
                return Err(Error::NotInSpan);
            }
        }
        Ok(coords)
    }

    /// Coordinates of every column of `m`.
    pub fn solve_columns<T: QAlgebra>(&self, m: &Matrix<T>) -> Result<Matrix<T>> {
        let cols: Vec<Vec<T>> = (0..m.cols()).map(|c| self.solve(&m.column(c))).collect::<Result<_>>()?;
        Matrix::from_columns(self.basis.cols(), &cols)
    }
}

/// Some `x` with `A x = b`, free variables set to zero, or `NotInSpan`.
pub fn solve_particular(a: &QMatrix, b: &[BigRat]) -> Result<Vec<BigRat>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} against {} rows",
            b.len(),
            a.rows()
        )));
    }
    let rhs = QMatrix::from_fn(a.rows(), 1, |r, _| b[r].clone());
    let (red, pivots) = rref(&a.hstack(&rhs)?);
    if pivots.last() == Some(&a.cols()) {
        return Err(Error::NotInSpan);
    }
    let mut x = vec![BigRat::zero(); a.cols()];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = red.get(r, a.cols()).clone();
    }
    Ok(x)
}

fn invert(m: &QMatrix) -> Result<QMatrix> {
    let n = m.rows();
    let aug = m.hstack(&QMatrix::identity(n))?;
    let (red, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::DimensionMismatch("singular pivot block".into()));
    }
    Ok(red.submatrix(&(0..n).collect::<Vec<_>>(), &(n..2 * n).collect::<Vec<_>>()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};

    fn q(rows: Vec<Vec<i64>>) -> QMatrix {
        QMatrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(rat).collect()).collect()).unwrap()
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(&q(vec![vec![1, 2], vec![2, 4]])), 1);
        assert_eq!(rank(&q(vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]])), 2);
        assert_eq!(rank(&q(vec![vec![0, 0], vec![0, 0]])), 0);
        assert_eq!(rank(&QMatrix::zeros(0, 3)), 0);
        assert_eq!(rank(&QMatrix::identity(5)), 5);
    }

    #[test]
    fn rank_with_fractions_and_overflow() {
        let m = QMatrix::from_rows(vec![vec![ratio(1, 3), ratio(1, 2)], vec![ratio(2, 3), rat(1)]]).unwrap();
        assert_eq!(rank(&m), 1);
        let big = i64::MAX / 2;
        let m = q(vec![vec![big, big - 1], vec![big - 1, big - 3]]);
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn nullspace_annihilates() {
        let m = q(vec![vec![1, 2, 3], vec![4, 5, 6]]);
        let n = nullspace(&m);
        assert_eq!(n.cols(), 1);
        assert!(m.mul(&n).is_zero());
    }

    #[test]
    fn span_solver_round_trip() {
        let b = q(vec![vec![1, 0], vec![1, 1], vec![0, 2]]);
        let s = SpanSolver::new(&b).unwrap();
        let v = vec![rat(3), rat(5), rat(4)];
        assert_eq!(s.solve(&v).unwrap(), vec![rat(3), rat(2)]);
        assert_eq!(s.solve(&[rat(1), rat(0), rat(0)]), Err(Error::NotInSpan));
        assert!(SpanSolver::new(&q(vec![vec![1, 2], vec![2, 4]])).is_err());
    }

    #[test]
    fn particular_solution() {
        let a = q(vec![vec![1, 1, 0], vec![0, 1, 1]]);
        let x = solve_particular(&a, &[rat(2), rat(3)]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![rat(2), rat(3)]);
        let a = q(vec![vec![1, 2], vec![2, 4]]);
        assert_eq!(solve_particular(&a, &[rat(1), rat(0)]), Err(Error::NotInSpan));
    }
}
