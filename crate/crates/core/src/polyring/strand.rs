use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::PolyMatrix;
use crate::error::{Error, Result};
use crate::exactnum::{BigRat, QMatrix};

/// Exponent vectors of length `n` and total degree `k`, in descending lex order
/// (so `x1^2, x1 x2, x2^2` for `n = 2, k = 2`).
pub fn monomials_of_degree(n: usize, k: i64) -> Vec<Vec<u32>> {
    if k < 0 {
        return Vec::new();
    }
    if n == 0 {
        return if k == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let n = cur.len();
        if i == n - 1 {
            cur[i] = rem;
            out.push(cur.clone());
            return;
        }
        for e in (0..=rem).rev() {
            cur[i] = e;
            rec(i + 1, rem - e, cur, out);
        }
    }
    rec(0, k as u32, &mut cur, &mut out);
    out
}

type DegreeBasis = (Vec<Vec<u32>>, HashMap<Vec<u32>, usize>);

/// Monomial bases by degree with reverse lookup.
#[derive(Debug, Default)]
pub struct MonomialIndex {
    nvars: usize,
    by_degree: HashMap<i64, DegreeBasis>,
}

impl MonomialIndex {
    pub fn new(nvars: usize) -> Self {
        MonomialIndex { nvars, by_degree: HashMap::new() }
    }

    fn ensure(&mut self, k: i64) {
        self.by_degree.entry(k).or_insert_with(|| {
            let list = monomials_of_degree(self.nvars, k);
            let lookup = list.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
            (list, lookup)
        });
    }

    pub fn basis(&mut self, k: i64) -> &[Vec<u32>] {
        self.ensure(k);
        &self.by_degree[&k].0
    }

    pub fn count(&mut self, k: i64) -> usize {
        self.basis(k).len()
    }

    pub fn index_of(&mut self, k: i64, e: &[u32]) -> Option<usize> {
        self.ensure(k);
        let mut padded = e.to_vec();
        if padded.len() > self.nvars {
            return None;
        }
        padded.resize(self.nvars, 0);
        self.by_degree[&k].1.get(&padded).copied()
    }
}

/// Sparse strand: integer rows (denominators cleared per row) plus shape.
pub(crate) struct SparseStrand {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<(usize, BigRat)>>,
}

impl SparseStrand {
    pub fn integer_rows(&self) -> Vec<Vec<(usize, BigInt)>> {
        self.entries
            .iter()
            .map(|row| {
                let lcm = row.iter().fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
                row.iter().map(|(c, x)| (*c, x.numer() * (&lcm / x.denom()))).collect()
            })
            .collect()
    }

    pub fn to_dense(&self) -> QMatrix {
        let mut m = QMatrix::zeros(self.rows, self.cols);
        for (r, row) in self.entries.iter().enumerate() {
            for (c, v) in row {
                m.set(r, *c, v.clone());
            }
        }
        m
    }
}

pub(crate) fn sparse_strand(
    m: &PolyMatrix,
    nvars: usize,
    source_twists: &[i64],
    target_twists: &[i64],
    degree: i64,
    monos: &mut MonomialIndex,
) -> Result<SparseStrand> {
    if source_twists.len() != m.cols() || target_twists.len() != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix with {} source and {} target twists",
            m.rows(),
            m.cols(),
            source_twists.len(),
            target_twists.len()
        )));
    }
    let mut row_offset = Vec::with_capacity(m.rows());
    let mut nrows = 0;
    for &t in target_twists {
        row_offset.push(nrows);
        nrows += monos.count(degree - t);
    }
    let mut col_offset = Vec::with_capacity(m.cols());
    let mut ncols = 0;
    for &s in source_twists {
        col_offset.push(ncols);
        ncols += monos.count(degree - s);
    }
    let mut rows: Vec<HashMap<usize, BigRat>> = vec![HashMap::new(); nrows];
    for c in 0..m.cols() {
        let src_deg = degree - source_twists[c];
        let src_basis: Vec<Vec<u32>> = monos.basis(src_deg).to_vec();
        for r in 0..m.rows() {
            let p = m.get(r, c);
            if p.is_zero() {
                continue;
            }
            let want = source_twists[c] - target_twists[r];
            if want < 0 || p.homogeneous_degree() != Some(want as u32) {
                return Err(Error::NotHomogeneous { row: r, col: c });
            }
            if p.var_span() > nvars {
                return Err(Error::DimensionMismatch(format!("entry ({r}, {c}) uses more than {nvars} variables")));
            }
            let tgt_deg = degree - target_twists[r];
            for (j, mu) in src_basis.iter().enumerate() {
                for (e, coeff) in p.terms() {
                    let mut prod = mu.clone();
                    for (x, y) in prod.iter_mut().zip(e) {
                        *x += y;
                    }
                    let i = monos.index_of(tgt_deg, &prod).expect("product monomial has the target degree");
                    let slot = rows[row_offset[r] + i].entry(col_offset[c] + j).or_insert_with(BigRat::zero);
                    *slot += coeff;
                }
            }
        }
    }
    let entries = rows
        .into_iter()
        .map(|row| {
            let mut v: Vec<(usize, BigRat)> = row.into_iter().filter(|(_, x)| !Zero::is_zero(x)).collect();
            v.sort_by_key(|e| e.0);
            v
        })
        .collect();
    Ok(SparseStrand { rows: nrows, cols: ncols, entries })
}

/// Degree-`degree` strand of `m : ⊕ R(-source_twists) → ⊕ R(-target_twists)`
/// over `R = Q[x1..x_nvars]`.
///
/// Rows are target summands times monomials of degree `degree - t`, columns
/// likewise for sources; monomials within a block are in graded lex order.
pub fn graded_strand(
    m: &PolyMatrix,
    nvars: usize,
    source_twists: &[i64],
    target_twists: &[i64],
    degree: i64,
) -> Result<QMatrix> {
    let mut monos = MonomialIndex::new(nvars);
    sparse_strand(m, nvars, source_twists, target_twists, degree, &mut monos).map(|s| s.to_dense())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::exactnum::Ring;
    use crate::polyring::{generic_matrix, MultiPoly};
    use num_traits::One;

    #[test]
    fn monomial_order() {
        assert_eq!(monomials_of_degree(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(monomials_of_degree(3, 0), vec![vec![0, 0, 0]]);
        assert!(monomials_of_degree(2, -1).is_empty());
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
    }

    #[test]
    fn single_variable_strand() {
        // [x1] : R(-1) -> R over two variables in degree 1.
        let m = PolyMatrix::from_rows(vec![vec![MultiPoly::var(0)]]).unwrap();
        let s = graded_strand(&m, 2, &[1], &[0], 1).unwrap();
        assert_eq!(s.shape(), (2, 1));
        assert_eq!(s.column(0), vec![rat(1), rat(0)]);
        let below = graded_strand(&m, 2, &[1], &[0], 0).unwrap();
        assert_eq!(below.shape(), (1, 0));
    }

    #[test]
    fn inhomogeneous_entry_reports_position() {
        let m =
            PolyMatrix::from_rows(vec![vec![MultiPoly::var(0), MultiPoly::var(0).plus(&MultiPoly::one())]]).unwrap();
        assert_eq!(graded_strand(&m, 1, &[1, 1], &[0], 2), Err(Error::NotHomogeneous { row: 0, col: 1 }));
    }

    #[test]
    fn block_column_count() {
        let m = generic_matrix(2, 3);
        // r = 3 source summands of twist 1, n = 6 variables, degree 3.
        let s = graded_strand(&m, 6, &[1, 1, 1], &[0, 0], 3).unwrap();
        assert_eq!(s.cols(), 3 * monomials_of_degree(6, 2).len());
        assert_eq!(s.rows(), 2 * monomials_of_degree(6, 3).len());
    }
}
