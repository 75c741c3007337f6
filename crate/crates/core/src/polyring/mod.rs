//! Sparse multivariate polynomials over the rationals and matrices over them.

mod parse;
mod poly;
mod strand;

pub use parse::parse_poly;
pub use poly::{grlex_cmp, Exponents, MultiPoly};
pub(crate) use strand::sparse_strand;
pub use strand::{graded_strand, monomials_of_degree, MonomialIndex};

use crate::error::{Error, Result};
use num_traits::Zero;

use crate::exactnum::{compound, BigRat, Matrix, QMatrix};

pub type PolyMatrix = Matrix<MultiPoly>;

/// Determinant of the submatrix on `rows` x `cols` (cofactor expansion).
pub fn minor(m: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Result<MultiPoly> {
    if rows.len() != cols.len() {
        return Err(Error::SizeMismatch { rows: rows.len(), cols: cols.len() });
    }
    if let Some(&r) = rows.iter().find(|&&r| r >= m.rows()) {
        return Err(Error::IndexOutOfRange { index: r, bound: m.rows() });
    }
    if let Some(&c) = cols.iter().find(|&&c| c >= m.cols()) {
        return Err(Error::IndexOutOfRange { index: c, bound: m.cols() });
    }
    let sub = m.submatrix(rows, cols);
    Ok(compound(&sub, rows.len()).get(0, 0).clone())
}

/// Evaluate every entry at `point`.
pub fn specialize(m: &PolyMatrix, point: &[BigRat]) -> QMatrix {
    m.map(|p| p.eval(point))
}

/// Constant matrix as a rational matrix, if every entry is constant.
pub fn constant_part(m: &PolyMatrix) -> Option<QMatrix> {
    if m.entries().iter().all(MultiPoly::is_constant) {
        Some(m.map(|p| p.constant_value().unwrap()))
    } else {
        None
    }
}

/// Embed a rational matrix as constant polynomials.
pub fn lift(m: &QMatrix) -> PolyMatrix {
    m.map(|c| MultiPoly::constant(c.clone()))
}

/// Largest variable index used in the matrix, plus one.
pub fn var_span(m: &PolyMatrix) -> usize {
    m.entries().iter().map(MultiPoly::var_span).max().unwrap_or(0)
}

/// The `f x g` matrix with entry `(r, c)` equal to `x_{r g + c + 1}`.
pub fn generic_matrix(f: usize, g: usize) -> PolyMatrix {
    PolyMatrix::from_fn(f, g, |r, c| MultiPoly::var(r * g + c))
}

/// Whether every nonzero entry is homogeneous of degree one.
pub fn is_linear(m: &PolyMatrix) -> bool {
    m.entries().iter().all(|p| p.is_zero() || p.homogeneous_degree() == Some(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use num_traits::One;

    #[test]
    fn generic_minor() {
        let m = generic_matrix(2, 2);
        let d = minor(&m, &[0, 1], &[0, 1]).unwrap();
        assert_eq!(d.to_string(), "x1*x4 - x2*x3");
        assert_eq!(minor(&m, &[0], &[0, 1]), Err(Error::SizeMismatch { rows: 1, cols: 2 }));
        assert_eq!(minor(&m, &[0, 2], &[0, 1]), Err(Error::IndexOutOfRange { index: 2, bound: 2 }));
        assert_eq!(minor(&m, &[], &[]).unwrap(), MultiPoly::one());
    }

    #[test]
    fn specialize_generic() {
        let m = generic_matrix(1, 2);
        let s = specialize(&m, &[rat(3), rat(4)]);
        assert_eq!(s.row(0), &[rat(3), rat(4)]);
        assert!(constant_part(&m).is_none());
        assert_eq!(constant_part(&lift(&s)).unwrap(), s);
    }
}
