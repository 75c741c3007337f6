//! Exact integer and rational linear algebra.

mod elim;
mod lattice;
mod matrix;
mod ring;

pub use elim::{nullspace, rank, rank_of_rows, rref, solve_particular, SpanSolver};
pub use lattice::{hermite_rows, integer_nullspace, integer_nullspace_int};
pub use matrix::{compound, Matrix};
pub use ring::{parse_rational, QAlgebra, Ring};

pub use num_bigint::BigInt;

/// Reduced rational with positive denominator.
pub type BigRat = num_rational::BigRational;

pub type QMatrix = Matrix<BigRat>;
pub type ZMatrix = Matrix<BigInt>;

/// Rational from a machine integer.
pub fn rat(v: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(v))
}

/// Rational `n/d`; panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact integer binomial coefficient, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> u128 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k) as u128;
    let n = n as u128;
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Binomial coefficient extended to negative upper argument:
/// `n (n-1) ... (n-k+1) / k!`, zero for `k < 0`.
pub fn binomial_ext(n: i64, k: i64) -> i128 {
    if k < 0 {
        return 0;
    }
    if n >= 0 {
        return binomial(n, k) as i128;
    }
    // C(n, k) = (-1)^k C(k - n - 1, k)
    let v = binomial(k - n - 1, k) as i128;
    if k % 2 == 0 {
        v
    } else {
        -v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(5, -1), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial_ext(-1, 0), 1);
        assert_eq!(binomial_ext(-1, 1), -1);
        assert_eq!(binomial_ext(-2, 2), 3);
        assert_eq!(binomial_ext(4, 2), 6);
    }
}
