use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::BigRat;
use crate::error::{Error, Result};

/// Commutative ring operations used by the generic matrix code.
pub trait Ring: Zero + One + Clone + PartialEq + Debug + Send + Sync + 'static {
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_int(v: i64) -> Self;

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.plus(rhs);
    }
}

/// Rings that are algebras over the rationals.
pub trait QAlgebra: Ring {
    fn scale(&self, s: &BigRat) -> Self;
}

impl Ring for BigInt {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_int(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

impl Ring for BigRat {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_int(v: i64) -> Self {
        BigRat::from_integer(BigInt::from(v))
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

impl QAlgebra for BigRat {
    fn scale(&self, s: &BigRat) -> Self {
        self * s
    }
}

/// Parse `n`, `-n`, `n/d` or a finite decimal `1.25` into a reduced rational.
pub fn parse_rational(text: &str) -> Result<BigRat> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((n, d)) = t.split_once('/') {
        let n = parse_int(n)?;
        let d = parse_int(d)?;
        if Zero::is_zero(&d) {
            return Err(Error::Parse("zero denominator".into()));
        }
        return Ok(BigRat::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let neg = whole.trim_start().starts_with('-');
        let w = if whole.trim().is_empty() || whole.trim() == "-" || whole.trim() == "+" {
            BigInt::zero()
        } else {
            parse_int(whole)?
        };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad decimal '{t}'")));
        }
        let f: BigInt = frac.parse().map_err(|_| Error::Parse(format!("bad decimal '{t}'")))?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let mag = w.abs() * &scale + f;
        let n = if neg { -mag } else { mag };
        return Ok(BigRat::new(n, scale));
    }
    Ok(BigRat::from_integer(parse_int(t)?))
}

fn parse_int(s: &str) -> Result<BigInt> {
    let s = s.trim();
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("bad integer '{s}'")));
    }
    s.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad integer '{s}'")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ratio;

    #[test]
    fn parses_forms() {
        assert_eq!(parse_rational("3").unwrap(), ratio(3, 1));
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational(" 1.25 ").unwrap(), ratio(5, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), ratio(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("--3").is_err());
    }

    #[test]
    fn denominator_positive() {
        let r = parse_rational("3/-6").unwrap();
        assert!(r.denom().is_positive());
        assert_eq!(r, ratio(-1, 2));
    }
}
