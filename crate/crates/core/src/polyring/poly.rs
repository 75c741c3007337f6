use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exactnum::{BigRat, QAlgebra, Ring};

/// Exponent vector with trailing zeros trimmed, so `x1` is `[1]` and `1` is `[]`.
pub type Exponents = Vec<u32>;

/// Sparse polynomial with rational coefficients in variables `x1, x2, ...`.
///
/// Only nonzero coefficients are stored. The number of variables of the
/// ambient ring is carried by the containing matrix or complex.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, BigRat>,
}

fn trim(mut e: Exponents) -> Exponents {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

fn mono_mul(a: &[u32], b: &[u32]) -> Exponents {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (x, y) in out.iter_mut().zip(short) {
        *x += y;
    }
    out
}

/// Graded lex comparison with `x1 > x2 > ...`; `Greater` means larger monomial.
pub fn grlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        let n = a.len().max(b.len());
        for i in 0..n {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            if x != y {
                return x.cmp(&y);
            }
        }
        Ordering::Equal
    })
}

impl MultiPoly {
    pub fn constant(c: BigRat) -> Self {
        let mut p = MultiPoly::default();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    /// The variable `x_{index+1}`.
    pub fn var(index: usize) -> Self {
        let mut e = vec![0; index + 1];
        e[index] = 1;
        MultiPoly::monomial(e, BigRat::one())
    }

    pub fn monomial(exponents: Exponents, coeff: BigRat) -> Self {
        let mut p = MultiPoly::default();
        if !coeff.is_zero() {
            p.terms.insert(trim(exponents), coeff);
        }
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, BigRat)>) -> Self {
        let mut p = MultiPoly::default();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: BigRat) {
        if c.is_zero() {
            return;
        }
        let e = trim(e);
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRat)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigRat {
        self.terms.get(&trim(exponents.to_vec())).cloned().unwrap_or_else(BigRat::zero)
    }

    /// Number of variables actually occurring (index of the last one plus one).
    pub fn var_span(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Vec::is_empty)
    }

    pub fn constant_value(&self) -> Option<BigRat> {
        self.is_constant().then(|| self.terms.get(&Vec::new()).cloned().unwrap_or_else(BigRat::zero))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn eval(&self, point: &[BigRat]) -> BigRat {
        let mut acc = BigRat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    let x = point.get(i).cloned().unwrap_or_else(BigRat::zero);
                    t *= num_traits::pow(x, k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn mul_monomial(&self, e: &[u32]) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(k, c)| (mono_mul(k, e), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = MultiPoly::constant(BigRat::one());
        for _ in 0..k {
            acc = acc.times(self);
        }
        acc
    }

    /// Terms sorted from the largest monomial in graded lex order.
    pub fn sorted_terms(&self) -> Vec<(&Exponents, &BigRat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_cmp(b.0, a.0));
        v
    }
}

impl std::ops::Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl std::ops::Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        self.times(&rhs)
    }
}

impl Zero for MultiPoly {
    fn zero() -> Self {
        MultiPoly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiPoly {
    fn one() -> Self {
        MultiPoly::constant(BigRat::one())
    }
}

impl Ring for MultiPoly {
    fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.plus(&rhs.negated())
    }
    fn times(&self, rhs: &Self) -> Self {
        let mut out = MultiPoly::default();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(mono_mul(ea, eb), ca * cb);
            }
        }
        out
    }
    fn negated(&self) -> Self {
        MultiPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
    fn from_int(v: i64) -> Self {
        MultiPoly::constant(BigRat::from_int(v))
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl QAlgebra for MultiPoly {
    fn scale(&self, s: &BigRat) -> Self {
        if s.is_zero() {
            return MultiPoly::default();
        }
        MultiPoly { terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect() }
    }
}

fn fmt_monomial(e: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if k > 1 {
            write!(f, "^{k}")?;
        }
    }
    Ok(())
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if e.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                fmt_monomial(e, f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio};

    #[test]
    fn arithmetic_cancels() {
        let x = MultiPoly::var(0);
        let y = MultiPoly::var(1);
        let s = x.plus(&y);
        let d = x.minus(&y);
        let p = s.times(&d);
        assert_eq!(p, x.times(&x).minus(&y.times(&y)));
        assert!(p.minus(&p).is_zero());
        assert_eq!(p.homogeneous_degree(), Some(2));
    }

    #[test]
    fn display_order() {
        let x = MultiPoly::var(0);
        let y = MultiPoly::var(1);
        let p = y.times(&y).scale(&ratio(-3, 2)).plus(&x).plus(&MultiPoly::from_int(5));
        assert_eq!(p.to_string(), "-3/2*x2^2 + x1 + 5");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!(x.negated().to_string(), "-x1");
    }

    #[test]
    fn eval_and_constants() {
        let x = MultiPoly::var(0);
        let p = x.times(&x).plus(&MultiPoly::from_int(1));
        assert_eq!(p.eval(&[rat(2)]), rat(5));
        assert!(!p.is_constant());
        assert_eq!(MultiPoly::from_int(3).constant_value(), Some(rat(3)));
        assert_eq!(MultiPoly::zero().constant_value(), Some(rat(0)));
        assert_eq!(p.homogeneous_degree(), None);
    }

    #[test]
    fn trailing_zeros_are_canonical() {
        let a = MultiPoly::monomial(vec![1, 0, 0], rat(1));
        assert_eq!(a, MultiPoly::var(0));
        assert_eq!(MultiPoly::monomial(vec![0, 0], rat(2)), MultiPoly::from_int(2));
    }
}
