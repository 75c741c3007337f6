use num_bigint::BigInt;
use num_traits::Zero;

use super::MultiPoly;
use crate::error::{Error, Result};
use crate::exactnum::{BigRat, QAlgebra, Ring};

const MAX_EXPONENT: u32 = 64;
const MAX_DEPTH: usize = 64;
const MAX_TERMS: usize = 200_000;
const MAX_VAR: usize = 4096;
const MAX_DIGITS: usize = 4096;
/// Coefficients of parsed results stay well below `MAX_DIGITS` decimal digits.
const MAX_COEFF_BITS: u64 = 4096;

fn coeff_bits(p: &MultiPoly) -> u64 {
    p.terms().map(|(_, c)| c.numer().bits().max(c.denom().bits())).max().unwrap_or(0)
}

/// Parse polynomial text such as `x1*x2 - 3/2*x3^2 + (x1 + 1)^2`.
///
/// Variables are `x1, x2, ...`; `/` is allowed only by a nonzero constant.
pub fn parse_poly(text: &str) -> Result<MultiPoly> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, depth: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("trailing input"));
    }
    Parser::guard(out)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn guard(poly: MultiPoly) -> Result<MultiPoly> {
        if poly.term_count() > MAX_TERMS {
            return Err(Error::Parse("polynomial too large".into()));
        }
        for (e, c) in poly.terms() {
            if e.iter().any(|&k| k > MAX_EXPONENT) {
                return Err(Error::Parse("exponent too large".into()));
            }
            if c.numer().bits() > MAX_COEFF_BITS || c.denom().bits() > MAX_COEFF_BITS {
                return Err(Error::Parse("coefficient too large".into()));
            }
        }
        Ok(poly)
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.err("nesting too deep"));
        }
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.pos += 1;
                    acc = acc.plus(&self.term()?);
                }
                b'-' => {
                    self.pos += 1;
                    acc = acc.minus(&self.term()?);
                }
                _ => break,
            }
        }
        self.depth -= 1;
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                b'*' => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    if acc.term_count() * rhs.term_count() > 4 * MAX_TERMS
                        || coeff_bits(&acc) + coeff_bits(&rhs) > 2 * MAX_COEFF_BITS
                    {
                        return Err(self.err("product too large"));
                    }
                    acc = Self::guard(acc.times(&rhs))?;
                }
                b'/' => {
                    self.pos += 1;
                    let d = self.unary()?;
                    let c = d
                        .constant_value()
                        .filter(|c| !c.is_zero())
                        .ok_or_else(|| self.err("division by a non-constant or zero"))?;
                    acc = acc.scale(&c.recip());
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.depth += 1;
                if self.depth > MAX_DEPTH {
                    return Err(self.err("nesting too deep"));
                }
                let v = self.unary()?.negated();
                self.depth -= 1;
                Ok(v)
            }
            Some(b'+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits();
            if digits.is_empty() || digits.len() > 3 {
                return Err(self.err("bad exponent"));
            }
            let k: u32 = digits.parse().map_err(|_| self.err("bad exponent"))?;
            if k > MAX_EXPONENT {
                return Err(self.err("exponent too large"));
            }
            if base.term_count() > 1 {
                let bound = (base.term_count() as f64).powi(k as i32);
                if bound > MAX_TERMS as f64 * 4.0 {
                    return Err(self.err("power too large"));
                }
            }
            // coefficient size of the power, estimated before computing it
            let spread = (base.term_count().max(1) as f64).log2().ceil() as u64;
            if (coeff_bits(&base) + spread) * u64::from(k) > MAX_COEFF_BITS {
                return Err(self.err("power too large"));
            }
            return Self::guard(base.pow(k));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'x') => {
                self.pos += 1;
                let digits = self.digits();
                if digits.is_empty() || digits.len() > 6 {
                    return Err(self.err("bad variable"));
                }
                let k: usize = digits.parse().map_err(|_| self.err("bad variable"))?;
                if k == 0 || k > MAX_VAR {
                    return Err(self.err("variable index out of range"));
                }
                Ok(MultiPoly::var(k - 1))
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits();
                if digits.len() > MAX_DIGITS {
                    return Err(self.err("numeral too long"));
                }
                let n: BigInt = digits.parse().map_err(|_| self.err("bad number"))?;
                Ok(MultiPoly::constant(BigRat::from_integer(n)))
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}
