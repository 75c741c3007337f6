use num_bigint::BigInt;
use num_traits::Zero;

use super::basis::{subset_rank, wedge_basis};
use crate::exactnum::{compound, ZMatrix};

/// Sign of `e_S ∧ e_T` relative to `e_{S ∪ T}`, or 0 when the sets meet.
pub fn merge_sign(s: &[usize], t: &[usize]) -> i32 {
    let mut inversions = 0usize;
    for &a in s {
        for &b in t {
            if a == b {
                return 0;
            }
            if a > b {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn union_sorted(s: &[usize], t: &[usize]) -> Vec<usize> {
    let mut u: Vec<usize> = s.iter().chain(t).copied().collect();
    u.sort_unstable();
    u
}

fn difference(s: &[usize], t: &[usize]) -> Vec<usize> {
    s.iter().copied().filter(|x| !t.contains(x)).collect()
}

/// Element of `∧^degree` of a free module of rank `n` (or of its dual),
/// in the lexicographic subset basis. Degrees outside `0..=n` give the zero
/// module, with an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtVec {
    pub n: usize,
    pub degree: i64,
    pub coeffs: Vec<BigInt>,
}

impl ExtVec {
    pub fn zero(n: usize, degree: i64) -> Self {
        ExtVec { n, degree, coeffs: vec![BigInt::zero(); wedge_basis(n, degree).len()] }
    }

    pub fn from_coeffs(n: usize, degree: i64, coeffs: Vec<BigInt>) -> Self {
        assert_eq!(coeffs.len(), wedge_basis(n, degree).len());
        ExtVec { n, degree, coeffs }
    }

    pub fn basis_vector(n: usize, subset: &[usize]) -> Self {
        let mut v = ExtVec::zero(n, subset.len() as i64);
        v.coeffs[subset_rank(n, subset)] = BigInt::from(1);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &BigInt)> {
        wedge_basis(self.n, self.degree).into_iter().zip(&self.coeffs).filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, other: &ExtVec) -> ExtVec {
        assert_eq!((self.n, self.degree), (other.n, other.degree));
        ExtVec {
            n: self.n,
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, s: i64) -> ExtVec {
        ExtVec { n: self.n, degree: self.degree, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// Exterior product `self ∧ other`.
    pub fn wedge(&self, other: &ExtVec) -> ExtVec {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = ExtVec::zero(n, self.degree + other.degree);
        if out.coeffs.is_empty() {
            return out;
        }
        for (s, a) in self.terms() {
            for (t, b) in other.terms() {
                let sign = merge_sign(&s, &t);
                if sign == 0 {
                    continue;
                }
                let u = union_sorted(&s, &t);
                out.coeffs[subset_rank(n, &u)] += a * b * sign;
            }
        }
        out
    }

    /// `self ∈ ∧^q V*` acting on `c ∈ ∧^p V`, landing in `∧^{p-q} V`.
    ///
    /// Characterised by `<self(c), u> = <c, self ∧ u>`, so
    /// `e*_1 (e_1 ∧ e_2) = e_2` and `e*_2 (e_1 ∧ e_2) = -e_1`.
    pub fn contract(&self, c: &ExtVec) -> ExtVec {
        assert_eq!(self.n, c.n);
        let n = self.n;
        let mut out = ExtVec::zero(n, c.degree - self.degree);
        if out.coeffs.is_empty() {
            return out;
        }
        for (t, a) in self.terms() {
            for (s, b) in c.terms() {
                if !t.iter().all(|x| s.contains(x)) {
                    continue;
                }
                let rest = difference(&s, &t);
                let sign = merge_sign(&t, &rest);
                out.coeffs[subset_rank(n, &rest)] += a * b * sign;
            }
        }
        out
    }

    /// `self ∈ ∧^r V` acting on `alpha ∈ ∧^q V*`, landing in `∧^{q-r} V*`.
    ///
    /// Characterised by `<u, self(alpha)> = <u ∧ self, alpha>`.
    pub fn act_on_dual(&self, alpha: &ExtVec) -> ExtVec {
        assert_eq!(self.n, alpha.n);
        let n = self.n;
        let mut out = ExtVec::zero(n, alpha.degree - self.degree);
        if out.coeffs.is_empty() {
            return out;
        }
        for (t, a) in self.terms() {
            for (s, b) in alpha.terms() {
                if !t.iter().all(|x| s.contains(x)) {
                    continue;
                }
                let rest = difference(&s, &t);
                let sign = merge_sign(&rest, &t);
                out.coeffs[subset_rank(n, &rest)] += a * b * sign;
            }
        }
        out
    }

    /// Image under the exterior power of the map with matrix `psi` (target rows).
    pub fn push_forward(&self, psi: &ZMatrix) -> ExtVec {
        assert_eq!(psi.cols(), self.n);
        if self.coeffs.is_empty() {
            return ExtVec::zero(psi.rows(), self.degree);
        }
        let c = compound(psi, self.degree as usize);
        ExtVec { n: psi.rows(), degree: self.degree, coeffs: c.mul_vec(&self.coeffs) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, s: &[usize]) -> ExtVec {
        ExtVec::basis_vector(n, s)
    }

    #[test]
    fn contraction_signs() {
        let e12 = e(2, &[0, 1]);
        assert_eq!(e(2, &[0]).contract(&e12), e(2, &[1]));
        assert_eq!(e(2, &[1]).contract(&e12), e(2, &[0]).scale(-1));
    }

    #[test]
    fn wedge_signs() {
        assert_eq!(e(3, &[1]).wedge(&e(3, &[0])), e(3, &[0, 1]).scale(-1));
        assert!(e(3, &[1]).wedge(&e(3, &[1])).is_zero());
        assert_eq!(e(3, &[0, 2]).wedge(&e(3, &[1])), e(3, &[0, 1, 2]).scale(-1));
    }

    #[test]
    fn dual_action_on_top_form() {
        let top = e(3, &[0, 1, 2]);
        // <u ∧ e_2, e*_123>: u = e_1 ∧ e_3 gives sign of (1,3,2) = -1.
        assert_eq!(e(3, &[1]).act_on_dual(&top), e(3, &[0, 2]).scale(-1));
    }
}
