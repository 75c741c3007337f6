use std::collections::HashMap;

use crate::polyring::monomials_of_degree;

/// `k`-subsets of `{0, .., n-1}` in lexicographic order; empty when `k` is out of range.
pub fn wedge_basis(n: usize, k: i64) -> Vec<Vec<usize>> {
    if k < 0 || k as usize > n {
        return Vec::new();
    }
    let k = k as usize;
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            break;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
    out
}

/// Exponent vectors indexing `Sym_b` or `D_b` of a rank-`n` module,
/// in descending lexicographic order.
pub fn power_basis(n: usize, b: i64) -> Vec<Vec<u32>> {
    monomials_of_degree(n, b)
}

/// Which graded piece a basis indexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Wedge,
    Sym,
    Divided,
}

/// Basis of `∧^k`, `Sym_k` or `D_k` with reverse lookup.
///
/// Wedge elements are stored as sorted index lists, the others as exponent
/// vectors; both are encoded as `Vec<u32>`.
#[derive(Clone, Debug)]
pub struct Basis {
    pub kind: BasisKind,
    pub n: usize,
    pub degree: i64,
    elems: Vec<Vec<u32>>,
    lookup: HashMap<Vec<u32>, usize>,
}

impl Basis {
    pub fn new(kind: BasisKind, n: usize, degree: i64) -> Self {
        let elems: Vec<Vec<u32>> = match kind {
            BasisKind::Wedge => {
                wedge_basis(n, degree).into_iter().map(|s| s.into_iter().map(|x| x as u32).collect()).collect()
            }
            BasisKind::Sym | BasisKind::Divided => power_basis(n, degree),
        };
        let lookup = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Basis { kind, n, degree, elems, lookup }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[Vec<u32>] {
        &self.elems
    }

    pub fn index_of(&self, e: &[u32]) -> Option<usize> {
        self.lookup.get(e).copied()
    }
}

/// The basis of a module of the given kind.
pub fn basis(kind: BasisKind, n: usize, degree: i64) -> Basis {
    Basis::new(kind, n, degree)
}

/// Position of a sorted subset in `wedge_basis(n, s.len())`.
pub fn subset_rank(n: usize, s: &[usize]) -> usize {
    // Lex rank via counting subsets that precede `s`.
    let k = s.len();
    let mut rank = 0usize;
    let mut prev: i64 = -1;
    for (i, &x) in s.iter().enumerate() {
        for y in (prev + 1) as usize..x {
            rank += crate::exactnum::binomial((n - y - 1) as i64, (k - i - 1) as i64) as usize;
        }
        prev = x as i64;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_order() {
        assert_eq!(wedge_basis(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(wedge_basis(3, 0), vec![Vec::<usize>::new()]);
        assert!(wedge_basis(3, 4).is_empty());
        assert!(wedge_basis(3, -1).is_empty());
    }

    #[test]
    fn subset_ranks_match_enumeration() {
        for n in 0..7 {
            for k in 0..=n {
                for (i, s) in wedge_basis(n, k as i64).iter().enumerate() {
                    assert_eq!(subset_rank(n, s), i);
                }
            }
        }
    }

    #[test]
    fn sym_order() {
        let b = basis(BasisKind::Sym, 2, 2);
        assert_eq!(b.elems(), &[vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(b.index_of(&[1, 1]), Some(1));
        assert_eq!(basis(BasisKind::Divided, 3, 0).len(), 1);
    }
}
