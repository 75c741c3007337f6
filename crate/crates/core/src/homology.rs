//! Homology of numeric complexes, graded strand homology of polynomial
//! complexes, Hilbert functions of `H_0`, and annihilation checks.

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complexes::{ChainComplex, NumericComplex, Presentation};
use crate::error::{Error, Result};
use crate::exactnum::{rank, rank_of_rows, BigInt};
use crate::polyring::{minor, monomials_of_degree, sparse_strand, MonomialIndex, MultiPoly, PolyMatrix};

/// Homology dimensions by position, and by internal degree when graded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyTable {
    pub name: String,
    pub positions: Vec<i64>,
    /// Highest internal degree computed; `None` for a numeric table.
    pub cutoff: Option<i64>,
    /// `dims[k][D]`: homology at `positions[k]` in degree `D` (a single
    /// column for numeric tables).
    pub dims: Vec<Vec<usize>>,
    /// Dimensions of the chain modules, laid out like `dims`.
    pub chain_dims: Vec<Vec<usize>>,
}

impl HomologyTable {
    pub fn row(&self, j: i64) -> Option<&[usize]> {
        self.positions.iter().position(|&p| p == j).map(|k| self.dims[k].as_slice())
    }

    /// Homology at `j` in every computed degree; zeros if `j` is not stored.
    pub fn row_or_zero(&self, j: i64) -> Vec<usize> {
        let width = self.dims.first().map_or(1, Vec::len);
        self.row(j).map_or_else(|| vec![0; width], <[usize]>::to_vec)
    }

    pub fn total(&self, j: i64) -> usize {
        self.row(j).map_or(0, |r| r.iter().sum())
    }

    /// `H_j = 0` for every stored `j ≥ 1`.
    pub fn is_acyclic(&self) -> bool {
        self.positions.iter().zip(&self.dims).filter(|(j, _)| **j >= 1).all(|(_, r)| r.iter().all(|&x| x == 0))
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().flatten().all(|&x| x == 0)
    }

    /// Degreewise alternating sums of chain and homology dimensions agree.
    pub fn euler_characteristic_holds(&self) -> bool {
        let width = self.dims.first().map_or(0, Vec::len);
        (0..width).all(|d| {
            let sum = |rows: &Vec<Vec<usize>>| -> i64 {
                self.positions
                    .iter()
                    .zip(rows)
                    .map(|(j, r)| if j.rem_euclid(2) == 0 { r[d] as i64 } else { -(r[d] as i64) })
                    .sum()
            };
            sum(&self.chain_dims) == sum(&self.dims)
        })
    }

    /// Rows are positions, columns are degrees.
    pub fn to_csv(&self) -> String {
        let width = self.dims.first().map_or(0, Vec::len);
        let mut out = String::from("position");
        match self.cutoff {
            Some(_) => (0..width).for_each(|d| out.push_str(&format!(",deg{d}"))),
            None => out.push_str(",dim"),
        }
        out.push('\n');
        for (j, r) in self.positions.iter().zip(&self.dims) {
            out.push_str(&j.to_string());
            for x in r {
                out.push_str(&format!(",{x}"));
            }
            out.push('\n');
        }
        out
    }
}

/// `dim H_j = rank C_j − rank d_j − rank d_{j+1}` over the rationals.
pub fn homology_numeric(c: &NumericComplex) -> HomologyTable {
    let ranks: Vec<usize> = c.differentials.par_iter().map(rank).collect();
    let n = c.positions.len();
    let dims = (0..n)
        .map(|k| {
            let out = if k >= 1 { ranks[k - 1] } else { 0 };
            let inc = if k + 1 < n { ranks[k] } else { 0 };
            vec![c.positions[k].rank - out - inc]
        })
        .collect();
    HomologyTable {
        name: c.name.clone(),
        positions: c.positions.iter().map(|p| p.index).collect(),
        cutoff: None,
        dims,
        chain_dims: c.positions.iter().map(|p| vec![p.rank]).collect(),
    }
}

fn strand_rank(
    m: &PolyMatrix,
    nvars: usize,
    source_twists: &[i64],
    target_twists: &[i64],
    degree: i64,
) -> Result<usize> {
    let mut monos = MonomialIndex::new(nvars);
    let s = sparse_strand(m, nvars, source_twists, target_twists, degree, &mut monos)?;
    Ok(rank_of_rows(s.integer_rows()))
}

/// Strandwise homology in internal degrees `0..=cutoff`.
pub fn homology_graded(c: &ChainComplex, cutoff: i64) -> Result<HomologyTable> {
    let nvars = c.nvars;
    let degrees = 0..=cutoff.max(-1);
    let jobs: Vec<(usize, i64)> =
        (0..c.differentials.len()).flat_map(|k| degrees.clone().map(move |d| (k, d))).collect();
    let ranks: Vec<usize> = jobs
        .par_iter()
        .map(|&(k, d)| {
            let src = &c.positions[k + 1];
            let tgt = &c.positions[k];
            strand_rank(&c.differentials[k], nvars, &vec![src.twist; src.rank], &vec![tgt.twist; tgt.rank], d)
        })
        .collect::<Result<_>>()?;
    let width = degrees.clone().count();
    let rank_of = |k: usize, d: usize| ranks[k * width + d];
    let n = c.positions.len();
    let chain_dims: Vec<Vec<usize>> = c
        .positions
        .iter()
        .map(|p| degrees.clone().map(|d| p.rank * monomials_of_degree(nvars, d - p.twist).len()).collect())
        .collect();
    let dims = (0..n)
        .map(|k| {
            (0..width)
                .map(|d| {
                    let out = if k >= 1 { rank_of(k - 1, d) } else { 0 };
                    let inc = if k + 1 < n { rank_of(k, d) } else { 0 };
                    chain_dims[k][d] - out - inc
                })
                .collect()
        })
        .collect();
    Ok(HomologyTable {
        name: c.name.clone(),
        positions: c.positions.iter().map(|p| p.index).collect(),
        cutoff: Some(cutoff),
        dims,
        chain_dims,
    })
}

/// Hilbert function of `H_0` in degrees `0..=cutoff`, from the complex.
pub fn hilbert_h0(c: &ChainComplex, cutoff: i64) -> Result<Vec<usize>> {
    let table = homology_graded(c, cutoff)?;
    Ok(table.row_or_zero(0))
}

/// Hilbert function of the cokernel of a presentation in degrees `0..=cutoff`.
pub fn hilbert_presentation(p: &Presentation, cutoff: i64) -> Result<Vec<usize>> {
    let targets = vec![0; p.generators];
    (0..=cutoff)
        .into_par_iter()
        .map(|d| {
            let free = p.generators * monomials_of_degree(p.nvars, d).len();
            let r = strand_rank(&p.matrix, p.nvars, &p.relation_twists, &targets, d)?;
            Ok(free - r)
        })
        .collect()
}

/// Outcome of an annihilation check; `failing_degree` is the first degree
/// `e + deg(minor)` where `minor · C_0` escapes `im d_1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annihilation {
    pub holds: bool,
    pub failing_degree: Option<i64>,
    pub minor: String,
}

/// Whether multiplication by the minor `Φ[rows, cols]` maps every strand of
/// `C_0` into the image of `d_1`, in target degrees up to `cutoff`.
pub fn annihilation_check(
    c: &ChainComplex,
    phi: &PolyMatrix,
    rows: &[usize],
    cols: &[usize],
    cutoff: i64,
) -> Result<Annihilation> {
    let m = minor(phi, rows, cols)?;
    let text = m.to_string();
    let Some(c0) = c.position(0) else {
        return Ok(Annihilation { holds: true, failing_degree: None, minor: text });
    };
    if m.is_zero() || c0.rank == 0 {
        return Ok(Annihilation { holds: true, failing_degree: None, minor: text });
    }
    let deg = m.homogeneous_degree().ok_or(Error::NotHomogeneous { row: rows[0], col: cols[0] })? as i64;
    let nvars = c.nvars.max(phi.entries().iter().map(MultiPoly::var_span).max().unwrap_or(0));
    let tgt_twists = vec![c0.twist; c0.rank];
    let scalar = PolyMatrix::from_fn(c0.rank, c0.rank, |r, s| if r == s { m.clone() } else { MultiPoly::zero() });
    let scalar_twists = vec![c0.twist + deg; c0.rank];
    for target in deg..=cutoff {
        let mut monos = MonomialIndex::new(nvars);
        let mut rows_d1: Vec<Vec<(usize, BigInt)>> = Vec::new();
        let mut offset = 0;
        if let (Some(d1), Some(c1)) = (c.differential(1), c.position(1)) {
            let s = sparse_strand(d1, nvars, &vec![c1.twist; c1.rank], &tgt_twists, target, &mut monos)?;
            offset = s.cols;
            rows_d1 = s.integer_rows();
        }
        let mult = sparse_strand(&scalar, nvars, &scalar_twists, &tgt_twists, target, &mut monos)?;
        if rows_d1.is_empty() {
            rows_d1 = vec![Vec::new(); mult.rows];
        }
        let base = rank_of_rows(rows_d1.clone());
        let combined: Vec<Vec<(usize, BigInt)>> = rows_d1
            .into_iter()
            .zip(mult.integer_rows())
            .map(|(mut a, b)| {
                a.extend(b.into_iter().map(|(col, v)| (col + offset, v)));
                a
            })
            .collect();
        if rank_of_rows(combined) != base {
            return Ok(Annihilation { holds: false, failing_degree: Some(target), minor: text });
        }
    }
    Ok(Annihilation { holds: true, failing_degree: None, minor: text })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{build_cia, build_classical, h0_presentation};
    use crate::differentials::{HookSource, Tamper};
    use crate::exactnum::{binomial, QMatrix};
    use crate::multilinear::HookCache;
    use crate::polyring::{generic_matrix, lift};

    /// HF of `R/I_2` for a generic 3×2 matrix from its Eagon–Northcott
    /// resolution `0 → R(-3)^2 → R(-2)^3 → R`, over 6 variables.
    fn en_hilbert(d: i64) -> usize {
        let h = |k: i64| if k < 0 { 0 } else { binomial(k + 5, 5) as i64 };
        (h(d) - 3 * h(d - 2) + 2 * h(d - 3)) as usize
    }

    #[test]
    fn identity_is_split_exact() {
        let cache = HookCache::new(None);
        let hooks = HookSource::new(&cache, Tamper::None);
        let phi = lift(&QMatrix::identity(2));
        for i in -1..=0 {
            for a in 1..=2 {
                let c = build_cia(&phi, i, a, &hooks).unwrap().to_numeric().unwrap();
                assert!(homology_numeric(&c).is_zero(), "({i},{a})");
            }
        }
    }

    #[test]
    fn eagon_northcott_hilbert_function() {
        let cache = HookCache::new(None);
        let hooks = HookSource::new(&cache, Tamper::None);
        let phi = generic_matrix(3, 2);
        let c = build_cia(&phi, 0, 1, &hooks).unwrap();
        let t = homology_graded(&c, 3).unwrap();
        assert!(t.is_acyclic());
        assert!(t.euler_characteristic_holds());
        let want: Vec<usize> = (0..=3).map(en_hilbert).collect();
        assert_eq!(want, vec![1, 6, 18, 40]);
        assert_eq!(t.row(0).unwrap(), want.as_slice());
        let old = build_classical(&phi, 0, &hooks).unwrap();
        assert_eq!(hilbert_h0(&old, 3).unwrap(), want);
        let p = h0_presentation(&phi, 0, 1, &hooks).unwrap();
        assert_eq!(hilbert_presentation(&p, 3).unwrap(), want);
    }

    #[test]
    fn maximal_minor_annihilates() {
        let cache = HookCache::new(None);
        let hooks = HookSource::new(&cache, Tamper::None);
        let phi = generic_matrix(3, 2);
        let c = build_cia(&phi, 0, 1, &hooks).unwrap();
        let ann = annihilation_check(&c, &phi, &[0, 1], &[0, 1], 4).unwrap();
        assert!(ann.holds);
        // a variable does not annihilate R/I_2
        let x = PolyMatrix::from_fn(1, 1, |_, _| MultiPoly::var(0));
        let miss = annihilation_check(&c, &x, &[0], &[0], 4).unwrap();
        assert_eq!(miss.failing_degree, Some(1));
    }

    #[test]
    fn csv_layout() {
        let cache = HookCache::new(None);
        let hooks = HookSource::new(&cache, Tamper::None);
        let c = build_cia(&generic_matrix(3, 2), 0, 1, &hooks).unwrap();
        let t = homology_graded(&c, 1).unwrap();
        let csv = t.to_csv();
        assert!(csv.starts_with("position,deg0,deg1\n0,1,6\n"));
    }
}
