//! Twisted duals, the duality isomorphisms `C^{i,a} ≅ (C^{f-g-i-1,g+1-a})^*[-(f-g+1)]`,
//! and the identifications of the classical complexes with `C^{i,1}` and `C^{i-1,g}`.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{normalize_twists, ChainComplex, Module, Position};
use crate::differentials::HookSource;
use crate::error::{Error, Result};
use crate::exactnum::{rank, rat, solve_particular, BigRat, QMatrix, Ring};
use crate::multilinear::{eta_map, kappa_map, merge_sign, subset_rank, wedge_basis, HookBasis, HookKind, MapVariant};
use crate::polyring::{lift, MultiPoly};

/// `C^*[-(f-g+1)]` with negated twists: position `j` holds `(C_{f-g+1-j})^*`
/// and `d_j` is the transpose of `d_{f-g+2-j}`.
pub fn dual_twisted<T: Ring + fmt::Display>(c: &ChainComplex<T>) -> ChainComplex<T> {
    let n = c.f as i64 - c.g as i64 + 1;
    let mut positions: Vec<Position> = c
        .positions
        .iter()
        .rev()
        .map(|p| Position {
            index: n - p.index,
            module: match &p.module {
                Module::Zero => Module::Zero,
                m => Module::Dual(Box::new(m.clone())),
            },
            rank: p.rank,
            twist: -p.twist,
        })
        .collect();
    normalize_twists(&mut positions);
    let differentials = c.differentials.iter().rev().map(|d| d.transpose()).collect();
    ChainComplex { f: c.f, g: c.g, nvars: c.nvars, name: format!("dual({})", c.name), positions, differentials }
}

/// Matrix of the pairing `L^p_b G × K^{p+1}_{b-1}(G*) → R`, rows indexed by
/// the `L` basis and columns by the `K` basis. A `K` vector `k` is paired
/// with `l` through any `y` with `η(y) = k`.
pub fn pairing_matrix(g: usize, p: i64, b: i64, hooks: &HookSource) -> Result<QMatrix> {
    let bl = hooks.basis(HookKind::L, g, p, b)?;
    let bk = hooks.basis(HookKind::K, g, p + 1, b - 1)?;
    let eta = eta_map(g, p, b, MapVariant::Standard).to_dense().map(|x| BigRat::from_integer(x.clone()));
    let l_dense = bl.to_dense();
    let mut out = QMatrix::zeros(bl.rank(), bk.rank());
    for (k, col) in bk.columns().iter().enumerate() {
        let mut target = vec![BigRat::zero(); eta.rows()];
        for (row, v) in col {
            target[*row] = BigRat::from_integer(v.clone());
        }
        let y = solve_particular(&eta, &target)?;
        for l in 0..bl.rank() {
            let mut acc = BigRat::zero();
            for (idx, yv) in y.iter().enumerate() {
                let x = l_dense.get(idx, l);
                if !x.is_zero() && !yv.is_zero() {
                    acc += BigRat::from_integer(x.clone()) * yv;
                }
            }
            out.set(l, k, acc);
        }
    }
    Ok(out)
}

fn complement(f: usize, s: &[usize]) -> Vec<usize> {
    (0..f).filter(|x| !s.contains(x)).collect()
}

/// `∧^r F ⊗ X → ∧^{f-r} F ⊗ Y`, `e_S ⊗ x ↦ sign(S^c, S) e_{S^c} ⊗ M x`.
fn complement_tensor(f: usize, r: i64, m: &QMatrix) -> QMatrix {
    let src = wedge_basis(f, r);
    let (hr, hc) = m.shape();
    let tgt_len = wedge_basis(f, f as i64 - r).len();
    let mut out = QMatrix::zeros(tgt_len * hr, src.len() * hc);
    for (si, s) in src.iter().enumerate() {
        let sc = complement(f, s);
        let sign = merge_sign(&sc, s);
        let ti = subset_rank(f, &sc);
        for a in 0..hr {
            for b in 0..hc {
                let v = m.get(a, b);
                if v.is_zero() {
                    continue;
                }
                out.set(ti * hr + a, si * hc + b, if sign > 0 { v.clone() } else { -v.clone() });
            }
        }
    }
    out
}

/// For each position `j` of `C^{i,a}`, the isomorphism
/// `(C^{i,a})_j → ((C^{f-g-i-1,g+1-a})_{f-g+1-j})^*` built from the wedge
/// complement and the hook pairing. Positions with zero modules are skipped.
pub fn duality_isomorphisms(f: usize, g: usize, i: i64, a: i64, hooks: &HookSource) -> Result<Vec<(i64, QMatrix)>> {
    let shape = super::cia_shape(f, g, i, a);
    let (fi, gi) = (f as i64, g as i64);
    let mut out = Vec::new();
    for p in shape.iter().filter(|p| p.rank > 0) {
        let j = p.index;
        let m = if j <= i {
            let pair = pairing_matrix(g, gi - a, i + 1 - j, hooks)?;
            complement_tensor(f, fi - j, &pair.transpose())
        } else if j == i + 1 {
            complement_tensor(f, fi - gi + a - i - 1, &QMatrix::identity(1))
        } else {
            let pair = pairing_matrix(g, a - 1, j - i - 1, hooks)?;
            complement_tensor(f, fi - gi + 1 - j, &pair)
        };
        out.push((j, m));
    }
    Ok(out)
}

/// Which of the two complexes the classical `C^i_Φ` is identified with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NewOldTarget {
    /// `C^{i,1}_Φ`.
    FirstColumn,
    /// `C^{i-1,g}_Φ ⊗ ∧^g G`.
    LastColumn,
}

/// Block-diagonal map `∧^r F ⊗ X → ∧^r F ⊗ basis` sending the `x`-th basis
/// vector of `X` to the hook coordinates of `images[x]`.
fn wedge_times_coords(f: usize, r: i64, images: &[Vec<BigRat>], basis: &HookBasis) -> Result<QMatrix> {
    let coords = images.iter().map(|v| basis.coords(v)).collect::<Result<Vec<_>>>()?;
    let block = QMatrix::from_fn(basis.rank(), images.len(), |row, col| coords[col][row].clone());
    let nw = wedge_basis(f, r).len();
    Ok(QMatrix::identity(nw).kronecker(&block))
}

fn map_columns(m: &crate::multilinear::SparseIntMap) -> Vec<Vec<BigRat>> {
    m.columns
        .iter()
        .map(|col| {
            let mut v = vec![BigRat::zero(); m.rows];
            for &(row, x) in col {
                v[row] = rat(x);
            }
            v
        })
        .collect()
}

fn unit_columns(n: usize) -> Vec<Vec<BigRat>> {
    (0..n).map(|k| (0..n).map(|r| if r == k { rat(1) } else { rat(0) }).collect()).collect()
}

/// For each position `j` of the classical `C^i_Φ`, an isomorphism onto the
/// same position of the target complex: `m ↦ κ(e_{top} ⊗ m)` and
/// `γ ↦ η(1 ⊗ γ)` for `C^{i,1}`, coordinate identifications for `C^{i-1,g}`.
pub fn new_old_isomorphisms(
    f: usize,
    g: usize,
    i: i64,
    target: NewOldTarget,
    hooks: &HookSource,
) -> Result<Vec<(i64, QMatrix)>> {
    let shape = super::classical_shape(f, g, i);
    let gi = g as i64;
    let mut out = Vec::new();
    for p in shape.iter().filter(|p| p.rank > 0) {
        let j = p.index;
        let m = match (&p.module, target) {
            (Module::WedgeTopSym { r, q, .. }, NewOldTarget::FirstColumn) => {
                let basis = hooks.basis(HookKind::L, g, gi - 1, q + 1)?;
                let images = map_columns(&kappa_map(g, gi, *q, MapVariant::Standard));
                wedge_times_coords(f, *r, &images, &basis)?
            }
            (Module::WedgeDivided { r, q: 0 }, NewOldTarget::FirstColumn) => {
                QMatrix::identity(wedge_basis(f, *r).len())
            }
            (Module::WedgeDivided { r, q }, NewOldTarget::FirstColumn) => {
                let basis = hooks.basis(HookKind::K, g, 1, q - 1)?;
                let images = map_columns(&eta_map(g, 0, *q, MapVariant::Standard));
                wedge_times_coords(f, *r, &images, &basis)?
            }
            (Module::WedgeTopSym { r, q: 0, .. }, NewOldTarget::LastColumn) if j == i => {
                QMatrix::identity(wedge_basis(f, *r).len())
            }
            (Module::WedgeTopSym { r, q, .. }, NewOldTarget::LastColumn) => {
                let basis = hooks.basis(HookKind::L, g, 0, *q)?;
                wedge_times_coords(f, *r, &unit_columns(basis.ambient_dim()), &basis)?
            }
            (Module::WedgeDivided { r, q }, NewOldTarget::LastColumn) => {
                let basis = hooks.basis(HookKind::K, g, gi, *q)?;
                wedge_times_coords(f, *r, &unit_columns(basis.ambient_dim()), &basis)?
            }
            (m, _) => return Err(Error::Invariant(format!("unexpected classical module {m}"))),
        };
        out.push((j, m));
    }
    Ok(out)
}

/// Outcome of comparing two complexes through position-wise isomorphisms `ψ_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CommutingSigns {
    /// `(j, ε_j)` with `ψ_{j-1} d_j = ε_j d'_j ψ_j`; `ε_j = 0` if neither sign works.
    pub squares: Vec<(i64, i32)>,
    /// `(j, σ_j)` such that `σ_j ψ_j` is a chain isomorphism.
    pub position_signs: Vec<(i64, i32)>,
    /// Positions where `ψ_j` is not an invertible square matrix.
    pub singular: Vec<i64>,
}

impl CommutingSigns {
    pub fn holds(&self) -> bool {
        self.singular.is_empty() && self.squares.iter().all(|&(_, e)| e != 0)
    }

    /// Compares `src` with `tgt` through the given isomorphisms.
    pub fn discover(
        src: &ChainComplex<MultiPoly>,
        tgt: &ChainComplex<MultiPoly>,
        isos: &[(i64, QMatrix)],
    ) -> Result<Self> {
        let iso = |j: i64| isos.iter().find(|(k, _)| *k == j).map(|(_, m)| m);
        let mut singular = Vec::new();
        for (j, m) in isos {
            let want = (tgt.rank_at(*j), src.rank_at(*j));
            if m.shape() != want {
                return Err(Error::DimensionMismatch(format!(
                    "isomorphism at {j} is {:?}, ranks require {:?}",
                    m.shape(),
                    want
                )));
            }
            if m.rows() != m.cols() || rank(m) != m.rows() {
                singular.push(*j);
            }
        }
        let mut squares = Vec::new();
        let (Some(lo), Some(hi)) = (src.lowest(), src.highest()) else {
            return Ok(CommutingSigns { squares, position_signs: Vec::new(), singular });
        };
        for j in lo + 1..=hi {
            let (Some(d), Some(psi_hi), Some(psi_lo)) = (src.differential(j), iso(j), iso(j - 1)) else {
                continue;
            };
            let lhs = lift(psi_lo).mul(d);
            let rhs = match tgt.differential(j) {
                Some(dt) => dt.mul(&lift(psi_hi)),
                None => crate::polyring::PolyMatrix::zeros(lhs.rows(), lhs.cols()),
            };
            let eps = if lhs == rhs {
                1
            } else if lhs == rhs.negated() {
                -1
            } else {
                0
            };
            squares.push((j, eps));
        }
        let mut position_signs = vec![(lo, 1)];
        for &(j, e) in &squares {
            let prev = position_signs.last().map_or(1, |p| p.1);
            position_signs.push((j, prev * if e == 0 { 1 } else { e }));
        }
        Ok(CommutingSigns { squares, position_signs, singular })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{build_cia, build_classical};
    use crate::differentials::Tamper;
    use crate::multilinear::HookCache;
    use crate::polyring::generic_matrix;

    #[test]
    fn pairing_is_perfect() {
        let cache = HookCache::new(None);
        let hooks = HookSource::new(&cache, Tamper::None);
        for (p, b) in [(1, 1), (1, 2), (2, 1), (0, 2), (2, 2)] {
            let m = pairing_matrix(3, p, b, &hooks).unwrap();
            assert_eq!(m.rows(), m.cols(), "({p},{b})");
            assert_eq!(rank(&m), m.rows(), "({p},{b})");
        }
    }

    #[test]
    fn dual_profile_is_involutive() {
        let cache = HookCache::new(None);
        let hooks = HookSource::new(&cache, Tamper::None);
        let c = build_cia(&generic_matrix(4, 2), 1, 1, &hooks).unwrap();
        let dd = dual_twisted(&dual_twisted(&c));
        assert_eq!(dd.rank_profile(), c.rank_profile());
        assert_eq!(dd.twists(), c.twists());
        assert_eq!(dd.differentials, c.differentials);
    }

    #[test]
    fn duality_squares_commute_up_to_sign() {
        let cache = HookCache::new(None);
        let hooks = HookSource::new(&cache, Tamper::None);
        for (f, g) in [(3, 2), (4, 3)] {
            let phi = generic_matrix(f, g);
            for i in -1..=(f as i64 - g as i64) {
                for a in 1..=g as i64 {
                    let c = build_cia(&phi, i, a, &hooks).unwrap();
                    let partner = build_cia(&phi, f as i64 - g as i64 - i - 1, g as i64 + 1 - a, &hooks).unwrap();
                    let d = dual_twisted(&partner);
                    assert_eq!(d.rank_profile(), c.rank_profile());
                    assert_eq!(d.twists(), c.twists());
                    let isos = duality_isomorphisms(f, g, i, a, &hooks).unwrap();
                    let signs = CommutingSigns::discover(&c, &d, &isos).unwrap();
                    assert!(signs.holds(), "({f},{g},{i},{a}): {signs:?}");
                }
            }
        }
    }

    #[test]
    fn classical_matches_both_columns() {
        let cache = HookCache::new(None);
        let hooks = HookSource::new(&cache, Tamper::None);
        let phi = generic_matrix(4, 2);
        for i in -1..=3 {
            let old = build_classical(&phi, i, &hooks).unwrap();
            for (target, (ti, ta)) in [(NewOldTarget::FirstColumn, (i, 1)), (NewOldTarget::LastColumn, (i - 1, 2))] {
                let new = build_cia(&phi, ti, ta, &hooks).unwrap();
                assert_eq!(old.rank_profile(), new.rank_profile(), "{i} {target:?}");
                assert_eq!(old.twists(), new.twists(), "{i} {target:?}");
                let isos = new_old_isomorphisms(4, 2, i, target, &hooks).unwrap();
                let signs = CommutingSigns::discover(&old, &new, &isos).unwrap();
                assert!(signs.holds(), "{i} {target:?}: {signs:?}");
            }
        }
    }
}
