use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::basis::{subset_rank, wedge_basis};
use crate::error::{Error, Result};
use crate::exactnum::{binomial_ext, integer_nullspace_int, BigRat, QAlgebra, QMatrix, SpanSolver, ZMatrix};
use crate::polyring::monomials_of_degree;

/// Which kernel a hook module is: `L = ker κ` on `∧^p ⊗ Sym_q`, `K = ker η` on `∧^p ⊗ D_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HookKind {
    L,
    K,
}

impl HookKind {
    pub fn symbol(self) -> char {
        match self {
            HookKind::L => 'L',
            HookKind::K => 'K',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'L' => Some(HookKind::L),
            'K' => Some(HookKind::K),
            _ => None,
        }
    }
}

/// Sign convention for the defining maps. `FlipFirstTerm` negates the first
/// summand of every column and exists only to exercise the verifiers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MapVariant {
    #[default]
    Standard,
    FlipFirstTerm,
}

/// Tensor basis of `∧^p V ⊗ Sym_q V` (or `D_q V`) for `V` of rank `d`,
/// exterior factor major.
#[derive(Clone, Debug)]
pub struct Ambient {
    pub d: usize,
    pub p: i64,
    pub q: i64,
    wedges: Vec<Vec<usize>>,
    powers: Vec<Vec<u32>>,
    power_lookup: HashMap<Vec<u32>, usize>,
}

impl Ambient {
    pub fn new(d: usize, p: i64, q: i64) -> Self {
        let wedges = wedge_basis(d, p);
        let powers = monomials_of_degree(d, q);
        let power_lookup = powers.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Ambient { d, p, q, wedges, powers, power_lookup }
    }

    pub fn len(&self) -> usize {
        self.wedges.len() * self.powers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn wedge_count(&self) -> usize {
        self.wedges.len()
    }

    pub fn power_count(&self) -> usize {
        self.powers.len()
    }

    pub fn element(&self, idx: usize) -> (&[usize], &[u32]) {
        let np = self.powers.len();
        (&self.wedges[idx / np], &self.powers[idx % np])
    }

    pub fn index_of(&self, s: &[usize], m: &[u32]) -> Option<usize> {
        let mi = *self.power_lookup.get(m)?;
        Some(subset_rank(self.d, s) * self.powers.len() + mi)
    }

    /// Multidegree of a basis element: indicator of the subset plus the exponents.
    pub fn content(&self, idx: usize) -> Vec<u32> {
        let (s, m) = self.element(idx);
        let mut c = m.to_vec();
        for &x in s {
            c[x] += 1;
        }
        c
    }
}

/// Integer matrix stored by sparse columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMap {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(usize, i64)>>,
}

impl SparseIntMap {
    pub fn to_dense(&self) -> ZMatrix {
        let mut m = ZMatrix::zeros(self.rows, self.cols);
        for (c, col) in self.columns.iter().enumerate() {
            for &(r, v) in col {
                m.set(r, c, BigInt::from(v));
            }
        }
        m
    }

    /// Image of a sparse integer column.
    pub fn apply(&self, v: &[(usize, BigInt)]) -> Vec<(usize, BigInt)> {
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (c, x) in v {
            for &(r, s) in &self.columns[*c] {
                *acc.entry(r).or_insert_with(BigInt::zero) += x * s;
            }
        }
        acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
    }
}

/// `κ : ∧^a V ⊗ Sym_b V → ∧^{a-1} V ⊗ Sym_{b+1} V`,
/// `e_S ⊗ m ↦ Σ_{s ∈ S} (-1)^{pos(s)-1} e_{S∖s} ⊗ x_s m`.
pub fn kappa_map(d: usize, a: i64, b: i64, variant: MapVariant) -> SparseIntMap {
    let src = Ambient::new(d, a, b);
    let tgt = Ambient::new(d, a - 1, b + 1);
    let columns = (0..src.len())
        .map(|idx| {
            let (s, m) = src.element(idx);
            let mut col = Vec::with_capacity(s.len());
            for (pos, &x) in s.iter().enumerate() {
                let rest: Vec<usize> = s.iter().copied().filter(|&y| y != x).collect();
                let mut mm = m.to_vec();
                mm[x] += 1;
                let mut sign = if pos % 2 == 0 { 1 } else { -1 };
                if variant == MapVariant::FlipFirstTerm && pos == 0 {
                    sign = -sign;
                }
                let r = tgt.index_of(&rest, &mm).expect("target basis element");
                col.push((r, sign));
            }
            col.sort_unstable();
            col
        })
        .collect();
    SparseIntMap { rows: tgt.len(), cols: src.len(), columns }
}

/// `η : ∧^a V ⊗ D_b V → ∧^{a+1} V ⊗ D_{b-1} V`,
/// `e_S ⊗ γ^(α) ↦ Σ_{j ∉ S, α_j > 0} (-1)^{pos(j in S∪j)-1} e_{S∪j} ⊗ γ^(α - e_j)`.
pub fn eta_map(d: usize, a: i64, b: i64, variant: MapVariant) -> SparseIntMap {
    let src = Ambient::new(d, a, b);
    let tgt = Ambient::new(d, a + 1, b - 1);
    let columns = (0..src.len())
        .map(|idx| {
            let (s, alpha) = src.element(idx);
            let mut col = Vec::new();
            let mut first = true;
            for j in 0..d {
                if s.contains(&j) || alpha[j] == 0 {
                    continue;
                }
                let mut t = s.to_vec();
                t.push(j);
                t.sort_unstable();
                let pos = t.iter().position(|&y| y == j).unwrap();
                let mut aa = alpha.to_vec();
                aa[j] -= 1;
                let mut sign = if pos % 2 == 0 { 1 } else { -1 };
                if variant == MapVariant::FlipFirstTerm && first {
                    sign = -sign;
                }
                first = false;
                let r = tgt.index_of(&t, &aa).expect("target basis element");
                col.push((r, sign));
            }
            col.sort_unstable();
            col
        })
        .collect();
    SparseIntMap { rows: tgt.len(), cols: src.len(), columns }
}

pub fn kappa_matrix(d: usize, a: i64, b: i64) -> ZMatrix {
    kappa_map(d, a, b, MapVariant::Standard).to_dense()
}

pub fn eta_matrix(d: usize, a: i64, b: i64) -> ZMatrix {
    eta_map(d, a, b, MapVariant::Standard).to_dense()
}

/// The map whose kernel defines the hook module.
pub fn defining_map(kind: HookKind, d: usize, p: i64, q: i64, variant: MapVariant) -> SparseIntMap {
    match kind {
        HookKind::L => kappa_map(d, p, q, variant),
        HookKind::K => eta_map(d, p, q, variant),
    }
}

/// Rank predicted by the binomial formulas; zero whenever the ambient module is zero.
pub fn hook_rank_formula(kind: HookKind, d: usize, p: i64, q: i64) -> usize {
    if p < 0 || q < 0 || p > d as i64 {
        return 0;
    }
    let d = d as i64;
    let v = match kind {
        HookKind::L => binomial_ext(d + q - 1, p + q) * binomial_ext(p + q - 1, p),
        HookKind::K => binomial_ext(d + q, p + q) * binomial_ext(p + q - 1, q),
    };
    assert!(v >= 0, "rank formula produced a negative value");
    v as usize
}

#[derive(Clone, Debug)]
struct Block {
    ambient: Vec<usize>,
    hook_cols: Vec<usize>,
    solver: Option<SpanSolver>,
}

/// Lattice basis of a hook module inside its ambient tensor product.
///
/// Columns are the Hermite normal form of `ker ∩ Z^ambient`, stored sparsely.
/// Both the defining map and the basis split along multidegree, which the
/// coordinate solver exploits.
#[derive(Clone, Debug)]
pub struct HookBasis {
    pub kind: HookKind,
    pub d: usize,
    pub p: i64,
    pub q: i64,
    ambient: Ambient,
    columns: Vec<Vec<(usize, BigInt)>>,
    blocks: Vec<Block>,
    block_of: Vec<usize>,
}

fn content_blocks(amb: &Ambient) -> (Vec<Vec<usize>>, Vec<usize>) {
    let mut groups: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for idx in 0..amb.len() {
        groups.entry(amb.content(idx)).or_default().push(idx);
    }
    let groups: Vec<Vec<usize>> = groups.into_values().collect();
    let mut block_of = vec![0; amb.len()];
    for (b, g) in groups.iter().enumerate() {
        for &i in g {
            block_of[i] = b;
        }
    }
    (groups, block_of)
}

impl HookBasis {
    /// Compute the basis from scratch.
    pub fn compute(kind: HookKind, d: usize, p: i64, q: i64, variant: MapVariant) -> Result<Self> {
        let amb = Ambient::new(d, p, q);
        let map = defining_map(kind, d, p, q, variant);
        let (groups, _) = content_blocks(&amb);
        let mut columns: Vec<Vec<(usize, BigInt)>> = Vec::new();
        for group in &groups {
            let mut rows: Vec<usize> = group.iter().flat_map(|&c| map.columns[c].iter().map(|e| e.0)).collect();
            rows.sort_unstable();
            rows.dedup();
            let local_row: HashMap<usize, usize> = rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
            let mut local = ZMatrix::zeros(rows.len(), group.len());
            for (j, &c) in group.iter().enumerate() {
                for &(r, v) in &map.columns[c] {
                    local.set(local_row[&r], j, BigInt::from(v));
                }
            }
            let ker = integer_nullspace_int(&local);
            for k in 0..ker.cols() {
                let col: Vec<(usize, BigInt)> = (0..group.len())
                    .filter(|&j| !ker.get(j, k).is_zero())
                    .map(|j| (group[j], ker.get(j, k).clone()))
                    .collect();
                columns.push(col);
            }
        }
        columns.sort_by_key(|c| c[0].0);
        let basis = Self::from_columns(kind, d, p, q, columns)?;
        if variant == MapVariant::Standard {
            let expected = hook_rank_formula(kind, d, p, q);
            if basis.rank() != expected {
                return Err(Error::RankFormulaMismatch { kind: kind.symbol(), d, p, q, found: basis.rank(), expected });
            }
        }
        Ok(basis)
    }

    /// Assemble from sparse columns (sorted rows, nonzero values).
    pub fn from_columns(kind: HookKind, d: usize, p: i64, q: i64, columns: Vec<Vec<(usize, BigInt)>>) -> Result<Self> {
        let ambient = Ambient::new(d, p, q);
        let (groups, block_of) = content_blocks(&ambient);
        let mut blocks: Vec<Block> =
            groups.into_iter().map(|ambient| Block { ambient, hook_cols: Vec::new(), solver: None }).collect();
        for (k, col) in columns.iter().enumerate() {
            let Some(&(r0, _)) = col.first() else {
                return Err(Error::DimensionMismatch("zero hook column".into()));
            };
            if col.iter().any(|&(r, _)| r >= ambient.len()) {
                return Err(Error::DimensionMismatch("hook column row out of range".into()));
            }
            let b = block_of[r0];
            if col.iter().any(|&(r, _)| block_of[r] != b) {
                return Err(Error::DimensionMismatch("hook column mixes multidegrees".into()));
            }
            blocks[b].hook_cols.push(k);
        }
        for block in &mut blocks {
            if block.hook_cols.is_empty() {
                continue;
            }
            let pos: HashMap<usize, usize> = block.ambient.iter().enumerate().map(|(i, &r)| (r, i)).collect();
            let mut local = QMatrix::zeros(block.ambient.len(), block.hook_cols.len());
            for (j, &k) in block.hook_cols.iter().enumerate() {
                for (r, v) in &columns[k] {
                    local.set(pos[r], j, BigRat::from_integer(v.clone()));
                }
            }
            block.solver = Some(SpanSolver::new(&local)?);
        }
        Ok(HookBasis { kind, d, p, q, ambient, columns, blocks, block_of })
    }

    pub fn rank(&self) -> usize {
        self.columns.len()
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient.len()
    }

    pub fn columns(&self) -> &[Vec<(usize, BigInt)>] {
        &self.columns
    }

    pub fn to_dense(&self) -> ZMatrix {
        let mut m = ZMatrix::zeros(self.ambient_dim(), self.rank());
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    /// Coordinates of an ambient vector in the hook basis, or `NotInSpan`.
    pub fn coords<T: QAlgebra>(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch(format!(
                "ambient vector of length {} for dimension {}",
                v.len(),
                self.ambient_dim()
            )));
        }
        let mut out = vec![T::zero(); self.rank()];
        let mut touched: Vec<usize> =
            v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, _)| self.block_of[i]).collect();
        touched.sort_unstable();
        touched.dedup();
        for b in touched {
            let block = &self.blocks[b];
            let Some(solver) = &block.solver else {
                return Err(Error::NotInSpan);
            };
            let local: Vec<T> = block.ambient.iter().map(|&i| v[i].clone()).collect();
            let x = solver.solve(&local)?;
            for (j, &k) in block.hook_cols.iter().enumerate() {
                out[k] = x[j].clone();
            }
        }
        Ok(out)
    }

    /// Coordinates of a sparse rational ambient vector.
    pub fn coords_sparse(&self, v: &[(usize, BigRat)]) -> Result<Vec<(usize, BigRat)>> {
        let mut by_block: BTreeMap<usize, Vec<(usize, BigRat)>> = BTreeMap::new();
        for (i, x) in v {
            if !Zero::is_zero(x) {
                by_block.entry(self.block_of[*i]).or_default().push((*i, x.clone()));
            }
        }
        let mut out = Vec::new();
        for (b, entries) in by_block {
            let block = &self.blocks[b];
            let Some(solver) = &block.solver else {
                return Err(Error::NotInSpan);
            };
            let pos: HashMap<usize, usize> = block.ambient.iter().enumerate().map(|(i, &r)| (r, i)).collect();
            let mut local = vec![BigRat::zero(); block.ambient.len()];
            for (i, x) in entries {
                local[pos[&i]] = x;
            }
            let x = solver.solve(&local)?;
            for (j, &k) in block.hook_cols.iter().enumerate() {
                if !Zero::is_zero(&x[j]) {
                    out.push((k, x[j].clone()));
                }
            }
        }
        out.sort_by_key(|e| e.0);
        Ok(out)
    }

    /// Whether the defining map kills every column.
    pub fn is_annihilated(&self, variant: MapVariant) -> bool {
        let map = defining_map(self.kind, self.d, self.p, self.q, variant);
        self.columns.iter().all(|c| map.apply(c).is_empty())
    }
}

/// Scalar matrix of the action of the `ell`-th basis vector on a hook module,
/// in hook coordinates: multiplication `Sym_q → Sym_{q+1}` on `L^p_q`, and
/// contraction `D_q → D_{q-1}` on `K^p_q`. Stored by sparse columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookAction {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(usize, BigRat)>>,
}

impl HookAction {
    pub fn to_dense(&self) -> QMatrix {
        let mut m = QMatrix::zeros(self.rows, self.cols);
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }
}

/// Image of an ambient basis element under the `ell`-th action, if nonzero.
pub fn act_on_ambient(kind: HookKind, src: &Ambient, tgt: &Ambient, idx: usize, ell: usize) -> Option<usize> {
    let (s, m) = src.element(idx);
    let mut mm = m.to_vec();
    match kind {
        HookKind::L => mm[ell] += 1,
        HookKind::K => {
            if mm[ell] == 0 {
                return None;
            }
            mm[ell] -= 1;
        }
    }
    tgt.index_of(s, &mm)
}

/// Restrict the `ell`-th action to hook coordinates, solving in the target span.
pub fn hook_action(src: &HookBasis, tgt: &HookBasis, ell: usize) -> Result<HookAction> {
    let kind = src.kind;
    let columns = src
        .columns()
        .iter()
        .map(|col| {
            let mut img: BTreeMap<usize, BigRat> = BTreeMap::new();
            for (i, v) in col {
                if let Some(j) = act_on_ambient(kind, src.ambient(), tgt.ambient(), *i, ell) {
                    *img.entry(j).or_insert_with(BigRat::zero) += BigRat::from_integer(v.clone());
                }
            }
            let img: Vec<(usize, BigRat)> = img.into_iter().collect();
            tgt.coords_sparse(&img)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HookAction { rows: tgt.rank(), cols: src.rank(), columns })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{integer_nullspace_int, rat};

    #[test]
    fn kappa_example() {
        // κ(e1∧e2 ⊗ 1) = e2 ⊗ x1 - e1 ⊗ x2 in rank 2.
        let k = kappa_matrix(2, 2, 0);
        let tgt = Ambient::new(2, 1, 1);
        let col = k.column(0);
        let e2x1 = tgt.index_of(&[1], &[1, 0]).unwrap();
        let e1x2 = tgt.index_of(&[0], &[0, 1]).unwrap();
        assert_eq!(col[e2x1], BigInt::from(1));
        assert_eq!(col[e1x2], BigInt::from(-1));
        assert_eq!(col.iter().filter(|x| !x.is_zero()).count(), 2);
    }

    #[test]
    fn eta_example() {
        // η(1 ⊗ γ1^(2)) = e1 ⊗ γ1 for d = 2.
        let e = eta_matrix(2, 0, 2);
        let src = Ambient::new(2, 0, 2);
        let tgt = Ambient::new(2, 1, 1);
        let c = src.index_of(&[], &[2, 0]).unwrap();
        let r = tgt.index_of(&[0], &[1, 0]).unwrap();
        assert_eq!(*e.get(r, c), BigInt::from(1));
        assert_eq!(e.column(c).iter().filter(|x| !x.is_zero()).count(), 1);
    }

    #[test]
    fn transpose_of_kappa_is_eta() {
        for d in 1..4 {
            for a in 0..=d as i64 {
                for b in 0..3 {
                    assert_eq!(kappa_matrix(d, a, b).transpose(), eta_matrix(d, a - 1, b + 1));
                }
            }
        }
    }

    #[test]
    fn blockwise_basis_equals_dense_kernel() {
        for d in 1..4 {
            for p in 0..=d as i64 {
                for q in 0..4 {
                    for kind in [HookKind::L, HookKind::K] {
                        let b = HookBasis::compute(kind, d, p, q, MapVariant::Standard).unwrap();
                        let m = match kind {
                            HookKind::L => kappa_matrix(d, p, q),
                            HookKind::K => eta_matrix(d, p, q),
                        };
                        let dense = if m.rows() == 0 { ZMatrix::identity(m.cols()) } else { integer_nullspace_int(&m) };
                        assert_eq!(b.to_dense(), dense, "{kind:?} d={d} p={p} q={q}");
                    }
                }
            }
        }
    }

    #[test]
    fn low_rank_formulas() {
        assert_eq!(hook_rank_formula(HookKind::L, 3, 0, 0), 1);
        assert_eq!(hook_rank_formula(HookKind::K, 3, 0, 0), 1);
        assert_eq!(hook_rank_formula(HookKind::L, 3, 1, 1), 3);
        assert_eq!(hook_rank_formula(HookKind::K, 3, 2, 1), 8);
        assert_eq!(hook_rank_formula(HookKind::L, 3, -1, 2), 0);
        assert_eq!(hook_rank_formula(HookKind::L, 3, 4, 0), 0);
    }

    #[test]
    fn coordinates_round_trip() {
        let b = HookBasis::compute(HookKind::L, 3, 1, 2, MapVariant::Standard).unwrap();
        let dense = b.to_dense();
        let coeffs: Vec<BigRat> = (0..b.rank()).map(|i| rat(i as i64 - 2)).collect();
        let v = dense.map(|x| BigRat::from_integer(x.clone())).mul_vec(&coeffs);
        assert_eq!(b.coords(&v).unwrap(), coeffs);
        let mut bad = vec![BigRat::zero(); b.ambient_dim()];
        bad[0] = rat(1);
        assert_eq!(b.coords(&bad), Err(Error::NotInSpan));
    }
}
