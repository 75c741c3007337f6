//! Matrices of `η_Φ`, `Kos_Φ`, their restrictions to hook modules, and the
//! two patch maps joining the Weyl half and the Schur half of `C^{i,a}_Φ`.
//!
//! Every map is a [`PolyMatrix`] whose rows and columns follow the
//! left-factor-major tensor order: exterior powers of `F` outermost.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{compound, rat, BigRat, QAlgebra, Ring};
use crate::multilinear::{
    act_on_ambient, hook_action, kappa_map, merge_sign, subset_rank, wedge_basis, Ambient, HookAction, HookBasis,
    HookCache, HookKey, HookKind, MapVariant, SparseIntMap,
};
use crate::polyring::{MultiPoly, PolyMatrix};

/// Deliberate sign errors, used to check that the verifiers notice them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Tamper {
    #[default]
    None,
    /// Negate the first summand of `κ`.
    FlipKappa,
    /// Negate the first summand of `η`.
    FlipEta,
}

impl Tamper {
    fn variant(self, kind: HookKind) -> MapVariant {
        match (self, kind) {
            (Tamper::FlipKappa, HookKind::L) | (Tamper::FlipEta, HookKind::K) => MapVariant::FlipFirstTerm,
            _ => MapVariant::Standard,
        }
    }
}

/// Supplies hook bases and their actions, honouring a [`Tamper`] setting.
/// Untampered requests go through a [`HookCache`].
pub struct HookSource<'a> {
    cache: &'a HookCache,
    tamper: Tamper,
    bases: Mutex<HashMap<HookKey, Arc<HookBasis>>>,
    actions: Mutex<HashMap<(HookKey, usize), Arc<HookAction>>>,
}

impl<'a> HookSource<'a> {
    pub fn new(cache: &'a HookCache, tamper: Tamper) -> Self {
        HookSource { cache, tamper, bases: Mutex::default(), actions: Mutex::default() }
    }

    pub fn tamper(&self) -> Tamper {
        self.tamper
    }

    fn tampered(&self, kind: HookKind) -> bool {
        self.tamper.variant(kind) != MapVariant::Standard
    }

    pub fn basis(&self, kind: HookKind, d: usize, p: i64, q: i64) -> Result<Arc<HookBasis>> {
        let key = HookKey::new(kind, d, p, q);
        if !self.tampered(kind) {
            return self.cache.basis(key);
        }
        if let Some(b) = self.bases.lock().unwrap().get(&key) {
            return Ok(b.clone());
        }
        let b = self.cache.basis_with(key, self.tamper.variant(kind))?;
        self.bases.lock().unwrap().insert(key, b.clone());
        Ok(b)
    }

    /// Action of the `ell`-th basis vector of `G` (or `G*`) on the hook module.
    pub fn action(&self, kind: HookKind, d: usize, p: i64, q: i64, ell: usize) -> Result<Arc<HookAction>> {
        let key = HookKey::new(kind, d, p, q);
        if !self.tampered(kind) {
            return self.cache.action(key, ell);
        }
        if let Some(a) = self.actions.lock().unwrap().get(&(key, ell)) {
            return Ok(a.clone());
        }
        let src = self.basis(kind, d, p, q)?;
        let tgt = self.basis(kind, d, p, neighbour(kind, q))?;
        let a = Arc::new(hook_action(&src, &tgt, ell)?);
        self.actions.lock().unwrap().insert((key, ell), a.clone());
        Ok(a)
    }

    /// `κ` with the configured sign convention.
    pub fn kappa(&self, d: usize, a: i64, b: i64) -> SparseIntMap {
        kappa_map(d, a, b, self.tamper.variant(HookKind::L))
    }
}

/// Degree of the symmetric or divided factor after one action.
pub fn neighbour(kind: HookKind, q: i64) -> i64 {
    match kind {
        HookKind::L => q + 1,
        HookKind::K => q - 1,
    }
}

/// Action of the `ell`-th basis vector on the whole ambient `∧^p ⊗ Sym_q`
/// (multiplication) or `∧^p ⊗ D_q` (contraction).
pub fn ambient_action(kind: HookKind, d: usize, p: i64, q: i64, ell: usize) -> HookAction {
    let src = Ambient::new(d, p, q);
    let tgt = Ambient::new(d, p, neighbour(kind, q));
    let columns = (0..src.len())
        .map(|i| match act_on_ambient(kind, &src, &tgt, i, ell) {
            Some(j) => vec![(j, rat(1))],
            None => Vec::new(),
        })
        .collect();
    HookAction { rows: tgt.len(), cols: src.len(), columns }
}

/// `∧^r F ⊗ X → ∧^{r+1} F ⊗ Y`, `f ⊗ x ↦ Σ_ℓ (f ∧ Φ(e*_ℓ)) ⊗ M_ℓ x`,
/// where `M_ℓ : X → Y` are the given scalar actions.
pub fn phi_tensor(phi: &PolyMatrix, r: i64, actions: &[impl AsRef<HookAction>]) -> PolyMatrix {
    let f = phi.rows();
    let (hr, hc) = actions.first().map(|a| (a.as_ref().rows, a.as_ref().cols)).unwrap_or((0, 0));
    let src = wedge_basis(f, r);
    let tgt_len = wedge_basis(f, r + 1).len();
    let mut m = PolyMatrix::zeros(tgt_len * hr, src.len() * hc);
    for (si, s) in src.iter().enumerate() {
        for k in (0..f).filter(|k| !s.contains(k)) {
            let sign = merge_sign(s, &[k]);
            let mut t = s.clone();
            t.push(k);
            t.sort_unstable();
            let ti = subset_rank(f, &t);
            for (ell, act) in actions.iter().enumerate() {
                let entry = phi.get(k, ell);
                if entry.is_zero() {
                    continue;
                }
                for (c, col) in act.as_ref().columns.iter().enumerate() {
                    for (c2, v) in col {
                        let coeff = if sign > 0 { v.clone() } else { -v.clone() };
                        m.get_mut(ti * hr + c2, si * hc + c).add_assign_ref(&entry.scale(&coeff));
                    }
                }
            }
        }
    }
    m
}

impl AsRef<HookAction> for HookAction {
    fn as_ref(&self) -> &HookAction {
        self
    }
}

/// `Kos_Φ : ∧^r F ⊗ Sym_q G → ∧^{r+1} F ⊗ Sym_{q+1} G`.
pub fn kos_phi(phi: &PolyMatrix, r: i64, q: i64) -> PolyMatrix {
    kos_phi_ambient(phi, r, 0, q)
}

/// `η_Φ : ∧^r F ⊗ D_q(G*) → ∧^{r+1} F ⊗ D_{q-1}(G*)`.
pub fn eta_phi(phi: &PolyMatrix, r: i64, q: i64) -> PolyMatrix {
    eta_phi_ambient(phi, r, 0, q)
}

/// `Kos_Φ` tensored with the identity of `∧^p G`:
/// `∧^r F ⊗ ∧^p G ⊗ Sym_q G → ∧^{r+1} F ⊗ ∧^p G ⊗ Sym_{q+1} G`.
pub fn kos_phi_ambient(phi: &PolyMatrix, r: i64, p: i64, q: i64) -> PolyMatrix {
    let acts: Vec<HookAction> = (0..phi.cols()).map(|ell| ambient_action(HookKind::L, phi.cols(), p, q, ell)).collect();
    phi_tensor(phi, r, &acts)
}

/// `η_Φ` tensored with the identity of `∧^p (G*)`.
pub fn eta_phi_ambient(phi: &PolyMatrix, r: i64, p: i64, q: i64) -> PolyMatrix {
    let acts: Vec<HookAction> = (0..phi.cols()).map(|ell| ambient_action(HookKind::K, phi.cols(), p, q, ell)).collect();
    phi_tensor(phi, r, &acts)
}

/// Matrix of an ambient map `∧^r F ⊗ A → ∧^{r'} F ⊗ B` between hook submodules,
/// found by pushing each source hook column through `m` and solving in the
/// target span, coefficient by coefficient.
pub fn restrict_to_hooks(m: &PolyMatrix, src: &HookBasis, tgt: &HookBasis) -> Result<PolyMatrix> {
    let (sa, ta) = (src.ambient_dim(), tgt.ambient_dim());
    let ns = m.cols().checked_div(sa).unwrap_or(0);
    let nt = m.rows().checked_div(ta).unwrap_or(0);
    if ns * sa != m.cols() || nt * ta != m.rows() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} map does not factor through ambients of size {ta} and {sa}",
            m.rows(),
            m.cols()
        )));
    }
    let (hs, ht) = (src.rank(), tgt.rank());
    let mut out = PolyMatrix::zeros(nt * ht, ns * hs);
    for s in 0..ns {
        for (c, col) in src.columns().iter().enumerate() {
            let mut image = vec![MultiPoly::zero(); m.rows()];
            for (i, v) in col {
                let coeff = BigRat::from_integer(v.clone());
                for (row, slot) in image.iter_mut().enumerate() {
                    let e = m.get(row, s * sa + i);
                    if !e.is_zero() {
                        slot.add_assign_ref(&e.scale(&coeff));
                    }
                }
            }
            for t in 0..nt {
                let block = &image[t * ta..(t + 1) * ta];
                if block.iter().all(Zero::is_zero) {
                    continue;
                }
                let coords = tgt.coords(block)?;
                for (k, x) in coords.into_iter().enumerate() {
                    out.set(t * ht + k, s * hs + c, x);
                }
            }
        }
    }
    Ok(out)
}

/// `Kos_Φ` or `η_Φ` on `∧^r F ⊗ L^p_q G` or `∧^r F ⊗ K^p_q(G*)`, in hook
/// coordinates, assembled from the hook actions.
pub fn hook_differential(
    phi: &PolyMatrix,
    r: i64,
    kind: HookKind,
    p: i64,
    q: i64,
    hooks: &HookSource,
) -> Result<PolyMatrix> {
    let g = phi.cols();
    let acts = (0..g).map(|ell| hooks.action(kind, g, p, q, ell)).collect::<Result<Vec<_>>>()?;
    Ok(phi_tensor(phi, r, &acts))
}

/// `∧^r F ⊗ ∧^a(G*) → ∧^{r+a} F`, `f ⊗ γ ↦ f ∧ (∧^a Φ)(γ)`.
pub fn patch_in(phi: &PolyMatrix, r: i64, a: i64) -> PolyMatrix {
    let f = phi.rows();
    let g = phi.cols();
    let src_f = wedge_basis(f, r);
    let src_g = wedge_basis(g, a);
    let tgt_len = wedge_basis(f, r + a).len();
    let mut m = PolyMatrix::zeros(tgt_len, src_f.len() * src_g.len());
    if a < 0 || src_g.is_empty() {
        return m;
    }
    let minors = compound(phi, a as usize);
    let us = wedge_basis(f, a);
    for (si, s) in src_f.iter().enumerate() {
        for (ui, u) in us.iter().enumerate() {
            let sign = merge_sign(s, u);
            if sign == 0 {
                continue;
            }
            let mut t = s.clone();
            t.extend(u);
            t.sort_unstable();
            let row = subset_rank(f, &t);
            for ti in 0..src_g.len() {
                let w = minors.get(ui, ti);
                if w.is_zero() {
                    continue;
                }
                let v = if sign > 0 { w.clone() } else { w.negated() };
                m.get_mut(row, si * src_g.len() + ti).add_assign_ref(&v);
            }
        }
    }
    m
}

/// `∧^r F → ∧^{r+g+1-a} F ⊗ L^{g-a}_1 G`,
/// `f ↦ Σ_T f ∧ (∧^{g+1-a} Φ)(e*_T) ⊗ κ(e_T ⊗ 1)`, in hook coordinates.
pub fn patch_out(phi: &PolyMatrix, r: i64, a: i64, hooks: &HookSource) -> Result<PolyMatrix> {
    let f = phi.rows();
    let g = phi.cols();
    let k = g as i64 + 1 - a;
    let basis = hooks.basis(HookKind::L, g, g as i64 - a, 1)?;
    let h = basis.rank();
    let src = wedge_basis(f, r);
    let tgt_len = wedge_basis(f, r + k).len();
    let mut m = PolyMatrix::zeros(tgt_len * h, src.len());
    if k < 0 || h == 0 || src.is_empty() || tgt_len == 0 {
        return Ok(m);
    }
    let kap = hooks.kappa(g, k, 0);
    let ts = wedge_basis(g, k);
    let minors = compound(phi, k as usize);
    let us = wedge_basis(f, k);
    let coords: Vec<Vec<BigRat>> = (0..ts.len())
        .map(|ti| {
            let mut v = vec![BigRat::zero(); basis.ambient_dim()];
            for &(row, x) in &kap.columns[ti] {
                v[row] = rat(x);
            }
            basis.coords(&v)
        })
        .collect::<Result<_>>()?;
    for (si, s) in src.iter().enumerate() {
        for (ui, u) in us.iter().enumerate() {
            let sign = merge_sign(s, u);
            if sign == 0 {
                continue;
            }
            let mut t = s.clone();
            t.extend(u);
            t.sort_unstable();
            let row = subset_rank(f, &t);
            for (ti, c) in coords.iter().enumerate() {
                let w = minors.get(ui, ti);
                if w.is_zero() {
                    continue;
                }
                for (hh, x) in c.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let coeff = if sign > 0 { x.clone() } else { -x.clone() };
                    m.get_mut(row * h + hh, si).add_assign_ref(&w.scale(&coeff));
                }
            }
        }
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Matrix;
    use crate::polyring::generic_matrix;

    fn source() -> (HookCache, Tamper) {
        (HookCache::new(None), Tamper::None)
    }

    #[test]
    fn kos_of_column_vector() {
        // f = 2, g = 1, Φ = (x1, x2)^T: 1 ↦ Φ(e*_1) ⊗ x_1.
        let phi = generic_matrix(2, 1);
        let m = kos_phi(&phi, 0, 0);
        assert_eq!(m.shape(), (2, 1));
        assert_eq!(m.get(0, 0), &MultiPoly::var(0));
        assert_eq!(m.get(1, 0), &MultiPoly::var(1));
        let e = eta_phi(&phi, 0, 1);
        assert_eq!(e, m);
        assert!(eta_phi(&phi, 0, 0).is_zero());
    }

    #[test]
    fn kos_and_eta_square_to_zero() {
        let phi = generic_matrix(3, 2);
        for r in 0..3 {
            for q in 0..3 {
                let k1 = kos_phi(&phi, r, q);
                let k2 = kos_phi(&phi, r + 1, q + 1);
                assert!(k2.mul(&k1).is_zero());
                let e1 = eta_phi(&phi, r, q + 2);
                let e2 = eta_phi(&phi, r + 1, q + 1);
                assert!(e2.mul(&e1).is_zero());
            }
        }
    }

    #[test]
    fn factored_route_matches_restriction() {
        let (cache, t) = source();
        let hooks = HookSource::new(&cache, t);
        let phi = generic_matrix(3, 2);
        for (kind, p, q) in [(HookKind::L, 1, 1), (HookKind::L, 1, 2), (HookKind::K, 1, 2), (HookKind::K, 2, 1)] {
            for r in 0..3 {
                let amb = match kind {
                    HookKind::L => kos_phi_ambient(&phi, r, p, q),
                    HookKind::K => eta_phi_ambient(&phi, r, p, q),
                };
                let src = hooks.basis(kind, 2, p, q).unwrap();
                let tgt = hooks.basis(kind, 2, p, neighbour(kind, q)).unwrap();
                let restricted = restrict_to_hooks(&amb, &src, &tgt).unwrap();
                let factored = hook_differential(&phi, r, kind, p, q, &hooks).unwrap();
                assert_eq!(restricted, factored, "{kind:?} p={p} q={q} r={r}");
            }
        }
    }

    #[test]
    fn restriction_detects_leaving_the_hook() {
        let src = HookBasis::compute(HookKind::L, 3, 2, 1, MapVariant::Standard).unwrap();
        // Identity on the ambient, but the target is the kernel of the wrong map.
        let tgt = HookBasis::compute(HookKind::L, 3, 2, 1, MapVariant::FlipFirstTerm).unwrap();
        let id = PolyMatrix::identity(src.ambient_dim());
        assert_eq!(restrict_to_hooks(&id, &src, &src).unwrap(), PolyMatrix::identity(src.rank()));
        assert_eq!(restrict_to_hooks(&id, &src, &tgt), Err(Error::NotInSpan));
    }

    #[test]
    fn square_patch_is_determinant() {
        let phi = generic_matrix(2, 2);
        let m = patch_in(&phi, 0, 2);
        assert_eq!(m.shape(), (1, 1));
        assert_eq!(m.get(0, 0).to_string(), "x1*x4 - x2*x3");
    }

    #[test]
    fn patch_out_with_a_equal_g_uses_entries() {
        let (cache, t) = source();
        let hooks = HookSource::new(&cache, t);
        let phi = generic_matrix(3, 2);
        let m = patch_out(&phi, 1, 2, &hooks).unwrap();
        // ∧^1 F → ∧^2 F ⊗ L^0_1 G = ∧^2 F ⊗ G.
        assert_eq!(m.shape(), (6, 3));
        for e in m.entries() {
            assert!(e.is_zero() || e.homogeneous_degree() == Some(1));
        }
        let zero = patch_out(&Matrix::zeros(3, 2), 1, 2, &hooks).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn patches_compose_to_zero() {
        let (cache, t) = source();
        let hooks = HookSource::new(&cache, t);
        for (f, g) in [(3usize, 2usize), (4, 3), (4, 2)] {
            let phi = generic_matrix(f, g);
            for i in -1..=(f - g) as i64 {
                for a in 1..=g as i64 {
                    let r_in = f as i64 - g as i64 - i - 1;
                    let pin = patch_in(&phi, r_in, a);
                    let pout = patch_out(&phi, r_in + a, a, &hooks).unwrap();
                    assert!(pout.mul(&pin).is_zero(), "f={f} g={g} i={i} a={a}");
                }
            }
        }
    }
}
