//! Materialized complexes over the polynomial ring.

use super::shape::{cia_shape, classical_shape, knp_shape, lnp_shape, Shape};
use super::{ChainComplex, Module};
use crate::differentials::{eta_phi, hook_differential, kos_phi, patch_in, patch_out, HookSource};
use crate::error::{Error, Result};
use crate::multilinear::HookKind;
use crate::polyring::{var_span, PolyMatrix};

/// The map `C_j → C_{j-1}` determined by the two module descriptions.
fn differential(phi: &PolyMatrix, src: &Module, tgt: &Module, hooks: &HookSource) -> Result<PolyMatrix> {
    let (f, g) = (phi.rows(), phi.cols());
    let (rs, rt) = (src.rank(f, g), tgt.rank(f, g));
    if rs == 0 || rt == 0 {
        return Ok(PolyMatrix::zeros(rt, rs));
    }
    let gi = g as i64;
    let m = match (src, tgt) {
        (Module::WedgeHook { r, kind, p, q }, Module::WedgeHook { kind: tk, .. }) if kind == tk => {
            hook_differential(phi, *r, *kind, *p, *q, hooks)?
        }
        (Module::WedgeHook { r, kind: HookKind::K, p, q: 0 }, Module::Wedge { .. }) => patch_in(phi, *r, *p),
        (Module::Wedge { r }, Module::WedgeHook { kind: HookKind::L, p, q: 1, .. }) => {
            patch_out(phi, *r, gi - p, hooks)?
        }
        (Module::WedgeTopSym { r, q, .. }, Module::WedgeTopSym { .. }) => kos_phi(phi, *r, *q),
        (Module::WedgeDivided { r, q: 0 }, Module::WedgeTopSym { .. }) => patch_in(phi, *r, gi),
        (Module::WedgeDivided { r, q }, Module::WedgeDivided { .. }) => eta_phi(phi, *r, *q),
        _ => {
            return Err(Error::Invariant(format!("no differential from {src} to {tgt}")));
        }
    };
    if m.shape() != (rt, rs) {
        return Err(Error::Invariant(format!(
            "map {src} → {tgt} has shape {:?}, ranks require {:?}",
            m.shape(),
            (rt, rs)
        )));
    }
    Ok(m)
}

fn materialize(phi: &PolyMatrix, name: String, shape: Shape, hooks: &HookSource) -> Result<ChainComplex> {
    let differentials =
        shape.windows(2).map(|w| differential(phi, &w[1].module, &w[0].module, hooks)).collect::<Result<Vec<_>>>()?;
    let c = ChainComplex { f: phi.rows(), g: phi.cols(), nvars: var_span(phi), name, positions: shape, differentials };
    c.check_shapes()?;
    Ok(c)
}

fn check_sizes(phi: &PolyMatrix) -> Result<()> {
    if phi.cols() > phi.rows() {
        return Err(Error::InvalidParameters(format!("need g <= f, got a {}x{} matrix", phi.rows(), phi.cols())));
    }
    Ok(())
}

/// `C^{i,a}_Φ` for `0 ≤ a ≤ g + 1`; the end values give the degenerate complexes.
pub fn build_cia(phi: &PolyMatrix, i: i64, a: i64, hooks: &HookSource) -> Result<ChainComplex> {
    check_sizes(phi)?;
    let g = phi.cols() as i64;
    if !(0..=g + 1).contains(&a) {
        return Err(Error::InvalidParameters(format!("a = {a} outside 0..={}", g + 1)));
    }
    let shape = cia_shape(phi.rows(), phi.cols(), i, a);
    materialize(phi, format!("C^{{{i},{a}}}"), shape, hooks)
}

/// The classical complex `C^i_Φ`.
pub fn build_classical(phi: &PolyMatrix, i: i64, hooks: &HookSource) -> Result<ChainComplex> {
    check_sizes(phi)?;
    let shape = classical_shape(phi.rows(), phi.cols(), i);
    materialize(phi, format!("C^{{{i}}}"), shape, hooks)
}

/// `K^{N,p}_Φ`.
pub fn build_knp(phi: &PolyMatrix, n: i64, p: i64, hooks: &HookSource) -> Result<ChainComplex> {
    let shape = knp_shape(phi.rows(), phi.cols(), n, p);
    materialize(phi, format!("K^{{{n},{p}}}"), shape, hooks)
}

/// `L^{N,p}_Φ`.
pub fn build_lnp(phi: &PolyMatrix, n: i64, p: i64, hooks: &HookSource) -> Result<ChainComplex> {
    let shape = lnp_shape(phi.rows(), phi.cols(), n, p);
    materialize(phi, format!("L^{{{n},{p}}}"), shape, hooks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::differentials::Tamper;
    use crate::exactnum::rat;
    use crate::exactnum::QMatrix;
    use crate::multilinear::HookCache;
    use crate::polyring::{generic_matrix, lift};
    use num_traits::Signed;

    fn box_is_complex(f: usize, g: usize) {
        let cache = HookCache::new(None);
        let hooks = HookSource::new(&cache, Tamper::None);
        let phi = generic_matrix(f, g);
        for i in -1..=(f as i64 - g as i64) {
            for a in 1..=g as i64 {
                let c = build_cia(&phi, i, a, &hooks).unwrap();
                assert_eq!(c.composite_witness(), None, "C^{{{i},{a}}} for {f}x{g}");
                c.check_homogeneous().unwrap();
                assert_eq!(c.length_report(), Some((0, f as i64 - g as i64 + 1)));
            }
        }
    }

    #[test]
    fn generic_3_2_box() {
        box_is_complex(3, 2);
    }

    #[test]
    fn generic_4_3_box() {
        box_is_complex(4, 3);
    }

    #[test]
    fn example_shape_4_3() {
        let cache = HookCache::new(None);
        let hooks = HookSource::new(&cache, Tamper::None);
        let c = build_cia(&generic_matrix(4, 3), 0, 2, &hooks).unwrap();
        assert_eq!(c.rank_profile(), vec![(0, 3), (1, 6), (2, 3)]);
    }

    #[test]
    fn degenerate_and_classical() {
        let cache = HookCache::new(None);
        let hooks = HookSource::new(&cache, Tamper::None);
        let phi = generic_matrix(3, 2);
        let c = build_cia(&phi, 0, 0, &hooks).unwrap();
        assert_eq!(c.rank_profile(), vec![(1, 1), (2, 1)]);
        assert!(c.differentials[0].get(0, 0).is_constant());
        let top = build_cia(&phi, 0, 3, &hooks).unwrap();
        assert_eq!(top.length_report(), Some((1, 1)));
        assert!(build_cia(&phi, 0, 4, &hooks).is_err());
        for i in -1..=2 {
            let c = build_classical(&phi, i, &hooks).unwrap();
            assert_eq!(c.composite_witness(), None);
            c.check_homogeneous().unwrap();
        }
        let en = build_classical(&phi, 0, &hooks).unwrap();
        assert_eq!(en.rank_profile(), vec![(0, 1), (1, 3), (2, 2)]);
    }

    #[test]
    fn weyl_and_schur_pieces_are_complexes() {
        let cache = HookCache::new(None);
        let hooks = HookSource::new(&cache, Tamper::None);
        let phi = generic_matrix(4, 2);
        for n in 0..=4 {
            for p in 0..=2 {
                assert_eq!(build_knp(&phi, n, p, &hooks).unwrap().composite_witness(), None);
                assert_eq!(build_lnp(&phi, n, p, &hooks).unwrap().composite_witness(), None);
            }
        }
    }

    #[test]
    fn numeric_matrix_builds() {
        let cache = HookCache::new(None);
        let hooks = HookSource::new(&cache, Tamper::None);
        let phi = lift(&QMatrix::identity(2));
        let c = build_cia(&phi, 0, 1, &hooks).unwrap().to_numeric().unwrap();
        assert_eq!(c.nvars, 0);
        assert_eq!(c.differentials[0].get(0, 0).clone().abs(), rat(1));
    }
}
