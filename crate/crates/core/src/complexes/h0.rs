//! Presentations of `H_0(C^{i,a}_Φ)` built directly from `Φ`, without the complex.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::differentials::{ambient_action, HookSource};
use crate::error::{Error, Result};
use crate::exactnum::{compound, BigRat, QAlgebra, Ring};
use crate::multilinear::{merge_sign, subset_rank, wedge_basis, HookKind};
use crate::polyring::{var_span, MultiPoly, PolyMatrix};

/// Cokernel of `matrix : ⊕ R(-relation_twists) → R^generators`.
/// Generators sit in degree 0; `matrix` has one row per generator.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Presentation {
    pub generators: usize,
    pub relation_twists: Vec<i64>,
    #[serde(skip)]
    pub matrix: PolyMatrix,
    pub nvars: usize,
}

type Wedge = BTreeMap<Vec<usize>, MultiPoly>;

fn wedge_with_vector(w: &Wedge, v: &[MultiPoly]) -> Wedge {
    let mut out = Wedge::new();
    for (s, c) in w {
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let sign = merge_sign(s, &[k]);
            if sign == 0 {
                continue;
            }
            let mut t = s.clone();
            t.push(k);
            t.sort_unstable();
            let term = c.times(x);
            let slot = out.entry(t).or_insert_with(MultiPoly::zero);
            if sign > 0 {
                slot.add_assign_ref(&term);
            } else {
                *slot = slot.minus(&term);
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `i = -1`: columns `e_S ∧ Φ(e*_{t_1}) ∧ … ∧ Φ(e*_{t_a})` in `∧^{f-g+a} F`.
fn wedge_image(phi: &PolyMatrix, a: i64) -> Presentation {
    let (f, g) = (phi.rows(), phi.cols());
    let r = f as i64 - g as i64;
    let gens = wedge_basis(f, r + a).len();
    let columns: Vec<Wedge> = wedge_basis(f, r)
        .into_iter()
        .flat_map(|s| {
            wedge_basis(g, a).into_iter().map(move |t| {
                let mut w = Wedge::new();
                w.insert(s.clone(), MultiPoly::one());
                for &ell in &t {
                    w = wedge_with_vector(&w, &phi.column(ell));
                }
                w
            })
        })
        .collect();
    let mut matrix = PolyMatrix::zeros(gens, columns.len());
    for (c, w) in columns.iter().enumerate() {
        for (s, x) in w {
            matrix.set(subset_rank(f, s), c, x.clone());
        }
    }
    Presentation { generators: gens, relation_twists: vec![a; columns.len()], matrix, nvars: var_span(phi) }
}

/// `i ≥ 1`: `δ : F* ⊗ L^{g-a}_i G → L^{g-a}_{i+1} G`,
/// `e*_k ⊗ b ↦ Σ_ℓ Φ_{kℓ} x_ℓ b`, in hook coordinates.
fn delta(phi: &PolyMatrix, i: i64, a: i64, hooks: &HookSource) -> Result<Presentation> {
    let (f, g) = (phi.rows(), phi.cols());
    let p = g as i64 - a;
    let src = hooks.basis(HookKind::L, g, p, i)?;
    let tgt = hooks.basis(HookKind::L, g, p, i + 1)?;
    let acts: Vec<_> = (0..g).map(|ell| ambient_action(HookKind::L, g, p, i, ell)).collect();
    // coords of x_ℓ · b_c in the target basis
    let mut shifted: Vec<Vec<Vec<BigRat>>> = Vec::with_capacity(g);
    for act in &acts {
        let per_col = src
            .columns()
            .iter()
            .map(|col| {
                let mut v = vec![BigRat::zero(); tgt.ambient_dim()];
                for (idx, x) in col {
                    for (row, y) in &act.columns[*idx] {
                        v[*row] += BigRat::from_integer(x.clone()) * y;
                    }
                }
                tgt.coords(&v)
            })
            .collect::<Result<Vec<_>>>()?;
        shifted.push(per_col);
    }
    let mut matrix = PolyMatrix::zeros(tgt.rank(), f * src.rank());
    for k in 0..f {
        for c in 0..src.rank() {
            for (ell, per_col) in shifted.iter().enumerate() {
                let e = phi.get(k, ell);
                if e.is_zero() {
                    continue;
                }
                for (row, x) in per_col[c].iter().enumerate() {
                    if !x.is_zero() {
                        matrix.get_mut(row, k * src.rank() + c).add_assign_ref(&e.scale(x));
                    }
                }
            }
        }
    }
    Ok(Presentation { generators: tgt.rank(), relation_twists: vec![1; f * src.rank()], matrix, nvars: var_span(phi) })
}

/// Presentation of `H_0(C^{i,a}_Φ)`: the wedge image for `i = -1`,
/// `∧^{g+1-a} Φ*` for `i = 0`, and `δ` for `i ≥ 1`.
pub fn h0_presentation(phi: &PolyMatrix, i: i64, a: i64, hooks: &HookSource) -> Result<Presentation> {
    let g = phi.cols() as i64;
    if !(1..=g).contains(&a) || i < -1 {
        return Err(Error::InvalidParameters(format!(
            "H0 presentation needs 1 <= a <= g and i >= -1, got i={i}, a={a}"
        )));
    }
    match i {
        -1 => Ok(wedge_image(phi, a)),
        0 => {
            let k = g + 1 - a;
            let matrix = compound(&phi.transpose(), k as usize);
            Ok(Presentation {
                generators: matrix.rows(),
                relation_twists: vec![k; matrix.cols()],
                matrix,
                nvars: var_span(phi),
            })
        }
        _ => delta(phi, i, a, hooks),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::differentials::Tamper;
    use crate::multilinear::HookCache;
    use crate::polyring::generic_matrix;

    #[test]
    fn shapes() {
        let cache = HookCache::new(None);
        let hooks = HookSource::new(&cache, Tamper::None);
        let phi = generic_matrix(4, 3);
        let p = h0_presentation(&phi, 0, 2, &hooks).unwrap();
        assert_eq!(p.matrix.shape(), (3, 6));
        let p = h0_presentation(&phi, -1, 1, &hooks).unwrap();
        // ∧^2 F generated, relations ∧^1 F ⊗ G*
        assert_eq!(p.matrix.shape(), (6, 12));
        let p = h0_presentation(&phi, 1, 3, &hooks).unwrap();
        // L^0_2 = Sym_2 G, relations F* ⊗ Sym_1 G
        assert_eq!(p.matrix.shape(), (6, 12));
        assert!(h0_presentation(&phi, 0, 0, &hooks).is_err());
    }

    #[test]
    fn wedge_image_matches_minors_for_square() {
        let cache = HookCache::new(None);
        let hooks = HookSource::new(&cache, Tamper::None);
        let phi = generic_matrix(2, 2);
        let p = h0_presentation(&phi, -1, 2, &hooks).unwrap();
        assert_eq!(p.matrix.shape(), (1, 1));
        assert_eq!(p.matrix.get(0, 0).to_string(), "x1*x4 - x2*x3");
    }
}
