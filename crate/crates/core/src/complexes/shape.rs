//! Module-by-module shapes of the complexes, from the rank formulas alone.

use super::{normalize_twists, Module, Position};
use crate::multilinear::HookKind;

pub type Shape = Vec<Position>;

fn assemble(f: usize, g: usize, entries: impl IntoIterator<Item = (i64, Module, i64)>) -> Shape {
    let mut positions: Vec<Position> = entries
        .into_iter()
        .map(|(index, module, twist)| {
            let module = module.normalized(f, g);
            Position { index, rank: module.rank(f, g), module, twist }
        })
        .collect();
    let Some(first) = positions.iter().position(|p| p.rank > 0) else {
        return Vec::new();
    };
    let last = positions.iter().rposition(|p| p.rank > 0).unwrap_or(first);
    positions.truncate(last + 1);
    positions.drain(..first);
    normalize_twists(&mut positions);
    positions
}

/// Positions of `C^{i,a}_Φ`:
/// `∧^{f-j}F⊗L^{g-a}_{i+1-j}G` for `j ≤ i`, `∧^{f-g+a-i-1}F` at `i+1`,
/// `∧^{f-g+1-j}F⊗K^a_{j-i-2}(G*)` for `j ≥ i+2`.
pub fn cia_shape(f: usize, g: usize, i: i64, a: i64) -> Shape {
    let (fi, gi) = (f as i64, g as i64);
    let lo = i.min(-1);
    let hi = (fi - gi + 2).max(i + 2);
    assemble(
        f,
        g,
        (lo..=hi).map(|j| {
            if j <= i {
                let module = Module::WedgeHook { r: fi - j, kind: HookKind::L, p: gi - a, q: i + 1 - j };
                (j, module, j)
            } else if j == i + 1 {
                (j, Module::Wedge { r: fi - gi + a - i - 1 }, i + gi + 1 - a)
            } else {
                let module = Module::WedgeHook { r: fi - gi + 1 - j, kind: HookKind::K, p: a, q: j - i - 2 };
                (j, module, j + gi - 1)
            }
        }),
    )
}

/// Positions of the classical complex `C^i_Φ`:
/// `∧^{f-j}F⊗∧^gG⊗Sym_{i-j}G` for `j ≤ i` and `∧^{f-g-j+1}F⊗D_{j-i-1}(G*)` for `j > i`.
pub fn classical_shape(f: usize, g: usize, i: i64) -> Shape {
    let (fi, gi) = (f as i64, g as i64);
    let lo = i.min(-1);
    let hi = (fi - gi + 2).max(i + 2);
    assemble(
        f,
        g,
        (lo..=hi).map(|j| {
            if j <= i {
                (j, Module::WedgeTopSym { r: fi - j, g, q: i - j }, j)
            } else {
                (j, Module::WedgeDivided { r: fi - gi - j + 1, q: j - i - 1 }, j + gi - 1)
            }
        }),
    )
}

/// `[K^{N,p}_Φ]_j = ∧^{N-j}F⊗K^p_j(G*)`, `0 ≤ j ≤ N`.
pub fn knp_shape(f: usize, g: usize, n: i64, p: i64) -> Shape {
    assemble(f, g, (0..=n.max(0)).map(|j| (j, Module::WedgeHook { r: n - j, kind: HookKind::K, p, q: j }, j)))
}

/// `[L^{N,p}_Φ]_j = ∧^{f-j}F⊗L^p_{f-N-j}G`, except 0 at `(p, j) = (0, f-N)`.
pub fn lnp_shape(f: usize, g: usize, n: i64, p: i64) -> Shape {
    let fi = f as i64;
    assemble(
        f,
        g,
        (0..=(fi - n).max(0)).map(|j| {
            let module = if p == 0 && j == fi - n {
                Module::Zero
            } else {
                Module::WedgeHook { r: fi - j, kind: HookKind::L, p, q: fi - n - j }
            };
            (j, module, j)
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranks(s: &Shape) -> Vec<(i64, usize)> {
        s.iter().map(|p| (p.index, p.rank)).collect()
    }

    #[test]
    fn self_dual_shape_4_3() {
        let s = cia_shape(4, 3, 0, 2);
        assert_eq!(ranks(&s), vec![(0, 3), (1, 6), (2, 3)]);
        assert_eq!(s.iter().map(|p| p.twist).collect::<Vec<_>>(), vec![0, 2, 4]);
    }

    #[test]
    fn ranks_9_5_row() {
        let s = cia_shape(9, 5, 1, 2);
        let r: Vec<usize> = s.iter().map(|p| p.rank).collect();
        assert_eq!(r, vec![24, 45, 126, 360, 360, 105]);
        let alt: i64 = s.iter().map(|p| if p.index % 2 == 0 { p.rank as i64 } else { -(p.rank as i64) }).sum();
        assert_eq!(alt, 0);
    }

    #[test]
    fn degenerate_parameters() {
        let s = cia_shape(4, 2, 0, 3);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].index, 1);
        assert_eq!(s[0].module, Module::Wedge { r: 4 });
        let s = cia_shape(4, 2, 0, 0);
        assert_eq!(ranks(&s), vec![(1, 4), (2, 4)]);
    }

    #[test]
    fn eagon_northcott_shape() {
        let s = classical_shape(3, 2, 0);
        assert_eq!(ranks(&s), vec![(0, 1), (1, 3), (2, 2)]);
        assert_eq!(s.iter().map(|p| p.twist).collect::<Vec<_>>(), vec![0, 2, 3]);
    }

    #[test]
    fn weyl_and_schur_pieces() {
        let k = knp_shape(4, 2, 3, 0);
        assert_eq!(ranks(&k), vec![(0, 4)]);
        let l = lnp_shape(3, 2, 1, 1);
        assert_eq!(l.len(), 2);
        let l0 = lnp_shape(3, 2, 1, 0);
        assert_eq!(l0.last().unwrap().index, 1);
    }
}
