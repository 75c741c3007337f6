//! Chain complexes `C^{i,a}_Φ`, the classical family `C^i_Φ`, the Weyl and
//! Schur pieces `K^{N,p}_Φ` and `L^{N,p}_Φ`, their twisted duals and `H_0`
//! presentations.

mod build;
mod dual;
mod h0;
mod shape;

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub use build::{build_cia, build_classical, build_knp, build_lnp};
pub use dual::{
    dual_twisted, duality_isomorphisms, new_old_isomorphisms, pairing_matrix, CommutingSigns, NewOldTarget,
};
pub use h0::{h0_presentation, Presentation};
pub use shape::{cia_shape, classical_shape, knp_shape, lnp_shape, Shape};

use crate::error::{Error, Result};
use crate::exactnum::{binomial, BigRat, Matrix, QMatrix, Ring};
use crate::multilinear::{hook_rank_formula, HookKind};
use crate::polyring::{constant_part, specialize, MultiPoly};

/// A free module appearing in one of the complexes, described by its
/// tensor factors. `F` has rank `f`, `G` has rank `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Module {
    Zero,
    /// `∧^r F`.
    Wedge {
        r: i64,
    },
    /// `∧^r F ⊗ L^p_q G` or `∧^r F ⊗ K^p_q(G*)`.
    WedgeHook {
        r: i64,
        kind: HookKind,
        p: i64,
        q: i64,
    },
    /// `∧^r F ⊗ ∧^g G ⊗ Sym_q G`.
    WedgeTopSym {
        r: i64,
        g: usize,
        q: i64,
    },
    /// `∧^r F ⊗ D_q(G*)`.
    WedgeDivided {
        r: i64,
        q: i64,
    },
    Dual(Box<Module>),
}

impl Module {
    pub fn rank(&self, f: usize, g: usize) -> usize {
        let wedge = |r: i64| binomial(f as i64, r) as usize;
        let power = |q: i64| {
            if q < 0 {
                0
            } else {
                binomial(g as i64 + q - 1, q) as usize
            }
        };
        match self {
            Module::Zero => 0,
            Module::Wedge { r } => wedge(*r),
            Module::WedgeHook { r, kind, p, q } => wedge(*r) * hook_rank_formula(*kind, g, *p, *q),
            Module::WedgeTopSym { r, q, .. } => wedge(*r) * power(*q),
            Module::WedgeDivided { r, q } => wedge(*r) * power(*q),
            Module::Dual(m) => m.rank(f, g),
        }
    }

    /// Module label with zero ranks collapsed to `Zero`.
    pub fn normalized(self, f: usize, g: usize) -> Module {
        if self.rank(f, g) == 0 {
            Module::Zero
        } else {
            self
        }
    }
}

impl fmt::Display for Module {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Module::Zero => write!(out, "0"),
            Module::Wedge { r } => write!(out, "∧^{r}F"),
            Module::WedgeHook { r, kind: HookKind::L, p, q } => write!(out, "∧^{r}F⊗L^{p}_{q}G"),
            Module::WedgeHook { r, kind: HookKind::K, p, q } => write!(out, "∧^{r}F⊗K^{p}_{q}(G*)"),
            Module::WedgeTopSym { r, g, q } => write!(out, "∧^{r}F⊗∧^{g}G⊗Sym_{q}G"),
            Module::WedgeDivided { r, q } => write!(out, "∧^{r}F⊗D_{q}(G*)"),
            Module::Dual(m) => write!(out, "({m})*"),
        }
    }
}

/// One homological position of a complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Position {
    pub index: i64,
    pub module: Module,
    pub rank: usize,
    /// Internal degree shift: the module is `R(-twist)^rank`.
    pub twist: i64,
}

/// First nonzero entry of a composite `d_{j} ∘ d_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompositeWitness {
    /// Homological index `j` of the later map `d_j`.
    pub position: i64,
    pub row: usize,
    pub col: usize,
    pub value: String,
}

/// A bounded complex of free modules. `differentials[k]` maps
/// `positions[k + 1]` to `positions[k]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainComplex<T = MultiPoly> {
    pub f: usize,
    pub g: usize,
    /// Number of polynomial variables the entries may use.
    pub nvars: usize,
    pub name: String,
    pub positions: Vec<Position>,
    pub differentials: Vec<Matrix<T>>,
}

pub type NumericComplex = ChainComplex<BigRat>;

impl<T: Ring + fmt::Display> ChainComplex<T> {
    pub fn lowest(&self) -> Option<i64> {
        self.positions.first().map(|p| p.index)
    }

    pub fn highest(&self) -> Option<i64> {
        self.positions.last().map(|p| p.index)
    }

    fn slot(&self, j: i64) -> Option<usize> {
        let lo = self.lowest()?;
        let k = j.checked_sub(lo)?;
        (k >= 0 && (k as usize) < self.positions.len()).then_some(k as usize)
    }

    pub fn position(&self, j: i64) -> Option<&Position> {
        self.slot(j).map(|k| &self.positions[k])
    }

    pub fn rank_at(&self, j: i64) -> usize {
        self.position(j).map_or(0, |p| p.rank)
    }

    /// `d_j : C_j → C_{j-1}`, if both positions are stored.
    pub fn differential(&self, j: i64) -> Option<&Matrix<T>> {
        let k = self.slot(j)?;
        (k >= 1).then(|| &self.differentials[k - 1])
    }

    /// `(index, rank)` for every stored position.
    pub fn rank_profile(&self) -> Vec<(i64, usize)> {
        self.positions.iter().map(|p| (p.index, p.rank)).collect()
    }

    pub fn twists(&self) -> Vec<(i64, i64)> {
        self.positions.iter().map(|p| (p.index, p.twist)).collect()
    }

    /// Lowest and highest positions carrying a nonzero module.
    pub fn length_report(&self) -> Option<(i64, i64)> {
        let mut nonzero = self.positions.iter().filter(|p| p.rank > 0).map(|p| p.index);
        let lo = nonzero.next()?;
        Some((lo, nonzero.next_back().unwrap_or(lo)))
    }

    pub fn alternating_rank_sum(&self) -> i64 {
        self.positions.iter().map(|p| if p.index.rem_euclid(2) == 0 { p.rank as i64 } else { -(p.rank as i64) }).sum()
    }

    /// First nonzero entry among all composites of consecutive maps.
    pub fn composite_witness(&self) -> Option<CompositeWitness> {
        for k in 1..self.differentials.len() {
            let prod = self.differentials[k - 1].mul(&self.differentials[k]);
            if let Some((row, col, v)) = prod.first_nonzero() {
                return Some(CompositeWitness { position: self.positions[k].index, row, col, value: v.to_string() });
            }
        }
        None
    }

    /// Checks that every differential has the shape its positions require.
    pub fn check_shapes(&self) -> Result<()> {
        if self.differentials.len() + 1 != self.positions.len().max(1) {
            return Err(Error::Invariant(format!(
                "{}: {} positions but {} differentials",
                self.name,
                self.positions.len(),
                self.differentials.len()
            )));
        }
        for (k, d) in self.differentials.iter().enumerate() {
            let want = (self.positions[k].rank, self.positions[k + 1].rank);
            if d.shape() != want {
                return Err(Error::Invariant(format!(
                    "{}: d_{} is {:?}, expected {:?}",
                    self.name,
                    self.positions[k + 1].index,
                    d.shape(),
                    want
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let positions: Vec<Value> = self
            .positions
            .iter()
            .map(|p| {
                json!({
                    "index": p.index,
                    "module": p.module.to_string(),
                    "rank": p.rank,
                    "twist": p.twist,
                })
            })
            .collect();
        let differentials: Vec<Value> = self
            .differentials
            .iter()
            .enumerate()
            .map(|(k, d)| {
                let rows: Vec<Vec<String>> =
                    (0..d.rows()).map(|r| d.row(r).iter().map(ToString::to_string).collect()).collect();
                json!({
                    "from": self.positions[k + 1].index,
                    "to": self.positions[k].index,
                    "rows": d.rows(),
                    "cols": d.cols(),
                    "entries": rows,
                })
            })
            .collect();
        json!({
            "name": self.name,
            "f": self.f,
            "g": self.g,
            "nvars": self.nvars,
            "positions": positions,
            "differentials": differentials,
        })
    }

    /// One line per position: index, rank, twist and module label.
    pub fn summary_lines(&self) -> Vec<String> {
        self.positions
            .iter()
            .rev()
            .map(|p| format!("{:>3}  rank {:>5}  twist {:>3}  {}", p.index, p.rank, p.twist, p.module))
            .collect()
    }
}

impl ChainComplex<MultiPoly> {
    /// The same complex with every entry evaluated at `point`.
    pub fn evaluate(&self, point: &[BigRat]) -> NumericComplex {
        ChainComplex {
            f: self.f,
            g: self.g,
            nvars: 0,
            name: self.name.clone(),
            positions: self.positions.clone(),
            differentials: self.differentials.iter().map(|d| specialize(d, point)).collect(),
        }
    }

    /// The numeric complex, if every entry is constant.
    pub fn to_numeric(&self) -> Result<NumericComplex> {
        let differentials = self
            .differentials
            .iter()
            .map(|d| {
                constant_part(d)
                    .ok_or_else(|| Error::InvalidParameters(format!("{} has non-constant entries", self.name)))
            })
            .collect::<Result<Vec<QMatrix>>>()?;
        Ok(ChainComplex {
            f: self.f,
            g: self.g,
            nvars: 0,
            name: self.name.clone(),
            positions: self.positions.clone(),
            differentials,
        })
    }

    /// Checks that each nonzero entry of `d_j` is homogeneous of degree
    /// `t_j - t_{j-1}`.
    pub fn check_homogeneous(&self) -> Result<()> {
        for (k, d) in self.differentials.iter().enumerate() {
            let want = self.positions[k + 1].twist - self.positions[k].twist;
            for r in 0..d.rows() {
                for c in 0..d.cols() {
                    let e = d.get(r, c);
                    if e.is_zero() {
                        continue;
                    }
                    if want < 0 || e.homogeneous_degree() != Some(want as u32) {
                        return Err(Error::NotHomogeneous { row: r, col: c });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Shift twists so the lowest nonzero position has twist 0.
pub(crate) fn normalize_twists(positions: &mut [Position]) {
    if let Some(base) = positions.iter().find(|p| p.rank > 0).map(|p| p.twist) {
        for p in positions.iter_mut() {
            p.twist -= base;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_and_ranks() {
        let m = Module::WedgeHook { r: 7, kind: HookKind::L, p: 3, q: 2 };
        assert_eq!(m.to_string(), "∧^7F⊗L^3_2G");
        let k = Module::WedgeHook { r: 0, kind: HookKind::K, p: 1, q: 4 };
        assert_eq!(k.to_string(), "∧^0F⊗K^1_4(G*)");
        // rank L^3_2 for d = 5: C(6,5)·C(4,3) = 24, times C(9,7) = 36
        assert_eq!(m.rank(9, 5), 36 * 24);
        assert_eq!(Module::Wedge { r: 10 }.rank(9, 5), 0);
        assert_eq!(Module::WedgeDivided { r: 1, q: 2 }.rank(3, 2), 9);
        assert_eq!(Module::Dual(Box::new(Module::Wedge { r: 1 })).to_string(), "(∧^1F)*");
    }
}
