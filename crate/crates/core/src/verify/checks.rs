//! Property checks over parameter boxes: the complex property, exactness,
//! splitting, duality, the two routes to `H_0`, annihilation and the
//! identifications with the classical family.

use rayon::prelude::*;
use serde_json::{json, Value};

use super::report::VerificationReport;
use crate::complexes::{
    build_cia, build_classical, build_knp, build_lnp, cia_shape, dual_twisted, duality_isomorphisms, h0_presentation,
    new_old_isomorphisms, ChainComplex, CommutingSigns, NewOldTarget,
};
use crate::differentials::HookSource;
use crate::error::Result;
use crate::exactnum::{binomial, BigRat, QMatrix, Ring};
use crate::homology::{
    annihilation_check, hilbert_h0, hilbert_presentation, homology_graded, homology_numeric, HomologyTable,
};
use crate::multilinear::wedge_basis;
use crate::polyring::{lift, parse_poly, MultiPoly, PolyMatrix};

type Outcome = std::result::Result<Value, Value>;

fn finish(claim: &str, params: Value, outcome: Result<Outcome>) -> VerificationReport {
    match outcome {
        Ok(Ok(evidence)) => VerificationReport::pass(claim, params, Some(evidence)),
        Ok(Err(witness)) => VerificationReport::fail(claim, params, witness),
        Err(e) => VerificationReport::error(claim, params, &e),
    }
}

/// `(i, a)` with `-1 ≤ i ≤ f - g` and `1 ≤ a ≤ g`.
pub fn parameter_box(f: usize, g: usize) -> Vec<(i64, i64)> {
    let top = f as i64 - g as i64;
    (-1..=top).flat_map(|i| (1..=g as i64).map(move |a| (i, a))).collect()
}

/// Runs `job` on every box entry in parallel and returns the first failure
/// in box order, or all evidence.
fn over_box<F>(f: usize, g: usize, job: F) -> Result<Outcome>
where
    F: Fn(i64, i64) -> Result<Outcome> + Sync,
{
    let results: Vec<Result<Outcome>> = parameter_box(f, g).into_par_iter().map(|(i, a)| job(i, a)).collect();
    let mut evidence = Vec::new();
    for r in results {
        match r? {
            Ok(v) => evidence.push(v),
            Err(w) => return Ok(Err(w)),
        }
    }
    Ok(Ok(Value::Array(evidence)))
}

/// `Φ = [[x,0,0],[y,x,0],[0,y,x],[0,0,y]]` over `k[x, y]`, with `I_3` of grade 2.
pub fn depth_example() -> PolyMatrix {
    let rows = [["x1", "0", "0"], ["x2", "x1", "0"], ["0", "x2", "x1"], ["0", "0", "x2"]];
    PolyMatrix::from_fn(4, 3, |r, c| parse_poly(rows[r][c]).unwrap_or_else(|_| MultiPoly::from_int(0)))
}

/// `diag(top, bottom)`.
pub fn block_diagonal(top: &PolyMatrix, bottom: &PolyMatrix) -> PolyMatrix {
    let (r1, c1) = top.shape();
    let (r2, c2) = bottom.shape();
    PolyMatrix::from_fn(r1 + r2, c1 + c2, |r, c| {
        if r < r1 && c < c1 {
            top.get(r, c).clone()
        } else if r >= r1 && c >= c1 {
            bottom.get(r - r1, c - c1).clone()
        } else {
            MultiPoly::from_int(0)
        }
    })
}

/// Every composite of consecutive differentials vanishes for all `(i, a)` in
/// the box. Construction errors under a tampered convention count as failures.
pub fn check_d_squared(phi: &PolyMatrix, label: &str, hooks: &HookSource) -> VerificationReport {
    let (f, g) = phi.shape();
    let claim = format!("complex/{label}");
    let params = json!({ "f": f, "g": g, "tamper": format!("{:?}", hooks.tamper()) });
    let outcome = over_box(f, g, |i, a| {
        let c = match build_cia(phi, i, a, hooks) {
            Ok(c) => c,
            Err(e) => return Ok(Err(json!({ "i": i, "a": a, "construction": e.to_string() }))),
        };
        if let Some(w) = c.composite_witness() {
            return Ok(Err(json!({ "i": i, "a": a, "composite": w })));
        }
        if let Err(e) = c.check_homogeneous() {
            return Ok(Err(json!({ "i": i, "a": a, "homogeneity": e.to_string() })));
        }
        Ok(Ok(json!([i, a])))
    });
    finish(&claim, params, outcome.map(|o| o.map(|v| json!({ "complexes": v.as_array().map_or(0, Vec::len) }))))
}

fn first_nonzero(table: &HomologyTable, from: i64) -> Option<(i64, usize, usize)> {
    for (j, row) in table.positions.iter().zip(&table.dims) {
        if *j < from {
            continue;
        }
        if let Some((deg, &dim)) = row.iter().enumerate().find(|(_, &x)| x > 0) {
            return Some((*j, deg, dim));
        }
    }
    None
}

/// All homology of `C^{i,a}_Φ` vanishes for a numeric `Φ` with `I_g(Φ) = R`.
pub fn check_split_exact(phi: &QMatrix, label: &str, hooks: &HookSource) -> VerificationReport {
    let (f, g) = phi.shape();
    let claim = format!("split-exact/{label}");
    let params = json!({ "f": f, "g": g });
    let poly = lift(phi);
    let outcome = over_box(f, g, |i, a| {
        let c = build_cia(&poly, i, a, hooks)?.to_numeric()?;
        let t = homology_numeric(&c);
        Ok(match first_nonzero(&t, i64::MIN) {
            Some((j, _, dim)) => Err(json!({ "i": i, "a": a, "j": j, "dim": dim })),
            None => Ok(json!([i, a])),
        })
    });
    finish(&claim, params, outcome.map(|o| o.map(|v| json!({ "complexes": v.as_array().map_or(0, Vec::len) }))))
}

/// Strandwise `H_j = 0` for `j ≥ 1` in degrees `0..=cutoff`, over the box,
/// with degreewise Euler characteristics conserved. Evidence is the
/// Hilbert function of `H_0` for every `(i, a)`.
pub fn check_acyclic(phi: &PolyMatrix, label: &str, cutoff: i64, hooks: &HookSource) -> VerificationReport {
    let (f, g) = phi.shape();
    let claim = format!("acyclic/{label}");
    let params = json!({ "f": f, "g": g, "cutoff": cutoff });
    let outcome = over_box(f, g, |i, a| {
        let c = build_cia(phi, i, a, hooks)?;
        let t = homology_graded(&c, cutoff)?;
        if !t.euler_characteristic_holds() {
            return Ok(Err(json!({ "i": i, "a": a, "euler": false })));
        }
        Ok(match first_nonzero(&t, 1) {
            Some((j, degree, dim)) => Err(json!({ "i": i, "a": a, "j": j, "degree": degree, "dim": dim })),
            None => Ok(json!({ "i": i, "a": a, "h0": t.row_or_zero(0) })),
        })
    });
    finish(&claim, params, outcome)
}

/// `h(D) = D + 1`, the Hilbert function of `k[x, y]`.
fn plane_hilbert(d: i64) -> i64 {
    if d < 0 {
        0
    } else {
        d + 1
    }
}

/// The depth-sensitive instance: higher homology vanishes over the whole box
/// to degree 5 and `H_0(C^{0,2})` has Hilbert function `(3,6,3,0,0,0)`.
pub fn check_depth_instance(hooks: &HookSource) -> VerificationReport {
    let claim = "depth/kxy-4x3";
    let phi = depth_example();
    let cutoff = 5;
    let params = json!({ "f": 4, "g": 3, "cutoff": cutoff, "matrix": "[[x,0,0],[y,x,0],[0,y,x],[0,0,y]]" });
    let acyclic = check_acyclic(&phi, "kxy-4x3", cutoff, hooks);
    if !acyclic.passed {
        return VerificationReport { claim: claim.into(), parameters: params, ..acyclic };
    }
    let outcome = (|| -> Result<Outcome> {
        let c = build_cia(&phi, 0, 2, hooks)?;
        let h0 = hilbert_h0(&c, cutoff)?;
        let oracle: Vec<usize> = (0..=cutoff)
            .map(|d| (3 * plane_hilbert(d) - 6 * plane_hilbert(d - 2) + 3 * plane_hilbert(d - 4)) as usize)
            .collect();
        let total: usize = h0.iter().sum();
        if h0 != vec![3, 6, 3, 0, 0, 0] || h0 != oracle || total != 12 {
            return Ok(Err(json!({ "h0": h0, "oracle": oracle, "total": total })));
        }
        Ok(Ok(json!({ "h0": h0, "total": total })))
    })();
    finish(claim, params, outcome)
}

fn dims_at(t: &HomologyTable, j: i64) -> usize {
    t.row(j).map_or(0, |r| r.iter().sum())
}

/// `dim H_j(C^{i,a}_Φ) = Σ_β C(r, a - β) dim H_j(C^{i,β}_{Φ'})` for
/// `Φ = diag(Φ', I_r)`, over the box of `Φ`.
pub fn check_splitting(phi_prime: &QMatrix, r: usize, label: &str, hooks: &HookSource) -> VerificationReport {
    let (fp, gp) = phi_prime.shape();
    let claim = format!("splitting/{label}/r{r}");
    let params = json!({ "f'": fp, "g'": gp, "r": r });
    let phi = block_diagonal(&lift(phi_prime), &lift(&QMatrix::identity(r)));
    let (f, g) = phi.shape();
    let outcome = (|| -> Result<Outcome> {
        let small: Vec<Vec<HomologyTable>> = (-1..=(fp as i64 - gp as i64))
            .map(|i| {
                (1..=gp as i64)
                    .map(|b| Ok(homology_numeric(&build_cia(&lift(phi_prime), i, b, hooks)?.to_numeric()?)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        over_box(f, g, |i, a| {
            let big = homology_numeric(&build_cia(&phi, i, a, hooks)?.to_numeric()?);
            let parts = &small[(i + 1) as usize];
            let lo = big.positions.first().copied().unwrap_or(0).min(-2);
            let hi = big.positions.last().copied().unwrap_or(0).max(f as i64 + 2);
            let mut nonzero = 0;
            for j in lo..=hi {
                let lhs = dims_at(&big, j);
                let rhs: usize = (1..=gp as i64)
                    .map(|b| binomial(r as i64, a - b) as usize * dims_at(&parts[(b - 1) as usize], j))
                    .sum();
                if lhs != rhs {
                    return Ok(Err(json!({ "i": i, "a": a, "j": j, "lhs": lhs, "rhs": rhs })));
                }
                nonzero += lhs;
            }
            Ok(Ok(json!(nonzero)))
        })
    })();
    let outcome = outcome.map(|o| {
        o.map(|v| {
            let total: u64 = v.as_array().map_or(0, |a| a.iter().filter_map(Value::as_u64).sum());
            json!({ "homology_total": total })
        })
    });
    finish(&claim, params, outcome)
}

/// `dual_twisted(C^{f-g-i-1, g+1-a})` has the rank profile and twists of
/// `C^{i,a}`; with `maps`, the differentials also agree through the wedge
/// complement and hook pairings, up to a sign per square.
pub fn check_duality(phi: &PolyMatrix, label: &str, maps: bool, hooks: &HookSource) -> VerificationReport {
    let (f, g) = phi.shape();
    let claim = format!("duality/{label}");
    let params = json!({ "f": f, "g": g, "maps": maps });
    let (fi, gi) = (f as i64, g as i64);
    let outcome = over_box(f, g, |i, a| {
        let (pi, pa) = (fi - gi - i - 1, gi + 1 - a);
        if !maps {
            let c = cia_shape(f, g, i, a);
            let mut d = cia_shape(f, g, pi, pa);
            d.reverse();
            let lhs: Vec<(i64, usize)> = c.iter().map(|p| (p.index, p.rank)).collect();
            let rhs: Vec<(i64, usize)> = d.iter().map(|p| (fi - gi + 1 - p.index, p.rank)).collect();
            return Ok(if lhs == rhs {
                Ok(json!([i, a]))
            } else {
                Err(json!({ "i": i, "a": a, "ranks": [lhs, rhs] }))
            });
        }
        let c = build_cia(phi, i, a, hooks)?;
        let d = dual_twisted(&build_cia(phi, pi, pa, hooks)?);
        if c.rank_profile() != d.rank_profile() || c.twists() != d.twists() {
            return Ok(Err(json!({ "i": i, "a": a, "profile": [c.rank_profile(), d.rank_profile()] })));
        }
        let isos = duality_isomorphisms(f, g, i, a, hooks)?;
        let signs = CommutingSigns::discover(&c, &d, &isos)?;
        if !signs.holds() {
            return Ok(Err(json!({ "i": i, "a": a, "signs": signs })));
        }
        Ok(Ok(json!({ "i": i, "a": a, "squares": signs.squares })))
    });
    finish(&claim, params, outcome)
}

/// Higher homology of the twisted dual vanishes for generic `Φ`.
pub fn check_dual_acyclic(phi: &PolyMatrix, label: &str, cutoff: i64, hooks: &HookSource) -> VerificationReport {
    let (f, g) = phi.shape();
    let claim = format!("dual-acyclic/{label}");
    let params = json!({ "f": f, "g": g, "cutoff": cutoff });
    let outcome = over_box(f, g, |i, a| {
        let d = dual_twisted(&build_cia(phi, i, a, hooks)?);
        let t = homology_graded(&d, cutoff)?;
        Ok(match first_nonzero(&t, 1) {
            Some((j, degree, dim)) => Err(json!({ "i": i, "a": a, "j": j, "degree": degree, "dim": dim })),
            None => Ok(json!([i, a])),
        })
    });
    finish(&claim, params, outcome.map(|o| o.map(|_| json!({}))))
}

/// Hilbert functions of `H_0(C^{i,a})` from the complex and from the direct
/// presentation agree degreewise.
pub fn check_h0_routes(phi: &PolyMatrix, label: &str, cutoff: i64, hooks: &HookSource) -> VerificationReport {
    let (f, g) = phi.shape();
    let claim = format!("h0-routes/{label}");
    let params = json!({ "f": f, "g": g, "cutoff": cutoff });
    let outcome = over_box(f, g, |i, a| {
        let from_complex = hilbert_h0(&build_cia(phi, i, a, hooks)?, cutoff)?;
        let from_presentation = hilbert_presentation(&h0_presentation(phi, i, a, hooks)?, cutoff)?;
        if from_complex != from_presentation {
            let degree = from_complex.iter().zip(&from_presentation).position(|(x, y)| x != y);
            return Ok(Err(json!({
                "i": i, "a": a, "degree": degree,
                "complex": from_complex, "presentation": from_presentation,
            })));
        }
        Ok(Ok(json!({ "i": i, "a": a, "hf": from_complex })))
    });
    finish(&claim, params, outcome)
}

/// Degreewise `HF(H_0(C^{i,a})) = C(g-1, a-1) · HF(H_0(C^{i,1}))`.
pub fn check_h0_degreewise_multiple(
    phi: &PolyMatrix,
    label: &str,
    cutoff: i64,
    hooks: &HookSource,
) -> VerificationReport {
    let (f, g) = phi.shape();
    let claim = format!("h0-degreewise-multiple/{label}");
    let params = json!({ "f": f, "g": g, "cutoff": cutoff });
    let outcome = (|| -> Result<Outcome> {
        for i in -1..=(f as i64 - g as i64) {
            let base = hilbert_h0(&build_cia(phi, i, 1, hooks)?, cutoff)?;
            for a in 2..=g as i64 {
                let hf = hilbert_h0(&build_cia(phi, i, a, hooks)?, cutoff)?;
                let m = binomial(g as i64 - 1, a - 1) as usize;
                if let Some(d) = (0..hf.len()).find(|&d| hf[d] != m * base[d]) {
                    return Ok(Err(json!({
                        "i": i, "a": a, "degree": d, "lhs": hf[d], "rhs": m * base[d],
                        "hf": hf, "hf_a1": base,
                    })));
                }
            }
        }
        Ok(Ok(json!({})))
    })();
    finish(&claim, params, outcome)
}

/// `k`-th forward difference of `v` at its last defined index.
fn top_difference(v: &[usize], k: usize) -> Option<(i64, i64)> {
    let mut w: Vec<i64> = v.iter().map(|&x| x as i64).collect();
    for _ in 0..k {
        if w.len() < 2 {
            return None;
        }
        w = w.windows(2).map(|p| p[1] - p[0]).collect();
    }
    let n = w.len();
    (n >= 2).then(|| (w[n - 2], w[n - 1]))
}

/// Multiplicity shadow of the rank statement for generic `Φ`: the leading
/// Hilbert coefficient of `H_0(C^{i,a})` is `C(g-1, a-1)` times that of
/// `R/I_g`, whose degree is `C(f, g-1)`. The multiplicity is read off the
/// `(dim - 1)`-st difference of the strand Hilbert function, which must be
/// constant over the last two degrees.
pub fn check_h0_multiplicity(phi: &PolyMatrix, label: &str, cutoff: i64, hooks: &HookSource) -> VerificationReport {
    let (f, g) = phi.shape();
    let claim = format!("h0-multiplicity/{label}");
    let params = json!({ "f": f, "g": g, "cutoff": cutoff });
    let nvars = crate::polyring::var_span(phi);
    let dim = nvars as i64 - (f as i64 - g as i64 + 1);
    let degree = binomial(f as i64, g as i64 - 1) as i64;
    let outcome = over_box(f, g, |i, a| {
        let hf = hilbert_h0(&build_cia(phi, i, a, hooks)?, cutoff)?;
        let want = binomial(g as i64 - 1, a - 1) as i64 * degree;
        match top_difference(&hf, (dim - 1).max(0) as usize) {
            Some((x, y)) if x == y && y == want => Ok(Ok(json!({ "i": i, "a": a, "e": y }))),
            found => Ok(Err(json!({ "i": i, "a": a, "hf": hf, "differences": found, "expected": want }))),
        }
    });
    finish(&claim, params, outcome)
}

/// Multiplication by every `g×g` minor maps `C_0` strands into `im d_1`.
pub fn check_annihilation(phi: &PolyMatrix, label: &str, cutoff: i64, hooks: &HookSource) -> VerificationReport {
    let (f, g) = phi.shape();
    let claim = format!("annihilation/{label}");
    let params = json!({ "f": f, "g": g, "cutoff": cutoff });
    let cols: Vec<usize> = (0..g).collect();
    let row_sets = wedge_basis(f, g as i64);
    let outcome = over_box(f, g, |i, a| {
        let c = build_cia(phi, i, a, hooks)?;
        for rows in &row_sets {
            let ann = annihilation_check(&c, phi, rows, &cols, cutoff)?;
            if !ann.holds {
                return Ok(Err(
                    json!({ "i": i, "a": a, "rows": rows, "minor": ann.minor, "degree": ann.failing_degree }),
                ));
            }
        }
        Ok(Ok(json!([i, a])))
    });
    finish(
        &claim,
        params,
        outcome.map(|o| o.map(|v| json!({ "complexes": v.as_array().map_or(0, Vec::len), "minors": row_sets.len() }))),
    )
}

/// `C^i_Φ`, `C^{i,1}_Φ` and `C^{i-1,g}_Φ` agree position by position and,
/// through explicit isomorphisms, map by map up to sign.
pub fn check_new_old(phi: &PolyMatrix, label: &str, hooks: &HookSource) -> VerificationReport {
    let (f, g) = phi.shape();
    let claim = format!("new-old/{label}");
    let params = json!({ "f": f, "g": g });
    let gi = g as i64;
    let outcome = (|| -> Result<Outcome> {
        let mut evidence = Vec::new();
        for i in -1..=(f as i64 - gi + 1) {
            let old = build_classical(phi, i, hooks)?;
            for (target, (ti, ta)) in [(NewOldTarget::FirstColumn, (i, 1)), (NewOldTarget::LastColumn, (i - 1, gi))] {
                let new = build_cia(phi, ti, ta, hooks)?;
                if old.rank_profile() != new.rank_profile() || old.twists() != new.twists() {
                    return Ok(Err(
                        json!({ "i": i, "target": target, "profile": [old.rank_profile(), new.rank_profile()] }),
                    ));
                }
                let signs = CommutingSigns::discover(&old, &new, &new_old_isomorphisms(f, g, i, target, hooks)?)?;
                if !signs.holds() {
                    return Ok(Err(json!({ "i": i, "target": target, "signs": signs })));
                }
                evidence.push(json!({ "i": i, "target": target, "squares": signs.squares }));
            }
        }
        Ok(Ok(Value::Array(evidence)))
    })();
    finish(&claim, params, outcome)
}

fn numeric_dims(c: Result<ChainComplex>) -> Result<HomologyTable> {
    Ok(homology_numeric(&c?.to_numeric()?))
}

/// For `Φ = diag(Φ', u)` with `u` a unit and `p ≠ 0`:
/// `H_j(K^{N,p}_Φ) = H_j(K^{N,p}_{Φ'}) ⊕ H_j(K^{N,p-1}_{Φ'})` and
/// `H_j(L^{N,p}_Φ) = H_j(L^{N-1,p}_{Φ'}) ⊕ H_j(L^{N-1,p-1}_{Φ'})`.
pub fn check_unit_block(phi_prime: &QMatrix, unit: &BigRat, label: &str, hooks: &HookSource) -> VerificationReport {
    let (fp, gp) = phi_prime.shape();
    let claim = format!("unit-block/{label}");
    let params = json!({ "f'": fp, "g'": gp, "unit": unit.to_string() });
    let small = lift(phi_prime);
    let big = block_diagonal(&small, &PolyMatrix::from_fn(1, 1, |_, _| MultiPoly::constant(unit.clone())));
    let (f, g) = big.shape();
    let outcome = (|| -> Result<Outcome> {
        let jobs: Vec<(char, i64, i64)> = ['K', 'L']
            .into_iter()
            .flat_map(|k| (0..=f as i64).flat_map(move |n| (1..=g as i64).map(move |p| (k, n, p))))
            .collect();
        let results: Vec<Result<Outcome>> = jobs
            .par_iter()
            .map(|&(kind, n, p)| {
                let (lhs, r1, r2) = if kind == 'K' {
                    (
                        numeric_dims(build_knp(&big, n, p, hooks))?,
                        numeric_dims(build_knp(&small, n, p, hooks))?,
                        numeric_dims(build_knp(&small, n, p - 1, hooks))?,
                    )
                } else {
                    (
                        numeric_dims(build_lnp(&big, n, p, hooks))?,
                        numeric_dims(build_lnp(&small, n - 1, p, hooks))?,
                        numeric_dims(build_lnp(&small, n - 1, p - 1, hooks))?,
                    )
                };
                for j in -1..=(f as i64 + 1) {
                    let (x, y) = (dims_at(&lhs, j), dims_at(&r1, j) + dims_at(&r2, j));
                    if x != y {
                        return Ok(Err(
                            json!({ "family": kind.to_string(), "N": n, "p": p, "j": j, "lhs": x, "rhs": y }),
                        ));
                    }
                }
                Ok(Ok(json!(lhs.dims.iter().flatten().sum::<usize>())))
            })
            .collect();
        let mut total = 0u64;
        for r in results {
            match r? {
                Ok(v) => total += v.as_u64().unwrap_or(0),
                Err(w) => return Ok(Err(w)),
            }
        }
        Ok(Ok(json!({ "cases": jobs.len(), "homology_total": total })))
    })();
    finish(&claim, params, outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::differentials::Tamper;
    use crate::exactnum::rat;
    use crate::multilinear::HookCache;
    use crate::polyring::generic_matrix;

    fn hooks(cache: &HookCache) -> HookSource<'_> {
        HookSource::new(cache, Tamper::None)
    }

    #[test]
    fn box_size() {
        assert_eq!(parameter_box(5, 3).len(), 12);
        assert_eq!(parameter_box(3, 3), vec![(-1, 1), (-1, 2), (-1, 3), (0, 1), (0, 2), (0, 3)]);
    }

    #[test]
    fn tampered_kappa_is_caught() {
        let cache = HookCache::new(None);
        let bad = HookSource::new(&cache, Tamper::FlipKappa);
        let r = check_d_squared(&generic_matrix(3, 2), "3x2", &bad);
        assert!(!r.passed);
        assert!(r.witness.is_some());
        assert!(check_d_squared(&generic_matrix(3, 2), "3x2", &hooks(&cache)).passed);
    }

    #[test]
    fn depth_instance_passes() {
        let cache = HookCache::new(None);
        let r = check_depth_instance(&hooks(&cache));
        assert!(r.passed, "{:?}", r.witness);
    }

    #[test]
    fn splitting_with_deficient_block() {
        let cache = HookCache::new(None);
        // rank one 3×2 block, so the small complexes carry homology
        let m = QMatrix::from_rows(vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)], vec![rat(-1), rat(-2)]]).unwrap();
        let r = check_splitting(&m, 1, "rank1", &hooks(&cache));
        assert!(r.passed, "{:?}", r.witness);
        assert!(r.evidence.unwrap()["homology_total"].as_u64().unwrap() > 0);
    }

    #[test]
    fn unit_block_identities() {
        let cache = HookCache::new(None);
        let m = QMatrix::from_rows(vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)], vec![rat(0), rat(0)]]).unwrap();
        let r = check_unit_block(&m, &rat(3), "rank1", &hooks(&cache));
        assert!(r.passed, "{:?}", r.witness);
    }

    #[test]
    fn routes_multiplicity_and_annihilation_on_3_2() {
        let cache = HookCache::new(None);
        let h = hooks(&cache);
        let phi = generic_matrix(3, 2);
        for r in [
            check_h0_routes(&phi, "3x2", 3, &h),
            check_annihilation(&phi, "3x2", 4, &h),
            check_h0_multiplicity(&phi, "3x2", 5, &h),
        ] {
            assert!(r.passed, "{}: {:?}", r.claim, r.witness);
        }
    }

    #[test]
    fn degreewise_multiple_is_refuted() {
        let cache = HookCache::new(None);
        let r = check_h0_degreewise_multiple(&generic_matrix(3, 2), "3x2", 3, &hooks(&cache));
        assert!(!r.passed);
    }
}
