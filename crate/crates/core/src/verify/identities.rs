//! Randomized contraction identities and the hook rank / strand exactness grid.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::report::VerificationReport;
use crate::exactnum::{rank_of_rows, ZMatrix};
use crate::multilinear::{
    eta_map, hook_basis, hook_rank_formula, kappa_map, wedge_basis, ExtVec, HookKind, MapVariant, SparseIntMap,
};

fn random_ext(rng: &mut ChaCha8Rng, n: usize, degree: i64) -> ExtVec {
    let len = wedge_basis(n, degree).len();
    ExtVec::from_coeffs(n, degree, (0..len).map(|_| BigInt::from(rng.gen_range(-3..=3))).collect())
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn coeffs(v: &ExtVec) -> Vec<String> {
    v.coeffs.iter().map(ToString::to_string).collect()
}

/// One instance of one identity; `Err` carries the two sides.
fn instance(which: char, rng: &mut ChaCha8Rng) -> std::result::Result<(), Value> {
    let d = rng.gen_range(1..=5usize);
    let di = d as i64;
    let (lhs, rhs, degrees) = match which {
        'a' => {
            let (q, p) = (rng.gen_range(0..=di), rng.gen_range(0..=di));
            let (b, alpha, c) = (random_ext(rng, d, 1), random_ext(rng, d, q), random_ext(rng, d, p));
            let lhs = b.act_on_dual(&alpha).contract(&c);
            let rhs = b.wedge(&alpha.contract(&c)).add(&alpha.contract(&b.wedge(&c)).scale(sign(1 + q)));
            (lhs, rhs, json!({ "d": d, "q": q, "p": p }))
        }
        'b' => {
            let (r, p) = (rng.gen_range(0..=di), rng.gen_range(0..=di));
            let (b, alpha, c) = (random_ext(rng, d, r), random_ext(rng, d, di), random_ext(rng, d, p));
            let lhs = b.act_on_dual(&alpha).contract(&c);
            let rhs = c.act_on_dual(&alpha).contract(&b).scale(sign((di - r) * (di - p)));
            (lhs, rhs, json!({ "d": d, "r": r, "p": p }))
        }
        'c' => {
            let (r, q) = (rng.gen_range(0..=di), rng.gen_range(0..=di));
            let (b, alpha, c) = (random_ext(rng, d, r), random_ext(rng, d, q), random_ext(rng, d, di));
            let lhs = b.act_on_dual(&alpha).contract(&c);
            let rhs = b.wedge(&alpha.contract(&c));
            (lhs, rhs, json!({ "d": d, "r": r, "q": q }))
        }
        _ => {
            let target = rng.gen_range(1..=5usize);
            let psi = ZMatrix::from_fn(target, d, |_, _| BigInt::from(rng.gen_range(-2..=2)));
            let psi_dual = psi.transpose();
            let r = rng.gen_range(0..=di);
            let s = rng.gen_range(0..=(target as i64 - r).max(0));
            let b = random_ext(rng, d, r);
            let delta = random_ext(rng, target, s + r);
            let lhs = b.push_forward(&psi).act_on_dual(&delta).push_forward(&psi_dual);
            let rhs = b.act_on_dual(&delta.push_forward(&psi_dual));
            (lhs, rhs, json!({ "d": d, "target": target, "r": r, "s": s }))
        }
    };
    if lhs == rhs {
        Ok(())
    } else {
        Err(json!({ "degrees": degrees, "lhs": coeffs(&lhs), "rhs": coeffs(&rhs) }))
    }
}

/// `count` random instances of each of the four contraction identities,
/// with `d ≤ 5` and coefficients in `-3..=3`.
pub fn check_contraction_identities(seed: u64, count: usize) -> VerificationReport {
    let claim = "contraction-identities";
    let params = json!({ "seed": seed, "count": count, "max_d": 5 });
    let results: Vec<(char, std::result::Result<(), Value>)> = ['a', 'b', 'c', 'd']
        .into_par_iter()
        .map(|which| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (which as u64) << 32);
            for k in 0..count {
                if let Err(w) = instance(which, &mut rng) {
                    return (which, Err(json!({ "identity": which.to_string(), "instance": k, "detail": w })));
                }
            }
            (which, Ok(()))
        })
        .collect();
    for (_, r) in &results {
        if let Err(w) = r {
            return VerificationReport::fail(claim, params, w.clone());
        }
    }
    VerificationReport::pass(claim, params, Some(json!({ "identities": 4, "instances_each": count })))
}

fn map_rank(m: &SparseIntMap) -> usize {
    // rank of a matrix equals the rank of its transpose, whose rows are our columns
    rank_of_rows(m.columns.iter().map(|col| col.iter().map(|&(r, v)| (r, BigInt::from(v))).collect()).collect())
}

fn composite_is_zero(first: &SparseIntMap, second: &SparseIntMap) -> bool {
    first.columns.iter().all(|col| {
        let v: Vec<(usize, BigInt)> = col.iter().map(|&(r, x)| (r, BigInt::from(x))).collect();
        second.apply(&v).iter().all(|(_, x)| x.is_zero())
    })
}

/// Hook kernel column counts against the binomial formulas, exactness of the
/// `κ` and `η` strands of nonzero total degree, `κ∘κ = 0`, `η∘η = 0`, and
/// `rank L^a_b = rank K^{a+1}_{b-1}` off the two degenerate corners.
pub fn check_hook_grid(max_d: usize, max_sum: i64) -> VerificationReport {
    let claim = "hook-ranks-and-strands";
    let params = json!({ "max_d": max_d, "max_sum": max_sum });
    let jobs: Vec<(usize, i64)> = (1..=max_d).flat_map(|d| (0..=max_sum).map(move |c| (d, c))).collect();
    let results: Vec<std::result::Result<usize, Value>> = jobs
        .par_iter()
        .map(|&(d, c)| {
            let di = d as i64;
            let mut checked = 0;
            // kappa strand: ∧^a ⊗ Sym_{c-a}, a = 0..=min(d, c), kappa lowers a
            let kappas: Vec<SparseIntMap> = (0..=c + 1).map(|a| kappa_map(d, a, c - a, MapVariant::Standard)).collect();
            let etas: Vec<SparseIntMap> = (-1..=c + 1).map(|a| eta_map(d, a, c - a, MapVariant::Standard)).collect();
            for a in 0..=c.min(di) {
                let b = c - a;
                let kappa = &kappas[a as usize];
                let eta = &etas[(a + 1) as usize];
                let (rk, re) = (map_rank(kappa), map_rank(eta));
                let ambient = kappa.cols;
                for (kind, nullity) in [(HookKind::L, ambient - rk), (HookKind::K, eta.cols - re)] {
                    let formula = hook_rank_formula(kind, d, a, b);
                    let basis = hook_basis(kind, d, a, b).map_err(|e| json!({ "d": d, "a": a, "b": b, "error": e.to_string() }))?;
                    if nullity != formula || basis.rank() != formula {
                        return Err(json!({
                            "kind": kind.symbol().to_string(), "d": d, "a": a, "b": b,
                            "nullity": nullity, "basis": basis.rank(), "formula": formula,
                        }));
                    }
                    checked += 1;
                }
                if c != 0 {
                    // exact at ∧^a ⊗ Sym_b: rank κ^a_b + rank κ^{a+1}_{b-1} = ambient
                    let incoming = map_rank(&kappas[(a + 1) as usize]);
                    if rk + incoming != ambient {
                        return Err(json!({ "strand": "kappa", "d": d, "a": a, "b": b, "rank_out": rk, "rank_in": incoming, "dim": ambient }));
                    }
                    let incoming = map_rank(&etas[a as usize]);
                    if re + incoming != eta.cols {
                        return Err(json!({ "strand": "eta", "d": d, "a": a, "b": b, "rank_out": re, "rank_in": incoming, "dim": eta.cols }));
                    }
                }
                if a >= 1 && !composite_is_zero(kappa, &kappas[(a - 1) as usize]) {
                    return Err(json!({ "composite": "kappa", "d": d, "a": a, "b": b }));
                }
                if !composite_is_zero(eta, &etas[(a + 2) as usize]) {
                    return Err(json!({ "composite": "eta", "d": d, "a": a, "b": b }));
                }
                if b >= 1 {
                    let (l, k) = (hook_rank_formula(HookKind::L, d, a, b), hook_rank_formula(HookKind::K, d, a + 1, b - 1));
                    if l != k {
                        return Err(json!({ "pairing": true, "d": d, "a": a, "b": b, "L": l, "K": k }));
                    }
                }
            }
            Ok(checked)
        })
        .collect();
    let mut total = 0;
    for r in results {
        match r {
            Ok(n) => total += n,
            Err(w) => return VerificationReport::fail(claim, params, w),
        }
    }
    VerificationReport::pass(claim, params, Some(json!({ "hook_modules": total })))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_hold() {
        let r = check_contraction_identities(7, 40);
        assert!(r.passed, "{:?}", r.witness);
    }

    #[test]
    fn small_hook_grid() {
        let r = check_hook_grid(3, 4);
        assert!(r.passed, "{:?}", r.witness);
    }
}
