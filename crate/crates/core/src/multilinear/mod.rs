//! Exterior, symmetric and divided powers of a free module, and the hook
//! modules `L^p_q` and `K^p_q`.

mod basis;
mod cache;
mod exterior;
mod hooks;

pub use basis::{basis, power_basis, subset_rank, wedge_basis, Basis, BasisKind};
pub use cache::{
    hook_basis, parse_hook_file, render_hook_file, CacheAudit, HookCache, HookFile, HookKey, CACHE_DIR_ENV,
};
pub use exterior::{merge_sign, ExtVec};
pub use hooks::{
    act_on_ambient, defining_map, eta_map, eta_matrix, hook_action, hook_rank_formula, kappa_map, kappa_matrix,
    Ambient, HookAction, HookBasis, HookKind, MapVariant, SparseIntMap,
};
