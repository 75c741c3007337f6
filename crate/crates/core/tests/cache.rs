use std::sync::Arc;

use detcx::multilinear::{parse_hook_file, HookBasis, HookCache, HookKey, HookKind, MapVariant};
use rayon::prelude::*;

#[test]
fn concurrent_readers_share_one_fill() {
    let dir = tempfile::tempdir().unwrap();
    let cache = HookCache::new(Some(dir.path().to_path_buf()));
    let key = HookKey::new(HookKind::L, 4, 2, 2);
    let got: Vec<Arc<HookBasis>> = (0..32).into_par_iter().map(|_| cache.basis(key).unwrap()).collect();
    assert!(got.windows(2).all(|w| Arc::ptr_eq(&w[0], &w[1])));
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name()).collect();
    assert_eq!(files, [std::ffi::OsString::from(key.file_name())]);
}

#[test]
fn disk_copy_survives_a_fresh_process_view() {
    let dir = tempfile::tempdir().unwrap();
    let key = HookKey::new(HookKind::K, 3, 1, 2);
    let first = HookCache::new(Some(dir.path().to_path_buf())).basis(key).unwrap();
    let text = std::fs::read_to_string(dir.path().join(key.file_name())).unwrap();
    let parsed = parse_hook_file(&text).unwrap();
    assert_eq!(parsed.key, key);
    assert_eq!(parsed.columns, first.columns());

    let second = HookCache::new(Some(dir.path().to_path_buf())).basis(key).unwrap();
    assert_eq!(second.to_dense(), first.to_dense());
    let fresh = HookBasis::compute(key.kind, key.d, key.p, key.q, MapVariant::Standard).unwrap();
    assert_eq!(fresh.to_dense(), first.to_dense());
}

#[test]
fn truncated_file_is_recomputed_and_reported() {
    let dir = tempfile::tempdir().unwrap();
    let key = HookKey::new(HookKind::L, 3, 1, 2);
    let expected = HookCache::new(Some(dir.path().to_path_buf())).basis(key).unwrap().to_dense();
    let path = dir.path().join(key.file_name());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, &text[..text.len() / 2]).unwrap();

    let cache = HookCache::new(Some(dir.path().to_path_buf()));
    assert_eq!(cache.basis(key).unwrap().to_dense(), expected);
    assert_eq!(cache.integrity_events().len(), 1);
    assert!(parse_hook_file(&std::fs::read_to_string(&path).unwrap()).is_ok());
}
