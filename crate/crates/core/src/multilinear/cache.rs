//! Memoized hook bases, backed by a versioned on-disk cache.
//!
//! File layout (text, one field per line):
//!
//! ```text
//! detcx-hook-basis v1
//! kind L
//! d 3
//! p 1
//! q 2
//! ambient 18
//! columns 8
//! checksum <sha256 of the column lines>
//! <row> <value> <row> <value> ...
//! ```

use std::collections::HashMap;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;
use sha2::{Digest, Sha256};

use super::hooks::{hook_action, HookAction, HookBasis, HookKind, MapVariant};
use crate::error::{Error, Result};

const MAGIC: &str = "detcx-hook-basis v1";
/// Environment variable overriding the default cache directory.
pub const CACHE_DIR_ENV: &str = "DETCX_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookKey {
    pub kind: HookKind,
    pub d: usize,
    pub p: i64,
    pub q: i64,
}

impl HookKey {
    pub fn new(kind: HookKind, d: usize, p: i64, q: i64) -> Self {
        HookKey { kind, d, p, q }
    }

    pub fn file_name(&self) -> String {
        format!("{}_{}_{}_{}.hook", self.kind.symbol(), self.d, self.p, self.q)
    }

    /// Inverse of [`HookKey::file_name`]; rejects non-canonical spellings.
    pub fn from_file_name(name: &str) -> Option<Self> {
        let stem = name.strip_suffix(".hook")?;
        let mut parts = stem.split('_');
        let mut kind_chars = parts.next()?.chars();
        let kind = HookKind::from_symbol(kind_chars.next()?)?;
        if kind_chars.next().is_some() {
            return None;
        }
        let d = parts.next()?.parse().ok()?;
        let p = parts.next()?.parse().ok()?;
        let q = parts.next()?.parse().ok()?;
        if parts.next().is_some() {
            return None;
        }
        let key = HookKey { kind, d, p, q };
        (key.file_name() == name).then_some(key)
    }
}

/// Parsed contents of a cache file, before validation against the defining map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookFile {
    pub key: HookKey,
    pub ambient: usize,
    pub columns: Vec<Vec<(usize, BigInt)>>,
}

fn column_lines(columns: &[Vec<(usize, BigInt)>]) -> String {
    let mut s = String::new();
    for col in columns {
        let parts: Vec<String> = col.iter().map(|(r, v)| format!("{r} {v}")).collect();
        s.push_str(&parts.join(" "));
        s.push('\n');
    }
    s
}

fn checksum(body: &str) -> String {
    hex::encode(Sha256::digest(body.as_bytes()))
}

/// Serialize a basis in the cache format.
pub fn render_hook_file(basis: &HookBasis) -> String {
    let body = column_lines(basis.columns());
    format!(
        "{MAGIC}\nkind {}\nd {}\np {}\nq {}\nambient {}\ncolumns {}\nchecksum {}\n{body}",
        basis.kind.symbol(),
        basis.d,
        basis.p,
        basis.q,
        basis.ambient_dim(),
        basis.rank(),
        checksum(&body)
    )
}

/// Parse a cache file. Structural problems and checksum mismatches are `Parse` errors.
pub fn parse_hook_file(text: &str) -> Result<HookFile> {
    let bad = |why: &str| Error::Parse(format!("hook cache: {why}"));
    let mut lines = text.split_inclusive('\n');
    let mut header = |name: &str| -> Result<String> {
        let line = lines.next().ok_or_else(|| bad("truncated header"))?;
        let line = line.strip_suffix('\n').ok_or_else(|| bad("truncated header"))?;
        if name.is_empty() {
            return Ok(line.to_string());
        }
        let value = line
            .strip_prefix(name)
            .and_then(|r| r.strip_prefix(' '))
            .ok_or_else(|| bad(&format!("expected field {name}")))?;
        Ok(value.to_string())
    };
    if header("")? != MAGIC {
        return Err(bad("unknown format version"));
    }
    let kind_s = header("kind")?;
    let mut kind_chars = kind_s.chars();
    let kind = match (kind_chars.next(), kind_chars.next()) {
        (Some(c), None) => HookKind::from_symbol(c).ok_or_else(|| bad("unknown kind"))?,
        _ => return Err(bad("unknown kind")),
    };
    let num = |s: String| -> Result<i64> { s.parse::<i64>().map_err(|_| bad("bad number")) };
    let d = num(header("d")?)?;
    let p = num(header("p")?)?;
    let q = num(header("q")?)?;
    let ambient = num(header("ambient")?)?;
    let ncols = num(header("columns")?)?;
    let sum = header("checksum")?;
    if d < 0 || ambient < 0 || ncols < 0 {
        return Err(bad("negative size"));
    }
    let body: String = lines.collect();
    if checksum(&body) != sum {
        return Err(bad("checksum mismatch"));
    }
    let mut columns = Vec::new();
    for line in body.lines() {
        let toks: Vec<&str> = line.split_ascii_whitespace().collect();
        if !toks.len().is_multiple_of(2) {
            return Err(bad("odd number of fields in column"));
        }
        let mut col: Vec<(usize, BigInt)> = Vec::with_capacity(toks.len() / 2);
        for pair in toks.chunks(2) {
            let r: usize = pair[0].parse().map_err(|_| bad("bad row index"))?;
            let v: BigInt = pair[1].parse().map_err(|_| bad("bad value"))?;
            if r >= ambient as usize {
                return Err(bad("row index out of range"));
            }
            if v.is_zero() {
                return Err(bad("explicit zero entry"));
            }
            if col.last().is_some_and(|(prev, _)| *prev >= r) {
                return Err(bad("rows not increasing"));
            }
            col.push((r, v));
        }
        if col.is_empty() {
            return Err(bad("empty column"));
        }
        columns.push(col);
    }
    if columns.len() != ncols as usize {
        return Err(bad("column count mismatch"));
    }
    Ok(HookFile { key: HookKey::new(kind, d as usize, p, q), ambient: ambient as usize, columns })
}

type Slot<T> = Arc<OnceLock<Result<Arc<T>>>>;

/// Process-wide memo of hook bases and their actions, optionally persisted.
pub struct HookCache {
    dir: Option<PathBuf>,
    bases: RwLock<HashMap<HookKey, Slot<HookBasis>>>,
    actions: RwLock<HashMap<(HookKey, usize), Slot<HookAction>>>,
    events: Mutex<Vec<String>>,
}

fn slot<K: std::hash::Hash + Eq + Clone, T>(map: &RwLock<HashMap<K, Slot<T>>>, key: &K) -> Slot<T> {
    if let Some(s) = map.read().unwrap().get(key) {
        return s.clone();
    }
    map.write().unwrap().entry(key.clone()).or_default().clone()
}

impl HookCache {
    /// Cache persisted under `dir`, or memory-only when `None`.
    pub fn new(dir: Option<PathBuf>) -> Self {
        HookCache { dir, bases: RwLock::default(), actions: RwLock::default(), events: Mutex::default() }
    }

    /// Directory from `DETCX_CACHE_DIR`, else a folder in the system temp dir.
    pub fn default_dir() -> PathBuf {
        std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("detcx-hooks"))
    }

    pub fn global() -> &'static HookCache {
        static GLOBAL: OnceLock<HookCache> = OnceLock::new();
        GLOBAL.get_or_init(|| HookCache::new(Some(HookCache::default_dir())))
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn file_path(&self, key: &HookKey) -> Option<PathBuf> {
        self.dir.as_ref().map(|d| d.join(key.file_name()))
    }

    /// Integrity problems met while loading (each triggered a rebuild).
    pub fn integrity_events(&self) -> Vec<String> {
        self.events.lock().unwrap().clone()
    }

    pub fn basis(&self, key: HookKey) -> Result<Arc<HookBasis>> {
        slot(&self.bases, &key).get_or_init(|| self.fill(key).map(Arc::new)).clone()
    }

    /// Basis for a non-standard variant; never cached.
    pub fn basis_with(&self, key: HookKey, variant: MapVariant) -> Result<Arc<HookBasis>> {
        match variant {
            MapVariant::Standard => self.basis(key),
            v => HookBasis::compute(key.kind, key.d, key.p, key.q, v).map(Arc::new),
        }
    }

    /// Action of the `ell`-th basis vector from `key` to its neighbour
    /// (`q + 1` for `L`, `q - 1` for `K`).
    pub fn action(&self, key: HookKey, ell: usize) -> Result<Arc<HookAction>> {
        slot(&self.actions, &(key, ell))
            .get_or_init(|| {
                let src = self.basis(key)?;
                let tq = match key.kind {
                    HookKind::L => key.q + 1,
                    HookKind::K => key.q - 1,
                };
                let tgt = self.basis(HookKey { q: tq, ..key })?;
                hook_action(&src, &tgt, ell).map(Arc::new)
            })
            .clone()
    }

    fn fill(&self, key: HookKey) -> Result<HookBasis> {
        if let Some(path) = self.file_path(&key) {
            match self.load(&key, &path) {
                Ok(b) => return Ok(b),
                Err(Error::CacheIntegrity { path, reason }) => {
                    self.events.lock().unwrap().push(format!("{path}: {reason}"));
                }
                Err(_) => {}
            }
        }
        let basis = HookBasis::compute(key.kind, key.d, key.p, key.q, MapVariant::Standard)?;
        if let Some(path) = self.file_path(&key) {
            // A failed write only costs a recomputation later.
            let _ = write_atomic(&path, &render_hook_file(&basis));
        }
        Ok(basis)
    }

    /// Read and validate a cache file. A missing file is an `Io` error;
    /// anything present but wrong is `CacheIntegrity`.
    pub fn load(&self, key: &HookKey, path: &Path) -> Result<HookBasis> {
        let text = fs::read_to_string(path)?;
        let integrity = |reason: String| Error::CacheIntegrity { path: path.display().to_string(), reason };
        let file = parse_hook_file(&text).map_err(|e| integrity(e.to_string()))?;
        if file.key != *key {
            return Err(integrity("header does not match requested module".into()));
        }
        let basis = HookBasis::from_columns(key.kind, key.d, key.p, key.q, file.columns)
            .map_err(|e| integrity(e.to_string()))?;
        if basis.ambient_dim() != file.ambient {
            return Err(integrity("ambient dimension mismatch".into()));
        }
        if basis.rank() != super::hooks::hook_rank_formula(key.kind, key.d, key.p, key.q) {
            return Err(integrity("rank differs from formula".into()));
        }
        if !basis.is_annihilated(MapVariant::Standard) {
            return Err(integrity("columns not in the kernel".into()));
        }
        Ok(basis)
    }

    /// Remove every cache file in the directory; returns how many were removed.
    pub fn clear_disk(&self) -> Result<usize> {
        let Some(dir) = &self.dir else { return Ok(0) };
        let entries = match fs::read_dir(dir) {
            Ok(e) => e,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
            Err(e) => return Err(e.into()),
        };
        let mut n = 0;
        for entry in entries {
            let path = entry?.path();
            if path.extension().is_some_and(|x| x == "hook") {
                fs::remove_file(&path)?;
                n += 1;
            }
        }
        Ok(n)
    }
}

/// Files naming larger modules are treated as foreign and removed.
const MAX_AUDIT_RANK: usize = 16;

/// Outcome of [`HookCache::audit`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CacheAudit {
    pub valid: usize,
    /// Files that failed validation and were recomputed, with the reason.
    pub rebuilt: Vec<String>,
    /// Files too damaged to identify, deleted.
    pub removed: Vec<String>,
}

impl HookCache {
    /// Validates every cache file on disk, recomputing damaged ones.
    pub fn audit(&self) -> Result<CacheAudit> {
        let mut audit = CacheAudit::default();
        let Some(dir) = &self.dir else { return Ok(audit) };
        let entries = match fs::read_dir(dir) {
            Ok(e) => e,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(audit),
            Err(e) => return Err(e.into()),
        };
        let mut paths: Vec<PathBuf> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "hook"))
            .collect();
        paths.sort();
        for path in paths {
            let key = path.file_name().and_then(|n| n.to_str()).and_then(HookKey::from_file_name);
            let key = match key {
                Some(k) if k.d <= MAX_AUDIT_RANK => k,
                _ => {
                    fs::remove_file(&path)?;
                    audit.removed.push(path.display().to_string());
                    continue;
                }
            };
            match self.load(&key, &path) {
                Ok(_) => audit.valid += 1,
                Err(e) => {
                    fs::remove_file(&path)?;
                    let basis = HookBasis::compute(key.kind, key.d, key.p, key.q, MapVariant::Standard)?;
                    write_atomic(&path, &render_hook_file(&basis))?;
                    audit.rebuilt.push(e.to_string());
                }
            }
        }
        Ok(audit)
    }
}

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = path.parent().ok_or_else(|| Error::Io("cache path has no parent".into()))?;
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(".{}.{}.tmp", path.file_name().unwrap().to_string_lossy(), std::process::id()));
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Hook basis through the global cache.
pub fn hook_basis(kind: HookKind, d: usize, p: i64, q: i64) -> Result<Arc<HookBasis>> {
    HookCache::global().basis(HookKey::new(kind, d, p, q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_round_trip() {
        let b = HookBasis::compute(HookKind::K, 3, 1, 2, MapVariant::Standard).unwrap();
        let text = render_hook_file(&b);
        let f = parse_hook_file(&text).unwrap();
        assert_eq!(f.key, HookKey::new(HookKind::K, 3, 1, 2));
        assert_eq!(f.columns, b.columns());
    }

    #[test]
    fn checksum_detects_edit() {
        let b = HookBasis::compute(HookKind::L, 3, 1, 1, MapVariant::Standard).unwrap();
        let text = render_hook_file(&b);
        let idx = text.rfind('-').or_else(|| text.rfind('1')).unwrap();
        let mut tampered = text.clone();
        tampered.replace_range(idx..idx + 1, "2");
        assert!(parse_hook_file(&tampered).is_err());
    }

    #[test]
    fn corrupted_file_is_rebuilt() {
        let dir = tempfile::tempdir().unwrap();
        let key = HookKey::new(HookKind::L, 3, 2, 1);
        let first = HookCache::new(Some(dir.path().to_path_buf()));
        let good = first.basis(key).unwrap();
        let path = first.file_path(&key).unwrap();
        assert!(path.exists());
        fs::write(&path, "detcx-hook-basis v1\nkind L\n").unwrap();
        let second = HookCache::new(Some(dir.path().to_path_buf()));
        let rebuilt = second.basis(key).unwrap();
        assert_eq!(rebuilt.columns(), good.columns());
        assert_eq!(second.integrity_events().len(), 1);
        let third = HookCache::new(Some(dir.path().to_path_buf()));
        third.basis(key).unwrap();
        assert!(third.integrity_events().is_empty());
    }

    #[test]
    fn audit_rebuilds_and_removes() {
        let dir = tempfile::tempdir().unwrap();
        let cache = HookCache::new(Some(dir.path().to_path_buf()));
        let key = HookKey::new(HookKind::K, 3, 1, 2);
        let good = cache.basis(key).unwrap();
        let path = cache.file_path(&key).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        // valid header, one column entry altered
        let broken = text.replacen(" 1\n", " 2\n", 1);
        assert_ne!(broken, text);
        fs::write(&path, broken).unwrap();
        fs::write(dir.path().join("junk.hook"), "nonsense").unwrap();
        let audit = cache.audit().unwrap();
        assert_eq!(audit.valid, 0);
        assert_eq!(audit.rebuilt.len(), 1);
        assert_eq!(audit.removed.len(), 1);
        assert_eq!(cache.load(&key, &path).unwrap().columns(), good.columns());
        assert_eq!(cache.audit().unwrap().valid, 1);
    }
}
