//! On-disk cache of searched certificates.
//!
//! The directory comes from `DESIGN_FIXTURE_DIR`; without it nothing is
//! cached. Entries are re-verified on load, so a stale or edited file is
//! ignored and regenerated rather than trusted.

use std::path::PathBuf;

use crate::error::Result;
use crate::format;
use crate::model::Certificate;

pub const ENV: &str = "DESIGN_FIXTURE_DIR";

pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(ENV).filter(|s| !s.is_empty()).map(PathBuf::from)
}

/// File name for a task key: alphanumerics kept, everything else `_`.
pub fn entry_path(dir: &std::path::Path, key: &str) -> PathBuf {
    let clean: String = key
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' })
        .collect();
    dir.join(format!("{clean}.cert"))
}

/// Returns the cached certificate for `key` if it still passes `accept`,
/// otherwise runs `produce` and stores its result.
pub fn cached(
    key: &str,
    accept: impl Fn(&Certificate) -> bool,
    produce: impl FnOnce() -> Result<Certificate>,
) -> Result<Certificate> {
    let Some(dir) = cache_dir() else {
        return produce();
    };
    let path = entry_path(&dir, key);
    if let Ok(c) = format::read_file(&path) {
        if accept(&c) {
            return Ok(c);
        }
    }
    let c = produce()?;
    if std::fs::create_dir_all(&dir).is_ok() {
        // a read-only cache only costs a re-search next time
        let _ = format::write_file(&path, &c);
    }
    Ok(c)
}
