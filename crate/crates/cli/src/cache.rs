//! On-disk spectrum cache.
//!
//! One file per group, named by the SHA-256 of its canonical generator text:
//!
//! ```text
//! version 0.1.0
//! key <hex>
//! group_order 60
//! orders 1 2 3 5
//! ```
//!
//! An entry is used only when both key and version match. Files are written
//! to a temporary name and renamed into place.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use primegraph::group::Spectrum;
use sha2::{Digest, Sha256};

pub const CACHE_DIR_ENV: &str = "PRIMEGRAPH_CACHE_DIR";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// The cache root: `$PRIMEGRAPH_CACHE_DIR`, else `$XDG_CACHE_HOME/primegraph`,
/// else `$HOME/.cache/primegraph`.
pub fn default_cache_dir() -> Option<PathBuf> {
    if let Some(d) = std::env::var_os(CACHE_DIR_ENV) {
        return Some(PathBuf::from(d));
    }
    if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
        return Some(PathBuf::from(d).join("primegraph"));
    }
    std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("primegraph"))
}

pub fn cache_key(canonical_text: &str) -> String {
    hex::encode(Sha256::digest(canonical_text.as_bytes()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheEntry {
    pub key: String,
    pub version: String,
    pub spectrum: Spectrum,
}

impl CacheEntry {
    pub fn to_text(&self) -> String {
        let orders: Vec<String> = self.spectrum.orders().iter().map(|o| o.to_string()).collect();
        format!(
            "version {}\nkey {}\ngroup_order {}\norders {}\n",
            self.version,
            self.key,
            self.spectrum.group_order(),
            orders.join(" ")
        )
    }

    pub fn parse(text: &str) -> Option<CacheEntry> {
        let mut lines = text.lines();
        let mut field = |name: &str| lines.next()?.strip_prefix(name)?.strip_prefix(' ').map(str::to_string);
        let version = field("version")?;
        let key = field("key")?;
        let group_order: u64 = field("group_order")?.parse().ok()?;
        let orders: Vec<u64> = field("orders")?
            .split_whitespace()
            .map(|t| t.parse().ok())
            .collect::<Option<_>>()?;
        let spectrum = Spectrum::new(orders, group_order).ok()?;
        Some(CacheEntry { key, version, spectrum })
    }
}

#[derive(Clone, Debug)]
pub struct SpectrumCache {
    dir: PathBuf,
}

impl SpectrumCache {
    pub fn new(root: &Path) -> std::io::Result<Self> {
        let dir = root.join("spectra");
        fs::create_dir_all(&dir)?;
        Ok(SpectrumCache { dir })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.txt"))
    }

    pub fn get(&self, key: &str) -> Option<Spectrum> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry = CacheEntry::parse(&text)?;
        (entry.key == key && entry.version == VERSION).then_some(entry.spectrum)
    }

    pub fn put(&self, key: &str, spectrum: &Spectrum) -> std::io::Result<()> {
        let entry = CacheEntry { key: key.to_string(), version: VERSION.to_string(), spectrum: spectrum.clone() };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(entry.to_text().as_bytes())?;
        tmp.persist(self.path(key)).map_err(|e| e.error)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SpectrumCache::new(dir.path()).unwrap();
        let s = Spectrum::new([1, 2, 3, 5], 60).unwrap();
        let key = cache_key("A5");
        assert_eq!(cache.get(&key), None);
        cache.put(&key, &s).unwrap();
        assert_eq!(cache.get(&key), Some(s.clone()));
        let entry = CacheEntry { key: key.clone(), version: VERSION.into(), spectrum: s };
        assert_eq!(CacheEntry::parse(&entry.to_text()), Some(entry));
    }

    #[test]
    fn version_or_key_mismatch_misses() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SpectrumCache::new(dir.path()).unwrap();
        let s = Spectrum::new([1, 2], 2).unwrap();
        let key = cache_key("C2");
        let stale = CacheEntry { key: key.clone(), version: "0.0.0".into(), spectrum: s.clone() };
        fs::write(cache.path(&key), stale.to_text()).unwrap();
        assert_eq!(cache.get(&key), None);
        let wrong = CacheEntry { key: cache_key("C3"), version: VERSION.into(), spectrum: s };
        fs::write(cache.path(&key), wrong.to_text()).unwrap();
        assert_eq!(cache.get(&key), None);
        fs::write(cache.path(&key), "garbage").unwrap();
        assert_eq!(cache.get(&key), None);
    }
}
