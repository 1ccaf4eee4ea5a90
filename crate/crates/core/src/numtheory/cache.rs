//! On-disk cache of factorizations.
//!
//! One file per value, named by its decimal string, containing
//! `p1^e1 p2^e2 ...` in ascending prime order. Files are written to a
//! temporary name and renamed into place, so readers never see partial
//! content. A file that fails to parse or does not recompose to its value is
//! ignored and overwritten.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;

use super::{factorize, Factorization, NumberTheoryError};

/// Values below this are factored directly and never cached.
const MIN_CACHED_BITS: u64 = 48;

#[derive(Clone, Debug)]
pub struct FactorCache {
    dir: PathBuf,
}

impl FactorCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self, NumberTheoryError> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(FactorCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, n: &BigUint) -> PathBuf {
        self.dir.join(n.to_str_radix(10))
    }

    pub fn get(&self, n: &BigUint) -> Option<Factorization> {
        let text = fs::read_to_string(self.path(n)).ok()?;
        Factorization::parse_compact(n, text.trim())
    }

    pub fn put(&self, f: &Factorization) -> Result<(), NumberTheoryError> {
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        writeln!(tmp, "{}", f.to_compact())?;
        tmp.persist(self.path(f.value())).map_err(|e| e.error)?;
        Ok(())
    }

    /// Factorization through the cache. Write failures are ignored: the
    /// cache only ever saves work.
    pub fn factorize(&self, n: &BigUint) -> Factorization {
        if n.bits() < MIN_CACHED_BITS {
            return factorize(n);
        }
        if let Some(f) = self.get(n) {
            return f;
        }
        let f = factorize(n);
        let _ = self.put(&f);
        f
    }
}

/// Factorization with an optional cache.
pub fn factorize_with(cache: Option<&FactorCache>, n: &BigUint) -> Factorization {
    match cache {
        Some(c) => c.factorize(n),
        None => factorize(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let cache = FactorCache::new(dir.path()).unwrap();
        let n = BigUint::from(2u32).pow(64) + 1u32;
        let f = cache.factorize(&n);
        assert_eq!(f.recompose(), n);
        let path = dir.path().join(n.to_string());
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(text.trim(), "274177^1 67280421310721^1");
        assert_eq!(cache.get(&n), Some(f.clone()));
        fs::write(&path, "3^1 5^1\n").unwrap();
        assert_eq!(cache.get(&n), None);
        assert_eq!(cache.factorize(&n), f);
        assert_eq!(cache.get(&n), Some(f));
    }

    #[test]
    fn small_values_bypass_the_cache() {
        let dir = tempfile::tempdir().unwrap();
        let cache = FactorCache::new(dir.path()).unwrap();
        cache.factorize(&BigUint::from(1000u32));
        assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
    }
}
