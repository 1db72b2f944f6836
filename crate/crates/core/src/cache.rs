//! On-disk cache of curvature-space bases.
//!
//! Entries are JSON files named by the SHA-256 of the key
//! `(format version, r, s, t, algebra)`. Bumping [`CACHE_FORMAT_VERSION`]
//! changes every file name, so stale entries are simply never found.
//! Cache trouble is never fatal: unreadable or corrupted entries are
//! reported with a warning and treated as misses, and failed writes are
//! reported and skipped.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use log::warn;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::curvature::{CurvatureSpace, CurvatureSpaceRecord};
use crate::liealg::LieAlgebra;

pub const CACHE_FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CacheKey {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub algebra: String,
}

impl CacheKey {
    pub fn new(r: usize, s: usize, t: usize, algebra: impl Into<String>) -> Self {
        CacheKey {
            r,
            s,
            t,
            algebra: algebra.into(),
        }
    }

    pub fn of(algebra: &LieAlgebra) -> Self {
        let sp = algebra.space();
        CacheKey::new(sp.r(), sp.s(), sp.t(), algebra.name())
    }
}

#[derive(Serialize, Deserialize)]
struct Entry {
    version: u32,
    key: CacheKey,
    space: CurvatureSpaceRecord,
}

#[derive(Clone, Debug)]
pub struct DiskCache {
    dir: PathBuf,
    version: u32,
}

impl DiskCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        DiskCache::with_version(dir, CACHE_FORMAT_VERSION)
    }

    pub fn with_version(dir: impl Into<PathBuf>, version: u32) -> Self {
        DiskCache {
            dir: dir.into(),
            version,
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &CacheKey) -> PathBuf {
        let tag = format!("v{}|{},{},{}|{}", self.version, key.r, key.s, key.t, key.algebra);
        let digest = Sha256::digest(tag.as_bytes());
        self.dir.join(format!("{}.json", hex::encode(digest)))
    }

    /// Looks up `𝓡(algebra)`. The stored basis is re-validated against the
    /// algebra before it is returned.
    pub fn get(&self, algebra: &Arc<LieAlgebra>) -> Option<CurvatureSpace> {
        let key = CacheKey::of(algebra);
        let path = self.path_for(&key);
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
            Err(e) => {
                warn!("cache read failed for {}: {e}", path.display());
                return None;
            }
        };
        let entry: Entry = match serde_json::from_str(&text) {
            Ok(entry) => entry,
            Err(e) => {
                warn!("corrupted cache entry {}: {e}; recomputing", path.display());
                return None;
            }
        };
        if entry.version != self.version || entry.key != key || entry.space.algebra != algebra.name() {
            warn!("cache entry {} does not match its key; recomputing", path.display());
            return None;
        }
        match CurvatureSpace::from_basis(algebra.clone(), &entry.space.basis) {
            Ok(space) if space.dim() == entry.space.dim => Some(space),
            Ok(_) => {
                warn!(
                    "cache entry {} has an inconsistent dimension; recomputing",
                    path.display()
                );
                None
            }
            Err(e) => {
                warn!("invalid cache entry {}: {e}; recomputing", path.display());
                None
            }
        }
    }

    /// Stores `𝓡(𝔤)`. Returns whether the entry was written.
    pub fn put(&self, space: &CurvatureSpace) -> bool {
        let key = CacheKey::of(space.algebra());
        let path = self.path_for(&key);
        let entry = Entry {
            version: self.version,
            key,
            space: space.to_record(),
        };
        match self.write_atomic(&path, &entry) {
            Ok(()) => true,
            Err(e) => {
                warn!("cache write to {} failed: {e}; continuing uncached", path.display());
                false
            }
        }
    }

    fn write_atomic(&self, path: &Path, entry: &Entry) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(serde_json::to_string(entry)?.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, path)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvature::bianchi_kernel;
    use crate::liealg::build_h0;
    use crate::quatspace::QuaternionicSpace;

    fn h0() -> Arc<LieAlgebra> {
        let sp = Arc::new(QuaternionicSpace::new(1, 1, 1).unwrap());
        Arc::new(build_h0(&sp).unwrap())
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path());
        let g = h0();
        assert!(cache.get(&g).is_none());
        let r = bianchi_kernel(&g);
        assert!(cache.put(&r));
        let back = cache.get(&g).unwrap();
        assert_eq!(back.kernel(), r.kernel());
    }

    #[test]
    fn version_bump_misses() {
        let dir = tempfile::tempdir().unwrap();
        let g = h0();
        DiskCache::new(dir.path()).put(&bianchi_kernel(&g));
        let bumped = DiskCache::with_version(dir.path(), CACHE_FORMAT_VERSION + 1);
        assert!(bumped.get(&g).is_none());
    }

    #[test]
    fn corrupted_entry_misses() {
        let dir = tempfile::tempdir().unwrap();
        let cache = DiskCache::new(dir.path());
        let g = h0();
        cache.put(&bianchi_kernel(&g));
        let path = cache.path_for(&CacheKey::of(&g));
        fs::write(&path, "{ not json").unwrap();
        assert!(cache.get(&g).is_none());

        // Well-formed but with a basis vector that is not a curvature tensor.
        let mut rec = bianchi_kernel(&g).to_record();
        rec.basis[0]
            .iter_mut()
            .for_each(|c| *c = crate::exactlin::Rational::ONE);
        let entry = Entry {
            version: CACHE_FORMAT_VERSION,
            key: CacheKey::of(&g),
            space: rec,
        };
        fs::write(&path, serde_json::to_string(&entry).unwrap()).unwrap();
        assert!(cache.get(&g).is_none());
    }

    #[test]
    fn unwritable_dir_is_not_fatal() {
        let dir = tempfile::tempdir().unwrap();
        let blocker = dir.path().join("file");
        fs::write(&blocker, "").unwrap();
        let cache = DiskCache::new(blocker.join("sub"));
        assert!(!cache.put(&bianchi_kernel(&h0())));
    }
}
