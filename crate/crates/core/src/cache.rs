//! On-disk cache of per-group results, one JSON file per record.
//!
//! Records are keyed by table digest, class and operation name. Groups that
//! are isomorphic but numbered differently get separate records, since
//! element-level results depend on the numbering.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::formations::FormationSpec;
use crate::group::ContentHash;

/// Records written by another version are ignored.
pub const CACHE_VERSION: &str = concat!("formagraph-", env!("CARGO_PKG_VERSION"), "-1");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheMode {
    Off,
    On,
    /// Recompute on every hit and fail on disagreement.
    Validate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheKey {
    pub content_hash: ContentHash,
    pub formation: String,
    pub operation: String,
}

impl CacheKey {
    pub fn new(content_hash: ContentHash, f: FormationSpec, operation: &str) -> Self {
        CacheKey {
            content_hash,
            formation: f.to_string(),
            operation: operation.to_string(),
        }
    }

    fn file_name(&self) -> String {
        let mut h = Sha256::new();
        h.update(serde_json::to_vec(self).expect("keys serialize"));
        let digest: String = h.finalize()[..16].iter().map(|b| format!("{b:02x}")).collect();
        format!("{digest}.json")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub key: CacheKey,
    pub value: serde_json::Value,
    pub version: String,
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// Uses `dir`, creating it if needed.
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Cache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    /// The cached value, or `None` on a miss, a version change or a record
    /// that does not parse.
    pub fn get<T: DeserializeOwned>(&self, key: &CacheKey) -> Result<Option<T>> {
        let text = match fs::read_to_string(self.path_for(key)) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let Ok(record) = serde_json::from_str::<CacheRecord>(&text) else {
            return Ok(None);
        };
        if record.version != CACHE_VERSION || record.key != *key {
            return Ok(None);
        }
        Ok(serde_json::from_value(record.value).ok())
    }

    /// Writes a record to a temporary file in the cache directory and
    /// renames it into place, so readers never see a partial record.
    pub fn put<T: Serialize>(&self, key: &CacheKey, value: &T) -> Result<()> {
        let record = CacheRecord {
            key: key.clone(),
            value: serde_json::to_value(value).map_err(|e| Error::Io(e.to_string()))?,
            version: CACHE_VERSION.to_string(),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(
            serde_json::to_string_pretty(&record)
                .expect("records serialize")
                .as_bytes(),
        )?;
        tmp.persist(self.path_for(key)).map_err(|e| Error::from(e.error))?;
        Ok(())
    }

    /// Number of record files.
    pub fn len(&self) -> Result<usize> {
        Ok(fs::read_dir(&self.dir)?
            .filter_map(|e| e.ok())
            .filter(|e| e.path().extension().is_some_and(|x| x == "json"))
            .count())
    }

    pub fn is_empty(&self) -> Result<bool> {
        Ok(self.len()? == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin;

    #[test]
    fn round_trip_and_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let g = builtin("S3").unwrap();
        let key = CacheKey::new(g.content_hash(), FormationSpec::Abelian, "test");
        assert_eq!(cache.get::<Vec<u32>>(&key).unwrap(), None);
        cache.put(&key, &vec![1u32, 2, 3]).unwrap();
        assert_eq!(cache.get::<Vec<u32>>(&key).unwrap(), Some(vec![1, 2, 3]));
        let other = CacheKey::new(g.content_hash(), FormationSpec::Nilpotent, "test");
        assert_eq!(cache.get::<Vec<u32>>(&other).unwrap(), None);
        assert_eq!(cache.len().unwrap(), 1);
    }

    #[test]
    fn stale_version_is_a_miss() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::open(dir.path()).unwrap();
        let key = CacheKey::new(builtin("C2").unwrap().content_hash(), FormationSpec::Abelian, "t");
        let record = CacheRecord {
            key: key.clone(),
            value: serde_json::json!(7),
            version: "old".into(),
        };
        fs::write(cache.path_for(&key), serde_json::to_string(&record).unwrap()).unwrap();
        assert_eq!(cache.get::<u32>(&key).unwrap(), None);
        fs::write(cache.path_for(&key), "{ not json").unwrap();
        assert_eq!(cache.get::<u32>(&key).unwrap(), None);
    }
}
