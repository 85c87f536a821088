//! On-disk cache of reduced Gröbner bases.
//!
//! Entries are JSON files named `<tag>_n<n>_k<k>_<order>.json` holding the
//! order tag, the generators, the reduced basis and a SHA-256 of the
//! inputs. A hash mismatch is treated as a miss. Writes go through a
//! temporary file in the same directory followed by an atomic rename, so
//! concurrent writers never expose a partial file.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::{buchberger, GroebnerBasis, IdealPresentation};
use crate::error::Result;
use crate::polyring::{MonomialOrder, Polynomial};

/// Environment variable overriding the cache directory.
pub const CACHE_DIR_ENV: &str = "PACKED_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    basis: Vec<Polynomial>,
    hash: String,
}

#[derive(Clone, Debug)]
pub struct GroebnerCache {
    dir: PathBuf,
}

impl GroebnerCache {
    pub fn new(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(Self { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, tag: &str, n: usize, k: usize, order: MonomialOrder) -> PathBuf {
        self.dir.join(format!("{tag}_n{n}_k{k}_{}.json", order.tag()))
    }

    pub fn input_hash(ideal: &IdealPresentation, order: MonomialOrder) -> String {
        let payload = serde_json::to_vec(&(order, ideal.generators())).expect("serializable");
        Sha256::digest(&payload).iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Cached basis if present and matching the inputs.
    pub fn load(
        &self,
        tag: &str,
        n: usize,
        k: usize,
        ideal: &IdealPresentation,
        order: MonomialOrder,
    ) -> Option<GroebnerBasis> {
        let bytes = fs::read(self.path(tag, n, k, order)).ok()?;
        let entry: CacheEntry = serde_json::from_slice(&bytes).ok()?;
        if entry.order != order || entry.hash != Self::input_hash(ideal, order) {
            return None;
        }
        if entry.basis.iter().any(|p| p.arity() != ideal.arity()) {
            return None;
        }
        Some(GroebnerBasis::from_polynomials(ideal.arity(), order, entry.basis))
    }

    pub fn store(
        &self,
        tag: &str,
        n: usize,
        k: usize,
        ideal: &IdealPresentation,
        gb: &GroebnerBasis,
    ) -> Result<()> {
        let entry = CacheEntry {
            order: gb.order(),
            generators: ideal.generators().to_vec(),
            basis: gb.basis().to_vec(),
            hash: Self::input_hash(ideal, gb.order()),
        };
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        serde_json::to_writer(&mut tmp, &entry)?;
        tmp.flush()?;
        tmp.persist(self.path(tag, n, k, gb.order())).map_err(|e| e.error)?;
        Ok(())
    }

    pub fn get_or_compute(
        &self,
        tag: &str,
        n: usize,
        k: usize,
        ideal: &IdealPresentation,
        order: MonomialOrder,
    ) -> Result<GroebnerBasis> {
        if let Some(gb) = self.load(tag, n, k, ideal, order) {
            return Ok(gb);
        }
        let gb = buchberger(ideal, order)?;
        self.store(tag, n, k, ideal, &gb)?;
        Ok(gb)
    }
}
