//! On-disk cache of reduced Gröbner bases, keyed by a SHA-256 of the
//! construction. A cached basis is re-verified with the S-pair criterion
//! before it is used.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Result;
use ccdeg_core::groebner::{self, io, GroebnerBasis};
use ccdeg_core::{MonomialOrder, Ring};
use sha2::{Digest, Sha256};

const FORMAT: &str = "ccdeg-cache/1";

#[derive(Debug, Default)]
pub struct Cache {
    dir: Option<PathBuf>,
    pub hits: Vec<String>,
    pub misses: Vec<String>,
    /// Entries found on disk but discarded (unreadable or not a basis).
    pub rejected: Vec<String>,
}

fn key(what: &str, ring: &Ring, order: &MonomialOrder) -> String {
    let mut h = Sha256::new();
    h.update(FORMAT);
    h.update("\n");
    h.update(what);
    h.update(format!("\nring: {}\norder: {}\n", ring.names().join(","), order.display(ring)));
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn load(path: &Path, ring: &Ring, order: &MonomialOrder) -> Result<GroebnerBasis> {
    let mut gb = io::read_basis(&fs::read_to_string(path)?)?;
    anyhow::ensure!(gb.ring.names() == ring.names(), "ring differs");
    anyhow::ensure!(gb.order == *order, "order differs");
    let check = groebner::is_groebner(&gb.elements, &gb.order);
    anyhow::ensure!(check.is_groebner, "{} S-pairs do not reduce to zero", check.failures.len());
    gb.ring = ring.clone();
    gb.reduced = true;
    Ok(gb)
}

impl Cache {
    pub fn new(dir: Option<PathBuf>) -> Self {
        Cache { dir, ..Cache::default() }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    /// The basis described by `what` (a complete description of the
    /// construction) for `order` on `ring`, from disk if possible.
    pub fn basis(
        &mut self,
        what: &str,
        ring: &Ring,
        order: &MonomialOrder,
        compute: impl FnOnce() -> ccdeg_core::Result<GroebnerBasis>,
    ) -> Result<GroebnerBasis> {
        let path = self.dir.as_ref().map(|d| d.join(format!("{}.gb", key(what, ring, order))));
        if let Some(p) = path.as_ref().filter(|p| p.exists()) {
            match load(p, ring, order) {
                Ok(gb) => {
                    log::info!("cache hit: {what}");
                    self.hits.push(what.to_string());
                    return Ok(gb);
                }
                Err(e) => {
                    log::warn!("discarding cache entry {}: {e}", p.display());
                    self.rejected.push(what.to_string());
                }
            }
        }
        log::info!("computing {what}");
        let gb = compute()?;
        self.misses.push(what.to_string());
        if let Some(p) = path {
            if let Err(e) = store(&p, &gb) {
                log::warn!("could not write cache entry {}: {e}", p.display());
            }
        }
        Ok(gb)
    }
}

fn store(path: &Path, gb: &GroebnerBasis) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, io::write_basis(gb))?;
    fs::rename(&tmp, path)?;
    Ok(())
}
