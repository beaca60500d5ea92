//! On-disk cache of reduced Groebner bases, one JSON file per genus.
//!
//! Entries are revalidated on every load. A file that fails to parse or
//! validate is recomputed and overwritten.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use invariant_ring::groebner::ORDER_TAG;
use invariant_ring::parse::parse_poly;
use invariant_ring::relations::relations_by_recursion;
use invariant_ring::GroebnerBasis;
use serde::{Deserialize, Serialize};
use tempfile::NamedTempFile;

use crate::emit::json_document;

pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CacheEntry {
    pub version: u32,
    pub genus: u32,
    pub order_tag: String,
    pub elements: Vec<String>,
}

impl CacheEntry {
    pub fn from_basis(genus: u32, gb: &GroebnerBasis) -> Self {
        CacheEntry {
            version: CACHE_VERSION,
            genus,
            order_tag: gb.order_tag.to_string(),
            elements: gb.elements.iter().map(|p| p.to_string()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        json_document(&serde_json::to_value(self).expect("plain fields"))
    }

    /// Rebuilds the basis and checks it before handing it out.
    pub fn validate(&self, genus: u32) -> Result<GroebnerBasis, String> {
        if self.version != CACHE_VERSION {
            return Err(format!(
                "version {} (expected {CACHE_VERSION})",
                self.version
            ));
        }
        if self.genus != genus {
            return Err(format!("genus {} (expected {genus})", self.genus));
        }
        if self.order_tag != ORDER_TAG {
            return Err(format!("order tag {:?}", self.order_tag));
        }
        if self.elements.is_empty() {
            return Err("no elements".into());
        }
        let elements = self
            .elements
            .iter()
            .map(|s| parse_poly(s).map_err(|e| format!("element {s:?}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        let gb = GroebnerBasis {
            genus: Some(genus),
            elements,
            order_tag: ORDER_TAG,
        };
        if !gb.is_reduced() {
            return Err("basis is not reduced".into());
        }
        if !gb.is_groebner() {
            return Err("an S-polynomial does not reduce to zero".into());
        }
        let tr = relations_by_recursion(genus).map_err(|e| e.to_string())?;
        if let Some(f) = tr.as_array().into_iter().find(|f| !gb.contains(f)) {
            return Err(format!("relation {f} is not in the cached ideal"));
        }
        Ok(gb)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Computed,
    /// an existing file was rejected for the given reason
    Recomputed(String),
}

#[derive(Debug, Clone)]
pub struct BasisCache {
    dir: PathBuf,
}

impl BasisCache {
    pub fn open(dir: impl Into<PathBuf>) -> io::Result<Self> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(BasisCache { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, genus: u32) -> PathBuf {
        self.dir.join(format!("ideal_g{genus}.json"))
    }

    /// Writes through a temporary file in the same directory and renames it into place.
    pub fn save(&self, genus: u32, gb: &GroebnerBasis) -> io::Result<()> {
        let mut tmp = NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(CacheEntry::from_basis(genus, gb).to_json().as_bytes())?;
        tmp.as_file().sync_all()?;
        tmp.persist(self.path(genus)).map_err(|e| e.error)?;
        Ok(())
    }

    /// `Ok(None)` when no file exists, `Err(reason)` when it exists but is unusable.
    pub fn load(&self, genus: u32) -> io::Result<Option<Result<GroebnerBasis, String>>> {
        let text = match fs::read_to_string(self.path(genus)) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e),
        };
        let entry = match serde_json::from_str::<CacheEntry>(&text) {
            Ok(entry) => entry,
            Err(e) => return Ok(Some(Err(format!("unreadable: {e}")))),
        };
        Ok(Some(entry.validate(genus)))
    }

    pub fn get_or_compute(&self, genus: u32) -> io::Result<(GroebnerBasis, CacheStatus)> {
        let status = match self.load(genus)? {
            Some(Ok(gb)) => return Ok((gb, CacheStatus::Hit)),
            Some(Err(reason)) => CacheStatus::Recomputed(reason),
            None => CacheStatus::Computed,
        };
        let gb = GroebnerBasis::for_genus(genus)
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e))?;
        self.save(genus, &gb)?;
        Ok((gb, status))
    }
}

/// Basis for `genus`, through the cache when one is configured.
pub fn basis_for(
    genus: u32,
    cache: Option<&BasisCache>,
) -> io::Result<(GroebnerBasis, Option<CacheStatus>)> {
    match cache {
        Some(c) => c.get_or_compute(genus).map(|(gb, s)| (gb, Some(s))),
        None => GroebnerBasis::for_genus(genus)
            .map(|gb| (gb, None))
            .map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e)),
    }
}
