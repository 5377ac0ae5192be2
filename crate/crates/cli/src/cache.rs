//! On-disk memo of generating-function tables.
//!
//! One JSON document, keyed by family, parameters and truncation order, with
//! coefficients stored as decimal strings.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

pub const VERSION: u32 = 1;

/// Environment variable naming the default cache file.
pub const ENV_VAR: &str = "SPT_CACHE";

#[derive(Debug, Default, Serialize, Deserialize)]
struct Document {
    version: u32,
    entries: BTreeMap<String, Vec<String>>,
}

#[derive(Debug)]
pub struct Cache {
    path: PathBuf,
    doc: Document,
    dirty: bool,
}

pub fn key(family: &str, j: Option<usize>, k: Option<u32>, order: usize) -> String {
    let show = |v: Option<String>| v.unwrap_or_else(|| "-".into());
    format!(
        "{family}|j={}|k={}|N={order}",
        show(j.map(|v| v.to_string())),
        show(k.map(|v| v.to_string()))
    )
}

impl Cache {
    /// Opens `path`; a missing file starts empty. A file from another version
    /// or one that does not parse is ignored and replaced on the next save.
    pub fn open(path: &Path) -> (Self, Option<String>) {
        let mut warning = None;
        let doc = match fs::read_to_string(path) {
            Ok(text) => match serde_json::from_str::<Document>(&text) {
                Ok(doc) if doc.version == VERSION => doc,
                Ok(doc) => {
                    warning = Some(format!("ignoring cache version {} in {}", doc.version, path.display()));
                    Document::default()
                }
                Err(e) => {
                    warning = Some(format!("ignoring unreadable cache {}: {e}", path.display()));
                    Document::default()
                }
            },
            Err(_) => Document::default(),
        };
        let cache = Self {
            path: path.to_path_buf(),
            doc: Document {
                version: VERSION,
                ..doc
            },
            dirty: false,
        };
        (cache, warning)
    }

    pub fn get(&self, key: &str) -> Option<Vec<BigInt>> {
        let raw = self.doc.entries.get(key)?;
        raw.iter().map(|s| s.parse().ok()).collect()
    }

    pub fn insert(&mut self, key: String, values: &[BigInt]) {
        self.doc
            .entries
            .insert(key, values.iter().map(|v| v.to_string()).collect());
        self.dirty = true;
    }

    pub fn save(&mut self) -> io::Result<()> {
        if !self.dirty {
            return Ok(());
        }
        let text = serde_json::to_string_pretty(&self.doc).map_err(io::Error::other)?;
        let tmp = self.path.with_extension("tmp");
        fs::write(&tmp, text + "\n")?;
        fs::rename(&tmp, &self.path)?;
        self.dirty = false;
        Ok(())
    }
}
