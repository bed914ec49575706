//! On-disk result cache.
//!
//! Each entry is the exact JSON text a command printed, stored as
//! `<key>.json` where the key is the SHA-256 of the canonical JSON of
//! (schema version, command, spec, run config). `index.json` maps keys to
//! command names. Writes go through a temp file in the same directory and
//! a rename, so readers never see half an entry.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde_json::Value;
use sha2::{Digest, Sha256};

pub fn key(material: &Value) -> String {
    // serde_json maps are ordered by key, so this text is canonical.
    let text = serde_json::to_string(material).expect("json");
    hex::encode(Sha256::digest(text.as_bytes()))
}

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn open(dir: &Path) -> io::Result<Self> {
        fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    fn entry_path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// The stored output, or `None` on a miss. A corrupt entry counts as a
    /// miss and is reported on stderr; the caller recomputes and overwrites it.
    pub fn load(&self, key: &str, command: &str) -> Option<String> {
        let text = match fs::read_to_string(self.entry_path(key)) {
            Ok(t) => t,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return None,
            Err(e) => {
                eprintln!("warning: cache entry {key} unreadable ({e}); recomputing");
                return None;
            }
        };
        match serde_json::from_str::<Value>(&text) {
            Ok(v) if v.get("command").and_then(Value::as_str) == Some(command) => Some(text),
            _ => {
                eprintln!("warning: cache entry {key} is corrupt; recomputing");
                None
            }
        }
    }

    pub fn store(&self, key: &str, text: &str, command: &str) -> io::Result<()> {
        self.write_atomic(&self.entry_path(key), text.as_bytes())?;
        let index_path = self.dir.join("index.json");
        let mut index: BTreeMap<String, String> = fs::read_to_string(&index_path)
            .ok()
            .and_then(|t| serde_json::from_str(&t).ok())
            .unwrap_or_default();
        index.insert(key.to_string(), command.to_string());
        let body = serde_json::to_string_pretty(&index).expect("json");
        self.write_atomic(&index_path, body.as_bytes())
    }

    fn write_atomic(&self, path: &Path, bytes: &[u8]) -> io::Result<()> {
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir)?;
        tmp.write_all(bytes)?;
        tmp.flush()?;
        tmp.persist(path).map_err(|e| e.error)?;
        Ok(())
    }
}
