//! On-disk result cache keyed by document digest and canonical command.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub engine_version: String,
    pub key: String,
    pub output: String,
    pub exit: u8,
}

pub enum Lookup {
    Hit(Entry),
    Miss,
}

pub struct Cache {
    dir: PathBuf,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Cache {
    pub fn new(dir: &Path) -> Self {
        Cache { dir: dir.to_path_buf() }
    }

    pub fn key(digest: &str, command: &str, format: &str) -> String {
        sha256_hex(format!("{digest}\n{command}\n{format}").as_bytes())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    /// Corrupt entries warn on stderr and count as misses; entries from
    /// another engine version are misses.
    pub fn lookup(&self, key: &str) -> Lookup {
        let path = self.path(key);
        let Ok(text) = fs::read_to_string(&path) else { return Lookup::Miss };
        match serde_json::from_str::<Entry>(&text) {
            Ok(e) if e.key == key && e.exit <= 1 => {
                if e.engine_version == gpw_core::ENGINE_VERSION {
                    Lookup::Hit(e)
                } else {
                    Lookup::Miss
                }
            }
            _ => {
                eprintln!("warning: ignoring corrupt cache entry {}", path.display());
                Lookup::Miss
            }
        }
    }

    pub fn store(&self, key: &str, output: &str, exit: u8) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let entry = Entry {
            engine_version: gpw_core::ENGINE_VERSION.into(),
            key: key.into(),
            output: output.into(),
            exit,
        };
        let tmp = self.dir.join(format!("{key}.json.tmp{}", std::process::id()));
        fs::write(&tmp, serde_json::to_string(&entry).expect("entries serialize"))?;
        fs::rename(&tmp, self.path(key))
    }
}
