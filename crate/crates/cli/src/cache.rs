//! Content-addressed store of exact search results, one JSON file each.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use arlab_core::graph::{canonical_code, Graph};
use arlab_core::search::{Problem, SearchResult};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

pub const SCHEMA: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Entry {
    schema: u32,
    key: String,
    result: SearchResult,
}

pub struct Cache {
    dir: PathBuf,
}

/// Cache identity of a query. Isomorphic graphs share an entry.
pub fn key(problem: Problem, n: usize, graphs: &[Graph], family: Option<&str>) -> String {
    let mut codes: Vec<String> = graphs.iter().map(|g| canonical_code(g).to_hex()).collect();
    if problem == Problem::Ex {
        codes.sort();
    }
    let problem = serde_json::to_value(problem).expect("enum serializes");
    format!("v{SCHEMA}|{}|{n}|{}|{}", problem.as_str().unwrap_or_default(), codes.join(","), family.unwrap_or(""))
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$HOME/.cache/arlab`, or a directory under the system temp dir.
    pub fn default_dir() -> PathBuf {
        match std::env::var_os("HOME") {
            Some(home) => Path::new(&home).join(".cache").join("arlab"),
            None => std::env::temp_dir().join("arlab-cache"),
        }
    }

    fn path(&self, key: &str) -> PathBuf {
        let digest = hex::encode(Sha256::digest(key.as_bytes()));
        self.dir.join(&digest[..2]).join(format!("{digest}.json"))
    }

    /// A stored result, if present and readable. Corrupt entries are
    /// treated as misses.
    pub fn load(&self, key: &str) -> Option<SearchResult> {
        let text = fs::read_to_string(self.path(key)).ok()?;
        let entry: Entry = serde_json::from_str(&text).ok()?;
        (entry.schema == SCHEMA && entry.key == key && entry.result.is_exact()).then_some(entry.result)
    }

    /// Stores an exact result; other statuses are ignored.
    pub fn store(&self, key: &str, result: &SearchResult) -> io::Result<()> {
        if !result.is_exact() {
            return Ok(());
        }
        let path = self.path(key);
        let parent = path.parent().expect("cache path has a parent");
        fs::create_dir_all(parent)?;
        let entry = Entry { schema: SCHEMA, key: key.to_string(), result: result.clone() };
        let text = serde_json::to_string_pretty(&entry).map_err(io::Error::other)?;
        let tmp = parent.join(format!(".{}.tmp", std::process::id()));
        fs::write(&tmp, text)?;
        fs::rename(tmp, path)
    }
}
