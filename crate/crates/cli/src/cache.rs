//! Append-only JSONL cache of Cayley verdicts keyed by group, connection
//! set and tool version.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::{Mutex, RwLock};

use haar_core::CayleyVerdict;
use serde::{Deserialize, Serialize};

use crate::VERSION;

pub const CACHE_DIR_ENV: &str = "HAARLAB_CACHE_DIR";
pub const CACHE_FILE: &str = "verdicts.jsonl";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CacheLine {
    pub group: String,
    pub s: Vec<String>,
    pub version: String,
    pub verdict: CayleyVerdict,
}

type Key = (String, Vec<String>);

pub struct Cache {
    path: PathBuf,
    entries: RwLock<HashMap<Key, CayleyVerdict>>,
    writer: Mutex<BufWriter<File>>,
}

fn key(group: &str, s: &[String]) -> Key {
    let mut s = s.to_vec();
    s.sort();
    (group.to_string(), s)
}

impl Cache {
    /// Opens (creating if needed) the cache at `path`. Lines from other
    /// tool versions and malformed lines are ignored.
    pub fn open(path: &Path) -> std::io::Result<Self> {
        if let Some(dir) = path.parent() {
            if !dir.as_os_str().is_empty() {
                std::fs::create_dir_all(dir)?;
            }
        }
        let mut entries = HashMap::new();
        if path.exists() {
            for line in BufReader::new(File::open(path)?).lines() {
                let line = line?;
                if let Ok(entry) = serde_json::from_str::<CacheLine>(&line) {
                    if entry.version == VERSION {
                        entries.insert(key(&entry.group, &entry.s), entry.verdict);
                    }
                }
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(Cache {
            path: path.to_path_buf(),
            entries: RwLock::new(entries),
            writer: Mutex::new(BufWriter::new(file)),
        })
    }

    /// `$HAARLAB_CACHE_DIR/verdicts.jsonl`, if the variable is set.
    pub fn default_path() -> Option<PathBuf> {
        std::env::var_os(CACHE_DIR_ENV).map(|d| PathBuf::from(d).join(CACHE_FILE))
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, group: &str, s: &[String]) -> Option<CayleyVerdict> {
        self.entries
            .read()
            .expect("cache lock")
            .get(&key(group, s))
            .cloned()
    }

    pub fn insert(
        &self,
        group: &str,
        s: &[String],
        verdict: &CayleyVerdict,
    ) -> std::io::Result<()> {
        let k = key(group, s);
        let line = CacheLine {
            group: k.0.clone(),
            s: k.1.clone(),
            version: VERSION.to_string(),
            verdict: verdict.clone(),
        };
        {
            let mut w = self.writer.lock().expect("cache lock");
            serde_json::to_writer(&mut *w, &line)?;
            w.write_all(b"\n")?;
        }
        self.entries
            .write()
            .expect("cache lock")
            .insert(k, verdict.clone());
        Ok(())
    }

    pub fn flush(&self) -> std::io::Result<()> {
        self.writer.lock().expect("cache lock").flush()
    }
}

impl Drop for Cache {
    fn drop(&mut self) {
        let _ = self.flush();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use haar_core::{is_cayley, Graph};

    #[test]
    fn keys_ignore_element_order_and_other_versions() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let v = is_cayley(&Graph::cycle(6));
        {
            let c = Cache::open(&path).unwrap();
            c.insert("Z3", &["1".into(), "a".into()], &v).unwrap();
        }
        let mut stale = serde_json::to_value(CacheLine {
            group: "Z5".into(),
            s: vec!["1".into()],
            version: "0.0.0-old".into(),
            verdict: v.clone(),
        })
        .unwrap()
        .to_string();
        stale.push('\n');
        let mut f = OpenOptions::new().append(true).open(&path).unwrap();
        f.write_all(stale.as_bytes()).unwrap();
        drop(f);
        let c = Cache::open(&path).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.get("Z3", &["a".into(), "1".into()]), Some(v));
        assert!(c.get("Z5", &["1".into()]).is_none());
    }
}
