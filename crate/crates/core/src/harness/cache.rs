//! Append-only results cache: one tab-separated record per line,
//! `graph6  property  tuple  status`, tuple as comma-separated indices.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use crate::error::Result;

/// Environment variable that overrides [`default_cache_path`].
pub const CACHE_ENV: &str = "HAMSQ_CACHE";

pub fn default_cache_path() -> PathBuf {
    std::env::var_os(CACHE_ENV).map(PathBuf::from).unwrap_or_else(|| PathBuf::from("hamsq-cache.tsv"))
}

type Key = (String, String, String);

pub struct ResultsCache {
    path: PathBuf,
    known: HashMap<Key, String>,
    out: Mutex<BufWriter<File>>,
}

pub fn format_tuple(tuple: &[usize]) -> String {
    tuple.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl ResultsCache {
    /// Loads existing records (malformed lines are skipped) and opens the
    /// file for appending.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut known = HashMap::new();
        if path.exists() {
            for line in BufReader::new(File::open(&path)?).lines() {
                let line = line?;
                let f: Vec<&str> = line.split('\t').collect();
                if let [g6, prop, tuple, status] = f[..] {
                    known.insert((g6.to_string(), prop.to_string(), tuple.to_string()), status.to_string());
                }
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        Ok(ResultsCache { path, known, out: Mutex::new(BufWriter::new(file)) })
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.known.len()
    }

    pub fn is_empty(&self) -> bool {
        self.known.is_empty()
    }

    /// Status recorded by an earlier run, if any.
    pub fn get(&self, graph6: &str, property: &str, tuple: &[usize]) -> Option<&str> {
        self.known.get(&(graph6.to_string(), property.to_string(), format_tuple(tuple))).map(String::as_str)
    }

    pub fn record(&self, graph6: &str, property: &str, tuple: &[usize], status: &str) -> Result<()> {
        let mut out = self.out.lock().unwrap();
        writeln!(out, "{graph6}\t{property}\t{}\t{status}", format_tuple(tuple))?;
        Ok(())
    }

    pub fn flush(&self) -> Result<()> {
        self.out.lock().unwrap().flush()?;
        Ok(())
    }
}

impl Drop for ResultsCache {
    fn drop(&mut self) {
        let _ = self.flush();
    }
}
