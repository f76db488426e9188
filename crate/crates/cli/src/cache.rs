//! On-disk census cache: gzipped graph6 lines in a content-addressed file.

use std::fs;
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;

use alphacrit_core::{parse_graph6, Filter, Graph};
use flate2::read::GzDecoder;
use flate2::write::GzEncoder;
use flate2::Compression;
use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "ALPHACRIT_CACHE_DIR";

pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    /// `$ALPHACRIT_CACHE_DIR`, else `$XDG_CACHE_HOME/alphacrit`, else
    /// `~/.cache/alphacrit`. `None` when no location can be found.
    pub fn from_env() -> Option<Cache> {
        let dir = std::env::var_os(CACHE_ENV)
            .map(PathBuf::from)
            .or_else(|| {
                std::env::var_os("XDG_CACHE_HOME").map(|d| PathBuf::from(d).join("alphacrit"))
            })
            .or_else(|| {
                std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("alphacrit"))
            })?;
        Some(Cache { dir })
    }

    pub fn key(n: usize, filter: Filter, connected: bool) -> String {
        let filter = serde_json::to_string(&filter).expect("filter serializes");
        let mut h = Sha256::new();
        h.update(format!(
            "census|n={n}|filter={filter}|connected={connected}|version={}",
            env!("CARGO_PKG_VERSION")
        ));
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.g6.gz"))
    }

    /// Cached graphs, or `None` on a miss or an unreadable entry.
    pub fn load(&self, key: &str) -> Option<Vec<Graph>> {
        let file = fs::File::open(self.path(key)).ok()?;
        let mut out = Vec::new();
        for line in BufReader::new(GzDecoder::new(file)).lines() {
            out.push(parse_graph6(&line.ok()?).ok()?);
        }
        Some(out)
    }

    /// Best effort; failures leave the cache untouched.
    pub fn store(&self, key: &str, lines: &[String]) {
        let _ = self.try_store(key, lines);
    }

    fn try_store(&self, key: &str, lines: &[String]) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let tmp = self.dir.join(format!("{key}.tmp{}", std::process::id()));
        let mut enc = GzEncoder::new(fs::File::create(&tmp)?, Compression::default());
        for l in lines {
            writeln!(enc, "{l}")?;
        }
        enc.finish()?;
        fs::rename(&tmp, self.path(key))
    }
}
