//! Run manifests: the config echo, seed, library version, content digests
//! of every data file, and wall time. Re-running with the same config and
//! seed reproduces the data files byte for byte; the manifest itself only
//! varies in its timing field.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::config::ExperimentConfig;
use crate::error::{ExpError, Result};

pub const MANIFEST_FILE: &str = "manifest.json";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunManifest {
    pub config: ExperimentConfig,
    pub master_seed: u64,
    pub version: String,
    /// File name → sha256 hex digest of its exact bytes.
    pub files: BTreeMap<String, String>,
    pub wall_time_seconds: f64,
    /// Named scalar results (fractions, rates, violation counts).
    pub summary: BTreeMap<String, f64>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for b in digest {
        out.push_str(&format!("{b:02x}"));
    }
    out
}

fn write_file(dir: &Path, name: &str, bytes: &[u8]) -> Result<PathBuf> {
    let path = dir.join(name);
    fs::write(&path, bytes).map_err(|source| ExpError::Io {
        path: path.clone(),
        source,
    })?;
    Ok(path)
}

/// Write every data file plus the manifest, digesting the exact bytes that
/// hit disk.
pub fn write_run(
    cfg: &ExperimentConfig,
    files: Vec<(String, Vec<u8>)>,
    summary: BTreeMap<String, f64>,
    started: Instant,
) -> Result<RunManifest> {
    fs::create_dir_all(&cfg.output_dir).map_err(|source| ExpError::Io {
        path: cfg.output_dir.clone(),
        source,
    })?;
    let mut digests = BTreeMap::new();
    for (name, bytes) in &files {
        write_file(&cfg.output_dir, name, bytes)?;
        digests.insert(name.clone(), sha256_hex(bytes));
    }
    let manifest = RunManifest {
        config: cfg.clone(),
        master_seed: cfg.master_seed,
        version: env!("CARGO_PKG_VERSION").to_string(),
        files: digests,
        wall_time_seconds: started.elapsed().as_secs_f64(),
        summary,
    };
    let mut bytes = serde_json::to_vec_pretty(&manifest)?;
    bytes.push(b'\n');
    write_file(&cfg.output_dir, MANIFEST_FILE, &bytes)?;
    Ok(manifest)
}
