//! Append-only JSON-lines store of computed degrees.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use bott_core::families::Family;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

/// One computed degree, as stored on disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRecord {
    pub family: String,
    pub params: BTreeMap<String, usize>,
    pub d: i64,
    pub degree: String,
    pub weights: Vec<i64>,
}

impl DegreeRecord {
    pub fn new(family: Family, d: i64, degree: &BigInt, weights: &[i64]) -> Self {
        DegreeRecord {
            family: family.tag().to_string(),
            params: params_of(family),
            d,
            degree: degree.to_string(),
            weights: weights.to_vec(),
        }
    }

    pub fn matches(&self, family: Family) -> bool {
        self.family == family.tag() && self.params == params_of(family)
    }

    pub fn degree_value(&self) -> Result<BigInt, String> {
        self.degree
            .parse()
            .map_err(|_| format!("cache record for d={} has a malformed degree", self.d))
    }
}

fn params_of(family: Family) -> BTreeMap<String, usize> {
    family
        .params()
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect()
}

/// Reads the degrees already stored for `family`, keyed by `d`.
pub fn load(path: &Path, family: Family) -> Result<BTreeMap<i64, BigInt>, String> {
    let mut out = BTreeMap::new();
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(out),
        Err(e) => return Err(format!("cannot read cache {}: {e}", path.display())),
    };
    for (lineno, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| format!("cannot read cache {}: {e}", path.display()))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: DegreeRecord = match serde_json::from_str(&line) {
            Ok(r) => r,
            Err(_) => continue,
        };
        if !rec.matches(family) {
            continue;
        }
        let value = rec.degree_value()?;
        if let Some(prev) = out.insert(rec.d, value.clone()) {
            if prev != value {
                return Err(format!(
                    "cache {} line {}: conflicting degrees for d={}",
                    path.display(),
                    lineno + 1,
                    rec.d
                ));
            }
        }
    }
    Ok(out)
}

/// Serializes appends from concurrent workers, one whole line per write.
pub struct CacheWriter {
    path: PathBuf,
    file: Mutex<File>,
}

impl CacheWriter {
    pub fn open(path: &Path) -> Result<Self, String> {
        let mut file = OpenOptions::new()
            .create(true)
            .append(true)
            .read(true)
            .open(path)
            .map_err(|e| format!("cannot open cache {}: {e}", path.display()))?;
        terminate_partial_line(&mut file, path)?;
        Ok(CacheWriter {
            path: path.to_path_buf(),
            file: Mutex::new(file),
        })
    }

    pub fn append(&self, record: &DegreeRecord) -> Result<(), String> {
        let mut line = serde_json::to_string(record).map_err(|e| e.to_string())?;
        line.push('\n');
        let mut file = self
            .file
            .lock()
            .map_err(|_| "cache writer poisoned".to_string())?;
        file.write_all(line.as_bytes())
            .and_then(|_| file.flush())
            .map_err(|e| format!("cannot append to cache {}: {e}", self.path.display()))
    }
}

fn terminate_partial_line(file: &mut File, path: &Path) -> Result<(), String> {
    use std::io::{Read, Seek, SeekFrom};
    let len = file
        .metadata()
        .map_err(|e| format!("cannot stat cache {}: {e}", path.display()))?
        .len();
    if len == 0 {
        return Ok(());
    }
    let mut last = [0u8; 1];
    file.seek(SeekFrom::Start(len - 1))
        .and_then(|_| file.read_exact(&mut last))
        .map_err(|e| format!("cannot read cache {}: {e}", path.display()))?;
    if last[0] != b'\n' {
        file.write_all(b"\n")
            .map_err(|e| format!("cannot repair cache {}: {e}", path.display()))?;
    }
    Ok(())
}
