//! Ingestion of Ramsey-graph catalogs: newline-separated graph6 files, one
//! per level, with mandatory clique/independence validation, content
//! checksums, and a sidecar cache so re-validation can be skipped on
//! explicit request.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;
use crate::ramsey::{chromatic_ramsey_bounds, is_ramsey_graph};

/// Where a level's graphs came from and what the ingestion saw.
#[derive(Clone, Debug, Serialize)]
pub struct LevelProvenance {
    pub level: usize,
    pub path: String,
    pub count: usize,
    pub checksum: String,
}

/// Validated per-level Ramsey(k,k) lists for the catalog scan.
#[derive(Clone, Debug)]
pub struct RamseyLists {
    clique_order: usize,
    levels: BTreeMap<usize, Vec<Graph>>,
    provenance: Vec<LevelProvenance>,
}

pub const SIDECAR_NAME: &str = "validation.cache";

pub fn level_file_name(k: usize, level: usize) -> String {
    format!("r{k}{k}_{level}.g6")
}

fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for b in digest {
        write!(out, "{b:02x}").expect("hex write");
    }
    out
}

/// Parse a newline-separated graph6 file; every entry must have exactly
/// `level` vertices.
fn parse_level_file(path: &Path, level: usize) -> Result<(Vec<Graph>, String)> {
    let bytes = fs::read(path)?;
    let checksum = sha256_hex(&bytes);
    let text = String::from_utf8_lossy(&bytes);
    let mut graphs = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = graph6::decode(line.as_bytes()).map_err(|e| Error::InvalidListEntry {
            path: path.display().to_string(),
            line: idx + 1,
            detail: e.to_string(),
        })?;
        if g.n() != level {
            return Err(Error::InvalidListEntry {
                path: path.display().to_string(),
                line: idx + 1,
                detail: format!("graph has {} vertices, expected {level}", g.n()),
            });
        }
        graphs.push(g);
    }
    Ok((graphs, checksum))
}

fn validate_entries(path: &Path, k: usize, graphs: &[Graph]) -> Result<()> {
    let bad = graphs
        .par_iter()
        .enumerate()
        .find_map_first(|(idx, g)| match is_ramsey_graph(g, k, k) {
            Ok(true) => None,
            Ok(false) => Some((idx, "clique or independence number too large".to_string())),
            Err(e) => Some((idx, e.to_string())),
        });
    if let Some((idx, detail)) = bad {
        return Err(Error::InvalidListEntry {
            path: path.display().to_string(),
            line: idx + 1,
            detail,
        });
    }
    Ok(())
}

/// Sidecar cache: one `level count checksum` line per validated file.
#[derive(Debug, Default)]
pub struct ValidationCache {
    entries: BTreeMap<usize, (usize, String)>,
}

impl ValidationCache {
    pub fn read(dir: &Path) -> ValidationCache {
        let mut cache = ValidationCache::default();
        let Ok(text) = fs::read_to_string(dir.join(SIDECAR_NAME)) else {
            return cache;
        };
        for line in text.lines() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() == 3 {
                if let (Ok(level), Ok(count)) = (fields[0].parse(), fields[1].parse()) {
                    cache.entries.insert(level, (count, fields[2].to_string()));
                }
            }
        }
        cache
    }

    pub fn matches(&self, level: usize, count: usize, checksum: &str) -> bool {
        self.entries
            .get(&level)
            .is_some_and(|(c, sum)| *c == count && sum == checksum)
    }

    pub fn record(&mut self, level: usize, count: usize, checksum: String) {
        self.entries.insert(level, (count, checksum));
    }

    pub fn write(&self, dir: &Path) -> Result<()> {
        let mut text = String::new();
        for (level, (count, checksum)) in &self.entries {
            writeln!(text, "{level} {count} {checksum}").expect("string write");
        }
        fs::write(dir.join(SIDECAR_NAME), text)?;
        Ok(())
    }
}

impl RamseyLists {
    /// Ingest the catalog for `k`-chromatic scans from `dir`, expecting one
    /// file per level over the full scan window. Entry validation is
    /// mandatory; `trusted` skips it per level when the sidecar cache
    /// already records the file's checksum.
    pub fn load(dir: &Path, k: usize, trusted: bool) -> Result<RamseyLists> {
        let (lo, hi) = chromatic_ramsey_bounds(k)
            .ok_or_else(|| Error::Unsupported(format!("no catalog layout for k = {k}")))?;
        let cache = ValidationCache::read(dir);
        let mut levels = BTreeMap::new();
        let mut provenance = Vec::new();
        for level in lo..hi {
            let path: PathBuf = dir.join(level_file_name(k, level));
            if !path.exists() {
                return Err(Error::MissingLevel { level });
            }
            let (graphs, checksum) = parse_level_file(&path, level)?;
            if !(trusted && cache.matches(level, graphs.len(), &checksum)) {
                validate_entries(&path, k, &graphs)?;
            }
            provenance.push(LevelProvenance {
                level,
                path: path.display().to_string(),
                count: graphs.len(),
                checksum,
            });
            levels.insert(level, graphs);
        }
        Ok(RamseyLists {
            clique_order: k,
            levels,
            provenance,
        })
    }

    /// The in-house catalog for 3-chromatic scans: the single level 5, whose
    /// graphs are enumerated (and therefore valid by construction).
    pub fn builtin_33() -> Result<RamseyLists> {
        let fam = crate::ramsey::enumerate_ramsey_graphs(3, 3, 5, 10_000)?;
        let graphs: Vec<Graph> = fam.iter().cloned().collect();
        let serialized: Vec<u8> = graphs
            .iter()
            .flat_map(|g| {
                let mut line = graph6::encode(g);
                line.push(b'\n');
                line
            })
            .collect();
        let provenance = vec![LevelProvenance {
            level: 5,
            path: "(in-house enumeration)".to_string(),
            count: graphs.len(),
            checksum: sha256_hex(&serialized),
        }];
        let mut levels = BTreeMap::new();
        levels.insert(5, graphs);
        Ok(RamseyLists {
            clique_order: 3,
            levels,
            provenance,
        })
    }

    /// Build lists directly from memory; every entry is validated.
    pub fn from_levels(k: usize, input: BTreeMap<usize, Vec<Graph>>) -> Result<RamseyLists> {
        let mut provenance = Vec::new();
        for (&level, graphs) in &input {
            for (idx, g) in graphs.iter().enumerate() {
                if g.n() != level || !is_ramsey_graph(g, k, k)? {
                    return Err(Error::InvalidListEntry {
                        path: format!("(memory level {level})"),
                        line: idx + 1,
                        detail: "not a valid Ramsey graph for this level".into(),
                    });
                }
            }
            provenance.push(LevelProvenance {
                level,
                path: format!("(memory level {level})"),
                count: graphs.len(),
                checksum: String::new(),
            });
        }
        Ok(RamseyLists {
            clique_order: k,
            levels: input,
            provenance,
        })
    }

    pub fn clique_order(&self) -> usize {
        self.clique_order
    }

    pub fn level(&self, level: usize) -> Option<&[Graph]> {
        self.levels.get(&level).map(|v| v.as_slice())
    }

    pub fn provenance(&self) -> &[LevelProvenance] {
        &self.provenance
    }
}

/// One line of `validate-lists` output.
#[derive(Clone, Debug, Serialize)]
pub struct LevelValidation {
    pub level: usize,
    pub path: String,
    pub count: usize,
    pub checksum: String,
    pub valid: bool,
    pub detail: String,
}

/// Validate every level file for `k` in `dir`, writing the sidecar cache for
/// the levels that pass. Missing or empty files are flagged but do not stop
/// the remaining levels from being checked.
pub fn validate_directory(dir: &Path, k: usize) -> Result<Vec<LevelValidation>> {
    let (lo, hi) = chromatic_ramsey_bounds(k)
        .ok_or_else(|| Error::Unsupported(format!("no catalog layout for k = {k}")))?;
    let mut cache = ValidationCache::read(dir);
    let mut out = Vec::new();
    for level in lo..hi {
        let path = dir.join(level_file_name(k, level));
        if !path.exists() {
            out.push(LevelValidation {
                level,
                path: path.display().to_string(),
                count: 0,
                checksum: String::new(),
                valid: false,
                detail: "file missing".into(),
            });
            continue;
        }
        let entry = match parse_level_file(&path, level) {
            Err(e) => LevelValidation {
                level,
                path: path.display().to_string(),
                count: 0,
                checksum: String::new(),
                valid: false,
                detail: e.to_string(),
            },
            Ok((graphs, checksum)) => match validate_entries(&path, k, &graphs) {
                Err(e) => LevelValidation {
                    level,
                    path: path.display().to_string(),
                    count: graphs.len(),
                    checksum,
                    valid: false,
                    detail: e.to_string(),
                },
                Ok(()) => {
                    cache.record(level, graphs.len(), checksum.clone());
                    LevelValidation {
                        level,
                        path: path.display().to_string(),
                        count: graphs.len(),
                        checksum,
                        valid: !graphs.is_empty(),
                        detail: if graphs.is_empty() {
                            "suspicious: file is empty".into()
                        } else {
                            "ok".into()
                        },
                    }
                }
            },
        };
        out.push(entry);
    }
    cache.write(dir)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::cayley_graph;
    use crate::graph6::encode_string;
    use std::io::Write;

    fn write_file(dir: &Path, name: &str, lines: &[String]) {
        let mut f = fs::File::create(dir.join(name)).unwrap();
        for line in lines {
            writeln!(f, "{line}").unwrap();
        }
    }

    /// Nested induced subgraphs of the Paley circulant of order 17 give one
    /// valid Ramsey(4,4) entry per level.
    fn paley_levels(dir: &Path) {
        let paley = cayley_graph(17, &[1, 2, 4, 8]).unwrap();
        for level in 10..=17usize {
            let verts: Vec<usize> = (0..level).collect();
            let sub = paley.induced(&verts).unwrap();
            assert!(is_ramsey_graph(&sub, 4, 4).unwrap());
            write_file(dir, &level_file_name(4, level), &[encode_string(&sub)]);
        }
    }

    #[test]
    fn load_and_validate_synthetic_catalog() {
        let dir = tempfile::tempdir().unwrap();
        paley_levels(dir.path());
        let lists = RamseyLists::load(dir.path(), 4, false).unwrap();
        assert_eq!(lists.clique_order(), 4);
        for level in 10..=17 {
            assert_eq!(lists.level(level).unwrap().len(), 1);
        }
        assert_eq!(lists.provenance().len(), 8);

        // drop one level: ingestion must notice
        fs::remove_file(dir.path().join(level_file_name(4, 13))).unwrap();
        assert!(matches!(
            RamseyLists::load(dir.path(), 4, false),
            Err(Error::MissingLevel { level: 13 })
        ));
    }

    #[test]
    fn validation_rejects_bad_entries() {
        let dir = tempfile::tempdir().unwrap();
        paley_levels(dir.path());
        // K_10 has clique number 10; slip it into level 10
        write_file(
            dir.path(),
            &level_file_name(4, 10),
            &[encode_string(&Graph::complete(10).unwrap())],
        );
        assert!(matches!(
            RamseyLists::load(dir.path(), 4, false),
            Err(Error::InvalidListEntry { .. })
        ));

        let summaries = validate_directory(dir.path(), 4).unwrap();
        let bad = summaries.iter().find(|s| s.level == 10).unwrap();
        assert!(!bad.valid);
        assert!(summaries.iter().filter(|s| s.valid).count() >= 7);
    }

    #[test]
    fn trusted_flag_uses_sidecar() {
        let dir = tempfile::tempdir().unwrap();
        paley_levels(dir.path());
        let summaries = validate_directory(dir.path(), 4).unwrap();
        assert!(summaries.iter().all(|s| s.valid));
        // corrupt a level *after* caching: untrusted load re-validates and
        // fails, trusted load fails too because the checksum changed
        write_file(
            dir.path(),
            &level_file_name(4, 11),
            &[encode_string(&Graph::complete(11).unwrap())],
        );
        assert!(RamseyLists::load(dir.path(), 4, false).is_err());
        assert!(RamseyLists::load(dir.path(), 4, true).is_err());
    }

    #[test]
    fn wrong_vertex_count_is_flagged() {
        let dir = tempfile::tempdir().unwrap();
        paley_levels(dir.path());
        write_file(
            dir.path(),
            &level_file_name(4, 12),
            &[encode_string(&Graph::cycle(5).unwrap())],
        );
        let err = RamseyLists::load(dir.path(), 4, false).unwrap_err();
        assert!(err.to_string().contains("expected 12"), "{err}");
    }

    #[test]
    fn builtin_level_five() {
        let lists = RamseyLists::builtin_33().unwrap();
        assert_eq!(lists.clique_order(), 3);
        let level = lists.level(5).unwrap();
        assert_eq!(level.len(), 1);
        assert!(crate::canon::is_isomorphic(&level[0], &Graph::cycle(5).unwrap()).unwrap());
        assert!(lists.level(6).is_none());
    }
}
