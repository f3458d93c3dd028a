//! Imported groups, persisted as a JSON file and referenced as `@id`.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{enumeration_cap, CayleyTable, CayleyTableFile, GroupSpec, PermGroup};

/// Environment variable naming the registry file.
pub const REGISTRY_ENV_VAR: &str = "GENTOTIENT_REGISTRY";

/// Default registry file name, relative to the working directory.
pub const DEFAULT_REGISTRY_FILE: &str = "gentotient-registry.json";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StoredGroup {
    CayleyTable(CayleyTableFile),
    Permutation { generators: Vec<Vec<usize>> },
}

/// A parsed import file, before registration.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum ImportFile {
    Table(CayleyTableFile),
    Generators(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Registry {
    groups: BTreeMap<String, StoredGroup>,
}

/// Registry ids are `[A-Za-z0-9_-]+` without the letter `x`, which
/// separates factors in expressions.
pub fn is_valid_id(id: &str) -> bool {
    !id.is_empty()
        && id
            .chars()
            .all(|c| (c.is_ascii_alphanumeric() || c == '_' || c == '-') && c != 'x')
}

/// Id derived from a file name: the stem with disallowed characters
/// replaced by `_`.
pub fn default_id(path: &Path) -> String {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let id: String = stem
        .chars()
        .map(|c| {
            if (c.is_ascii_alphanumeric() || c == '-') && c != 'x' {
                c
            } else {
                '_'
            }
        })
        .collect();
    if id.is_empty() {
        "group".into()
    } else {
        id
    }
}

fn build(id: &str, stored: &StoredGroup) -> Result<GroupSpec> {
    match stored {
        StoredGroup::CayleyTable(file) => {
            Ok(GroupSpec::CayleyTable(Arc::new(CayleyTable::from_file(id, file)?)))
        }
        StoredGroup::Permutation { generators } => Ok(GroupSpec::Permutation(Arc::new(
            PermGroup::from_images(id, generators, enumeration_cap())?,
        ))),
    }
}

impl Registry {
    /// Reads a registry; a missing file is an empty registry.
    pub fn load(path: &Path) -> Result<Self> {
        if !path.exists() {
            return Ok(Registry::default());
        }
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text)
            .map_err(|e| Error::Import(format!("registry {}: {e}", path.display())))
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(self).expect("registry serializes");
        std::fs::write(path, text + "\n")?;
        Ok(())
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.groups.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// The validated group registered under `id`.
    pub fn lookup(&self, id: &str) -> Result<GroupSpec> {
        let stored = self
            .groups
            .get(id)
            .ok_or_else(|| Error::Parse(format!("unknown group id @{id}")))?;
        build(id, stored)
    }

    /// Every registered group, validated, in id order.
    pub fn specs(&self) -> Result<Vec<GroupSpec>> {
        self.groups.iter().map(|(id, s)| build(id, s)).collect()
    }

    /// Validates a Cayley table (`{"order", "table"}`) or a JSON list of
    /// permutation image arrays and registers it under `id`, replacing any
    /// previous entry.
    pub fn import_json(&mut self, id: &str, json: &str) -> Result<GroupSpec> {
        if !is_valid_id(id) {
            return Err(Error::Parse(format!(
                "invalid id {id:?}: use letters other than x, digits, _ and -"
            )));
        }
        let parsed: ImportFile = serde_json::from_str(json).map_err(|e| {
            Error::Import(format!(
                "expected a Cayley table object or a list of permutations: {e}"
            ))
        })?;
        let stored = match parsed {
            ImportFile::Table(t) => StoredGroup::CayleyTable(t),
            ImportFile::Generators(generators) => StoredGroup::Permutation { generators },
        };
        let spec = build(id, &stored)?;
        self.groups.insert(id.to_string(), stored);
        Ok(spec)
    }

    pub fn import_file(&mut self, path: &Path, id: Option<&str>) -> Result<(String, GroupSpec)> {
        let json = std::fs::read_to_string(path)?;
        let id = id.map_or_else(|| default_id(path), str::to_string);
        let spec = self.import_json(&id, &json)?;
        Ok((id, spec))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::order_spectrum;

    const Z3_TABLE: &str = r#"{"order": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]}"#;

    #[test]
    fn import_and_lookup() {
        let mut r = Registry::default();
        let g = r.import_json("z3", Z3_TABLE).unwrap();
        assert_eq!(g.to_string(), "@z3");
        let s3 = r.import_json("s3", "[[1,0,2],[1,2,0]]").unwrap();
        assert_eq!(s3.order_u64(), Some(6));
        assert_eq!(r.lookup("z3").unwrap().order_u64(), Some(3));
        assert!(matches!(r.lookup("nope"), Err(Error::Parse(_))));
        assert_eq!(r.ids().collect::<Vec<_>>(), ["s3", "z3"]);
        assert_eq!(order_spectrum(&r.lookup("s3").unwrap()).unwrap().phi().unwrap(), 0u32.into());
    }

    #[test]
    fn rejects_bad_input() {
        let mut r = Registry::default();
        assert!(matches!(r.import_json("box", Z3_TABLE), Err(Error::Parse(_))));
        assert!(matches!(r.import_json("t", "{\"rows\": 1}"), Err(Error::Import(_))));
        let broken = r#"{"order": 2, "table": [[0,1],[1,1]]}"#;
        assert!(matches!(r.import_json("t", broken), Err(Error::Import(_))));
        assert!(r.is_empty());
    }

    #[test]
    fn roundtrip_through_disk() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("reg.json");
        let mut r = Registry::load(&path).unwrap();
        r.import_json("z3", Z3_TABLE).unwrap();
        r.save(&path).unwrap();
        assert_eq!(Registry::load(&path).unwrap(), r);
    }

    #[test]
    fn ids_from_paths() {
        assert_eq!(default_id(Path::new("/tmp/q8.json")), "q8");
        assert_eq!(default_id(Path::new("max table.json")), "ma__table");
        assert!(is_valid_id("q8-table_2"));
        assert!(!is_valid_id("hex"));
    }
}
