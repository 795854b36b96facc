//! The catalog as JSON files: one algebra table per entry and sample, plus a
//! manifest of claims.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmat::Rat;
use crate::liecore::LieAlg;

use super::families::{entries, CatalogEntry, Kind, Params};
use super::report::Section;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    pub params: BTreeMap<String, Rat>,
    pub file: String,
    pub kind: String,
    pub dim: usize,
    pub nilradical: Vec<String>,
    pub nilindex: usize,
    pub solvable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sl2: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub entries: Vec<Record>,
}

/// File stem for an entry at a parameter assignment, e.g. `r_2_3_1_alpha__alpha=1_2`.
pub fn slug(name: &str, params: &Params) -> String {
    let mut s: String = name
        .chars()
        .map(|c| match c {
            'a'..='z' | 'A'..='Z' | '0'..='9' => c,
            '+' => 'p',
            _ => '_',
        })
        .collect();
    while s.contains("__") {
        s = s.replace("__", "_");
    }
    let mut s = s.trim_matches('_').to_string();
    for (k, v) in params {
        let v = v.to_string().replace('/', "_").replace('-', "m");
        s.push_str(&format!("__{k}={v}"));
    }
    s
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Nilpotent => "nilpotent",
        Kind::Solvable => "solvable",
        Kind::Levi => "levi",
        Kind::SemisimpleSum => "semisimple-sum",
    }
}

fn record(e: &CatalogEntry, p: &Params) -> Record {
    Record {
        name: e.name.to_string(),
        params: p.clone(),
        file: format!("{}.json", slug(e.name, p)),
        kind: kind_name(e.kind).to_string(),
        dim: e.claims.dim,
        nilradical: e.claims.nilradical.clone(),
        nilindex: e.claims.nilindex,
        solvable: e.claims.solvable,
        sl2: e.claims.sl2.clone(),
    }
}

pub fn manifest() -> Manifest {
    let mut out = Vec::new();
    for e in entries() {
        for p in e.samples() {
            out.push(record(&e, &p));
        }
    }
    Manifest { entries: out }
}

/// Writes the manifest and every table under `dir`.
pub fn export(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir)?;
    for e in entries() {
        for p in e.samples() {
            let a = e.build(&p)?;
            fs::write(dir.join(record(&e, &p).file), a.to_json() + "\n")?;
        }
    }
    let m = serde_json::to_string_pretty(&manifest())?;
    fs::write(dir.join("manifest.json"), m + "\n")?;
    Ok(())
}

/// The files shipped with the crate.
pub fn bundled_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("catalog")
}

/// `LIEBRA_CATALOG_DIR` if set, else [`bundled_dir`].
pub fn catalog_dir() -> PathBuf {
    std::env::var_os("LIEBRA_CATALOG_DIR").map_or_else(bundled_dir, PathBuf::from)
}

pub fn load_manifest(dir: &Path) -> Result<Manifest> {
    let text = fs::read_to_string(dir.join("manifest.json"))?;
    Ok(serde_json::from_str(&text)?)
}

pub fn load(dir: &Path, r: &Record) -> Result<LieAlg> {
    let text = fs::read_to_string(dir.join(&r.file))?;
    LieAlg::from_json(&text)
}

/// Looks up a stored table by entry name and parameters.
pub fn load_entry(dir: &Path, name: &str, params: &Params) -> Result<LieAlg> {
    let m = load_manifest(dir)?;
    let r = m
        .entries
        .iter()
        .find(|r| r.name == name && &r.params == params)
        .ok_or_else(|| Error::UnknownEntry(format!("{name} {params:?} not in {}", dir.display())))?;
    load(dir, r)
}

/// Stored tables and claims against the constructions.
pub fn verify(dir: &Path) -> Result<Section> {
    let mut s = Section::new("catalog-data");
    let stored = load_manifest(dir)?;
    let expected = manifest();
    s.expect(
        "manifest",
        stored == expected,
        format!("{} stored records, {} expected", stored.entries.len(), expected.entries.len()),
    );
    for e in entries() {
        for p in e.samples() {
            let r = record(&e, &p);
            let ok = match load(dir, &r) {
                Ok(a) => a == e.build(&p)?,
                Err(_) => false,
            };
            s.expect(&r.file, ok, if ok { "table matches construction" } else { "missing or different" });
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slugs_are_distinct() {
        let m = manifest();
        let mut files: Vec<&str> = m.entries.iter().map(|r| r.file.as_str()).collect();
        let n = files.len();
        files.sort();
        files.dedup();
        assert_eq!(files.len(), n);
        let p = Params::from([("alpha".to_string(), Rat::new(-1, 2))]);
        assert_eq!(slug("r_{2,3}^{1,alpha}", &p), "r_2_3_1_alpha__alpha=m1_2");
    }

    #[test]
    fn export_round_trips() {
        let dir = tempfile::tempdir().unwrap();
        export(dir.path()).unwrap();
        let s = verify(dir.path()).unwrap();
        assert!(s.passed(), "{s:?}");
        let a = load_entry(dir.path(), "r_{2,3}^{3}", &Params::new()).unwrap();
        assert_eq!(a.dim(), 6);
    }

    #[test]
    fn bundled_files_are_current() {
        let s = verify(&bundled_dir()).unwrap();
        assert!(s.passed(), "bundled catalog is stale; regenerate with `liebra export-catalog`");
    }
}
