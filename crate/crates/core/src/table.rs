//! Reference knot table: ingestion, validation and fingerprint lookup.
//!
//! CSV layout (header required, UTF-8, LF):
//!
//! ```text
//! name,crossings,braid_index,genus,word,alexander,jones[,braid_length,braid_positive,prime,index_length]
//! ```
//!
//! The trailing columns are optional. `braid_length` is l(K), the least
//! crossing count over braids of any strand count; `index_length` is a
//! recorded value of b_n(K) at n = braid_index, used only when a search at
//! that size is out of reach. Every row is re-validated on load by
//! recomputing the fingerprint of its word.

use std::collections::{BTreeSet, HashMap};
use std::io::{Read, Write};
use std::path::Path;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::invariants::{fingerprint, KnotFingerprint};
use crate::poly::LaurentPoly;

pub const TABLE_ENV: &str = "BRAIDRANK_TABLE";

const BUNDLED_CSV: &str = include_str!("../data/knots.csv");

const REQUIRED: [&str; 7] = ["name", "crossings", "braid_index", "genus", "word", "alexander", "jones"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotRecord {
    pub name: String,
    pub crossings: usize,
    pub braid_index: usize,
    pub genus: usize,
    pub word: BraidWord,
    pub alexander: LaurentPoly,
    pub jones: LaurentPoly,
    pub braid_length: Option<usize>,
    pub braid_positive: bool,
    pub prime: bool,
    pub index_length: Option<usize>,
}

impl KnotRecord {
    pub fn fingerprint(&self) -> KnotFingerprint {
        KnotFingerprint { alexander: self.alexander.clone(), jones: self.jones.clone() }
    }

    pub fn is_unknot(&self) -> bool {
        self.crossings == 0
    }

    /// Checks the stored polynomials against the representative word.
    pub fn validate(&self) -> Result<()> {
        let fail = |message: String| Error::TableIntegrity { name: self.name.clone(), message };
        if self.word.component_count() != 1 {
            return Err(fail(format!("word {} does not close to a knot", self.word)));
        }
        if self.word.strands() < self.braid_index {
            return Err(fail(format!(
                "word has {} strands, fewer than braid index {}",
                self.word.strands(),
                self.braid_index
            )));
        }
        let computed = fingerprint(&self.word)?;
        if computed.alexander != self.alexander {
            return Err(fail(format!(
                "Alexander polynomial {} does not match word (computed {})",
                self.alexander, computed.alexander
            )));
        }
        if computed.jones != self.jones && computed.jones != self.jones.mirror() {
            return Err(fail(format!(
                "Jones polynomial {} does not match word up to mirror (computed {})",
                self.jones, computed.jones
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identification {
    /// (name, mirror-flag), sorted by name.
    pub matches: Vec<(String, bool)>,
    pub ambiguous: bool,
}

impl Identification {
    pub fn is_empty(&self) -> bool {
        self.matches.is_empty()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.matches.iter().any(|(n, _)| n == name)
    }
}

#[derive(Clone, Debug)]
pub struct KnotTable {
    records: Vec<KnotRecord>,
    by_name: HashMap<String, usize>,
    by_fingerprint: HashMap<KnotFingerprint, Vec<usize>>,
    version: String,
}

/// Per-row outcome of [`KnotTable::validate_all`].
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RowReport {
    pub row: usize,
    pub name: String,
    pub ok: bool,
    pub message: Option<String>,
}

fn parse_bool(row: usize, column: &str, s: &str) -> Result<bool> {
    match s.trim() {
        "" | "false" | "N" | "n" | "0" => Ok(false),
        "true" | "Y" | "y" | "1" => Ok(true),
        other => Err(Error::TableParse { row, message: format!("{column}: `{other}` is not a boolean") }),
    }
}

fn parse_num(row: usize, column: &str, s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::TableParse { row, message: format!("{column}: `{s}` is not an integer") })
}

fn parse_opt_num(row: usize, column: &str, s: Option<&str>) -> Result<Option<usize>> {
    match s.map(str::trim) {
        None | Some("") => Ok(None),
        Some(v) => parse_num(row, column, v).map(Some),
    }
}

impl KnotTable {
    pub fn from_records(records: Vec<KnotRecord>) -> Result<Self> {
        let mut by_name = HashMap::new();
        let mut by_fingerprint: HashMap<KnotFingerprint, Vec<usize>> = HashMap::new();
        for (i, r) in records.iter().enumerate() {
            if by_name.insert(r.name.clone(), i).is_some() {
                return Err(Error::TableIntegrity { name: r.name.clone(), message: "duplicate name".into() });
            }
            by_fingerprint.entry(r.fingerprint()).or_default().push(i);
        }
        let mut table = KnotTable { records, by_name, by_fingerprint, version: String::new() };
        let mut buf = Vec::new();
        table.write_csv(&mut buf)?;
        table.version = hex::encode(Sha256::digest(&buf))[..16].to_string();
        Ok(table)
    }

    /// Parses rows without validating fingerprints.
    pub fn parse_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new().has_headers(false).from_reader(reader);
        let mut rows = rdr.records();
        let Some(header) = rows.next() else {
            return Self::from_records(Vec::new());
        };
        let header = header.map_err(|e| Error::TableParse { row: 1, message: e.to_string() })?;
        let columns: HashMap<&str, usize> = header.iter().enumerate().map(|(i, h)| (h.trim(), i)).collect();
        for c in REQUIRED {
            if !columns.contains_key(c) {
                return Err(Error::TableParse { row: 1, message: format!("missing column `{c}`") });
            }
        }
        let mut records = Vec::new();
        for (k, rec) in rows.enumerate() {
            let row = k + 2;
            let rec = rec.map_err(|e| Error::TableParse { row, message: e.to_string() })?;
            let get = |c: &str| columns.get(c).and_then(|&i| rec.get(i));
            let req = |c: &str| get(c).ok_or_else(|| Error::TableParse { row, message: format!("missing `{c}`") });
            let wrap = |e: Error| Error::TableParse { row, message: e.to_string() };
            records.push(KnotRecord {
                name: req("name")?.trim().to_string(),
                crossings: parse_num(row, "crossings", req("crossings")?)?,
                braid_index: parse_num(row, "braid_index", req("braid_index")?)?,
                genus: parse_num(row, "genus", req("genus")?)?,
                word: req("word")?.parse().map_err(wrap)?,
                alexander: req("alexander")?.parse().map_err(wrap)?,
                jones: req("jones")?.parse().map_err(wrap)?,
                braid_length: parse_opt_num(row, "braid_length", get("braid_length"))?,
                braid_positive: parse_bool(row, "braid_positive", get("braid_positive").unwrap_or(""))?,
                prime: match get("prime") {
                    None => true,
                    Some(s) if s.trim().is_empty() => true,
                    Some(s) => parse_bool(row, "prime", s)?,
                },
                index_length: parse_opt_num(row, "index_length", get("index_length"))?,
            });
        }
        Self::from_records(records)
    }

    /// Parses and validates every row; the first failing record is returned
    /// as a table-integrity error.
    pub fn load<R: Read>(reader: R) -> Result<Self> {
        let table = Self::parse_csv(reader)?;
        table.records.par_iter().try_for_each(|r| r.validate())?;
        Ok(table)
    }

    pub fn load_path(path: impl AsRef<Path>) -> Result<Self> {
        Self::load(std::fs::File::open(path)?)
    }

    /// The table shipped with the crate (validated once, then shared).
    pub fn bundled() -> &'static KnotTable {
        static TABLE: OnceLock<KnotTable> = OnceLock::new();
        TABLE.get_or_init(|| KnotTable::load(BUNDLED_CSV.as_bytes()).expect("bundled knot table must validate"))
    }

    /// `$BRAIDRANK_TABLE` when set, else the bundled table.
    pub fn default_table() -> Result<KnotTable> {
        match std::env::var_os(TABLE_ENV) {
            Some(p) if !p.is_empty() => Self::load_path(p),
            _ => Ok(Self::bundled().clone()),
        }
    }

    pub fn validate_all(&self) -> Vec<RowReport> {
        self.records
            .par_iter()
            .enumerate()
            .map(|(i, r)| {
                let res = r.validate();
                RowReport {
                    row: i + 2,
                    name: r.name.clone(),
                    ok: res.is_ok(),
                    message: res.err().map(|e| e.to_string()),
                }
            })
            .collect()
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(writer);
        let io = |e: csv::Error| Error::Io(std::io::Error::other(e));
        w.write_record([
            "name", "crossings", "braid_index", "genus", "word", "alexander", "jones", "braid_length",
            "braid_positive", "prime", "index_length",
        ])
        .map_err(io)?;
        let opt = |v: Option<usize>| v.map(|x| x.to_string()).unwrap_or_default();
        for r in &self.records {
            w.write_record([
                r.name.clone(),
                r.crossings.to_string(),
                r.braid_index.to_string(),
                r.genus.to_string(),
                r.word.to_string(),
                r.alexander.to_string(),
                r.jones.to_string(),
                opt(r.braid_length),
                r.braid_positive.to_string(),
                r.prime.to_string(),
                opt(r.index_length),
            ])
            .map_err(io)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn records(&self) -> &[KnotRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Short hash of the canonical CSV serialization.
    pub fn version(&self) -> &str {
        &self.version
    }

    pub fn lookup(&self, name: &str) -> Result<&KnotRecord> {
        self.by_name
            .get(name)
            .map(|&i| &self.records[i])
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// Names whose stored fingerprint equals `fp` (mirror-flag false) or the
    /// mirror of `fp` (mirror-flag true).
    pub fn identify(&self, fp: &KnotFingerprint) -> Identification {
        let mut direct: BTreeSet<&str> = BTreeSet::new();
        if let Some(ids) = self.by_fingerprint.get(fp) {
            direct.extend(ids.iter().map(|&i| self.records[i].name.as_str()));
        }
        let mut mirrored: BTreeSet<&str> = BTreeSet::new();
        if let Some(ids) = self.by_fingerprint.get(&fp.mirror()) {
            mirrored.extend(
                ids.iter().map(|&i| self.records[i].name.as_str()).filter(|n| !direct.contains(n)),
            );
        }
        let mut matches: Vec<(String, bool)> = direct
            .iter()
            .map(|n| (n.to_string(), false))
            .chain(mirrored.iter().map(|n| (n.to_string(), true)))
            .collect();
        matches.sort();
        let ambiguous = matches.len() > 1;
        Identification { matches, ambiguous }
    }

    /// Whether `fp` is the fingerprint of `name` or of its mirror.
    pub fn matches(&self, name: &str, fp: &KnotFingerprint) -> Result<Option<bool>> {
        let r = self.lookup(name)?;
        if r.alexander != fp.alexander {
            return Ok(None);
        }
        if r.jones == fp.jones {
            Ok(Some(false))
        } else if r.jones == fp.jones.mirror() {
            Ok(Some(true))
        } else {
            Ok(None)
        }
    }
}
