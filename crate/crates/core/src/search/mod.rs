//! Exhaustive braid-word search.
//!
//! Enumeration is a depth-first walk over letter positions, split into
//! prefix subtrees that run on the rayon pool. Subtree results are merged in
//! prefix order, so every output (word lists, witnesses, certificates) is
//! identical for any thread count.
//!
//! Two prunings are optional and recorded in the constraints of every
//! certificate:
//!
//! * `canonical_only` keeps one word per orbit under rotation and the index
//!   flip σ_i ↦ σ_{n−i} (flip only when it preserves the occurrence string);
//! * `prune_reducible` drops words with an adjacent or cyclically adjacent
//!   cancelling pair. Such a word closes to the same knot as a word two
//!   letters shorter, so this is sound only when shorter lengths are covered
//!   separately, as in [`min_length`].

mod dfs;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, OccurrenceString};
use crate::error::{Error, Result};
use crate::invariants::{alexander_from_burau, jones_unchecked, KnotFingerprint};
use crate::poly::LaurentPoly;
use crate::table::KnotTable;

pub use dfs::{Budget, Meter};
use dfs::{split_depth, Control, Dfs, Leaf};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConstraints {
    pub strands: usize,
    pub length: usize,
    pub occurrence: Option<OccurrenceString>,
    pub knots_only: bool,
    pub canonical_only: bool,
    #[serde(default)]
    pub prune_reducible: bool,
    #[serde(default)]
    pub positive_only: bool,
}

impl SearchConstraints {
    /// Knot closures only, one word per canonical class, no other pruning.
    pub fn new(strands: usize, length: usize) -> Self {
        SearchConstraints {
            strands,
            length,
            occurrence: None,
            knots_only: true,
            canonical_only: true,
            prune_reducible: false,
            positive_only: false,
        }
    }

    /// Every word of the given shape, unfiltered.
    pub fn raw(strands: usize, length: usize) -> Self {
        SearchConstraints { knots_only: false, canonical_only: false, ..Self::new(strands, length) }
    }

    pub fn with_occurrence(mut self, occurrence: OccurrenceString) -> Self {
        self.length = occurrence.total();
        self.occurrence = Some(occurrence);
        self
    }

    pub fn reduced(mut self) -> Self {
        self.prune_reducible = true;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.strands == 0 {
            return Err(Error::Precondition("strand count must be at least 1".into()));
        }
        if self.strands > 32 {
            return Err(Error::Precondition("at most 32 strands are supported".into()));
        }
        if let Some(o) = &self.occurrence {
            if o.counts().len() != self.strands - 1 {
                return Err(Error::Precondition(format!(
                    "occurrence string {o} needs {} entries for {} strands",
                    self.strands - 1,
                    self.strands
                )));
            }
            if o.total() != self.length {
                return Err(Error::Precondition(format!(
                    "occurrence string {o} sums to {}, not length {}",
                    o.total(),
                    self.length
                )));
            }
        }
        Ok(())
    }

    /// Knot closures need c ≡ n − 1 (mod 2).
    pub fn parity_allows_knots(&self) -> bool {
        (self.length + 1 + self.strands) % 2 == 0
    }

    fn trivially_empty(&self) -> bool {
        self.knots_only
            && (!self.parity_allows_knots()
                || self.length + 1 < self.strands
                || self.occurrence.as_ref().is_some_and(|o| o.has_zero()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub word: BraidWord,
    pub target: String,
    pub mirror: bool,
    pub ambiguous: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TargetResult {
    Absent,
    Found { witness: Witness },
}

impl TargetResult {
    pub fn is_absent(&self) -> bool {
        matches!(self, TargetResult::Absent)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExclusionCertificate {
    pub constraints: SearchConstraints,
    pub targets: Vec<String>,
    pub words_examined: u64,
    pub canonical_classes: u64,
    pub result: BTreeMap<String, TargetResult>,
    pub table_version: String,
    /// seconds
    pub elapsed: f64,
}

impl ExclusionCertificate {
    pub fn all_absent(&self) -> bool {
        self.result.values().all(TargetResult::is_absent)
    }

    /// Copy with the timing field cleared, for comparisons.
    pub fn without_timing(&self) -> Self {
        ExclusionCertificate { elapsed: 0.0, ..self.clone() }
    }
}

struct Target {
    name: String,
    alexander: LaurentPoly,
    jones: LaurentPoly,
}

fn resolve_targets(names: &[String], table: &KnotTable) -> Result<Vec<Target>> {
    let mut sorted: Vec<&String> = names.iter().collect();
    sorted.sort();
    sorted.dedup();
    sorted
        .into_iter()
        .map(|n| {
            let r = table.lookup(n)?;
            Ok(Target { name: r.name.clone(), alexander: r.alexander.clone(), jones: r.jones.clone() })
        })
        .collect()
}

/// Matches a knot leaf against the targets: (target index, mirror-flag).
fn match_leaf(strands: usize, leaf: &Leaf<'_>, targets: &[Target]) -> Vec<(usize, bool)> {
    let burau = leaf.burau.expect("target matching needs the Burau product");
    let alex = alexander_from_burau(strands, burau);
    let mut hits = Vec::new();
    let mut jones: Option<LaurentPoly> = None;
    for (i, t) in targets.iter().enumerate() {
        if t.alexander != alex {
            continue;
        }
        let j = jones.get_or_insert_with(|| {
            jones_unchecked(&BraidWord::from_letters_unchecked(strands, leaf.letters.to_vec()))
        });
        if *j == t.jones {
            hits.push((i, false));
        } else if j.mirror() == t.jones {
            hits.push((i, true));
        }
    }
    hits
}

fn make_witness(word: BraidWord, target: &str, mirror: bool, table: &KnotTable) -> Witness {
    let fp = crate::invariants::fingerprint(&word).expect("witness word closes to a knot");
    let ambiguous = table.identify(&fp).ambiguous;
    Witness { word, target: target.to_string(), mirror, ambiguous }
}

fn check_parity(strands: usize, leaf: &Leaf<'_>) {
    if leaf.is_knot {
        assert!(
            (leaf.letters.len() + 1 + strands) % 2 == 0,
            "knot closure with even c - n: parity law violated"
        );
    }
}

/// Runs `work` on every prefix subtree in parallel; results in prefix order.
fn partitioned<T, F>(c: &SearchConstraints, track_burau: bool, meter: &Meter, work: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&mut Dfs<'_>) -> T + Sync,
{
    let prefixes = Dfs::new(c, false, meter).prefixes(split_depth(c));
    let out: Vec<T> = prefixes
        .par_iter()
        .map(|p| {
            let mut dfs = Dfs::new(c, track_burau, meter);
            dfs.seed(p);
            let r = work(&mut dfs);
            dfs.flush();
            r
        })
        .collect();
    if meter.is_exhausted() {
        return Err(meter.exhausted_error());
    }
    Ok(out)
}

/// All words meeting the constraints, in lexicographic order.
pub fn enumerate(c: &SearchConstraints) -> Result<Vec<BraidWord>> {
    enumerate_with_budget(c, Budget::UNLIMITED)
}

pub fn enumerate_with_budget(c: &SearchConstraints, budget: Budget) -> Result<Vec<BraidWord>> {
    c.validate()?;
    if c.trivially_empty() {
        return Ok(Vec::new());
    }
    let meter = Meter::new(budget);
    if c.length == 0 {
        let w = BraidWord::empty(c.strands);
        let keep = !c.knots_only || w.is_knot();
        return Ok(if keep { vec![w] } else { Vec::new() });
    }
    let parts = partitioned(c, false, &meter, |dfs| {
        let mut words = Vec::new();
        dfs.run(&mut |leaf| {
            check_parity(c.strands, &leaf);
            words.push(BraidWord::from_letters_unchecked(c.strands, leaf.letters.to_vec()));
            Control::Continue
        });
        words
    })?;
    Ok(parts.into_iter().flatten().collect())
}

/// (words, canonical representatives among them).
pub fn count(c: &SearchConstraints) -> Result<(u64, u64)> {
    c.validate()?;
    if c.trivially_empty() {
        return Ok((0, 0));
    }
    if c.length == 0 {
        let w = BraidWord::empty(c.strands);
        let keep = u64::from(!c.knots_only || w.is_knot());
        return Ok((keep, keep));
    }
    let meter = Meter::new(Budget::UNLIMITED);
    let parts = partitioned(c, false, &meter, |dfs| {
        let (mut words, mut canon) = (0u64, 0u64);
        dfs.run(&mut |leaf| {
            words += 1;
            canon += u64::from(leaf.canonical);
            Control::Continue
        });
        (words, canon)
    })?;
    Ok(parts.into_iter().fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1)))
}

#[derive(Default)]
struct PartResult {
    words: u64,
    canonical: u64,
    found: BTreeMap<usize, (Vec<i32>, bool)>,
}

/// Fingerprints every enumerated knot closure against the targets and
/// records, per target, the first matching word or ABSENT.
pub fn exclusion_search(
    c: &SearchConstraints,
    targets: &[String],
    table: &KnotTable,
    budget: Budget,
) -> Result<ExclusionCertificate> {
    c.validate()?;
    let resolved = resolve_targets(targets, table)?;
    let started = Instant::now();
    let meter = Meter::new(budget);
    let mut total = PartResult::default();
    if c.length == 0 {
        let w = BraidWord::empty(c.strands);
        if !c.knots_only || w.is_knot() {
            total.words = 1;
            total.canonical = 1;
            if w.is_knot() {
                let fp = crate::invariants::fingerprint(&w)?;
                for (i, t) in resolved.iter().enumerate() {
                    if let Some(m) = table.matches(&t.name, &fp)? {
                        total.found.insert(i, (Vec::new(), m));
                    }
                }
            }
        }
    } else if !c.trivially_empty() {
        let parts = partitioned(c, true, &meter, |dfs| {
            let mut part = PartResult::default();
            dfs.run(&mut |leaf| {
                check_parity(c.strands, &leaf);
                part.words += 1;
                part.canonical += u64::from(leaf.canonical);
                if leaf.is_knot {
                    for (i, mirror) in match_leaf(c.strands, &leaf, &resolved) {
                        part.found.entry(i).or_insert_with(|| (leaf.letters.to_vec(), mirror));
                    }
                }
                Control::Continue
            });
            part
        })?;
        for p in parts {
            total.words += p.words;
            total.canonical += p.canonical;
            for (i, hit) in p.found {
                total.found.entry(i).or_insert(hit);
            }
        }
    }
    let result = resolved
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let r = match total.found.get(&i) {
                None => TargetResult::Absent,
                Some((letters, mirror)) => {
                    let word = BraidWord::from_letters_unchecked(c.strands, letters.clone());
                    TargetResult::Found { witness: make_witness(word, &t.name, *mirror, table) }
                }
            };
            (t.name.clone(), r)
        })
        .collect();
    Ok(ExclusionCertificate {
        constraints: c.clone(),
        targets: resolved.iter().map(|t| t.name.clone()).collect(),
        words_examined: total.words,
        canonical_classes: total.canonical,
        result,
        table_version: table.version().to_string(),
        elapsed: started.elapsed().as_secs_f64(),
    })
}

/// Outcome of a single-target search that stops at the first match.
#[derive(Clone, Debug, PartialEq)]
pub enum Probe {
    Found(Witness),
    Absent(ExclusionCertificate),
}

/// Searches for one target, stopping at the first match in enumeration
/// order. An absent result carries a full exclusion certificate.
pub fn probe(c: &SearchConstraints, target: &str, table: &KnotTable, meter: &Meter) -> Result<Probe> {
    c.validate()?;
    let resolved = resolve_targets(&[target.to_string()], table)?;
    let started = Instant::now();
    let absent = |words, canonical| {
        Probe::Absent(ExclusionCertificate {
            constraints: c.clone(),
            targets: vec![resolved[0].name.clone()],
            words_examined: words,
            canonical_classes: canonical,
            result: BTreeMap::from([(resolved[0].name.clone(), TargetResult::Absent)]),
            table_version: table.version().to_string(),
            elapsed: started.elapsed().as_secs_f64(),
        })
    };
    if c.trivially_empty() {
        return Ok(absent(0, 0));
    }
    if c.length == 0 {
        let w = BraidWord::empty(c.strands);
        if w.is_knot() {
            if let Some(m) = table.matches(&resolved[0].name, &crate::invariants::fingerprint(&w)?)? {
                return Ok(Probe::Found(make_witness(w, &resolved[0].name, m, table)));
            }
        }
        return Ok(absent(1, 1));
    }
    let prefixes = Dfs::new(c, false, meter).prefixes(split_depth(c));
    let hit = prefixes
        .par_iter()
        .map(|p| {
            let mut dfs = Dfs::new(c, true, meter);
            dfs.seed(p);
            let mut found = None;
            let (mut words, mut canonical) = (0u64, 0u64);
            dfs.run(&mut |leaf| {
                check_parity(c.strands, &leaf);
                words += 1;
                canonical += u64::from(leaf.canonical);
                if leaf.is_knot {
                    if let Some(&(_, mirror)) = match_leaf(c.strands, &leaf, &resolved).first() {
                        found = Some((leaf.letters.to_vec(), mirror));
                        return Control::Stop;
                    }
                }
                Control::Continue
            });
            dfs.flush();
            (found, words, canonical)
        })
        .map(|(found, w, k)| match found {
            Some(f) => Err(f),
            None => Ok((w, k)),
        })
        .collect::<Vec<_>>();
    if let Some(Err((letters, mirror))) = hit.iter().find(|r| r.is_err()) {
        let word = BraidWord::from_letters_unchecked(c.strands, letters.clone());
        return Ok(Probe::Found(make_witness(word, &resolved[0].name, *mirror, table)));
    }
    if meter.is_exhausted() {
        return Err(meter.exhausted_error());
    }
    let (words, canonical) = hit.into_iter().flatten().fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(absent(words, canonical))
}

/// First n-strand word of length c (canonical classes, no reducible-word
/// pruning) whose closure identifies as `target`, mirror allowed.
pub fn find_witness(
    target: &str,
    strands: usize,
    length: usize,
    table: &KnotTable,
    budget: Budget,
) -> Result<Option<Witness>> {
    table.lookup(target)?;
    let meter = Meter::new(budget);
    match probe(&SearchConstraints::new(strands, length), target, table, &meter)? {
        Probe::Found(w) => Ok(Some(w)),
        Probe::Absent(_) => Ok(None),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinLength {
    pub target: String,
    pub strands: usize,
    pub value: usize,
    pub witness: Witness,
    /// One certificate per admissible length below `value`.
    pub exclusions: Vec<ExclusionCertificate>,
}

/// b_n(target): the least length with a witness, certified by exhaustive
/// exclusions at every smaller length of the right parity.
pub fn min_length(target: &str, strands: usize, upper: usize, table: &KnotTable, budget: Budget) -> Result<MinLength> {
    let record = table.lookup(target)?;
    if strands < record.braid_index {
        return Err(Error::Precondition(format!(
            "{target} has braid index {}, no {strands}-strand braid closes to it",
            record.braid_index
        )));
    }
    let meter = Meter::new(budget);
    let mut exclusions = Vec::new();
    let first = strands - 1;
    for c in (first..=upper).step_by(2) {
        let constraints = SearchConstraints::new(strands, c).reduced();
        match probe(&constraints, target, table, &meter)? {
            Probe::Found(witness) => {
                return Ok(MinLength { target: target.to_string(), strands, value: c, witness, exclusions });
            }
            Probe::Absent(cert) => exclusions.push(cert),
        }
    }
    Err(Error::InconsistentBound(format!(
        "no {strands}-strand braid of length at most {upper} closes to {target}"
    )))
}

/// Convenience for callers holding a fingerprint rather than a name.
pub fn fingerprint_matches(table: &KnotTable, name: &str, fp: &KnotFingerprint) -> Result<Option<bool>> {
    table.matches(name, fp)
}
