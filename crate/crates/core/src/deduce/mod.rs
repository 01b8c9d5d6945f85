//! Certified computation of b_n'(K) = b_n(K) − n.
//!
//! Facts about a knot are recorded as [`Certificate`]s: witnesses (a word
//! closing to K), exclusions (an exhaustive search that found no word), and
//! rule applications that combine earlier certificates. A [`BPrimeProfile`]
//! carries the values it derives together with the whole chain, so it can be
//! audited or replayed against a table.
//!
//! Rule names used in certificates:
//!
//! | name | content |
//! |---|---|
//! | `odd-floor` | b_n' is odd, at least 2g − 1, and at least 3 unless K is the trefoil or figure-eight |
//! | `genus-lemma` | a word with c − m = 2g − 1 makes the profile constant from m |
//! | `homogeneous-fibre` | a homogeneous m-strand word makes the profile 2g − 1 from m |
//! | `index-corollary` | at m = br(K), b_m = l(K) and b_m' = m + 1 give m + 1 from m |
//! | `strand-difference` | prime K, N = b_m' ≥ m: b_n' = b_N' for n ≥ N |
//! | `strand-difference-below-index` | prime K, N = b_m' < br(K): b_n' = b_m' for n ≥ m |
//! | `positive-minimal-diagram-axiom` | braid positive K, c(K) ≤ 16, b_k ≠ c(K): not constant (assumes an external theorem) |
//! | `prime-unit-reduction` | prime K: a generator used once splits the closure into two knots on fewer strands |
//! | `occurrence-split` | an exclusion at (n, c) assembled from per-occurrence-string results |
//! | `stabilization` | b_{n+1} ≤ b_n + 1 |
//! | `monotonicity` | b_n' is nonincreasing |
//! | `table-data` | a value read from the knot table rather than computed |

mod replay;
mod solve;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, OccurrenceString};
use crate::error::{Error, Result};
use crate::invariants::{fingerprint, homogeneous_genus};
use crate::search::{Budget, ExclusionCertificate, Witness};
use crate::table::KnotRecord;

pub use replay::replay;
pub use solve::solve;

pub const ODD_FLOOR: &str = "odd-floor";
pub const GENUS_LEMMA: &str = "genus-lemma";
pub const HOMOGENEOUS_FIBRE: &str = "homogeneous-fibre";
pub const INDEX_COROLLARY: &str = "index-corollary";
pub const STRAND_DIFFERENCE: &str = "strand-difference";
pub const STRAND_DIFFERENCE_BELOW_INDEX: &str = "strand-difference-below-index";
pub const POSITIVE_AXIOM: &str = "positive-minimal-diagram-axiom";
pub const PRIME_UNIT_REDUCTION: &str = "prime-unit-reduction";
pub const OCCURRENCE_SPLIT: &str = "occurrence-split";
pub const STABILIZATION: &str = "stabilization";
pub const MONOTONICITY: &str = "monotonicity";
pub const TABLE_DATA: &str = "table-data";
pub const EXACT_VALUE: &str = "exact-value";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CertificateKind {
    Witness,
    Exclusion,
    Rule,
}

/// Machine-readable content of a certificate. Lengths are b_n values,
/// `value` fields are b_n' values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Claim {
    /// Some `strands`-strand word of this length closes to K.
    Realized { strands: usize, length: usize },
    /// No `strands`-strand word of this length (with this occurrence
    /// string, if given) closes to K.
    Excluded {
        strands: usize,
        length: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        occurrence: Option<OccurrenceString>,
    },
    /// b_n' ≥ value for every n.
    Floor { value: i64 },
    /// b_strands(K) = length.
    Value { strands: usize, length: usize },
    /// b_n' = value for all n ≥ from.
    Constant { from: usize, value: i64 },
    /// b_n' = b_from' for all n ≥ from.
    Reduction { from: usize },
    /// b_strands' = value, and b_n' < value for some n > strands.
    NonConstant { strands: usize, value: i64 },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub id: usize,
    pub kind: CertificateKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rule_name: Option<String>,
    pub inputs: Vec<usize>,
    pub claim: Claim,
    pub statement: String,
    /// Set when this certificate or anything it depends on rests on an
    /// assumed theorem or on table data.
    pub unproven_premise: bool,
    pub table_sourced: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exclusion: Option<ExclusionCertificate>,
}

impl Certificate {
    fn rule(name: &str, claim: Claim, statement: String) -> Self {
        Certificate {
            id: 0,
            kind: CertificateKind::Rule,
            rule_name: Some(name.to_string()),
            inputs: Vec::new(),
            claim,
            statement,
            unproven_premise: false,
            table_sourced: false,
            witness: None,
            exclusion: None,
        }
    }

    fn of_witness(witness: Witness, statement: String) -> Self {
        let claim = Claim::Realized { strands: witness.word.strands(), length: witness.word.len() };
        Certificate {
            kind: CertificateKind::Witness,
            rule_name: None,
            witness: Some(witness),
            ..Certificate::rule("", claim, statement)
        }
    }

    fn of_exclusion(cert: ExclusionCertificate, statement: String) -> Self {
        let c = &cert.constraints;
        let claim = Claim::Excluded { strands: c.strands, length: c.length, occurrence: c.occurrence.clone() };
        Certificate {
            kind: CertificateKind::Exclusion,
            rule_name: None,
            exclusion: Some(cert),
            ..Certificate::rule("", claim, statement)
        }
    }

    fn flagged(mut self, unproven: bool, table: bool) -> Self {
        self.unproven_premise |= unproven;
        self.table_sourced |= table;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnownValue {
    /// b_n'(K)
    pub value: i64,
    /// b_n(K)
    pub length: usize,
    pub certificate: usize,
    /// The witness identification was ambiguous in the table.
    #[serde(default)]
    pub unconfirmed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eventual {
    pub from: usize,
    pub value: i64,
    pub certificate: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ProfileStatus {
    Complete,
    BudgetExhausted,
    StrandLimit,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BPrimeProfile {
    pub knot: String,
    pub domain_start: usize,
    pub known: BTreeMap<usize, KnownValue>,
    pub eventual: Option<Eventual>,
    /// `Some(true)` constant, `Some(false)` certified non-constant.
    pub constant: Option<bool>,
    pub status: ProfileStatus,
    pub table_version: String,
    pub certificates: Vec<Certificate>,
}

impl BPrimeProfile {
    /// b_n'(K) if the profile determines it.
    pub fn value_at(&self, n: usize) -> Option<i64> {
        if let Some(k) = self.known.get(&n) {
            return Some(k.value);
        }
        self.eventual.as_ref().filter(|e| n >= e.from).map(|e| e.value)
    }

    pub fn values(&self) -> BTreeMap<usize, i64> {
        self.known.iter().map(|(&n, k)| (n, k.value)).collect()
    }

    pub fn certificate(&self, id: usize) -> Option<&Certificate> {
        self.certificates.get(id)
    }

    /// Ids of `id` and every certificate it depends on, ascending.
    pub fn chain(&self, id: usize) -> Vec<usize> {
        let mut seen = vec![false; self.certificates.len()];
        let mut stack = vec![id];
        while let Some(i) = stack.pop() {
            if i < seen.len() && !seen[i] {
                seen[i] = true;
                stack.extend(self.certificates[i].inputs.iter().copied());
            }
        }
        (0..seen.len()).filter(|&i| seen[i]).collect()
    }

    /// Checks the structural laws every profile obeys; returns the first
    /// violation.
    pub fn check_laws(&self, record: &KnotRecord) -> std::result::Result<(), String> {
        let floor = lower_bound_profile(record);
        let mut prev: Option<(usize, i64)> = None;
        let mut all: Vec<(usize, i64)> = self.values().into_iter().collect();
        if let Some(e) = &self.eventual {
            if !self.known.contains_key(&e.from) {
                all.push((e.from, e.value));
                all.sort();
            }
        }
        for (n, v) in all {
            if v.rem_euclid(2) != 1 {
                return Err(format!("b_{n}' = {v} is even"));
            }
            if v < floor {
                return Err(format!("b_{n}' = {v} is below the floor {floor}"));
            }
            if v == 1 && floor != 1 {
                return Err(format!("b_{n}' = 1 for a knot other than the trefoil or figure-eight"));
            }
            if let Some((m, pv)) = prev {
                if v > pv {
                    return Err(format!("b_{n}' = {v} exceeds b_{m}' = {pv}"));
                }
            }
            if let Some(e) = &self.eventual {
                if n >= e.from && v != e.value {
                    return Err(format!("b_{n}' = {v} contradicts the eventual value {}", e.value));
                }
            }
            prev = Some((n, v));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// One step of rule application inside [`solve`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RuleStep {
    LemmaGenus,
    OddFloor,
    Homogeneous,
    Corollary,
    Difference,
    BraidPositive,
}

impl RuleStep {
    pub const DEFAULT_ORDER: [RuleStep; 6] = [
        RuleStep::LemmaGenus,
        RuleStep::OddFloor,
        RuleStep::Homogeneous,
        RuleStep::Corollary,
        RuleStep::Difference,
        RuleStep::BraidPositive,
    ];
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub budget: Budget,
    /// Largest strand count at which b_n is computed.
    pub max_strands: usize,
    pub rule_order: Vec<RuleStep>,
    /// Take b_{br(K)} from the table's `index_length` column when present.
    pub use_index_length: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            budget: Budget::UNLIMITED,
            max_strands: 8,
            rule_order: RuleStep::DEFAULT_ORDER.to_vec(),
            use_index_length: true,
        }
    }
}

fn is_small_genus_one(record: &KnotRecord) -> bool {
    let probes = ["B2:1,1,1", "B3:1,-2,1,-2"];
    let fp = record.fingerprint();
    probes.iter().any(|s| {
        let w: BraidWord = s.parse().expect("literal braid word");
        let f = fingerprint(&w).expect("literal word closes to a knot");
        f == fp || f.mirror() == fp
    })
}

/// The least value b_n'(K) can take: −1 for the unknot, 1 for the trefoil
/// and figure-eight, otherwise max(2g − 1, 3).
pub fn lower_bound_profile(record: &KnotRecord) -> i64 {
    if record.is_unknot() {
        return -1;
    }
    if is_small_genus_one(record) {
        return 1;
    }
    (2 * record.genus as i64 - 1).max(3)
}

fn floor_certificate(record: &KnotRecord) -> Certificate {
    let floor = lower_bound_profile(record);
    Certificate::rule(
        ODD_FLOOR,
        Claim::Floor { value: floor },
        format!(
            "b_n'({}) is odd and at least {floor} (genus {}{})",
            record.name,
            record.genus,
            if floor == 3 { "; b_n' = 1 only for the trefoil and figure-eight" } else { "" }
        ),
    )
    .flagged(false, true)
}

/// Fires when the witness has c − m = 2g(K) − 1: constant from m.
pub fn rule_lemma_genus(record: &KnotRecord, witness: &Witness) -> Option<Certificate> {
    let (m, c) = (witness.word.strands(), witness.word.len());
    let target = 2 * record.genus as i64 - 1;
    (c as i64 - m as i64 == target).then(|| {
        Certificate::rule(
            GENUS_LEMMA,
            Claim::Constant { from: m, value: target },
            format!("{} closes to {} with c − m = {target} = 2g − 1, so b_n' = {target} for n ≥ {m}", witness.word, record.name),
        )
    })
}

/// Fires when b_n' has reached the lower bound: constant from n.
pub fn rule_odd_floor(record: &KnotRecord, n: usize, b_n: usize) -> Option<Certificate> {
    let floor = lower_bound_profile(record);
    let value = b_n as i64 - n as i64;
    (value == floor).then(|| {
        Certificate::rule(
            ODD_FLOOR,
            Claim::Constant { from: n, value },
            format!("b_{n}'({}) = {value} is the floor and b_n' is nonincreasing, so b_n' = {value} for n ≥ {n}", record.name),
        )
    })
}

/// Fires on a homogeneous witness on m strands: b_n' = 2g − 1 for n ≥ m,
/// with g read off the word's fibre surface.
pub fn rule_homogeneous(record: &KnotRecord, witness: &Witness) -> Option<Certificate> {
    let g = homogeneous_genus(&witness.word).ok()?;
    let m = witness.word.strands();
    let value = 2 * g as i64 - 1;
    Some(Certificate::rule(
        HOMOGENEOUS_FIBRE,
        Claim::Constant { from: m, value },
        format!(
            "homogeneous {m}-strand word {} closes to {}; its closed-braid surface is a fibre of genus {g}, so b_n' = {value} for n ≥ {m}",
            witness.word, record.name
        ),
    ))
}

/// Given a proven b_m with N = b_m − m: constant from m when N < br(K) or
/// N = m; a reduction to b_N when N > m. Refuses composite knots.
pub fn rule_difference(record: &KnotRecord, m: usize, b_m: usize) -> Result<Option<Certificate>> {
    if !record.prime {
        return Err(Error::RuleRefused(format!("{} is not recorded as prime", record.name)));
    }
    let n_val = b_m as i64 - m as i64;
    if n_val < record.braid_index as i64 {
        return Ok(Some(Certificate::rule(
            STRAND_DIFFERENCE_BELOW_INDEX,
            Claim::Constant { from: m, value: n_val },
            format!("b_{m}' = {n_val} is below the braid index {}, so b_n' = {n_val} for n ≥ {m}", record.braid_index),
        )));
    }
    if n_val < m as i64 {
        return Ok(None);
    }
    let big_n = n_val as usize;
    if big_n == m {
        return Ok(Some(Certificate::rule(
            STRAND_DIFFERENCE,
            Claim::Constant { from: m, value: n_val },
            format!("b_{m}' = {m} equals the strand count, so b_n' = b_{m}' = {m} for n ≥ {m}"),
        )));
    }
    Ok(Some(Certificate::rule(
        STRAND_DIFFERENCE,
        Claim::Reduction { from: big_n },
        format!("b_{m}' = {big_n} ≥ {m}, so b_n' = b_{big_n}' for n ≥ {big_n}"),
    )))
}

/// At m = br(K): b_m = l(K) and b_m' = m + 1 give constant m + 1 from m.
pub fn rule_corollary(record: &KnotRecord, b_m: usize) -> Option<Certificate> {
    let m = record.braid_index;
    let fires = record.prime && Some(b_m) == record.braid_length && b_m as i64 - m as i64 == m as i64 + 1;
    fires.then(|| {
        Certificate::rule(
            INDEX_COROLLARY,
            Claim::Constant { from: m, value: m as i64 + 1 },
            format!("b_{m} = {b_m} = l({}) and b_{m}' = {}, so b_n' = {} for n ≥ {m}", record.name, m + 1, m + 1),
        )
        .flagged(false, true)
    })
}

/// Braid positive K with c(K) ≤ 16 and b_k ≠ c(K) at k = br(K): the
/// profile is not constant. Rests on the assumption that such a knot has a
/// braid positive minimal diagram on some number of strands.
pub fn rule_braid_positive(record: &KnotRecord, b_k: usize) -> Option<Certificate> {
    let k = record.braid_index;
    let fires = record.braid_positive && record.crossings <= 16 && b_k != record.crossings;
    fires.then(|| {
        let value = b_k as i64 - k as i64;
        let mut c = Certificate::rule(
            POSITIVE_AXIOM,
            Claim::NonConstant { strands: k, value },
            format!(
                "{} is braid positive with c = {} ≤ 16 and b_{k} = {b_k} ≠ c; a positive minimal diagram on some m > {k} strands gives b_m = c, so b_m' = c − m < {value} = b_{k}'",
                record.name, record.crossings
            ),
        )
        .flagged(true, true);
        c.table_sourced = true;
        c
    })
}
