//! Independent re-check of a profile's certificate chain.

use std::collections::{BTreeMap, BTreeSet};

use super::*;
use crate::search::{exclusion_search, Budget};
use crate::table::KnotTable;

fn fail(id: usize, why: impl Into<String>) -> Error {
    Error::InconsistentBound(format!("certificate {id}: {}", why.into()))
}

/// Re-runs every witness fingerprint and exclusion search in the profile,
/// checks that rule certificates only cite earlier certificates and that
/// each exact value is backed by a witness plus exclusions at every
/// admissible smaller length, and returns the values the chain proves.
pub fn replay(profile: &BPrimeProfile, table: &KnotTable) -> Result<BTreeMap<usize, i64>> {
    if profile.table_version != table.version() {
        return Err(Error::InconsistentBound(format!(
            "profile built against table {}, not {}",
            profile.table_version,
            table.version()
        )));
    }
    let record = table.lookup(&profile.knot)?;
    let floor = lower_bound_profile(record);
    let certs = &profile.certificates;
    for (i, c) in certs.iter().enumerate() {
        if c.id != i {
            return Err(fail(i, "ids are not sequential"));
        }
        if c.inputs.iter().any(|&j| j >= i) {
            return Err(fail(i, "cites a later certificate"));
        }
        match c.kind {
            CertificateKind::Witness => {
                let w = c.witness.as_ref().ok_or_else(|| fail(i, "witness certificate without a word"))?;
                let fp = fingerprint(&w.word)?;
                if table.matches(&record.name, &fp)? != Some(w.mirror) {
                    return Err(fail(i, format!("{} does not close to {}", w.word, record.name)));
                }
                let expect = Claim::Realized { strands: w.word.strands(), length: w.word.len() };
                if c.claim != expect {
                    return Err(fail(i, "claim does not describe the witness word"));
                }
            }
            CertificateKind::Exclusion => {
                let ex = c.exclusion.as_ref().ok_or_else(|| fail(i, "exclusion certificate without a search"))?;
                let rerun = exclusion_search(&ex.constraints, &ex.targets, table, Budget::UNLIMITED)?;
                if rerun.without_timing() != ex.without_timing() {
                    return Err(fail(i, "re-running the search gives a different certificate"));
                }
                if !rerun.all_absent() {
                    return Err(fail(i, "search finds the target"));
                }
            }
            CertificateKind::Rule => {
                if c.rule_name.as_deref() == Some(EXACT_VALUE) {
                    let Claim::Value { strands, length } = c.claim else {
                        return Err(fail(i, "exact value without a value claim"));
                    };
                    let has_witness = c.inputs.iter().any(|&j| {
                        certs[j].kind == CertificateKind::Witness
                            && certs[j].claim == Claim::Realized { strands, length }
                    });
                    if !has_witness {
                        return Err(fail(i, "no witness of the claimed length"));
                    }
                    let lower = (strands as i64 + floor).max(strands as i64 - 1) as usize;
                    for len in (lower..length).step_by(2) {
                        let covered = c.inputs.iter().any(|&j| {
                            matches!(certs[j].claim, Claim::Excluded { strands: s, length: l, occurrence: None } if s == strands && l == len)
                        });
                        if !covered {
                            return Err(fail(i, format!("length {len} on {strands} strands is not excluded")));
                        }
                    }
                }
                if c.rule_name.as_deref() == Some(OCCURRENCE_SPLIT) {
                    if let Claim::Excluded { strands, length, occurrence: None } = c.claim {
                        if strands > 1 {
                            let cited: BTreeSet<Vec<usize>> = c
                                .inputs
                                .iter()
                                .filter_map(|&j| match &certs[j].claim {
                                    Claim::Excluded { occurrence: Some(o), .. } => Some(o.counts().to_vec()),
                                    _ => None,
                                })
                                .collect();
                            for s in OccurrenceString::compositions(length, strands - 1, 1) {
                                if !cited.contains(s.counts()) && !cited.contains(s.reversed().counts()) {
                                    return Err(fail(i, format!("occurrence string {s} is not covered")));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let mut values = BTreeMap::new();
    for (&n, kv) in &profile.known {
        let c = certs.get(kv.certificate).ok_or_else(|| fail(kv.certificate, "missing"))?;
        let proven = match c.claim {
            Claim::Value { strands, length } => strands == n && length == kv.length,
            Claim::Constant { from, value } => n >= from && value == kv.value,
            _ => false,
        };
        if !proven || kv.length as i64 - n as i64 != kv.value {
            return Err(fail(kv.certificate, format!("does not prove b_{n}' = {}", kv.value)));
        }
        values.insert(n, kv.value);
    }
    Ok(values)
}
