//! Orchestration: compute b_n upward from the braid index until the rules
//! pin down the tail.

use std::collections::{BTreeMap, HashMap};

use super::*;
use crate::braid::OccurrenceString;
use crate::search::{probe, Meter, Probe, SearchConstraints};
use crate::table::KnotTable;

struct Solver<'a> {
    record: &'a KnotRecord,
    table: &'a KnotTable,
    opts: &'a SolveOptions,
    meter: Meter,
    floor: i64,
    floor_cert: usize,
    certs: Vec<Certificate>,
    known: BTreeMap<usize, KnownValue>,
    /// minimal witness word and its certificate, per strand count
    words: BTreeMap<usize, (BraidWord, usize)>,
    table_word: Option<(BraidWord, usize)>,
    constants: Vec<(usize, i64, usize)>,
    reductions: Vec<(usize, usize)>,
    non_constant: Option<usize>,
}

enum Source {
    Stabilized(usize),
    Table(usize),
}

enum Scan {
    Found(BraidWord, usize),
    Excluded(usize),
}

impl<'a> Solver<'a> {
    fn push(&mut self, mut c: Certificate, inputs: Vec<usize>) -> usize {
        let id = self.certs.len();
        c.id = id;
        c.unproven_premise |= inputs.iter().any(|&i| self.certs[i].unproven_premise);
        c.inputs = inputs;
        self.certs.push(c);
        id
    }

    fn witness_for(&self, word: BraidWord) -> Option<Witness> {
        let fp = fingerprint(&word).ok()?;
        let mirror = self.table.matches(&self.record.name, &fp).ok()??;
        let ambiguous = self.table.identify(&fp).ambiguous;
        Some(Witness { word, target: self.record.name.clone(), mirror, ambiguous })
    }

    fn add_constant(&mut self, cert: Certificate, inputs: Vec<usize>) {
        if let Claim::Constant { from, value } = cert.claim {
            let id = self.push(cert, inputs);
            self.constants.push((from, value, id));
        }
    }

    fn best_from(&self) -> Option<usize> {
        self.constants.iter().map(|c| c.0).min()
    }

    /// Rules that need only a witness word.
    fn witness_rules(&mut self, witness_cert: usize) {
        let Some(w) = self.certs[witness_cert].witness.clone() else { return };
        for step in self.opts.rule_order.clone() {
            let cert = match step {
                RuleStep::LemmaGenus => rule_lemma_genus(self.record, &w),
                RuleStep::Homogeneous => rule_homogeneous(self.record, &w),
                _ => None,
            };
            if let Some(c) = cert {
                let inputs = vec![witness_cert, self.floor_cert];
                self.add_constant(c, inputs);
            }
        }
    }

    fn value_rules(&mut self, n: usize) -> Result<()> {
        let kv = self.known[&n].clone();
        let k = self.record.braid_index;
        for step in self.opts.rule_order.clone() {
            match step {
                RuleStep::LemmaGenus | RuleStep::Homogeneous => {
                    if let Some(&(_, wid)) = self.words.get(&n) {
                        let Some(w) = self.certs[wid].witness.clone() else { continue };
                        let cert = if step == RuleStep::LemmaGenus {
                            rule_lemma_genus(self.record, &w)
                        } else {
                            rule_homogeneous(self.record, &w)
                        };
                        if let Some(c) = cert {
                            self.add_constant(c, vec![wid, self.floor_cert]);
                        }
                    }
                }
                RuleStep::OddFloor => {
                    if let Some(c) = rule_odd_floor(self.record, n, kv.length) {
                        self.add_constant(c, vec![kv.certificate, self.floor_cert]);
                    }
                }
                RuleStep::Corollary => {
                    if n == k {
                        if let Some(c) = rule_corollary(self.record, kv.length) {
                            self.add_constant(c, vec![kv.certificate]);
                        }
                    }
                }
                RuleStep::Difference => {
                    if !self.record.prime {
                        continue;
                    }
                    if let Some(c) = rule_difference(self.record, n, kv.length)? {
                        match c.claim {
                            Claim::Constant { .. } => self.add_constant(c, vec![kv.certificate]),
                            Claim::Reduction { from } => {
                                let id = self.push(c, vec![kv.certificate]);
                                self.reductions.push((from, id));
                            }
                            _ => {}
                        }
                    }
                }
                RuleStep::BraidPositive => {
                    if n == k && self.non_constant.is_none() {
                        if let Some(c) = rule_braid_positive(self.record, kv.length) {
                            self.non_constant = Some(self.push(c, vec![kv.certificate]));
                        }
                    }
                }
            }
        }
        self.resolve_reductions();
        Ok(())
    }

    fn resolve_reductions(&mut self) {
        let pending = std::mem::take(&mut self.reductions);
        for (from, rid) in pending {
            match self.known.get(&from).cloned() {
                Some(kv) => {
                    let c = Certificate::rule(
                        STRAND_DIFFERENCE,
                        Claim::Constant { from, value: kv.value },
                        format!("b_n' = b_{from}' for n ≥ {from}, and b_{from}' = {}", kv.value),
                    );
                    self.add_constant(c, vec![rid, kv.certificate]);
                }
                None => self.reductions.push((from, rid)),
            }
        }
    }

    /// Why no `strands`-strand word of `length` letters closes to K, if that
    /// follows from known values: (reason, supporting certificate).
    fn impossible(&self, strands: usize, length: usize) -> Option<(String, Option<usize>)> {
        if strands < self.record.braid_index {
            return Some((format!("{strands} strands is below the braid index"), None));
        }
        if let Some(kv) = self.known.get(&strands) {
            if length < kv.length {
                return Some((format!("b_{strands} = {}", kv.length), Some(kv.certificate)));
            }
            return None;
        }
        if (length as i64) < strands as i64 + self.floor {
            return Some((format!("length {length} is below the floor on {strands} strands"), Some(self.floor_cert)));
        }
        None
    }

    /// A generator used once at position i splits the closure into a
    /// connected sum of closures on i + 1 and n − 1 − i strands.
    fn unit_reduction(&self, n: usize, c: usize, s: &OccurrenceString) -> Option<(Certificate, Vec<usize>)> {
        let counts = s.counts();
        for i in (0..counts.len()).filter(|&i| counts[i] == 1) {
            let left: usize = counts[..i].iter().sum();
            let right: usize = counts[i + 1..].iter().sum();
            let (ls, rs) = (i + 1, n - 1 - i);
            let (Some((lr, ld)), Some((rr, rd))) = (self.impossible(ls, left), self.impossible(rs, right)) else {
                continue;
            };
            let cert = Certificate::rule(
                PRIME_UNIT_REDUCTION,
                Claim::Excluded { strands: n, length: c, occurrence: Some(s.clone()) },
                format!(
                    "σ_{} occurs once in {s}: the closure is a sum of a {ls}-strand closure of length {left} ({lr}) and a {rs}-strand closure of length {right} ({rr}); {} is prime, so neither can be it",
                    i + 1,
                    self.record.name
                ),
            );
            let mut inputs: Vec<usize> = ld.into_iter().chain(rd).collect();
            inputs.sort();
            inputs.dedup();
            return Some((cert, inputs));
        }
        None
    }

    /// Witness or exclusion at (n, c), string by string.
    fn scan(&mut self, n: usize, c: usize) -> Result<Scan> {
        let name = self.record.name.clone();
        if n == 1 {
            let w = BraidWord::empty(1);
            if c == 0 {
                if let Some(wit) = self.witness_for(w) {
                    let id = self.push(Certificate::of_witness(wit.clone(), "the empty 1-strand word".into()), vec![]);
                    return Ok(Scan::Found(wit.word, id));
                }
            }
            let cert = Certificate::rule(
                OCCURRENCE_SPLIT,
                Claim::Excluded { strands: 1, length: c, occurrence: None },
                format!("the only 1-strand word is empty and it does not close to {name} at length {c}"),
            );
            return Ok(Scan::Excluded(self.push(cert, vec![])));
        }
        let mut handled: HashMap<OccurrenceString, usize> = HashMap::new();
        let mut inputs = Vec::new();
        let mut flipped = 0usize;
        for s in OccurrenceString::compositions(c, n - 1, 1) {
            if let Some(&id) = handled.get(&s.reversed()) {
                inputs.push(id);
                flipped += 1;
                continue;
            }
            if self.record.prime {
                if let Some((cert, deps)) = self.unit_reduction(n, c, &s) {
                    let id = self.push(cert, deps);
                    handled.insert(s, id);
                    inputs.push(id);
                    continue;
                }
            }
            let constraints = SearchConstraints::new(n, c).with_occurrence(s.clone()).reduced();
            match probe(&constraints, &name, self.table, &self.meter)? {
                Probe::Found(wit) => {
                    let word = wit.word.clone();
                    let id = self.push(
                        Certificate::of_witness(wit, format!("found by exhaustive search over occurrence string {s}")),
                        vec![],
                    );
                    return Ok(Scan::Found(word, id));
                }
                Probe::Absent(ex) => {
                    let cert = Certificate::of_exclusion(
                        ex,
                        format!("no {n}-strand word with occurrence string {s} closes to {name}"),
                    );
                    let id = self.push(cert, vec![]);
                    handled.insert(s, id);
                    inputs.push(id);
                }
            }
        }
        inputs.sort();
        inputs.dedup();
        let cert = Certificate::rule(
            OCCURRENCE_SPLIT,
            Claim::Excluded { strands: n, length: c, occurrence: None },
            format!(
                "no {n}-strand word of length {c} closes to {name}: strings with a zero entry close to links, {} of the rest are covered by the index flip of an earlier string, and each remaining string is excluded by an input",
                flipped
            ),
        );
        Ok(Scan::Excluded(self.push(cert, inputs)))
    }

    fn compute_value(&mut self, n: usize) -> Result<()> {
        let k = self.record.braid_index;
        if n == k && self.opts.use_index_length {
            if let Some(len) = self.record.index_length {
                let cert = Certificate::rule(
                    TABLE_DATA,
                    Claim::Value { strands: n, length: len },
                    format!("the table records b_{n}({}) = {len}; this value is not recomputed", self.record.name),
                )
                .flagged(true, true);
                let id = self.push(cert, vec![]);
                let value = len as i64 - n as i64;
                self.known.insert(n, KnownValue { value, length: len, certificate: id, unconfirmed: false });
                return Ok(());
            }
        }
        let lower = (n as i64 + self.floor).max(n as i64 - 1) as usize;

        // cheapest known realizing word on n strands
        let mut upper: Option<usize> = None;
        let mut upper_word: Option<(BraidWord, Source)> = None;
        if n > k {
            if let Some(prev) = self.known.get(&(n - 1)) {
                upper = Some(prev.length + 1);
                if let Some((w, wid)) = self.words.get(&(n - 1)) {
                    upper_word = Some((w.stabilize(true), Source::Stabilized(*wid)));
                }
            }
        }
        if let Some((tw, tid)) = self.table_word.clone() {
            if tw.strands() == n && upper.is_none_or(|u| tw.len() < u) {
                upper = Some(tw.len());
                upper_word = Some((tw, Source::Table(tid)));
            }
        }

        let mut exclusions = Vec::new();
        let mut c = lower;
        let (word, wid) = loop {
            if let Some(u) = upper {
                if c > u {
                    return Err(Error::InconsistentBound(format!(
                        "{}: exclusions on {n} strands reached {c}, past the known bound {u}",
                        self.record.name
                    )));
                }
                if c == u {
                    if let Some((w, src)) = upper_word.take() {
                        let id = match src {
                            Source::Stabilized(prev) => {
                                let wit = self
                                    .witness_for(w.clone())
                                    .ok_or_else(|| Error::InconsistentBound("stabilized witness lost its knot type".into()))?;
                                let cert = Certificate::rule(
                                    STABILIZATION,
                                    Claim::Realized { strands: n, length: c },
                                    format!("stabilizing the {}-strand witness gives {w}", n - 1),
                                );
                                let cert = Certificate { kind: CertificateKind::Witness, witness: Some(wit), ..cert };
                                self.push(cert, vec![prev])
                            }
                            Source::Table(tid) => tid,
                        };
                        break (w, id);
                    }
                }
            } else if c > lower + 128 {
                return Err(Error::InconsistentBound(format!(
                    "{}: no {n}-strand witness up to length {c}",
                    self.record.name
                )));
            }
            match self.scan(n, c)? {
                Scan::Found(w, id) => break (w, id),
                Scan::Excluded(id) => exclusions.push(id),
            }
            c += 2;
        };

        let unconfirmed = self.certs[wid].witness.as_ref().is_some_and(|w| w.ambiguous);
        let mut inputs = vec![self.floor_cert];
        inputs.extend(&exclusions);
        inputs.push(wid);
        let searched: Vec<String> = (lower..c).step_by(2).map(|x| x.to_string()).collect();
        let cert = Certificate::rule(
            EXACT_VALUE,
            Claim::Value { strands: n, length: c },
            format!(
                "b_{n}({}) = {c}: a witness of length {c}; lengths below {lower} are below the floor{}{}",
                self.record.name,
                if searched.is_empty() { String::new() } else { format!("; lengths {} are excluded", searched.join(", ")) },
                if unconfirmed { "; witness identification is ambiguous, value UNCONFIRMED" } else { "" }
            ),
        );
        let id = self.push(cert, inputs);
        self.known.insert(n, KnownValue { value: c as i64 - n as i64, length: c, certificate: id, unconfirmed });
        self.words.insert(n, (word, wid));
        Ok(())
    }

    fn finish(mut self, status: ProfileStatus) -> Result<BPrimeProfile> {
        let mut eventual = None;
        if status == ProfileStatus::Complete {
            if let Some(&(from, value, cid)) = self.constants.iter().min_by_key(|c| c.0) {
                for &(f, v, id) in &self.constants {
                    if let Some((&n, kv)) = self.known.range(f..).find(|(_, kv)| kv.value != v) {
                        return Err(Error::InconsistentBound(format!(
                            "certificate {id} claims b_n' = {v} from {f}, but b_{n}' = {}",
                            kv.value
                        )));
                    }
                }
                let mut ev = Eventual { from, value, certificate: cid };
                let earliest = self.known.range(..from).find(|(_, kv)| kv.value == value).map(|(&n, kv)| (n, kv.certificate));
                if let Some((n0, vcert)) = earliest {
                    let c = Certificate::rule(
                        MONOTONICITY,
                        Claim::Constant { from: n0, value },
                        format!("b_{n0}' = {value} and b_n' is nonincreasing, so b_n' = {value} for n ≥ {n0}"),
                    );
                    ev = Eventual { from: n0, value, certificate: self.push(c, vec![cid, vcert]) };
                }
                if !self.known.contains_key(&ev.from) {
                    let length = (ev.from as i64 + value) as usize;
                    self.known.insert(
                        ev.from,
                        KnownValue { value, length, certificate: ev.certificate, unconfirmed: false },
                    );
                }
                eventual = Some(ev);
            }
        }
        let values: Vec<i64> = self.known.values().map(|k| k.value).collect();
        let differs = values.windows(2).any(|w| w[0] != w[1]);
        let constant = if self.non_constant.is_some() || differs {
            Some(false)
        } else {
            eventual.as_ref().map(|e| e.from == self.record.braid_index)
        };
        Ok(BPrimeProfile {
            knot: self.record.name.clone(),
            domain_start: self.record.braid_index,
            known: self.known,
            eventual,
            constant,
            status,
            table_version: self.table.version().to_string(),
            certificates: self.certs,
        })
    }
}

/// Computes b_n'(K) from n = br(K) upward, applying the rules after each
/// new value, until the eventual constant is certified and every value
/// before it is known. Budget exhaustion and the strand limit return a
/// partial profile with no eventual value.
pub fn solve(record: &KnotRecord, table: &KnotTable, opts: &SolveOptions) -> Result<BPrimeProfile> {
    table.lookup(&record.name)?;
    let mut s = Solver {
        record,
        table,
        opts,
        meter: Meter::new(opts.budget),
        floor: lower_bound_profile(record),
        floor_cert: 0,
        certs: Vec::new(),
        known: BTreeMap::new(),
        words: BTreeMap::new(),
        table_word: None,
        constants: Vec::new(),
        reductions: Vec::new(),
        non_constant: None,
    };
    s.floor_cert = s.push(floor_certificate(record), vec![]);
    if let Some(w) = s.witness_for(record.word.clone()) {
        let cert = Certificate::of_witness(w, "the table's representative word".into()).flagged(false, true);
        let id = s.push(cert, vec![]);
        s.table_word = Some((record.word.clone(), id));
        s.witness_rules(id);
    }

    let mut n = record.braid_index;
    let status = loop {
        if s.best_from().is_some_and(|f| n >= f) {
            break ProfileStatus::Complete;
        }
        if n > opts.max_strands {
            break ProfileStatus::StrandLimit;
        }
        match s.compute_value(n) {
            Ok(()) => {}
            Err(Error::BudgetExhausted { .. }) => break ProfileStatus::BudgetExhausted,
            Err(e) => return Err(e),
        }
        s.value_rules(n)?;
        n += 1;
    };
    s.finish(status)
}
