//! Depth-first word enumeration with incremental bookkeeping.
//!
//! Letters are tried in [`letter_key`] order, so every subtree is visited in
//! lexicographic order. The strand permutation and (optionally) the reduced
//! Burau product are maintained incrementally along the current prefix.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::braid::{is_least_rotation, letter_key, OccurrenceString};
use crate::error::Error;
use crate::invariants::PolyMatrix;
use crate::poly::LaurentPoly;

use super::SearchConstraints;

/// Resource caps for a search: DFS node count (deterministic) and an
/// optional wall-clock limit.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    #[serde(default)]
    pub max_millis: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_nodes: None, max_millis: None };

    pub fn nodes(n: u64) -> Self {
        Budget { max_nodes: Some(n), max_millis: None }
    }
}

/// Shared node counter checked by all workers of a search.
#[derive(Debug)]
pub struct Meter {
    used: AtomicU64,
    limit: Option<u64>,
    deadline: Option<Instant>,
    exhausted: AtomicBool,
}

impl Meter {
    pub fn new(budget: Budget) -> Self {
        Meter {
            used: AtomicU64::new(0),
            limit: budget.max_nodes,
            deadline: budget.max_millis.map(|ms| Instant::now() + Duration::from_millis(ms)),
            exhausted: AtomicBool::new(false),
        }
    }

    /// Adds `nodes`; false once the budget is spent.
    pub fn charge(&self, nodes: u64) -> bool {
        if self.exhausted.load(AtomicOrdering::Relaxed) {
            return false;
        }
        let total = self.used.fetch_add(nodes, AtomicOrdering::Relaxed) + nodes;
        let over_nodes = self.limit.is_some_and(|l| total > l);
        let over_time = self.deadline.is_some_and(|d| Instant::now() > d);
        if over_nodes || over_time {
            self.exhausted.store(true, AtomicOrdering::Relaxed);
            return false;
        }
        true
    }

    pub fn used(&self) -> u64 {
        self.used.load(AtomicOrdering::Relaxed)
    }

    pub fn is_exhausted(&self) -> bool {
        self.exhausted.load(AtomicOrdering::Relaxed)
    }

    pub fn exhausted_error(&self) -> Error {
        Error::BudgetExhausted { nodes: self.used() }
    }
}

pub(crate) enum Control {
    Continue,
    Stop,
}

/// What a leaf visitor sees.
pub(crate) struct Leaf<'a> {
    pub letters: &'a [i32],
    pub is_knot: bool,
    pub canonical: bool,
    pub burau: Option<&'a PolyMatrix>,
}

const CHARGE_BATCH: u64 = 4096;

pub(crate) struct Dfs<'a> {
    strands: usize,
    length: usize,
    alphabet: Vec<i32>,
    target: Option<Vec<usize>>,
    knots_only: bool,
    canonical_only: bool,
    prune_reducible: bool,
    flip_in_orbit: bool,
    letters: Vec<i32>,
    counts: Vec<usize>,
    /// strand currently at each position
    at: Vec<usize>,
    burau: Option<PolyMatrix>,
    /// saved Burau columns, one per pushed letter
    undo: Vec<Vec<LaurentPoly>>,
    meter: &'a Meter,
    pending: u64,
    aborted: bool,
}

impl<'a> Dfs<'a> {
    pub fn new(c: &SearchConstraints, track_burau: bool, meter: &'a Meter) -> Self {
        let n = c.strands;
        let mut alphabet: Vec<i32> = (1..n as i32)
            .flat_map(|i| [i, -i])
            .filter(|&l| !c.positive_only || l > 0)
            .collect();
        alphabet.sort_by_key(|&l| letter_key(l));
        let flip_in_orbit = c.occurrence.as_ref().is_none_or(OccurrenceString::is_palindrome);
        Dfs {
            strands: n,
            length: c.length,
            alphabet,
            target: c.occurrence.as_ref().map(|o| o.counts().to_vec()),
            knots_only: c.knots_only,
            canonical_only: c.canonical_only,
            prune_reducible: c.prune_reducible,
            flip_in_orbit,
            letters: Vec::with_capacity(c.length),
            counts: vec![0; n.saturating_sub(1)],
            at: (0..n).collect(),
            burau: track_burau.then(|| PolyMatrix::identity(n.saturating_sub(1))),
            undo: Vec::new(),
            meter,
            pending: 0,
            aborted: false,
        }
    }

    fn cycles(&self) -> usize {
        let n = self.strands;
        let mut seen = [false; 64];
        let mut cycles = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            cycles += 1;
            let mut p = s;
            while !seen[p] {
                seen[p] = true;
                p = self.at[p];
            }
        }
        cycles
    }

    /// Whether `letter` may extend the current prefix.
    fn admissible(&self, letter: i32) -> bool {
        let g = letter.unsigned_abs() as usize - 1;
        if let Some(t) = &self.target {
            if self.counts[g] >= t[g] {
                return false;
            }
        }
        if self.prune_reducible && self.letters.last() == Some(&-letter) {
            return false;
        }
        true
    }

    /// Checks run after pushing a letter; false prunes the subtree.
    fn feasible(&self) -> bool {
        let remaining = self.length - self.letters.len();
        if self.knots_only && self.cycles() - 1 > remaining {
            return false;
        }
        if self.knots_only && self.target.is_none() {
            let missing = self.counts.iter().filter(|&&c| c == 0).count();
            if missing > remaining {
                return false;
            }
        }
        if self.canonical_only && !self.prefix_may_be_least() {
            return false;
        }
        true
    }

    /// False when some rotation (or flipped rotation) of every completion is
    /// already known to be smaller than the word.
    fn prefix_may_be_least(&self) -> bool {
        let a = &self.letters;
        let k = a.len();
        let n = self.strands as i32;
        for start in 0..k {
            if start > 0 && cmp_prefix(a[start..].iter().copied(), a) == std::cmp::Ordering::Less {
                return false;
            }
            if self.flip_in_orbit {
                let flipped = a[start..].iter().map(|&l| l.signum() * (n - l.abs()));
                if cmp_prefix(flipped, a) == std::cmp::Ordering::Less {
                    return false;
                }
            }
        }
        true
    }

    pub fn push(&mut self, letter: i32) {
        let g = letter.unsigned_abs() as usize - 1;
        self.letters.push(letter);
        self.counts[g] += 1;
        self.at.swap(g, g + 1);
        if let Some(m) = &mut self.burau {
            let col: Vec<LaurentPoly> = (0..m.dim()).map(|r| m.get(r, g).clone()).collect();
            self.undo.push(col);
            m.apply_letter(letter);
        }
    }

    pub fn pop(&mut self) {
        let letter = self.letters.pop().expect("pop on empty prefix");
        let g = letter.unsigned_abs() as usize - 1;
        self.counts[g] -= 1;
        self.at.swap(g, g + 1);
        if let Some(m) = &mut self.burau {
            let col = self.undo.pop().unwrap();
            m.restore_column(g, col);
        }
    }

    /// Replays a prefix produced by [`Dfs::prefixes`].
    pub fn seed(&mut self, prefix: &[i32]) {
        for &l in prefix {
            self.push(l);
        }
    }

    fn charge(&mut self) -> bool {
        self.pending += 1;
        if self.pending >= CHARGE_BATCH {
            let ok = self.meter.charge(self.pending);
            self.pending = 0;
            if !ok {
                self.aborted = true;
                return false;
            }
        }
        true
    }

    pub fn flush(&mut self) {
        if self.pending > 0 {
            if !self.meter.charge(self.pending) {
                self.aborted = true;
            }
            self.pending = 0;
        }
    }

    fn leaf_passes(&self) -> Option<(bool, bool)> {
        let a = &self.letters;
        if self.prune_reducible && a.len() >= 2 && a[0] == -a[a.len() - 1] {
            return None;
        }
        let is_knot = self.cycles() == 1;
        if self.knots_only && !is_knot {
            return None;
        }
        let canonical = is_least_rotation(self.strands, a, self.flip_in_orbit);
        if self.canonical_only && !canonical {
            return None;
        }
        Some((is_knot, canonical))
    }

    /// Visits every admissible completion of the current prefix.
    pub fn run<F>(&mut self, visit: &mut F) -> Control
    where
        F: FnMut(Leaf<'_>) -> Control,
    {
        if self.letters.len() == self.length {
            let Some((is_knot, canonical)) = self.leaf_passes() else {
                return Control::Continue;
            };
            return visit(Leaf {
                letters: &self.letters,
                is_knot,
                canonical,
                burau: self.burau.as_ref(),
            });
        }
        for idx in 0..self.alphabet.len() {
            let l = self.alphabet[idx];
            if !self.admissible(l) {
                continue;
            }
            if !self.charge() {
                return Control::Stop;
            }
            self.push(l);
            let result = if self.feasible() { self.run(visit) } else { Control::Continue };
            self.pop();
            if let Control::Stop = result {
                return Control::Stop;
            }
        }
        Control::Continue
    }

    /// Feasible prefixes of length `depth`, in lexicographic order.
    pub fn prefixes(&mut self, depth: usize) -> Vec<Vec<i32>> {
        let mut out = Vec::new();
        self.collect_prefixes(depth.min(self.length), &mut out);
        out
    }

    fn collect_prefixes(&mut self, depth: usize, out: &mut Vec<Vec<i32>>) {
        if self.letters.len() == depth {
            out.push(self.letters.clone());
            return;
        }
        for idx in 0..self.alphabet.len() {
            let l = self.alphabet[idx];
            if !self.admissible(l) {
                continue;
            }
            self.push(l);
            if self.feasible() {
                self.collect_prefixes(depth, out);
            }
            self.pop();
        }
    }
}

fn cmp_prefix(a: impl Iterator<Item = i32>, b: &[i32]) -> std::cmp::Ordering {
    for (x, &y) in a.zip(b) {
        match letter_key(x).cmp(&letter_key(y)) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

/// Picks a prefix depth giving enough independent subtrees for the pool.
pub(crate) fn split_depth(c: &SearchConstraints) -> usize {
    let branching = (2 * c.strands.saturating_sub(1)).max(1);
    let mut depth = 0;
    let mut width = 1usize;
    while depth < c.length && width < 512 {
        width = width.saturating_mul(branching);
        depth += 1;
    }
    depth.min(c.length.saturating_sub(1)).max(usize::from(c.length > 0))
}
