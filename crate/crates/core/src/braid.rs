//! Braid words and the closure-preserving moves on them.
//!
//! A word on `n` strands is a sequence of signed letters: `+i` is the
//! generator σ_i, `-i` its inverse. Words are never reduced implicitly, so
//! `len()` is always the crossing count of the closed-braid diagram.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

/// Sort key for a letter: σ_1 < σ_1⁻¹ < σ_2 < σ_2⁻¹ < ...
#[inline]
pub fn letter_key(letter: i32) -> i32 {
    2 * letter.abs() - i32::from(letter > 0)
}

/// Lexicographic comparison of two equal-length letter slices under [`letter_key`].
pub fn compare_letters(a: &[i32], b: &[i32]) -> Ordering {
    for (&x, &y) in a.iter().zip(b) {
        match letter_key(x).cmp(&letter_key(y)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::MalformedWord("strand count must be at least 1".into()));
        }
        for &l in &letters {
            if l == 0 {
                return Err(Error::MalformedWord("zero letter".into()));
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(Error::MalformedWord(format!(
                    "letter {l} out of range for {strands} strands"
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Caller guarantees every letter is in range.
    pub(crate) fn from_letters_unchecked(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&l| l != 0 && (l.unsigned_abs() as usize) < strands));
        BraidWord { strands, letters }
    }

    pub fn empty(strands: usize) -> Self {
        BraidWord { strands: strands.max(1), letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn occurrence_string(&self) -> OccurrenceString {
        let mut counts = vec![0usize; self.strands - 1];
        for &l in &self.letters {
            counts[l.unsigned_abs() as usize - 1] += 1;
        }
        OccurrenceString(counts)
    }

    pub fn permutation(&self) -> Permutation {
        Permutation::of_word(self.strands, &self.letters)
    }

    /// Number of components of the closure; 1 iff the closure is a knot.
    pub fn component_count(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Deletes adjacent pairs σ_i^ε σ_i^-ε until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// Moves the first `k` letters to the end (conjugation).
    pub fn cyclic_rotate(&self, k: isize) -> BraidWord {
        let len = self.letters.len();
        if len == 0 {
            return self.clone();
        }
        let k = k.rem_euclid(len as isize) as usize;
        let mut letters = Vec::with_capacity(len);
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        BraidWord { strands: self.strands, letters }
    }

    /// Adds a strand and appends σ_n^{±1}, where n is the old strand count.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Removes the last strand when σ_{n-1}^{±1} occurs exactly once, after
    /// rotating that occurrence to the end of the word.
    pub fn destabilize(&self) -> Option<BraidWord> {
        if self.strands < 2 {
            return None;
        }
        let top = (self.strands - 1) as i32;
        let mut positions = self
            .letters
            .iter()
            .enumerate()
            .filter(|(_, l)| l.abs() == top)
            .map(|(i, _)| i);
        let pos = positions.next()?;
        if positions.next().is_some() {
            return None;
        }
        let mut rotated = self.cyclic_rotate(pos as isize + 1);
        rotated.letters.pop();
        rotated.strands -= 1;
        Some(rotated)
    }

    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|&l| -l).collect(),
        }
    }

    /// σ_i ↦ σ_{n-i}, sign kept: the closure turned over about the braid axis.
    pub fn flip(&self) -> BraidWord {
        let n = self.strands as i32;
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|&l| l.signum() * (n - l.abs())).collect(),
        }
    }

    /// The formal inverse word (reversed, signs flipped).
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let strands = self.strands.max(other.strands);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands, letters }
    }

    pub fn classify(&self) -> WordClass {
        let mut sign = vec![0i32; self.strands];
        let mut homogeneous = true;
        for &l in &self.letters {
            let slot = &mut sign[l.unsigned_abs() as usize];
            if *slot == 0 {
                *slot = l.signum();
            } else if *slot != l.signum() {
                homogeneous = false;
            }
        }
        WordClass {
            positive: self.letters.iter().all(|&l| l > 0),
            homogeneous,
        }
    }

    /// Least word (under [`letter_key`]) among all rotations of the word and
    /// of its flip.
    pub fn canonical_form(&self) -> BraidWord {
        let mut best = self.clone();
        for base in [self.clone(), self.flip()] {
            for k in 0..base.len().max(1) {
                let cand = base.cyclic_rotate(k as isize);
                if compare_letters(&cand.letters, &best.letters) == Ordering::Less {
                    best = cand;
                }
            }
        }
        best
    }

    pub fn is_canonical(&self) -> bool {
        is_least_rotation(self.strands, &self.letters, true)
    }
}

/// True when `letters` is not beaten by any of its rotations (and, with
/// `with_flip`, any rotation of its flip).
pub fn is_least_rotation(strands: usize, letters: &[i32], with_flip: bool) -> bool {
    let len = letters.len();
    let n = strands as i32;
    let flip = |l: i32| l.signum() * (n - l.abs());
    for start in 0..len {
        if start > 0 {
            let rotated = (0..len).map(|i| letters[(start + i) % len]);
            if cmp_iter(rotated, letters) == Ordering::Less {
                return false;
            }
        }
        if with_flip {
            let flipped = (0..len).map(|i| flip(letters[(start + i) % len]));
            if cmp_iter(flipped, letters) == Ordering::Less {
                return false;
            }
        }
    }
    true
}

fn cmp_iter(a: impl Iterator<Item = i32>, b: &[i32]) -> Ordering {
    for (x, &y) in a.zip(b) {
        match letter_key(x).cmp(&letter_key(y)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// Parses whitespace- or comma-separated signed integers on `strands` strands.
pub fn parse_word(text: &str, strands: usize) -> Result<BraidWord> {
    let letters = parse_letters(text)?;
    BraidWord::new(strands, letters)
}

fn parse_letters(text: &str) -> Result<Vec<i32>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<i32>()
                .map_err(|_| Error::MalformedWord(format!("`{s}` is not an integer")))
        })
        .collect()
}

impl FromStr for BraidWord {
    type Err = Error;

    /// `B<n>:<letters>`; without the prefix the strand count is one more than
    /// the largest generator index.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('B').or_else(|| s.strip_prefix('b')) {
            let (n, body) = rest
                .split_once(':')
                .ok_or_else(|| Error::MalformedWord(format!("missing `:` in `{s}`")))?;
            let strands = n
                .trim()
                .parse::<usize>()
                .map_err(|_| Error::MalformedWord(format!("bad strand count in `{s}`")))?;
            parse_word(body, strands)
        } else {
            let letters = parse_letters(s)?;
            let strands = letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1);
            BraidWord::new(strands, letters)
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BraidWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordClass {
    pub positive: bool,
    pub homogeneous: bool,
}

/// Per-generator letter counts of a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OccurrenceString(pub Vec<usize>);

impl OccurrenceString {
    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn has_zero(&self) -> bool {
        self.0.contains(&0)
    }

    pub fn reversed(&self) -> OccurrenceString {
        OccurrenceString(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// All strings of `parts` entries, each at least `min`, summing to `total`,
    /// in lexicographic order.
    pub fn compositions(total: usize, parts: usize, min: usize) -> Vec<OccurrenceString> {
        fn rec(left: usize, parts: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<OccurrenceString>) {
            if parts == 0 {
                if left == 0 {
                    out.push(OccurrenceString(cur.clone()));
                }
                return;
            }
            let reserve = min * (parts - 1);
            if left < reserve + min {
                return;
            }
            for v in min..=left - reserve {
                cur.push(v);
                rec(left - v, parts - 1, min, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(total, parts, min, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for OccurrenceString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for OccurrenceString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        body.split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::MalformedWord(format!("bad occurrence entry `{p}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(OccurrenceString)
    }
}

impl Serialize for OccurrenceString {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for OccurrenceString {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Vec::<usize>::deserialize(d).map(OccurrenceString)
    }
}

/// Strand permutation of a braid: `images[i]` is the end position (1-based)
/// of the strand starting at position `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn of_word(n: usize, letters: &[i32]) -> Self {
        // at[p] = strand currently at position p
        let mut at: Vec<usize> = (0..n).collect();
        for &l in letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut images = vec![0; n];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand] = pos + 1;
        }
        Permutation { images }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn cycle_count(&self) -> usize {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] - 1;
            }
        }
        cycles
    }

    pub fn sign(&self) -> i32 {
        if (self.images.len() - self.cycle_count()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn parses_paper_words() {
        assert_eq!(parse_word("1 1 1", 2).unwrap(), w(2, &[1, 1, 1]));
        assert_eq!(parse_word("1 -2 1 -2", 3).unwrap(), w(3, &[1, -2, 1, -2]));
        assert_eq!("B3:1,-2,1,-2".parse::<BraidWord>().unwrap(), w(3, &[1, -2, 1, -2]));
        assert!(matches!(parse_word("3", 2), Err(Error::MalformedWord(_))));
        assert!(matches!(parse_word("1 0 1", 3), Err(Error::MalformedWord(_))));
        assert_eq!("B1:".parse::<BraidWord>().unwrap(), BraidWord::empty(1));
    }

    #[test]
    fn occurrence_strings() {
        let word = w(6, &[3, 2, 1, -3, 4, 2, -5]);
        assert_eq!(word.occurrence_string().0, vec![1, 2, 2, 1, 1]);
        assert_eq!(w(2, &[1, 1, 1]).occurrence_string().0, vec![3]);
        assert_eq!(BraidWord::empty(4).occurrence_string().0, vec![0, 0, 0]);
    }

    #[test]
    fn permutations_and_components() {
        let p = w(2, &[1, 1, 1]).permutation();
        assert_eq!(p.images(), &[2, 1]);
        assert_eq!(p.cycle_count(), 1);
        assert_eq!(BraidWord::empty(3).permutation(), Permutation::identity(3));
        assert_eq!(BraidWord::empty(3).component_count(), 3);
        // σ1σ2: strand 1 -> 2 -> 3, strand 2 -> 1, strand 3 -> 2
        let p = w(3, &[1, 2]).permutation();
        assert_eq!(p.images(), &[3, 1, 2]);
        assert_eq!(p.cycle_count(), 1);
        assert_eq!(w(2, &[1, 1]).component_count(), 2);
        assert!(w(5, &[1, 1, 3, 4]).component_count() >= 2);
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w(2, &[1, 1, 1]).exponent_sum(), 3);
        assert_eq!(w(3, &[1, -2, 1, -2]).exponent_sum(), 0);
        let x = w(4, &[1, 2, -3, 2]);
        assert_eq!(x.mirror().exponent_sum(), -x.exponent_sum());
    }

    #[test]
    fn free_reduction() {
        assert!(w(2, &[1, -1]).free_reduce().is_empty());
        assert_eq!(w(3, &[1, 2, -2, 1, 1]).free_reduce(), w(3, &[1, 1, 1]));
        assert_eq!(w(2, &[1, 1, 1]).free_reduce(), w(2, &[1, 1, 1]));
    }

    #[test]
    fn rotation() {
        let x = w(3, &[1, 2, 1]);
        assert_eq!(x.cyclic_rotate(1), w(3, &[2, 1, 1]));
        assert_eq!(x.cyclic_rotate(3), x);
        assert_eq!(x.cyclic_rotate(2).cyclic_rotate(-2), x);
    }

    #[test]
    fn stabilization() {
        let t = w(2, &[1, 1, 1]);
        let s = t.stabilize(true);
        assert_eq!(s, w(3, &[1, 1, 1, 2]));
        assert_eq!(s.len(), t.len() + 1);
        assert_eq!(BraidWord::empty(1).stabilize(true), w(2, &[1]));
        assert_eq!(s.destabilize().unwrap(), t);
        assert_eq!(t.destabilize(), None);
        assert_eq!(w(2, &[1]).destabilize().unwrap(), BraidWord::empty(1));
    }

    #[test]
    fn destabilizes_unit_strings_down_to_two_strands() {
        // occurrence string (1,3,1,1) on 5 strands
        let mut x = w(5, &[3, 2, 1, 2, 4, 2]);
        assert_eq!(x.occurrence_string().0, vec![1, 3, 1, 1]);
        while let Some(y) = x.destabilize() {
            x = y;
        }
        // the left end unit is removed after flipping
        let mut y = x.flip();
        while let Some(z) = y.destabilize() {
            y = z;
        }
        assert_eq!(y.strands(), 2);
        assert_eq!(y.len(), 3);
    }

    #[test]
    fn mirror_is_involution() {
        let t = w(2, &[1, 1, 1]);
        assert_eq!(t.mirror(), w(2, &[-1, -1, -1]));
        assert_eq!(t.mirror().mirror(), t);
    }

    #[test]
    fn classification() {
        assert_eq!(w(2, &[1, 1, 1]).classify(), WordClass { positive: true, homogeneous: true });
        assert_eq!(w(3, &[1, -2, 1, -2]).classify(), WordClass { positive: false, homogeneous: true });
        assert_eq!(w(2, &[1, -1]).classify(), WordClass { positive: false, homogeneous: false });
    }

    #[test]
    fn canonical_forms() {
        let x = w(3, &[2, 1, 1]);
        assert_eq!(x.canonical_form(), w(3, &[1, 1, 2]));
        assert!(x.canonical_form().is_canonical());
        assert!(!x.is_canonical());
        for k in 0..3 {
            assert_eq!(x.cyclic_rotate(k).canonical_form(), w(3, &[1, 1, 2]));
            assert_eq!(x.flip().cyclic_rotate(k).canonical_form(), w(3, &[1, 1, 2]));
        }
    }

    #[test]
    fn letter_order() {
        let mut letters = vec![-2, 2, -1, 1, 3];
        letters.sort_by_key(|&l| letter_key(l));
        assert_eq!(letters, vec![1, -1, 2, -2, 3]);
    }

    #[test]
    fn compositions() {
        let all = OccurrenceString::compositions(8, 4, 1);
        assert_eq!(all.len(), 35);
        let twos = OccurrenceString::compositions(8, 4, 2);
        assert_eq!(twos, vec![OccurrenceString(vec![2, 2, 2, 2])]);
        assert!(OccurrenceString::compositions(3, 4, 1).is_empty());
        assert_eq!(OccurrenceString::compositions(0, 0, 1), vec![OccurrenceString(vec![])]);
    }

    #[test]
    fn word_text_roundtrip() {
        let x = w(5, &[1, -2, 3, -4]);
        assert_eq!(x.to_string(), "B5:1,-2,3,-4");
        assert_eq!(x.to_string().parse::<BraidWord>().unwrap(), x);
        assert_eq!("1,2,-3".parse::<BraidWord>().unwrap().strands(), 4);
    }
}
