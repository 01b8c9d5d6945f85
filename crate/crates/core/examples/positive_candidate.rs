//! Search for a positive braid representative with prescribed properties.
//!
//! Finds the first canonical positive 5-braid of 16 letters such that
//!
//! * every generator occurs at least twice and the closure is a knot,
//! * no positive braid on fewer strands closes to the same knot (for a
//!   positive word the genus fixes the length, so only length 15 on four
//!   strands, 14 on three and 13 on two need checking),
//! * the knot is not already in the bundled table.
//!
//! The output row is the `16_472381` entry of `scripts/extra_knots.csv`.
//!
//! ```text
//! cargo run --release --example positive_candidate
//! ```

use std::collections::HashMap;

use braidrank::invariants::{alexander, jones};
use braidrank::search::{enumerate, SearchConstraints};
use braidrank::{fingerprint, BraidWord, KnotTable, LaurentPoly, OccurrenceString};
use rayon::prelude::*;

fn positive_words(strands: usize, length: usize) -> Vec<BraidWord> {
    OccurrenceString::compositions(length, strands - 1, 1)
        .into_par_iter()
        .flat_map_iter(|occ| {
            let c = SearchConstraints { positive_only: true, ..SearchConstraints::new(strands, length).with_occurrence(occ) };
            enumerate(&c).expect("valid constraints")
        })
        .collect()
}

fn main() {
    let table = KnotTable::bundled();
    let mut smaller: HashMap<LaurentPoly, Vec<LaurentPoly>> = HashMap::new();
    for (n, c) in [(2, 13), (3, 14), (4, 15)] {
        let words = positive_words(n, c);
        let fps: Vec<_> = words.par_iter().map(|w| fingerprint(w).expect("knot")).collect();
        eprintln!("{} positive {n}-braid knot words of length {c}", fps.len());
        for fp in fps {
            smaller.entry(fp.alexander).or_default().push(fp.jones);
        }
    }

    let known = |w: &BraidWord| {
        let a = alexander(w).expect("knot");
        match smaller.get(&a) {
            None => false,
            Some(js) => {
                let j = jones(w).expect("knot");
                js.iter().any(|x| *x == j || *x == j.mirror())
            }
        }
    };

    for occ in OccurrenceString::compositions(16, 4, 2) {
        let c = SearchConstraints { positive_only: true, ..SearchConstraints::new(5, 16).with_occurrence(occ.clone()) };
        let words = enumerate(&c).expect("valid constraints");
        let hit = words.par_iter().position_first(|w| {
            !known(w) && table.identify(&fingerprint(w).expect("knot")).is_empty()
        });
        if let Some(i) = hit {
            let w = &words[i];
            let fp = fingerprint(w).expect("knot");
            println!("occurrence {occ}: {w}");
            println!("alexander {}", fp.alexander);
            println!("jones     {}", fp.jones);
            println!("16_472381,16,4,6,\"{w}\",\"{}\",\"{}\",,true,true,17", fp.alexander, fp.jones);
            return;
        }
        eprintln!("occurrence {occ}: no candidate among {} words", words.len());
    }
    println!("no candidate");
}
