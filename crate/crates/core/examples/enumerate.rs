//! Word counts per shape: raw words, knot closures, canonical classes.
//!
//! ```text
//! cargo run --release --example enumerate
//! ```

use braidrank::search::count;
use braidrank::{OccurrenceString, SearchConstraints};

fn main() {
    println!("{:>2} {:>2} {:>10} {:>10} {:>10}", "n", "c", "raw", "knots", "classes");
    for n in 2..=5 {
        for c in (n - 1..=n + 3).step_by(2) {
            let (raw, _) = count(&SearchConstraints::raw(n, c)).unwrap();
            let all = SearchConstraints { canonical_only: false, ..SearchConstraints::new(n, c) };
            let (knots, classes) = count(&all).unwrap();
            let reduced = count(&SearchConstraints::new(n, c).reduced()).unwrap().0;
            println!("{n:>2} {c:>2} {raw:>10} {knots:>10} {classes:>10}   reduced {reduced}");
        }
    }

    let occ = OccurrenceString(vec![2, 2, 2, 2]);
    let (all, _) = count(&SearchConstraints::raw(5, 8).with_occurrence(occ.clone())).unwrap();
    let (classes, _) = count(&SearchConstraints::new(5, 8).with_occurrence(occ.clone())).unwrap();
    println!("occurrence {occ}: {all} signed words, {classes} canonical knot classes");
}
