//! Exhaustive exclusion: no 5-braid with occurrence string (2,2,2,2) closes
//! to 7_3, 7_5, 8_20 or 8_21. Prints the certificate as JSON.
//!
//! ```text
//! cargo run --release --example computer_check
//! ```

use braidrank::search::exclusion_search;
use braidrank::{Budget, KnotTable, OccurrenceString, SearchConstraints};

fn main() {
    let table = KnotTable::bundled();
    let targets: Vec<String> = ["7_3", "7_5", "8_20", "8_21"].map(String::from).to_vec();

    let raw = SearchConstraints::raw(5, 8).with_occurrence(OccurrenceString(vec![2, 2, 2, 2]));
    let cert = exclusion_search(&raw, &targets, table, Budget::UNLIMITED).expect("search completes");
    eprintln!("{} words in {:.2} s, all absent: {}", cert.words_examined, cert.elapsed, cert.all_absent());

    // the same answer from one word per rotation/flip class
    let classes = SearchConstraints::new(5, 8).with_occurrence(OccurrenceString(vec![2, 2, 2, 2]));
    let small = exclusion_search(&classes, &targets, table, Budget::UNLIMITED).unwrap();
    eprintln!("{} canonical knot words in {:.2} s, all absent: {}", small.words_examined, small.elapsed, small.all_absent());

    println!("{}", serde_json::to_string_pretty(&cert).unwrap());
}
