//! Writes a profile to JSON, reads it back and replays every certificate
//! against the table.
//!
//! ```text
//! cargo run --release --example replay_certificate -- 8_20 /tmp/8_20.json
//! ```

use braidrank::deduce::replay;
use braidrank::{solve, BPrimeProfile, KnotTable, SolveOptions};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let name = args.first().map(String::as_str).unwrap_or("7_5");
    let path = args.get(1).cloned().unwrap_or_else(|| format!("{}/{name}.json", std::env::temp_dir().display()));

    let table = KnotTable::bundled();
    let record = table.lookup(name).expect("knot in table");
    let p = solve(record, table, &SolveOptions::default()).expect("solve");
    std::fs::write(&path, p.to_json().unwrap()).expect("write profile");
    println!("wrote {} certificates to {path}", p.certificates.len());

    let loaded = BPrimeProfile::from_json(&std::fs::read_to_string(&path).unwrap()).expect("parse profile");
    match replay(&loaded, table) {
        Ok(values) => println!("replayed: {values:?}"),
        Err(e) => println!("replay failed: {e}"),
    }

    let mut forged = loaded.clone();
    if let Some(k) = forged.known.values_mut().next() {
        k.value -= 2;
    }
    println!("forged copy: {}", replay(&forged, table).map(|_| "accepted".to_string()).unwrap_or_else(|e| e.to_string()));
}
