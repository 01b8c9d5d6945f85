//! Fingerprint lookup in the bundled knot table.
//!
//! ```text
//! cargo run --example identify
//! ```

use braidrank::{fingerprint, BraidWord, KnotTable};

fn main() {
    let table = KnotTable::bundled();
    println!("table {} with {} rows", &table.version()[..16], table.len());

    for s in ["B2:-1,-1,-1", "B4:1,1,1,2,-1,2,3,-2,3", "B3:1,1,1,1,1,2,-1,2", "B4:-1,-1,-2,3,-2,1,-2,-2,3,2,2", "B2:1,1,1,1,1,1,1,1,1,1,1,1,1"] {
        let w: BraidWord = s.parse().unwrap();
        let id = table.identify(&fingerprint(&w).unwrap());
        let names: Vec<String> = id
            .matches
            .iter()
            .map(|(n, mirror)| if *mirror { format!("{n} (mirror)") } else { n.clone() })
            .collect();
        let shown = if names.is_empty() { "not in table".to_string() } else { names.join(", ") };
        println!("{s:36} {shown}{}", if id.ambiguous { "  [ambiguous]" } else { "" });
    }

    // rows the fingerprint cannot tell apart
    let mut clashes = 0;
    for r in table.records() {
        if table.identify(&r.fingerprint()).ambiguous {
            clashes += 1;
        }
    }
    println!("{clashes} rows share their fingerprint with another row");
}
