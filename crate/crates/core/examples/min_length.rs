//! b_n of a knot: a witness word plus exclusions at every shorter length.
//!
//! ```text
//! cargo run --release --example min_length
//! cargo run --release --example min_length -- 6_2 4 11
//! ```

use braidrank::search::min_length;
use braidrank::{Budget, KnotTable};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let name = args.first().map(String::as_str).unwrap_or("5_2");
    let strands: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let upper: usize = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(10);

    let table = KnotTable::bundled();
    match min_length(name, strands, upper, table, Budget::UNLIMITED) {
        Ok(m) => {
            println!("b_{strands}({name}) = {}", m.value);
            println!("witness {}{}", m.witness.word, if m.witness.mirror { " (mirror)" } else { "" });
            for x in &m.exclusions {
                println!(
                    "  c = {:>2}: {:>8} words, {:>7} classes, absent ({:.3} s)",
                    x.constraints.length, x.words_examined, x.canonical_classes, x.elapsed
                );
            }
        }
        Err(e) => eprintln!("{name}: {e}"),
    }
}
