//! Alexander and Jones polynomials of closed braids.
//!
//! Polynomials print as `min_degree;c0,c1,...`. The Jones polynomial is in
//! q with the trefoil σ1³ giving q + q³ − q⁴.
//!
//! ```text
//! cargo run --example invariants
//! cargo run --example invariants -- "B4:1,2,3,1,2,3,1,2,3,1,2,3,1,2,3"
//! ```

use braidrank::invariants::{alexander, homogeneous_genus, jones, seifert_surface};
use braidrank::BraidWord;

fn report(w: &BraidWord) {
    if !w.is_knot() {
        println!("{w}: closure has {} components", w.component_count());
        return;
    }
    let s = seifert_surface(w).unwrap();
    println!("{w}");
    println!("  alexander  {}", alexander(w).unwrap());
    println!("  jones      {}", jones(w).unwrap());
    println!("  mirror     {}", jones(&w.mirror()).unwrap());
    match homogeneous_genus(w) {
        Ok(g) => println!("  genus      {g} (homogeneous word)"),
        Err(_) => println!("  surface    genus {} from {} disks and {} bands, an upper bound", s.genus, s.circles, s.bands),
    }
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let words: Vec<String> = if args.is_empty() {
        ["B2:1,1,1", "B3:1,-2,1,-2", "B3:1,1,1,2,-1,2", "B3:1,2,1,2,1,2,1,2", "B2:1,1"].map(String::from).to_vec()
    } else {
        args
    };
    for s in &words {
        match s.parse::<BraidWord>() {
            Ok(w) => report(&w),
            Err(e) => eprintln!("{s}: {e}"),
        }
    }
}
