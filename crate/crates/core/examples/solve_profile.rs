//! Certified profile n ↦ b_n'(K), with the certificate chain behind it.
//!
//! ```text
//! cargo run --release --example solve_profile
//! cargo run --release --example solve_profile -- 7_2 8_20
//! ```

use braidrank::deduce::CertificateKind;
use braidrank::{solve, KnotTable, SolveOptions};

fn main() {
    let table = KnotTable::bundled();
    let mut names: Vec<String> = std::env::args().skip(1).collect();
    if names.is_empty() {
        names.push("10_136".into());
    }
    for name in &names {
        let record = match table.lookup(name) {
            Ok(r) => r,
            Err(e) => {
                eprintln!("{e}");
                continue;
            }
        };
        let p = solve(record, table, &SolveOptions::default()).expect("solve");
        println!("{name}: braid index {}, genus {}, status {:?}", record.braid_index, record.genus, p.status);
        for (n, k) in &p.known {
            let flag = if p.certificates[k.certificate].table_sourced { "  table data" } else { "" };
            println!("  b_{n}' = {:>2}   (b_{n} = {}){flag}", k.value, k.length);
        }
        if let Some(e) = &p.eventual {
            println!("  b_n' = {} for n >= {}", e.value, e.from);
            for id in p.chain(e.certificate) {
                let c = &p.certificates[id];
                let label = match c.kind {
                    CertificateKind::Witness => "witness".to_string(),
                    CertificateKind::Exclusion => "exclusion".to_string(),
                    CertificateKind::Rule => c.rule_name.clone().unwrap_or_default(),
                };
                println!("    #{id:<3} {label:<34} {}", c.statement);
            }
        }
        match p.constant {
            Some(true) => println!("  constant"),
            Some(false) => println!("  not constant"),
            None => println!("  constancy undecided"),
        }
    }
}
