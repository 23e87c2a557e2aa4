//! Fingerprints of the main theorem's algebras and the candidates the
//! classifier returns for each of them.
//!
//! `cargo run --release --example classify`

use liemult::catalogue;
use liemult::verify::{classify_s5, fingerprint};

fn main() {
    println!("{:<20} {:<22} candidates", "member", "(n, L^2, Z, c, M, s)");
    for (label, entry) in catalogue::main_theorem_list() {
        let l = entry.algebra().expect("member validates");
        let fp = fingerprint(&l).expect("member is non-abelian");
        let candidates = classify_s5(&l).expect("member is non-abelian");
        println!(
            "{label:<20} {:<22} {}",
            fp.to_string(),
            candidates.join(", ")
        );
    }

    println!();
    for name in ["L_{3,2}", "37A", "L_{6,26}⊕A(1)", "257K"] {
        let l = catalogue::get(name).unwrap();
        let candidates = classify_s5(&l).unwrap();
        let shown = if candidates.is_empty() {
            "none".to_string()
        } else {
            candidates.join(", ")
        };
        println!(
            "{name:<20} s = {:<3} candidates: {shown}",
            fingerprint(&l).unwrap().s
        );
    }
}
