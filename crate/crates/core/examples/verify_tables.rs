//! Recomputes every recorded invariant in the catalogue.
//!
//! `cargo run --release --example verify_tables [-- --oracle]`

use liemult::verify::{lemma_suite, verify_tables, VerifyOptions};

fn main() {
    let oracle = std::env::args().any(|a| a == "--oracle");
    let report = verify_tables(&VerifyOptions {
        oracle,
        ..Default::default()
    });
    print!("{}", report.to_text());
    let lemmas = lemma_suite();
    println!();
    print!("{}", lemmas.to_text());
}
