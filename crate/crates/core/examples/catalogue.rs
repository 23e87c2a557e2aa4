//! Browse the catalogue: names, sources, recorded invariants, and the
//! export of every entry as one text file.
//!
//! `cargo run --example catalogue [NAME]`

use liemult::catalogue;

fn main() {
    if let Some(name) = std::env::args().nth(1) {
        let e = catalogue::entry(&name).unwrap_or_else(|err| {
            eprintln!("{err}");
            std::process::exit(2);
        });
        println!("{}", catalogue::expected_invariants(e.name()).unwrap());
        print!("{}", liemult::format::serialize(e.file()));
        return;
    }
    for e in catalogue::list_entries() {
        println!(
            "{:<18} dim {:>2}  {}",
            e.name(),
            e.dim(),
            e.tables().join(", ")
        );
    }
    let export = catalogue::export();
    println!(
        "\nexport: {} lines, {} sections",
        export.lines().count(),
        liemult::format::split_sections(&export).len()
    );
}
