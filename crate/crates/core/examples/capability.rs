//! Covers and epicenters: which algebras are capable.
//!
//! `cargo run --release --example capability`

use liemult::hopf::cover_and_epicenter;
use liemult::{catalogue, LieAlgebra};

fn main() {
    let mut algebras = vec![
        ("H(1)".to_string(), LieAlgebra::heisenberg(1)),
        ("H(2)".to_string(), LieAlgebra::heisenberg(2)),
    ];
    for name in ["L_{5,8}", "L_{6,10}", "27A", "27B", "157", "37B"] {
        algebras.push((name.to_string(), catalogue::get(name).unwrap()));
    }
    for (name, l) in algebras {
        let c = cover_and_epicenter(&l).unwrap();
        let basis: Vec<String> = c.epicenter.basis().map(|v| v.to_string()).collect();
        println!(
            "{name:<10} dim cover = {:>2}  epicenter dim {}  {}  {}",
            c.cover.dim(),
            c.epicenter.dim(),
            if c.is_capable {
                "capable    "
            } else {
                "not capable"
            },
            basis.join("; ")
        );
    }
}
