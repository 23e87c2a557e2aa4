//! dim M(L), s(L), t(L) and the upper bounds for a few catalogue entries,
//! plus the effect of adding abelian summands.
//!
//! `cargo run --example multiplier`

use liemult::multiplier::{bound_checks, kunneth_dim, multiplier_report};
use liemult::{catalogue, LieAlgebra};

fn main() {
    for name in ["L_{3,2}", "L_{5,8}", "L_{6,22}", "27A", "37B"] {
        let l = catalogue::get(name).unwrap();
        let r = multiplier_report(&l).unwrap();
        println!(
            "{name:<10} n = {}  dim Z^2 = {:>2}  dim M = {:>2}  s = {}  t = {}",
            r.n,
            r.dim_z2,
            r.dim_m,
            r.s.unwrap(),
            r.t
        );
        for check in bound_checks(&l, None).unwrap().checks {
            println!("    {check}");
        }
    }

    println!();
    let l = catalogue::get("L_{4,3}").unwrap();
    let base = multiplier_report(&l).unwrap().dim_m;
    for k in 0..=4 {
        let sum = if k == 0 {
            l.clone()
        } else {
            l.direct_sum(&LieAlgebra::abelian(k))
        };
        let r = multiplier_report(&sum).unwrap();
        println!(
            "L_{{4,3}} + A({k}): dim M = {:>2} (formula {:>2})  s = {}",
            r.dim_m,
            kunneth_dim(base, l.abelianization_dim(), k),
            r.s.unwrap()
        );
    }
}
