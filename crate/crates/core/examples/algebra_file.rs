//! Reading and writing the text format, including a parameterized family.
//!
//! `cargo run --example algebra_file`

use liemult::format::{parse_algebra_file, serialize, serialize_algebra};
use liemult::linalg::ratio;
use liemult::multiplier::multiplier_report;

const FAMILY: &str = "\
# a one-parameter family in dimension 6
dim 6
param eps = 1
[1,2] = 5
[1,3] = 6
[2,4] = eps*6
[3,4] = 5
";

fn main() {
    let mut file = parse_algebra_file(FAMILY).unwrap();
    print!("{}", serialize(&file));
    for value in [ratio(1, 1), ratio(0, 1), ratio(-1, 2)] {
        file.bind("eps", value.clone()).unwrap();
        let l = file.to_algebra().unwrap();
        let r = multiplier_report(&l).unwrap();
        println!("eps = {value}: dim M = {}, s = {}", r.dim_m, r.s.unwrap());
    }

    println!();
    let l = file
        .to_algebra()
        .unwrap()
        .direct_sum(&liemult::LieAlgebra::abelian(1));
    print!("{}", serialize_algebra(&l));
}
