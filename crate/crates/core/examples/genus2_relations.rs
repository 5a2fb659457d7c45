//! Checks 𝒥² = I, (𝒯𝒥)⁵ = (𝒫⁺/𝒫⁻)²·I, unitarity and symmetry at the unitary root.
//!
//! cargo run --example genus2_relations -- 2 3 4 5 6

use std::time::Instant;

use tqft_hecke::recoupling::TheoryParams;
use tqft_hecke::rep_genus2::Genus2Rep;

fn main() {
    let levels: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("level"))
        .collect();
    let levels = if levels.is_empty() { vec![2, 3, 4, 5, 6] } else { levels };
    for r in levels {
        let start = Instant::now();
        let params = TheoryParams::unitary(r).expect("level ≥ 1");
        let rep = Genus2Rep::new(params).expect("assembles");
        let built = start.elapsed();
        println!("r = {r}: dim {}, N = {}, built in {built:.2?}", rep.dim(), params.order());
        for rel in rep.verify().expect("checks run") {
            let mark = if rel.pass { "ok  " } else { "FAIL" };
            println!("  {mark} {}", rel.relation);
        }
        println!("  total {:.2?}", start.elapsed());
    }
}
