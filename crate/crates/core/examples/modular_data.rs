//! Genus-1 S and T and their SL2(Z) relations.

use tqft_hecke::recoupling::TheoryParams;
use tqft_hecke::rep_genus1::{modular_data, verify_genus1_relations};

fn main() {
    for r in [2, 3, 4] {
        let p = TheoryParams::unitary(r).unwrap();
        let md = modular_data(p);
        println!("r = {r}: D^2 ~ {:.6}", md.d2().embed().re);
        for row in md.s_tilde.to_complex() {
            let cells: Vec<String> = row.iter().map(|z| format!("{:>9.5}", z.re)).collect();
            println!("  {}", cells.join(" "));
        }
        for rep in verify_genus1_relations(p) {
            println!("  {} {}", if rep.pass { "ok  " } else { "FAIL" }, rep.relation);
        }
    }
}
