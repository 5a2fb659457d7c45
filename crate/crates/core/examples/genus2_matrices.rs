//! The unitary genus-2 matrices at r = 2 and r = 3, exact entries included.

use tqft_hecke::recoupling::TheoryParams;
use tqft_hecke::rep_genus2::{Genus2Rep, JEntry, JUnitary};

fn main() {
    for r in [2, 3] {
        let rep = Genus2Rep::new(TheoryParams::unitary(r).unwrap()).unwrap();
        println!("r = {r}, dim {}", rep.dim());
        let JUnitary::Normalized(nj) = &rep.junitary else {
            println!("  form not positive at this root");
            continue;
        };
        for (a, (i, j, k)) in rep.basis.iter().enumerate() {
            let first = match nj.get(0, a) {
                JEntry::Exact { value } => format!("{:.6}", value.embed().re),
                JEntry::Surd { square, sign } => format!("{}sqrt({:.6})", if *sign < 0 { "-" } else { "" }, square.embed().re),
            };
            println!("  J(000,{i}{j}{k}) = {first}");
        }
        let t: Vec<String> = rep.twist().iter().map(|x| format!("{:.3}", x.embed())).collect();
        println!("  T = diag({})", t.join(", "));
    }
}
