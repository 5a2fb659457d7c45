//! Spin splitting of d_r(g) and the three invariant summands.

use tqft_hecke::spin::{reducibility_report, spin_table};

fn main() {
    for r in [2, 6, 10, 14] {
        for g in 1..=3 {
            let t = spin_table(r, g).unwrap();
            println!(
                "r = {r:>2}, g = {g}: {} = {}*{} + {}*{}",
                t.total, t.even_forms, t.d_even, t.odd_forms, t.d_odd
            );
        }
    }
    for (r, g) in [(6, 2), (6, 3), (10, 2)] {
        let rep = reducibility_report(r, g).unwrap();
        println!("r = {r}, g = {g}: flat parity {}, summands {:?}", rep.flat_parity, rep.summands);
    }
}
