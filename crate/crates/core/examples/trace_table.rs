//! tr(𝒥𝒯𝒥𝒯⁻¹) at A = e^{iπ/(r+2)} against d_r(2), plus the largest Galois conjugate.
//!
//! cargo run --release --example trace_table -- 3 5 7 9 11 13

use std::time::Instant;

use tqft_hecke::rep_genus2::trace_table;

fn main() {
    let levels: Vec<u32> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("level"))
        .collect();
    let levels = if levels.is_empty() { vec![3, 5, 7, 9, 11, 13] } else { levels };
    println!("{:>3} {:>5} {:>12} {:>8}  conjugates (k: re)", "r", "d", "tr", ">d");
    for r in levels {
        let start = Instant::now();
        let row = &trace_table(&[r]).expect("trace")[0];
        let conj: Vec<String> = row
            .conjugates
            .iter()
            .map(|(k, z)| format!("{k}: {:.2}", z.re))
            .collect();
        println!(
            "{:>3} {:>5} {:>12.2} {:>8}  {}  ({:.2?})",
            row.level,
            row.dim,
            row.value.re,
            row.exceeds_dim,
            conj.join(", "),
            start.elapsed()
        );
    }
}
