//! Words in the Hecke group and the type of their images.
//!
//! cargo run --example hecke_sl2 -- 7 "A B^-1 A B"

use tqft_hecke::sl2_hecke::{classify, eval_word, parse_word, verify_presentation};

fn main() {
    let mut args = std::env::args().skip(1);
    let q: u32 = args.next().map_or(5, |a| a.parse().expect("q"));
    let word = args.next().unwrap_or_else(|| "A B^-1".into());
    let m = eval_word(&parse_word(&word).unwrap(), q).unwrap();
    let f = m.to_f64();
    println!("q = {q}, {word} ~ [[{:.4}, {:.4}], [{:.4}, {:.4}]]", f[0][0], f[0][1], f[1][0], f[1][1]);
    println!("{:?}", classify(&m));
    for rep in verify_presentation(q).unwrap() {
        println!("  {} {}", if rep.pass { "ok  " } else { "FAIL" }, rep.relation);
    }
}
