//! Thurston's parabolic pair for a filling multicurve.
//!
//! cargo run --example thurston -- crates/core/examples/data/a4_chain.txt

use tqft_hecke::sl2_hecke::{hyperelliptic_image_check, thurston_rep, MulticurveData};

fn main() {
    let data = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).unwrap().parse().unwrap(),
        None => MulticurveData::type_a_path(4),
    };
    let t = thurston_rep(&data).unwrap();
    println!("mu = {:.9}  residual {:.1e}", t.mu, t.residual);
    if let Some(m) = &t.mu_exact {
        println!("exact mu = {m}");
    }
    for g in 1..=4 {
        let ok = hyperelliptic_image_check(g).unwrap().iter().all(|r| r.pass);
        println!("genus {g}: images of T_a, T_b satisfy the Hecke relations: {ok}");
    }
}
