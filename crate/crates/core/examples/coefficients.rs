//! Recoupling coefficients as rational functions of A, then at the unitary root.
//!
//! cargo run --example coefficients -- 5    (r >= 4)

use tqft_hecke::recoupling::{Recoupling, TheoryParams};

fn main() {
    let r = std::env::args().nth(1).map_or(5, |a| a.parse().expect("level"));
    let th = Recoupling::new(TheoryParams::unitary(r).unwrap());
    println!("A = zeta_{}^{}", th.params().order(), th.params().root());
    // At odd r only even colors survive.
    for i in (0..=r.min(4)).filter(|i| r.is_multiple_of(2) || i % 2 == 0) {
        println!("Delta_{i} = {}  ~ {:.6}", th.delta(i).unwrap(), th.delta_at(i).embed().re);
    }
    println!("theta(2,2,2) ~ {:.6}", th.theta_at(2, 2, 2).unwrap().embed().re);
    println!("Tet(2,2,2,2,2,2) ~ {:.6}", th.tet_at(2, 2, 2, 2, 2, 2).unwrap().embed().re);
    // Orthogonality of 6j symbols in the row {2 2 i / 2 2 j}.
    let top = if r.is_multiple_of(2) { r.min(4) } else { (r - 1).min(4) };
    let sum = (0..=top).step_by(2).fold(0.0, |acc, j| {
        let a = th.sixj_at(2, 2, 0, 2, 2, j).unwrap().embed().re;
        let b = th.sixj_at(2, 2, j, 2, 2, 0).unwrap().embed().re;
        acc + a * b
    });
    println!("sum_j {{2 2 0 / 2 2 j}}{{2 2 j / 2 2 0}} ~ {sum:.6}");
}
