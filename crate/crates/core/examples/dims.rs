//! d_r(g) for a few levels and genera.

use tqft_hecke::recoupling::verlinde_dim;

fn main() {
    print!("{:>4}", "r");
    for g in 1..=4 {
        print!(" {:>12}", format!("g={g}"));
    }
    println!();
    for r in 2..=13 {
        print!("{r:>4}");
        for g in 1..=4 {
            print!(" {:>12}", verlinde_dim(r, g).unwrap());
        }
        println!();
    }
}
