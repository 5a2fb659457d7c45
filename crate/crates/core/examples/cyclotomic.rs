//! Exact arithmetic in Q(zeta_N): golden ratio, Galois action, square roots.

use tqft_hecke::exactnum::CycNumber;

fn main() {
    let n = 10;
    let z = CycNumber::zeta_pow(n, 1);
    // 2 cos(pi/5) = z + z^-1 is the golden ratio.
    let phi = &z + &z.inv().unwrap();
    println!("phi ~ {:.9}", phi.embed().re);
    println!("phi^2 - phi - 1 = 0: {}", (&(&phi * &phi) - &phi).is_one());
    for a in [1, 3, 7, 9] {
        println!("sigma_{a}(phi) ~ {:.6}", phi.galois(a).embed().re);
    }
    let five = CycNumber::from_i64(n, 5);
    match five.try_sqrt() {
        Some(s) => println!("sqrt 5 ~ {:.9} lies in Q(zeta_{n})", s.embed().re),
        None => println!("5 is not a square in Q(zeta_{n})"),
    }
}
