//! Reference genus-2 matrices at r = 2 and r = 3, and invariant checks shared by the suites.
#![allow(dead_code)]

pub mod invariants;

use num_bigint::BigInt;
use tqft_hecke::exactnum::{CycNumber, ExactMatrix, Rational};
use tqft_hecke::rep_genus2::{Genus2Rep, JUnitary, NormalizedJ};

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn z(order: u32, m: i64) -> CycNumber {
    CycNumber::zeta_pow(order, m)
}

pub fn normalized(rep: &Genus2Rep) -> &NormalizedJ {
    match &rep.junitary {
        JUnitary::Normalized(nj) => nj,
        JUnitary::NonNormalized { reason, .. } => panic!("not normalized: {reason}"),
    }
}

pub const J2: [&str; 10] = [
    "q s q s s s s q s q",
    "s h s 0 0 0 0 -s -h -s",
    "q s q -s -s -s -s q s q",
    "s 0 -s 0 h -h 0 -s 0 s",
    "s 0 -s h 0 0 -h s 0 -s",
    "s 0 -s -h 0 0 h s 0 -s",
    "s 0 -s 0 -h h 0 -s 0 s",
    "q -s q -s s s -s q -s q",
    "s -h s 0 0 0 0 -s h -s",
    "q -s q s -s -s s q -s q",
];

pub fn ising_entry(tok: &str) -> CycNumber {
    let (neg, t) = tok.strip_prefix('-').map_or((false, tok), |t| (true, t));
    let sqrt2 = &z(16, 2) + &z(16, 14);
    let v = match t {
        "0" => CycNumber::zero(16),
        "q" => CycNumber::from_rational(16, &q(1, 4)),
        "h" => CycNumber::from_rational(16, &q(1, 2)),
        "s" => sqrt2.scale(&q(1, 4)),
        _ => unreachable!(),
    };
    if neg {
        -v
    } else {
        v
    }
}

pub const J3: [&str; 5] = [
    "a f f f u",
    "f b -a -a -v",
    "f -a -a b -v",
    "f -a b -a -v",
    "u -v -v -v c",
];

/// `(square, sign)` of each reference Fibonacci entry, squares in ℚ(ζ_20).
pub fn fib_entry(tok: &str) -> (CycNumber, i32) {
    let (sign, t) = tok.strip_prefix('-').map_or((1, tok), |t| (-1, t));
    let one = CycNumber::one(20);
    let sqrt5 = &one + &(&z(20, 4) + &z(20, 16)).scale_i64(2);
    let lin = |a: i64, b: i64, d: i64| (&one.scale_i64(a) + &sqrt5.scale_i64(b)).scale(&q(1, d));
    let sq = match t {
        "a" => lin(3, -1, 10),
        "b" => lin(3, 1, 10),
        "f" => lin(1, 0, 5),
        "u" => lin(1, 1, 10),
        "v" => lin(-1, 1, 10),
        "c" => lin(6, -2, 5),
        _ => unreachable!(),
    };
    (sq, sign)
}


pub fn ising_j() -> ExactMatrix {
    let rows: Vec<Vec<CycNumber>> = J2
        .iter()
        .map(|row| row.split_whitespace().map(ising_entry).collect())
        .collect();
    ExactMatrix::from_rows(16, rows).unwrap()
}

/// `e^{iπ/8}`-powers on the diagonal of the r = 2 twist.
pub fn ising_t() -> Vec<CycNumber> {
    let (w7, w6) = (z(16, 7), z(16, 6));
    let one = CycNumber::one(16);
    vec![
        one.clone(),
        w7.clone(),
        -one.clone(),
        w7.clone(),
        -w6.clone(),
        -w6,
        -w7.clone(),
        -one.clone(),
        -w7,
        one,
    ]
}

pub fn fibonacci_t() -> Vec<CycNumber> {
    vec![CycNumber::one(20), z(20, 8), z(20, 8), z(20, -4), z(20, -4)]
}

/// First entry where the normalized r = 3 matrix differs from the reference one.
pub fn fibonacci_j_mismatch(nj: &NormalizedJ) -> Option<(usize, usize)> {
    for (i, row) in J3.iter().enumerate() {
        for (j, tok) in row.split_whitespace().enumerate() {
            let (sq, sign) = fib_entry(tok);
            let e = nj.get(i, j);
            if e.square().lift(20).ok()? != sq || e.sign() != sign {
                return Some((i, j));
            }
        }
    }
    None
}
