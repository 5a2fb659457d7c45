//! Reference Ising and Fibonacci genus-2 matrices, compared exactly.

mod common;

use common::{fibonacci_j_mismatch, fibonacci_t, ising_j, ising_t, normalized, q};
use tqft_hecke::exactnum::CycNumber;
use tqft_hecke::recoupling::TheoryParams;
use tqft_hecke::rep_genus2::Genus2Rep;

#[test]
fn ising_j_exact() {
    let rep = Genus2Rep::new(TheoryParams::unitary(2).unwrap()).unwrap();
    assert_eq!((rep.params.order(), rep.params.root()), (16, 5));
    let got = normalized(&rep).to_exact().expect("every Ising entry lies in Q(zeta_16)");
    assert_eq!(got, ising_j());
}

#[test]
fn ising_t_exact() {
    let rep = Genus2Rep::new(TheoryParams::unitary(2).unwrap()).unwrap();
    assert_eq!(rep.twist(), ising_t());
}

#[test]
fn fibonacci_j_squares_and_signs() {
    let rep = Genus2Rep::new(TheoryParams::unitary(3).unwrap()).unwrap();
    assert_eq!(fibonacci_j_mismatch(normalized(&rep)), None);
}

#[test]
fn fibonacci_t_exact() {
    let rep = Genus2Rep::new(TheoryParams::unitary(3).unwrap()).unwrap();
    let got: Vec<CycNumber> = rep.twist().iter().map(|x| x.lift(20).unwrap()).collect();
    assert_eq!(got, fibonacci_t());
}

#[test]
fn fibonacci_first_row_law() {
    let rep = Genus2Rep::new(TheoryParams::unitary(3).unwrap()).unwrap();
    let e = normalized(&rep).get(0, 1);
    assert_eq!(e.square(), CycNumber::from_rational(10, &q(1, 5)));
    assert_eq!(e.sign(), 1);
}
