//! Exact arithmetic: ℚ, Laurent polynomials in `A` and their fractions,
//! cyclotomic fields ℚ(ζ_N), dense matrices over them, and the polynomial
//! tools needed for minimal-polynomial certificates.

mod cycnum;
mod cycpoly;
mod cyclotomic;
mod intpoly;
mod laurent;
mod matrix;
mod qpoly;
pub mod serial;

pub use cycnum::{galois_conj_inv, CycNumber};
pub use cycpoly::{char_poly, CycPoly};
pub use cyclotomic::{
    cyclotomic_index, cyclotomic_poly, divisors, euler_phi, is_cyclotomic, totient_preimages,
    CyclotomicModulus,
};
pub use intpoly::IntPolynomial;
pub use laurent::{specialize, LaurentFraction, LaurentPoly};
pub use matrix::ExactMatrix;
pub use qpoly::QPoly;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("fraction has a pole at the chosen root of unity")]
    PoleAtRoot,
    #[error("polynomial is not monic")]
    NonMonic,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic orders differ: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

/// `gcd(a, b)` on signed machine integers, always nonnegative.
pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}
