use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{cyclotomic_poly, CycNumber, CyclotomicModulus, ExactError, QPoly, Rational};

/// Σ_k c_k A^{low+k} with rational coefficients.
///
/// Canonical: no leading or trailing zero coefficients; the zero polynomial
/// has `low = 0` and no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn new(low: i64, coeffs: Vec<Rational>) -> Self {
        let mut p = Self { low, coeffs };
        p.canonicalize();
        p
    }

    fn canonicalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · A^e`.
    pub fn monomial(c: Rational, e: i64) -> Self {
        Self::new(e, vec![c])
    }

    /// From `(exponent, integer coefficient)` pairs.
    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(e, c)| {
            acc.add(&Self::monomial(Rational::from_integer(c.into()), e))
        })
    }

    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent, `None` for zero.
    pub fn high(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> Rational {
        let k = e - self.low;
        if k < 0 {
            return Rational::zero();
        }
        self.coeffs.get(k as usize).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().unwrap().max(other.high().unwrap());
        let coeffs = (low..=high).map(|e| self.coeff(e) + other.coeff(e)).collect();
        Self::new(low, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(self.low + other.low, out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplication by `A^e`.
    pub fn shift(&self, e: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Self {
            low: self.low + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// The bar involution A ↦ A⁻¹.
    pub fn bar(&self) -> Self {
        match self.high() {
            None => Self::zero(),
            Some(h) => Self::new(-h, self.coeffs.iter().rev().cloned().collect()),
        }
    }

    /// Ordinary polynomial after dividing out `A^low`; constant term nonzero.
    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(self.coeffs.clone())
    }

    /// Value at `A = ζ_N^k`.
    pub fn eval_root(&self, order: u32, k: i64) -> CycNumber {
        if self.is_zero() {
            return CycNumber::zero(order);
        }
        let modulus = CyclotomicModulus::get(order);
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut num = vec![BigInt::zero(); modulus.phi()];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let scaled = c.numer() * (&den / c.denom());
            for (t, &v) in modulus.power(k * (self.low + j as i64)).iter().enumerate() {
                if v != 0 {
                    num[t] += &scaled * v;
                }
            }
        }
        CycNumber::from_parts(order, num, den)
    }

    pub fn eval_complex(&self, a: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| a.powi((self.low + j as i64) as i32) * c.to_f64().unwrap_or(f64::NAN))
            .sum()
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + j as i64;
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                _ if c.is_one() => write!(f, "A^{e}")?,
                _ => write!(f, "{c}*A^{e}")?,
            }
        }
        Ok(())
    }
}

/// `num / den` in the fraction field of ℚ[A, A⁻¹].
///
/// Canonical: `den` monic with lowest exponent 0, `gcd(num, den) = 1` as
/// polynomials, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl LaurentFraction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let shift = num.low() - den.low();
        let (n, d) = (num.to_qpoly(), den.to_qpoly());
        let g = n.gcd(&d);
        let (n, d) = if g.degree() == Some(0) {
            (n, d)
        } else {
            (n.div_rem(&g).0, d.div_rem(&g).0)
        };
        let lc = d.leading().unwrap().recip();
        let (n, d) = (n.scale(&lc), d.scale(&lc));
        Ok(Self {
            num: LaurentPoly::new(shift, n.into_coeffs()),
            den: LaurentPoly::new(0, d.into_coeffs()),
        })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(Rational::from_integer(c.into())))
    }

    /// `c · A^e`.
    pub fn monomial(c: i64, e: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(Rational::from_integer(c.into()), e))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial this fraction equals, if its denominator is 1.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        (self.den == LaurentPoly::one()).then_some(&self.num)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone()).unwrap();
        }
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .unwrap()
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).unwrap()
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self, ExactError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok((0..e.unsigned_abs()).fold(Self::one(), |acc, _| acc.mul(&base)))
    }

    /// A ↦ A⁻¹.
    pub fn bar(&self) -> Self {
        Self::new(self.num.bar(), self.den.bar()).unwrap()
    }

    pub fn eval_complex(&self, a: Complex64) -> Complex64 {
        self.num.eval_complex(a) / self.den.eval_complex(a)
    }
}

impl fmt::Debug for LaurentFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Multiplicity of Φ_N as a factor of `p`, and the cofactor.
fn strip_cyclotomic(p: &QPoly, phi_n: &QPoly) -> (usize, QPoly) {
    let mut p = p.clone();
    let mut mult = 0;
    loop {
        if p.degree().unwrap_or(0) < phi_n.degree().unwrap() {
            return (mult, p);
        }
        let (q, r) = p.div_rem(phi_n);
        if !r.is_zero() {
            return (mult, p);
        }
        p = q;
        mult += 1;
    }
}

/// Evaluates `f` at `A = ζ_N^k`.
///
/// Numerator and denominator are treated as ordinary polynomials in `A`
/// (after clearing the monomial shift); the common power of Φ_N(A) is
/// cancelled there, and only then is each side reduced and divided in ℚ(ζ_N).
pub fn specialize(f: &LaurentFraction, order: u32, k: i64) -> Result<CycNumber, ExactError> {
    let n = order as i64;
    if super::gcd_i64(k, n) != 1 {
        return Err(ExactError::Parse(format!("root exponent {k} not coprime to {n}")));
    }
    if f.is_zero() {
        return Ok(CycNumber::zero(order));
    }
    let phi_n = QPoly::from_int(&cyclotomic_poly(order as u64));
    let (mn, num_c) = strip_cyclotomic(&f.num().to_qpoly(), &phi_n);
    let (md, den_c) = strip_cyclotomic(&f.den().to_qpoly(), &phi_n);
    if md > mn {
        return Err(ExactError::PoleAtRoot);
    }
    if mn > md {
        return Ok(CycNumber::zero(order));
    }
    let num = LaurentPoly::new(f.num().low(), num_c.into_coeffs()).eval_root(order, k);
    let den = LaurentPoly::new(f.den().low(), den_c.into_coeffs()).eval_root(order, k);
    if den.is_zero() {
        return Err(ExactError::PoleAtRoot);
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms)
    }

    #[test]
    fn canonical_form_cancels_common_factors() {
        // (A⁴ − 1)/(A² − 1) = A² + 1
        let f = LaurentFraction::new(lp(&[(4, 1), (0, -1)]), lp(&[(2, 1), (0, -1)])).unwrap();
        assert_eq!(f, LaurentFraction::from_poly(lp(&[(2, 1), (0, 1)])));
        // (A² − A⁻²)/(A² − A⁻²) = 1
        let g = lp(&[(2, 1), (-2, -1)]);
        let one = LaurentFraction::new(g.clone(), g).unwrap();
        assert_eq!(one, LaurentFraction::one());
        assert_eq!(specialize(&one, 20, 1).unwrap(), CycNumber::one(20));
    }

    #[test]
    fn zero_denominator_is_rejected() {
        let a_minus_a = lp(&[(1, 1)]).sub(&lp(&[(1, 1)]));
        assert_eq!(
            LaurentFraction::new(LaurentPoly::one(), a_minus_a),
            Err(ExactError::ZeroDenominator)
        );
    }

    #[test]
    fn pole_at_root_is_detected() {
        // 1/(A⁴ + 1) has a pole at any primitive 8th root
        let f = LaurentFraction::new(LaurentPoly::one(), lp(&[(4, 1), (0, 1)])).unwrap();
        assert_eq!(specialize(&f, 8, 1), Err(ExactError::PoleAtRoot));
        assert!(specialize(&f, 16, 1).is_ok());
    }

    #[test]
    fn bar_is_an_involution() {
        let f = LaurentFraction::new(lp(&[(3, 2), (-1, 1)]), lp(&[(2, 1), (0, 3), (-5, 1)])).unwrap();
        assert_eq!(f.bar().bar(), f);
        assert_ne!(f.bar(), f);
    }
}
