use std::fmt;

use num_bigint::BigInt;

use super::{gcd_i64, CycNumber, ExactError, ExactMatrix, QPoly, Rational};

/// Univariate polynomial over ℚ(ζ_N), constant term first, trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycPoly {
    order: u32,
    coeffs: Vec<CycNumber>,
}

impl CycPoly {
    pub fn new(order: u32, mut coeffs: Vec<CycNumber>) -> Self {
        while coeffs.last().is_some_and(CycNumber::is_zero) {
            coeffs.pop();
        }
        Self { order, coeffs }
    }

    pub fn from_qpoly(order: u32, p: &QPoly) -> Self {
        Self::new(
            order,
            p.coeffs()
                .iter()
                .map(|c| CycNumber::from_rational(order, c))
                .collect(),
        )
    }

    /// Product of the linear factors `x − r`.
    pub fn from_roots(order: u32, roots: &[CycNumber]) -> Self {
        roots.iter().fold(Self::one(order), |acc, r| {
            acc.mul(&Self::new(order, vec![-r, CycNumber::one(order)]))
        })
    }

    pub fn one(order: u32) -> Self {
        Self::new(order, vec![CycNumber::one(order)])
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[CycNumber] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(CycNumber::is_one)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(self.order, Vec::new());
        }
        let mut out = vec![CycNumber::zero(self.order); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(self.order, out)
    }

    pub fn galois(&self, a: i64) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|c| c.galois(a)).collect())
    }

    pub fn eval(&self, x: &CycNumber) -> CycNumber {
        self.coeffs
            .iter()
            .rev()
            .fold(CycNumber::zero(self.order), |acc, c| &(&acc * x) + c)
    }

    /// Division by a monic polynomial.
    pub fn div_rem_monic(&self, divisor: &Self) -> Result<(Self, Self), ExactError> {
        if !divisor.is_monic() {
            return Err(ExactError::NonMonic);
        }
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::new(self.order, Vec::new()), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![CycNumber::zero(self.order); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let c = rem[k].clone();
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] = &rem[k - dd + j] - &(&c * dc);
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(self.order, quot), Self::new(self.order, rem)))
    }

    pub fn divides(&self, divisor: &Self) -> Result<bool, ExactError> {
        Ok(self.div_rem_monic(divisor)?.1.is_zero())
    }

    /// Scaled to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lead) => {
                let inv = lead.inv().expect("leading coefficient is nonzero");
                Self::new(self.order, self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Monic greatest common divisor over ℚ(ζ_N).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.div_rem_monic(&b).expect("monic divisor").1;
            a = b;
            b = r.monic();
        }
        a
    }

    /// Coefficients as rationals, when all lie in ℚ.
    pub fn to_qpoly(&self) -> Option<QPoly> {
        self.coeffs
            .iter()
            .map(CycNumber::as_rational)
            .collect::<Option<Vec<Rational>>>()
            .map(QPoly::new)
    }

    /// The field norm ∏_σ σ(self) over all automorphisms of ℚ(ζ_N): a polynomial over ℚ
    /// whose roots are every Galois conjugate of every root of `self`.
    pub fn norm(&self) -> QPoly {
        let n = self.order as i64;
        let prod = (1..=n.max(1))
            .filter(|&a| gcd_i64(a, n) == 1)
            .fold(Self::one(self.order), |acc, a| acc.mul(&self.galois(a)));
        prod.to_qpoly().expect("norm of a polynomial is rational")
    }
}

/// `det(x·I − M)` by the Faddeev–LeVerrier recursion (divisions only by integers).
pub fn char_poly(m: &ExactMatrix) -> Result<CycPoly, ExactError> {
    if !m.is_square() {
        return Err(ExactError::Shape("characteristic polynomial of a non-square matrix".into()));
    }
    let order = m.order();
    let n = m.rows();
    let mut coeffs = vec![CycNumber::zero(order); n + 1];
    coeffs[n] = CycNumber::one(order);
    let mut mk = ExactMatrix::zeros(order, n, n);
    for k in 1..=n {
        let shift = ExactMatrix::scalar(&coeffs[n - k + 1], n);
        mk = m.mul(&mk)?.add(&shift)?;
        let t = m.mul(&mk)?.trace();
        coeffs[n - k] = -t.scale(&Rational::new(BigInt::from(1), BigInt::from(k)));
    }
    Ok(CycPoly::new(order, coeffs))
}

impl fmt::Display for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_char_poly_x_minus_one_squared() {
        let p = char_poly(&ExactMatrix::identity(20, 2)).unwrap();
        let one = CycNumber::one(20);
        assert_eq!(p, CycPoly::from_roots(20, &[one.clone(), one]));
    }

    #[test]
    fn diagonal_char_poly_is_product_of_linear_factors() {
        let d: Vec<CycNumber> = (0..4).map(|k| CycNumber::zeta_pow(20, 3 * k + 1)).collect();
        let p = char_poly(&ExactMatrix::diagonal(20, &d)).unwrap();
        assert_eq!(p, CycPoly::from_roots(20, &d));
        for r in &d {
            assert!(p.eval(r).is_zero());
        }
    }

    #[test]
    fn norm_of_linear_factor_is_cyclotomic() {
        // x − ζ5 over ℚ(ζ5) has norm Φ5
        let p = CycPoly::new(5, vec![-CycNumber::zeta_pow(5, 1), CycNumber::one(5)]);
        let nrm = p.norm().to_int().unwrap();
        assert_eq!(nrm, crate::exactnum::cyclotomic_poly(5));
    }
}
