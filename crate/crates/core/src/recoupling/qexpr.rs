//! Factored elements of ℚ(A): finite sums of `c · A^a · ∏ [n]^{e_n}`.
//!
//! Every recoupling coefficient is a short sum of such terms, and in this
//! form the order of vanishing of each term at a root of unity can be read
//! off directly: Φ_N(A) divides `[n]` exactly once when `N | 4n`.

use std::collections::BTreeMap;

use crate::exactnum::{specialize, CycNumber, ExactError, LaurentFraction, LaurentPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QTerm {
    pub coeff: i64,
    pub a_pow: i64,
    /// `n ↦ e` for the factor `[n]^e`; `n ≥ 1`, `e ≠ 0`.
    pub factors: BTreeMap<u32, i32>,
}

impl QTerm {
    fn key(&self) -> (i64, &BTreeMap<u32, i32>) {
        (self.a_pow, &self.factors)
    }

    fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&n, &e) in &other.factors {
            let slot = factors.entry(n).or_insert(0);
            *slot += e;
            if *slot == 0 {
                factors.remove(&n);
            }
        }
        Self {
            coeff: self.coeff * other.coeff,
            a_pow: self.a_pow + other.a_pow,
            factors,
        }
    }

    /// Net multiplicity of Φ_N(A) in this term.
    pub fn phi_order(&self, order: u32) -> i32 {
        if order <= 4 {
            return 0;
        }
        self.factors
            .iter()
            .filter(|(&n, _)| (4 * n as u64).is_multiple_of(order as u64))
            .map(|(_, &e)| e)
            .sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct QExpr {
    terms: Vec<QTerm>,
}

impl QExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · A^a`.
    pub fn monomial(c: i64, a: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        Self {
            terms: vec![QTerm {
                coeff: c,
                a_pow: a,
                factors: BTreeMap::new(),
            }],
        }
    }

    /// `±[n]`, with `[0] = 0` and `[−n] = −[n]`.
    pub fn qint(n: i64) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let mut t = Self::monomial(n.signum(), 0);
        t.terms[0].factors.insert(n.unsigned_abs() as u32, 1);
        t
    }

    /// `[n]!^e`.
    pub fn qfact_pow(n: u32, e: i32) -> Self {
        let mut t = Self::one();
        if e != 0 {
            for k in 2..=n {
                t.terms[0].factors.insert(k, e);
            }
        }
        t
    }

    pub fn terms(&self) -> &[QTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn push_merge(&mut self, t: QTerm) {
        if t.coeff == 0 {
            return;
        }
        if let Some(pos) = self.terms.iter().position(|s| s.key() == t.key()) {
            self.terms[pos].coeff += t.coeff;
            if self.terms[pos].coeff == 0 {
                self.terms.remove(pos);
            }
        } else {
            self.terms.push(t);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for t in &other.terms {
            out.push_merge(t.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for t in &self.terms {
            out.push_merge(QTerm {
                coeff: t.coeff * c,
                ..t.clone()
            });
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.push_merge(a.mul(b));
            }
        }
        out
    }

    /// Inverse of a single nonzero term with coefficient ±1.
    pub fn inv_monomial(&self) -> Result<Self, ExactError> {
        match self.terms.as_slice() {
            [t] if t.coeff.abs() == 1 => Ok(Self {
                terms: vec![QTerm {
                    coeff: t.coeff,
                    a_pow: -t.a_pow,
                    factors: t.factors.iter().map(|(&n, &e)| (n, -e)).collect(),
                }],
            }),
            [] => Err(ExactError::DivisionByZero),
            _ => Err(ExactError::Parse("only single unit terms are invertible here".into())),
        }
    }

    /// A ↦ A⁻¹; each `[n]` is invariant.
    pub fn bar(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|t| QTerm {
                    a_pow: -t.a_pow,
                    ..t.clone()
                })
                .collect(),
        }
    }

    /// Expands into the canonical fraction field element.
    pub fn to_fraction(&self) -> LaurentFraction {
        let mut total = LaurentFraction::zero();
        for t in &self.terms {
            let mut num = LaurentPoly::monomial(Rational::from_integer(t.coeff.into()), t.a_pow);
            let mut den = LaurentPoly::one();
            for (&n, &e) in &t.factors {
                let q = qint_poly(n).pow(e.unsigned_abs());
                if e > 0 {
                    num = num.mul(&q);
                } else {
                    den = den.mul(&q);
                }
            }
            total = total.add(&LaurentFraction::new(num, den).expect("[n] is never zero"));
        }
        total
    }

    /// Value at `A = ζ_N^k`, given `qvals[n]` = `[n]` there and its inverse.
    ///
    /// Terms with a net zero of Φ_N are dropped, terms with net order zero are
    /// evaluated factor by factor. A net pole in any term sends the whole sum
    /// through the canonical fraction and [`specialize`].
    pub fn specialize_with(
        &self,
        order: u32,
        k: i64,
        qvals: &dyn Fn(u32) -> (CycNumber, Option<CycNumber>),
    ) -> Result<CycNumber, ExactError> {
        if self.terms.iter().any(|t| t.phi_order(order) < 0) {
            return specialize(&self.to_fraction(), order, k);
        }
        let mut total = CycNumber::zero(order);
        for t in &self.terms {
            if t.phi_order(order) > 0 {
                continue;
            }
            let mut v = CycNumber::zeta_pow(order, k * t.a_pow).scale_i64(t.coeff);
            for (&n, &e) in &t.factors {
                let (q, qinv) = qvals(n);
                let base = if e > 0 {
                    q
                } else {
                    qinv.ok_or(ExactError::PoleAtRoot)?
                };
                v = &v * &base.pow(e.unsigned_abs() as u64);
            }
            total = &total + &v;
        }
        Ok(total)
    }
}

/// `[n] = A^{2(n−1)} + A^{2(n−3)} + … + A^{−2(n−1)}` for `n ≥ 1`.
pub fn qint_poly(n: u32) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let n = n as i64;
    let terms: Vec<(i64, i64)> = (0..n).map(|j| (2 * (n - 1) - 4 * j, 1)).collect();
    LaurentPoly::from_terms(&terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_polynomials() {
        assert_eq!(qint_poly(1), LaurentPoly::one());
        assert_eq!(qint_poly(2), LaurentPoly::from_terms(&[(2, 1), (-2, 1)]));
        assert_eq!(QExpr::qint(-3).to_fraction(), QExpr::qint(3).to_fraction().neg());
    }

    #[test]
    fn fraction_route_matches_factored_route() {
        // [5]·[3] / [2]² − A³[4] at a primitive 20th root
        let e = QExpr::qint(5)
            .mul(&QExpr::qint(3))
            .mul(&QExpr::qfact_pow(2, -2))
            .add(&QExpr::monomial(-1, 3).mul(&QExpr::qint(4)));
        let qvals = |n: u32| {
            let v = qint_poly(n).eval_root(20, 3);
            let inv = v.inv().ok();
            (v, inv)
        };
        let a = e.specialize_with(20, 3, &qvals).unwrap();
        let b = specialize(&e.to_fraction(), 20, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn vanishing_factor_is_detected() {
        // N = 20: [5] vanishes since 20 | 4·5
        let t = QExpr::qint(5);
        assert_eq!(t.terms()[0].phi_order(20), 1);
        assert!(qint_poly(5).eval_root(20, 1).is_zero());
    }
}
