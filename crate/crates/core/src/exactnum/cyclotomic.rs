//! Cyclotomic polynomials, Euler's totient, and the per-order reduction
//! tables shared by every [`CycNumber`](super::CycNumber) of that order.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{ExactError, IntPolynomial};

pub fn euler_phi(n: u64) -> u64 {
    assert!(n >= 1, "totient of zero");
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn poly_cache() -> &'static RwLock<HashMap<u64, IntPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, IntPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `n`-th cyclotomic polynomial Φ_n.
///
/// Computed as `(x^n − 1) / ∏_{d | n, d < n} Φ_d` and memoized.
pub fn cyclotomic_poly(n: u64) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = poly_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let mut p = IntPolynomial::monomial(n as usize).sub(&IntPolynomial::one());
    for d in divisors(n) {
        if d < n {
            p = p
                .div_exact_monic(&cyclotomic_poly(d))
                .expect("Φ_d divides x^n - 1");
        }
    }
    poly_cache().write().unwrap().insert(n, p.clone());
    p
}

/// All `n` with φ(n) = `d`. Uses φ(n) ≥ √(n/2), so `n ≤ 2d²`.
pub fn totient_preimages(d: u64) -> Vec<u64> {
    if d == 0 {
        return Vec::new();
    }
    let bound = 2 * d * d + 2;
    (1..=bound).filter(|&n| euler_phi(n) == d).collect()
}

/// Returns the index `n` with `p = Φ_n`, if any.
pub fn cyclotomic_index(p: &IntPolynomial) -> Result<Option<u64>, ExactError> {
    if !p.is_monic() {
        return Err(ExactError::NonMonic);
    }
    let d = p.degree().unwrap_or(0) as u64;
    if d == 0 {
        return Ok(None);
    }
    Ok(totient_preimages(d)
        .into_iter()
        .find(|&n| &cyclotomic_poly(n) == p))
}

/// True iff the monic integer polynomial `p` equals some Φ_n.
pub fn is_cyclotomic(p: &IntPolynomial) -> Result<bool, ExactError> {
    cyclotomic_index(p).map(|n| n.is_some())
}

/// Reduction data for ℚ(ζ_N) in the power basis ζ⁰…ζ^{φ(N)−1}.
#[derive(Debug)]
pub struct CyclotomicModulus {
    order: u32,
    phi: usize,
    /// Coefficients of Φ_N below the leading 1.
    lower: Vec<i64>,
    /// `powers[m]` = ζ^m reduced, for 0 ≤ m < N.
    powers: Vec<Vec<i64>>,
}

impl CyclotomicModulus {
    fn build(order: u32) -> Self {
        let phi_poly = cyclotomic_poly(order as u64);
        let phi = phi_poly.degree().unwrap();
        let lower: Vec<i64> = phi_poly.coeffs()[..phi]
            .iter()
            .map(|c| c.to_i64().expect("cyclotomic coefficient fits in i64"))
            .collect();
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..order {
            powers.push(cur.clone());
            // multiply by ζ
            let top = cur[phi - 1];
            for j in (1..phi).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..phi {
                    cur[j] -= top * lower[j];
                }
            }
        }
        Self {
            order,
            phi,
            lower,
            powers,
        }
    }

    pub fn get(order: u32) -> Arc<Self> {
        static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CyclotomicModulus>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(m) = cache.read().unwrap().get(&order) {
            return m.clone();
        }
        let m = Arc::new(Self::build(order));
        cache.write().unwrap().entry(order).or_insert(m).clone()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn phi(&self) -> usize {
        self.phi
    }

    pub fn lower(&self) -> &[i64] {
        &self.lower
    }

    /// ζ^m in the power basis, for any integer `m`.
    pub fn power(&self, m: i64) -> &[i64] {
        let n = self.order as i64;
        &self.powers[m.rem_euclid(n) as usize]
    }

    /// Reduces a coefficient vector of any length modulo Φ_N, in place.
    pub fn reduce_big(&self, v: &mut Vec<BigInt>) {
        let phi = self.phi;
        for k in (phi..v.len()).rev() {
            if v[k].sign() == num_bigint::Sign::NoSign {
                continue;
            }
            let c = std::mem::take(&mut v[k]);
            for j in 0..phi {
                let a = self.lower[j];
                if a != 0 {
                    v[k - phi + j] -= &c * a;
                }
            }
        }
        v.resize(phi, BigInt::from(0));
    }

    /// Reduces in place using checked `i128`; `false` on overflow (contents then unspecified).
    pub fn reduce_i128(&self, v: &mut [i128]) -> bool {
        let phi = self.phi;
        for k in (phi..v.len()).rev() {
            let c = v[k];
            if c == 0 {
                continue;
            }
            v[k] = 0;
            for j in 0..phi {
                let a = self.lower[j] as i128;
                if a != 0 {
                    match c.checked_mul(a).and_then(|t| v[k - phi + j].checked_sub(t)) {
                        Some(x) => v[k - phi + j] = x,
                        None => return false,
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), IntPolynomial::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic_poly(4), IntPolynomial::from_i64s(&[1, 0, 1]));
        // divide x^20 - 1 by Φ_d over the proper divisors of 20: 1 - x^2 + x^4 - x^6 + x^8
        assert_eq!(
            cyclotomic_poly(20),
            IntPolynomial::from_i64s(&[1, 0, -1, 0, 1, 0, -1, 0, 1])
        );
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=40u64 {
            let prod = divisors(n)
                .into_iter()
                .fold(IntPolynomial::one(), |acc, d| acc.mul(&cyclotomic_poly(d)));
            let target = IntPolynomial::monomial(n as usize).sub(&IntPolynomial::one());
            assert_eq!(prod, target, "n = {n}");
            assert_eq!(cyclotomic_poly(n).degree().unwrap() as u64, euler_phi(n));
            assert!(target.div_exact_monic(&cyclotomic_poly(n)).is_some());
        }
    }

    #[test]
    fn recognizes_cyclotomic_and_rejects_the_quartic() {
        assert!(is_cyclotomic(&IntPolynomial::from_i64s(&[1, 1, 1])).unwrap());
        assert!(is_cyclotomic(&IntPolynomial::from_i64s(&[-1, 1])).unwrap());
        assert!(!is_cyclotomic(&IntPolynomial::from_i64s(&[1, -3, 3, -3, 1])).unwrap());
        assert_eq!(
            cyclotomic_index(&IntPolynomial::from_i64s(&[1, -1, 1])).unwrap(),
            Some(6)
        );
    }

    #[test]
    fn non_monic_input_is_an_error() {
        assert!(matches!(
            is_cyclotomic(&IntPolynomial::from_i64s(&[1, 2])),
            Err(ExactError::NonMonic)
        ));
    }

    #[test]
    fn power_table_wraps_around() {
        let m = CyclotomicModulus::get(20);
        assert_eq!(m.power(20), m.power(0));
        assert_eq!(m.power(-1), m.power(19));
        // ζ^19 = −ζ^9 in ℚ(ζ20)... expressed in the degree-8 basis
        let mut expect = [0i64; 8];
        // ζ^10 = −1, so ζ^19 = −ζ^9 = −ζ·ζ^8 = −ζ(ζ^6 − ζ^4 + ζ^2 − 1) = −ζ^7 + ζ^5 − ζ^3 + ζ
        expect[1] = 1;
        expect[3] = -1;
        expect[5] = 1;
        expect[7] = -1;
        assert_eq!(m.power(19), &expect[..]);
    }
}
