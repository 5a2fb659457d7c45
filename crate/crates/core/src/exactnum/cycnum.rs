use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{cyclotomic_poly, gcd_i64, CyclotomicModulus, ExactError, QPoly, Rational};

/// An element of ℚ(ζ_N), stored as `num / den` with `num` an integer vector
/// in the power basis ζ⁰…ζ^{φ(N)−1}.
///
/// Canonical: `den > 0`, `gcd(content(num), den) = 1`, and zero has `den = 1`.
#[derive(Clone)]
pub struct CycNumber {
    modulus: Arc<CyclotomicModulus>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNumber {
    /// Builds from a rational coefficient vector of any length; reduces modulo Φ_N.
    pub fn new(order: u32, coeffs: &[Rational]) -> Self {
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::from_parts(order, num, den)
    }

    /// Builds from integer numerators over one denominator; reduces and normalizes.
    pub fn from_parts(order: u32, mut num: Vec<BigInt>, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let modulus = CyclotomicModulus::get(order);
        if num.len() > modulus.phi() {
            modulus.reduce_big(&mut num);
        } else {
            num.resize(modulus.phi(), BigInt::zero());
        }
        let mut x = Self { modulus, num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    pub fn zero(order: u32) -> Self {
        Self::from_parts(order, Vec::new(), BigInt::one())
    }

    pub fn one(order: u32) -> Self {
        Self::from_i64(order, 1)
    }

    pub fn from_i64(order: u32, v: i64) -> Self {
        Self::from_parts(order, vec![BigInt::from(v)], BigInt::one())
    }

    pub fn from_rational(order: u32, q: &Rational) -> Self {
        Self::from_parts(order, vec![q.numer().clone()], q.denom().clone())
    }

    /// ζ_N^m for any integer `m`.
    pub fn zeta_pow(order: u32, m: i64) -> Self {
        let modulus = CyclotomicModulus::get(order);
        let num = modulus.power(m).iter().map(|&c| BigInt::from(c)).collect();
        Self::from_parts(order, num, BigInt::one())
    }

    pub fn order(&self) -> u32 {
        self.modulus.order()
    }

    pub fn phi(&self) -> usize {
        self.modulus.phi()
    }

    pub fn modulus(&self) -> &Arc<CyclotomicModulus> {
        &self.modulus
    }

    /// Power-basis coefficients as rationals.
    pub fn coeffs(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, when the element lies in ℚ.
    pub fn as_rational(&self) -> Option<Rational> {
        self.num[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| Rational::new(self.num[0].clone(), self.den.clone()))
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(
            self.order(),
            other.order(),
            "mixing elements of different cyclotomic fields"
        );
    }

    /// Numerators as `i64` when small enough that φ products cannot overflow `i128`.
    fn small_num(&self) -> Option<Vec<i64>> {
        self.num
            .iter()
            .map(|c| if c.bits() <= 60 { c.to_i64() } else { None })
            .collect()
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.check_order(other);
        if self.den == other.den {
            let num = self.num.iter().zip(&other.num).map(|(a, b)| a + b).collect();
            return Self::from_parts(self.order(), num, self.den.clone());
        }
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &other.den + b * &self.den)
            .collect();
        Self::from_parts(self.order(), num, &self.den * &other.den)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.check_order(other);
        let phi = self.phi();
        if let (Some(a), Some(b)) = (self.small_num(), other.small_num()) {
            let mut prod = vec![0i128; 2 * phi - 1];
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] += x as i128 * y as i128;
                }
            }
            if self.modulus.reduce_i128(&mut prod) {
                let num = prod[..phi].iter().map(|&c| BigInt::from(c)).collect();
                return Self::from_parts(self.order(), num, &self.den * &other.den);
            }
        }
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in self.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Self::from_parts(self.order(), prod, &self.den * &other.den)
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        let num = self.num.iter().map(|x| x * c).collect();
        Self::from_parts(self.order(), num, self.den.clone())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let num = self.num.iter().map(|x| x * q.numer()).collect();
        Self::from_parts(self.order(), num, &self.den * q.denom())
    }

    /// Multiplicative inverse via extended Euclid against Φ_N.
    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_rational(self.order(), &q.recip()));
        }
        let phi_poly = QPoly::from_int(&cyclotomic_poly(self.order() as u64));
        let a = QPoly::new(
            self.num
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        );
        let (g, s, _) = a.xgcd(&phi_poly);
        debug_assert!(g.is_monic() && g.degree() == Some(0));
        Ok(Self::new(self.order(), s.coeffs()).scale(&Rational::from_integer(self.den.clone())))
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn powi(&self, e: i64) -> Result<Self, ExactError> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inv()?.pow(e.unsigned_abs()))
        }
    }

    /// The automorphism ζ ↦ ζ^a. Panics unless `gcd(a, N) = 1`.
    pub fn galois(&self, a: i64) -> Self {
        let n = self.order() as i64;
        assert_eq!(gcd_i64(a, n), 1, "Galois exponent {a} not coprime to {n}");
        let phi = self.phi();
        let mut out = vec![BigInt::zero(); phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let img = self.modulus.power(a * j as i64);
            for (t, &v) in img.iter().enumerate() {
                if v != 0 {
                    out[t] += c * v;
                }
            }
        }
        Self::from_parts(self.order(), out, self.den.clone())
    }

    /// ζ ↦ ζ⁻¹, complex conjugation under the standard embedding.
    pub fn conj_inv(&self) -> Self {
        self.galois(-1)
    }

    pub fn is_real(&self) -> bool {
        self.conj_inv() == *self
    }

    /// Re-expresses this element in ℚ(ζ_M) for a multiple `M` of `N`.
    pub fn lift(&self, new_order: u32) -> Result<Self, ExactError> {
        let n = self.order();
        if !new_order.is_multiple_of(n) {
            return Err(ExactError::OrderMismatch(n, new_order));
        }
        let step = (new_order / n) as i64;
        let target = CyclotomicModulus::get(new_order);
        let mut out = vec![BigInt::zero(); target.phi()];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, &v) in target.power(step * j as i64).iter().enumerate() {
                if v != 0 {
                    out[t] += c * v;
                }
            }
        }
        Ok(Self::from_parts(new_order, out, self.den.clone()))
    }

    /// Value at ζ_N = e^{2πi/N}.
    pub fn embed(&self) -> Complex64 {
        let n = self.order() as f64;
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coef = if den.is_finite() {
                c.to_f64().unwrap_or(f64::NAN) / den
            } else {
                Rational::new(c.clone(), self.den.clone())
                    .to_f64()
                    .unwrap_or(f64::NAN)
            };
            let angle = std::f64::consts::TAU * j as f64 / n;
            acc += Complex64::from_polar(coef, angle);
        }
        acc
    }

    /// [`embed`](Self::embed) rounded to `precision` decimal digits (capped at 15).
    pub fn embed_digits(&self, precision: u32) -> Complex64 {
        let scale = 10f64.powi(precision.clamp(1, 15) as i32);
        let z = self.embed();
        Complex64::new((z.re * scale).round() / scale, (z.im * scale).round() / scale)
    }

    /// Sign of the real part of the embedding: −1, 0 or 1. Exact zero gives 0.
    pub fn real_sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        let re = self.embed().re;
        if re > 0.0 {
            1
        } else if re < 0.0 {
            -1
        } else {
            0
        }
    }

    /// A square root inside ℚ(ζ_N), normalized to have nonnegative real part
    /// (or positive imaginary part when the real part vanishes).
    ///
    /// Floats locate the candidate among the 2^{φ/2} sign patterns of the
    /// Galois conjugates; the result is then checked exactly.
    pub fn try_sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        let order = self.order();
        // t = den² · x has integer coefficients and an integral square root iff x has one.
        let t: Vec<BigInt> = self.num.iter().map(|c| c * &self.den).collect();
        let t_elem = Self::from_parts(order, t.clone(), BigInt::one());
        let phi = self.phi();
        let n = order as i64;
        let units: Vec<i64> = (1..=n.max(1)).filter(|&a| gcd_i64(a, n) == 1).collect();
        let units: Vec<i64> = if n <= 2 { vec![1] } else { units };
        let reps: Vec<i64> = units.iter().copied().filter(|&a| 2 * a < n || n <= 2).collect();
        let conj_roots: Vec<Complex64> = reps
            .iter()
            .map(|&a| t_elem.galois(a).embed().sqrt())
            .collect();
        let vinv = invert_complex(&vandermonde(&units, phi, n))?;
        let patterns = 1u64 << reps.len().saturating_sub(1);
        for pat in 0..patterns {
            let mut values = vec![Complex64::new(0.0, 0.0); units.len()];
            for (ri, &a) in reps.iter().enumerate() {
                let sign = if ri > 0 && (pat >> (ri - 1)) & 1 == 1 { -1.0 } else { 1.0 };
                let v = conj_roots[ri] * sign;
                let pos = units.iter().position(|&u| u == a).unwrap();
                values[pos] = v;
                if n > 2 {
                    let pos_c = units.iter().position(|&u| u == n - a).unwrap();
                    values[pos_c] = v.conj();
                }
            }
            let mut cand = Vec::with_capacity(phi);
            let mut ok = true;
            for row in &vinv {
                let c: Complex64 = row.iter().zip(&values).map(|(m, v)| m * v).sum();
                let r = c.re.round();
                if (c.re - r).abs() > 1e-3 || c.im.abs() > 1e-3 || !r.is_finite() {
                    ok = false;
                    break;
                }
                cand.push(BigInt::from(r as i128));
            }
            if !ok {
                continue;
            }
            let z = Self::from_parts(order, cand, BigInt::one());
            if &z * &z == t_elem {
                let y = Self::from_parts(order, z.num.clone(), self.den.clone());
                let e = y.embed();
                let flip = e.re < -1e-12 || (e.re.abs() <= 1e-12 && e.im < 0.0);
                return Some(if flip { -y } else { y });
            }
        }
        None
    }
}

fn vandermonde(units: &[i64], phi: usize, n: i64) -> Vec<Vec<Complex64>> {
    units
        .iter()
        .map(|&a| {
            (0..phi)
                .map(|j| {
                    let ang = std::f64::consts::TAU * ((a * j as i64).rem_euclid(n.max(1))) as f64
                        / n.max(1) as f64;
                    Complex64::from_polar(1.0, ang)
                })
                .collect()
        })
        .collect()
}

/// Gauss–Jordan inverse with partial pivoting; `None` if singular.
fn invert_complex(m: &[Vec<Complex64>]) -> Option<Vec<Vec<Complex64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Complex64>> = m.to_vec();
    let mut inv: Vec<Vec<Complex64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0))
                .collect()
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm()))?;
        if a[piv][col].norm() < 1e-12 {
            return None;
        }
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for i in 0..n {
            if i != col {
                let f = a[i][col];
                if f.norm() != 0.0 {
                    for j in 0..n {
                        let (ac, ic) = (a[col][j], inv[col][j]);
                        a[i][j] -= f * ac;
                        inv[i][j] -= f * ic;
                    }
                }
            }
        }
    }
    Some(inv)
}

/// ζ ↦ ζ⁻¹ applied to `x`.
pub fn galois_conj_inv(x: &CycNumber) -> CycNumber {
    x.conj_inv()
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycNumber {}

impl Hash for CycNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order().hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNumber[{}]({})", self.order(), self)
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{j}")?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&CycNumber> for &CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: &CycNumber) -> CycNumber {
                let f: fn(&CycNumber, &CycNumber) -> CycNumber = $body;
                f(self, rhs)
            }
        }
        impl $tr<CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: CycNumber) -> CycNumber {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&CycNumber> for CycNumber {
            type Output = CycNumber;
            fn $m(self, rhs: &CycNumber) -> CycNumber {
                (&self).$m(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_ref(b));
forward_binop!(Sub, sub, |a, b| a.add_ref(&-b));
forward_binop!(Mul, mul, |a, b| a.mul_ref(b));
forward_binop!(Div, div, |a, b| a.mul_ref(&b.inv().expect("division by zero in ℚ(ζ)")));

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            modulus: self.modulus.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

impl std::iter::Sum for CycNumber {
    fn sum<I: Iterator<Item = CycNumber>>(mut iter: I) -> CycNumber {
        let first = iter.next().expect("sum of an empty CycNumber iterator");
        iter.fold(first, |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn sqrt5(order: u32) -> CycNumber {
        // √5 = 1 + 2(ζ5 + ζ5⁴) expressed through ζ_order with 5 | order
        let step = order as i64 / 5;
        let s = CycNumber::zeta_pow(order, step) + CycNumber::zeta_pow(order, 4 * step);
        CycNumber::one(order) + s.scale_i64(2)
    }

    #[test]
    fn inverse_of_zeta_is_reduced_power() {
        let z = CycNumber::zeta_pow(20, 1);
        let zi = z.inv().unwrap();
        assert_eq!(zi, CycNumber::zeta_pow(20, 19));
        assert_eq!(galois_conj_inv(&z), zi);
        assert_eq!(zi, -CycNumber::zeta_pow(20, 9));
    }

    #[test]
    fn real_subfield_element_is_fixed() {
        let x = CycNumber::zeta_pow(20, 1) + CycNumber::zeta_pow(20, -1);
        assert_eq!(galois_conj_inv(&x), x);
        assert!(x.is_real());
    }

    #[test]
    fn embedding_of_basic_elements() {
        let one = CycNumber::one(20).embed();
        assert!((one.re - 1.0).abs() < 1e-15 && one.im.abs() < 1e-15);
        let i = CycNumber::zeta_pow(4, 1).embed();
        assert!(i.re.abs() < 1e-15 && (i.im - 1.0).abs() < 1e-15);
        // (5 − √5)/10
        let x = (CycNumber::from_i64(20, 5) - sqrt5(20)).scale(&q(1, 10));
        let e = x.embed_digits(7);
        assert!((e.re - 0.2763932).abs() < 1e-7 && e.im == 0.0);
    }

    #[test]
    fn sqrt_finds_quadratic_surds() {
        let five = CycNumber::from_i64(20, 5);
        let r = five.try_sqrt().unwrap();
        assert_eq!(r, sqrt5(20));
        let two = CycNumber::from_i64(16, 2);
        let s = two.try_sqrt().unwrap();
        assert_eq!(&s * &s, two);
        assert!(s.embed().re > 1.41);
        // √3 ∉ ℚ(ζ20)
        assert!(CycNumber::from_i64(20, 3).try_sqrt().is_none());
        let m = CycNumber::from_i64(20, -1).try_sqrt().unwrap();
        assert_eq!(m, CycNumber::zeta_pow(20, 5));
    }

    #[test]
    fn lift_is_a_homomorphism() {
        let a = CycNumber::zeta_pow(5, 2) + CycNumber::from_i64(5, 3);
        let b = CycNumber::zeta_pow(5, 4);
        let l = |x: &CycNumber| x.lift(20).unwrap();
        assert_eq!(l(&(&a * &b)), &l(&a) * &l(&b));
        assert_eq!(l(&CycNumber::zeta_pow(5, 1)), CycNumber::zeta_pow(20, 4));
    }

    #[test]
    fn division_round_trips() {
        let a = CycNumber::new(16, &[q(1, 2), q(-3, 1), q(0, 1), q(7, 5)]);
        let b = CycNumber::new(16, &[q(2, 1), q(1, 3), q(1, 1)]);
        assert_eq!(&(&a / &b) * &b, a);
        assert!(CycNumber::zero(16).inv().is_err());
    }
}
