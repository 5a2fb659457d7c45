//! Hecke groups Γ̃_q ⊂ SL(2,ℝ) with exact entries in the real subfield of ℚ(ζ_{2q}).

mod thurston;
mod word;

pub use thurston::{thurston_rep, MulticurveData, ThurstonRep};
pub use word::{eval_word, parse_word, Generator, Word, WordItem};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::exactnum::{CycNumber, ExactError};
use crate::report::RelationReport;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error("q must be odd and at least 3, got {0}")]
    InvalidQ(u32),
    #[error("{0} is not fixed by complex conjugation")]
    NotReal(String),
    #[error("multicurve graph is not connected")]
    NotPrimitive,
    #[error("malformed multicurve data: {0}")]
    BadData(String),
    #[error("cannot parse word: {0}")]
    Parse(String),
    #[error("genus must be between 1 and 7, got {0}")]
    GenusRange(u32),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// An element of ℚ(ζ_N) ∩ ℝ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct RealCycNumber(CycNumber);

impl RealCycNumber {
    pub fn new(x: CycNumber) -> Result<Self, HeckeError> {
        if x.is_real() {
            Ok(Self(x))
        } else {
            Err(HeckeError::NotReal(x.to_string()))
        }
    }

    pub fn from_i64(order: u32, v: i64) -> Self {
        Self(CycNumber::from_i64(order, v))
    }

    /// `2cos(π/q) = ζ_{2q} + ζ_{2q}⁻¹`.
    pub fn two_cos_pi_over(q: u32) -> Self {
        let order = 2 * q;
        Self(&CycNumber::zeta_pow(order, 1) + &CycNumber::zeta_pow(order, -1))
    }

    pub fn inner(&self) -> &CycNumber {
        &self.0
    }

    pub fn order(&self) -> u32 {
        self.0.order()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.embed().re
    }

    /// Exact sign: zero is detected symbolically, the rest by the real embedding.
    pub fn signum(&self) -> i32 {
        self.0.real_sign()
    }
}

impl fmt::Display for RealCycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for &RealCycNumber {
    type Output = RealCycNumber;
    fn add(self, o: Self) -> RealCycNumber {
        RealCycNumber(&self.0 + &o.0)
    }
}

impl Sub for &RealCycNumber {
    type Output = RealCycNumber;
    fn sub(self, o: Self) -> RealCycNumber {
        RealCycNumber(&self.0 - &o.0)
    }
}

impl Mul for &RealCycNumber {
    type Output = RealCycNumber;
    fn mul(self, o: Self) -> RealCycNumber {
        RealCycNumber(&self.0 * &o.0)
    }
}

impl Neg for &RealCycNumber {
    type Output = RealCycNumber;
    fn neg(self) -> RealCycNumber {
        RealCycNumber(-self.0.clone())
    }
}

/// `[[a, b], [c, d]]` with `ad − bc = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SL2Matrix {
    pub a: RealCycNumber,
    pub b: RealCycNumber,
    pub c: RealCycNumber,
    pub d: RealCycNumber,
}

impl SL2Matrix {
    pub fn new(
        a: RealCycNumber,
        b: RealCycNumber,
        c: RealCycNumber,
        d: RealCycNumber,
    ) -> Result<Self, HeckeError> {
        let m = Self { a, b, c, d };
        let det = m.det();
        if det.inner().is_one() {
            Ok(m)
        } else {
            Err(HeckeError::BadData(format!("determinant {det} is not 1")))
        }
    }

    pub fn identity(order: u32) -> Self {
        let (o, z) = (RealCycNumber::from_i64(order, 1), RealCycNumber::from_i64(order, 0));
        Self {
            a: o.clone(),
            b: z.clone(),
            c: z,
            d: o,
        }
    }

    pub fn order(&self) -> u32 {
        self.a.order()
    }

    pub fn det(&self) -> RealCycNumber {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn trace(&self) -> RealCycNumber {
        &self.a + &self.d
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        }
    }

    /// The adjugate, which is the inverse since `det = 1`.
    pub fn inv(&self) -> Self {
        Self {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::identity(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.order())
    }

    pub fn is_minus_identity(&self) -> bool {
        *self == Self::identity(self.order()).neg()
    }

    /// Equality in PSL(2): up to sign.
    pub fn eq_projective(&self, o: &Self) -> bool {
        self == o || *self == o.neg()
    }

    pub fn to_f64(&self) -> [[f64; 2]; 2] {
        [
            [self.a.to_f64(), self.b.to_f64()],
            [self.c.to_f64(), self.d.to_f64()],
        ]
    }
}

/// `(A_q, B_q, J)` with `A_q = [[1, λ], [0, 1]]`, `B_q = [[1, 0], [−λ, 1]]`, `J = [[0, −1], [1, 0]]`.
pub fn hecke_generators(q: u32) -> Result<(SL2Matrix, SL2Matrix, SL2Matrix), HeckeError> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(HeckeError::InvalidQ(q));
    }
    Ok(generators_for(&RealCycNumber::two_cos_pi_over(q)))
}

/// The parabolic pair `[[1, λ], [0, 1]]`, `[[1, 0], [−λ, 1]]` and `J` for any real `λ`.
pub fn generators_for(lambda: &RealCycNumber) -> (SL2Matrix, SL2Matrix, SL2Matrix) {
    let order = lambda.order();
    let one = RealCycNumber::from_i64(order, 1);
    let zero = RealCycNumber::from_i64(order, 0);
    let a = SL2Matrix {
        a: one.clone(),
        b: lambda.clone(),
        c: zero.clone(),
        d: one.clone(),
    };
    let b = SL2Matrix {
        a: one.clone(),
        b: zero.clone(),
        c: -lambda,
        d: one.clone(),
    };
    let j = SL2Matrix {
        a: zero.clone(),
        b: -&one,
        c: one,
        d: zero,
    };
    (a, b, j)
}

/// Every relation of the presentation, checked exactly.
pub fn verify_presentation(q: u32) -> Result<Vec<RelationReport>, HeckeError> {
    let (a, b, j) = hecke_generators(q)?;
    let q = q as i64;
    let ab = a.mul(&b);
    let half = ab.pow((q + 1) / 2);
    let ainv = a.inv();
    let ts = a.mul(&j);
    let j2 = j.pow(2);
    Ok(vec![
        RelationReport::flag(
            "J = A^-1 (AB)^((q+1)/2) in PSL",
            j.eq_projective(&ainv.mul(&half)),
        ),
        RelationReport::flag(
            "J = (AB)^(q(q-1)/2) A^-1 (AB)^((q+1)/2)",
            j == ab.pow(q * (q - 1) / 2).mul(&ainv).mul(&half),
        ),
        RelationReport::flag("s^4 = I", j.pow(4).is_identity()),
        RelationReport::flag("(ts)^(2q) = I", ts.pow(2 * q).is_identity()),
        RelationReport::flag("s^2 = (ts)^q", j2 == ts.pow(q)),
        RelationReport::flag("(AB)^q = -I", ab.pow(q).is_minus_identity()),
        RelationReport::flag("J^2 = -I", j2.is_minus_identity()),
    ])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TraceClass {
    Elliptic,
    Parabolic,
    Hyperbolic,
}

/// By `|tr|` against 2, decided through the exact sign of `tr² − 4`.
pub fn classify(m: &SL2Matrix) -> TraceClass {
    let t = m.trace();
    let disc = &(&t * &t) - &RealCycNumber::from_i64(m.order(), 4);
    match disc.signum() {
        s if s < 0 => TraceClass::Elliptic,
        0 => TraceClass::Parabolic,
        _ => TraceClass::Hyperbolic,
    }
}

/// `(T_A T_B)^{2g+1} = −I` for the type-`A_{2g}` path, with `μ` from [`thurston_rep`].
pub fn hyperelliptic_image_check(g: u32) -> Result<Vec<RelationReport>, HeckeError> {
    if !(1..=7).contains(&g) {
        return Err(HeckeError::GenusRange(g));
    }
    let data = MulticurveData::type_a_path(2 * g as usize);
    let rep = thurston_rep(&data)?;
    let (ta, tb) = rep.exact.ok_or_else(|| {
        HeckeError::BadData("type A path did not give an exact eigenvalue".into())
    })?;
    let q = 2 * g + 1;
    let lambda = RealCycNumber::two_cos_pi_over(q);
    let mu_ok = rep.mu_exact.as_ref() == Some(&lambda);
    let prod = ta.mul(&tb).pow(q as i64);
    Ok(vec![
        RelationReport::flag(format!("mu = 2cos(pi/{q})"), mu_ok),
        RelationReport::flag(format!("(T_A T_B)^{q} = -I"), prod.is_minus_identity()),
        RelationReport::flag(format!("(T_A T_B)^{} = I", 2 * q), prod.pow(2).is_identity()),
    ])
}
