//! JSON schema for exact values.
//!
//! `CycNumber` ↦ `{"order": N, "coeffs": [[num, den], …], "approx": [re, im]}`;
//! `IntPolynomial` ↦ coefficient array, constant term first. Integers that fit
//! in `i64` are JSON numbers, larger ones decimal strings, so round-trips are exact.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{CycNumber, ExactMatrix, IntPolynomial, Rational};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(untagged)]
pub enum BigIntRepr {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for BigIntRepr {
    fn from(x: &BigInt) -> Self {
        match x.to_i64() {
            Some(v) => Self::Small(v),
            None => Self::Big(x.to_string()),
        }
    }
}

impl BigIntRepr {
    pub fn to_bigint(&self) -> Result<BigInt, String> {
        match self {
            Self::Small(v) => Ok(BigInt::from(*v)),
            Self::Big(s) => s.parse().map_err(|_| format!("bad integer literal {s:?}")),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CycRepr {
    order: u32,
    coeffs: Vec<[BigIntRepr; 2]>,
    approx: [f64; 2],
}

impl Serialize for CycNumber {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let z = self.embed();
        CycRepr {
            order: self.order(),
            coeffs: self
                .coeffs()
                .iter()
                .map(|c| [c.numer().into(), c.denom().into()])
                .collect(),
            approx: [z.re, z.im],
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycNumber {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = CycRepr::deserialize(d)?;
        if r.order == 0 {
            return Err(D::Error::custom("order must be positive"));
        }
        let coeffs = r
            .coeffs
            .iter()
            .map(|[n, d]| {
                let (n, d) = (n.to_bigint()?, d.to_bigint()?);
                if d == BigInt::from(0) {
                    return Err("zero denominator".to_string());
                }
                Ok(Rational::new(n, d))
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(CycNumber::new(r.order, &coeffs))
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<BigIntRepr> = self.coeffs().iter().map(Into::into).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<BigIntRepr>::deserialize(d)?;
        let c = v
            .iter()
            .map(BigIntRepr::to_bigint)
            .collect::<Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        Ok(IntPolynomial::new(c))
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    order: u32,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<CycNumber>>,
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixRepr {
            order: self.order(),
            rows: self.rows(),
            cols: self.cols(),
            entries: (0..self.rows()).map(|i| self.row(i).to_vec()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = MatrixRepr::deserialize(d)?;
        if r.entries.len() != r.rows || r.entries.iter().any(|row| row.len() != r.cols) {
            return Err(D::Error::custom("entries do not match the declared shape"));
        }
        ExactMatrix::from_rows(r.order, r.entries).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyc_number_schema() {
        let x = CycNumber::zeta_pow(4, 1).scale(&Rational::new(3.into(), 7.into()));
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(v["order"], 4);
        assert_eq!(v["coeffs"], serde_json::json!([[0, 1], [3, 7]]));
        let back: CycNumber = serde_json::from_value(v).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn big_coefficients_round_trip() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let x = CycNumber::from_parts(20, vec![big.clone(), BigInt::from(-1)], big + 1);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(serde_json::from_str::<CycNumber>(&s).unwrap(), x);
        let p = IntPolynomial::from_i64s(&[1, -3, 3, -3, 1]);
        let ps = serde_json::to_string(&p).unwrap();
        assert_eq!(ps, "[1,-3,3,-3,1]");
        assert_eq!(serde_json::from_str::<IntPolynomial>(&ps).unwrap(), p);
    }
}
