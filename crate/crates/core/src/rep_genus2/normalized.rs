use std::collections::HashMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::Genus2Error;
use crate::exactnum::{CycNumber, ExactMatrix};

/// One entry of `𝒥`.
///
/// `√(P_σP_μ)` need not lie in ℚ(ζ_N) (the Fibonacci matrix needs `5^{1/4}`);
/// such entries are kept as their exact square together with the sign of
/// their real value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum JEntry {
    Exact { value: CycNumber },
    Surd { square: CycNumber, sign: i32 },
}

impl JEntry {
    pub fn square(&self) -> CycNumber {
        match self {
            Self::Exact { value } => value.pow(2),
            Self::Surd { square, .. } => square.clone(),
        }
    }

    pub fn sign(&self) -> i32 {
        match self {
            Self::Exact { value } => value.real_sign(),
            Self::Surd { sign, .. } => *sign,
        }
    }

    pub fn as_exact(&self) -> Option<&CycNumber> {
        match self {
            Self::Exact { value } => Some(value),
            Self::Surd { .. } => None,
        }
    }

    pub fn is_real(&self) -> bool {
        match self {
            Self::Exact { value } => value.is_real(),
            Self::Surd { square, .. } => square.is_real(),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Self::Exact { value } => value.embed(),
            Self::Surd { square, sign } => {
                Complex64::new(*sign as f64 * square.embed().re.max(0.0).sqrt(), 0.0)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedJ {
    pub order: u32,
    pub n: usize,
    pub entries: Vec<JEntry>,
}

impl NormalizedJ {
    pub fn get(&self, i: usize, j: usize) -> &JEntry {
        &self.entries[i * self.n + j]
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(JEntry::is_real)
    }

    /// The whole matrix in ℚ(ζ_N), if every entry is there.
    pub fn to_exact(&self) -> Option<ExactMatrix> {
        let rows = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.get(i, j).as_exact().cloned())
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()?;
        ExactMatrix::from_rows(self.order, rows).ok()
    }

    pub fn to_complex(&self) -> Vec<Vec<Complex64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).to_complex()).collect())
            .collect()
    }
}

/// `𝒥` itself, or the non-normalized variant with the reason it was needed.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum JUnitary {
    Normalized(NormalizedJ),
    NonNormalized {
        matrix: ExactMatrix,
        #[serde(serialize_with = "ser_display")]
        reason: Genus2Error,
    },
}

fn ser_display<S: serde::Serializer>(e: &Genus2Error, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(e)
}

fn positive_real(x: &CycNumber) -> bool {
    x.is_real() && x.real_sign() > 0
}

pub(super) fn normalize(
    jtilde: &ExactMatrix,
    raw: &ExactMatrix,
    products: &[CycNumber],
    thetas: &[CycNumber],
    d2: &CycNumber,
) -> JUnitary {
    match try_normalize(jtilde, products, thetas, d2) {
        Ok(nj) => JUnitary::Normalized(nj),
        Err(reason) => JUnitary::NonNormalized {
            matrix: raw.clone(),
            reason,
        },
    }
}

fn try_normalize(
    jtilde: &ExactMatrix,
    products: &[CycNumber],
    thetas: &[CycNumber],
    d2: &CycNumber,
) -> Result<NormalizedJ, Genus2Error> {
    let order = jtilde.order();
    let n = jtilde.rows();
    if let Some(s) = products.iter().position(|p| !positive_real(p)) {
        return Err(Genus2Error::NotPositive(format!(
            "Δ-product of basis vector {s} is not a positive real"
        )));
    }
    if let Some(s) = thetas.iter().position(|t| !t.is_real() || t.is_zero()) {
        return Err(Genus2Error::NotPositive(format!(
            "theta net of basis vector {s} is not a nonzero real"
        )));
    }
    // Square classes: P_σ = scale_σ² · P_{rep(class_σ)} with scale_σ > 0.
    let mut reps: Vec<CycNumber> = Vec::new();
    let mut class = Vec::with_capacity(n);
    let mut scale = Vec::with_capacity(n);
    let mut memo: HashMap<CycNumber, (usize, CycNumber)> = HashMap::new();
    for p in products {
        if let Some((c, s)) = memo.get(p) {
            class.push(*c);
            scale.push(s.clone());
            continue;
        }
        let found = reps.iter().enumerate().find_map(|(c, rep)| {
            (p / rep).try_sqrt().map(|s| (c, s))
        });
        let (c, s) = found.unwrap_or_else(|| {
            reps.push(p.clone());
            (reps.len() - 1, CycNumber::one(order))
        });
        memo.insert(p.clone(), (c, s.clone()));
        class.push(c);
        scale.push(s);
    }
    // √(P_ρ P_ρ') between class representatives, when it exists.
    let cross: Vec<Vec<Option<CycNumber>>> = reps
        .iter()
        .enumerate()
        .map(|(a, ra)| {
            reps.iter()
                .enumerate()
                .map(|(b, rb)| if a == b { Some(ra.clone()) } else { (ra * rb).try_sqrt() })
                .collect()
        })
        .collect();
    let d2inv = d2.inv()?;
    let thinv: Vec<CycNumber> = thetas.iter().map(CycNumber::inv).collect::<Result<_, _>>()?;
    let mut entries = Vec::with_capacity(n * n);
    for s in 0..n {
        for m in 0..n {
            let x = &(&(jtilde.get(s, m) * &d2inv) * &thinv[s]) * &thinv[m];
            let entry = match &cross[class[s]][class[m]] {
                Some(q) => JEntry::Exact {
                    value: &(&(&scale[s] * &scale[m]) * q) * &x,
                },
                None => {
                    if !x.is_real() {
                        return Err(Genus2Error::NotPositive(format!(
                            "entry ({s}, {m}) is neither in the field nor real"
                        )));
                    }
                    JEntry::Surd {
                        square: &(&products[s] * &products[m]) * &x.pow(2),
                        sign: x.real_sign(),
                    }
                }
            };
            entries.push(entry);
        }
    }
    Ok(NormalizedJ { order, n, entries })
}
