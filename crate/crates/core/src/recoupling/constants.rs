use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use super::{color_set, Recoupling, RecouplingError};
use crate::exactnum::{CycNumber, Rational};

/// 𝒫±, D², and D, κ when they exist in ℚ(ζ_N).
#[derive(Clone, Debug, Serialize)]
pub struct GlobalConstants {
    pub p_plus: CycNumber,
    pub p_minus: CycNumber,
    pub d2: CycNumber,
    /// κ² = 𝒫⁺/𝒫⁻.
    pub kappa2: CycNumber,
    /// `m` with κ² = ζ_N^m, when κ² is an N-th root of unity.
    pub kappa2_exponent: Option<i64>,
    /// The square root of D² with positive real embedding, if it lies in ℚ(ζ_N).
    pub d: Option<CycNumber>,
    /// κ = 𝒫⁺/D, whenever D is available.
    pub kappa: Option<CycNumber>,
}

impl GlobalConstants {
    pub fn compute(th: &Recoupling) -> Self {
        let order = th.order();
        let mut p_plus = CycNumber::zero(order);
        let mut p_minus = CycNumber::zero(order);
        let mut d2 = CycNumber::zero(order);
        for i in th.params().colors() {
            let dd = th.delta_at(i).pow(2);
            let t = th.twist_at(i);
            p_plus = &p_plus + &(&t * &dd);
            p_minus = &p_minus + &(&t.conj_inv() * &dd);
            d2 = &d2 + &dd;
        }
        let kappa2 = &p_plus / &p_minus;
        let kappa2_exponent =
            (0..order as i64).find(|&m| CycNumber::zeta_pow(order, m) == kappa2);
        let d = d2.try_sqrt();
        let kappa = d.as_ref().map(|d| &p_plus / d);
        Self {
            p_plus,
            p_minus,
            d2,
            kappa2,
            kappa2_exponent,
            d,
            kappa,
        }
    }
}

/// `d_r(g)`, the dimension of the genus-`g` TQFT space at level `r`.
///
/// Each `sin²(πm/p)` is written as `(2 − ζ_p^m − ζ_p^{−m})/4`, so the whole
/// sum is evaluated in ℚ(ζ_p) and must come out a nonnegative integer.
pub fn verlinde_dim(level: u32, genus: u32) -> Result<u64, RecouplingError> {
    if level < 1 || genus < 1 {
        return Err(RecouplingError::InvalidParams(
            "dimension needs r ≥ 1 and g ≥ 1".into(),
        ));
    }
    let p = level + 2;
    let order = p;
    let (prefactor, js): (Rational, Vec<i64>) = if level.is_multiple_of(2) {
        (
            Rational::new((p as i64).into(), 2.into()),
            (1..=(level as i64 + 1)).collect(),
        )
    } else {
        (
            Rational::new((p as i64).into(), 4.into()),
            (1..=((level as i64 + 1) / 2)).map(|j| 2 * j).collect(),
        )
    };
    let two = CycNumber::from_i64(order, 2);
    let quarter = Rational::new(1.into(), 4.into());
    let mut total = CycNumber::zero(order);
    for m in js {
        let s2 = (&two - &(CycNumber::zeta_pow(order, m) + CycNumber::zeta_pow(order, -m)))
            .scale(&quarter);
        total = &total + &s2.powi(1 - genus as i64)?;
    }
    let pre = num_traits::pow(prefactor, (genus - 1) as usize);
    let value = total.scale(&pre);
    let q = value
        .as_rational()
        .ok_or_else(|| RecouplingError::NotInteger(format!("{value} is irrational")))?;
    if !q.denom().is_one() || q.is_negative() {
        return Err(RecouplingError::NotInteger(q.to_string()));
    }
    q.numer()
        .to_u64()
        .ok_or_else(|| RecouplingError::NotInteger(format!("{q} overflows u64")))
}

/// `|I_r|`, which equals `d_r(1)`.
pub fn color_count(level: u32) -> usize {
    color_set(level).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recoupling::TheoryParams;

    #[test]
    fn genus_two_dimension_table() {
        let want = [(2, 10), (3, 5), (5, 14), (7, 30), (9, 55), (11, 91), (13, 140), (6, 84)];
        for (r, d) in want {
            assert_eq!(verlinde_dim(r, 2).unwrap(), d, "r = {r}");
        }
    }

    #[test]
    fn genus_one_counts_colors() {
        for r in 1..=12 {
            assert_eq!(verlinde_dim(r, 1).unwrap() as usize, color_count(r));
        }
    }

    #[test]
    fn ising_global_dimension() {
        let th = Recoupling::new(TheoryParams::unitary(2).unwrap());
        let g = GlobalConstants::compute(&th);
        assert_eq!(g.d2, CycNumber::from_i64(16, 4));
        assert_eq!(g.d, Some(CycNumber::from_i64(16, 2)));
        assert_eq!(&g.p_plus * &g.p_minus, g.d2);
    }
}
