//! Spin structures as quadratic forms on H₁(Σ_g; ℤ/2), and the spin splitting of `V_r(Σ_g)`.

use serde::Serialize;

use crate::recoupling::{verlinde_dim, RecouplingError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpinError {
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("spin dimension is not a nonnegative integer: {0}")]
    NotInteger(String),
    #[error(transparent)]
    Recoupling(#[from] RecouplingError),
}

/// Vectors of H₁(Σ_g; ℤ/2) are bitmasks: bit `i` is `x_{i+1}`, bit `g+i` is `y_{i+1}`.
pub type H1Vector = u64;

/// The mod-2 intersection pairing with `x_i · y_i = 1`.
pub fn intersection(g: u32, u: H1Vector, v: H1Vector) -> u8 {
    let mask = (1u64 << g) - 1;
    let (ux, uy) = (u & mask, (u >> g) & mask);
    let (vx, vy) = (v & mask, (v >> g) & mask);
    (((ux & vy) ^ (uy & vx)).count_ones() % 2) as u8
}

/// A quadratic refinement `q` of the intersection form, stored by its values on
/// `x_1…x_g, y_1…y_g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuadraticForm {
    pub g: u32,
    /// Bit `k` is `q(e_k)`.
    pub values: u64,
}

impl QuadraticForm {
    pub fn new(g: u32, values: u64) -> Self {
        assert!((1..=31).contains(&g), "genus out of range");
        Self {
            g,
            values: values & ((1u64 << (2 * g)) - 1),
        }
    }

    /// From `q(x_i)` and `q(y_i)` lists.
    pub fn from_basis_values(x: &[u8], y: &[u8]) -> Self {
        assert_eq!(x.len(), y.len());
        let g = x.len() as u32;
        let mut values = 0;
        for (i, (&a, &b)) in x.iter().zip(y).enumerate() {
            values |= u64::from(a & 1) << i;
            values |= u64::from(b & 1) << (g as usize + i);
        }
        Self::new(g, values)
    }

    /// `q(v)` by `q(a + b) = q(a) + q(b) + a·b` over the basis expansion of `v`.
    pub fn eval(&self, v: H1Vector) -> u8 {
        let mut acc = 0u64;
        let mut val = 0u8;
        for k in 0..2 * self.g {
            let e = 1u64 << k;
            if v & e != 0 {
                val ^= ((self.values >> k) & 1) as u8 ^ intersection(self.g, acc, e);
                acc |= e;
            }
        }
        val
    }

    /// `q ∘ T_v` where `T_v(u) = u + (u·v) v` is the transvection along `v`.
    pub fn transvect(&self, v: H1Vector) -> Self {
        let mut values = 0;
        for k in 0..2 * self.g {
            let e = 1u64 << k;
            let image = if intersection(self.g, e, v) == 1 { e ^ v } else { e };
            values |= u64::from(self.eval(image)) << k;
        }
        Self::new(self.g, values)
    }
}

/// `Σ q(x_i) q(y_i) mod 2`.
pub fn arf(q: &QuadraticForm) -> u8 {
    let g = q.g;
    let x = q.values & ((1u64 << g) - 1);
    let y = q.values >> g;
    ((x & y).count_ones() % 2) as u8
}

/// All `2^{2g}` quadratic forms.
pub fn all_forms(g: u32) -> impl Iterator<Item = QuadraticForm> {
    (0..1u64 << (2 * g)).map(move |v| QuadraticForm::new(g, v))
}

/// `(#even, #odd)` from the closed form `2^{g−1}(2^g ± 1)`.
pub fn orbit_counts(g: u32) -> (u64, u64) {
    let h = 1u64 << (g - 1);
    let t = 1u64 << g;
    (h * (t + 1), h * (t - 1))
}

/// `(#even, #odd)` by running [`arf`] over every form.
pub fn orbit_counts_enumerated(g: u32) -> (u64, u64) {
    all_forms(g).fold((0, 0), |(e, o), q| if arf(&q) == 0 { (e + 1, o) } else { (e, o + 1) })
}

/// `d_r^ε(g) = 2^{−2g}(d_r(g) + ((r+2)/2)^{g−1}((−1)^ε 2^g − 1))`, defined when `4 | r + 2`.
pub fn spin_dims(level: u32, genus: u32, parity: u8) -> Result<u64, SpinError> {
    let p = level + 2;
    if !p.is_multiple_of(4) {
        return Err(SpinError::NotApplicable(format!("4 does not divide r + 2 = {p}")));
    }
    if genus < 1 {
        return Err(SpinError::NotApplicable("genus must be positive".into()));
    }
    let d = verlinde_dim(level, genus)? as i128;
    let half = (p / 2) as i128;
    let two_g = 1i128 << genus;
    let sign = if parity.is_multiple_of(2) { 1 } else { -1 };
    let num = d + half.pow(genus - 1) * (sign * two_g - 1);
    let den = two_g * two_g;
    if num < 0 || num % den != 0 {
        return Err(SpinError::NotInteger(format!("{num}/{den}")));
    }
    Ok((num / den) as u64)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinTable {
    pub level: u32,
    pub genus: u32,
    pub total: u64,
    pub d_even: u64,
    pub d_odd: u64,
    pub even_forms: u64,
    pub odd_forms: u64,
    /// `#even·d⁰ + #odd·d¹`, which must equal `total`.
    pub weighted: u64,
}

pub fn spin_table(level: u32, genus: u32) -> Result<SpinTable, SpinError> {
    let (even_forms, odd_forms) = orbit_counts(genus);
    let d_even = spin_dims(level, genus, 0)?;
    let d_odd = spin_dims(level, genus, 1)?;
    Ok(SpinTable {
        level,
        genus,
        total: verlinde_dim(level, genus)?,
        d_even,
        d_odd,
        even_forms,
        odd_forms,
        weighted: even_forms * d_even + odd_forms * d_odd,
    })
}

/// Indices of the curves `α_i`, `β_i` of a flat structure, in basis order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlatIndexData {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
}

impl FlatIndexData {
    /// The flat structure from Thurston's construction on the type-`A_{2g}` chain:
    /// `ind(α_i) = 0`, `ind(β_i) = i − 1`.
    pub fn hecke_chain(g: u32) -> Self {
        Self {
            alpha: vec![0; g as usize],
            beta: (0..g).collect(),
        }
    }

    /// `q(γ) = ind_γ + 1 mod 2`.
    pub fn form(&self) -> QuadraticForm {
        let bit = |i: &u32| ((i + 1) % 2) as u8;
        let x: Vec<u8> = self.alpha.iter().map(bit).collect();
        let y: Vec<u8> = self.beta.iter().map(bit).collect();
        QuadraticForm::from_basis_values(&x, &y)
    }
}

pub fn flat_spin_parity(data: &FlatIndexData) -> u8 {
    arf(&data.form())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducibilityReport {
    pub level: u32,
    pub genus: u32,
    pub flat_parity: u8,
    /// `dim V(q_ω)`, `dim(V⁰ ∩ V(q_ω)^⊥)`, `dim(V¹ ∩ V(q_ω)^⊥)`.
    pub summands: [u64; 3],
    pub total: u64,
    pub all_positive: bool,
    pub sums_to_total: bool,
}

/// The three invariant pieces cut out by the flat spin structure `q_ω`, for `r = 4l + 2`, `l ≥ 1`.
pub fn reducibility_report(level: u32, genus: u32) -> Result<ReducibilityReport, SpinError> {
    if level < 6 || level % 4 != 2 {
        return Err(SpinError::NotApplicable(format!("r = {level} is not 4l+2 with l >= 1")));
    }
    if genus < 2 {
        return Err(SpinError::NotApplicable("genus must be at least 2".into()));
    }
    let t = spin_table(level, genus)?;
    let eps = flat_spin_parity(&FlatIndexData::hecke_chain(genus));
    let (own, even, odd) = if eps == 0 {
        (t.d_even, t.even_forms * t.d_even - t.d_even, t.odd_forms * t.d_odd)
    } else {
        (t.d_odd, t.even_forms * t.d_even, t.odd_forms * t.d_odd - t.d_odd)
    };
    let summands = [own, even, odd];
    Ok(ReducibilityReport {
        level,
        genus,
        flat_parity: eps,
        summands,
        total: t.total,
        all_positive: summands.iter().all(|&s| s > 0),
        sums_to_total: summands.iter().sum::<u64>() == t.total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arf_small() {
        assert_eq!(arf(&QuadraticForm::from_basis_values(&[0], &[0])), 0);
        assert_eq!(arf(&QuadraticForm::from_basis_values(&[1], &[1])), 1);
        assert_eq!(all_forms(2).filter(|q| arf(q) == 1).count(), 6);
    }

    #[test]
    fn orbit_counts_agree() {
        assert_eq!(orbit_counts(1), (3, 1));
        assert_eq!(orbit_counts(2), (10, 6));
        assert_eq!(orbit_counts(3), (36, 28));
        for g in 1..=6 {
            assert_eq!(orbit_counts(g), orbit_counts_enumerated(g), "g = {g}");
        }
    }

    #[test]
    fn spin_dimensions() {
        assert_eq!(spin_dims(6, 2, 0).unwrap(), 6);
        assert_eq!(spin_dims(6, 2, 1).unwrap(), 4);
        assert_eq!(spin_dims(2, 2, 0).unwrap(), 1);
        assert_eq!(spin_dims(2, 2, 1).unwrap(), 0);
        assert!(matches!(spin_dims(3, 2, 0), Err(SpinError::NotApplicable(_))));
    }

    #[test]
    fn weighted_identity() {
        for r in [2, 6, 10, 14] {
            for g in 2..=4 {
                let t = spin_table(r, g).unwrap();
                assert_eq!(t.weighted, t.total, "r = {r}, g = {g}");
            }
        }
    }

    #[test]
    fn flat_parity_closed_form() {
        assert_eq!(flat_spin_parity(&FlatIndexData::hecke_chain(2)), 1);
        assert_eq!(flat_spin_parity(&FlatIndexData::hecke_chain(3)), 0);
        for g in 1..=6 {
            let want = ((g * (g + 1) / 2) % 2) as u8;
            assert_eq!(flat_spin_parity(&FlatIndexData::hecke_chain(g)), want);
        }
        let odd = FlatIndexData { alpha: vec![1, 3], beta: vec![5, 7] };
        assert_eq!(flat_spin_parity(&odd), 0);
    }

    #[test]
    fn level_six_summands() {
        let rep = reducibility_report(6, 2).unwrap();
        assert_eq!(rep.summands, [4, 60, 20]);
        assert_eq!(rep.total, 84);
        for (r, g) in [(6, 3), (10, 2), (10, 3)] {
            let rep = reducibility_report(r, g).unwrap();
            assert!(rep.all_positive && rep.sums_to_total, "{rep:?}");
        }
        assert!(matches!(reducibility_report(2, 2), Err(SpinError::NotApplicable(_))));
    }

    #[test]
    fn polarization() {
        let q = QuadraticForm::new(2, 0b1011);
        for u in 0..16u64 {
            for v in 0..16u64 {
                assert_eq!(q.eval(u ^ v), q.eval(u) ^ q.eval(v) ^ intersection(2, u, v));
            }
        }
    }
}
