//! Genus-1 modular data: `S` and `T` on the span of the colors `I_r`.

use serde::Serialize;

use crate::exactnum::{CycNumber, ExactMatrix};
use crate::recoupling::{GlobalConstants, Recoupling, RecouplingError, TheoryParams};
use crate::report::RelationReport;

#[derive(Clone, Debug, Serialize)]
pub struct ModularData {
    pub params: TheoryParams,
    /// Hopf-link matrix `S̃_{ij} = (−1)^{i+j}[(i+1)(j+1)]`.
    pub s_tilde: ExactMatrix,
    /// `S = S̃/D`, present when `D ∈ ℚ(ζ_N)`.
    pub s: Option<ExactMatrix>,
    pub t: ExactMatrix,
    pub constants: GlobalConstants,
}

impl ModularData {
    pub fn d2(&self) -> &CycNumber {
        &self.constants.d2
    }
}

/// The unnormalized `S̃`; `S = S̃/D`, so every statement about `S` is made via `S̃` and `D²`.
pub fn s_tilde(th: &Recoupling) -> ExactMatrix {
    let colors = th.params().colors();
    let n = colors.len();
    ExactMatrix::from_fn(th.order(), n, n, |a, b| {
        let (i, j) = (colors[a], colors[b]);
        let v = th.qint_at(((i + 1) * (j + 1)) as i64);
        if (i + j) % 2 == 0 {
            v
        } else {
            -v
        }
    })
}

pub fn t_matrix(th: &Recoupling) -> ExactMatrix {
    let diag: Vec<CycNumber> = th.params().colors().iter().map(|&i| th.twist_at(i)).collect();
    ExactMatrix::diagonal(th.order(), &diag)
}

pub fn modular_data(params: TheoryParams) -> ModularData {
    let th = Recoupling::new(params);
    let constants = GlobalConstants::compute(&th);
    let s_tilde = s_tilde(&th);
    let s = constants.d.as_ref().map(|d| {
        let inv = d.inv().expect("D is nonzero");
        s_tilde.scale(&inv)
    });
    ModularData {
        params,
        t: t_matrix(&th),
        s_tilde,
        s,
        constants,
    }
}

/// `S` when it lies in the working field; otherwise an error naming the obstruction.
pub fn s_matrix(params: TheoryParams) -> Result<ExactMatrix, RecouplingError> {
    modular_data(params)
        .s
        .ok_or_else(|| RecouplingError::InvalidParams("D is not in the cyclotomic field at this root".into()))
}

/// `S² = I`, `((TS)³)² = (𝒫⁺/𝒫⁻)·I` and `S = Sᵀ`, all phrased through `S̃` and `D²`:
/// `S̃² = D²·I` and `(TS̃)⁶ = (𝒫⁺/𝒫⁻)·D⁶·I`.
pub fn verify_genus1_relations(params: TheoryParams) -> Vec<RelationReport> {
    let md = modular_data(params);
    let st = &md.s_tilde;
    let d2 = md.d2();
    let s2 = st.mul(st).expect("square matrix");
    let ts = md.t.mul(st).expect("square matrix");
    let ts3 = ts.pow(3).expect("square matrix");
    let ts6 = ts3.mul(&ts3).expect("square matrix");
    let c = &md.constants.kappa2 * &d2.pow(3);
    vec![
        RelationReport::from_witness("S^2 = I", s2.scalar_mismatch(d2)),
        RelationReport::from_witness("((TS)^3)^2 = (P+/P-) I", ts6.scalar_mismatch(&c)),
        RelationReport::from_witness("S symmetric", st.symmetry_mismatch()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::all_pass;

    #[test]
    fn relations_hold_at_unitary_roots() {
        for r in 1..=6 {
            let rep = verify_genus1_relations(TheoryParams::unitary(r).unwrap());
            assert!(all_pass(&rep), "r = {r}: {rep:?}");
        }
    }

    #[test]
    fn one_color_theory_has_trivial_s() {
        let md = modular_data(TheoryParams::unitary(1).unwrap());
        assert_eq!(md.s.unwrap(), ExactMatrix::identity(6, 1));
    }

    #[test]
    fn ising_first_row() {
        let md = modular_data(TheoryParams::unitary(2).unwrap());
        let row: Vec<f64> = md.s_tilde.row(0).iter().map(|x| x.embed().re).collect();
        assert!((row[0] - 1.0).abs() < 1e-12);
        assert!((row[1] - 2f64.sqrt()).abs() < 1e-12);
        assert!((row[2] - 1.0).abs() < 1e-12);
    }
}
