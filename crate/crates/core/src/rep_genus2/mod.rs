//! The genus-2 representation of the Hecke group Γ₅.
//!
//! Basis vectors are theta graphs `u_{ijk}` with admissible edge colors, in
//! dictionary order. `J` acts by the pairing matrix `J̃` (normalized to the
//! unitary `𝒥`), and the twist generator acts diagonally by `θ_iθ_j`.

mod certificate;
mod normalized;

pub use certificate::{
    factor_against, infinite_image_certificate, trace_jtjt, trace_table, ImageVerdict, InfiniteImageReport,
    MinPolyCertificate, TraceCertificate, TraceRow,
};
pub use normalized::{JEntry, JUnitary, NormalizedJ};

use num_complex::Complex64;
use serde::Serialize;

use crate::exactnum::{CycNumber, ExactError, ExactMatrix, LaurentFraction};
use crate::recoupling::{
    AdmissibleTriple, GlobalConstants, Recoupling, RecouplingError, TheoryParams,
};
use crate::report::RelationReport;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Genus2Error {
    #[error("hermitian form is not positive: {0}")]
    NotPositive(String),
    #[error(transparent)]
    Recoupling(#[from] RecouplingError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Genus2Basis {
    pub triples: Vec<AdmissibleTriple>,
}

impl Genus2Basis {
    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    pub fn index_of(&self, i: u32, j: u32, k: u32) -> Option<usize> {
        self.triples
            .binary_search(&AdmissibleTriple { a: i, b: j, c: k })
            .ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32, u32)> + '_ {
        self.triples.iter().map(AdmissibleTriple::as_tuple)
    }
}

pub fn enumerate_basis(params: TheoryParams) -> Genus2Basis {
    let colors = params.colors();
    let mut triples = Vec::new();
    for &i in &colors {
        for &j in &colors {
            for &k in &colors {
                if params.is_admissible(i, j, k) {
                    triples.push(AdmissibleTriple { a: i, b: j, c: k });
                }
            }
        }
    }
    Genus2Basis { triples }
}

/// `a^{i,j}_l` in ℚ(A); zero when no term of the defining sum is admissible.
pub fn coupling_a(params: TheoryParams, i: u32, j: u32, l: u32) -> LaurentFraction {
    Recoupling::new(params).coupling_a(i, j, l)
}

/// `ā^{i,j}_l`, the image of `a^{i,j}_l` under `A ↦ A⁻¹`.
pub fn coupling_a_bar(params: TheoryParams, i: u32, j: u32, l: u32) -> LaurentFraction {
    Recoupling::new(params).coupling_a_bar(i, j, l)
}

/// Dense tables of the specialized coefficients that enter `J̃`.
struct JTables {
    colors: Vec<u32>,
    /// `a[x][y][l]` for colors `colors[x], colors[y], colors[l]`.
    a: Vec<Vec<Vec<CycNumber>>>,
    a_bar: Vec<Vec<Vec<CycNumber>>>,
    /// `Δ_l⁻¹·Tet(l,j,j;k,i,i)` per basis vector.
    left: Vec<Vec<CycNumber>>,
    /// `Tet(l,i,i;j,k,k)` per basis vector.
    right: Vec<Vec<CycNumber>>,
}

impl JTables {
    fn build(th: &Recoupling, basis: &Genus2Basis) -> Result<Self, RecouplingError> {
        let colors = th.params().colors();
        let slot = |c: u32| colors.iter().position(|&x| x == c).unwrap();
        let table = |bar: bool| -> Result<Vec<Vec<Vec<CycNumber>>>, RecouplingError> {
            colors
                .iter()
                .map(|&i| {
                    colors
                        .iter()
                        .map(|&j| {
                            colors
                                .iter()
                                .map(|&l| th.coupling_at(i, j, l, bar))
                                .collect()
                        })
                        .collect()
                })
                .collect()
        };
        let a = table(false)?;
        let a_bar = table(true)?;
        let dinv: Vec<CycNumber> = colors
            .iter()
            .map(|&l| th.delta_at(l).inv())
            .collect::<Result<_, _>>()?;
        let mut left = Vec::with_capacity(basis.len());
        let mut right = Vec::with_capacity(basis.len());
        for (i, j, k) in basis.iter() {
            left.push(
                colors
                    .iter()
                    .map(|&l| &th.tet_or_zero(l, j, j, k, i, i) * &dinv[slot(l)])
                    .collect(),
            );
            right.push(
                colors
                    .iter()
                    .map(|&l| th.tet_or_zero(l, i, i, j, k, k))
                    .collect(),
            );
        }
        Ok(Self {
            colors,
            a,
            a_bar,
            left,
            right,
        })
    }

    fn slot(&self, c: u32) -> usize {
        self.colors.iter().position(|&x| x == c).unwrap()
    }
}

fn assemble_jtilde(th: &Recoupling, basis: &Genus2Basis) -> Result<ExactMatrix, RecouplingError> {
    let t = JTables::build(th, basis)?;
    let order = th.order();
    let idx: Vec<[usize; 3]> = basis
        .iter()
        .map(|(i, j, k)| [t.slot(i), t.slot(j), t.slot(k)])
        .collect();
    let n = basis.len();
    Ok(ExactMatrix::from_fn(order, n, n, |s, m| {
        let [i1, j1, _] = idx[s];
        let [i2, _, k2] = idx[m];
        let mut acc = CycNumber::zero(order);
        for l in 0..t.colors.len() {
            let (x, y) = (&t.left[s][l], &t.right[m][l]);
            let (a, b) = (&t.a[j1][i2][l], &t.a_bar[k2][i1][l]);
            if x.is_zero() || y.is_zero() || a.is_zero() || b.is_zero() {
                continue;
            }
            acc = &acc + &(&(x * y) * &(a * b));
        }
        acc
    }))
}

/// `J̃_{σμ} = Σ_l Δ_l⁻¹ a^{j₁,i₂}_l ā^{k₂,i₁}_l Tet(l,i₂,i₂;j₂,k₂,k₂) Tet(l,j₁,j₁;k₁,i₁,i₁)`.
pub fn jtilde(params: TheoryParams) -> Result<ExactMatrix, Genus2Error> {
    let th = Recoupling::new(params);
    Ok(assemble_jtilde(&th, &enumerate_basis(params))?)
}

/// `𝒯 = diag(θ_iθ_j)`.
pub fn t_genus2(params: TheoryParams) -> ExactMatrix {
    let th = Recoupling::new(params);
    let basis = enumerate_basis(params);
    ExactMatrix::diagonal(params.order(), &twist_diag(&th, &basis))
}

fn twist_diag(th: &Recoupling, basis: &Genus2Basis) -> Vec<CycNumber> {
    basis
        .iter()
        .map(|(i, j, _)| &th.twist_at(i) * &th.twist_at(j))
        .collect()
}

/// Everything about the genus-2 representation at one root.
///
/// `raw` is `J̃·diag(P_μ/Θ_μ²)/D²` with `P_μ = Δ_{i₂}Δ_{j₂}Δ_{k₂}`. It is
/// conjugate to `𝒥` by the diagonal `√P/Θ`, lies in ℚ(ζ_N), and carries
/// all relation checks.
#[derive(Clone, Debug, Serialize)]
pub struct Genus2Rep {
    pub params: TheoryParams,
    pub basis: Genus2Basis,
    pub jtilde: ExactMatrix,
    pub raw: ExactMatrix,
    pub junitary: JUnitary,
    pub tdiag: ExactMatrix,
    pub constants: GlobalConstants,
    /// `Δ_iΔ_jΔ_k` per basis vector.
    pub delta_products: Vec<CycNumber>,
    /// `Θ(i,j,k)` per basis vector.
    pub thetas: Vec<CycNumber>,
}

impl Genus2Rep {
    pub fn new(params: TheoryParams) -> Result<Self, Genus2Error> {
        let th = Recoupling::new(params);
        let basis = enumerate_basis(params);
        let constants = GlobalConstants::compute(&th);
        let jtilde = assemble_jtilde(&th, &basis)?;
        let delta_products: Vec<CycNumber> = basis
            .iter()
            .map(|(i, j, k)| &(&th.delta_at(i) * &th.delta_at(j)) * &th.delta_at(k))
            .collect();
        let thetas: Vec<CycNumber> = basis
            .iter()
            .map(|(i, j, k)| th.theta_at(i, j, k))
            .collect::<Result<_, _>>()?;
        let d2inv = constants.d2.inv()?;
        let weights: Vec<CycNumber> = delta_products
            .iter()
            .zip(&thetas)
            .map(|(p, t)| Ok(&(p / &t.pow(2)) * &d2inv))
            .collect::<Result<_, ExactError>>()?;
        let raw = jtilde.scale_cols(&weights);
        let tdiag = ExactMatrix::diagonal(params.order(), &twist_diag(&th, &basis));
        let junitary = normalized::normalize(&jtilde, &raw, &delta_products, &thetas, &constants.d2);
        Ok(Self {
            params,
            basis,
            jtilde,
            raw,
            junitary,
            tdiag,
            constants,
            delta_products,
            thetas,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn twist(&self) -> Vec<CycNumber> {
        self.tdiag.diag()
    }

    /// All relation checks; unitarity only where the form is positive.
    pub fn verify(&self) -> Result<Vec<RelationReport>, Genus2Error> {
        let m = &self.raw;
        let n = self.dim();
        let t = self.twist();
        let m2 = m.mul(m)?;
        let involution = m2.scalar_mismatch(&CycNumber::one(self.params.order()));
        let c = self.constants.kappa2.pow(2);
        let x = m.scale_rows(&t);
        let x2 = x.mul(&x)?;
        let five = if involution.is_none() {
            // X⁵ = c·I  ⟺  X⁴ = c·M𝒯⁻¹ when M² = I.
            let tinv: Vec<CycNumber> = t.iter().map(CycNumber::conj_inv).collect();
            let rhs = m.scale_cols(&tinv).scale(&c);
            crate::report::first_difference(&x2.mul(&x2)?, &rhs)
        } else {
            x2.mul(&x2)?.mul(&x)?.scalar_mismatch(&c)
        };
        let mut out = vec![
            RelationReport::from_witness("J^2 = I", involution),
            RelationReport::from_witness("(TJ)^5 = (P+/P-)^2 I", five),
            RelationReport::from_witness("J symmetric", self.jtilde.symmetry_mismatch()),
        ];
        if let JUnitary::Normalized(nj) = &self.junitary {
            out.push(RelationReport::from_witness(
                "J unitary",
                self.unitarity_mismatch()?,
            ));
            out.push(RelationReport::flag("J real", nj.is_real()));
            out.push(RelationReport::from_witness(
                "first row law J(000,mu)^2 = P_mu / D^4",
                self.first_row_mismatch(nj),
            ));
        }
        let normal = m.get(0, 0) == &self.constants.d2.inv()?;
        out.push(RelationReport::flag("normalization J(000,000) = 1/D^2", n > 0 && normal));
        Ok(out)
    }

    /// `J̃·diag(P/Θ²)·J̃† = D⁴·diag(Θ²/P)`, the same as `𝒥𝒥† = I` with `√P/Θ` factored out.
    pub fn unitarity_mismatch(&self) -> Result<Option<(usize, usize)>, Genus2Error> {
        let d2 = &self.constants.d2;
        let lhs = self.raw.mul(&self.jtilde.conj_transpose())?;
        let rhs: Vec<CycNumber> = self
            .delta_products
            .iter()
            .zip(&self.thetas)
            .map(|(p, t)| Ok(&(&t.pow(2) / p) * d2))
            .collect::<Result<_, ExactError>>()?;
        Ok(crate::report::first_difference(
            &lhs,
            &ExactMatrix::diagonal(self.params.order(), &rhs),
        ))
    }

    fn first_row_mismatch(&self, nj: &NormalizedJ) -> Option<(usize, usize)> {
        let d4 = self.constants.d2.pow(2);
        (0..self.dim()).find_map(|mu| {
            let want = &self.delta_products[0] * &self.delta_products[mu] / d4.clone();
            (nj.get(0, mu).square() != want).then_some((0, mu))
        })
    }

    /// Largest `|(𝒥𝒥† − I)_{σμ}|` computed in floating point.
    pub fn numeric_unitarity_error(&self) -> Option<f64> {
        let JUnitary::Normalized(nj) = &self.junitary else {
            return None;
        };
        let m = nj.to_complex();
        let n = self.dim();
        let mut worst = 0f64;
        for i in 0..n {
            for j in 0..n {
                let s: Complex64 = (0..n).map(|k| m[i][k] * m[j][k].conj()).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((s - want).norm());
            }
        }
        Some(worst)
    }
}

pub fn verify_genus2_relations(params: TheoryParams) -> Result<Vec<RelationReport>, Genus2Error> {
    Genus2Rep::new(params)?.verify()
}

/// `𝒥` at `params`, or the non-normalized variant when the form is not positive.
pub fn j_unitary(params: TheoryParams) -> Result<JUnitary, Genus2Error> {
    Ok(Genus2Rep::new(params)?.junitary)
}
