use num_complex::Complex64;
use serde::Serialize;

use super::{Genus2Error, Genus2Rep};
use crate::exactnum::{
    char_poly, cyclotomic_poly, euler_phi, gcd_i64, is_cyclotomic, CycNumber, CycPoly,
    ExactMatrix, IntPolynomial, QPoly,
};
use crate::recoupling::{verlinde_dim, TheoryParams};

/// Largest `dim · φ(N)` for which the characteristic-polynomial route is attempted.
const MINPOLY_BUDGET: usize = 240;

impl Genus2Rep {
    /// `Y = M𝒯M𝒯⁻¹`, conjugate to `𝒥𝒯𝒥𝒯⁻¹`.
    pub fn jtjt(&self) -> Result<ExactMatrix, Genus2Error> {
        let t = self.twist();
        let tinv: Vec<CycNumber> = t.iter().map(CycNumber::conj_inv).collect();
        let right = self.raw.scale_rows(&t).scale_cols(&tinv);
        Ok(self.raw.mul(&right)?)
    }

    /// `Σ_{σ,μ} θ_{i₁}θ_{j₁}θ_{i₂}⁻¹θ_{j₂}⁻¹ 𝒥_{σμ}𝒥_{μσ}`. The square-root factors of
    /// `𝒥` cancel in each product, so `M` may stand in for `𝒥`.
    pub fn trace_double_sum(&self) -> CycNumber {
        let t = self.twist();
        let tinv: Vec<CycNumber> = t.iter().map(CycNumber::conj_inv).collect();
        let n = self.dim();
        let m = &self.raw;
        (0..n)
            .map(|s| {
                let inner: CycNumber = (0..n)
                    .filter(|&mu| !m.get(s, mu).is_zero())
                    .map(|mu| &(m.get(s, mu) * m.get(mu, s)) * &tinv[mu])
                    .sum();
                &inner * &t[s]
            })
            .sum()
    }

    pub fn trace_matrix(&self) -> Result<CycNumber, Genus2Error> {
        Ok(self.jtjt()?.trace())
    }
}

/// `tr(𝒥𝒯𝒥𝒯⁻¹)` by the double sum.
pub fn trace_jtjt(params: TheoryParams) -> Result<CycNumber, Genus2Error> {
    Ok(Genus2Rep::new(params)?.trace_double_sum())
}

fn units(order: u32) -> Vec<i64> {
    let n = order as i64;
    (1..n).filter(|&a| gcd_i64(a, n) == 1).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct TraceRow {
    pub level: u32,
    pub order: u32,
    pub root: i64,
    pub dim: u64,
    pub trace: CycNumber,
    /// Value at `A = ζ_N^root`.
    pub value: Complex64,
    /// `(k, value at A = ζ_N^k)` for every Galois conjugate.
    pub conjugates: Vec<(i64, Complex64)>,
    pub exceeds_dim: bool,
}

/// Traces at `A = e^{iπ/(r+2)}`, i.e. `N = 2(r+2)`, `k = 1`, with all conjugates.
pub fn trace_table(levels: &[u32]) -> Result<Vec<TraceRow>, Genus2Error> {
    levels
        .iter()
        .map(|&r| {
            let p = r + 2;
            let params = TheoryParams::with_order_root(r, 2 * p, 1)?;
            let rep = Genus2Rep::new(params)?;
            let trace = rep.trace_double_sum();
            let dim = verlinde_dim(r, 2)?;
            let value = trace.embed();
            let conjugates = units(params.order())
                .into_iter()
                .map(|a| (a, trace.galois(a).embed()))
                .collect();
            Ok(TraceRow {
                level: r,
                order: params.order(),
                root: 1,
                dim,
                exceeds_dim: value.norm() > dim as f64,
                trace,
                value,
                conjugates,
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ImageVerdict {
    Infinite,
    Inconclusive,
}

/// `|σ(tr Y)| > d_r(2)` for some Galois conjugate σ. A matrix of finite projective
/// order has eigenvalues of equal modulus one up to a common scalar, so its trace is
/// bounded by the dimension in every conjugate.
#[derive(Clone, Debug, Serialize)]
pub struct TraceCertificate {
    pub trace: Complex64,
    pub dim: u64,
    pub best_root: i64,
    pub best_abs: f64,
    pub fires: bool,
}

/// Non-cyclotomic factor of the characteristic polynomial of `Y`.
#[derive(Clone, Debug, Serialize)]
pub struct MinPolyCertificate {
    /// Squarefree part of `N_{ℚ(ζ_N)/ℚ}(χ_Y)` after removing every cyclotomic factor.
    #[serde(serialize_with = "ser_display")]
    pub factor: QPoly,
    pub integral: Option<IntPolynomial>,
    /// Whether `factor` divides the characteristic polynomial of `Y` viewed as a
    /// ℚ-linear map, which is `N(χ_Y)`.
    pub divides: bool,
    /// Whether `factor` divides `χ_Y` itself over ℚ(ζ_N).
    pub divides_over_field: bool,
    /// Degree of `gcd(factor, χ_Y)` over ℚ(ζ_N): how many roots of `factor` are eigenvalues of `Y`.
    pub shared_degree: usize,
    pub factor_is_cyclotomic: bool,
    pub fires: bool,
}

fn ser_display<S: serde::Serializer, T: std::fmt::Display>(x: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

#[derive(Clone, Debug, Serialize)]
pub struct InfiniteImageReport {
    pub params: TheoryParams,
    pub verdict: ImageVerdict,
    pub trace: TraceCertificate,
    /// Absent when `dim · φ(N)` is too large for the exact route.
    pub minpoly: Option<MinPolyCertificate>,
}

fn strip_cyclotomic(mut f: QPoly) -> QPoly {
    let mut m = 1u64;
    loop {
        let deg = f.degree().unwrap_or(0) as u64;
        if deg == 0 || m > 2 * deg * deg + 2 {
            return f;
        }
        if euler_phi(m) <= deg {
            let phi_m = QPoly::from_int(&cyclotomic_poly(m));
            loop {
                let (q, r) = f.div_rem(&phi_m);
                if !r.is_zero() {
                    break;
                }
                f = q;
            }
        }
        m += 1;
    }
}

/// Checks a given factor against `Y`: division of `N(χ_Y)`, division of `χ_Y`, and the
/// degree of the common factor over ℚ(ζ_N).
pub fn factor_against(y: &ExactMatrix, factor: &QPoly) -> Result<(bool, bool, usize), Genus2Error> {
    let chi = char_poly(y)?;
    let over_q = chi.norm().div_rem(factor).1.is_zero();
    let f = CycPoly::from_qpoly(y.order(), &factor.monic());
    let over_field = chi.divides(&f)?;
    Ok((over_q, over_field, chi.gcd(&f).degree().unwrap_or(0)))
}

fn minpoly_certificate(y: &ExactMatrix) -> Result<MinPolyCertificate, Genus2Error> {
    let chi = char_poly(y)?;
    let norm = chi.norm();
    let residual = strip_cyclotomic(norm.clone());
    let sqf = residual.div_rem(&residual.gcd(&residual.derivative())).0.monic();
    let integral = sqf.to_int();
    let nontrivial = sqf.degree().unwrap_or(0) > 0;
    let f = CycPoly::from_qpoly(y.order(), &sqf);
    let divides = nontrivial && norm.div_rem(&sqf).1.is_zero();
    let divides_over_field = nontrivial && chi.divides(&f)?;
    let shared_degree = if nontrivial { chi.gcd(&f).degree().unwrap_or(0) } else { 0 };
    let factor_is_cyclotomic = match &integral {
        Some(p) if nontrivial => is_cyclotomic(p)?,
        _ => false,
    };
    Ok(MinPolyCertificate {
        fires: nontrivial && !factor_is_cyclotomic,
        factor: sqf,
        integral,
        divides,
        divides_over_field,
        shared_degree,
        factor_is_cyclotomic,
    })
}

pub fn infinite_image_certificate(params: TheoryParams) -> Result<InfiniteImageReport, Genus2Error> {
    let rep = Genus2Rep::new(params)?;
    let tr = rep.trace_double_sum();
    let dim = verlinde_dim(params.level(), 2)?;
    let (best_root, best_abs) = units(params.order())
        .into_iter()
        .map(|a| ((a * params.root()).rem_euclid(params.order() as i64), tr.galois(a).embed().norm()))
        .fold((params.root(), f64::MIN), |b, c| if c.1 > b.1 { c } else { b });
    let trace = TraceCertificate {
        trace: tr.embed(),
        dim,
        best_root,
        best_abs,
        fires: best_abs > dim as f64 + 1e-9,
    };
    let phi = euler_phi(params.order() as u64) as usize;
    let minpoly = if rep.dim() * phi <= MINPOLY_BUDGET {
        Some(minpoly_certificate(&rep.jtjt()?)?)
    } else {
        None
    };
    let fires = trace.fires || minpoly.as_ref().is_some_and(|m| m.fires);
    Ok(InfiniteImageReport {
        params,
        verdict: if fires {
            ImageVerdict::Infinite
        } else {
            ImageVerdict::Inconclusive
        },
        trace,
        minpoly,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_quartic() {
        let rep = infinite_image_certificate(TheoryParams::unitary(3).unwrap()).unwrap();
        let mp = rep.minpoly.unwrap();
        assert_eq!(mp.integral.unwrap(), IntPolynomial::from_i64s(&[1, -3, 3, -3, 1]));
        assert!(mp.divides);
        // Two of the four roots are real and off the unit circle, so only a
        // quadratic factor can be shared with the unitary Y.
        assert!(!mp.divides_over_field);
        assert_eq!(mp.shared_degree, 2);
        assert!(!mp.factor_is_cyclotomic);
        assert_eq!(rep.verdict, ImageVerdict::Infinite);
    }

    #[test]
    fn ising_is_inconclusive() {
        let rep = infinite_image_certificate(TheoryParams::unitary(2).unwrap()).unwrap();
        assert_eq!(rep.verdict, ImageVerdict::Inconclusive);
    }

    #[test]
    fn double_sum_matches_matrix_trace() {
        for r in 1..=6 {
            let rep = Genus2Rep::new(TheoryParams::unitary(r).unwrap()).unwrap();
            assert_eq!(rep.trace_double_sum(), rep.trace_matrix().unwrap(), "r = {r}");
        }
    }

    #[test]
    fn small_trace_table() {
        let rows = trace_table(&[3, 5]).unwrap();
        assert!((rows[0].value.re - 4.24).abs() < 0.01, "{:?}", rows[0].value);
        assert!((rows[1].value.re - 10.54).abs() < 0.01, "{:?}", rows[1].value);
    }
}
