//! Temperley–Lieb–Jones recoupling theory at level `r`.

mod constants;
mod dump;
mod params;
pub mod qexpr;
mod theory;

pub use constants::{color_count, verlinde_dim, GlobalConstants};
pub use dump::coefficient_tables;
pub use params::{admissible, color_set, AdmissibleTriple, TheoryParams, TwistConvention};
pub use qexpr::QExpr;
pub use theory::{qfact, qint, Recoupling, CACHE_SIZE_ENV};

use crate::exactnum::ExactError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RecouplingError {
    #[error("triple {0:?} is not admissible")]
    NotAdmissible(Vec<u32>),
    #[error("{0} is not a color at this level")]
    NotColor(u32),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("expected an integer, got {0}")]
    NotInteger(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
