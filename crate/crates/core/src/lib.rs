//! Exact Temperley–Lieb–Jones recoupling data and the projective Hecke-group
//! representations it induces on genus-1 and genus-2 TQFT spaces.

pub mod cli;
pub mod exactnum;
pub mod recoupling;
pub mod rep_genus1;
pub mod rep_genus2;
pub mod report;
pub mod sl2_hecke;
pub mod spin;
