//! Machine-readable relation reports shared by the verification suites.

use serde::Serialize;

use crate::exactnum::ExactMatrix;

/// One checked relation: `{relation, pass, witness}` where the witness is
/// the first offending entry, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub relation: String,
    pub pass: bool,
    pub witness: Option<(usize, usize)>,
}

impl RelationReport {
    pub fn from_witness(relation: impl Into<String>, witness: Option<(usize, usize)>) -> Self {
        Self {
            relation: relation.into(),
            pass: witness.is_none(),
            witness,
        }
    }

    pub fn flag(relation: impl Into<String>, pass: bool) -> Self {
        Self {
            relation: relation.into(),
            pass,
            witness: None,
        }
    }
}

/// First entry where `lhs` and `rhs` differ.
pub fn first_difference(lhs: &ExactMatrix, rhs: &ExactMatrix) -> Option<(usize, usize)> {
    if (lhs.rows(), lhs.cols()) != (rhs.rows(), rhs.cols()) {
        return Some((lhs.rows(), lhs.cols()));
    }
    (0..lhs.rows() * lhs.cols()).find_map(|idx| {
        let (i, j) = (idx / lhs.cols(), idx % lhs.cols());
        (lhs.get(i, j) != rhs.get(i, j)).then_some((i, j))
    })
}

pub fn all_pass(reports: &[RelationReport]) -> bool {
    reports.iter().all(|r| r.pass)
}
