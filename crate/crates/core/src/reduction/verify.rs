use crate::error::{Error, Result};
use crate::ordering::AlphabetOrdering;
use crate::reduction::artifact::ReductionArtifact;
use crate::reduction::graph::{fas_from_ordering, DiGraph};
use crate::sampling::count_minimizers;

/// Measured and predicted minimizer counts of an artifact under one ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityReport {
    pub total: usize,
    /// `q (m_ba - m_ab) |F| + q m_ab |A|` for `w >= 3`, or `1 + |A| k + |F|` for `w = 2`.
    pub predicted: usize,
    pub fas_size: usize,
    /// `total - predicted`; `None` for `w = 2`, where the identity is exact.
    pub lambda: Option<i64>,
    /// `(|A| - 1, 4 |A| |T_ab|)` for `w >= 3`.
    pub lambda_bounds: Option<(i64, i64)>,
}

/// Counts the minimizers of `artifact` under `ord` and checks them against
/// the counting identity of its construction.
///
/// Fails with [`Error::IdentityViolation`] when the `w >= 3` discrepancy
/// leaves its bounds or the `w = 2` count is not exact.
pub fn verify_counting_identity(
    artifact: &ReductionArtifact,
    g: &DiGraph,
    ord: &AlphabetOrdering,
) -> Result<IdentityReport> {
    if g.num_arcs() != artifact.num_arcs || g.num_vertices() != artifact.string.sigma() {
        return Err(Error::InvalidParameter(
            "artifact was not generated from this graph".into(),
        ));
    }
    let total = count_minimizers(&artifact.string, artifact.params, ord)?;
    let fas = fas_from_ordering(g, ord)?.len();
    let arcs = g.num_arcs();

    if artifact.is_w2() {
        let predicted = 1 + arcs * artifact.params.k() + fas;
        if total != predicted {
            return Err(Error::IdentityViolation(format!(
                "w=2: counted {total} minimizers, expected 1 + {arcs}*{} + {fas} = {predicted} under {ord}",
                artifact.params.k()
            )));
        }
        return Ok(IdentityReport {
            total,
            predicted,
            fas_size: fas,
            lambda: None,
            lambda_bounds: None,
        });
    }

    let (q, counts, block_len) = match (artifact.q, artifact.counts, artifact.block_len) {
        (Some(q), Some(c), Some(l)) => (q, c, l),
        _ => {
            return Err(Error::InvalidParameter(
                "w >= 3 artifact is missing q or block counts".into(),
            ))
        }
    };
    let predicted = q * counts.gap() * fas + q * counts.m_ab * arcs;
    let lambda = total as i64 - predicted as i64;
    let bounds = (arcs as i64 - 1, (4 * arcs * block_len) as i64);
    if lambda < bounds.0 || lambda > bounds.1 {
        return Err(Error::IdentityViolation(format!(
            "discrepancy {lambda} outside [{}, {}] (total {total}, predicted {predicted}, |F| {fas}) under {ord}",
            bounds.0, bounds.1
        )));
    }
    Ok(IdentityReport {
        total,
        predicted,
        fas_size: fas,
        lambda: Some(lambda),
        lambda_bounds: Some(bounds),
    })
}
