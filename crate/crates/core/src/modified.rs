//! Consistent comparison systems and the multiplicative distance to the original judgments.

use std::ops::Deref;

use crate::error::{PcsError, Result};
use crate::pcs::{rel_eq, Pcs};

/// Relative tolerance used when accepting a system as consistent.
pub const CONSISTENCY_RTOL: f64 = 1e-9;

/// Multiplicative distance max{x/y, y/x}.
pub fn g_distance(x: f64, y: f64) -> f64 {
    (x / y).max(y / x)
}

/// A comparison system satisfying ã_bi · ã_iw = ã_bw for every non-reference criterion.
#[derive(Debug, Clone, PartialEq)]
pub struct ModifiedPcs(Pcs);

impl ModifiedPcs {
    /// Wraps `pcs` after checking consistency at [`CONSISTENCY_RTOL`].
    pub fn new(pcs: Pcs) -> Result<Self> {
        check_consistent(&pcs, CONSISTENCY_RTOL)?;
        Ok(Self(pcs))
    }

    /// Builds a system with the same shape and labels as `like` from the given
    /// best-to-other entries; the other-to-worst entries are completed as ã_bw / ã_bi.
    pub fn complete_from_best_to_other(like: &Pcs, a_bw: f64, best_to_other: &[f64]) -> Result<Self> {
        let mut bo = best_to_other.to_vec();
        bo[like.best()] = 1.0;
        bo[like.worst()] = a_bw;
        let ow = (0..like.n())
            .map(|i| if i == like.worst() { 1.0 } else { a_bw / bo[i] })
            .collect();
        Self::new(Pcs::new(like.labels().to_vec(), like.best(), like.worst(), bo, ow)?)
    }

    pub(crate) fn new_unchecked(pcs: Pcs) -> Self {
        Self(pcs)
    }

    pub fn as_pcs(&self) -> &Pcs {
        &self.0
    }

    pub fn into_pcs(self) -> Pcs {
        self.0
    }

    /// Largest relative violation of ã_bi · ã_iw = ã_bw over the non-reference criteria.
    pub fn consistency_error(&self) -> f64 {
        let a_bw = self.0.a_bw();
        self.0
            .others()
            .map(|i| (self.0.product(i) - a_bw).abs() / a_bw)
            .fold(0.0, f64::max)
    }

    /// Per-criterion deviation from `original`:
    /// max{d(a_bj, ã_bj), d(a_jw, ã_jw)} with the reference diagonal entries equal to 1,
    /// so for the best and worst criteria this reduces to d(a_bw, ã_bw).
    pub fn deviations_from(&self, original: &Pcs) -> Vec<f64> {
        (0..original.n())
            .map(|j| {
                g_distance(original.a_b(j), self.0.a_b(j))
                    .max(g_distance(original.a_w(j), self.0.a_w(j)))
            })
            .collect()
    }

    /// The objective of the minimax model: the largest deviation over all judgments.
    pub fn max_deviation_from(&self, original: &Pcs) -> f64 {
        self.deviations_from(original).into_iter().fold(1.0, f64::max)
    }
}

impl Deref for ModifiedPcs {
    type Target = Pcs;

    fn deref(&self) -> &Pcs {
        &self.0
    }
}

pub(crate) fn check_consistent(pcs: &Pcs, rtol: f64) -> Result<()> {
    let a_bw = pcs.a_bw();
    for i in pcs.others() {
        let product = pcs.product(i);
        if !rel_eq(product, a_bw, rtol) {
            return Err(PcsError::NotConsistent {
                index: i,
                product,
                a_bw,
            });
        }
    }
    Ok(())
}
