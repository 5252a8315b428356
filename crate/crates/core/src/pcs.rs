//! The validated pairwise comparison system (best-to-others and others-to-worst vectors).

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{PcsError, Result};

/// Lower end of the conventional 1/9 to 9 judgment scale.
pub const SCALE_MIN: f64 = 1.0 / 9.0;
/// Upper end of the conventional 1/9 to 9 judgment scale.
pub const SCALE_MAX: f64 = 9.0;

/// Relative tolerance for the structural equalities checked at validation
/// (reference diagonal entries and the shared best-vs-worst value).
const STRUCTURAL_RTOL: f64 = 1e-12;

pub(crate) fn rel_eq(a: f64, b: f64, rtol: f64) -> bool {
    (a - b).abs() <= rtol * a.abs().max(b.abs())
}

/// Unvalidated input, as it arrives from a file or a request.
///
/// Empty `labels` are filled with `c1..cn`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RawPcs {
    #[serde(default)]
    pub labels: Vec<String>,
    pub best: usize,
    pub worst: usize,
    pub best_to_other: Vec<f64>,
    pub other_to_worst: Vec<f64>,
}

/// Which vector an entry lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Vector {
    BestToOther,
    OtherToWorst,
}

impl Vector {
    pub fn name(self) -> &'static str {
        match self {
            Vector::BestToOther => "best_to_other",
            Vector::OtherToWorst => "other_to_worst",
        }
    }
}

/// A judgment outside [1/9, 9]. Accepted, but worth surfacing to the decision maker.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScaleWarning {
    pub vector: Vector,
    pub index: usize,
    pub label: String,
    pub value: f64,
}

impl std::fmt::Display for ScaleWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}[{}] = {} is outside the 1/9..9 scale",
            self.vector.name(),
            self.label,
            self.value
        )
    }
}

/// A validated pairwise comparison system.
///
/// Invariants: `n >= 2`, `best != worst`, every entry positive and finite,
/// `best_to_other[best] == 1`, `other_to_worst[worst] == 1` and
/// `best_to_other[worst] == other_to_worst[best]` (that shared value is `a_bw`).
#[derive(Debug, Clone, PartialEq)]
pub struct Pcs {
    labels: Vec<String>,
    best: usize,
    worst: usize,
    best_to_other: Vec<f64>,
    other_to_worst: Vec<f64>,
}

impl Pcs {
    pub fn new(
        labels: Vec<String>,
        best: usize,
        worst: usize,
        best_to_other: Vec<f64>,
        other_to_worst: Vec<f64>,
    ) -> Result<Self> {
        let n = best_to_other.len();
        if n < 2 {
            return Err(PcsError::BadLength(format!(
                "at least 2 criteria are required, got {n}"
            )));
        }
        if other_to_worst.len() != n {
            return Err(PcsError::BadLength(format!(
                "best_to_other has {n} entries but other_to_worst has {}",
                other_to_worst.len()
            )));
        }
        let labels = if labels.is_empty() {
            (1..=n).map(|i| format!("c{i}")).collect()
        } else if labels.len() != n {
            return Err(PcsError::BadLength(format!(
                "{} labels for {n} criteria",
                labels.len()
            )));
        } else {
            labels
        };
        let mut seen = HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(PcsError::DuplicateLabel(label.clone()));
            }
        }
        for index in [best, worst] {
            if index >= n {
                return Err(PcsError::IndexOutOfRange { index, n });
            }
        }
        if best == worst {
            return Err(PcsError::BestEqualsWorst(best));
        }
        for (vector, values) in [
            (Vector::BestToOther, &best_to_other),
            (Vector::OtherToWorst, &other_to_worst),
        ] {
            if let Some((index, &value)) = values
                .iter()
                .enumerate()
                .find(|(_, v)| !(v.is_finite() && **v > 0.0))
            {
                return Err(PcsError::NonpositiveEntry {
                    vector: vector.name(),
                    index,
                    value,
                });
            }
        }
        if !rel_eq(best_to_other[best], 1.0, STRUCTURAL_RTOL) {
            return Err(PcsError::DiagonalNotOne {
                vector: "best_to_other",
                index: best,
                value: best_to_other[best],
            });
        }
        if !rel_eq(other_to_worst[worst], 1.0, STRUCTURAL_RTOL) {
            return Err(PcsError::DiagonalNotOne {
                vector: "other_to_worst",
                index: worst,
                value: other_to_worst[worst],
            });
        }
        if !rel_eq(best_to_other[worst], other_to_worst[best], STRUCTURAL_RTOL) {
            return Err(PcsError::CrossMismatch {
                best_to_other: best_to_other[worst],
                other_to_worst: other_to_worst[best],
            });
        }

        let mut best_to_other = best_to_other;
        let mut other_to_worst = other_to_worst;
        best_to_other[best] = 1.0;
        other_to_worst[worst] = 1.0;
        other_to_worst[best] = best_to_other[worst];

        Ok(Self {
            labels,
            best,
            worst,
            best_to_other,
            other_to_worst,
        })
    }

    /// Builds a system from 1-based reference positions, the way comparison
    /// systems are usually written down by hand.
    pub fn from_one_based(
        best: usize,
        worst: usize,
        best_to_other: &[f64],
        other_to_worst: &[f64],
    ) -> Result<Self> {
        let n = best_to_other.len();
        let to_zero = |i: usize| {
            i.checked_sub(1)
                .ok_or(PcsError::IndexOutOfRange { index: i, n })
        };
        Self::new(
            Vec::new(),
            to_zero(best)?,
            to_zero(worst)?,
            best_to_other.to_vec(),
            other_to_worst.to_vec(),
        )
    }

    pub fn n(&self) -> usize {
        self.best_to_other.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn best(&self) -> usize {
        self.best
    }

    pub fn worst(&self) -> usize {
        self.worst
    }

    pub fn best_to_other(&self) -> &[f64] {
        &self.best_to_other
    }

    pub fn other_to_worst(&self) -> &[f64] {
        &self.other_to_worst
    }

    /// a_bi
    pub fn a_b(&self, i: usize) -> f64 {
        self.best_to_other[i]
    }

    /// a_iw
    pub fn a_w(&self, i: usize) -> f64 {
        self.other_to_worst[i]
    }

    /// The best-over-worst judgment a_bw.
    pub fn a_bw(&self) -> f64 {
        self.best_to_other[self.worst]
    }

    pub fn is_reference(&self, i: usize) -> bool {
        i == self.best || i == self.worst
    }

    /// Indices of the non-reference criteria, in ascending order.
    pub fn others(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&i| !self.is_reference(i))
    }

    /// a_bi * a_iw; equals a_bw for every non-reference criterion of a consistent system.
    pub fn product(&self, i: usize) -> f64 {
        self.best_to_other[i] * self.other_to_worst[i]
    }

    /// Entries outside the 1/9..9 scale. Reference diagonal entries are never reported.
    pub fn scale_warnings(&self) -> Vec<ScaleWarning> {
        let mut warnings = Vec::new();
        for (vector, values) in [
            (Vector::BestToOther, &self.best_to_other),
            (Vector::OtherToWorst, &self.other_to_worst),
        ] {
            for (index, &value) in values.iter().enumerate() {
                if !(SCALE_MIN * (1.0 - 1e-12)..=SCALE_MAX * (1.0 + 1e-12)).contains(&value) {
                    warnings.push(ScaleWarning {
                        vector,
                        index,
                        label: self.labels[index].clone(),
                        value,
                    });
                }
            }
        }
        warnings
    }

    /// Returns the system with criterion `i` dropped, or `None` if `i` is a
    /// reference criterion or only the two references would remain.
    pub fn without_criterion(&self, i: usize) -> Option<Pcs> {
        if self.is_reference(i) || i >= self.n() || self.n() <= 2 {
            return None;
        }
        let keep = |v: &[f64]| {
            v.iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &x)| x)
                .collect::<Vec<_>>()
        };
        let shift = |k: usize| if k > i { k - 1 } else { k };
        let labels = self
            .labels
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, l)| l.clone())
            .collect();
        Pcs::new(
            labels,
            shift(self.best),
            shift(self.worst),
            keep(&self.best_to_other),
            keep(&self.other_to_worst),
        )
        .ok()
    }

    /// Reorders criteria so that new position `k` holds old criterion `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> Result<Pcs> {
        let n = self.n();
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&k| k >= n || std::mem::replace(&mut seen[k], true)) {
            return Err(PcsError::BadLength("order is not a permutation".into()));
        }
        let position = |old: usize| order.iter().position(|&k| k == old).unwrap();
        Pcs::new(
            order.iter().map(|&k| self.labels[k].clone()).collect(),
            position(self.best),
            position(self.worst),
            order.iter().map(|&k| self.best_to_other[k]).collect(),
            order.iter().map(|&k| self.other_to_worst[k]).collect(),
        )
    }

    pub fn to_raw(&self) -> RawPcs {
        RawPcs {
            labels: self.labels.clone(),
            best: self.best,
            worst: self.worst,
            best_to_other: self.best_to_other.clone(),
            other_to_worst: self.other_to_worst.clone(),
        }
    }
}

impl TryFrom<RawPcs> for Pcs {
    type Error = PcsError;

    fn try_from(raw: RawPcs) -> Result<Self> {
        Pcs::new(
            raw.labels,
            raw.best,
            raw.worst,
            raw.best_to_other,
            raw.other_to_worst,
        )
    }
}

/// Validates a raw comparison system. Scale warnings are available afterwards
/// from [`Pcs::scale_warnings`]; they never fail validation.
pub fn validate_pcs(raw: RawPcs) -> Result<Pcs> {
    Pcs::try_from(raw)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example1() -> Pcs {
        Pcs::from_one_based(2, 5, &[2., 1., 5., 3., 8.], &[4., 8., 3., 3., 1.]).unwrap()
    }

    #[test]
    fn accepts_example_one() {
        let pcs = example1();
        assert_eq!(pcs.n(), 5);
        assert_eq!(pcs.best(), 1);
        assert_eq!(pcs.worst(), 4);
        assert_eq!(pcs.a_bw(), 8.0);
        assert_eq!(pcs.others().collect::<Vec<_>>(), vec![0, 2, 3]);
        assert!(pcs.scale_warnings().is_empty());
        assert_eq!(pcs.labels()[1], "c2");
    }

    #[test]
    fn rejects_bad_diagonal() {
        let err = Pcs::from_one_based(2, 5, &[2., 2., 5., 3., 8.], &[4., 8., 3., 3., 1.]).unwrap_err();
        assert_eq!(err.code(), "DIAGONAL_NOT_ONE");
        let err = Pcs::from_one_based(2, 5, &[2., 1., 5., 3., 8.], &[4., 8., 3., 3., 2.]).unwrap_err();
        assert_eq!(err.code(), "DIAGONAL_NOT_ONE");
    }

    #[test]
    fn rejects_cross_mismatch() {
        let err = Pcs::from_one_based(2, 5, &[2., 1., 5., 3., 8.], &[4., 9., 3., 3., 1.]).unwrap_err();
        assert_eq!(err.code(), "CROSS_MISMATCH");
    }

    #[test]
    fn rejects_nonpositive_and_nonfinite() {
        for bad in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            let err = Pcs::from_one_based(2, 5, &[bad, 1., 5., 3., 8.], &[4., 8., 3., 3., 1.]).unwrap_err();
            assert_eq!(err.code(), "NONPOSITIVE_ENTRY");
        }
    }

    #[test]
    fn rejects_structural_problems() {
        let err = Pcs::from_one_based(2, 2, &[2., 1., 5.], &[4., 1., 3.]).unwrap_err();
        assert_eq!(err.code(), "BEST_EQUALS_WORST");
        let err = Pcs::from_one_based(1, 2, &[1., 2.], &[2., 1., 3.]).unwrap_err();
        assert_eq!(err.code(), "BAD_LENGTH");
        let err = Pcs::from_one_based(1, 1, &[1.], &[1.]).unwrap_err();
        assert_eq!(err.code(), "BAD_LENGTH");
        let err = Pcs::from_one_based(1, 7, &[1., 2.], &[2., 1.]).unwrap_err();
        assert_eq!(err.code(), "INDEX_OUT_OF_RANGE");
        let err = Pcs::new(vec!["a".into(), "a".into()], 0, 1, vec![1., 2.], vec![2., 1.]).unwrap_err();
        assert_eq!(err.code(), "DUPLICATE_LABEL");
    }

    #[test]
    fn out_of_scale_entries_warn_but_validate() {
        let pcs = Pcs::from_one_based(1, 3, &[1., 0.1, 12.], &[12., 2., 1.]).unwrap();
        let warnings = pcs.scale_warnings();
        assert_eq!(warnings.len(), 3);
        assert!(warnings.iter().any(|w| w.vector == Vector::BestToOther && w.index == 1));
    }

    #[test]
    fn drop_and_permute() {
        let pcs = example1();
        let smaller = pcs.without_criterion(3).unwrap();
        assert_eq!(smaller.n(), 4);
        assert_eq!(smaller.worst(), 3);
        assert_eq!(smaller.labels(), &["c1", "c2", "c3", "c5"]);
        assert!(pcs.without_criterion(1).is_none());

        let p = pcs.permuted(&[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(p.best(), 3);
        assert_eq!(p.worst(), 0);
        assert_eq!(p.best_to_other(), &[8., 3., 5., 1., 2.]);
        assert!(pcs.permuted(&[0, 0, 1, 2, 3]).is_err());
    }
}
