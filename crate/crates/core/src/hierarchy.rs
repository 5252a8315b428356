//! Two-level weighting: categories, leaves within each category, several experts.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::PcsError;
use crate::pcs::Pcs;
use crate::weights::{best_weight_set, WeightSet};

/// Global weights closer than this share a rank.
pub const RANK_TIE_ATOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HierarchyError {
    #[error("no weight sets to aggregate")]
    Empty,
    #[error("weight set {index} has {got} entries, expected {expected}")]
    LengthMismatch {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("{path}: {source}")]
    Pcs {
        path: String,
        #[source]
        source: PcsError,
    },
    #[error("{path}: comparison system has {got} criteria but the node has {expected} children")]
    CriterionCountMismatch {
        path: String,
        expected: usize,
        got: usize,
    },
    #[error("{path}: {got} expert comparison systems, expected {expected}")]
    ExpertCountMismatch {
        path: String,
        expected: usize,
        got: usize,
    },
    #[error("no expert judgments anywhere in the hierarchy")]
    NoExperts,
    #[error("{path}: nodes deeper than category -> leaf are not supported")]
    UnsupportedDepth { path: String },
    #[error("{path}: node has no children")]
    EmptyNode { path: String },
}

impl HierarchyError {
    pub fn code(&self) -> &'static str {
        match self {
            HierarchyError::Empty | HierarchyError::NoExperts => "NO_EXPERTS",
            HierarchyError::LengthMismatch { .. } => "LENGTH_MISMATCH",
            HierarchyError::Pcs { source, .. } => source.code(),
            HierarchyError::CriterionCountMismatch { .. } => "CRITERION_COUNT_MISMATCH",
            HierarchyError::ExpertCountMismatch { .. } => "EXPERT_COUNT_MISMATCH",
            HierarchyError::UnsupportedDepth { .. } => "UNSUPPORTED_DEPTH",
            HierarchyError::EmptyNode { .. } => "EMPTY_NODE",
        }
    }
}

/// How expert weight sets for the same node are combined.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Aggregation {
    #[default]
    Arithmetic,
    Geometric,
}

/// Per-criterion mean of the expert weight sets, renormalised to sum 1.
pub fn aggregate_experts(weight_sets: &[WeightSet], aggregation: Aggregation) -> Result<WeightSet, HierarchyError> {
    let first = weight_sets.first().ok_or(HierarchyError::Empty)?;
    let n = first.len();
    if let Some((index, ws)) = weight_sets.iter().enumerate().find(|(_, ws)| ws.len() != n) {
        return Err(HierarchyError::LengthMismatch {
            index,
            expected: n,
            got: ws.len(),
        });
    }
    let k = weight_sets.len() as f64;
    let combined = (0..n)
        .map(|i| match aggregation {
            Aggregation::Arithmetic => weight_sets.iter().map(|ws| ws[i]).sum::<f64>() / k,
            Aggregation::Geometric => (weight_sets.iter().map(|ws| ws[i].ln()).sum::<f64>() / k).exp(),
        })
        .collect();
    Ok(WeightSet::normalized(combined).expect("means of positive weights are positive"))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Category {
    pub name: String,
    pub leaves: Vec<String>,
    /// One comparison system per expert over `leaves`. Empty for a single-leaf category.
    pub experts: Vec<Pcs>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct HierarchySpec {
    pub categories: Vec<Category>,
    /// One comparison system per expert over the categories. Empty when there is one category.
    pub category_experts: Vec<Pcs>,
    pub aggregation: Aggregation,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedLeaf {
    pub category: String,
    pub leaf: String,
    pub local_weight: f64,
    pub global_weight: f64,
    /// Dense rank, 1 = largest global weight.
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CategoryWeight {
    pub category: String,
    pub weight: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedWeights {
    pub categories: Vec<CategoryWeight>,
    pub leaves: Vec<RankedLeaf>,
}

impl RankedWeights {
    pub fn global_sum(&self) -> f64 {
        self.leaves.iter().map(|l| l.global_weight).sum()
    }
}

fn node_weights(
    path: &str,
    children: usize,
    experts: &[Pcs],
    expected_experts: usize,
    aggregation: Aggregation,
) -> Result<WeightSet, HierarchyError> {
    if children == 0 {
        return Err(HierarchyError::EmptyNode { path: path.to_string() });
    }
    if children == 1 {
        if !experts.is_empty() {
            return Err(HierarchyError::ExpertCountMismatch {
                path: path.to_string(),
                expected: 0,
                got: experts.len(),
            });
        }
        return Ok(WeightSet::normalized(vec![1.0]).unwrap());
    }
    if experts.len() != expected_experts {
        return Err(HierarchyError::ExpertCountMismatch {
            path: path.to_string(),
            expected: expected_experts,
            got: experts.len(),
        });
    }
    let sets = experts
        .iter()
        .enumerate()
        .map(|(e, pcs)| {
            if pcs.n() != children {
                return Err(HierarchyError::CriterionCountMismatch {
                    path: format!("{path}/expert[{e}]"),
                    expected: children,
                    got: pcs.n(),
                });
            }
            Ok(best_weight_set(pcs))
        })
        .collect::<Result<Vec<_>, _>>()?;
    aggregate_experts(&sets, aggregation)
}

/// Dense ranks by descending value; values within [`RANK_TIE_ATOL`] share a rank.
pub fn dense_ranks(values: &[f64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));
    let mut ranks = vec![0; values.len()];
    let mut rank = 0;
    let mut prev: Option<f64> = None;
    for &i in &order {
        if prev.is_none_or(|p| p - values[i] > RANK_TIE_ATOL) {
            rank += 1;
            prev = Some(values[i]);
        }
        ranks[i] = rank;
    }
    ranks
}

/// Best weight sets at every node, averaged over experts, multiplied down to the leaves.
pub fn global_weights(spec: &HierarchySpec) -> Result<RankedWeights, HierarchyError> {
    let expected = spec
        .categories
        .iter()
        .filter(|c| c.leaves.len() > 1)
        .map(|c| c.experts.len())
        .chain((spec.categories.len() > 1).then_some(spec.category_experts.len()))
        .max()
        .unwrap_or(0);
    let needs_judgments =
        spec.categories.len() > 1 || spec.categories.iter().any(|c| c.leaves.len() > 1);
    if expected == 0 && needs_judgments {
        return Err(HierarchyError::NoExperts);
    }

    let category_weights = node_weights(
        "categories",
        spec.categories.len(),
        &spec.category_experts,
        expected,
        spec.aggregation,
    )?;

    let mut leaves = Vec::new();
    for (c, category) in spec.categories.iter().enumerate() {
        let local = node_weights(
            &format!("categories/{}", category.name),
            category.leaves.len(),
            &category.experts,
            expected,
            spec.aggregation,
        )?;
        for (l, leaf) in category.leaves.iter().enumerate() {
            leaves.push(RankedLeaf {
                category: category.name.clone(),
                leaf: leaf.clone(),
                local_weight: local[l],
                global_weight: category_weights[c] * local[l],
                rank: 0,
            });
        }
    }
    let globals: Vec<f64> = leaves.iter().map(|l| l.global_weight).collect();
    for (leaf, rank) in leaves.iter_mut().zip(dense_ranks(&globals)) {
        leaf.rank = rank;
    }

    Ok(RankedWeights {
        categories: spec
            .categories
            .iter()
            .enumerate()
            .map(|(c, cat)| CategoryWeight {
                category: cat.name.clone(),
                weight: category_weights[c],
            })
            .collect(),
        leaves,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(v: &[f64]) -> WeightSet {
        WeightSet::normalized(v.to_vec()).unwrap()
    }

    #[test]
    fn arithmetic_mean_of_two() {
        let agg = aggregate_experts(&[ws(&[0.5, 0.5]), ws(&[0.3, 0.7])], Aggregation::Arithmetic).unwrap();
        assert!((agg[0] - 0.4).abs() < 1e-15);
        assert!((agg[1] - 0.6).abs() < 1e-15);
    }

    #[test]
    fn single_expert_is_identity() {
        let one = ws(&[0.2, 0.3, 0.5]);
        let agg = aggregate_experts(std::slice::from_ref(&one), Aggregation::Arithmetic).unwrap();
        for i in 0..3 {
            assert!((agg[i] - one[i]).abs() < 1e-15);
        }
        let agg = aggregate_experts(std::slice::from_ref(&one), Aggregation::Geometric).unwrap();
        for i in 0..3 {
            assert!((agg[i] - one[i]).abs() < 1e-15);
        }
    }

    #[test]
    fn aggregation_errors() {
        assert_eq!(aggregate_experts(&[], Aggregation::Arithmetic).unwrap_err().code(), "NO_EXPERTS");
        let err = aggregate_experts(&[ws(&[0.5, 0.5]), ws(&[1., 1., 1.])], Aggregation::Arithmetic).unwrap_err();
        assert_eq!(err.code(), "LENGTH_MISMATCH");
    }

    #[test]
    fn dense_ranking_with_ties() {
        assert_eq!(dense_ranks(&[0.1, 0.4, 0.4, 0.1 + 1e-14, 0.0]), vec![2, 1, 1, 2, 3]);
        assert_eq!(dense_ranks(&[0.1, 0.3, 0.1 + 1e-9]), vec![3, 1, 2]);
        assert_eq!(dense_ranks(&[0.2, 0.2 + 1e-13]), vec![1, 1]);
    }

    #[test]
    fn single_category_global_equals_local() {
        let pcs = Pcs::from_one_based(2, 5, &[2., 1., 5., 3., 8.], &[4., 8., 3., 3., 1.]).unwrap();
        let spec = HierarchySpec {
            categories: vec![Category {
                name: "all".into(),
                leaves: pcs.labels().to_vec(),
                experts: vec![pcs.clone()],
            }],
            category_experts: vec![],
            aggregation: Aggregation::Arithmetic,
        };
        let ranked = global_weights(&spec).unwrap();
        let best = best_weight_set(&pcs);
        for (i, leaf) in ranked.leaves.iter().enumerate() {
            assert!((leaf.global_weight - best[i]).abs() < 1e-15);
            assert!((leaf.local_weight - best[i]).abs() < 1e-15);
        }
        assert_eq!(ranked.leaves[1].rank, 1);
    }

    #[test]
    fn expert_count_must_match() {
        let p2 = Pcs::from_one_based(1, 2, &[1., 2.], &[2., 1.]).unwrap();
        let spec = HierarchySpec {
            categories: vec![
                Category { name: "a".into(), leaves: vec!["x".into(), "y".into()], experts: vec![p2.clone(), p2.clone()] },
                Category { name: "b".into(), leaves: vec!["z".into(), "u".into()], experts: vec![p2.clone()] },
            ],
            category_experts: vec![p2.clone(), p2.clone()],
            aggregation: Aggregation::Arithmetic,
        };
        assert_eq!(global_weights(&spec).unwrap_err().code(), "EXPERT_COUNT_MISMATCH");
    }

    #[test]
    fn criterion_count_must_match() {
        let p2 = Pcs::from_one_based(1, 2, &[1., 2.], &[2., 1.]).unwrap();
        let p3 = Pcs::from_one_based(1, 3, &[1., 2., 4.], &[4., 2., 1.]).unwrap();
        let spec = HierarchySpec {
            categories: vec![
                Category { name: "a".into(), leaves: vec!["x".into(), "y".into()], experts: vec![p3] },
                Category { name: "b".into(), leaves: vec!["z".into()], experts: vec![] },
            ],
            category_experts: vec![p2],
            aggregation: Aggregation::Arithmetic,
        };
        let err = global_weights(&spec).unwrap_err();
        assert_eq!(err.code(), "CRITERION_COUNT_MISMATCH");
        assert!(err.to_string().contains("categories/a"));
    }
}
