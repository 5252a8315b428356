//! The hierarchy input file: categories of leaves, with expert judgments at both levels.

use mbwm_core::hierarchy::{global_weights, Aggregation, Category, HierarchyError, HierarchySpec, RankedWeights};
use mbwm_core::Pcs;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::AppError;
use crate::input::PcsDocument;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CategoryDocument {
    pub name: String,
    /// Leaf names. Anything other than a string is a deeper node, which is rejected.
    pub leaves: Vec<Value>,
    #[serde(default)]
    pub experts_pcs: Vec<PcsDocument>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HierarchyDocument {
    pub categories: Vec<CategoryDocument>,
    #[serde(default)]
    pub category_experts_pcs: Vec<PcsDocument>,
    #[serde(default)]
    pub aggregation: Aggregation,
}

/// Validates one expert's system and reorders it to follow `children`.
fn aligned(doc: &PcsDocument, children: &[String], path: &str) -> Result<Pcs, AppError> {
    let pcs = doc.with_default_criteria(children).to_pcs().map_err(|e| match e {
        AppError::Pcs(source) => AppError::Hierarchy(HierarchyError::Pcs {
            path: path.to_string(),
            source,
        }),
        other => other,
    })?;
    if pcs.n() != children.len() {
        return Err(HierarchyError::CriterionCountMismatch {
            path: path.to_string(),
            expected: children.len(),
            got: pcs.n(),
        }
        .into());
    }
    let order = children
        .iter()
        .map(|child| {
            pcs.labels().iter().position(|l| l == child).ok_or_else(|| AppError::MissingEntry {
                field: path.to_string(),
                name: child.clone(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(pcs.permuted(&order)?)
}

impl HierarchyDocument {
    pub fn to_spec(&self) -> Result<HierarchySpec, AppError> {
        let names: Vec<String> = self.categories.iter().map(|c| c.name.clone()).collect();
        let mut categories = Vec::with_capacity(self.categories.len());
        for cat in &self.categories {
            let mut leaves = Vec::with_capacity(cat.leaves.len());
            for (k, leaf) in cat.leaves.iter().enumerate() {
                match leaf {
                    Value::String(s) => leaves.push(s.clone()),
                    Value::Object(_) | Value::Array(_) => {
                        return Err(HierarchyError::UnsupportedDepth {
                            path: format!("categories/{}/leaves[{k}]", cat.name),
                        }
                        .into())
                    }
                    other => {
                        return Err(AppError::Parse(format!(
                            "categories/{}/leaves[{k}]: expected a leaf name, got {other}",
                            cat.name
                        )))
                    }
                }
            }
            let experts = cat
                .experts_pcs
                .iter()
                .enumerate()
                .map(|(e, doc)| aligned(doc, &leaves, &format!("categories/{}/expert[{e}]", cat.name)))
                .collect::<Result<Vec<_>, _>>()?;
            categories.push(Category {
                name: cat.name.clone(),
                leaves,
                experts,
            });
        }
        let category_experts = self
            .category_experts_pcs
            .iter()
            .enumerate()
            .map(|(e, doc)| aligned(doc, &names, &format!("categories/expert[{e}]")))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(HierarchySpec {
            categories,
            category_experts,
            aggregation: self.aggregation,
        })
    }
}

pub fn evaluate_hierarchy(doc: &HierarchyDocument) -> Result<RankedWeights, AppError> {
    Ok(global_weights(&doc.to_spec()?)?)
}
