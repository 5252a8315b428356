//! Comparison systems as people write them: criteria by name, in JSON or CSV.

use std::path::Path;

use indexmap::IndexMap;
use mbwm_core::Pcs;
use serde::{Deserialize, Serialize};

use crate::error::AppError;

/// The PCS file schema. Judgments are keyed by criterion name; the
/// `criteria` array fixes the canonical order.
///
/// Three entries may be left out because they are implied: the best
/// criterion's own `best_to_other` (1), the worst criterion's own
/// `other_to_worst` (1) and `other_to_worst[best]`, which must equal
/// `best_to_other[worst]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PcsDocument {
    #[serde(default)]
    pub criteria: Vec<String>,
    pub best: String,
    pub worst: String,
    pub best_to_other: IndexMap<String, f64>,
    pub other_to_worst: IndexMap<String, f64>,
}

impl PcsDocument {
    pub fn to_pcs(&self) -> Result<Pcs, AppError> {
        let criteria = if self.criteria.is_empty() {
            let mut names: Vec<String> = Vec::new();
            let mentioned = [&self.best, &self.worst]
                .into_iter()
                .chain(self.best_to_other.keys())
                .chain(self.other_to_worst.keys());
            for name in mentioned {
                if !names.contains(name) {
                    names.push(name.clone());
                }
            }
            names
        } else {
            self.criteria.clone()
        };
        let index_of = |field: &str, name: &str| {
            criteria
                .iter()
                .position(|c| c == name)
                .ok_or_else(|| AppError::UnknownCriterion {
                    field: field.to_string(),
                    name: name.to_string(),
                })
        };
        let best = index_of("best", &self.best)?;
        let worst = index_of("worst", &self.worst)?;
        for (field, map) in [("best_to_other", &self.best_to_other), ("other_to_worst", &self.other_to_worst)] {
            for name in map.keys() {
                index_of(field, name)?;
            }
        }

        let missing = |field: &str, name: &str| AppError::MissingEntry {
            field: field.to_string(),
            name: name.to_string(),
        };
        let bo = criteria
            .iter()
            .enumerate()
            .map(|(i, name)| match self.best_to_other.get(name) {
                Some(&v) => Ok(v),
                None if i == best => Ok(1.0),
                None => Err(missing("best_to_other", name)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let ow = criteria
            .iter()
            .enumerate()
            .map(|(i, name)| match self.other_to_worst.get(name) {
                Some(&v) => Ok(v),
                None if i == worst => Ok(1.0),
                None if i == best => Ok(bo[worst]),
                None => Err(missing("other_to_worst", name)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Pcs::new(criteria, best, worst, bo, ow)?)
    }

    /// Fills in `criteria` when the document leaves it out.
    pub fn with_default_criteria(&self, criteria: &[String]) -> Self {
        let mut doc = self.clone();
        if doc.criteria.is_empty() {
            doc.criteria = criteria.to_vec();
        }
        doc
    }

    /// Canonical form: every criterion listed, every judgment explicit, criteria order throughout.
    pub fn from_pcs(pcs: &Pcs) -> Self {
        let labels = pcs.labels();
        PcsDocument {
            criteria: labels.to_vec(),
            best: pcs.label(pcs.best()).to_string(),
            worst: pcs.label(pcs.worst()).to_string(),
            best_to_other: labels.iter().cloned().zip(pcs.best_to_other().iter().copied()).collect(),
            other_to_worst: labels.iter().cloned().zip(pcs.other_to_worst().iter().copied()).collect(),
        }
    }
}

#[derive(Debug, Deserialize)]
struct CsvRow {
    criterion: String,
    best_to_other: f64,
    other_to_worst: f64,
    #[serde(default)]
    role: Option<String>,
}

/// Reads the spreadsheet form: a header `criterion,best_to_other,other_to_worst,role`
/// and one row per criterion, with `role` set to `best` on one row and `worst` on another.
pub fn parse_csv(text: &str) -> Result<PcsDocument, AppError> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());
    let mut doc = PcsDocument {
        criteria: Vec::new(),
        best: String::new(),
        worst: String::new(),
        best_to_other: IndexMap::new(),
        other_to_worst: IndexMap::new(),
    };
    for row in reader.deserialize() {
        let row: CsvRow = row?;
        match row.role.as_deref().map(str::to_ascii_lowercase).as_deref() {
            None | Some("") => {}
            Some("best") => doc.best = row.criterion.clone(),
            Some("worst") => doc.worst = row.criterion.clone(),
            Some(other) => return Err(AppError::Parse(format!("unknown role {other:?} for {}", row.criterion))),
        }
        doc.criteria.push(row.criterion.clone());
        doc.best_to_other.insert(row.criterion.clone(), row.best_to_other);
        doc.other_to_worst.insert(row.criterion, row.other_to_worst);
    }
    if doc.best.is_empty() || doc.worst.is_empty() {
        return Err(AppError::Parse("CSV input needs one row with role best and one with role worst".into()));
    }
    Ok(doc)
}

pub fn read_file(path: &Path) -> Result<String, AppError> {
    std::fs::read_to_string(path).map_err(|e| AppError::io(path.display().to_string(), e))
}

pub fn is_csv(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"))
}
