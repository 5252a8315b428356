//! Closed-form solution of the multiplicative minimax model.
//!
//! Every non-reference criterion `i` contributes the product p_i = a_bi · a_iw,
//! which equals a_bw when the system is consistent. The optimal consistency
//! level is determined by three candidate lower bounds built from the extreme
//! products:
//!
//! * ε_i   = max{p_i / a_bw, a_bw / p_i}^(1/3)
//! * ε_ij  = max{p_i / p_j,  p_j / p_i }^(1/4)
//!
//! ε* is the largest of ε_{i0}, ε_{j0} and ε_{i0,j0}, where i0 has the smallest
//! product below a_bw and j0 the largest product above it. Which one attains
//! the maximum selects the optimally modified system.

use serde::{Deserialize, Serialize};

use crate::modified::ModifiedPcs;
use crate::pcs::Pcs;

/// Absolute tolerance for deciding that two candidate bounds tie.
pub const TIE_ATOL: f64 = 1e-12;

/// Which candidate bound attains the optimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Case {
    #[serde(rename = "CONSISTENT")]
    Consistent,
    #[serde(rename = "CASE_I0")]
    I0,
    #[serde(rename = "CASE_J0")]
    J0,
    #[serde(rename = "CASE_I0J0")]
    I0J0,
}

impl Case {
    pub fn name(self) -> &'static str {
        match self {
            Case::Consistent => "CONSISTENT",
            Case::I0 => "CASE_I0",
            Case::J0 => "CASE_J0",
            Case::I0J0 => "CASE_I0J0",
        }
    }
}

impl std::fmt::Display for Case {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingleBound {
    pub index: usize,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairBound {
    pub i: usize,
    pub j: usize,
    pub value: f64,
}

/// Lower bounds and the resulting optimal consistency level of a comparison system.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    /// ε_i for every non-reference criterion, ascending index.
    pub eps_single: Vec<SingleBound>,
    /// ε_{i,j} for every unordered pair of non-reference criteria, `i < j`.
    pub eps_pair: Vec<PairBound>,
    /// Criteria whose product falls strictly below a_bw.
    pub d1: Vec<usize>,
    /// Criteria whose product lies strictly above a_bw.
    pub d2: Vec<usize>,
    pub i0: Option<usize>,
    pub j0: Option<usize>,
    pub eps_i0: Option<f64>,
    pub eps_j0: Option<f64>,
    pub eps_i0_j0: Option<f64>,
    pub case: Case,
    /// Other cases whose bound equals the optimum within [`TIE_ATOL`].
    pub ties: Vec<Case>,
    /// Optimal objective ε* (= η*).
    pub eps_star: f64,
}

impl Diagnostics {
    pub fn eps_single_of(&self, i: usize) -> Option<f64> {
        self.eps_single.iter().find(|b| b.index == i).map(|b| b.value)
    }

    pub fn eps_pair_of(&self, i: usize, j: usize) -> Option<f64> {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        self.eps_pair
            .iter()
            .find(|b| b.i == i && b.j == j)
            .map(|b| b.value)
    }

    pub fn is_consistent(&self) -> bool {
        self.case == Case::Consistent
    }
}

fn single_bound(product: f64, a_bw: f64) -> f64 {
    (product / a_bw).max(a_bw / product).cbrt()
}

fn pair_bound(p: f64, q: f64) -> f64 {
    (p / q).max(q / p).sqrt().sqrt()
}

/// Computes every ε_i and ε_{i,j}, classifies the criteria and picks the optimal case.
///
/// Ties between candidate bounds resolve in the order `CASE_I0`, `CASE_J0`,
/// `CASE_I0J0`; ties among extreme products resolve to the smallest index.
pub fn diagnostics(pcs: &Pcs) -> Diagnostics {
    let a_bw = pcs.a_bw();
    let others: Vec<usize> = pcs.others().collect();

    let eps_single: Vec<SingleBound> = others
        .iter()
        .map(|&i| SingleBound {
            index: i,
            value: single_bound(pcs.product(i), a_bw),
        })
        .collect();
    let mut eps_pair = Vec::new();
    for (k, &i) in others.iter().enumerate() {
        for &j in &others[k + 1..] {
            eps_pair.push(PairBound {
                i,
                j,
                value: pair_bound(pcs.product(i), pcs.product(j)),
            });
        }
    }

    let d1: Vec<usize> = others.iter().copied().filter(|&i| pcs.product(i) < a_bw).collect();
    let d2: Vec<usize> = others.iter().copied().filter(|&i| pcs.product(i) > a_bw).collect();
    // strict comparisons keep the first (smallest) index on ties
    let i0 = d1
        .iter()
        .copied()
        .reduce(|a, b| if pcs.product(b) < pcs.product(a) { b } else { a });
    let j0 = d2
        .iter()
        .copied()
        .reduce(|a, b| if pcs.product(b) > pcs.product(a) { b } else { a });

    let eps_i0 = i0.map(|i| single_bound(pcs.product(i), a_bw));
    let eps_j0 = j0.map(|j| single_bound(pcs.product(j), a_bw));
    let eps_i0_j0 = match (i0, j0) {
        (Some(i), Some(j)) => Some(pair_bound(pcs.product(i), pcs.product(j))),
        _ => None,
    };

    let eps_star = eps_single
        .iter()
        .map(|b| b.value)
        .chain(eps_pair.iter().map(|b| b.value))
        .fold(1.0, f64::max);

    let candidates: Vec<(Case, f64)> = [(Case::I0, eps_i0), (Case::J0, eps_j0), (Case::I0J0, eps_i0_j0)]
        .into_iter()
        .filter_map(|(case, v)| v.map(|v| (case, v)))
        .collect();
    let (case, ties) = match candidates.iter().map(|&(_, v)| v).reduce(f64::max) {
        None => (Case::Consistent, Vec::new()),
        Some(best) => {
            let mut attaining = candidates
                .iter()
                .filter(|&&(_, v)| v >= best - TIE_ATOL)
                .map(|&(c, _)| c);
            let case = attaining.next().expect("the maximum is attained");
            (case, attaining.collect())
        }
    };
    debug_assert!(
        case == Case::Consistent || {
            let v = match case {
                Case::I0 => eps_i0,
                Case::J0 => eps_j0,
                _ => eps_i0_j0,
            };
            (v.unwrap() - eps_star).abs() <= TIE_ATOL
        }
    );

    Diagnostics {
        eps_single,
        eps_pair,
        d1,
        d2,
        i0,
        j0,
        eps_i0,
        eps_j0,
        eps_i0_j0,
        case,
        ties,
        eps_star,
    }
}

/// An entry of every optimally modified system that is pinned by the optimal case.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ForcedEntry {
    pub index: usize,
    /// ã_bi
    pub best_to_other: f64,
    /// ã_iw
    pub other_to_worst: f64,
}

/// Values shared by all optimally modified systems.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FixedValues {
    /// ã_bw*, identical across every optimal solution.
    pub a_bw: f64,
    pub forced: Vec<ForcedEntry>,
}

/// ã_bw* and the forced i0 / j0 entries of the optimal case.
pub fn fixed_reference_values(pcs: &Pcs, diag: &Diagnostics) -> FixedValues {
    let eps = diag.eps_star;
    let raised = |i: usize, f: f64| ForcedEntry {
        index: i,
        best_to_other: pcs.a_b(i) * f,
        other_to_worst: pcs.a_w(i) * f,
    };
    let lowered = |i: usize, f: f64| ForcedEntry {
        index: i,
        best_to_other: pcs.a_b(i) / f,
        other_to_worst: pcs.a_w(i) / f,
    };
    match diag.case {
        Case::Consistent => FixedValues {
            a_bw: pcs.a_bw(),
            forced: Vec::new(),
        },
        Case::I0 => {
            let i0 = diag.i0.expect("CASE_I0 has i0");
            FixedValues {
                a_bw: pcs.a_bw() / eps,
                forced: vec![raised(i0, eps)],
            }
        }
        Case::J0 => {
            let j0 = diag.j0.expect("CASE_J0 has j0");
            FixedValues {
                a_bw: pcs.a_bw() * eps,
                forced: vec![lowered(j0, eps)],
            }
        }
        Case::I0J0 => {
            let i0 = diag.i0.expect("CASE_I0J0 has i0");
            let j0 = diag.j0.expect("CASE_I0J0 has j0");
            let up = raised(i0, eps);
            FixedValues {
                a_bw: up.best_to_other * up.other_to_worst,
                forced: vec![up, lowered(j0, eps)],
            }
        }
    }
}

/// Range of ã_bi over all optimally modified systems; ã_iw follows as ã_bw* / ã_bi.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryInterval {
    pub index: usize,
    pub lower: f64,
    pub upper: f64,
}

impl EntryInterval {
    pub fn is_point(&self) -> bool {
        self.lower == self.upper
    }

    pub fn contains(&self, x: f64) -> bool {
        (self.lower..=self.upper).contains(&x)
    }

    /// Range of the completed ã_iw = a_bw / ã_bi.
    pub fn other_to_worst(&self, a_bw: f64) -> (f64, f64) {
        (a_bw / self.upper, a_bw / self.lower)
    }
}

/// For every non-reference criterion, the interval
/// [max{a_bi/η*, ã_bw*/(η*·a_iw)}, min{η*·a_bi, η*·ã_bw*/a_iw}] of admissible ã_bi.
///
/// Forced entries collapse to their exact forced value. Should rounding make
/// a bound pair cross, the interval collapses to their geometric mean.
pub fn modified_pcs_intervals(pcs: &Pcs, diag: &Diagnostics) -> Vec<EntryInterval> {
    let eta = diag.eps_star;
    let fixed = fixed_reference_values(pcs, diag);
    let a_bw = fixed.a_bw;
    pcs.others()
        .map(|i| {
            if let Some(f) = fixed.forced.iter().find(|f| f.index == i) {
                return EntryInterval {
                    index: i,
                    lower: f.best_to_other,
                    upper: f.best_to_other,
                };
            }
            let lower = (pcs.a_b(i) / eta).max(a_bw / (eta * pcs.a_w(i)));
            let upper = (eta * pcs.a_b(i)).min(eta * a_bw / pcs.a_w(i));
            if lower > upper {
                let mid = (lower * upper).sqrt();
                EntryInterval {
                    index: i,
                    lower: mid,
                    upper: mid,
                }
            } else {
                EntryInterval { index: i, lower, upper }
            }
        })
        .collect()
}

/// The unique optimally modified system that also minimises every per-criterion deviation.
pub fn best_modified_pcs(pcs: &Pcs, diag: &Diagnostics) -> ModifiedPcs {
    let eps = diag.eps_star;
    let a_bw = pcs.a_bw();
    type Entry<'a> = Box<dyn Fn(usize) -> (f64, f64) + 'a>;
    let (target_bw, entry): (f64, Entry) = match diag.case {
        Case::Consistent => return ModifiedPcs::new_unchecked(pcs.clone()),
        Case::I0 => (
            a_bw / eps,
            Box::new(|i| {
                let (ab, aw) = (pcs.a_b(i), pcs.a_w(i));
                ((ab * a_bw / (eps * aw)).sqrt(), (aw * a_bw / (eps * ab)).sqrt())
            }),
        ),
        Case::J0 => (
            eps * a_bw,
            Box::new(|i| {
                let (ab, aw) = (pcs.a_b(i), pcs.a_w(i));
                ((eps * ab * a_bw / aw).sqrt(), (eps * aw * a_bw / ab).sqrt())
            }),
        ),
        Case::I0J0 => {
            let i0 = diag.i0.expect("CASE_I0J0 has i0");
            let base = eps * eps * pcs.product(i0);
            (
                base,
                Box::new(move |i| {
                    let (ab, aw) = (pcs.a_b(i), pcs.a_w(i));
                    ((base * ab / aw).sqrt(), (base * aw / ab).sqrt())
                }),
            )
        }
    };

    let n = pcs.n();
    let mut bo = vec![1.0; n];
    let mut ow = vec![1.0; n];
    for i in pcs.others() {
        let (b, w) = entry(i);
        bo[i] = b;
        ow[i] = w;
    }
    bo[pcs.worst()] = target_bw;
    ow[pcs.best()] = target_bw;
    let out = Pcs::new(pcs.labels().to_vec(), pcs.best(), pcs.worst(), bo, ow)
        .expect("modified entries are positive and finite");
    ModifiedPcs::new_unchecked(out)
}
