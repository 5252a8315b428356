//! Numeric reference solver for the minimax model, independent of the closed forms.
//!
//! For a fixed η the model is feasible iff some ã_bw lies in
//! [a_bw/η, η·a_bw] and, for every non-reference i, in [p_i/η², η²·p_i]
//! (p_i = a_bi·a_iw): each ã_bi then ranges over
//! [max{a_bi/η, ã_bw/(η·a_iw)}, min{η·a_bi, η·ã_bw/a_iw}]. Feasibility is
//! monotone in η, so η* is found by bisection. All intervals are intersected
//! in log space.

use thiserror::Error;

use crate::modified::ModifiedPcs;
use crate::pcs::Pcs;

pub const DEFAULT_TOLERANCE: f64 = 1e-10;
pub const MAX_ITERATIONS: usize = 200;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("bisection did not reach width {tolerance} within {iterations} iterations")]
    NoConvergence { iterations: usize, tolerance: f64 },
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
}

impl OracleError {
    pub fn code(&self) -> &'static str {
        match self {
            OracleError::NoConvergence { .. } => "NO_CONVERGENCE",
            OracleError::InvalidTolerance(_) => "INVALID_TOLERANCE",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    pub eta_star: f64,
    pub feasible_witness: ModifiedPcs,
    pub iterations: usize,
    pub tolerance_used: f64,
}

#[derive(Debug, Clone, Copy)]
struct LogInterval {
    lo: f64,
    hi: f64,
}

impl LogInterval {
    fn around(centre: f64, radius: f64) -> Self {
        Self {
            lo: centre - radius,
            hi: centre + radius,
        }
    }

    fn intersect(self, other: LogInterval) -> Self {
        Self {
            lo: self.lo.max(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    fn is_empty(self) -> bool {
        self.lo > self.hi
    }

    fn mid(self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

/// Admissible ln ã_bw for tolerance ln η, optionally with ã_bi pinned for one criterion.
fn reference_range(pcs: &Pcs, ln_eta: f64, pinned: Option<(usize, f64)>) -> LogInterval {
    let mut range = LogInterval::around(pcs.a_bw().ln(), ln_eta);
    for i in pcs.others() {
        let ln_b = pcs.a_b(i).ln();
        let ln_w = pcs.a_w(i).ln();
        let term = match pinned {
            Some((k, ln_v)) if k == i => {
                if (ln_v - ln_b).abs() > ln_eta {
                    return LogInterval { lo: 1.0, hi: 0.0 };
                }
                LogInterval::around(ln_v + ln_w, ln_eta)
            }
            _ => LogInterval::around(ln_b + ln_w, 2.0 * ln_eta),
        };
        range = range.intersect(term);
    }
    range
}

fn entry_range_for(pcs: &Pcs, i: usize, ln_eta: f64, ln_bw: f64) -> LogInterval {
    LogInterval::around(pcs.a_b(i).ln(), ln_eta)
        .intersect(LogInterval::around(ln_bw - pcs.a_w(i).ln(), ln_eta))
}

/// Is there a consistent system within multiplicative distance `eta` of `pcs`?
pub fn is_feasible(pcs: &Pcs, eta: f64) -> bool {
    eta >= 1.0 && !reference_range(pcs, eta.ln(), None).is_empty()
}

/// Returns a consistent system within distance `eta` of `pcs`, built from the
/// log-midpoints of the admissible ranges, or `None` if `eta` is infeasible.
pub fn feasible(pcs: &Pcs, eta: f64) -> Option<ModifiedPcs> {
    if eta < 1.0 {
        return None;
    }
    let ln_eta = eta.ln();
    let range = reference_range(pcs, ln_eta, None);
    if range.is_empty() {
        return None;
    }
    let ln_bw = range.mid();
    let n = pcs.n();
    let mut bo = vec![1.0; n];
    let mut ow = vec![1.0; n];
    for i in pcs.others() {
        let r = entry_range_for(pcs, i, ln_eta, ln_bw);
        let ln_b = if r.is_empty() { 0.5 * (r.lo + r.hi) } else { r.mid() };
        bo[i] = ln_b.exp();
        ow[i] = (ln_bw - ln_b).exp();
    }
    bo[pcs.worst()] = ln_bw.exp();
    ow[pcs.best()] = bo[pcs.worst()];
    let witness = Pcs::new(pcs.labels().to_vec(), pcs.best(), pcs.worst(), bo, ow).ok()?;
    ModifiedPcs::new(witness).ok()
}

/// Largest multiplicative distance between `pcs` and `other` over all judgments.
pub fn max_deviation(pcs: &Pcs, other: &Pcs) -> f64 {
    let d = |x: f64, y: f64| (x / y).max(y / x);
    (0..pcs.n())
        .map(|i| d(pcs.a_b(i), other.a_b(i)).max(d(pcs.a_w(i), other.a_w(i))))
        .fold(1.0, f64::max)
}

/// Bisection on η over [1, U] with U = max_i max{p_i/a_bw, a_bw/p_i} + 1.
pub fn solve(pcs: &Pcs, tolerance: f64) -> Result<OracleResult, OracleError> {
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(OracleError::InvalidTolerance(tolerance));
    }
    let a_bw = pcs.a_bw();
    let mut hi = pcs
        .others()
        .map(|i| {
            let r = pcs.product(i) / a_bw;
            r.max(1.0 / r)
        })
        .fold(1.0, f64::max)
        + 1.0;
    let mut lo = 1.0;
    let mut iterations = 0;

    if is_feasible(pcs, lo) {
        hi = lo;
    } else {
        while hi - lo > tolerance {
            if iterations == MAX_ITERATIONS {
                return Err(OracleError::NoConvergence {
                    iterations,
                    tolerance,
                });
            }
            iterations += 1;
            let mid = 0.5 * (lo + hi);
            if is_feasible(pcs, mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }

    let witness = feasible(pcs, hi).expect("upper end of the bracket is feasible");
    Ok(OracleResult {
        eta_star: 0.5 * (lo + hi),
        feasible_witness: witness,
        iterations,
        tolerance_used: tolerance,
    })
}

/// Range of ã_bi over consistent systems within distance `eta`, located by
/// bisecting on pinned-entry feasibility. `None` if `i` is a reference
/// criterion or `eta` is infeasible.
pub fn entry_range(pcs: &Pcs, eta: f64, i: usize, tolerance: f64) -> Option<(f64, f64)> {
    if pcs.is_reference(i) {
        return None;
    }
    let ln_eta = eta.ln();
    let inside = feasible(pcs, eta)?.a_b(i).ln();
    let pinned_ok = |ln_v: f64| !reference_range(pcs, ln_eta, Some((i, ln_v))).is_empty();
    let ln_b = pcs.a_b(i).ln();
    let search = |mut ok: f64, mut bad: f64| {
        while (ok - bad).abs() > tolerance {
            let mid = 0.5 * (ok + bad);
            if pinned_ok(mid) {
                ok = mid;
            } else {
                bad = mid;
            }
        }
        ok
    };
    // a_bi / η .. η·a_bi bounds every admissible value; step just outside it
    let lower = search(inside, ln_b - ln_eta - 1.0);
    let upper = search(inside, ln_b + ln_eta + 1.0);
    Some((lower.exp(), upper.exp()))
}
