//! Side-by-side comparison of the closed form and the bisection oracle.

use std::fmt::Write;

use mbwm_core::oracle;
use mbwm_core::sample::{random_pcs, JudgmentScale};
use mbwm_core::{diagnostics, Pcs};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::AppError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleComparison {
    pub eps_star: f64,
    pub eta_star: f64,
    pub delta: f64,
    pub iterations: usize,
    pub tolerance: f64,
    /// Largest judgment distance of the oracle's consistent witness.
    pub witness_deviation: f64,
}

pub fn compare(pcs: &Pcs, tolerance: f64) -> Result<OracleComparison, AppError> {
    let eps_star = diagnostics(pcs).eps_star;
    let result = oracle::solve(pcs, tolerance)?;
    Ok(OracleComparison {
        eps_star,
        eta_star: result.eta_star,
        delta: result.eta_star - eps_star,
        iterations: result.iterations,
        tolerance: result.tolerance_used,
        witness_deviation: oracle::max_deviation(pcs, &result.feasible_witness),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzSummary {
    pub seed: u64,
    pub systems: usize,
    pub max_abs_delta: f64,
    pub mean_iterations: f64,
    /// Systems whose |delta| exceeded 1e-7.
    pub disagreements: usize,
}

pub const AGREEMENT: f64 = 1e-7;

/// Random systems with 3 to 9 criteria, alternating grid and continuous judgments.
pub fn fuzz(systems: usize, seed: u64, tolerance: f64) -> Result<FuzzSummary, AppError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_abs_delta = 0.0f64;
    let mut iterations = 0usize;
    let mut disagreements = 0;
    for k in 0..systems {
        let n = rng.random_range(3..=9);
        let scale = if k % 2 == 0 { JudgmentScale::Grid } else { JudgmentScale::Continuous };
        let pcs = random_pcs(&mut rng, n, scale);
        let c = compare(&pcs, tolerance)?;
        if c.delta.abs() > AGREEMENT {
            log::warn!("system {k}: analytic {} vs oracle {}", c.eps_star, c.eta_star);
            disagreements += 1;
        }
        max_abs_delta = max_abs_delta.max(c.delta.abs());
        iterations += c.iterations;
    }
    Ok(FuzzSummary {
        seed,
        systems,
        max_abs_delta,
        mean_iterations: if systems == 0 { 0.0 } else { iterations as f64 / systems as f64 },
        disagreements,
    })
}

pub fn render_comparison(c: &OracleComparison) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "analytic eps_star: {:.10}", c.eps_star);
    let _ = writeln!(out, "oracle eta_star:   {:.10}", c.eta_star);
    let _ = writeln!(out, "delta: {:.3e}", c.delta);
    let _ = writeln!(out, "iterations: {}", c.iterations);
    let _ = writeln!(out, "tolerance: {:e}", c.tolerance);
    let _ = writeln!(out, "witness deviation: {:.10}", c.witness_deviation);
    out
}

pub fn render_fuzz(s: &FuzzSummary) -> String {
    format!(
        "fuzz: {} systems, seed {}, max |delta| {:.3e}, mean iterations {:.1}, disagreements {}\n",
        s.systems, s.seed, s.max_abs_delta, s.mean_iterations, s.disagreements
    )
}
