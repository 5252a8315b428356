//! Random comparison systems for fuzzing and property checks.

use rand::Rng;

use crate::pcs::Pcs;

/// How judgments are drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JudgmentScale {
    /// The 17-point scale {1/9, ..., 1/2, 1, 2, ..., 9}.
    Grid,
    /// Log-uniform on [1/9, 9].
    Continuous,
}

/// The 17 values of the 1/9..9 scale, ascending.
pub fn grid_values() -> Vec<f64> {
    (1..=9)
        .rev()
        .map(|k| 1.0 / k as f64)
        .chain((2..=9).map(|k| k as f64))
        .collect()
}

fn draw<R: Rng + ?Sized>(rng: &mut R, scale: JudgmentScale) -> f64 {
    match scale {
        JudgmentScale::Grid => {
            let k = rng.random_range(-8i32..=8);
            if k >= 0 {
                (k + 1) as f64
            } else {
                1.0 / (1 - k) as f64
            }
        }
        JudgmentScale::Continuous => (rng.random_range(-1.0..=1.0) * 9f64.ln()).exp(),
    }
}

/// A random valid system with `n` criteria and random distinct best and worst.
pub fn random_pcs<R: Rng + ?Sized>(rng: &mut R, n: usize, scale: JudgmentScale) -> Pcs {
    assert!(n >= 2, "need at least two criteria");
    let best = rng.random_range(0..n);
    let worst = (best + rng.random_range(1..n)) % n;
    let mut bo: Vec<f64> = (0..n).map(|_| draw(rng, scale)).collect();
    let mut ow: Vec<f64> = (0..n).map(|_| draw(rng, scale)).collect();
    bo[best] = 1.0;
    ow[worst] = 1.0;
    ow[best] = bo[worst];
    Pcs::new(Vec::new(), best, worst, bo, ow).expect("sampled entries are valid")
}

/// A random consistent system: weights drawn first, judgments read off their ratios.
pub fn random_consistent_pcs<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Pcs {
    assert!(n >= 2, "need at least two criteria");
    let weights: Vec<f64> = (0..n).map(|_| rng.random_range(0.05..1.0)).collect();
    let best = (0..n).max_by(|&a, &b| weights[a].total_cmp(&weights[b])).unwrap();
    let worst = (0..n)
        .filter(|&i| i != best)
        .min_by(|&a, &b| weights[a].total_cmp(&weights[b]))
        .unwrap();
    let bo = (0..n).map(|i| weights[best] / weights[i]).collect();
    let mut ow: Vec<f64> = (0..n).map(|i| weights[i] / weights[worst]).collect();
    ow[worst] = 1.0;
    let mut pcs_bo: Vec<f64> = bo;
    pcs_bo[best] = 1.0;
    ow[best] = pcs_bo[worst];
    Pcs::new(Vec::new(), best, worst, pcs_bo, ow).expect("ratios of positive weights are valid")
}
