//! Plain-text reports. Every table value is printed at four decimals.

use std::fmt::Write;

use mbwm_core::hierarchy::RankedWeights;
use mbwm_core::CrScale;

use crate::api::{CheckResponse, EpsKind, EvaluationResponse};

/// Four decimals, ties rounded away from zero.
pub fn fmt4(x: f64) -> String {
    let r = (x * 1e4).round() / 1e4;
    format!("{:.4}", r + 0.0)
}

fn cr_line(check: &CheckResponse) -> String {
    let label = match check.cr_scale {
        CrScale::Ratio => "CR",
        CrScale::Normalized => "CR (normalized)",
    };
    if check.consistent {
        format!("{label}: {} (consistent)", fmt4(check.cr))
    } else {
        format!("{label}: {}", fmt4(check.cr))
    }
}

fn write_check(out: &mut String, check: &CheckResponse) {
    let _ = writeln!(out, "criteria: {}", check.criteria.join(", "));
    let _ = writeln!(out, "best: {}", check.best);
    let _ = writeln!(out, "worst: {}", check.worst);
    let _ = writeln!(out);
    if check.eps_table.is_empty() {
        let _ = writeln!(out, "eps table: (no criteria besides best and worst)");
    } else {
        let _ = writeln!(out, "eps table:");
        for e in &check.eps_table {
            let key = match e.kind {
                EpsKind::Single => format!("eps({})", e.criteria[0]),
                EpsKind::Pair => format!("eps({},{})", e.criteria[0], e.criteria[1]),
            };
            let _ = writeln!(out, "  {key:<20} {}", fmt4(e.value));
        }
    }
    let mut case = check.case.name().to_string();
    let refs: Vec<String> = [("i0", &check.i0), ("j0", &check.j0)]
        .into_iter()
        .filter_map(|(k, v)| v.as_ref().map(|v| format!("{k}: {v}")))
        .collect();
    if !refs.is_empty() {
        case = format!("{case} ({})", refs.join(", "));
    }
    let _ = writeln!(out, "case: {case}");
    let _ = writeln!(out, "eps_star: {}", fmt4(check.eps_star));
    let _ = writeln!(out, "CI: {}", fmt4(check.ci));
    let _ = writeln!(out, "{}", cr_line(check));
    for w in &check.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
}

pub fn render_check(check: &CheckResponse) -> String {
    let mut out = String::new();
    write_check(&mut out, check);
    out
}

pub fn render_evaluation(r: &EvaluationResponse) -> String {
    let mut out = String::new();
    write_check(&mut out, &r.check);
    let _ = writeln!(out, "a_bw*: {}", fmt4(r.a_bw_star));
    let _ = writeln!(out);

    let width = r.check.criteria.iter().map(String::len).max().unwrap_or(0).max(9);
    let _ = writeln!(
        out,
        "{:<width$}  {:>8}  {:>8}  {:>18}  {:>8}  {:>8}  {:>8}  {:>8}  {:>8}",
        "criterion", "a_b*", "a_*w", "a_b range", "w_lower", "w_upper", "centre", "weight", "eta"
    );
    for (k, name) in r.check.criteria.iter().enumerate() {
        let range = &r.modified_ranges[k];
        let iw = &r.interval_weights[k];
        let span = format!("[{}, {}]", fmt4(range.best_to_other[0]), fmt4(range.best_to_other[1]));
        let _ = writeln!(
            out,
            "{:<width$}  {:>8}  {:>8}  {:>18}  {:>8}  {:>8}  {:>8}  {:>8}  {:>8}",
            name,
            fmt4(r.best_modified.best_to_other[name]),
            fmt4(r.best_modified.other_to_worst[name]),
            span,
            fmt4(iw.lower),
            fmt4(iw.upper),
            fmt4(iw.centre),
            fmt4(r.weights[name]),
            fmt4(r.eta[name]),
        );
    }
    out
}

pub fn render_hierarchy(r: &RankedWeights) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "categories:");
    for c in &r.categories {
        let _ = writeln!(out, "  {:<24} {}", c.category, fmt4(c.weight));
    }
    let _ = writeln!(out);
    let cw = r.leaves.iter().map(|l| l.category.len()).max().unwrap_or(0).max(8);
    let lw = r.leaves.iter().map(|l| l.leaf.len()).max().unwrap_or(0).max(4);
    let _ = writeln!(out, "{:>4}  {:<cw$}  {:<lw$}  {:>8}  {:>8}", "rank", "category", "leaf", "local", "global");
    for l in &r.leaves {
        let _ = writeln!(
            out,
            "{:>4}  {:<cw$}  {:<lw$}  {:>8}  {:>8}",
            l.rank,
            l.category,
            l.leaf,
            fmt4(l.local_weight),
            fmt4(l.global_weight)
        );
    }
    let _ = writeln!(out, "sum of global weights: {}", fmt4(r.global_sum()));
    out
}
