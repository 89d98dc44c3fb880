use anyhow::Result;
use rayon::prelude::*;
use sumdist::chi_sum::{chi_sum_with, ChiSumError, ChiSumOptions};
use sumdist::configs::first_config;
use sumdist::discharge::{verify_discharging_theorem_with, DischargeError, RuleAmounts, TheoremVerdict};
use sumdist::generate::{generate_mixed, sparse_corpus};
use sumdist::{choose_k, encode_graph6, mad_exact, ColorerOptions, Graph};

use crate::commands::{amounts, color_and_verify};
use crate::{Record, Status, VerifyArgs};

/// Edge count up to which the exact solver runs.
pub const SANDWICH_MAX_EDGES: usize = 20;

/// A mixed-density graph paired with corpus graph `i`, for the discharging
/// check on graphs that may be configuration-free.
pub fn companion(seed: u64, i: usize) -> Graph {
    let s = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64);
    generate_mixed(s, 3 + i % 14, 2 + i % 9)
}

fn discharge_check(g: &Graph, amounts: &RuleAmounts, failures: &mut Vec<String>, detail: &mut Vec<String>) {
    let k = choose_k(g);
    match verify_discharging_theorem_with(g, k, amounts) {
        Ok(TheoremVerdict::Consistent) => {}
        Ok(TheoremVerdict::Counterexample(report)) => {
            failures.push(format!("discharging:{}", report.graph6));
            detail.extend(report.to_string().lines().map(|l| format!("  {l}")));
        }
        Err(DischargeError::IsolatedEdge) => {}
        Err(e) => failures.push(format!("discharging:{e}")),
    }
}

fn check_one(i: usize, g: &Graph, companion: &Graph, args: &VerifyArgs) -> Record {
    let k = choose_k(g);
    let amounts = amounts(args.mutant_r2_half);
    let mut failures = Vec::new();
    let mut detail = Vec::new();

    let config = match first_config(g, k) {
        Ok(Some(m)) => m.kind.to_string(),
        Ok(None) => {
            failures.push("no-configuration".to_string());
            "none".to_string()
        }
        Err(e) => {
            failures.push(format!("config:{e}"));
            "error".to_string()
        }
    };
    discharge_check(g, &amounts, &mut failures, &mut detail);
    discharge_check(companion, &amounts, &mut failures, &mut detail);

    let opts = ColorerOptions {
        check_mad: true,
        ..ColorerOptions::default()
    };
    let (colors, fallbacks) = match color_and_verify(g, opts) {
        Ok(out) => (out.coloring.max_color().unwrap_or(0), out.stats.fallback_activations),
        Err(reason) => {
            failures.push(format!("colour:{reason}"));
            (0, 0)
        }
    };

    let chi = if g.m() <= SANDWICH_MAX_EDGES && colors > 0 {
        let opts = ChiSumOptions {
            max_palette: Some(colors),
            node_budget: Some(args.chi_budget),
        };
        match chi_sum_with(g, opts) {
            Ok(res) => {
                let delta = g.max_degree() as u32;
                if !(delta <= res.k && res.k <= colors && colors <= delta + 1) {
                    failures.push(format!("sandwich:{delta}<={}<={colors}", res.k));
                }
                res.k.to_string()
            }
            Err(ChiSumError::BudgetExceeded { .. }) => "budget".to_string(),
            Err(e) => {
                failures.push(format!("chi:{e}"));
                "error".to_string()
            }
        }
    } else {
        "-".to_string()
    };

    let status = if failures.is_empty() { Status::Ok } else { Status::Fail };
    let mut line = format!(
        "RESULT index={i} graph6={} n={} m={} delta={} mad={} config={config} colors={colors} chi={chi} fallbacks={fallbacks}",
        encode_graph6(g),
        g.n(),
        g.m(),
        g.max_degree(),
        mad_exact(g),
    );
    if failures.is_empty() {
        line.push_str(" status=ok");
    } else {
        line.push_str(&format!(" status=fail failures={}", failures.join(",")));
    }
    let mut lines = vec![line];
    lines.extend(detail);
    Record { status, lines }
}

pub fn run(args: &VerifyArgs) -> Result<Vec<Record>> {
    let corpus = match sparse_corpus(args.seed, args.count, args.max_n) {
        Ok(c) => c,
        Err(e) => anyhow::bail!("{e}"),
    };
    Ok(corpus
        .par_iter()
        .enumerate()
        .map(|(i, g)| check_one(i, g, &companion(args.seed, i), args))
        .collect())
}
