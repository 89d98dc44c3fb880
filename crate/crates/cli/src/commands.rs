use std::path::Path;

use anyhow::{Context, Result};
use rayon::prelude::*;
use sumdist::chi_sum::{chi_sum_with, ChiSumError, ChiSumOptions};
use sumdist::colorer::ColorOutcome;
use sumdist::configs::{find_configs as matches, first_config, SearchMode};
use sumdist::discharge::{
    discharge_with, ghost_check, verify_discharging_theorem_with, GhostVerdict, RuleAmounts, TheoremVerdict,
};
use sumdist::generate::sparse_corpus;
use sumdist::{
    choose_k, color_nsd, encode_graph6, is_nsd, is_proper, mad_exact, parse_graph6, ColorerOptions, EdgeColoring,
    Graph, Rational,
};

use crate::input::{graph_stream, read_text, Entry};
use crate::{CheckArgs, ChiSumArgs, ColorArgs, DischargeArgs, FindArgs, GenerateArgs, Record, Status, Stream};

fn malformed(e: &Entry, reason: &str) -> Record {
    eprintln!("line {}: {reason}", e.line);
    Record::new(
        Status::Malformed,
        format!(
            "RESULT line={} status=malformed input={:?} reason={:?}",
            e.line, e.text, reason
        ),
    )
}

fn per_graph(path: Option<&Path>, f: impl Fn(usize, &Graph) -> Record + Sync) -> Result<Vec<Record>> {
    let entries = graph_stream(path)?;
    Ok(entries
        .par_iter()
        .map(|e| match &e.graph {
            Ok(g) => f(e.line, g),
            Err(reason) => malformed(e, reason),
        })
        .collect())
}

pub fn mad(a: &Stream) -> Result<Vec<Record>> {
    per_graph(a.input.as_deref(), |line, g| {
        let mad = mad_exact(g);
        Record::new(
            Status::Ok,
            format!(
                "RESULT line={line} n={} m={} mad={mad} <3:{}",
                g.n(),
                g.m(),
                mad < Rational::integer(3)
            ),
        )
    })
}

/// Why a graph falls outside the colourer's hypothesis, if it does.
pub fn skip_reason(g: &Graph, mad: Rational) -> Option<&'static str> {
    if g.max_degree() < 6 {
        Some("delta<6")
    } else if g.has_isolated_edge() {
        Some("isolated-edge")
    } else if mad >= Rational::integer(3) {
        Some("mad>=3")
    } else {
        None
    }
}

/// Colours `g` and re-verifies the result; `Err` carries the failure text.
pub fn color_and_verify(g: &Graph, opts: ColorerOptions) -> Result<ColorOutcome, String> {
    let out = color_nsd(g, opts).map_err(|e| e.to_string())?;
    match is_nsd(g, &out.coloring) {
        Ok(true) => {}
        Ok(false) => return Err("colouring is not nsd".into()),
        Err(e) => return Err(e.to_string()),
    }
    let used = out.coloring.max_color().unwrap_or(0) as usize;
    if used > g.max_degree() + 1 {
        return Err(format!("used {used} colours, more than Δ+1"));
    }
    Ok(out)
}

pub fn color(a: &ColorArgs) -> Result<Vec<Record>> {
    if let Some(dir) = &a.out_dir {
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    }
    let opts = ColorerOptions {
        check_mad: !a.no_debug_assert,
        trace: a.trace,
        scripted: true,
    };
    let records = per_graph(a.stream.input.as_deref(), |line, g| {
        let g6 = encode_graph6(g);
        let mad = mad_exact(g);
        let head = format!(
            "RESULT line={line} graph6={g6} n={} m={} delta={} mad={mad}",
            g.n(),
            g.m(),
            g.max_degree()
        );
        if let Some(reason) = skip_reason(g, mad) {
            return Record::new(Status::Skip, format!("{head} status=skip reason={reason}"));
        }
        let config = first_config(g, choose_k(g))
            .ok()
            .flatten()
            .map_or("none".to_string(), |m| m.kind.to_string());
        match color_and_verify(g, opts) {
            Ok(out) => {
                let mut lines: Vec<String> = out.trace.iter().map(|t| format!("TRACE line={line} {t}")).collect();
                lines.push(format!(
                    "{head} status=ok config={config} colors={} nsd=true reductions={} fallbacks={}",
                    out.coloring.max_color().unwrap_or(0),
                    out.stats.reductions,
                    out.stats.fallback_activations
                ));
                if let Some(dir) = &a.out_dir {
                    let file = dir.join(format!("line-{line}.txt"));
                    if let Err(e) = std::fs::write(&file, out.coloring.to_text()) {
                        return Record::new(Status::Fail, format!("{head} status=fail reason={:?}", e.to_string()));
                    }
                }
                Record {
                    status: Status::Ok,
                    lines,
                }
            }
            Err(reason) => Record::new(
                Status::Fail,
                format!("{head} status=fail config={config} nsd=false reason={reason:?}"),
            ),
        }
    })?;
    Ok(records)
}

pub fn check(a: &CheckArgs) -> Result<u8> {
    let g = match parse_graph6(a.graph.trim()) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(2);
        }
    };
    let text = read_text(Some(&a.coloring))?;
    let col = match EdgeColoring::from_text(&g, &text, None) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(2);
        }
    };
    let proper = is_proper(&g, &col)?;
    let nsd = proper && is_nsd(&g, &col)?;
    println!("RESULT proper={proper} nsd={nsd}");
    Ok(if nsd { 0 } else { 1 })
}

pub fn chi_sum(a: &ChiSumArgs) -> Result<Vec<Record>> {
    let opts = ChiSumOptions {
        max_palette: a.max_palette,
        node_budget: Some(a.budget),
    };
    per_graph(a.stream.input.as_deref(), |line, g| match chi_sum_with(g, opts) {
        Ok(res) => Record::new(
            Status::Ok,
            format!(
                "RESULT line={line} status=ok chi={} delta={} nodes={}",
                res.k,
                g.max_degree(),
                res.nodes
            ),
        ),
        Err(ChiSumError::IsolatedEdge(..)) => Record::new(
            Status::Skip,
            format!("RESULT line={line} status=skip reason=isolated-edge"),
        ),
        Err(ChiSumError::BudgetExceeded { k, .. }) => Record::new(
            Status::Skip,
            format!("RESULT line={line} status=budget reason=\"budget exhausted at k={k}\""),
        ),
        Err(e) => Record::new(
            Status::Fail,
            format!("RESULT line={line} status=fail reason={:?}", e.to_string()),
        ),
    })
}

pub fn find_configs(a: &FindArgs) -> Result<Vec<Record>> {
    let mode = if a.all {
        SearchMode::All
    } else {
        SearchMode::FirstByIndex
    };
    per_graph(a.stream.input.as_deref(), |line, g| {
        let k = a.k.unwrap_or_else(|| choose_k(g));
        match matches(g, k, mode) {
            Ok(found) => {
                let first = found.first().map_or("none".to_string(), |m| m.kind.to_string());
                let mut lines = vec![format!(
                    "RESULT line={line} status=ok k={k} matches={} first={first}",
                    found.len()
                )];
                lines.extend(found.iter().map(|m| format!("MATCH line={line} {m}")));
                Record {
                    status: Status::Ok,
                    lines,
                }
            }
            Err(e) => Record::new(
                Status::Malformed,
                format!("RESULT line={line} status=error reason={:?}", e.to_string()),
            ),
        }
    })
}

pub fn amounts(mutant_r2_half: bool) -> RuleAmounts {
    let mut amounts = RuleAmounts::default();
    if mutant_r2_half {
        amounts.r2 = Rational::new(1, 2);
    }
    amounts
}

pub fn discharge(a: &DischargeArgs) -> Result<Vec<Record>> {
    let amounts = amounts(a.mutant_r2_half);
    per_graph(a.stream.input.as_deref(), |line, g| {
        let k = a.k.unwrap_or_else(|| choose_k(g));
        let ledger = discharge_with(g, &amounts);
        let ghost = match ghost_check(g, &ledger) {
            GhostVerdict::Pass => "pass".to_string(),
            GhostVerdict::Fail { vertex, reason } => format!("fail:{vertex}:{reason}"),
        };
        let mut lines = Vec::new();
        if a.table {
            lines.extend(ledger.render_table(g).lines().map(|l| format!("TABLE line={line} {l}")));
        }
        let head = format!(
            "RESULT line={line} k={k} conserved={} ghost={ghost}",
            ledger.is_conserved()
        );
        let status = match verify_discharging_theorem_with(g, k, &amounts) {
            Ok(TheoremVerdict::Consistent) => {
                lines.push(format!("{head} verdict=consistent"));
                Status::Ok
            }
            Ok(TheoremVerdict::Counterexample(report)) => {
                lines.push(format!("{head} verdict=counterexample reason={:?}", report.failure));
                lines.extend(report.to_string().lines().map(|l| format!("  {l}")));
                Status::Fail
            }
            Err(e) => {
                lines.push(format!("{head} status=skip reason={:?}", e.to_string()));
                Status::Skip
            }
        };
        Record { status, lines }
    })
}

pub fn generate(a: &GenerateArgs) -> Result<u8> {
    match sparse_corpus(a.seed, a.count, a.max_n) {
        Ok(graphs) => {
            let lines: Vec<String> = graphs.iter().map(encode_graph6).collect();
            crate::write_lines(lines.iter().map(String::as_str));
            Ok(0)
        }
        Err(e) => {
            eprintln!("error: {e}");
            Ok(2)
        }
    }
}
