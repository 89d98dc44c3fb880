//! Constructive nsd `(k+1)`-colouring of graphs with `mad < 3`.
//!
//! Each component of order at least 3 is coloured by finding its first
//! configuration, shrinking it to `H′`, colouring `H′` recursively, lifting
//! the colouring back and extending it over the freed edges. Isolated edges
//! of intermediate graphs get colour 1.

mod extend;
mod reduce;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::configs::{first_config, ConfigError, ConfigKind};
use crate::graph::{Edge, Graph};
use crate::graph6::encode_graph6;
use crate::mad::{mad_exact, mad_less_than};
use crate::rational::Rational;

pub use reduce::{reduce, Branch, Edit, ReductionPlan};

use extend::{fallback, run_script, Fallback, Work};

/// Assignment cap for one fallback search.
pub const FALLBACK_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColorerError {
    #[error("maximum degree {0} is below 6")]
    DeltaTooSmall(usize),
    #[error("graph has an isolated edge")]
    IsolatedEdge,
    #[error("mad = {0} is not below 3")]
    MadTooLarge(Rational),
    #[error("maximum degree {delta} exceeds k = {k}")]
    DegreeExceedsK { delta: usize, k: usize },
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("no configuration found in {graph6}")]
    NoConfiguration { graph6: String },
    #[error("{kind} transform guard failed: {reason}")]
    Guard { kind: ConfigKind, reason: String },
    #[error("{kind} transform does not shrink the degree profile: {before} -> {after}")]
    ProfileNotDecreasing {
        kind: ConfigKind,
        before: String,
        after: String,
    },
    #[error("{kind} transform produced mad >= 3 on {graph6}")]
    SparsityLost { kind: ConfigKind, graph6: String },
    #[error("extension failed for {config} ({branch}) on {graph6}: {reason}")]
    ExtensionFailed {
        config: String,
        branch: Branch,
        graph6: String,
        reason: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorerOptions {
    /// Check `mad(H′) < 3` after every transform.
    pub check_mad: bool,
    pub trace: bool,
    /// Run the per-case scripted moves before the exhaustive fallback.
    pub scripted: bool,
}

impl Default for ColorerOptions {
    fn default() -> Self {
        ColorerOptions {
            check_mad: cfg!(debug_assertions),
            trace: false,
            scripted: true,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColorerStats {
    pub reductions: usize,
    pub fallback_activations: usize,
    pub branches: BTreeMap<(ConfigKind, Branch), usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub depth: usize,
    pub config: String,
    pub branch: Branch,
    pub before: String,
    pub after: String,
    pub fallback: bool,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:indent$}{} branch={} profile {} -> {}{}",
            "",
            self.config,
            self.branch,
            self.before,
            self.after,
            if self.fallback { " fallback" } else { "" },
            indent = 2 * self.depth
        )
    }
}

#[derive(Debug, Clone)]
pub struct ColorOutcome {
    pub k: usize,
    pub coloring: EdgeColoring,
    pub stats: ColorerStats,
    pub trace: Vec<TraceStep>,
}

/// `max(6, Δ)`.
pub fn choose_k(g: &Graph) -> usize {
    g.max_degree().max(6)
}

/// Colours a graph with `Δ ≥ 6`, `mad < 3` and no isolated edges using
/// colours `1..=Δ+1`.
pub fn color_nsd(g: &Graph, opts: ColorerOptions) -> Result<ColorOutcome, ColorerError> {
    if g.max_degree() < 6 {
        return Err(ColorerError::DeltaTooSmall(g.max_degree()));
    }
    if g.has_isolated_edge() {
        return Err(ColorerError::IsolatedEdge);
    }
    color_with_k(g, choose_k(g), opts)
}

/// The recursive procedure for a fixed `k ≥ 6` with `Δ ≤ k`; isolated edges
/// are coloured 1 and left unchecked.
pub fn color_with_k(g: &Graph, k: usize, opts: ColorerOptions) -> Result<ColorOutcome, ColorerError> {
    if g.max_degree() > k {
        return Err(ColorerError::DegreeExceedsK {
            delta: g.max_degree(),
            k,
        });
    }
    if k < 6 {
        return Err(ConfigError::KTooSmall(k).into());
    }
    if !mad_less_than(g, Rational::integer(3)) {
        return Err(ColorerError::MadTooLarge(mad_exact(g)));
    }
    let mut run = Run {
        k,
        opts,
        stats: ColorerStats::default(),
        trace: Vec::new(),
    };
    let coloring = run.color_recursive(g, 0)?;
    Ok(ColorOutcome {
        k,
        coloring,
        stats: run.stats,
        trace: run.trace,
    })
}

struct Run {
    k: usize,
    opts: ColorerOptions,
    stats: ColorerStats,
    trace: Vec<TraceStep>,
}

impl Run {
    fn palette(&self) -> Color {
        self.k as Color + 1
    }

    fn color_recursive(&mut self, g: &Graph, depth: usize) -> Result<EdgeColoring, ColorerError> {
        let mut col = EdgeColoring::new(g, self.palette());
        for comp in g.components() {
            match comp.len() {
                1 => {}
                2 => {
                    col.assign(comp[0], comp[1], 1).expect("edge of g");
                }
                _ => {
                    let h = g.induced_subgraph(&comp);
                    let sub = self.color_component(&h, depth)?;
                    for ((a, b), c) in sub.iter() {
                        col.assign(comp[a], comp[b], c.expect("total")).expect("edge of g");
                    }
                }
            }
        }
        Ok(col)
    }

    fn color_component(&mut self, h: &Graph, depth: usize) -> Result<EdgeColoring, ColorerError> {
        let m = first_config(h, self.k)?.ok_or_else(|| ColorerError::NoConfiguration {
            graph6: encode_graph6(h),
        })?;
        let plan = reduce(h, &m)?;
        if self.opts.check_mad && !mad_less_than(&plan.reduced, Rational::integer(3)) {
            return Err(ColorerError::SparsityLost {
                kind: plan.kind,
                graph6: encode_graph6(h),
            });
        }
        self.stats.reductions += 1;
        *self.stats.branches.entry((plan.kind, plan.branch)).or_default() += 1;
        let trace_at = self.trace.len();
        if self.opts.trace {
            self.trace.push(TraceStep {
                depth,
                config: m.to_string(),
                branch: plan.branch,
                before: plan.profile_before.to_string(),
                after: plan.profile_after.to_string(),
                fallback: false,
            });
        }

        let lower = self.color_recursive(&plan.reduced, depth + 1)?;
        let mut work = Work::new(h, self.palette());
        for &(he, re) in &plan.edge_correspondence {
            work.set(he.0, he.1, lower.color(re.0, re.1));
        }
        for &(a, b) in &plan.released {
            work.set(a, b, None);
        }
        let lifted: Vec<(Edge, Option<Color>)> = work.colors().collect();

        let scripted_ok = self.opts.scripted && run_script(&mut work, &plan, h);
        if !scripted_ok {
            self.stats.fallback_activations += 1;
            if self.opts.trace {
                self.trace[trace_at].fallback = true;
            }
            for &((a, b), c) in &lifted {
                work.set(a, b, c);
            }
            let mut free = plan.uncolored_after_lift.clone();
            free.extend(plan.mutable.iter().copied());
            free.sort_unstable();
            free.dedup();
            let reason = match fallback(&mut work, &free, FALLBACK_BUDGET) {
                Fallback::Solved => None,
                Fallback::Exhausted => Some("fallback search exhausted"),
                Fallback::BudgetExceeded => Some("fallback budget exceeded"),
            };
            if let Some(reason) = reason {
                return Err(ColorerError::ExtensionFailed {
                    config: m.to_string(),
                    branch: plan.branch,
                    graph6: encode_graph6(h),
                    reason: reason.to_string(),
                });
            }
        }
        let mut out = EdgeColoring::new(h, self.palette());
        for ((a, b), c) in work.colors() {
            out.assign(a, b, c.expect("complete")).expect("edge of h");
        }
        Ok(out)
    }
}
