//! Exact neighbour sum distinguishing index by backtracking.
//!
//! Edges are coloured in a fixed order (largest endpoint-degree sum first).
//! Properness is enforced on every assignment; a sum conflict `s(u) = s(v)`
//! is only tested once both endpoints are saturated.

use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::graph::{Edge, Graph};

/// Palettes are tracked as 64-bit masks.
pub const MAX_PALETTE: Color = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChiSumError {
    #[error("edge {0}-{1} is an isolated edge; the index is undefined")]
    IsolatedEdge(usize, usize),
    #[error("no nsd colouring with at most {0} colours")]
    ExceedsMaxPalette(Color),
    #[error("search budget of {budget} nodes exhausted while testing {k} colours")]
    BudgetExceeded { k: Color, budget: u64 },
    #[error("palette {0} exceeds the supported maximum {MAX_PALETTE}")]
    PaletteTooLarge(Color),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ChiSumOptions {
    /// Largest palette tried; defaults to `Δ + 3`.
    pub max_palette: Option<Color>,
    /// Cap on assignments tried over the whole search.
    pub node_budget: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct ChiSumResult {
    pub k: Color,
    pub witness: EdgeColoring,
    pub nodes: u64,
}

/// `χ'_Σ(g)` with a witness, searching palettes `Δ..=max_palette`.
pub fn chi_sum_exact(g: &Graph, max_palette: Color) -> Result<(Color, EdgeColoring), ChiSumError> {
    let res = chi_sum_with(
        g,
        ChiSumOptions {
            max_palette: Some(max_palette),
            node_budget: None,
        },
    )?;
    Ok((res.k, res.witness))
}

pub fn chi_sum_with(g: &Graph, opts: ChiSumOptions) -> Result<ChiSumResult, ChiSumError> {
    if let Some((u, v)) = g.edges().find(|&(u, v)| g.degree(u) == 1 && g.degree(v) == 1) {
        return Err(ChiSumError::IsolatedEdge(u, v));
    }
    let delta = g.max_degree() as Color;
    let max_palette = opts.max_palette.unwrap_or(delta + 3);
    if max_palette > MAX_PALETTE {
        return Err(ChiSumError::PaletteTooLarge(max_palette));
    }
    let mut search = Search::new(g, opts.node_budget);
    for k in delta..=max_palette {
        if let Some(colors) = search.run(k)? {
            let mut witness = EdgeColoring::new(g, k);
            for (&(u, v), c) in search.order.iter().zip(colors) {
                witness.assign(u, v, c).expect("edge of g, colour in range");
            }
            return Ok(ChiSumResult {
                k,
                witness,
                nodes: search.nodes,
            });
        }
    }
    Err(ChiSumError::ExceedsMaxPalette(max_palette))
}

/// Whether an nsd colouring with exactly the palette `1..=k` exists.
pub fn nsd_colorable(g: &Graph, k: Color, budget: Option<u64>) -> Result<Option<EdgeColoring>, ChiSumError> {
    if k > MAX_PALETTE {
        return Err(ChiSumError::PaletteTooLarge(k));
    }
    let mut search = Search::new(g, budget);
    Ok(search.run(k)?.map(|colors| {
        let mut col = EdgeColoring::new(g, k);
        for (&(u, v), c) in search.order.iter().zip(colors) {
            col.assign(u, v, c).expect("edge of g");
        }
        col
    }))
}

/// Fail-first edge order: decreasing `d(u) + d(v)`, ties lexicographic.
pub fn search_order(g: &Graph) -> Vec<Edge> {
    let mut order: Vec<Edge> = g.edges().collect();
    order.sort_by_key(|&(u, v)| (std::cmp::Reverse(g.degree(u) + g.degree(v)), u, v));
    order
}

struct Search<'g> {
    g: &'g Graph,
    order: Vec<Edge>,
    budget: Option<u64>,
    nodes: u64,
    used: Vec<u64>,
    sums: Vec<u32>,
    remaining: Vec<usize>,
    colors: Vec<Color>,
}

impl<'g> Search<'g> {
    fn new(g: &'g Graph, budget: Option<u64>) -> Self {
        Search {
            g,
            order: search_order(g),
            budget,
            nodes: 0,
            used: Vec::new(),
            sums: Vec::new(),
            remaining: Vec::new(),
            colors: Vec::new(),
        }
    }

    fn run(&mut self, k: Color) -> Result<Option<Vec<Color>>, ChiSumError> {
        let n = self.g.n();
        self.used = vec![0; n];
        self.sums = vec![0; n];
        self.remaining = (0..n).map(|v| self.g.degree(v)).collect();
        self.colors = vec![0; self.order.len()];
        if self.descend(0, k)? {
            Ok(Some(self.colors.clone()))
        } else {
            Ok(None)
        }
    }

    fn saturated_clash(&self, x: usize) -> bool {
        self.g
            .neighbors(x)
            .any(|y| self.remaining[y] == 0 && self.sums[y] == self.sums[x])
    }

    fn descend(&mut self, i: usize, k: Color) -> Result<bool, ChiSumError> {
        if i == self.order.len() {
            return Ok(true);
        }
        let (u, v) = self.order[i];
        let blocked = self.used[u] | self.used[v];
        for c in 1..=k {
            let bit = 1u64 << c;
            if blocked & bit != 0 {
                continue;
            }
            self.nodes += 1;
            if let Some(budget) = self.budget {
                if self.nodes > budget {
                    return Err(ChiSumError::BudgetExceeded { k, budget });
                }
            }
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.sums[u] += c;
            self.sums[v] += c;
            self.remaining[u] -= 1;
            self.remaining[v] -= 1;
            self.colors[i] = c;

            let ok = !(self.remaining[u] == 0 && self.saturated_clash(u))
                && !(self.remaining[v] == 0 && self.saturated_clash(v));
            if ok && self.descend(i + 1, k)? {
                return Ok(true);
            }

            self.used[u] &= !bit;
            self.used[v] &= !bit;
            self.sums[u] -= c;
            self.sums[v] -= c;
            self.remaining[u] += 1;
            self.remaining[v] += 1;
        }
        Ok(false)
    }
}
