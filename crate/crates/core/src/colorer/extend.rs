//! Extending a lifted partial colouring of `H` to an nsd colouring.
//!
//! The working state knows nothing about the independent checker in
//! [`crate::coloring`]. A pair `xy` of adjacent vertices is *determined* once
//! every edge at `x` or `y` other than `xy` is coloured; from then on
//! `s(x) − s(y)` never changes, so every colour choice is vetted against the
//! determined pairs it touches.

use std::collections::{BTreeMap, BTreeSet};

use crate::classify::{classify, VertexClass};
use crate::coloring::Color;
use crate::graph::{edge, Edge, Graph};
use crate::rainbow::{prune_lists, staircase, ListFamily};

use super::reduce::{ReductionPlan, Script};

pub(crate) struct Work<'g> {
    g: &'g Graph,
    palette: Color,
    index: BTreeMap<Edge, usize>,
    edges: Vec<Edge>,
    colors: Vec<Option<Color>>,
    sums: Vec<u64>,
    open: Vec<usize>,
    pub(crate) steps: u64,
}

type PairFilter<'a> = &'a dyn Fn(Edge) -> bool;

fn every_pair(_: Edge) -> bool {
    true
}

impl<'g> Work<'g> {
    pub(crate) fn new(g: &'g Graph, palette: Color) -> Self {
        let edges: Vec<Edge> = g.edges().collect();
        Work {
            g,
            palette,
            index: edges.iter().enumerate().map(|(i, &e)| (e, i)).collect(),
            colors: vec![None; edges.len()],
            edges,
            sums: vec![0; g.n()],
            open: (0..g.n()).map(|v| g.degree(v)).collect(),
            steps: 0,
        }
    }

    pub(crate) fn get(&self, a: usize, b: usize) -> Option<Color> {
        self.colors[self.index[&edge(a, b)]]
    }

    pub(crate) fn set(&mut self, a: usize, b: usize, c: Option<Color>) {
        let i = self.index[&edge(a, b)];
        if let Some(old) = self.colors[i] {
            self.sums[a] -= u64::from(old);
            self.sums[b] -= u64::from(old);
            self.open[a] += 1;
            self.open[b] += 1;
        }
        if let Some(new) = c {
            self.sums[a] += u64::from(new);
            self.sums[b] += u64::from(new);
            self.open[a] -= 1;
            self.open[b] -= 1;
        }
        self.colors[i] = c;
    }

    pub(crate) fn colors(&self) -> impl Iterator<Item = (Edge, Option<Color>)> + '_ {
        self.edges.iter().copied().zip(self.colors.iter().copied())
    }

    fn swap(&mut self, e: Edge, f: Edge) {
        let (ce, cf) = (self.get(e.0, e.1), self.get(f.0, f.1));
        self.set(e.0, e.1, None);
        self.set(f.0, f.1, None);
        self.set(e.0, e.1, cf);
        self.set(f.0, f.1, ce);
    }

    fn saturated(&self, x: usize) -> bool {
        self.open[x] == 0
    }

    fn used_at(&self, x: usize) -> u64 {
        self.g
            .neighbors(x)
            .filter_map(|y| self.get(x, y))
            .fold(0, |acc, c| acc | (1 << c))
    }

    /// `Some(differs)` once the pair is determined, else `None`.
    fn pair_state(&self, x: usize, y: usize) -> Option<bool> {
        let c = self.get(x, y);
        let own = usize::from(c.is_none());
        if self.open[x] != own || self.open[y] != own {
            return None;
        }
        Some(self.sums[x] != self.sums[y])
    }

    fn pair_ok(&self, x: usize, y: usize) -> bool {
        self.pair_state(x, y) != Some(false)
    }

    fn touched_pairs_ok(&self, a: usize, b: usize, filter: PairFilter) -> bool {
        [a, b]
            .into_iter()
            .all(|x| self.g.neighbors(x).all(|y| !filter(edge(x, y)) || self.pair_ok(x, y)))
    }

    /// Colours the uncoloured edge `ab` with `c` if that keeps the colouring
    /// proper and every touched determined pair distinguished.
    fn try_color(&mut self, (a, b): Edge, c: Color, filter: PairFilter) -> bool {
        self.steps += 1;
        debug_assert!(self.get(a, b).is_none());
        if (self.used_at(a) | self.used_at(b)) & (1 << c) != 0 {
            return false;
        }
        self.set(a, b, Some(c));
        if self.touched_pairs_ok(a, b, filter) {
            true
        } else {
            self.set(a, b, None);
            false
        }
    }

    fn greedy_where(&mut self, e: Edge, filter: PairFilter, pred: impl Fn(Color) -> bool) -> bool {
        (1..=self.palette).any(|c| pred(c) && self.try_color(e, c, filter))
    }

    fn greedy(&mut self, e: Edge) -> bool {
        self.greedy_where(e, &every_pair, |_| true)
    }

    /// Colours all edges of `group` (each incident with `v`) at once: lists
    /// of individually admissible colours, then the first staircase
    /// selection whose sum avoids every fixed neighbour sum of `v`.
    fn rainbow_group(&mut self, v: usize, group: &[Edge]) -> bool {
        let t = group.len();
        let ends: BTreeSet<usize> = group.iter().map(|&(a, b)| if a == v { b } else { a }).collect();
        let lists: Vec<Vec<i64>> = group
            .iter()
            .map(|&e| {
                (1..=self.palette)
                    .filter(|&c| {
                        let ok = self.try_color(e, c, &every_pair);
                        if ok {
                            self.set(e.0, e.1, None);
                        }
                        ok
                    })
                    .map(i64::from)
                    .collect()
            })
            .collect();
        if lists.iter().any(|l| l.len() < t) {
            return false;
        }
        let base = self.sums[v] as i64;
        let forbidden: BTreeSet<i64> = self
            .g
            .neighbors(v)
            .filter(|x| !ends.contains(x) && self.saturated(*x))
            .map(|x| self.sums[x] as i64 - base)
            .collect();
        let Ok(pruned) = prune_lists(&ListFamily::new(lists)) else {
            return false;
        };
        for sel in staircase(&pruned) {
            if forbidden.contains(&sel.sum) {
                continue;
            }
            let mut placed = 0;
            for (&e, &c) in group.iter().zip(&sel.values) {
                if !self.try_color(e, c as Color, &every_pair) {
                    break;
                }
                placed += 1;
            }
            if placed == t {
                return true;
            }
            for &(a, b) in &group[..placed] {
                self.set(a, b, None);
            }
        }
        false
    }

    /// Total, proper, and every adjacent pair distinguished.
    pub(crate) fn complete_and_valid(&self) -> bool {
        self.colors.iter().all(Option::is_some)
            && (0..self.g.n()).all(|x| {
                let used = self.used_at(x);
                used.count_ones() as usize == self.g.degree(x)
            })
            && self.edges.iter().all(|&(a, b)| self.sums[a] != self.sums[b])
    }

    /// Re-colours the released edge of each bad 3-neighbour of `v` that
    /// still clashes with `v`.
    fn fix_bad_three_neighbours(&mut self, v: usize, class: &[VertexClass], releasable: &[Edge]) -> bool {
        let nbrs: Vec<usize> = self.g.neighbors(v).collect();
        for y in nbrs {
            if class[y].kind != crate::classify::VertexKind::BadThree || self.pair_ok(v, y) {
                continue;
            }
            let Some(&(a, b)) = releasable.iter().find(|&&(a, b)| a == y || b == y) else {
                return false;
            };
            let old = self.get(a, b);
            self.set(a, b, None);
            if !self.greedy((a, b)) {
                self.set(a, b, old);
                return false;
            }
        }
        true
    }
}

/// Runs the case's scripted moves on a lifted colouring. Returns whether the
/// result is a total nsd colouring.
pub(crate) fn run_script(work: &mut Work, plan: &ReductionPlan, host: &Graph) -> bool {
    let k = plan.config.k;
    let class = classify(host);
    let ok = match plan.script.clone() {
        Script::C1 { v, u } => work.greedy(edge(u, v)),
        Script::C2 { v, u, w } => work.greedy(edge(v, u)) && work.greedy(edge(v, w)),
        Script::C3 { v, u, w } => work.greedy(edge(u, v)) && work.greedy(edge(v, w)),
        Script::C4 { u, w } => work.greedy(edge(u, w)),
        Script::C5 { v, u, w, w1 } => {
            if work.pair_state(w, w1) == Some(false) {
                work.swap(edge(v, u), edge(v, w));
            }
            work.greedy(edge(w, w1))
        }
        Script::C6 {
            v,
            u,
            w,
            u1,
            w1,
            u2,
            w2,
        } => {
            let clash = |work: &Work| work.get(v, u) == work.get(u1, u2) || work.get(v, w) == work.get(w1, w2);
            if clash(work) {
                work.swap(edge(v, u), edge(v, w));
            }
            work.greedy(edge(u, u1)) && work.greedy(edge(w, w1))
        }
        Script::C7 { v, ones, w, far, two } => {
            let watched = two.unwrap_or(far);
            let good = |work: &Work| work.get(v, w) != work.get(w, far) && work.pair_ok(w, watched);
            if !good(work) {
                for x in ones {
                    work.swap(edge(v, w), edge(v, x));
                    if good(work) {
                        break;
                    }
                    work.swap(edge(v, w), edge(v, x));
                }
            }
            match two {
                Some(t) if !work.complete_and_valid() => {
                    work.set(w, t, None);
                    work.greedy(edge(w, t))
                }
                _ => true,
            }
        }
        Script::C8 { v, leaves } => {
            let group: Vec<Edge> = leaves.iter().map(|&x| edge(v, x)).collect();
            work.rainbow_group(v, &group)
        }
        Script::C9 { v, u, u1, w, two } => {
            work.rainbow_group(v, &[edge(v, u), edge(v, w)])
                && work.greedy(edge(u, u1))
                && two.is_none_or(|t| work.greedy(edge(w, t)))
        }
        Script::C10 { v, u, u1 } => {
            let checked = |e: Edge| {
                let x = if e.0 == v { e.1 } else { e.0 };
                !(e.0 == v || e.1 == v) || x == u || class[x].is_plain()
            };
            work.greedy_where(edge(v, u), &checked, |_| true)
                && work.greedy(edge(u, u1))
                && work.fix_bad_three_neighbours(v, &class, &plan.mutable)
        }
        Script::C11 { v, u } => {
            let checked = |e: Edge| {
                let x = if e.0 == v { e.1 } else { e.0 };
                !(e.0 == v || e.1 == v) || x == u || class[x].is_plain()
            };
            work.greedy_where(edge(v, u), &checked, |_| true) && work.fix_bad_three_neighbours(v, &class, &plan.mutable)
        }
        Script::C12 { v, us } => {
            let first = if k <= 8 {
                let off_v = |e: Edge| e.0 != v && e.1 != v;
                work.greedy_where(edge(v, us[1]), &off_v, |_| true)
                    && work.greedy_where(edge(v, us[0]), &off_v, |_| true)
            } else {
                work.rainbow_group(v, &[edge(v, us[0]), edge(v, us[1])])
            };
            first && plan.released.iter().all(|&e| work.greedy(e))
        }
        Script::C13Adjacent { v, good, bad } => work.greedy(edge(v, good)) && work.greedy(edge(good, bad)),
        Script::C13 { v, us } => {
            let first = if k == 6 {
                let w = host.neighbors(v).find(|x| !us.contains(x)).expect("fourth neighbour");
                let cw = work.get(v, w).unwrap_or(0);
                work.greedy_where(edge(v, us[0]), &every_pair, |c| c.max(cw) >= 5)
                    && work.rainbow_group(v, &[edge(v, us[1]), edge(v, us[2])])
            } else {
                work.rainbow_group(v, &[edge(v, us[0]), edge(v, us[1])])
            };
            first && plan.released.iter().all(|&e| work.greedy(e))
        }
    };
    ok && work.complete_and_valid()
}

/// Outcome of the exhaustive fallback.
pub(crate) enum Fallback {
    Solved,
    Exhausted,
    BudgetExceeded,
}

/// Exhaustive search over the free edges, which are cleared first.
pub(crate) fn fallback(work: &mut Work, free: &[Edge], budget: u64) -> Fallback {
    for &(a, b) in free {
        work.set(a, b, None);
    }
    work.steps = 0;
    match descend(work, free, 0, budget) {
        Some(true) => Fallback::Solved,
        Some(false) => Fallback::Exhausted,
        None => Fallback::BudgetExceeded,
    }
}

fn descend(work: &mut Work, free: &[Edge], i: usize, budget: u64) -> Option<bool> {
    if i == free.len() {
        return Some(work.complete_and_valid());
    }
    let e = free[i];
    for c in 1..=work.palette {
        if work.steps > budget {
            return None;
        }
        if work.try_color(e, c, &every_pair) {
            if descend(work, free, i + 1, budget)? {
                return Some(true);
            }
            work.set(e.0, e.1, None);
        }
    }
    Some(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn determined_pairs() {
        let g = path(3);
        let mut w = Work::new(&g, 7);
        assert_eq!(w.pair_state(0, 1), None);
        w.set(1, 2, Some(3));
        // s(0) = c(01) = s(1) − 3: determined and distinct
        assert_eq!(w.pair_state(0, 1), Some(true));
        assert!(w.try_color((0, 1), 1, &every_pair));
        assert!(w.complete_and_valid());
    }

    #[test]
    fn try_color_rejects_clash() {
        // 0-1-2-3: colouring 12 with 5 and 23 with 5 fails properness
        let g = path(4);
        let mut w = Work::new(&g, 7);
        w.set(1, 2, Some(5));
        assert!(!w.try_color((2, 3), 5, &every_pair));
        w.set(0, 1, Some(2));
        // s(1) = 7, s(2) = 5 + c(23): c = 2 gives a clash
        assert!(!w.try_color((2, 3), 2, &every_pair));
        assert!(w.try_color((2, 3), 1, &every_pair));
    }

    #[test]
    fn rainbow_group_on_star() {
        let g = star(6);
        let mut w = Work::new(&g, 7);
        w.set(0, 5, Some(1));
        w.set(0, 6, Some(2));
        let group: Vec<Edge> = (1..=4).map(|x| (0, x)).collect();
        assert!(w.rainbow_group(0, &group));
        assert!(w.complete_and_valid());
    }

    #[test]
    fn fallback_finds_colouring() {
        let g = cycle(5);
        let mut w = Work::new(&g, 5);
        let free: Vec<Edge> = g.edges().collect();
        assert!(matches!(fallback(&mut w, &free, 1_000_000), Fallback::Solved));
        assert!(w.complete_and_valid());
        let mut w = Work::new(&g, 4);
        assert!(matches!(fallback(&mut w, &free, 1_000_000), Fallback::Exhausted));
    }
}
