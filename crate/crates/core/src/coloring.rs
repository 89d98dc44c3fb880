//! Edge colourings, vertex sums and the proper / nsd checks.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{edge, Edge, Graph};

pub type Color = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("{0}-{1} is not an edge of the host graph")]
    NotAnEdge(usize, usize),
    #[error("colour {color} outside 1..={palette}")]
    ColorOutOfRange { color: Color, palette: Color },
    #[error("edge {0}-{1} is uncoloured")]
    Unassigned(usize, usize),
    #[error("colouring is not proper at edges {0:?} and {1:?}")]
    NotProper(Edge, Edge),
    #[error("colouring covers a different edge set than the graph")]
    EdgeMismatch,
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// A partial or total assignment of colours `1..=palette` to the edges of
/// one host graph, with incrementally maintained vertex sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    palette: Color,
    colors: BTreeMap<Edge, Option<Color>>,
    sums: Vec<u64>,
}

impl EdgeColoring {
    /// Empty colouring of every edge of `g`.
    pub fn new(g: &Graph, palette: Color) -> Self {
        EdgeColoring {
            palette,
            colors: g.edges().map(|e| (e, None)).collect(),
            sums: vec![0; g.n()],
        }
    }

    pub fn palette(&self) -> Color {
        self.palette
    }

    /// Sets the colour of `uv`, returning the previous colour.
    pub fn assign(&mut self, u: usize, v: usize, c: Color) -> Result<Option<Color>, ColoringError> {
        if c == 0 || c > self.palette {
            return Err(ColoringError::ColorOutOfRange {
                color: c,
                palette: self.palette,
            });
        }
        let slot = self.colors.get_mut(&edge(u, v)).ok_or(ColoringError::NotAnEdge(u, v))?;
        let old = slot.replace(c);
        let delta = i64::from(c) - i64::from(old.unwrap_or(0));
        for w in [u, v] {
            self.sums[w] = self.sums[w].wrapping_add_signed(delta);
        }
        Ok(old)
    }

    /// Clears the colour of `uv`, returning the previous colour.
    pub fn unassign(&mut self, u: usize, v: usize) -> Result<Option<Color>, ColoringError> {
        let slot = self.colors.get_mut(&edge(u, v)).ok_or(ColoringError::NotAnEdge(u, v))?;
        let old = slot.take();
        if let Some(c) = old {
            self.sums[u] -= u64::from(c);
            self.sums[v] -= u64::from(c);
        }
        Ok(old)
    }

    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        self.colors.get(&edge(u, v)).copied().flatten()
    }

    /// Sum of the colours currently assigned at `v`.
    pub fn partial_sum(&self, v: usize) -> u64 {
        self.sums[v]
    }

    pub fn is_total(&self) -> bool {
        self.colors.values().all(Option::is_some)
    }

    /// `(edge, colour)` pairs in lexicographic edge order.
    pub fn iter(&self) -> impl Iterator<Item = (Edge, Option<Color>)> + '_ {
        self.colors.iter().map(|(&e, &c)| (e, c))
    }

    pub fn max_color(&self) -> Option<Color> {
        self.colors.values().flatten().copied().max()
    }

    /// Sums rebuilt from the assignment, for auditing the cache.
    pub fn recomputed_sums(&self) -> Vec<u64> {
        let mut sums = vec![0; self.sums.len()];
        for (&(u, v), c) in &self.colors {
            if let Some(c) = c {
                sums[u] += u64::from(*c);
                sums[v] += u64::from(*c);
            }
        }
        sums
    }

    pub fn sums_consistent(&self) -> bool {
        self.recomputed_sums() == self.sums
    }

    /// `u v c` lines sorted by `(u, v)`; uncoloured edges are skipped.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for ((u, v), c) in self.iter() {
            if let Some(c) = c {
                writeln!(out, "{u} {v} {c}").unwrap();
            }
        }
        out
    }

    /// Parses `u v c` lines for host `g`. The palette is the largest colour
    /// seen unless given. Every edge of `g` must appear exactly once.
    pub fn from_text(g: &Graph, text: &str, palette: Option<Color>) -> Result<Self, ColoringError> {
        let mut entries = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let bad = |reason: &str| ColoringError::Parse {
                line: line_no,
                reason: reason.to_string(),
            };
            if fields.len() != 3 {
                return Err(bad("expected `u v c`"));
            }
            let u: usize = fields[0].parse().map_err(|_| bad("bad vertex"))?;
            let v: usize = fields[1].parse().map_err(|_| bad("bad vertex"))?;
            let c: Color = fields[2].parse().map_err(|_| bad("bad colour"))?;
            entries.push((line_no, u, v, c));
        }
        let palette = palette
            .unwrap_or_else(|| entries.iter().map(|e| e.3).max().unwrap_or(1))
            .max(1);
        let mut col = EdgeColoring::new(g, palette);
        for (line, u, v, c) in entries {
            if col.assign(u, v, c)?.is_some() {
                return Err(ColoringError::Parse {
                    line,
                    reason: format!("edge {u}-{v} coloured twice"),
                });
            }
        }
        if !col.is_total() {
            return Err(ColoringError::EdgeMismatch);
        }
        Ok(col)
    }
}

fn check_host(g: &Graph, col: &EdgeColoring) -> Result<(), ColoringError> {
    if col.colors.len() != g.m() || col.sums.len() != g.n() || !g.edges().all(|e| col.colors.contains_key(&e)) {
        return Err(ColoringError::EdgeMismatch);
    }
    Ok(())
}

fn require_total(col: &EdgeColoring) -> Result<(), ColoringError> {
    match col.iter().find(|(_, c)| c.is_none()) {
        Some(((u, v), _)) => Err(ColoringError::Unassigned(u, v)),
        None => Ok(()),
    }
}

/// First pair of adjacent edges sharing a colour, if any.
fn first_clash(g: &Graph, col: &EdgeColoring) -> Option<(Edge, Edge)> {
    for v in 0..g.n() {
        let mut seen: BTreeMap<Color, usize> = BTreeMap::new();
        for w in g.neighbors(v) {
            if let Some(c) = col.color(v, w) {
                if let Some(&x) = seen.get(&c) {
                    return Some((edge(v, x), edge(v, w)));
                }
                seen.insert(c, w);
            }
        }
    }
    None
}

/// Whether adjacent edges always receive different colours.
pub fn is_proper(g: &Graph, col: &EdgeColoring) -> Result<bool, ColoringError> {
    check_host(g, col)?;
    require_total(col)?;
    Ok(first_clash(g, col).is_none())
}

/// `s(v)`: the sum of the colours on edges incident with `v`.
pub fn vertex_sum(g: &Graph, col: &EdgeColoring, v: usize) -> Result<u64, ColoringError> {
    let mut s = 0;
    for w in g.neighbors(v) {
        s += u64::from(col.color(v, w).ok_or(ColoringError::Unassigned(v.min(w), v.max(w)))?);
    }
    Ok(s)
}

/// Whether `col` is a neighbour sum distinguishing colouring of `g`.
///
/// Errors on a partial colouring or a colouring that is not proper.
pub fn is_nsd(g: &Graph, col: &EdgeColoring) -> Result<bool, ColoringError> {
    check_host(g, col)?;
    require_total(col)?;
    if let Some((a, b)) = first_clash(g, col) {
        return Err(ColoringError::NotProper(a, b));
    }
    let sums: Vec<u64> = (0..g.n()).map(|v| vertex_sum(g, col, v)).collect::<Result<_, _>>()?;
    Ok(g.edges().all(|(u, v)| sums[u] != sums[v]))
}

/// Edges whose endpoints have equal sums.
pub fn sum_conflicts(g: &Graph, col: &EdgeColoring) -> Vec<Edge> {
    let sums = col.recomputed_sums();
    g.edges().filter(|&(u, v)| sums[u] == sums[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn colored(g: &Graph, palette: Color, colors: &[Color]) -> EdgeColoring {
        let mut col = EdgeColoring::new(g, palette);
        for ((u, v), &c) in g.edges().collect::<Vec<_>>().into_iter().zip(colors) {
            col.assign(u, v, c).unwrap();
        }
        col
    }

    #[test]
    fn proper_examples() {
        let p3 = path(3);
        assert!(is_proper(&p3, &colored(&p3, 2, &[1, 2])).unwrap());
        assert!(!is_proper(&p3, &colored(&p3, 2, &[1, 1])).unwrap());
        let k16 = star(6);
        assert!(is_proper(&k16, &colored(&k16, 6, &[1, 2, 3, 4, 5, 6])).unwrap());
        assert_eq!(
            is_proper(&p3, &colored(&p3, 2, &[1])),
            Err(ColoringError::Unassigned(1, 2))
        );
    }

    #[test]
    fn sum_examples() {
        let k16 = star(6);
        let col = colored(&k16, 6, &[1, 2, 3, 4, 5, 6]);
        assert_eq!(vertex_sum(&k16, &col, 0).unwrap(), 21);
        assert_eq!(vertex_sum(&k16, &col, 4).unwrap(), 4);
        let p3 = path(3);
        assert_eq!(vertex_sum(&p3, &colored(&p3, 2, &[1, 2]), 1).unwrap(), 3);
        assert_eq!(
            vertex_sum(&p3, &colored(&p3, 2, &[1]), 1),
            Err(ColoringError::Unassigned(1, 2))
        );
    }

    #[test]
    fn nsd_examples() {
        let k16 = star(6);
        assert!(is_nsd(&k16, &colored(&k16, 6, &[1, 2, 3, 4, 5, 6])).unwrap());
        let k2 = path(2);
        assert!(!is_nsd(&k2, &colored(&k2, 1, &[1])).unwrap());
        let p3 = path(3);
        assert!(is_nsd(&p3, &colored(&p3, 2, &[1, 2])).unwrap());
        assert!(matches!(
            is_nsd(&p3, &colored(&p3, 2, &[1, 1])),
            Err(ColoringError::NotProper(..))
        ));
        assert!(matches!(
            is_nsd(&p3, &colored(&p3, 2, &[2])),
            Err(ColoringError::Unassigned(..))
        ));
    }

    #[test]
    fn rejects_foreign_edges_and_colours() {
        let p3 = path(3);
        let mut col = EdgeColoring::new(&p3, 3);
        assert_eq!(col.assign(0, 2, 1), Err(ColoringError::NotAnEdge(0, 2)));
        assert_eq!(
            col.assign(0, 1, 4),
            Err(ColoringError::ColorOutOfRange { color: 4, palette: 3 })
        );
        assert_eq!(is_proper(&path(4), &col), Err(ColoringError::EdgeMismatch));
    }

    #[test]
    fn text_round_trip() {
        let k16 = star(6);
        let col = colored(&k16, 7, &[3, 1, 2, 7, 5, 6]);
        let text = col.to_text();
        assert!(text.starts_with("0 1 3\n0 2 1\n"));
        let back = EdgeColoring::from_text(&k16, &text, Some(7)).unwrap();
        assert_eq!(back, col);
        assert_eq!(
            EdgeColoring::from_text(&k16, "0 1 1\n", None),
            Err(ColoringError::EdgeMismatch)
        );
        assert!(matches!(
            EdgeColoring::from_text(&k16, "0 1\n", None),
            Err(ColoringError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn cache_tracks_reassignment() {
        let g = cycle(5);
        let mut col = EdgeColoring::new(&g, 5);
        col.assign(0, 1, 3).unwrap();
        col.assign(1, 2, 4).unwrap();
        col.assign(0, 1, 5).unwrap();
        col.unassign(1, 2).unwrap();
        assert!(col.sums_consistent());
        assert_eq!(col.partial_sum(1), 5);
    }
}
