//! Vertex taxonomy used by the configurations and the discharging rules.

use std::fmt;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexKind {
    Isolated,
    One,
    BadTwo,
    GoodTwo,
    BadThree,
    GoodThree,
    /// Degree at least 4.
    Big,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexClass {
    pub degree: usize,
    pub kind: VertexKind,
}

impl VertexClass {
    /// A 1-vertex or a bad 2-vertex.
    pub fn is_deficient(&self) -> bool {
        matches!(self.kind, VertexKind::One | VertexKind::BadTwo)
    }

    /// A good 2-vertex or a bad 3-vertex.
    pub fn is_half_deficient(&self) -> bool {
        matches!(self.kind, VertexKind::GoodTwo | VertexKind::BadThree)
    }

    /// Neither deficient nor half-deficient.
    pub fn is_plain(&self) -> bool {
        !self.is_deficient() && !self.is_half_deficient()
    }
}

impl fmt::Display for VertexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            VertexKind::Isolated => "isolated",
            VertexKind::One => "one",
            VertexKind::BadTwo => "bad-two",
            VertexKind::GoodTwo => "good-two",
            VertexKind::BadThree => "bad-three",
            VertexKind::GoodThree => "good-three",
            VertexKind::Big => "big",
        };
        f.write_str(s)
    }
}

/// Classifies every vertex. A 2- or 3-vertex is bad when it has a
/// neighbour of degree 2.
pub fn classify(g: &Graph) -> Vec<VertexClass> {
    (0..g.n())
        .map(|v| {
            let degree = g.degree(v);
            let bad = || g.neighbors(v).any(|w| g.degree(w) == 2);
            let kind = match degree {
                0 => VertexKind::Isolated,
                1 => VertexKind::One,
                2 if bad() => VertexKind::BadTwo,
                2 => VertexKind::GoodTwo,
                3 if bad() => VertexKind::BadThree,
                3 => VertexKind::GoodThree,
                _ => VertexKind::Big,
            };
            VertexClass { degree, kind }
        })
        .collect()
}

/// Whether a `d`-vertex is always sum-distinguished from a 2-neighbour in a
/// proper `(k+1)`-colouring: `1 + 2 + … + (d−1) > k + 1`.
pub fn distinguishes_two_neighbours(d: usize, k: usize) -> bool {
    d * d.saturating_sub(1) / 2 > k + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn path_and_cycle() {
        let c = classify(&path(4));
        assert_eq!(c[0].kind, VertexKind::One);
        assert!(c[0].is_deficient());
        assert_eq!(c[1].kind, VertexKind::BadTwo);
        assert_eq!(c[2].kind, VertexKind::BadTwo);
        assert!(c[1].is_deficient());

        assert!(classify(&cycle(6)).iter().all(|c| c.kind == VertexKind::BadTwo));
    }

    #[test]
    fn star_centre_is_plain() {
        let c = classify(&star(6));
        assert_eq!(c[0].kind, VertexKind::Big);
        assert!(c[0].is_plain());
        assert!(c[1..].iter().all(VertexClass::is_deficient));
    }

    #[test]
    fn half_deficient_kinds() {
        // triangle 0-1-2 closed into a 5-cycle through 2-3-4-0
        let g = crate::graph::Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let c = classify(&g);
        // 3 and 4 are 2-vertices adjacent to each other
        assert_eq!(c[3].kind, VertexKind::BadTwo);
        // 1 is a 2-vertex with neighbours of degree 3 and 3
        assert_eq!(c[1].kind, VertexKind::GoodTwo);
        assert!(c[1].is_half_deficient());
        // 0 has degree 3 and a 2-neighbour
        assert_eq!(c[0].kind, VertexKind::BadThree);
        assert!(c[0].is_half_deficient());
        assert!(!c[0].is_deficient());
    }

    #[test]
    fn two_neighbour_inequality() {
        assert!(distinguishes_two_neighbours(5, 6));
        assert!(!distinguishes_two_neighbours(4, 6));
        for k in 6usize..=100 {
            assert!(distinguishes_two_neighbours((k + 3).div_ceil(2), k), "k = {k}");
            assert!(distinguishes_two_neighbours((2 * k + 1).div_ceil(3), k), "k = {k}");
        }
    }
}
