//! Graph transforms `H → H′`, one per configuration.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::classify::{classify, VertexKind};
use crate::configs::{ConfigKind, ConfigMatch, Role};
use crate::graph::{edge, DegreeProfile, Edge, Graph};

use super::ColorerError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Edit {
    DeleteVertex(usize),
    DeleteEdge(Edge),
    AddEdge(Edge),
    /// A fresh vertex takes over the edges from `vertex` to `moved`.
    SplitVertex {
        vertex: usize,
        moved: Vec<usize>,
    },
}

/// Sub-case of a configuration where the extension argument branches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Branch {
    Single,
    GoodTwo,
    BadThree,
    SmallK,
    LargeK,
    Adjacent,
    IndependentK6,
    IndependentLargeK,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Branch::Single => "single",
            Branch::GoodTwo => "good-two",
            Branch::BadThree => "bad-three",
            Branch::SmallK => "k<=8",
            Branch::LargeK => "k>=9",
            Branch::Adjacent => "adjacent",
            Branch::IndependentK6 => "independent-k6",
            Branch::IndependentLargeK => "independent-k7+",
        };
        f.write_str(s)
    }
}

/// Named vertices the extension step needs, per configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Script {
    C1 {
        v: usize,
        u: usize,
    },
    C2 {
        v: usize,
        u: usize,
        w: usize,
    },
    C3 {
        v: usize,
        u: usize,
        w: usize,
    },
    C4 {
        u: usize,
        w: usize,
    },
    C5 {
        v: usize,
        u: usize,
        w: usize,
        w1: usize,
    },
    C6 {
        v: usize,
        u: usize,
        w: usize,
        u1: usize,
        w1: usize,
        u2: usize,
        w2: usize,
    },
    C7 {
        v: usize,
        ones: [usize; 2],
        w: usize,
        far: usize,
        two: Option<usize>,
    },
    C8 {
        v: usize,
        leaves: Vec<usize>,
    },
    C9 {
        v: usize,
        u: usize,
        u1: usize,
        w: usize,
        two: Option<usize>,
    },
    C10 {
        v: usize,
        u: usize,
        u1: usize,
    },
    C11 {
        v: usize,
        u: usize,
    },
    C12 {
        v: usize,
        us: Vec<usize>,
    },
    C13Adjacent {
        v: usize,
        good: usize,
        bad: usize,
    },
    C13 {
        v: usize,
        us: Vec<usize>,
    },
}

#[derive(Debug, Clone)]
pub struct ReductionPlan {
    pub kind: ConfigKind,
    pub branch: Branch,
    pub config: ConfigMatch,
    pub edits: Vec<Edit>,
    pub reduced: Graph,
    /// Old→new vertex map from `H` to `H′` (`None` for deleted vertices).
    pub vertex_map: Vec<Option<usize>>,
    /// Surviving edges of `H` paired with their images in `H′`.
    pub edge_correspondence: Vec<(Edge, Edge)>,
    /// Edges of `H` left uncoloured once `H′`'s colouring is lifted,
    /// including deliberately released ones.
    pub uncolored_after_lift: Vec<Edge>,
    /// Lifted edges the extension may recolour.
    pub mutable: Vec<Edge>,
    pub affected: BTreeSet<usize>,
    pub profile_before: DegreeProfile,
    pub profile_after: DegreeProfile,
    pub(crate) released: Vec<Edge>,
    pub(crate) script: Script,
}

struct Builder<'g> {
    g: &'g Graph,
    kind: ConfigKind,
}

impl Builder<'_> {
    fn guard(&self, ok: bool, what: &str) -> Result<(), ColorerError> {
        if ok {
            Ok(())
        } else {
            Err(ColorerError::Guard {
                kind: self.kind,
                reason: what.to_string(),
            })
        }
    }

    fn other_neighbour(&self, x: usize, not: usize) -> Result<usize, ColorerError> {
        let found = self.g.neighbors(x).find(|&y| y != not);
        found.ok_or_else(|| ColorerError::Guard {
            kind: self.kind,
            reason: format!("vertex {x} has no neighbour besides {not}"),
        })
    }

    fn two_neighbour(&self, x: usize, not: usize) -> Option<usize> {
        self.g.neighbors(x).find(|&y| y != not && self.g.degree(y) == 2)
    }
}

fn role(m: &ConfigMatch, r: Role) -> Result<usize, ColorerError> {
    m.role(r).ok_or_else(|| ColorerError::Guard {
        kind: m.kind,
        reason: format!("match has no role {r}"),
    })
}

/// Builds the transform for a verified match.
pub fn reduce(g: &Graph, m: &ConfigMatch) -> Result<ReductionPlan, ColorerError> {
    let b = Builder { g, kind: m.kind };
    let class = classify(g);
    let k = m.k;
    let mut released = Vec::new();
    let mut mutable = Vec::new();
    // bad 3-vertices release one edge to a 2-vertex
    let release_for = |x: usize, not: usize, out: &mut Vec<Edge>| {
        if class[x].kind == VertexKind::BadThree {
            if let Some(y) = b.two_neighbour(x, not) {
                out.push(edge(x, y));
            }
        }
    };
    use Edit::*;
    let (branch, edits, script) = match m.kind {
        ConfigKind::C1 => {
            let (v, u) = (role(m, Role::V)?, role(m, Role::U)?);
            (Branch::Single, vec![DeleteVertex(v)], Script::C1 { v, u })
        }
        ConfigKind::C2 => {
            let (v, u, w) = (role(m, Role::V)?, role(m, Role::U)?, role(m, Role::W)?);
            (Branch::Single, vec![DeleteVertex(v)], Script::C2 { v, u, w })
        }
        ConfigKind::C3 => {
            let (v, u, w) = (role(m, Role::V)?, role(m, Role::U)?, role(m, Role::W)?);
            (
                Branch::Single,
                vec![DeleteEdge(edge(u, v)), DeleteEdge(edge(v, w))],
                Script::C3 { v, u, w },
            )
        }
        ConfigKind::C4 => {
            let (u, w) = (role(m, Role::U)?, role(m, Role::W)?);
            (Branch::Single, vec![DeleteEdge(edge(u, w))], Script::C4 { u, w })
        }
        ConfigKind::C5 => {
            let (v, u, w) = (role(m, Role::V)?, role(m, Role::U)?, role(m, Role::W)?);
            let w1 = b.two_neighbour(w, v);
            b.guard(w1.is_some(), "w has no 2-neighbour besides v")?;
            let w1 = w1.unwrap();
            mutable.extend([edge(v, u), edge(v, w)]);
            (
                Branch::Single,
                vec![DeleteEdge(edge(w, w1))],
                Script::C5 { v, u, w, w1 },
            )
        }
        ConfigKind::C6 => {
            let (v, u, w) = (role(m, Role::V)?, role(m, Role::U)?, role(m, Role::W)?);
            let u1 = b.other_neighbour(u, v)?;
            let w1 = b.other_neighbour(w, v)?;
            b.guard(g.degree(u1) == 2 && g.degree(w1) == 2, "u' and w' must be 2-vertices")?;
            b.guard(
                u1 != w1 && u1 != w && w1 != u,
                "u', w' must be distinct from the other roles",
            )?;
            b.guard(!g.has_edge(u1, w1), "u' and w' are adjacent")?;
            let u2 = b.other_neighbour(u1, u)?;
            let w2 = b.other_neighbour(w1, w)?;
            mutable.extend([edge(v, u), edge(v, w)]);
            (
                Branch::Single,
                vec![AddEdge(edge(u1, w1)), DeleteEdge(edge(u, u1)), DeleteEdge(edge(w, w1))],
                Script::C6 {
                    v,
                    u,
                    w,
                    u1,
                    w1,
                    u2,
                    w2,
                },
            )
        }
        ConfigKind::C7 => {
            let v = role(m, Role::V)?;
            let ones = m.indexed();
            let w = role(m, Role::W)?;
            b.guard(ones.len() == 2, "C7 needs two 1-vertices")?;
            let ones = [ones[0], ones[1]];
            mutable.extend([edge(v, w), edge(v, ones[0]), edge(v, ones[1])]);
            if g.degree(w) == 2 {
                let far = b.other_neighbour(w, v)?;
                (
                    Branch::GoodTwo,
                    vec![SplitVertex {
                        vertex: w,
                        moved: vec![far],
                    }],
                    Script::C7 {
                        v,
                        ones,
                        w,
                        far,
                        two: None,
                    },
                )
            } else {
                let two = b.two_neighbour(w, v);
                b.guard(two.is_some(), "bad 3-vertex w has no 2-neighbour besides v")?;
                let two = two.unwrap();
                let far = g.neighbors(w).find(|&y| y != v && y != two).expect("degree 3");
                mutable.push(edge(w, two));
                (
                    Branch::BadThree,
                    vec![SplitVertex {
                        vertex: w,
                        moved: vec![far, two],
                    }],
                    Script::C7 {
                        v,
                        ones,
                        w,
                        far,
                        two: Some(two),
                    },
                )
            }
        }
        ConfigKind::C8 => {
            let v = role(m, Role::V)?;
            let leaves = m.indexed();
            (
                Branch::Single,
                leaves.iter().map(|&x| DeleteVertex(x)).collect(),
                Script::C8 { v, leaves },
            )
        }
        ConfigKind::C9 => {
            let (v, u, w) = (role(m, Role::V)?, role(m, Role::U)?, role(m, Role::W)?);
            let u1 = b.other_neighbour(u, v)?;
            let two = if g.degree(w) == 3 { b.two_neighbour(w, v) } else { None };
            if let Some(t) = two {
                released.push(edge(w, t));
            }
            let mut edits = vec![DeleteEdge(edge(v, u)), DeleteEdge(edge(u, u1))];
            if !edits.contains(&DeleteEdge(edge(v, w))) {
                edits.push(DeleteEdge(edge(v, w)));
            }
            let branch = if g.degree(w) == 2 {
                Branch::GoodTwo
            } else {
                Branch::BadThree
            };
            (branch, edits, Script::C9 { v, u, u1, w, two })
        }
        ConfigKind::C10 => {
            let (v, u) = (role(m, Role::V)?, role(m, Role::U)?);
            let u1 = b.other_neighbour(u, v)?;
            for x in g.neighbors(v) {
                release_for(x, v, &mut mutable);
            }
            (
                Branch::Single,
                vec![DeleteEdge(edge(v, u)), DeleteEdge(edge(u, u1))],
                Script::C10 { v, u, u1 },
            )
        }
        ConfigKind::C11 => {
            let (v, u) = (role(m, Role::V)?, role(m, Role::U)?);
            for x in g.neighbors(v) {
                release_for(x, v, &mut mutable);
            }
            (Branch::Single, vec![DeleteVertex(u)], Script::C11 { v, u })
        }
        ConfigKind::C12 => {
            let v = role(m, Role::V)?;
            let mut us = m.indexed();
            b.guard(us.len() == 5, "C12 needs five neighbours")?;
            let pair = (0..5)
                .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .find(|&(i, j)| !g.has_edge(us[i], us[j]));
            b.guard(pair.is_some(), "no non-adjacent pair among u1..u5")?;
            let (i, j) = pair.unwrap();
            let (a, c) = (us[i], us[j]);
            us.retain(|&x| x != a && x != c);
            us.splice(0..0, [a, c]);
            for &x in &us {
                release_for(x, v, &mut released);
            }
            let branch = if k <= 8 { Branch::SmallK } else { Branch::LargeK };
            (
                branch,
                vec![DeleteEdge(edge(v, us[0])), DeleteEdge(edge(v, us[1]))],
                Script::C12 { v, us },
            )
        }
        ConfigKind::C13 => {
            let v = role(m, Role::V)?;
            let us = m.indexed();
            b.guard(us.len() == 3, "C13 needs three neighbours")?;
            let adjacent = [(0, 1), (0, 2), (1, 2)]
                .into_iter()
                .find(|&(i, j)| g.has_edge(us[i], us[j]));
            if let Some((i, j)) = adjacent {
                let (good, bad) = if g.degree(us[i]) <= g.degree(us[j]) {
                    (us[i], us[j])
                } else {
                    (us[j], us[i])
                };
                (
                    Branch::Adjacent,
                    vec![DeleteEdge(edge(v, good)), DeleteEdge(edge(good, bad))],
                    Script::C13Adjacent { v, good, bad },
                )
            } else {
                let w = g.neighbors(v).find(|x| !us.contains(x));
                b.guard(w.is_some(), "4-vertex has no fourth neighbour")?;
                let cut = if k == 6 { 3 } else { 2 };
                for &x in &us[..cut] {
                    release_for(x, v, &mut released);
                }
                let branch = if k == 6 {
                    Branch::IndependentK6
                } else {
                    Branch::IndependentLargeK
                };
                (
                    branch,
                    us[..cut].iter().map(|&x| DeleteEdge(edge(v, x))).collect(),
                    Script::C13 { v, us },
                )
            }
        }
    };
    released.sort_unstable();
    released.dedup();
    mutable.retain(|e| !released.contains(e));
    mutable.sort_unstable();
    mutable.dedup();
    build(g, m, branch, edits, released, mutable, script)
}

fn build(
    g: &Graph,
    m: &ConfigMatch,
    branch: Branch,
    edits: Vec<Edit>,
    released: Vec<Edge>,
    mutable: Vec<Edge>,
    script: Script,
) -> Result<ReductionPlan, ColorerError> {
    let k = m.k;
    let guard = |reason: String| ColorerError::Guard { kind: m.kind, reason };
    let mut h = g.clone();
    // current edge of the working graph → originating edge of g
    let mut origin: BTreeMap<Edge, Option<Edge>> = g.edges().map(|e| (e, Some(e))).collect();
    let mut doomed = Vec::new();
    let mut affected = BTreeSet::new();
    for e in &edits {
        match e {
            Edit::DeleteVertex(x) => {
                let nbrs: Vec<usize> = h.neighbors(*x).collect();
                for y in nbrs {
                    h.remove_edge(*x, y);
                    origin.remove(&edge(*x, y));
                }
                doomed.push(*x);
            }
            Edit::DeleteEdge((a, b)) => {
                if !h.remove_edge(*a, *b) {
                    return Err(guard(format!("edge {a}-{b} missing")));
                }
                origin.remove(&edge(*a, *b));
            }
            Edit::AddEdge((a, b)) => {
                if a == b || h.has_edge(*a, *b) {
                    return Err(guard(format!("cannot add {a}-{b}")));
                }
                h.add_edge(*a, *b).map_err(|err| guard(err.to_string()))?;
                origin.insert(edge(*a, *b), None);
                affected.extend([*a, *b]);
            }
            Edit::SplitVertex { vertex, moved } => {
                let fresh = h.add_vertex();
                for &y in moved {
                    let o = origin
                        .remove(&edge(*vertex, y))
                        .ok_or_else(|| guard(format!("edge {vertex}-{y} missing")))?;
                    h.remove_edge(*vertex, y);
                    h.add_edge(fresh, y).map_err(|err| guard(err.to_string()))?;
                    origin.insert(edge(fresh, y), o);
                }
                affected.insert(*vertex);
            }
        }
    }
    let map = h.delete_vertices(&doomed);
    let edge_correspondence: Vec<(Edge, Edge)> = origin
        .iter()
        .filter_map(|(&(a, b), o)| o.map(|he| (he, edge(map[a].expect("surviving"), map[b].expect("surviving")))))
        .collect();
    let kept: BTreeSet<Edge> = edge_correspondence.iter().map(|&(he, _)| he).collect();
    let mut uncolored_after_lift: Vec<Edge> = g.edges().filter(|e| !kept.contains(e)).collect();
    uncolored_after_lift.extend(released.iter().copied());
    uncolored_after_lift.sort_unstable();
    uncolored_after_lift.dedup();
    for &(a, b) in uncolored_after_lift.iter().chain(&mutable) {
        affected.extend([a, b]);
    }

    if h.max_degree() > k {
        return Err(guard(format!("reduced graph has degree {} > k", h.max_degree())));
    }
    let profile_before = g.degree_profile(k).map_err(|err| guard(err.to_string()))?;
    let profile_after = h.degree_profile(k).map_err(|err| guard(err.to_string()))?;
    if !profile_after.precedes(&profile_before).expect("same cap") {
        return Err(ColorerError::ProfileNotDecreasing {
            kind: m.kind,
            before: profile_before.to_string(),
            after: profile_after.to_string(),
        });
    }
    Ok(ReductionPlan {
        kind: m.kind,
        branch,
        config: m.clone(),
        edits,
        reduced: h,
        vertex_map: map[..g.n()].to_vec(),
        edge_correspondence,
        uncolored_after_lift,
        mutable,
        affected,
        profile_before,
        profile_after,
        released,
        script,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configs::first_config;
    use crate::graph::families::*;

    #[test]
    fn star_drops_four_leaves() {
        let g = star(6);
        let m = first_config(&g, 6).unwrap().unwrap();
        let plan = reduce(&g, &m).unwrap();
        assert_eq!(plan.reduced.n(), 3);
        assert_eq!(plan.reduced.m(), 2);
        assert_eq!(plan.reduced.max_degree(), 2);
        assert_eq!(plan.uncolored_after_lift.len(), 4);
        assert!(plan.profile_after.precedes(&plan.profile_before).unwrap());
    }

    #[test]
    fn path_drops_end() {
        let g = path(4);
        let m = first_config(&g, 6).unwrap().unwrap();
        let plan = reduce(&g, &m).unwrap();
        assert_eq!(plan.reduced, path(3));
        assert_eq!(plan.uncolored_after_lift, vec![(0, 1)]);
        assert_eq!(plan.vertex_map, vec![None, Some(0), Some(1), Some(2)]);
    }

    #[test]
    fn triangle_loses_its_base() {
        // triangle 0-1-2 with 1,2 of degree 2 and a pendant path on 0
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        let m = ConfigMatch {
            kind: ConfigKind::C4,
            k: 6,
            roles: vec![(Role::V, 0), (Role::U, 1), (Role::W, 2)],
        };
        assert!(crate::configs::verify_match(&g, &m));
        let plan = reduce(&g, &m).unwrap();
        assert_eq!(plan.reduced.n(), 5);
        assert!(!plan.reduced.has_edge(1, 2));
        assert_eq!(plan.reduced.m(), g.m() - 1);
        assert!(plan.profile_after.count(2) < plan.profile_before.count(2));
    }

    #[test]
    fn split_keeps_edge_images() {
        // v=0 with leaves 1,2 and a good 2-vertex 3 whose other neighbour is 4 (degree 3)
        let g = Graph::from_edges(7, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6), (5, 6)]).unwrap();
        let m = ConfigMatch {
            kind: ConfigKind::C7,
            k: 6,
            roles: vec![(Role::V, 0), (Role::Ui(1), 1), (Role::Ui(2), 2), (Role::W, 3)],
        };
        assert!(crate::configs::verify_match(&g, &m));
        let plan = reduce(&g, &m).unwrap();
        assert_eq!(plan.branch, Branch::GoodTwo);
        assert_eq!(plan.reduced.n(), 8);
        assert_eq!(plan.reduced.degree(3), 1);
        assert_eq!(plan.reduced.degree(7), 1);
        assert!(plan.edge_correspondence.contains(&((3, 4), (4, 7))));
        assert!(plan.uncolored_after_lift.is_empty());
    }
}
