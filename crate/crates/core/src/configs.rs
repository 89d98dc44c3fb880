//! The thirteen reducible configurations C1–C13.
//!
//! Every matcher enumerates its matches in a canonical order: centre vertex
//! ascending, then role vertices ascending (set-valued roles as sorted
//! combinations in lexicographic order). Thresholds of the form "degree at
//! most x" with rational x are compared after clearing denominators.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::classify::{classify, VertexClass, VertexKind};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConfigKind {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
    C10,
    C11,
    C12,
    C13,
}

impl ConfigKind {
    pub const ALL: [ConfigKind; 13] = [
        ConfigKind::C1,
        ConfigKind::C2,
        ConfigKind::C3,
        ConfigKind::C4,
        ConfigKind::C5,
        ConfigKind::C6,
        ConfigKind::C7,
        ConfigKind::C8,
        ConfigKind::C9,
        ConfigKind::C10,
        ConfigKind::C11,
        ConfigKind::C12,
        ConfigKind::C13,
    ];

    /// 1-based index.
    pub fn index(self) -> usize {
        self as usize + 1
    }
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.index())
    }
}

/// Named vertex of a configuration. `Ui(i)` is `u_i`, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    V,
    U,
    W,
    Ui(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::V => f.write_str("v"),
            Role::U => f.write_str("u"),
            Role::W => f.write_str("w"),
            Role::Ui(i) => write!(f, "u{i}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConfigMatch {
    pub kind: ConfigKind,
    pub k: usize,
    pub roles: Vec<(Role, usize)>,
}

impl ConfigMatch {
    pub fn role(&self, r: Role) -> Option<usize> {
        self.roles.iter().find(|(x, _)| *x == r).map(|&(_, v)| v)
    }

    /// `u_1, u_2, …` in order.
    pub fn indexed(&self) -> Vec<usize> {
        self.roles
            .iter()
            .filter(|(r, _)| matches!(r, Role::Ui(_)))
            .map(|&(_, v)| v)
            .collect()
    }
}

impl fmt::Display for ConfigMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} k={} roles:", self.kind, self.k)?;
        for (r, v) in &self.roles {
            write!(f, " {r}={v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Only the first match of the lowest-index configuration present.
    FirstByIndex,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("k = {0} is below 6")]
    KTooSmall(usize),
    #[error("maximum degree {delta} exceeds k = {k}")]
    DegreeExceedsK { delta: usize, k: usize },
}

pub fn find_configs(g: &Graph, k: usize, mode: SearchMode) -> Result<Vec<ConfigMatch>, ConfigError> {
    if k < 6 {
        return Err(ConfigError::KTooSmall(k));
    }
    if g.max_degree() > k {
        return Err(ConfigError::DegreeExceedsK {
            delta: g.max_degree(),
            k,
        });
    }
    let ctx = Ctx {
        g,
        k,
        class: classify(g),
    };
    let mut out = Vec::new();
    for kind in ConfigKind::ALL {
        let mut emit = |roles: Vec<(Role, usize)>| {
            out.push(ConfigMatch { kind, k, roles });
            mode == SearchMode::All
        };
        ctx.scan(kind, &mut emit);
        if mode == SearchMode::FirstByIndex && !out.is_empty() {
            break;
        }
    }
    Ok(out)
}

/// First match of the lowest-index configuration, if any.
pub fn first_config(g: &Graph, k: usize) -> Result<Option<ConfigMatch>, ConfigError> {
    Ok(find_configs(g, k, SearchMode::FirstByIndex)?.into_iter().next())
}

struct Ctx<'g> {
    g: &'g Graph,
    k: usize,
    class: Vec<VertexClass>,
}

impl Ctx<'_> {
    fn d(&self, v: usize) -> usize {
        self.g.degree(v)
    }

    fn nbrs(&self, v: usize) -> Vec<usize> {
        self.g.neighbors(v).collect()
    }

    fn nbrs_where(&self, v: usize, f: impl Fn(&VertexClass) -> bool) -> Vec<usize> {
        self.g.neighbors(v).filter(|&x| f(&self.class[x])).collect()
    }

    /// Calls `emit` per match in canonical order until it returns false.
    fn scan(&self, kind: ConfigKind, emit: &mut dyn FnMut(Vec<(Role, usize)>) -> bool) {
        use Role::*;
        let (g, k) = (self.g, self.k);
        let bad_two = |c: &VertexClass| c.kind == VertexKind::BadTwo;
        let one = |c: &VertexClass| c.kind == VertexKind::One;
        let half = |c: &VertexClass| c.is_half_deficient();
        for v in 0..g.n() {
            let d = self.d(v);
            let cont = match kind {
                ConfigKind::C1 => {
                    d != 1
                        || self
                            .nbrs(v)
                            .into_iter()
                            .all(|u| 2 * self.d(u) > k + 2 || emit(vec![(V, v), (U, u)]))
                }
                ConfigKind::C2 => {
                    d != 2
                        || self.nbrs(v).into_iter().permutations(2).all(|p| {
                            let (u, w) = (p[0], p[1]);
                            !(2 * self.d(u) <= k + 1 && 2 * self.d(w) <= k) || emit(vec![(V, v), (U, u), (W, w)])
                        })
                }
                ConfigKind::C3 => {
                    d != 3
                        || self.nbrs(v).into_iter().permutations(2).all(|p| {
                            let (u, w) = (p[0], p[1]);
                            !(2 * self.d(u) <= k && self.d(w) == 2) || emit(vec![(V, v), (U, u), (W, w)])
                        })
                }
                ConfigKind::C4 => self.nbrs(v).into_iter().tuple_combinations().all(|(u, w)| {
                    !(self.d(u) == 2 && self.d(w) == 2 && g.has_edge(u, w)) || emit(vec![(V, v), (U, u), (W, w)])
                }),
                ConfigKind::C5 => {
                    let ones = self.nbrs_where(v, one);
                    let bads = self.nbrs_where(v, bad_two);
                    ones.iter()
                        .cartesian_product(bads.iter())
                        .all(|(&u, &w)| emit(vec![(V, v), (U, u), (W, w)]))
                }
                ConfigKind::C6 => self
                    .nbrs_where(v, bad_two)
                    .into_iter()
                    .tuple_combinations()
                    .all(|(u, w)| emit(vec![(V, v), (U, u), (W, w)])),
                ConfigKind::C7 => {
                    let ones = self.nbrs_where(v, one);
                    let halves = self.nbrs_where(v, half);
                    ones.into_iter().tuple_combinations().all(|(u1, u2)| {
                        halves
                            .iter()
                            .all(|&w| emit(vec![(V, v), (Ui(1), u1), (Ui(2), u2), (W, w)]))
                    })
                }
                ConfigKind::C8 => {
                    d < 3
                        || self.nbrs_where(v, one).into_iter().combinations(d - 2).all(|set| {
                            let mut roles = vec![(V, v)];
                            roles.extend(set.into_iter().enumerate().map(|(i, u)| (Ui(i + 1), u)));
                            emit(roles)
                        })
                }
                ConfigKind::C9 => {
                    let bads = self.nbrs_where(v, bad_two);
                    let halves = self.nbrs_where(v, half);
                    3 * d > 2 * k
                        || bads
                            .iter()
                            .cartesian_product(halves.iter())
                            .all(|(&u, &w)| emit(vec![(V, v), (U, u), (W, w)]))
                }
                ConfigKind::C10 => {
                    let bads = self.nbrs_where(v, bad_two);
                    let halves = self.nbrs_where(v, half).len();
                    let plain = self.nbrs_where(v, VertexClass::is_plain).len();
                    !(bads.len() == 1 && halves >= 1 && plain as i64 <= k as i64 - d as i64)
                        || emit(vec![(V, v), (U, bads[0])])
                }
                ConfigKind::C11 => {
                    let ones = self.nbrs_where(v, one);
                    let plain = self.nbrs_where(v, VertexClass::is_plain).len();
                    !(ones.len() == 1 && plain as i64 <= k as i64 - d as i64 + 1) || emit(vec![(V, v), (U, ones[0])])
                }
                ConfigKind::C12 => {
                    let halves = self.nbrs_where(v, half);
                    !(d == 5 && halves.len() == 5) || {
                        let mut roles = vec![(V, v)];
                        roles.extend(halves.into_iter().enumerate().map(|(i, u)| (Ui(i + 1), u)));
                        emit(roles)
                    }
                }
                ConfigKind::C13 => {
                    d != 4
                        || self.nbrs_where(v, half).into_iter().combinations(3).all(|set| {
                            let mut roles = vec![(V, v)];
                            roles.extend(set.into_iter().enumerate().map(|(i, u)| (Ui(i + 1), u)));
                            emit(roles)
                        })
                }
            };
            if !cont {
                return;
            }
        }
    }
}

/// Re-checks a match against its definition from scratch.
pub fn verify_match(g: &Graph, m: &ConfigMatch) -> bool {
    let n = g.n();
    let k = m.k;
    if k < 6 || m.roles.iter().any(|&(_, x)| x >= n) {
        return false;
    }
    let deg = |x: usize| g.degree(x);
    let has_two_nbr = |x: usize| g.neighbors(x).any(|y| deg(y) == 2);
    let is_one = |x: usize| deg(x) == 1;
    let is_bad_two = |x: usize| deg(x) == 2 && has_two_nbr(x);
    let is_half = |x: usize| (deg(x) == 2 && !has_two_nbr(x)) || (deg(x) == 3 && has_two_nbr(x));
    let adj = |a: usize, b: usize| g.has_edge(a, b);

    let named: Vec<Role> = m.roles.iter().map(|&(r, _)| r).collect();
    let get = |r: Role| m.role(r);
    let us = m.indexed();
    let expect_indexed = |count: usize| {
        let mut want = vec![Role::V];
        want.extend((1..=count).map(Role::Ui));
        named == want && us.windows(2).all(|p| p[0] < p[1])
    };
    let Some(v) = get(Role::V) else { return false };
    let d = deg(v);
    let vuw = || -> Option<(usize, usize)> {
        if named != [Role::V, Role::U, Role::W] {
            return None;
        }
        Some((get(Role::U)?, get(Role::W)?))
    };
    match m.kind {
        ConfigKind::C1 => {
            named == [Role::V, Role::U] && {
                let u = get(Role::U).unwrap();
                d == 1 && adj(v, u) && 2 * deg(u) <= k + 2
            }
        }
        ConfigKind::C2 => vuw()
            .is_some_and(|(u, w)| d == 2 && u != w && adj(v, u) && adj(v, w) && 2 * deg(u) <= k + 1 && 2 * deg(w) <= k),
        ConfigKind::C3 => {
            vuw().is_some_and(|(u, w)| d == 3 && u != w && adj(v, u) && adj(v, w) && 2 * deg(u) <= k && deg(w) == 2)
        }
        ConfigKind::C4 => {
            vuw().is_some_and(|(u, w)| u < w && adj(u, v) && adj(v, w) && adj(u, w) && deg(u) == 2 && deg(w) == 2)
        }
        ConfigKind::C5 => vuw().is_some_and(|(u, w)| adj(v, u) && adj(v, w) && is_one(u) && is_bad_two(w)),
        ConfigKind::C6 => vuw().is_some_and(|(u, w)| u < w && adj(v, u) && adj(v, w) && is_bad_two(u) && is_bad_two(w)),
        ConfigKind::C7 => {
            named == [Role::V, Role::Ui(1), Role::Ui(2), Role::W] && {
                let (u1, u2, w) = (us[0], us[1], get(Role::W).unwrap());
                u1 < u2 && [u1, u2, w].iter().all(|&x| adj(v, x)) && is_one(u1) && is_one(u2) && is_half(w)
            }
        }
        ConfigKind::C8 => d >= 3 && expect_indexed(d - 2) && us.iter().all(|&u| adj(v, u) && is_one(u)),
        ConfigKind::C9 => {
            vuw().is_some_and(|(u, w)| 3 * d <= 2 * k && adj(v, u) && adj(v, w) && is_bad_two(u) && is_half(w))
        }
        ConfigKind::C10 => {
            named == [Role::V, Role::U] && {
                let u = get(Role::U).unwrap();
                let bads: Vec<usize> = g.neighbors(v).filter(|&x| is_bad_two(x)).collect();
                let halves = g.neighbors(v).filter(|&x| is_half(x)).count();
                let plain = g
                    .neighbors(v)
                    .filter(|&x| !is_one(x) && !is_bad_two(x) && !is_half(x))
                    .count();
                bads == [u] && halves >= 1 && plain as i64 <= k as i64 - d as i64
            }
        }
        ConfigKind::C11 => {
            named == [Role::V, Role::U] && {
                let u = get(Role::U).unwrap();
                let ones: Vec<usize> = g.neighbors(v).filter(|&x| is_one(x)).collect();
                let plain = g
                    .neighbors(v)
                    .filter(|&x| !is_one(x) && !is_bad_two(x) && !is_half(x))
                    .count();
                ones == [u] && plain as i64 <= k as i64 - d as i64 + 1
            }
        }
        ConfigKind::C12 => d == 5 && expect_indexed(5) && us.iter().all(|&u| adj(v, u) && is_half(u)),
        ConfigKind::C13 => d == 4 && expect_indexed(3) && us.iter().all(|&u| adj(v, u) && is_half(u)),
    }
}
