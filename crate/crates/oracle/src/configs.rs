//! Every configuration occurrence, found by trying all vertex tuples.
//!
//! A match is `(index, roles)` with `roles[0] = v`. Roles that are
//! interchangeable (the two 2-vertices of a triangle or pair, the two
//! 1-vertices of C7, the sets of C8, C12 and C13) are listed in increasing
//! order; all others keep their named order `u, w`.

use std::collections::BTreeSet;

use crate::{degrees, matrix};

pub type Match = (usize, Vec<usize>);

struct View {
    n: usize,
    k: usize,
    adj: Vec<Vec<bool>>,
    deg: Vec<usize>,
}

impl View {
    fn has_two_neighbour(&self, x: usize) -> bool {
        (0..self.n).any(|y| self.adj[x][y] && self.deg[y] == 2)
    }
    fn one(&self, x: usize) -> bool {
        self.deg[x] == 1
    }
    fn bad_two(&self, x: usize) -> bool {
        self.deg[x] == 2 && self.has_two_neighbour(x)
    }
    fn good_two(&self, x: usize) -> bool {
        self.deg[x] == 2 && !self.has_two_neighbour(x)
    }
    fn bad_three(&self, x: usize) -> bool {
        self.deg[x] == 3 && self.has_two_neighbour(x)
    }
    fn deficient(&self, x: usize) -> bool {
        self.one(x) || self.bad_two(x)
    }
    fn half(&self, x: usize) -> bool {
        self.good_two(x) || self.bad_three(x)
    }
    fn neighbours(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&x| self.adj[v][x]).collect()
    }
    fn subsets(&self, v: usize, size: usize, pred: impl Fn(usize) -> bool) -> Vec<Vec<usize>> {
        (0u32..1 << self.n)
            .filter(|m| m.count_ones() as usize == size)
            .map(|m| (0..self.n).filter(|&x| m >> x & 1 == 1).collect::<Vec<_>>())
            .filter(|s| s.iter().all(|&x| self.adj[v][x] && pred(x)))
            .collect()
    }
}

pub fn all_matches(n: usize, edges: &[(usize, usize)], k: usize) -> BTreeSet<Match> {
    assert!(n <= 16);
    let view = View {
        n,
        k,
        adj: matrix(n, edges),
        deg: degrees(n, edges),
    };
    let mut out = BTreeSet::new();
    for v in 0..n {
        scan_vertex(&view, v, &mut out);
    }
    out
}

fn scan_vertex(g: &View, v: usize, out: &mut BTreeSet<Match>) {
    let (n, k, d) = (g.n, g.k as i64, g.deg[v] as i64);
    let a = |x: usize, y: usize| g.adj[x][y];
    let deg = |x: usize| g.deg[x] as i64;
    for u in 0..n {
        if !a(v, u) {
            continue;
        }
        // x ≤ k/2 + 1 etc. compared after doubling
        if d == 1 && 2 * deg(u) <= k + 2 {
            out.insert((1, vec![v, u]));
        }
        for w in 0..n {
            if w == u || !a(v, w) {
                continue;
            }
            if d == 2 && 2 * deg(u) <= k + 1 && 2 * deg(w) <= k {
                out.insert((2, vec![v, u, w]));
            }
            if d == 3 && 2 * deg(u) <= k && deg(w) == 2 {
                out.insert((3, vec![v, u, w]));
            }
            if u < w && a(u, w) && deg(u) == 2 && deg(w) == 2 {
                out.insert((4, vec![v, u, w]));
            }
            if g.one(u) && g.bad_two(w) {
                out.insert((5, vec![v, u, w]));
            }
            if u < w && g.bad_two(u) && g.bad_two(w) {
                out.insert((6, vec![v, u, w]));
            }
            if 3 * d <= 2 * k && g.bad_two(u) && g.half(w) {
                out.insert((9, vec![v, u, w]));
            }
        }
    }
    for (u1, u2, w) in triples(n) {
        if u1 < u2 && [u1, u2, w].iter().all(|&x| a(v, x)) && g.one(u1) && g.one(u2) && g.half(w) {
            out.insert((7, vec![v, u1, u2, w]));
        }
    }
    if d >= 3 {
        for set in g.subsets(v, (d - 2) as usize, |x| g.one(x)) {
            out.insert((8, [vec![v], set].concat()));
        }
    }
    let nb = g.neighbours(v);
    let plain = nb.iter().filter(|&&x| !g.deficient(x) && !g.half(x)).count() as i64;
    let bad_twos: Vec<usize> = nb.iter().copied().filter(|&x| g.bad_two(x)).collect();
    let ones: Vec<usize> = nb.iter().copied().filter(|&x| g.one(x)).collect();
    let halves = nb.iter().filter(|&&x| g.half(x)).count();
    if bad_twos.len() == 1 && halves >= 1 && plain <= k - d {
        out.insert((10, vec![v, bad_twos[0]]));
    }
    if ones.len() == 1 && plain <= k - d + 1 {
        out.insert((11, vec![v, ones[0]]));
    }
    if d == 5 {
        for set in g.subsets(v, 5, |x| g.half(x)) {
            out.insert((12, [vec![v], set].concat()));
        }
    }
    if d == 4 {
        for set in g.subsets(v, 3, |x| g.half(x)) {
            out.insert((13, [vec![v], set].concat()));
        }
    }
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n)
        .flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
        .filter(|&(a, b, c)| a != b && b != c && a != c)
}
