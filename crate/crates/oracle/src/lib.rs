//! Deliberately naive reference computations. Nothing here shares code with
//! `sumdist`: graphs come in as a vertex count plus an edge list, and every
//! answer is found by plain enumeration.

use std::collections::BTreeSet;

pub mod configs;

/// Adjacency matrix of an edge list on `0..n`.
pub fn matrix(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in edges {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

pub fn degrees(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut d = vec![0; n];
    for &(u, v) in edges {
        d[u] += 1;
        d[v] += 1;
    }
    d
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Maximum average degree as a reduced fraction, by trying every vertex
/// subset. `(0, 1)` for the empty graph.
pub fn mad(n: usize, edges: &[(usize, usize)]) -> (u64, u64) {
    assert!(n <= 20, "subset enumeration is for small graphs");
    let mut best = (0u64, 1u64);
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as u64;
        let inside = edges
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .count() as u64;
        if 2 * inside * best.1 > best.0 * size {
            best = (2 * inside, size);
        }
    }
    let g = gcd(best.0, best.1).max(1);
    (best.0 / g, best.1 / g)
}

/// No two edges sharing an endpoint have the same colour.
pub fn is_proper(edges: &[(usize, usize)], colors: &[u32]) -> bool {
    assert_eq!(edges.len(), colors.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        for (j, &(a, b)) in edges.iter().enumerate().skip(i + 1) {
            let touch = a == u || a == v || b == u || b == v;
            if touch && colors[i] == colors[j] {
                return false;
            }
        }
    }
    true
}

/// Proper, and adjacent vertices get different colour sums.
pub fn is_nsd(n: usize, edges: &[(usize, usize)], colors: &[u32]) -> bool {
    let mut sums = vec![0u64; n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        sums[u] += colors[i] as u64;
        sums[v] += colors[i] as u64;
    }
    is_proper(edges, colors) && edges.iter().all(|&(u, v)| sums[u] != sums[v])
}

/// Edges ordered so each one touches as many earlier edges as possible.
fn constrained_order(edges: &[(usize, usize)]) -> Vec<usize> {
    let mut order: Vec<usize> = Vec::with_capacity(edges.len());
    let mut rest: Vec<usize> = (0..edges.len()).collect();
    while !rest.is_empty() {
        let touching = |i: usize| {
            let (u, v) = edges[i];
            order
                .iter()
                .filter(|&&j| {
                    let (a, b) = edges[j];
                    a == u || a == v || b == u || b == v
                })
                .count()
        };
        let pos = (0..rest.len())
            .max_by_key(|&p| (touching(rest[p]), std::cmp::Reverse(rest[p])))
            .unwrap();
        order.push(rest.remove(pos));
    }
    order
}

/// Some nsd colouring from `1..=k`, found by trying colours edge by edge.
pub fn nsd_colouring(n: usize, edges: &[(usize, usize)], k: u32) -> Option<Vec<u32>> {
    let order = constrained_order(edges);
    let sorted: Vec<(usize, usize)> = order.iter().map(|&i| edges[i]).collect();
    let mut left = degrees(n, edges);
    let mut state = Search {
        edges: &sorted,
        adj: matrix(n, edges),
        k,
        colors: vec![0; edges.len()],
        used: vec![0u64; n],
        sums: vec![0; n],
    };
    if state.go(0, &mut left) {
        let mut colors = vec![0; edges.len()];
        for (pos, &i) in order.iter().enumerate() {
            colors[i] = state.colors[pos];
        }
        Some(colors)
    } else {
        None
    }
}

struct Search<'a> {
    edges: &'a [(usize, usize)],
    adj: Vec<Vec<bool>>,
    k: u32,
    colors: Vec<u32>,
    used: Vec<u64>,
    sums: Vec<u64>,
}

impl Search<'_> {
    fn stuck(&self, x: usize, left: &[usize]) -> bool {
        left[x] > self.k as usize - self.used[x].count_ones() as usize
    }

    fn settled_clash(&self, x: usize, left: &[usize]) -> bool {
        left[x] == 0
            && (0..left.len()).any(|y| y != x && self.adj[x][y] && left[y] == 0 && self.sums[x] == self.sums[y])
    }

    fn go(&mut self, i: usize, left: &mut [usize]) -> bool {
        if i == self.edges.len() {
            return true;
        }
        let (u, v) = self.edges[i];
        for c in 1..=self.k {
            let bit = 1u64 << c;
            if (self.used[u] | self.used[v]) & bit != 0 {
                continue;
            }
            self.colors[i] = c;
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.sums[u] += c as u64;
            self.sums[v] += c as u64;
            left[u] -= 1;
            left[v] -= 1;
            let ok = !self.stuck(u, left)
                && !self.stuck(v, left)
                && !self.settled_clash(u, left)
                && !self.settled_clash(v, left)
                && self.go(i + 1, left);
            left[u] += 1;
            left[v] += 1;
            self.sums[u] -= c as u64;
            self.sums[v] -= c as u64;
            self.used[u] &= !bit;
            self.used[v] &= !bit;
            if ok {
                return true;
            }
        }
        self.colors[i] = 0;
        false
    }
}

/// Least `k ≤ limit` with an nsd colouring from `1..=k`.
pub fn min_nsd_palette(n: usize, edges: &[(usize, usize)], limit: u32) -> Option<u32> {
    let delta = degrees(n, edges).into_iter().max().unwrap_or(0) as u32;
    (delta.max(1)..=limit).find(|&k| nsd_colouring(n, edges, k).is_some())
}

/// Every sum of a selection taking one value per list with all values
/// pairwise distinct.
pub fn rainbow_sums(lists: &[Vec<i64>]) -> BTreeSet<i64> {
    fn walk(lists: &[Vec<i64>], picked: &mut Vec<i64>, out: &mut BTreeSet<i64>) {
        match lists.split_first() {
            None => {
                out.insert(picked.iter().sum());
            }
            Some((head, rest)) => {
                for &x in head {
                    if !picked.contains(&x) {
                        picked.push(x);
                        walk(rest, picked, out);
                        picked.pop();
                    }
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    walk(lists, &mut Vec::new(), &mut out);
    out
}
