//! Maximum average degree, computed exactly.
//!
//! `mad(G)` is twice the maximum density `e(S)/|S|` over non-empty vertex
//! sets `S`. The density decision "is there an `S` with `e(S)/|S| > p/q`?"
//! is a single minimum cut in Goldberg's network, scaled by `q` so every
//! capacity is an integer. The exact optimum is then located by walking the
//! Stern–Brocot tree with that decision procedure; the optimum has
//! denominator at most `n`, so the walk ends on it exactly.

use std::cmp::Ordering;

use thiserror::Error;

use crate::flow::FlowNetwork;
use crate::graph::Graph;
use crate::rational::Rational;

/// Largest vertex count accepted by [`mad_bruteforce`].
pub const BRUTEFORCE_MAX_N: usize = 22;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MadError {
    #[error("graph has {0} vertices; subset enumeration is limited to {BRUTEFORCE_MAX_N}")]
    TooLarge(usize),
    #[error("graph has no vertices")]
    Empty,
}

/// Exact `mad` by enumerating every non-empty vertex subset.
pub fn mad_bruteforce(g: &Graph) -> Result<Rational, MadError> {
    let n = g.n();
    if n == 0 {
        return Err(MadError::Empty);
    }
    if n > BRUTEFORCE_MAX_N {
        return Err(MadError::TooLarge(n));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |acc, w| acc | (1 << w)))
        .collect();
    // best density as (edges, vertices)
    let (mut best_e, mut best_s) = (0u64, 1u64);
    for mask in 1u32..(1u32 << n) {
        let s = u64::from(mask.count_ones());
        let twice_e: u64 = (0..n)
            .filter(|&v| mask & (1 << v) != 0)
            .map(|v| u64::from((adj[v] & mask).count_ones()))
            .sum();
        let e = twice_e / 2;
        if e * best_s > best_e * s {
            best_e = e;
            best_s = s;
        }
    }
    Ok(Rational::new(2 * best_e as i64, best_s as i64))
}

/// True iff some non-empty `S` has `q·e(S) − p·|S| > 0`, i.e. density above `p/q`.
fn denser_than(g: &Graph, p: i64, q: i64) -> bool {
    debug_assert!(p >= 0 && q > 0);
    let n = g.n();
    if n == 0 || g.m() == 0 {
        return false;
    }
    let big = g.m() as i64;
    let (s, t) = (n, n + 1);
    let mut net = FlowNetwork::new(n + 2);
    for v in 0..n {
        net.add_arc(s, v, big * q);
        net.add_arc(v, t, big * q + 2 * p - q * g.degree(v) as i64);
    }
    for (u, v) in g.edges() {
        net.add_undirected(u, v, q);
    }
    // cut({s} ∪ S) = big·q·n − 2·(q·e(S) − p·|S|)
    net.max_flow(s, t) < big * q * n as i64
}

/// True iff some non-empty `S` has density at least `p/q`.
///
/// Distinct densities with denominators ≤ n differ from `p/q` by at least
/// `1/(q·n)`, so testing strictly above `p/q − 1/(2qn)` is exact.
fn at_least_as_dense(g: &Graph, p: i64, q: i64) -> bool {
    let n = g.n() as i64;
    if n == 0 {
        return false;
    }
    if p == 0 {
        return true;
    }
    denser_than(g, 2 * p * n - 1, 2 * q * n)
}

/// Compares the maximum density with `p/q`.
fn compare_density(g: &Graph, p: i64, q: i64) -> Ordering {
    if denser_than(g, p, q) {
        Ordering::Greater
    } else if at_least_as_dense(g, p, q) {
        Ordering::Equal
    } else {
        Ordering::Less
    }
}

/// Maximum density `e(S)/|S|` as an exact fraction.
pub fn max_density(g: &Graph) -> Rational {
    if g.m() == 0 {
        return Rational::zero();
    }
    let n = g.n() as i64;
    let cmp = |p: i64, q: i64| compare_density(g, p, q);
    // Stern–Brocot bounds: left = lp/lq < target < rp/rq (rq = 0 means infinity)
    let (mut lp, mut lq, mut rp, mut rq) = (0i64, 1i64, 1i64, 0i64);
    loop {
        let (mp, mq) = (lp + rp, lq + rq);
        debug_assert!(mq <= n, "walk left the candidate set");
        match cmp(mp, mq) {
            Ordering::Equal => return Rational::new(mp, mq),
            Ordering::Greater => {
                // advance the left bound along (lp + j·rp)/(lq + j·rq)
                let probe = |j: i64| (lp + j * rp, lq + j * rq);
                match gallop(|j| {
                    let (p, q) = probe(j);
                    if q > n {
                        Ordering::Less
                    } else {
                        cmp(p, q)
                    }
                }) {
                    Ok(j) => {
                        let (p, q) = probe(j);
                        return Rational::new(p, q);
                    }
                    Err(j) => (lp, lq) = probe(j),
                }
            }
            Ordering::Less => {
                let probe = |j: i64| (rp + j * lp, rq + j * lq);
                match gallop(|j| {
                    let (p, q) = probe(j);
                    if q > n {
                        Ordering::Less
                    } else {
                        cmp(p, q).reverse()
                    }
                }) {
                    Ok(j) => {
                        let (p, q) = probe(j);
                        return Rational::new(p, q);
                    }
                    Err(j) => (rp, rq) = probe(j),
                }
            }
        }
    }
}

/// Given a predicate that is `Greater` for `j = 1` and turns `Less` past some
/// threshold, returns `Ok(j)` on an exact hit or `Err(j)` for the largest `j`
/// still `Greater`.
fn gallop(mut side: impl FnMut(i64) -> Ordering) -> Result<i64, i64> {
    let mut lo = 1;
    let mut hi = 2;
    loop {
        match side(hi) {
            Ordering::Greater => {
                lo = hi;
                hi *= 2;
            }
            Ordering::Equal => return Ok(hi),
            Ordering::Less => break,
        }
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match side(mid) {
            Ordering::Greater => lo = mid,
            Ordering::Equal => return Ok(mid),
            Ordering::Less => hi = mid,
        }
    }
    Err(lo)
}

/// Exact maximum average degree; `0/1` for edgeless graphs.
pub fn mad_exact(g: &Graph) -> Rational {
    max_density(g) * 2
}

/// `mad(g) < bound` with one minimum-cut decision.
pub fn mad_less_than(g: &Graph, bound: Rational) -> bool {
    assert!(bound > Rational::zero(), "bound must be positive");
    // mad < b  ⇔  no S with density ≥ b/2
    !at_least_as_dense(g, bound.numer(), 2 * bound.denom())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn bruteforce_closed_cases() {
        assert_eq!(mad_bruteforce(&cycle(5)).unwrap(), Rational::integer(2));
        assert_eq!(mad_bruteforce(&complete(4)).unwrap(), Rational::integer(3));
        assert_eq!(mad_bruteforce(&star(3)).unwrap(), Rational::new(3, 2));
        assert_eq!(mad_bruteforce(&star(6)).unwrap(), Rational::new(12, 7));
        assert_eq!(mad_bruteforce(&Graph::new(23)), Err(MadError::TooLarge(23)));
    }

    #[test]
    fn exact_closed_cases() {
        assert_eq!(mad_exact(&Graph::new(5)), Rational::zero());
        assert_eq!(mad_exact(&cycle(5)), Rational::integer(2));
        assert_eq!(mad_exact(&complete(4)), Rational::integer(3));
        assert_eq!(mad_exact(&complete(7)), Rational::integer(6));
        assert_eq!(mad_exact(&star(6)), Rational::new(12, 7));
        for n in 2..=12 {
            assert_eq!(mad_exact(&path(n)), Rational::new(2 * (n as i64 - 1), n as i64));
        }
    }

    #[test]
    fn densest_part_is_not_whole_graph() {
        // K4 with a long tail: densest part is the K4
        let mut g = complete(4);
        let mut prev = 3;
        for _ in 0..6 {
            let v = g.add_vertex();
            g.add_edge(prev, v).unwrap();
            prev = v;
        }
        assert_eq!(mad_exact(&g), Rational::integer(3));
        assert_eq!(mad_exact(&g), mad_bruteforce(&g).unwrap());
    }

    #[test]
    fn less_than_examples() {
        let three = Rational::integer(3);
        assert!(!mad_less_than(&complete(4), three));
        assert!(mad_less_than(&cycle(5), three));
        assert!(mad_less_than(&star(6), three));
        assert!(!mad_less_than(&star(6), Rational::new(12, 7)));
        assert!(mad_less_than(&star(6), Rational::new(13, 7)));
    }
}
