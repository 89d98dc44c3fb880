//! Seeded random graph generators for the test corpora.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;
use crate::mad::mad_less_than;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("need n ≥ target_delta + 1 ≥ 7, got n = {n}, target_delta = {delta}")]
    BadParameters { n: usize, delta: usize },
}

/// Connected graph on `n` vertices with `Δ = target_delta` and `mad < 3`.
///
/// A random tree is grown around a hub of degree `target_delta` (new
/// vertices either hang off a vertex with spare degree or subdivide an
/// edge), then random chords are kept whenever the exact `mad` stays below
/// 3. Labels are shuffled at the end. The same seed gives the same graph.
pub fn generate_sparse(seed: u64, n: usize, target_delta: usize) -> Result<Graph, GenerateError> {
    if target_delta < 6 || n < target_delta + 1 {
        return Err(GenerateError::BadParameters { n, delta: target_delta });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = grow_sparse(&mut rng, n, target_delta, true);
    debug_assert_eq!(g.max_degree(), target_delta);
    Ok(g)
}

/// Like [`generate_sparse`] but only caps the maximum degree, which may be
/// anything from 2 to `max_degree`. Needs `n ≥ 3` and `max_degree ≥ 2`.
pub fn generate_sparse_capped(seed: u64, n: usize, max_degree: usize) -> Result<Graph, GenerateError> {
    if n < 3 || max_degree < 2 {
        return Err(GenerateError::BadParameters { n, delta: max_degree });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(grow_sparse(&mut rng, n, max_degree, false))
}

/// `count` graphs for the theorem corpus: each has `Δ ≥ 6`, at most
/// `max_n ≥ 7` vertices and `mad < 3`, with `n` and `Δ` drawn from the seed.
pub fn sparse_corpus(seed: u64, count: usize, max_n: usize) -> Result<Vec<Graph>, GenerateError> {
    if max_n < 7 {
        return Err(GenerateError::BadParameters { n: max_n, delta: 6 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let delta = rng.gen_range(6..=(max_n - 1).min(12));
            let n = rng.gen_range(delta + 1..=max_n);
            generate_sparse(rng.gen(), n, delta)
        })
        .collect()
}

fn grow_sparse(rng: &mut ChaCha8Rng, n: usize, cap: usize, hub: bool) -> Graph {
    let mut g = Graph::new(n);
    let start = if hub {
        for leaf in 1..=cap {
            g.add_edge(0, leaf).expect("fresh edge");
        }
        cap + 1
    } else {
        g.add_edge(0, 1).expect("fresh edge");
        2
    };
    let subdivide_weight = rng.gen_range(0.0..0.6);
    for x in start..n {
        let edges: Vec<_> = g.edges().collect();
        if rng.gen_bool(subdivide_weight) {
            let (a, b) = edges[rng.gen_range(0..edges.len())];
            g.remove_edge(a, b);
            g.add_edge(a, x).expect("fresh edge");
            g.add_edge(x, b).expect("fresh edge");
        } else {
            let open: Vec<usize> = (0..x).filter(|&v| g.degree(v) < cap).collect();
            let parent = open[rng.gen_range(0..open.len())];
            g.add_edge(parent, x).expect("fresh edge");
        }
    }

    let three = Rational::integer(3);
    let attempts = rng.gen_range(0..=2 * n);
    for _ in 0..attempts {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || g.has_edge(u, v) || g.degree(u) >= cap || g.degree(v) >= cap {
            continue;
        }
        g.add_edge(u, v).expect("checked above");
        if !mad_less_than(&g, three) {
            g.remove_edge(u, v);
        }
    }
    relabel(rng, &g)
}

/// Graph of mixed density with `Δ ≤ max_degree` and no isolated edges:
/// a random graph of random edge probability, some edges subdivided, and a
/// pendant vertex attached wherever an isolated edge would remain.
pub fn generate_mixed(seed: u64, n: usize, max_degree: usize) -> Graph {
    assert!(max_degree >= 2, "max_degree must be at least 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = rng.gen_range(0.05..0.9);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) && g.degree(u) < max_degree && g.degree(v) < max_degree {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    let subdivisions = rng.gen_range(0..=3);
    for _ in 0..subdivisions {
        let edges: Vec<_> = g.edges().collect();
        if edges.is_empty() {
            break;
        }
        let (a, b) = edges[rng.gen_range(0..edges.len())];
        let x = g.add_vertex();
        g.remove_edge(a, b);
        g.add_edge(a, x).expect("fresh edge");
        g.add_edge(x, b).expect("fresh edge");
    }
    let isolated: Vec<_> = g
        .edges()
        .filter(|&(u, v)| g.degree(u) == 1 && g.degree(v) == 1)
        .collect();
    for (u, _) in isolated {
        let x = g.add_vertex();
        g.add_edge(u, x).expect("fresh edge");
    }
    relabel(&mut rng, &g)
}

/// Sparse graph built from a random graph with degrees up to
/// `max_degree` whose edges are subdivided once or twice at random; further
/// subdivisions are made until `mad < 3`. Every vertex of the base graph
/// has degree at least 3 when possible, so 2-vertices come only from
/// subdivisions.
pub fn generate_subdivided(seed: u64, n: usize, max_degree: usize) -> Graph {
    assert!(max_degree >= 3, "max_degree must be at least 3");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let want: Vec<usize> = (0..n).map(|_| rng.gen_range(3..=max_degree)).collect();
    let mut g = Graph::new(n);
    for _ in 0..n * max_degree * 4 {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !g.has_edge(u, v) && g.degree(u) < want[u] && g.degree(v) < want[v] {
            g.add_edge(u, v).expect("checked above");
        }
    }
    let once = rng.gen_range(0.1..0.9);
    let twice = rng.gen_range(0.0..0.3);
    let base: Vec<_> = g.edges().collect();
    for (a, b) in base {
        let r: f64 = rng.gen();
        let splits = if r < twice {
            2
        } else if r < twice + once {
            1
        } else {
            0
        };
        subdivide(&mut g, a, b, splits);
    }
    let three = Rational::integer(3);
    while !mad_less_than(&g, three) {
        let fat: Vec<_> = g.edges().filter(|&(a, b)| g.degree(a) > 2 || g.degree(b) > 2).collect();
        let (a, b) = fat[rng.gen_range(0..fat.len())];
        subdivide(&mut g, a, b, 1);
    }
    let isolated: Vec<_> = g
        .edges()
        .filter(|&(u, v)| g.degree(u) == 1 && g.degree(v) == 1)
        .collect();
    for (u, _) in isolated {
        let x = g.add_vertex();
        g.add_edge(u, x).expect("fresh edge");
    }
    relabel(&mut rng, &g)
}

fn subdivide(g: &mut Graph, a: usize, b: usize, times: usize) {
    if times == 0 {
        return;
    }
    g.remove_edge(a, b);
    let mut prev = a;
    for _ in 0..times {
        let x = g.add_vertex();
        g.add_edge(prev, x).expect("fresh edge");
        prev = x;
    }
    g.add_edge(prev, b).expect("fresh edge");
}

fn relabel(rng: &mut ChaCha8Rng, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(rng);
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).expect("relabelled simple graph")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mad::mad_exact;

    #[test]
    fn sparse_outputs_meet_contract() {
        for seed in 0..40 {
            let n = 7 + (seed as usize % 20);
            let delta = 6 + (seed as usize % 3).min(n - 7);
            let g = generate_sparse(seed, n, delta).unwrap();
            assert_eq!(g.n(), n);
            assert_eq!(g.max_degree(), delta);
            assert!(g.is_connected());
            assert!(!g.has_isolated_edge());
            assert!(mad_exact(&g) < Rational::integer(3));
        }
    }

    #[test]
    fn seven_vertices_contain_spanning_star() {
        for seed in 0..20 {
            let g = generate_sparse(seed, 7, 6).unwrap();
            let hub = (0..7).find(|&v| g.degree(v) == 6).unwrap();
            assert_eq!(g.neighbors(hub).count(), 6);
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(generate_sparse(9, 25, 7).unwrap(), generate_sparse(9, 25, 7).unwrap());
        assert_eq!(generate_mixed(3, 12, 8), generate_mixed(3, 12, 8));
    }

    #[test]
    fn corpus_is_reproducible() {
        let a = sparse_corpus(5, 30, 20).unwrap();
        assert_eq!(a, sparse_corpus(5, 30, 20).unwrap());
        assert!(a.iter().all(|g| g.n() <= 20 && g.max_degree() >= 6));
        assert!(sparse_corpus(5, 1, 6).is_err());
        assert!(sparse_corpus(5, 0, 7).unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(generate_sparse(0, 6, 6).is_err());
        assert!(generate_sparse(0, 10, 5).is_err());
    }

    #[test]
    fn subdivided_is_sparse() {
        for seed in 0..30 {
            let g = generate_subdivided(seed, 10, 7);
            assert!(mad_exact(&g) < Rational::integer(3));
            assert!(g.max_degree() <= 7);
            assert!(!g.has_isolated_edge());
        }
    }

    #[test]
    fn mixed_has_no_isolated_edges() {
        for seed in 0..50 {
            let g = generate_mixed(seed, 10, 7);
            assert!(!g.has_isolated_edge());
            assert!(g.max_degree() <= 7);
        }
    }
}
