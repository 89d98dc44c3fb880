use std::collections::BTreeSet;

use sumdist::configs::{find_configs, first_config, verify_match, ConfigMatch, SearchMode};
use sumdist::generate::{generate_mixed, generate_sparse_capped, generate_subdivided};
use sumdist::Graph;
use sumdist_oracle::configs::{all_matches, Match};

fn normalise(m: &ConfigMatch) -> Match {
    let idx = m.kind.index();
    let mut roles: Vec<usize> = m.roles.iter().map(|&(_, x)| x).collect();
    match idx {
        4 | 6 | 7 => roles[1..3].sort_unstable(),
        8 | 12 | 13 => roles[1..].sort_unstable(),
        _ => {}
    }
    (idx, roles)
}

fn compare(g: &Graph, k: usize, label: &str) {
    let edges: Vec<_> = g.edges().collect();
    let want = all_matches(g.n(), &edges, k);
    let found = find_configs(g, k, SearchMode::All).unwrap();
    assert!(found.iter().all(|m| verify_match(g, m)), "{label}");
    let got: BTreeSet<Match> = found.iter().map(normalise).collect();
    assert_eq!(got.len(), found.len(), "{label}: duplicate matches");
    assert_eq!(got, want, "{label}");
    let first = first_config(g, k).unwrap().map(|m| m.kind.index());
    assert_eq!(first, want.iter().map(|m| m.0).min(), "{label}");
}

#[test]
fn agrees_with_tuple_enumeration() {
    let mut seen = 0;
    for seed in 0u64.. {
        let n = 3 + seed as usize % 7;
        let g = match seed % 3 {
            0 => generate_mixed(seed, n, 2 + seed as usize % 7),
            1 => generate_sparse_capped(seed, n, 2 + seed as usize % 7).unwrap(),
            _ => generate_subdivided(seed, 2 + seed as usize % 3, 3 + seed as usize % 4),
        };
        if g.n() > 9 {
            continue;
        }
        let delta = g.max_degree();
        for k in [6.max(delta), 6.max(delta) + 1 + seed as usize % 3] {
            compare(&g, k, &format!("seed {seed} k {k}"));
        }
        seen += 1;
        if seen == 200 {
            break;
        }
    }
}

#[test]
fn atlas_agrees() {
    for line in include_str!("data/atlas7.g6").lines() {
        let g = sumdist::parse_graph6(line).unwrap();
        compare(&g, 6, line);
    }
}
