use std::collections::BTreeMap;

use sumdist::colorer::{color_nsd, ColorerOptions};
use sumdist::coloring::is_nsd;
use sumdist::generate::generate_sparse;

#[test]
fn corpus_is_coloured_within_delta_plus_one() {
    let opts = ColorerOptions::default();
    let mut fallbacks = 0;
    let mut branches = BTreeMap::new();
    for seed in 0..300u64 {
        let delta = 6 + (seed % 4) as usize;
        let n = delta + 1 + (seed as usize * 7) % (30 - delta);
        let g = generate_sparse(seed, n, delta).unwrap();
        let out = color_nsd(&g, opts).unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert!(is_nsd(&g, &out.coloring).unwrap(), "seed {seed}");
        assert!(out.coloring.max_color().unwrap() as usize <= delta + 1);
        fallbacks += out.stats.fallback_activations;
        for (key, count) in out.stats.branches {
            *branches.entry(key).or_insert(0) += count;
        }
    }
    eprintln!("fallback activations: {fallbacks}");
    eprintln!("branches: {branches:?}");
}
