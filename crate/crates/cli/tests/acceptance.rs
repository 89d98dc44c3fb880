//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::collections::{BTreeSet, HashMap};
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use rand::seq::IteratorRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sumdist::chi_sum::chi_sum_exact;
use sumdist::configs::{find_configs, ConfigMatch, SearchMode};
use sumdist::discharge::{verify_discharging_theorem, TheoremVerdict};
use sumdist::generate::{generate_mixed, generate_sparse_capped, generate_subdivided, sparse_corpus};
use sumdist::graph::families::{complete, cycle, path, star};
use sumdist::rainbow::{prune_lists, staircase_selections, ListFamily};
use sumdist::{choose_k, encode_graph6, mad_bruteforce, mad_exact, mad_less_than, parse_graph6, Graph, Rational};
use sumdist_oracle::configs::{all_matches, Match};

const SEED: u64 = 2024;
const CORPUS: usize = 500;
const CORPUS_MAX_N: usize = 30;

type Outcome = Result<String, String>;
type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn edges(g: &Graph) -> Vec<(usize, usize)> {
    g.edges().collect()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Output of the corpus colouring run, shared by criteria 1, 6 and 8.
struct ColorRun {
    corpus: Vec<Graph>,
    colours: Vec<Option<Vec<u32>>>,
    failed: usize,
    fallbacks: usize,
    elapsed: Duration,
}

fn color_corpus() -> Result<ColorRun, String> {
    let corpus = sparse_corpus(SEED, CORPUS, CORPUS_MAX_N).map_err(|e| e.to_string())?;
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance-colorings");
    let _ = std::fs::remove_dir_all(&dir);
    let input: String = corpus.iter().map(|g| encode_graph6(g) + "\n").collect();

    let start = Instant::now();
    let mut child = Command::new(env!("CARGO_BIN_EXE_sumdist"))
        .args(["color", "--out-dir", dir.to_str().unwrap()])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .map_err(|e| e.to_string())?;
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .map_err(|e| e.to_string())?;
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let stdout = String::from_utf8_lossy(&out.stdout);

    let mut failed = 0;
    let mut fallbacks = 0;
    for line in stdout.lines().filter(|l| l.starts_with("RESULT")) {
        if !line.contains("status=ok") {
            failed += 1;
        }
        if let Some(f) = line.split_whitespace().find_map(|w| w.strip_prefix("fallbacks=")) {
            fallbacks += f.parse::<usize>().unwrap_or(0);
        }
    }
    let colours = corpus
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let text = std::fs::read_to_string(dir.join(format!("line-{}.txt", i + 1))).ok()?;
            let mut by_edge = HashMap::new();
            for l in text.lines() {
                let f: Vec<usize> = l.split_whitespace().map(|x| x.parse().unwrap()).collect();
                by_edge.insert((f[0].min(f[1]), f[0].max(f[1])), f[2] as u32);
            }
            g.edges().map(|e| by_edge.get(&e).copied()).collect()
        })
        .collect();
    Ok(ColorRun {
        corpus,
        colours,
        failed,
        fallbacks,
        elapsed,
    })
}

fn theorem_end_to_end(run: &ColorRun) -> Outcome {
    for (i, g) in run.corpus.iter().enumerate() {
        ensure(
            g.is_connected() && g.n() <= CORPUS_MAX_N && g.max_degree() >= 6 && !g.has_isolated_edge(),
            || format!("corpus graph {i} breaks the hypothesis"),
        )?;
        ensure(mad_exact(g) < Rational::integer(3), || {
            format!("corpus graph {i} has mad >= 3")
        })?;
        let cs = run.colours[i]
            .as_ref()
            .ok_or(format!("graph {i}: no colouring written"))?;
        ensure(sumdist_oracle::is_nsd(g.n(), &edges(g), cs), || {
            format!("graph {i}: not nsd")
        })?;
        let max = cs.iter().max().copied().unwrap_or(0);
        ensure(max as usize <= g.max_degree() + 1, || {
            format!("graph {i}: {max} colours")
        })?;
    }
    ensure(run.failed == 0, || format!("{} graphs reported failures", run.failed))?;
    ensure(run.elapsed <= Duration::from_secs(300), || {
        format!("took {:?}", run.elapsed)
    })?;
    Ok(format!(
        "{} graphs coloured with at most Δ+1 colours, all nsd, {:.1}s",
        run.corpus.len(),
        run.elapsed.as_secs_f64()
    ))
}

fn rainbow_staircase() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for family in 0..1000 {
        let t = rng.gen_range(1..=5);
        let lists: Vec<Vec<i64>> = (0..t)
            .map(|_| {
                let size = rng.gen_range(t..=8);
                let mut l = (1i64..=15).choose_multiple(&mut rng, size);
                l.sort_unstable();
                l
            })
            .collect();
        let f = ListFamily::new(lists.clone());
        let sels = staircase_selections(&prune_lists(&f).map_err(|e| e.to_string())?);
        let reachable = sumdist_oracle::rainbow_sums(&lists);
        ensure(sels.len() as i64 >= f.guaranteed_sums(), || {
            format!("family {family}: too few sums")
        })?;
        ensure(sels.windows(2).all(|p| p[0].sum < p[1].sum), || {
            format!("family {family}: sums not increasing")
        })?;
        for s in &sels {
            let rainbow = s.values.iter().collect::<BTreeSet<_>>().len() == t
                && s.values.iter().zip(&lists).all(|(x, l)| l.contains(x))
                && s.values.iter().sum::<i64>() == s.sum;
            ensure(rainbow, || format!("family {family}: bad selection {:?}", s.values))?;
            ensure(reachable.contains(&s.sum), || {
                format!("family {family}: sum {} unconfirmed", s.sum)
            })?;
        }
    }
    Ok("1000 families, every staircase sum confirmed by enumeration".into())
}

fn mad_oracle() -> Outcome {
    let mut checked = 0;
    for seed in 0u64.. {
        let g = generate_mixed(seed, 3 + seed as usize % 10, 2 + seed as usize % 8);
        if g.n() > 12 {
            continue;
        }
        let (p, q) = sumdist_oracle::mad(g.n(), &edges(&g));
        let want = Rational::new(p as i64, q as i64);
        ensure(mad_exact(&g) == want, || format!("seed {seed}: mad_exact disagrees"))?;
        ensure(mad_bruteforce(&g) == Ok(want), || {
            format!("seed {seed}: mad_bruteforce disagrees")
        })?;
        checked += 1;
        if checked == 200 {
            break;
        }
    }
    for n in 3..=12 {
        ensure(mad_exact(&cycle(n)) == Rational::integer(2), || format!("mad(C{n})"))?;
        let tree = Rational::new(2 * (n as i64 - 1), n as i64);
        ensure(mad_exact(&path(n)) == tree && mad_exact(&star(n - 1)) == tree, || {
            format!("mad(tree_{n})")
        })?;
    }
    ensure(mad_exact(&complete(4)) == Rational::integer(3), || "mad(K4)".into())?;
    Ok("200 random graphs and the closed forms agree".into())
}

fn discharging_contrapositive() -> Outcome {
    for seed in 0..1000u64 {
        let g = if seed % 2 == 0 {
            generate_sparse_capped(seed, 3 + seed as usize % 28, 2 + seed as usize % 11).map_err(|e| e.to_string())?
        } else {
            generate_subdivided(seed, 2 + seed as usize % 11, 3 + seed as usize % 8)
        };
        let k = choose_k(&g);
        ensure(
            !g.has_isolated_edge() && mad_less_than(&g, Rational::integer(3)),
            || format!("sample {seed} outside the hypothesis"),
        )?;
        let found = find_configs(&g, k, SearchMode::All).map_err(|e| e.to_string())?;
        ensure(!found.is_empty(), || {
            format!("no configuration in {}", encode_graph6(&g))
        })?;
    }
    let mut free = 0;
    for seed in 0..10_000u64 {
        let g = generate_mixed(seed, 3 + seed as usize % 14, 2 + seed as usize % 9);
        let k = choose_k(&g);
        if find_configs(&g, k, SearchMode::FirstByIndex)
            .map_err(|e| e.to_string())?
            .is_empty()
        {
            free += 1;
        }
        match verify_discharging_theorem(&g, k).map_err(|e| e.to_string())? {
            TheoremVerdict::Consistent => {}
            TheoremVerdict::Counterexample(r) => return Err(r.to_string()),
        }
    }
    Ok(format!(
        "1000 sparse graphs all contain a configuration; 10000 mixed graphs consistent ({free} configuration-free)"
    ))
}

fn exact_solver() -> Outcome {
    let start = Instant::now();
    for (g, want) in [(path(3), 2), (star(6), 6), (cycle(5), 5)] {
        let (k, w) = chi_sum_exact(&g, 10).map_err(|e| e.to_string())?;
        let ws: Vec<u32> = g.edges().map(|(u, v)| w.color(u, v).unwrap()).collect();
        ensure(k == want, || format!("{}: got {k}, want {want}", encode_graph6(&g)))?;
        ensure(sumdist_oracle::is_nsd(g.n(), &edges(&g), &ws), || {
            "witness rejected".into()
        })?;
        ensure(
            sumdist_oracle::min_nsd_palette(g.n(), &edges(&g), 10) == Some(want),
            || "oracle disagrees".into(),
        )?;
    }
    let c5 = encode_graph6(&cycle(5));
    let mut count = 0;
    for line in include_str!("../../core/tests/data/atlas7.g6").lines() {
        let g = parse_graph6(line).map_err(|e| e.to_string())?;
        let delta = g.max_degree() as u32;
        let (k, w) = chi_sum_exact(&g, delta + 3).map_err(|e| format!("{line}: {e}"))?;
        let ws: Vec<u32> = g.edges().map(|(u, v)| w.color(u, v).unwrap()).collect();
        ensure(sumdist_oracle::is_nsd(g.n(), &edges(&g), &ws), || {
            format!("{line}: witness rejected")
        })?;
        let oracle = sumdist_oracle::min_nsd_palette(g.n(), &edges(&g), delta + 3);
        ensure(oracle == Some(k), || {
            format!("{line}: solver {k}, enumerator {oracle:?}")
        })?;
        let is_c5 = line == c5 || (g.n() == 5 && g.m() == 5 && (0..5).all(|v| g.degree(v) == 2));
        ensure(is_c5 || k <= delta + 2, || format!("{line}: χ'_Σ = {k} > Δ+2"))?;
        count += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!(
        "P3=2 K1,6=6 C5=5; {count} connected graphs on 3..7 vertices within Δ+2 except C5, {:.1}s",
        elapsed.as_secs_f64()
    ))
}

fn sandwich(run: &ColorRun) -> Outcome {
    let mut checked = 0;
    for (i, g) in run.corpus.iter().enumerate().filter(|(_, g)| g.m() <= 20) {
        let used = run.colours[i]
            .as_ref()
            .and_then(|c| c.iter().max().copied())
            .ok_or(format!("graph {i}: no colouring"))?;
        let delta = g.max_degree() as u32;
        let (chi, _) = chi_sum_exact(g, used).map_err(|e| format!("graph {i}: {e}"))?;
        ensure(delta <= chi && chi <= used && used <= delta + 1, || {
            format!("graph {i}: Δ={delta} χ'_Σ={chi} used={used}")
        })?;
        checked += 1;
    }
    ensure(checked > 0, || "no corpus graph has at most 20 edges".into())?;
    Ok(format!(
        "{checked} corpus graphs with at most 20 edges satisfy Δ <= χ'_Σ <= used <= Δ+1"
    ))
}

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

fn matcher_completeness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut samples = 0;
    let mut total = 0;
    while samples < 500 {
        let seed: u64 = rng.gen();
        let n = rng.gen_range(3..=9);
        let cap = rng.gen_range(2..=8);
        let g = match samples % 3 {
            0 => generate_mixed(seed, n, cap),
            1 => generate_sparse_capped(seed, n, cap).map_err(|e| e.to_string())?,
            _ => generate_subdivided(seed, rng.gen_range(2..=4), cap.max(3)),
        };
        if g.n() > 9 {
            continue;
        }
        let k = choose_k(&g) + rng.gen_range(0..3);
        let got: BTreeSet<Match> = find_configs(&g, k, SearchMode::All)
            .map_err(|e| e.to_string())?
            .iter()
            .map(normalise)
            .collect();
        let want = all_matches(g.n(), &edges(&g), k);
        ensure(got == want, || {
            format!("{} k={k}: matcher and enumeration differ", encode_graph6(&g))
        })?;
        total += want.len();
        samples += 1;
    }
    Ok(format!("500 graphs, {total} matches, exact agreement"))
}

fn fallback_fidelity(run: &ColorRun) -> Outcome {
    ensure(run.failed == 0, || format!("{} extension failures", run.failed))?;
    Ok(format!("0 failures, {} fallback activations", run.fallbacks))
}

fn main() {
    let run = color_corpus();
    let run = &run;
    let shared =
        |f: fn(&ColorRun) -> Outcome| -> Check<'_> { Box::new(move || run.as_ref().map_err(Clone::clone).and_then(f)) };
    let criteria: Vec<(&str, Check)> = vec![
        ("theorem end-to-end", shared(theorem_end_to_end)),
        ("rainbow sums", Box::new(rainbow_staircase)),
        ("mad oracle", Box::new(mad_oracle)),
        ("discharging contrapositive", Box::new(discharging_contrapositive)),
        ("exact solver calibration", Box::new(exact_solver)),
        ("optimality sandwich", shared(sandwich)),
        ("matcher completeness", Box::new(matcher_completeness)),
        ("fallback fidelity", shared(fallback_fidelity)),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {} ({name}): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
