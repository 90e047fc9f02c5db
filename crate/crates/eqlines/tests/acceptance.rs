//! Acceptance run: one PASS/FAIL line per criterion. Shares a single
//! sequential cherry enumeration between the criteria that need it.

use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

use eqlines::catalog::{format_level, write_catalog, Catalog};
use eqlines::enumerate;
use eqlines_core::jacobi::float_eigen_oracle;
use eqlines_core::spectra::seidel_degrees;
use eqlines_core::tables::ExpectedTables;
use eqlines_core::{
    charpoly_fl, closure_base, expected_minimal_forbidden, expected_n_alpha, minimal_forbidden, n_alpha_table, psd_rank,
    seidel_matrix, summarize, switching_equivalent, ClassSet, Family, Graph, LevelStats, LevelStore, NamedGraph,
    RankOrderProfile, VertexSet,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const MIN_FORB_BUDGET: Duration = Duration::from_secs(10);
const CHERRY_BUDGET: Duration = Duration::from_secs(600);
const MAGNITUDE_BOUND: u128 = 3_420_000_000_000_000_000_000;
const D_MAX: usize = 100;

const DEGREE_PAIRS: usize = 10_000;
const DEGREE_MAX_ORDER: usize = 12;
const SPECTRAL_SAMPLES: usize = 100_000;
const SPECTRAL_MAX_ORDER: usize = 10;
const PSD_SLACK: f64 = 1e-6;
const NEAR_SHIFT: f64 = 1e-4;
const CHARPOLY_RESIDUAL: f64 = 1e-4;
const CORPUS_SIZE: usize = 500;
const CORPUS_MAX_ORDER: usize = 6;
const COMPLETENESS_MAX_ORDER: usize = 7;
const PARALLEL_THREADS: usize = 4;

struct Outcome {
    name: &'static str,
    ok: bool,
    detail: String,
}

fn outcome(name: &'static str, failures: Vec<String>, pass_detail: String) -> Outcome {
    let ok = failures.is_empty();
    let detail = if ok { pass_detail } else { failures.join("; ") };
    Outcome { name, ok, detail }
}

fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..i).map(move |j| (j, i))).filter(|_| rng.gen_bool(0.5)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..i).map(move |j| (j, i))).collect();
    (0u32..1 << pairs.len()).map(move |bits| {
        let edges: Vec<_> = pairs.iter().enumerate().filter(|(t, _)| bits >> t & 1 == 1).map(|(_, p)| *p).collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

fn criterion_min_forb() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut sizes = Vec::new();
    for family in Family::ALL {
        let found = minimal_forbidden(family, family.forbidden_order_bound());
        let expected = expected_minimal_forbidden(family);
        sizes.push(format!("{family} {}", found.len()));
        if found.len() != expected.len() {
            failures.push(format!("{family}: {} classes, expected {}", found.len(), expected.len()));
        }
        for want in &expected {
            let hits = found.iter().filter(|g| switching_equivalent(g, want)).count();
            if hits != 1 {
                failures.push(format!("{family}: {want} matched {hits} times"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > MIN_FORB_BUDGET {
        failures.push(format!("took {elapsed:?}, budget {MIN_FORB_BUDGET:?}"));
    }
    outcome("1 minimal forbidden subgraphs", failures, format!("{} in {elapsed:.2?}", sizes.join(", ")))
}

fn compare_counts(stats: &LevelStats, expected: &ExpectedTables, failures: &mut Vec<String>) {
    let found: Vec<usize> = expected.orders().map(|n| stats.at(n).map_or(0, |o| o.count)).collect();
    if found != expected.counts {
        failures.push(format!("counts {found:?}"));
    }
    let ranks: Vec<usize> = expected.orders().map(|n| stats.at(n).map_or(0, |o| o.min_rank)).collect();
    if ranks != expected.min_ranks {
        failures.push(format!("minimum ranks {ranks:?}"));
    }
    let orders: Vec<usize> = stats.orders.iter().map(|o| o.order).collect();
    if orders != expected.orders().collect::<Vec<_>>() {
        failures.push(format!("nonempty orders {orders:?}"));
    }
    if stats.total != expected.total {
        failures.push(format!("total {}", stats.total));
    }
    if stats.terminal_order != Some(expected.terminal_order) {
        failures.push(format!("first empty level {:?}", stats.terminal_order));
    }
}

fn compare_uniqueness(stats: &LevelStats, expected: &ExpectedTables, failures: &mut Vec<String>) {
    let unique: Vec<usize> = stats.orders.iter().filter(|o| o.unique()).map(|o| o.order).collect();
    if unique != expected.unique_orders {
        failures.push(format!("unique orders {unique:?}"));
    }
    for &(n, named) in expected.identified {
        if !stats.at(n).is_some_and(|o| o.unique() && o.identified.contains(&named)) {
            failures.push(format!("n={n} not identified as {named}"));
        }
    }
    for &n in expected.non_regular {
        if stats.at(n).and_then(|o| o.regular_switching) != Some(false) {
            failures.push(format!("n={n} has a regular switching or is not unique"));
        }
    }
}

fn criterion_cherry_counts(stats: &LevelStats, elapsed: Duration) -> Outcome {
    let mut failures = Vec::new();
    compare_counts(stats, ExpectedTables::for_family(Family::Cherry), &mut failures);
    if elapsed > CHERRY_BUDGET {
        failures.push(format!("took {elapsed:?}, budget {CHERRY_BUDGET:?}"));
    }
    outcome(
        "2 cherry enumeration",
        failures,
        format!("{} classes on orders 5..=28, level 29 empty, {elapsed:.1?}", stats.total),
    )
}

fn criterion_cherry_identification(stats: &LevelStats) -> Outcome {
    let mut failures = Vec::new();
    let expected = ExpectedTables::for_family(Family::Cherry);
    compare_uniqueness(stats, expected, &mut failures);
    outcome(
        "3 cherry uniqueness and identification",
        failures,
        format!(
            "unique at {:?}; C5, C8, heawood, paper_n24, compl_L_K8 matched; no regular switching at {:?}",
            expected.unique_orders, expected.non_regular
        ),
    )
}

fn criterion_edge(stats: &LevelStats) -> Outcome {
    let mut failures = Vec::new();
    let expected = ExpectedTables::for_family(Family::Edge);
    compare_counts(stats, expected, &mut failures);
    compare_uniqueness(stats, expected, &mut failures);
    // The n = 15 class is the complement of L(K6); L(K6) itself fails S + 3I ⪰ 0.
    let line_k6 = psd_rank(&NamedGraph::LineK6.graph(), Family::Edge).unwrap();
    if line_k6.psd {
        failures.push("L(K6) unexpectedly satisfies S + 3I ⪰ 0".into());
    }
    outcome(
        "4 single-edge enumeration",
        failures,
        format!(
            "{} classes; L_K33, petersen, compl_L_K6 (L_K6 is not PSD), clebsch, compl_schlafli, compl_L_K8 matched",
            stats.total
        ),
    )
}

fn criterion_table(stats: &LevelStats) -> Outcome {
    let mut failures = Vec::new();
    let profile = RankOrderProfile::new(stats.min_ranks(), stats.terminal_order.is_some());
    match n_alpha_table(&profile, D_MAX) {
        Ok(table) => {
            for (d, n) in table {
                if n != expected_n_alpha(d) {
                    failures.push(format!("N({d}) = {n}, expected {}", expected_n_alpha(d)));
                }
            }
        }
        Err(e) => failures.push(e.to_string()),
    }
    outcome("5 N table", failures, format!("d = 2..={D_MAX} match"))
}

fn criterion_degrees(rng: &mut StdRng) -> Outcome {
    let mut failures = Vec::new();
    for _ in 0..DEGREE_PAIRS {
        let n = rng.gen_range(1..=DEGREE_MAX_ORDER);
        let g = random_graph(rng, n);
        let u = VertexSet(rng.gen::<u32>() & VertexSet::full(n).0);
        let h = g.switch(u).unwrap();
        for k in 1..=4 {
            if seidel_degrees(&g, k) != seidel_degrees(&h, k) {
                failures.push(format!("k={k}: {g} switched on {:?}", u.iter().collect::<Vec<_>>()));
            }
        }
        if failures.len() > 5 {
            break;
        }
    }
    outcome(
        "6a Seidel degree switching invariance",
        failures,
        format!("{DEGREE_PAIRS} pairs, n <= {DEGREE_MAX_ORDER}, k = 1..=4"),
    )
}

fn criterion_spectral(rng: &mut StdRng) -> Outcome {
    let mut failures = Vec::new();
    let mut compared = 0usize;
    for _ in 0..SPECTRAL_SAMPLES {
        let n = rng.gen_range(1..=SPECTRAL_MAX_ORDER);
        let g = random_graph(rng, n);
        let s = seidel_matrix(&g);
        let ev = float_eigen_oracle(&s).unwrap();
        let p = charpoly_fl(&s).unwrap();
        let scale = n as f64 * p.coefficients().iter().map(|c| c.unsigned_abs() as f64).fold(1.0, f64::max);
        if ev.iter().any(|&x| p.eval_f64(x).abs() >= CHARPOLY_RESIDUAL * scale) {
            failures.push(format!("{g}: charpoly residual"));
        }
        for family in Family::ALL {
            let shift = family.shift().to_f64();
            let verdict = psd_rank(&g, family).unwrap();
            let min = ev[0];
            if (min + shift).abs() > NEAR_SHIFT {
                compared += 1;
                if verdict.psd != (min >= -shift - PSD_SLACK) {
                    failures.push(format!("{g} {family}: psd {} vs min eigenvalue {min}", verdict.psd));
                }
            }
            let near = ev.iter().filter(|&&x| (x + shift).abs() <= NEAR_SHIFT).count();
            if verdict.psd && near == n - verdict.rank {
                let above = ev.iter().filter(|&&x| x > -shift + NEAR_SHIFT).count();
                if above != verdict.rank {
                    failures.push(format!("{g} {family}: rank {} vs {above}", verdict.rank));
                }
            }
        }
        if failures.len() > 5 {
            break;
        }
    }
    outcome(
        "6b exact vs float spectra",
        failures,
        format!("{SPECTRAL_SAMPLES} graphs, n <= {SPECTRAL_MAX_ORDER}, {compared} verdicts compared"),
    )
}

/// Smallest row encoding over every switching and every relabeling.
fn signature(g: &Graph) -> Vec<u32> {
    let n = g.order();
    let mut best: Option<Vec<u32>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut perms = Vec::new();
    permutations(&mut perm, 0, &mut perms);
    for u in 0u32..1 << n {
        let h = g.switch(VertexSet(u)).unwrap();
        for p in &perms {
            let rows: Vec<u32> = h.permute(p).unwrap().rows().to_vec();
            if best.as_ref().is_none_or(|b| rows < *b) {
                best = Some(rows);
            }
        }
    }
    let mut sig = vec![n as u32];
    sig.extend(best.unwrap_or_default());
    sig
}

fn permutations(p: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == p.len() {
        out.push(p.clone());
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, out);
        p.swap(k, i);
    }
}

fn criterion_switching_oracle(rng: &mut StdRng) -> Outcome {
    let corpus: Vec<Graph> = (0..CORPUS_SIZE)
        .map(|i| {
            let n = 1 + i % CORPUS_MAX_ORDER;
            let g = random_graph(rng, n);
            // Every fourth graph is a disguised copy of an earlier one.
            if i >= 4 && i % 4 == 0 {
                let u = VertexSet(rng.gen::<u32>() & VertexSet::full(n).0);
                return g.switch(u).unwrap();
            }
            g
        })
        .collect();
    let sigs: Vec<Vec<u32>> = corpus.iter().map(signature).collect();
    let mut failures = Vec::new();
    let mut equivalent = 0usize;
    for i in 0..corpus.len() {
        for j in 0..corpus.len() {
            let fast = switching_equivalent(&corpus[i], &corpus[j]);
            equivalent += usize::from(fast && i < j);
            if fast != (sigs[i] == sigs[j]) && failures.len() < 5 {
                failures.push(format!("{} vs {}", corpus[i], corpus[j]));
            }
        }
    }
    outcome(
        "6c switching equivalence vs brute force",
        failures,
        format!("{CORPUS_SIZE} graphs, n <= {CORPUS_MAX_ORDER}, all ordered pairs, {equivalent} equivalent pairs"),
    )
}

fn criterion_completeness(stores: &[&LevelStore]) -> Outcome {
    let mut failures = Vec::new();
    let mut details = Vec::new();
    for store in stores {
        let family = store.family();
        let base = closure_base(family, COMPLETENESS_MAX_ORDER);
        let mut seen = 0usize;
        for n in 1..=COMPLETENESS_MAX_ORDER {
            let closure: ClassSet<()> = base.at(n).iter().map(|g| (*g, ())).collect();
            let level = store.level(n);
            let mut hit = vec![false; level.len()];
            let mut found: ClassSet<()> = ClassSet::new();
            for g in all_graphs(n) {
                if !psd_rank(&g, family).unwrap().psd || closure.contains(&g) {
                    continue;
                }
                found.insert(g, ());
                match level.find(&g) {
                    Some(i) => hit[i] = true,
                    None => {
                        if failures.len() < 5 {
                            failures.push(format!("{family}: {g} missing from level {n}"));
                        }
                    }
                }
            }
            if hit.iter().any(|h| !h) {
                failures.push(format!("{family}: level {n} holds classes not generated exhaustively"));
            }
            if found.len() != level.len() {
                failures.push(format!("{family}: n={n} exhaustive {} vs stored {}", found.len(), level.len()));
            }
            seen += found.len();
        }
        details.push(format!("{family} {seen} classes"));
    }
    outcome(
        "6d completeness on <= 7 vertices",
        failures,
        format!("all graphs on 1..={COMPLETENESS_MAX_ORDER} vertices: {}", details.join(", ")),
    )
}

fn criterion_magnitude(stats: &LevelStats) -> Outcome {
    let max = stats.magnitude.max;
    let failures = if max <= MAGNITUDE_BOUND {
        Vec::new()
    } else {
        vec![format!("max |integer| {max} exceeds {MAGNITUDE_BOUND}")]
    };
    outcome(
        "6e integer magnitude over the cherry run",
        failures,
        format!("max |integer| = {max} ({:.4e}) <= 3.42e21, no overflow", max as f64),
    )
}

fn dir_bytes(dir: &Path) -> Vec<(String, Vec<u8>)> {
    let mut files: Vec<(String, Vec<u8>)> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let e = e.unwrap();
            (e.file_name().to_string_lossy().into_owned(), fs::read(e.path()).unwrap())
        })
        .collect();
    files.sort();
    files
}

fn criterion_determinism(cherry: &LevelStore, edge: &LevelStore) -> Outcome {
    let mut failures = Vec::new();
    let mut files = 0usize;
    for sequential in [edge, cherry] {
        let family = sequential.family();
        let parallel = enumerate(family, PARALLEL_THREADS).expect("parallel enumeration");
        let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
        write_catalog(a.path(), &Catalog::from_store(sequential)).unwrap();
        write_catalog(b.path(), &Catalog::from_store(&parallel)).unwrap();
        let (fa, fb) = (dir_bytes(a.path()), dir_bytes(b.path()));
        files += fa.len();
        if fa != fb {
            failures.push(format!("{family}: catalogs differ"));
        }
        for n in sequential.orders() {
            let level = |s: &LevelStore| s.level(n).iter().map(|(g, d)| (*g, d.rank)).collect::<Vec<_>>();
            if format_level(&level(sequential)) != format_level(&level(&parallel)) {
                failures.push(format!("{family}: level {n} differs"));
            }
        }
    }
    outcome(
        "7 determinism",
        failures,
        format!("sequential and {PARALLEL_THREADS}-thread catalogs byte-identical ({files} files)"),
    )
}

fn main() {
    let mut outcomes = vec![criterion_min_forb()];

    let start = Instant::now();
    let cherry = enumerate(Family::Cherry, 1).expect("cherry enumeration");
    let cherry_time = start.elapsed();
    let cherry_stats = summarize(&cherry);
    let edge = enumerate(Family::Edge, 1).expect("single-edge enumeration");
    let edge_stats = summarize(&edge);

    outcomes.push(criterion_cherry_counts(&cherry_stats, cherry_time));
    outcomes.push(criterion_cherry_identification(&cherry_stats));
    outcomes.push(criterion_edge(&edge_stats));
    outcomes.push(criterion_table(&cherry_stats));

    let mut rng = StdRng::seed_from_u64(0x5eed);
    outcomes.push(criterion_degrees(&mut rng));
    outcomes.push(criterion_spectral(&mut rng));
    outcomes.push(criterion_switching_oracle(&mut rng));
    outcomes.push(criterion_completeness(&[&cherry, &edge]));
    outcomes.push(criterion_magnitude(&cherry_stats));
    outcomes.push(criterion_determinism(&cherry, &edge));

    for o in &outcomes {
        println!("{} {}: {}", if o.ok { "PASS" } else { "FAIL" }, o.name, o.detail);
    }
    let failed = outcomes.iter().filter(|o| !o.ok).count();
    println!("acceptance: {} passed, {failed} failed", outcomes.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
