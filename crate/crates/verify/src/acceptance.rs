//! The acceptance criteria, one function each, with pinned limits.

use std::fmt;
use std::time::{Duration, Instant};

use hgx_core::bounds::{faudree_schelp, integer_value, kk_shadow_bound};
use hgx_core::canon::are_isomorphic;
use hgx_core::constructions::{
    ab_path, blowup, fano, graph_path, no_stability_example, no_stability_random, psi, psi1, tight_path,
    trees_with_parts,
};
use hgx_core::covers::{is_crosscut, min_crosscut, min_vertex_cover};
use hgx_core::embedding::{contains, contains_blowup, greedy_tight_tree, validate_embedding};
use hgx_core::search::{max_free, verify_free, SearchOptions};
use hgx_core::templates::{random_matched_template, verify_template_bound};
use hgx_core::{k_subsets, BipartiteGraph, Error, Hypergraph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::oracles::{
    brute_contains, has_crosscut_of_size_at_most, has_full_cover_vertex, is_disjoint_union_of_cliques,
    is_steiner_triple_system, naive_max_free, pascal, psi_sizes_by_enumeration,
};

/// Slack allowed between the shadow size and the real-valued shadow bound.
pub const KK_TOLERANCE: f64 = 1e-9;

/// Seed shared by every randomized criterion.
pub const ACCEPTANCE_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub passed: bool,
    pub detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Outcome {
            passed,
            detail: detail.into(),
        }
    }
}

type Check = fn() -> Result<Outcome, Error>;

pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub limit: Duration,
    check: Check,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} criterion {:>2} {}: {} [{:.2}s of {}s]",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.detail,
            self.elapsed.as_secs_f64(),
            self.limit.as_secs()
        )
    }
}

const fn minutes(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            title: "graph-path exactness",
            limit: minutes(5),
            check: graph_path_exactness,
        },
        Criterion {
            id: 2,
            title: "extremal structures for P3 on 7 vertices",
            limit: minutes(1),
            check: extremal_structures,
        },
        Criterion {
            id: 3,
            title: "Steiner packing oracle",
            limit: minutes(2),
            check: steiner_packing,
        },
        Criterion {
            id: 4,
            title: "construction identities",
            limit: minutes(1),
            check: construction_identities,
        },
        Criterion {
            id: 5,
            title: "crosscut of tree blowups",
            limit: minutes(2),
            check: crosscut_theorem,
        },
        Criterion {
            id: 6,
            title: "freeness of the cover constructions",
            limit: minutes(10),
            check: freeness_suite,
        },
        Criterion {
            id: 7,
            title: "template inequality fuzz",
            limit: minutes(5),
            check: template_fuzz,
        },
        Criterion {
            id: 8,
            title: "greedy tight-tree contrapositive",
            limit: minutes(3),
            check: greedy_tight_trees,
        },
        Criterion {
            id: 9,
            title: "Kruskal-Katona property",
            limit: minutes(1),
            check: kruskal_katona,
        },
        Criterion {
            id: 10,
            title: "no-stability construction",
            limit: minutes(2),
            check: no_stability,
        },
        Criterion {
            id: 11,
            title: "engine cross-validation",
            limit: minutes(5),
            check: engine_cross_validation,
        },
        Criterion {
            id: 12,
            title: "lower-bound dominance for P3(2,1)",
            limit: minutes(10),
            check: lower_bound_dominance,
        },
    ]
}

/// Runs one criterion; exceeding the time limit fails it.
pub fn run(c: &Criterion) -> Report {
    let start = Instant::now();
    let outcome = (c.check)().unwrap_or_else(|e| Outcome::new(false, format!("error: {e}")));
    let elapsed = start.elapsed();
    let in_time = elapsed <= c.limit;
    Report {
        id: c.id,
        title: c.title,
        passed: outcome.passed && in_time,
        detail: if in_time {
            outcome.detail
        } else {
            format!("{} (time limit exceeded)", outcome.detail)
        },
        elapsed,
        limit: c.limit,
    }
}

pub fn run_all() -> Vec<Report> {
    criteria().iter().map(run).collect()
}

fn exact_search() -> SearchOptions {
    SearchOptions::default()
}

fn graph_path_exactness() -> Result<Outcome, Error> {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 4..=9 {
        for ell in 2..=5 {
            let res = max_free(n, 2, &[graph_path(ell)?], &exact_search())?;
            let want = integer_value(&faudree_schelp(n, ell)?).expect("integer formula");
            count += 1;
            if !res.exhausted || res.max_edges as u128 != want {
                bad.push(format!("n={n} l={ell}: got {} want {want}", res.max_edges));
            }
        }
    }
    Ok(Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{count} instances match the closed form")
        } else {
            bad.join("; ")
        },
    ))
}

fn extremal_structures() -> Result<Outcome, Error> {
    let opts = SearchOptions {
        all_extremal: true,
        ..exact_search()
    };
    let res = max_free(7, 2, &[graph_path(3)?], &opts)?;
    let cliques = res.witnesses.iter().filter(|w| is_disjoint_union_of_cliques(w)).count();
    let covered = res.witnesses.iter().filter(|w| has_full_cover_vertex(w)).count();
    let passed = res.exhausted && res.max_edges == 6 && res.witnesses.len() >= 2 && cliques >= 1 && covered >= 1;
    Ok(Outcome::new(
        passed,
        format!(
            "ex=6? {}; {} non-isomorphic extremal graphs, {cliques} unions of cliques, {covered} with a full vertex",
            res.max_edges == 6,
            res.witnesses.len()
        ),
    ))
}

fn steiner_packing() -> Result<Outcome, Error> {
    let res = max_free(7, 3, &[ab_path(2, 1, 2)?], &exact_search())?;
    let w = &res.witnesses[0];
    let sts = is_steiner_triple_system(w);
    let iso = are_isomorphic(w, &fano())?;
    Ok(Outcome::new(
        res.exhausted && res.max_edges == 7 && sts && iso,
        format!(
            "ex = {}, witness is STS(7): {sts}, isomorphic to Fano: {iso}",
            res.max_edges
        ),
    ))
}

fn construction_identities() -> Result<Outcome, Error> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in 1..=14usize {
        for r in 1..=5.min(n) {
            for c in 0..=4.min(n) {
                let (meet, once) = psi_sizes_by_enumeration(n, r, c);
                let eq1 = pascal(n, r) - pascal(n - c, r);
                let eq2 = c as u128 * pascal(n - c, r - 1);
                let p = psi(n, r, c)?;
                if p.len() != meet || meet as u128 != eq1 {
                    bad.push(format!("psi({n},{r},{c})"));
                }
                if c == 0 || r <= n - c + 1 {
                    let p1 = psi1(n, r, c)?;
                    if p1.len() != once || once as u128 != eq2 {
                        bad.push(format!("psi1({n},{r},{c})"));
                    }
                }
                checked += 1;
            }
        }
    }
    Ok(Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{checked} parameter triples agree")
        } else {
            bad.join(", ")
        },
    ))
}

fn crosscut_theorem() -> Result<Outcome, Error> {
    let mut checked = 0;
    let mut bad = Vec::new();
    for total in 2..=7 {
        for s in 1..total {
            let t = total - s;
            for tree in trees_with_parts(s, t)? {
                for (a, b) in [(1, 1), (2, 1), (3, 2)] {
                    let h = blowup(&tree, a, b)?.hypergraph;
                    let want = s.min(t);
                    let ok = match min_crosscut(&h) {
                        Some(c) => {
                            c.size == want && is_crosscut(&h, c.witness) && !has_crosscut_of_size_at_most(&h, want - 1)
                        }
                        None => false,
                    };
                    if !ok {
                        bad.push(format!("{tree:?} ({a},{b})"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{checked} blowups have crosscut number min(s,t)")
        } else {
            bad.join("; ")
        },
    ))
}

fn freeness_suite() -> Result<Outcome, Error> {
    let mut checks = 0;
    let mut bad = Vec::new();
    for total in 2..=6 {
        for s in 1..total {
            let t_side = total - s;
            for tree in trees_with_parts(s, t_side)? {
                for r in 3..=5 {
                    for a in 1..r {
                        let pattern = blowup(&tree, a, r - a)?.hypergraph;
                        let tau = min_vertex_cover(&pattern).size;
                        let sigma = min_crosscut(&pattern).map(|c| c.size);
                        for n in [r + 2, 9, 12] {
                            if n > 12 || n < r {
                                continue;
                            }
                            let mut hosts = vec![("psi", psi(n, r, tau - 1)?)];
                            if let Some(sig) = sigma {
                                if sig == 1 || r <= n + 2 - sig {
                                    hosts.push(("psi1", psi1(n, r, sig - 1)?));
                                }
                            }
                            for (name, host) in hosts {
                                checks += 1;
                                let found = verify_free(&host, std::slice::from_ref(&pattern))?;
                                let block = contains_blowup(&host, &tree, a, r - a)?;
                                if !found.is_free() || block.is_some() {
                                    bad.push(format!("{name}(n={n}, r={r}) contains {tree:?}({a},{})", r - a));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            format!("{checks} construction/pattern pairs, zero containments")
        } else {
            bad.join("; ")
        },
    ))
}

fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, r: usize, p: f64) -> Result<Hypergraph, Error> {
    let edges: Vec<VertexSet> = k_subsets(n, r).filter(|_| rng.gen_bool(p)).collect();
    Hypergraph::new(n, r, edges)
}

fn template_fuzz() -> Result<Outcome, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(ACCEPTANCE_SEED);
    let families = [trees_with_parts(2, 2)?, trees_with_parts(3, 2)?];
    let mut exceeded = 0;
    let mut failures = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(8..=20);
        let (a, b) = if rng.gen_bool(0.5) { (1, 2) } else { (2, 1) };
        let which = rng.gen_range(0..2);
        let (s, t) = [(2, 2), (3, 2)][which];
        let host = {
            let p = rng.gen_range(0.05..0.9);
            random_hypergraph(&mut rng, n, 3, p)?
        };
        let k_a = rng.gen_range(1..=n / (2 * a));
        let k_b = rng.gen_range(1..=(n - a * k_a) / b);
        let template = random_matched_template(n, a, b, k_a, k_b, rng.gen())?;
        let report = verify_template_bound(&host, &template, s, t, &families[which])?;
        exceeded += usize::from(report.exceeded);
        failures += usize::from(!report.consistent());
    }
    Ok(Outcome::new(
        failures == 0 && exceeded > 0,
        format!("1000 templates, {exceeded} exceed the bound, {failures} failures"),
    ))
}

fn greedy_tight_trees() -> Result<Outcome, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(ACCEPTANCE_SEED + 8);
    let paths = [tight_path(2, 3)?, tight_path(3, 3)?];
    let mut triggered = 0;
    let mut failures = 0;
    for _ in 0..500 {
        let n = rng.gen_range(3..=9);
        let g = {
            let p = rng.gen_range(0.05..0.95);
            random_hypergraph(&mut rng, n, 3, p)?
        };
        let shadow = g.shadow(2)?.len();
        for (ell, path) in [2usize, 3].into_iter().zip(&paths) {
            if g.len() > (ell - 1) * shadow {
                triggered += 1;
                let ok = greedy_tight_tree(&g, path).is_some_and(|e| validate_embedding(&g, path, &e));
                failures += usize::from(!ok);
            }
        }
    }
    Ok(Outcome::new(
        failures == 0 && triggered > 0,
        format!("500 graphs, {triggered} above (l-1)|shadow|, {failures} failures"),
    ))
}

fn kruskal_katona() -> Result<Outcome, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(ACCEPTANCE_SEED + 9);
    let mut worst = f64::INFINITY;
    for _ in 0..200 {
        let n = rng.gen_range(3..=8);
        let g = {
            let p = rng.gen_range(0.05..0.95);
            random_hypergraph(&mut rng, n, 3, p)?
        };
        let slack = g.shadow(2)?.len() as f64 - kk_shadow_bound(g.len() as u128, 3);
        worst = worst.min(slack);
    }
    let mut max_err: f64 = 0.0;
    for y0 in 3..=20 {
        let m = pascal(y0, 3);
        max_err = max_err.max((kk_shadow_bound(m, 3) - pascal(y0, 2) as f64).abs());
    }
    Ok(Outcome::new(
        worst >= -KK_TOLERANCE && max_err <= KK_TOLERANCE,
        format!("min slack {worst:.3} over 200 graphs, max inversion error {max_err:.1e}"),
    ))
}

fn no_stability() -> Result<Outcome, Error> {
    let pattern = ab_path(4, 2, 1)?;
    let mut bad = Vec::new();
    for n in 5..=9 {
        let h = no_stability_example(n, 3)?;
        if h.len() as u128 != pascal(n - 2, 2) {
            bad.push(format!("n={n}: {} edges", h.len()));
        }
        if contains(&h, &pattern)?.is_some() || brute_contains(&h, &pattern) {
            bad.push(format!("n={n}: contains P4(2,1)"));
        }
        for seed in 0..5 {
            let h = no_stability_random(n, 3, seed)?;
            if contains(&h, &pattern)?.is_some() {
                bad.push(format!("n={n} seed={seed}: contains P4(2,1)"));
            }
        }
    }
    Ok(Outcome::new(
        bad.is_empty(),
        if bad.is_empty() {
            "n = 5..9: sizes C(n-2,2), no P4(2,1) (fixed and 5 random partitions)".to_string()
        } else {
            bad.join("; ")
        },
    ))
}

fn engine_cross_validation() -> Result<Outcome, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(ACCEPTANCE_SEED + 11);
    let skeletons = [
        BipartiteGraph::path(2),
        BipartiteGraph::path(3),
        BipartiteGraph::path(4),
        BipartiteGraph::star(3),
        BipartiteGraph::double_star(1, 1),
        BipartiteGraph::double_star(2, 1),
        BipartiteGraph::complete(2, 2),
    ];
    let mut disagreements = Vec::new();
    let mut found = 0;
    for i in 0..300 {
        let n = rng.gen_range(4..=10);
        let r = if n >= 8 { 3 } else { rng.gen_range(2..=4) };
        let a = rng.gen_range(1..r);
        let host = {
            let p = rng.gen_range(0.1..0.9);
            random_hypergraph(&mut rng, n, r, p)?
        };
        let sk = &skeletons[rng.gen_range(0..skeletons.len())];
        let pattern = blowup(sk, a, r - a)?.hypergraph;
        let g = contains(&host, &pattern)?;
        let b = contains_blowup(&host, sk, a, r - a)?;
        found += usize::from(g.is_some());
        let valid = b.as_ref().is_none_or(|e| validate_embedding(&host, &pattern, e));
        if g.is_some() != b.is_some() || !valid {
            disagreements.push(format!("containment instance {i}"));
        }
    }

    let mut patterns: Vec<Hypergraph> = vec![
        graph_path(2)?,
        graph_path(3)?,
        graph_path(4)?,
        ab_path(2, 1, 2)?,
        ab_path(2, 2, 1)?,
        tight_path(3, 3)?,
        Hypergraph::from_lists(3, 2, &[&[1, 2], &[1, 3], &[2, 3]])?,
        Hypergraph::from_lists(4, 2, &[&[1, 2], &[3, 4]])?,
        Hypergraph::from_lists(4, 3, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4]])?,
    ];
    for _ in 0..30 {
        let r = rng.gen_range(2..=3);
        let k = rng.gen_range(r..=r + 2);
        let h = random_hypergraph(&mut rng, k, r, 0.5)?;
        if !h.is_empty() {
            let m = rng.gen_range(1..=3);
            patterns.push(Hypergraph::new(
                k,
                r,
                h.edges().iter().take(m).copied().collect::<Vec<_>>(),
            )?);
        }
    }
    let mut searches = 0;
    for p in &patterns {
        let r = p.r();
        for n in r..=7 {
            if pascal(n, r) > 20 {
                break;
            }
            let res = max_free(n, r, std::slice::from_ref(p), &exact_search())?;
            searches += 1;
            if !res.exhausted || res.max_edges != naive_max_free(n, r, std::slice::from_ref(p)) {
                disagreements.push(format!("max_free n={n} r={r} pattern {:?}", p.edges()));
            }
        }
    }
    Ok(Outcome::new(
        disagreements.is_empty(),
        if disagreements.is_empty() {
            format!("300 containment instances ({found} found) and {searches} searches agree")
        } else {
            disagreements.join("; ")
        },
    ))
}

fn lower_bound_dominance() -> Result<Outcome, Error> {
    let pattern = ab_path(3, 2, 1)?;
    let mut rows = Vec::new();
    let mut passed = true;
    for n in 4..=8 {
        let res = max_free(n, 3, std::slice::from_ref(&pattern), &exact_search())?;
        let lower = psi(n, 3, 1)?.len();
        let ok = res.max_edges >= lower && (n > 7 || res.exhausted);
        passed &= ok;
        rows.push(format!(
            "n={n}: {}{} >= {lower}",
            res.max_edges,
            if res.exhausted { "" } else { " (budget)" }
        ));
    }
    Ok(Outcome::new(passed, rows.join(", ")))
}
