//! Exact Turán numbers `ex_r(n, F)` by branch and bound.
//!
//! Every copy of every forbidden pattern in `K_n^(r)` is precomputed as a
//! bitmask over the candidate edges (the `r`-subsets of `[n]` in colex
//! order), so a family is free exactly when it contains no copy mask. The
//! search decides candidates in order, including first. Including an edge
//! excludes every candidate that would complete a copy; the bound at each
//! node subtracts a greedy packing of copies that are still open, since each
//! of them must lose one more edge.

use std::cmp::Ordering as CmpOrdering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU32, AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::bounds::{
    crosscut_lower, erdos_gallai, faudree_schelp, greedy_bound, kalai_bound, psi_lower, BoundKind, BoundReport,
    BoundValue,
};
use crate::canon::canonical_form;
use crate::constructions::{psi, psi1};
use crate::covers::{min_crosscut, min_vertex_cover};
use crate::embedding::{contains, for_each_embedding, is_tight_tree, Embedding};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{k_subsets, VertexSet};

/// Largest number of candidate edges `C(n, r)` the search accepts.
pub const MAX_CANDIDATES: usize = 128;

/// Which constructions may seed the incumbent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SeedConstruction {
    /// The best pattern-free member of both families below.
    #[default]
    Auto,
    /// `Ψ_c(n, r)` for every `c`.
    Psi,
    /// `Ψ¹_c(n, r)` for every `c`.
    Psi1,
    None,
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Maximum number of search nodes; `None` means unlimited.
    pub budget: Option<u64>,
    /// Worker threads; 1 searches on the calling thread.
    pub threads: usize,
    /// Collect every maximum family (up to isomorphism) instead of one.
    pub all_extremal: bool,
    pub seed: SeedConstruction,
    /// Restrict to families containing `{1, ..., r}`. Never changes the
    /// maximum, nor the set of maximum families up to isomorphism.
    pub symmetry_pruning: bool,
    /// Cap on the number of witnesses returned.
    pub witness_limit: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: None,
            threads: 1,
            all_extremal: false,
            seed: SeedConstruction::Auto,
            symmetry_pruning: false,
            witness_limit: 64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub max_edges: usize,
    /// Maximum families; pairwise non-isomorphic and sorted by canonical
    /// form when all extremal families were requested.
    pub witnesses: Vec<Hypergraph>,
    /// `true` when the search finished, making `max_edges` exact.
    pub exhausted: bool,
    pub nodes: u64,
    /// The construction that seeded the incumbent, e.g. `psi(7,2,1)`.
    pub seeded_by: Option<String>,
}

/// Computes `ex_r(n, forbidden)`: the most edges an `r`-graph on `[n]` can
/// have without containing any of the patterns.
pub fn max_free(n: usize, r: usize, forbidden: &[Hypergraph], options: &SearchOptions) -> Result<SearchResult> {
    let problem = Problem::new(n, r, forbidden)?;
    let (seed_value, seed_mask, seeded_by) = problem.seed(options.seed)?;
    let shared = Shared {
        incumbent: AtomicU32::new(seed_value),
        nodes: AtomicU64::new(0),
        aborted: AtomicBool::new(false),
        budget: options.budget.unwrap_or(u64::MAX),
    };

    let tasks = if options.threads > 1 {
        problem.frontier(options.symmetry_pruning, &shared, 8 * options.threads)
    } else {
        vec![Node::root()]
    };
    let run = |node: &Node| {
        let mut ctx = Local::new(&problem, &shared, options.all_extremal);
        problem.dfs(
            node.inc,
            node.exc,
            node.depth == 0 && options.symmetry_pruning,
            &mut ctx,
        );
        ctx.finish()
    };
    let outputs: Vec<TaskOutput> = if options.threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("cannot start thread pool: {e}")))?;
        pool.install(|| tasks.par_iter().map(run).collect())
    } else {
        tasks.iter().map(run).collect()
    };

    let exhausted = !shared.aborted.load(Ordering::Relaxed);
    let nodes = shared.nodes.load(Ordering::Relaxed);
    let found = outputs.iter().filter_map(|o| o.first).map(|(v, _)| v).max();
    let best = found.map_or(seed_value, |v| v.max(seed_value));

    let mut masks: Vec<u128> = Vec::new();
    if options.all_extremal {
        let mut classes: BTreeMap<Vec<u8>, u128> = BTreeMap::new();
        for out in &outputs {
            for (key, &(value, mask)) in &out.classes {
                if value == best {
                    classes.entry(key.clone()).or_insert(mask);
                }
            }
        }
        if classes.is_empty() && seed_value == best {
            masks.push(seed_mask);
        }
        masks.extend(classes.into_values().take(options.witness_limit));
    } else {
        // The first maximum family in search order; tasks are listed in that order.
        let first = outputs.iter().filter_map(|o| o.first).find(|&(v, _)| v == best);
        masks.push(first.map_or(seed_mask, |(_, m)| m));
        masks.truncate(options.witness_limit.max(1));
    }

    let mut witnesses = Vec::with_capacity(masks.len());
    for mask in masks {
        let w = problem.family(mask);
        if w.len() != best as usize {
            return Err(Error::Integrity(format!(
                "witness has {} edges, expected {best}",
                w.len()
            )));
        }
        let report = verify_free(&w, forbidden)?;
        if !report.is_free() {
            return Err(Error::Integrity(format!("witness {w:?} contains a forbidden pattern")));
        }
        witnesses.push(w);
    }
    Ok(SearchResult {
        max_edges: best as usize,
        witnesses,
        exhausted,
        nodes,
        seeded_by,
    })
}

struct Problem {
    n: usize,
    r: usize,
    cands: Vec<VertexSet>,
    full: u128,
    /// Copies of the patterns as candidate masks, minimal under inclusion.
    copies: Vec<u128>,
    /// Indices into `copies` of the copies through each candidate.
    by_cand: Vec<Vec<usize>>,
}

struct Shared {
    incumbent: AtomicU32,
    nodes: AtomicU64,
    aborted: AtomicBool,
    budget: u64,
}

#[derive(Clone, Copy)]
struct Node {
    inc: u128,
    exc: u128,
    depth: usize,
}

impl Node {
    fn root() -> Self {
        Node {
            inc: 0,
            exc: 0,
            depth: 0,
        }
    }
}

type Classes = HashMap<Vec<u8>, (u32, u128)>;

struct TaskOutput {
    first: Option<(u32, u128)>,
    classes: Classes,
}

struct Local<'a> {
    problem: &'a Problem,
    shared: &'a Shared,
    all: bool,
    pending_nodes: u64,
    first: Option<(u32, u128)>,
    classes: Classes,
}

const FLUSH_EVERY: u64 = 256;

impl<'a> Local<'a> {
    fn new(problem: &'a Problem, shared: &'a Shared, all: bool) -> Self {
        Local {
            problem,
            shared,
            all,
            pending_nodes: 0,
            first: None,
            classes: HashMap::new(),
        }
    }

    /// Counts a node; `false` once the budget is spent.
    fn tick(&mut self) -> bool {
        self.pending_nodes += 1;
        if self.pending_nodes >= FLUSH_EVERY.min(self.shared.budget) {
            self.flush();
        }
        !self.shared.aborted.load(Ordering::Relaxed)
    }

    fn flush(&mut self) {
        let total = self.shared.nodes.fetch_add(self.pending_nodes, Ordering::Relaxed) + self.pending_nodes;
        self.pending_nodes = 0;
        if total >= self.shared.budget {
            self.shared.aborted.store(true, Ordering::Relaxed);
        }
    }

    fn record(&mut self, inc: u128) {
        let value = inc.count_ones();
        self.shared.incumbent.fetch_max(value, Ordering::Relaxed);
        if self.first.is_none_or(|(v, _)| value > v) {
            self.first = Some((value, inc));
        }
        if self.all {
            let w = self.problem.family(inc);
            let key = canonical_form(&w).unwrap_or_else(|_| inc.to_le_bytes().to_vec());
            self.classes.entry(key).or_insert((value, inc));
        }
    }

    fn finish(mut self) -> TaskOutput {
        self.flush();
        let best = self.shared.incumbent.load(Ordering::Relaxed);
        self.classes.retain(|_, (v, _)| *v >= best);
        TaskOutput {
            first: self.first,
            classes: self.classes,
        }
    }
}

impl Problem {
    fn new(n: usize, r: usize, forbidden: &[Hypergraph]) -> Result<Self> {
        if r == 0 || r > n {
            return invalid(format!("need 1 <= r <= n, got n={n}, r={r}"));
        }
        let cands: Vec<VertexSet> = k_subsets(n, r).collect();
        if cands.len() > MAX_CANDIDATES {
            return Err(Error::Unsupported(format!(
                "C({n},{r}) = {} candidate edges; at most {MAX_CANDIDATES} are supported",
                cands.len()
            )));
        }
        let index: HashMap<VertexSet, usize> = cands.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let host = Hypergraph::complete(n, r)?;
        let mut seen = HashSet::new();
        for pattern in forbidden {
            if pattern.r() != r {
                return Err(Error::UniformityMismatch {
                    host: r,
                    pattern: pattern.r(),
                });
            }
            if pattern.is_empty() {
                return invalid("a pattern without edges is contained in every family");
            }
            if pattern.n() > n {
                continue;
            }
            for_each_embedding(&host, pattern, |map| {
                let mask = pattern
                    .edges()
                    .iter()
                    .fold(0u128, |acc, &e| acc | 1u128 << index[&e.map(map)]);
                seen.insert(mask);
                ControlFlow::Continue(())
            })?;
        }
        let mut copies: Vec<u128> = seen.into_iter().collect();
        copies.sort_unstable_by_key(|&c| (c.count_ones(), c));
        let mut minimal: Vec<u128> = Vec::with_capacity(copies.len());
        for c in copies {
            if !minimal.iter().any(|&m| m & !c == 0) {
                minimal.push(c);
            }
        }
        let mut by_cand = vec![Vec::new(); cands.len()];
        for (k, &c) in minimal.iter().enumerate() {
            for (i, list) in by_cand.iter_mut().enumerate() {
                if c >> i & 1 == 1 {
                    list.push(k);
                }
            }
        }
        let full = if cands.len() == 128 {
            u128::MAX
        } else {
            (1u128 << cands.len()) - 1
        };
        Ok(Problem {
            n,
            r,
            cands,
            full,
            copies: minimal,
            by_cand,
        })
    }

    fn family(&self, mask: u128) -> Hypergraph {
        let edges = (0..self.cands.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.cands[i]);
        Hypergraph::from_sorted_unchecked(self.n, self.r, edges.collect())
    }

    fn mask_of(&self, h: &Hypergraph) -> u128 {
        self.cands
            .iter()
            .enumerate()
            .filter(|(_, e)| h.contains_edge(**e))
            .fold(0, |acc, (i, _)| acc | 1u128 << i)
    }

    fn is_free_mask(&self, mask: u128) -> bool {
        self.copies.iter().all(|&c| c & !mask != 0)
    }

    /// Largest pattern-free construction allowed by `which`, as
    /// `(size, mask, name)`. The empty family is the fallback.
    fn seed(&self, which: SeedConstruction) -> Result<(u32, u128, Option<String>)> {
        let (n, r) = (self.n, self.r);
        let mut options: Vec<(String, Hypergraph)> = Vec::new();
        if matches!(which, SeedConstruction::Auto | SeedConstruction::Psi) {
            for c in 1..=n {
                options.push((format!("psi({n},{r},{c})"), psi(n, r, c)?));
            }
        }
        if matches!(which, SeedConstruction::Auto | SeedConstruction::Psi1) {
            for c in 1..=(n + 1 - r) {
                options.push((format!("psi1({n},{r},{c})"), psi1(n, r, c)?));
            }
        }
        let mut best = (0, 0, None);
        for (name, h) in options {
            let mask = self.mask_of(&h);
            if mask.count_ones() > best.0 && self.is_free_mask(mask) {
                best = (mask.count_ones(), mask, Some(name));
            }
        }
        Ok(best)
    }

    /// Includes candidate `i` and excludes every undecided candidate that
    /// would complete a copy; `None` if `i` itself completes one.
    fn include(&self, inc: u128, exc: u128, i: usize) -> Option<u128> {
        let inc = inc | 1u128 << i;
        let mut exc = exc;
        for &k in &self.by_cand[i] {
            let c = self.copies[k];
            if c & exc != 0 {
                continue;
            }
            let rest = c & !inc;
            match rest.count_ones() {
                0 => return None,
                1 => exc |= rest,
                _ => {}
            }
        }
        Some(exc)
    }

    /// Whether some copy through `i` can still be completed.
    fn is_constrained(&self, exc: u128, i: usize) -> bool {
        self.by_cand[i].iter().any(|&k| self.copies[k] & exc == 0)
    }

    /// Lower bound on further exclusions: open copies with pairwise disjoint
    /// undecided parts, smallest parts first.
    fn packing(&self, exc: u128, und: u128) -> u32 {
        let mut used = 0u128;
        let mut count = 0;
        for pass in 0..2 {
            for &c in &self.copies {
                if c & exc != 0 {
                    continue;
                }
                let u = c & und;
                if (pass == 0) != (u.count_ones() <= 2) || u & used != 0 {
                    continue;
                }
                used |= u;
                count += 1;
            }
        }
        count
    }

    /// Children of a node in search order, after the same pruning as
    /// [`Problem::dfs`]; `None` for leaves.
    fn children(&self, inc: u128, exc: u128, root_symmetry: bool) -> Option<Vec<(u128, u128)>> {
        let und = self.full & !(inc | exc);
        if und == 0 {
            return None;
        }
        let i = und.trailing_zeros() as usize;
        let bit = 1u128 << i;
        let mut out = Vec::with_capacity(2);
        let included = self.include(inc, exc, i);
        if let Some(exc2) = included {
            out.push((inc | bit, exc2));
        }
        // Excluding `i` is pointless when nothing can go wrong by including
        // it, and under symmetry pruning the first edge may be assumed.
        let skip_exclude = included.is_some() && (root_symmetry || !self.is_constrained(exc, i));
        if !skip_exclude {
            out.push((inc, exc | bit));
        }
        Some(out)
    }

    fn pruned(&self, inc: u128, exc: u128, best: u32) -> bool {
        let und = self.full & !(inc | exc);
        let cur = inc.count_ones();
        let room = cur + und.count_ones();
        room < best || room - self.packing(exc, und) < best
    }

    fn dfs(&self, inc: u128, exc: u128, root_symmetry: bool, ctx: &mut Local) {
        if !ctx.tick() {
            return;
        }
        let best = ctx.shared.incumbent.load(Ordering::Relaxed);
        if self.pruned(inc, exc, best) {
            return;
        }
        match self.children(inc, exc, root_symmetry) {
            None => ctx.record(inc),
            Some(kids) => {
                for (i2, e2) in kids {
                    self.dfs(i2, e2, false, ctx);
                }
            }
        }
    }

    /// Expands the tree breadth-first, keeping search order, until at least
    /// `want` open nodes exist. Leaves met on the way become their own tasks.
    fn frontier(&self, symmetry: bool, shared: &Shared, want: usize) -> Vec<Node> {
        let mut level = vec![Node::root()];
        loop {
            if level.len() >= want {
                return level;
            }
            let best = shared.incumbent.load(Ordering::Relaxed);
            let mut next = Vec::with_capacity(2 * level.len());
            let mut grew = false;
            for node in &level {
                let sym = symmetry && node.depth == 0;
                if self.pruned(node.inc, node.exc, best) {
                    continue;
                }
                match self.children(node.inc, node.exc, sym) {
                    None => next.push(*node),
                    Some(kids) => {
                        grew = true;
                        next.extend(kids.into_iter().map(|(inc, exc)| Node {
                            inc,
                            exc,
                            depth: node.depth + 1,
                        }));
                    }
                }
            }
            if !grew {
                return next;
            }
            level = next;
        }
    }
}

/// Per-pattern result of [`verify_free`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternOutcome {
    pub pattern_index: usize,
    /// A copy of the pattern in the construction, if one exists.
    pub embedding: Option<Embedding>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessReport {
    pub outcomes: Vec<PatternOutcome>,
}

impl FreenessReport {
    pub fn is_free(&self) -> bool {
        self.outcomes.iter().all(|o| o.embedding.is_none())
    }
}

/// Checks that `construction` contains none of the patterns.
pub fn verify_free(construction: &Hypergraph, forbidden: &[Hypergraph]) -> Result<FreenessReport> {
    let mut outcomes = Vec::with_capacity(forbidden.len());
    for (pattern_index, pattern) in forbidden.iter().enumerate() {
        let embedding = if pattern.n() > construction.n() {
            None
        } else {
            contains(construction, pattern)?
        };
        outcomes.push(PatternOutcome {
            pattern_index,
            embedding,
        });
    }
    Ok(FreenessReport { outcomes })
}

/// One bound compared against the search value.
#[derive(Clone, Debug, PartialEq)]
pub struct GapRow {
    pub bound: BoundReport,
    /// How the bound's value compares to the search value.
    pub relation: CmpOrdering,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GapReport {
    pub n: usize,
    pub r: usize,
    pub value: usize,
    pub exhausted: bool,
    pub nodes: u64,
    pub rows: Vec<GapRow>,
}

/// The bounds that apply to `pattern` without further input: cover and
/// crosscut constructions always, tight-tree bounds for tight trees, and
/// the graph path bounds for paths.
pub fn default_bounds(n: usize, r: usize, pattern: &Hypergraph) -> Result<Vec<BoundReport>> {
    let mut out = Vec::new();
    let tau = min_vertex_cover(pattern).size;
    if tau >= 1 {
        out.push(psi_lower(n, r, tau)?);
    }
    if let Some(sigma) = min_crosscut(pattern) {
        if sigma.size >= 1 {
            out.push(crosscut_lower(n, r, sigma.size)?);
        }
    }
    let ell = pattern.len();
    if ell >= 1 && is_tight_tree(pattern).is_tight_tree {
        out.push(kalai_bound(n, r, ell)?);
        out.push(greedy_bound(n, r, ell)?);
    }
    if r == 2 && is_graph_path(pattern) {
        out.push(erdos_gallai(n, ell)?);
        out.push(faudree_schelp(n, ell)?);
    }
    Ok(out)
}

fn is_graph_path(h: &Hypergraph) -> bool {
    let deg = h.vertex_degrees();
    let support = h.support().len();
    h.r() == 2
        && !h.is_empty()
        && deg.iter().all(|&d| d <= 2)
        && h.len() + 1 == support
        && is_tight_tree(h).is_tight_tree
}

/// Computes `ex_r(n, pattern)` and sets every bound beside it.
///
/// A lower bound above an exhausted search value, or a search value above
/// an unconditional upper bound, is an integrity failure. Conditional
/// bounds are only reported.
pub fn extremal_gap_report(
    n: usize,
    r: usize,
    pattern: &Hypergraph,
    bounds: &[BoundReport],
    options: &SearchOptions,
) -> Result<GapReport> {
    let result = max_free(n, r, std::slice::from_ref(pattern), options)?;
    let value = BigRational::from_integer(BigInt::from(result.max_edges));
    let mut rows = Vec::with_capacity(bounds.len());
    for bound in bounds {
        let relation = compare(&bound.value, &value);
        let violated = match bound.kind {
            BoundKind::Lower => result.exhausted && relation == CmpOrdering::Greater,
            BoundKind::Upper => relation == CmpOrdering::Less,
            BoundKind::Exact => relation == CmpOrdering::Less || (result.exhausted && relation != CmpOrdering::Equal),
            BoundKind::ConditionalUpper | BoundKind::ConditionalLower => false,
        };
        if violated {
            return Err(Error::Integrity(format!(
                "{} bound {} = {} contradicts ex_{r}({n}) {} {}",
                bound.kind,
                bound.name,
                bound.value,
                if result.exhausted { "=" } else { ">=" },
                result.max_edges
            )));
        }
        rows.push(GapRow {
            bound: bound.clone(),
            relation,
        });
    }
    Ok(GapReport {
        n,
        r,
        value: result.max_edges,
        exhausted: result.exhausted,
        nodes: result.nodes,
        rows,
    })
}

fn compare(bound: &BoundValue, value: &BigRational) -> CmpOrdering {
    match bound {
        BoundValue::Rational(q) => q.cmp(value),
        BoundValue::Real(x) => x
            .partial_cmp(&value.to_f64().unwrap_or(f64::NAN))
            .unwrap_or(CmpOrdering::Equal),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::constructions::{ab_path, fano, graph_path};

    fn opts() -> SearchOptions {
        SearchOptions::default()
    }

    #[test]
    fn graph_p3_on_seven_vertices() {
        let p3 = graph_path(3).unwrap();
        let res = max_free(
            7,
            2,
            &[p3.clone()],
            &SearchOptions {
                all_extremal: true,
                ..opts()
            },
        )
        .unwrap();
        assert_eq!(res.max_edges, 6);
        assert!(res.exhausted);
        let triangles = Hypergraph::from_lists(7, 2, &[&[1, 2], &[1, 3], &[2, 3], &[4, 5], &[4, 6], &[5, 6]]).unwrap();
        let star = psi1(7, 2, 1).unwrap();
        let has = |g: &Hypergraph| res.witnesses.iter().any(|w| are_isomorphic(w, g).unwrap());
        assert!(has(&triangles) && has(&star));
    }

    #[test]
    fn fano_is_the_packing_optimum() {
        let p = ab_path(2, 1, 2).unwrap();
        let res = max_free(7, 3, &[p], &opts()).unwrap();
        assert_eq!(res.max_edges, 7);
        assert!(are_isomorphic(&res.witnesses[0], &fano()).unwrap());
    }

    #[test]
    fn single_edge_forbids_everything() {
        let e = Hypergraph::from_lists(3, 3, &[&[1, 2, 3]]).unwrap();
        let res = max_free(6, 3, &[e], &opts()).unwrap();
        assert_eq!(res.max_edges, 0);
        assert!(res.witnesses[0].is_empty());
    }

    #[test]
    fn no_patterns_gives_complete() {
        let res = max_free(6, 3, &[], &opts()).unwrap();
        assert_eq!(res.max_edges, 20);
    }

    #[test]
    fn options_do_not_change_the_value() {
        let p3 = graph_path(3).unwrap();
        let base = max_free(8, 2, &[p3.clone()], &opts()).unwrap();
        for (threads, sym, seed) in [
            (2, false, SeedConstruction::None),
            (3, true, SeedConstruction::Psi),
            (1, true, SeedConstruction::None),
        ] {
            let o = SearchOptions {
                threads,
                symmetry_pruning: sym,
                seed,
                ..opts()
            };
            let res = max_free(8, 2, &[p3.clone()], &o).unwrap();
            assert_eq!(res.max_edges, base.max_edges);
            if !sym {
                assert_eq!(res.witnesses, base.witnesses);
            }
        }
    }

    #[test]
    fn budget_stops_early() {
        let p = ab_path(3, 2, 1).unwrap();
        let o = SearchOptions {
            budget: Some(10),
            seed: SeedConstruction::None,
            ..opts()
        };
        let res = max_free(7, 3, &[p], &o).unwrap();
        assert!(!res.exhausted);
        assert!(res.nodes >= 10);
    }

    #[test]
    fn rejects_bad_patterns() {
        let empty = Hypergraph::empty(3, 2).unwrap();
        assert!(max_free(5, 2, &[empty], &opts()).is_err());
        let tri = Hypergraph::from_lists(3, 3, &[&[1, 2, 3]]).unwrap();
        assert!(matches!(
            max_free(5, 2, &[tri], &opts()),
            Err(Error::UniformityMismatch { .. })
        ));
        assert!(matches!(max_free(11, 3, &[], &opts()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn verify_free_reports_copies() {
        let star = psi(10, 3, 1).unwrap();
        let p = ab_path(3, 2, 1).unwrap();
        assert!(verify_free(&star, &[p.clone()]).unwrap().is_free());
        let k = Hypergraph::complete(7, 3).unwrap();
        let rep = verify_free(&k, &[p]).unwrap();
        assert!(!rep.is_free());
    }

    #[test]
    fn gap_reports() {
        let p3 = graph_path(3).unwrap();
        let bounds = default_bounds(7, 2, &p3).unwrap();
        let rep = extremal_gap_report(7, 2, &p3, &bounds, &opts()).unwrap();
        assert_eq!(rep.value, 6);
        let row = |name: &str| rep.rows.iter().find(|r| r.bound.name == name).unwrap().relation;
        assert_eq!(row("psi_lower"), CmpOrdering::Equal);
        assert_eq!(row("erdos_gallai"), CmpOrdering::Greater);
        assert_eq!(row("faudree_schelp"), CmpOrdering::Equal);

        let p = ab_path(2, 1, 2).unwrap();
        let bounds = default_bounds(7, 3, &p).unwrap();
        let rep = extremal_gap_report(7, 3, &p, &bounds, &opts()).unwrap();
        assert_eq!(
            rep.rows.iter().find(|r| r.bound.name == "kalai").unwrap().relation,
            CmpOrdering::Equal
        );

        let wrong = BoundReport {
            name: "fake".into(),
            value: BoundValue::Rational(BigRational::from_integer(BigInt::from(5))),
            kind: BoundKind::Upper,
            validity_note: String::new(),
        };
        assert!(matches!(
            extremal_gap_report(7, 2, &p3, &[wrong], &opts()),
            Err(Error::Integrity(_))
        ));
    }
}
