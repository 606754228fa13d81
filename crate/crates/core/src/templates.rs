//! `(a, b)`-templates: an `a`-uniform family `A` and a `b`-uniform matching
//! `B` on disjoint vertex sets, the incidence graph `H₀` of pairs whose union
//! is a host edge, and the family `H₁` of those unions.

use std::collections::{BTreeMap, HashMap};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bipartite::BipartiteGraph;
use crate::constructions::blowup;
use crate::covers::{is_vertex_cover, min_cover_of_sets};
use crate::embedding::{grow_tree_in_bipartite, validate_embedding, BlockMap, Embedding, TreeEmbedding};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::{is_matching, EdgeSet, Hypergraph};
use crate::vertex_set::{binomial, subsets, VertexSet};

/// The `a`-side of a template.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ASide {
    /// An explicit list of `a`-sets.
    Explicit(Vec<VertexSet>),
    /// All `a`-subsets of `ground`, never materialized.
    Subsets { ground: VertexSet },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Template {
    a: usize,
    b: usize,
    a_side: ASide,
    b_sets: Vec<VertexSet>,
}

impl Template {
    pub fn new(a: usize, b: usize, a_side: ASide, b_sets: Vec<VertexSet>) -> Result<Self> {
        if a == 0 || b == 0 {
            return invalid("template block sizes must be positive");
        }
        let a_support = match &a_side {
            ASide::Explicit(sets) => {
                if let Some(e) = sets.iter().find(|e| e.len() != a) {
                    return Err(Error::WrongArity {
                        expected: a,
                        found: e.len(),
                    });
                }
                sets.iter().fold(VertexSet::EMPTY, |acc, &e| acc | e)
            }
            ASide::Subsets { ground } => *ground,
        };
        if let Some(f) = b_sets.iter().find(|f| f.len() != b) {
            return Err(Error::WrongArity {
                expected: b,
                found: f.len(),
            });
        }
        if !is_matching(&b_sets) {
            return invalid("B must be a matching");
        }
        let b_support = b_sets.iter().fold(VertexSet::EMPTY, |acc, &f| acc | f);
        if !a_support.is_disjoint(b_support) {
            return invalid("V(A) and V(B) must be disjoint");
        }
        let mut a_side = a_side;
        if let ASide::Explicit(sets) = &mut a_side {
            sets.sort_unstable();
            sets.dedup();
        }
        let mut b_sets = b_sets;
        b_sets.sort_unstable();
        Ok(Template { a, b, a_side, b_sets })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn a_side(&self) -> &ASide {
        &self.a_side
    }

    pub fn b_sets(&self) -> &[VertexSet] {
        &self.b_sets
    }

    /// `|A|`.
    pub fn a_len(&self) -> u128 {
        match &self.a_side {
            ASide::Explicit(sets) => sets.len() as u128,
            ASide::Subsets { ground } => binomial(ground.len() as u64, self.a as u64),
        }
    }

    pub fn contains_a(&self, e: VertexSet) -> bool {
        match &self.a_side {
            ASide::Explicit(sets) => sets.binary_search(&e).is_ok(),
            ASide::Subsets { ground } => e.len() == self.a && e.is_subset_of(*ground),
        }
    }

    /// Whether `A` is a matching (an `A` given by all subsets of a ground
    /// set is one only when the ground set has at most `a` vertices).
    pub fn a_is_matching(&self) -> bool {
        match &self.a_side {
            ASide::Explicit(sets) => is_matching(sets),
            ASide::Subsets { ground } => ground.len() <= self.a || self.a == 0,
        }
    }
}

/// `H₀` and `H₁` of a template in a host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemplateIncidence {
    /// Bipartite graph whose `U` side indexes `a_members` and whose `V` side
    /// indexes the template's `B` (both 1-based).
    pub h0: BipartiteGraph,
    /// Members of `A` lying in at least one pair of `H₀`, in colex order.
    pub a_members: Vec<VertexSet>,
    pub b_members: Vec<VertexSet>,
    pub h1: Hypergraph,
}

/// Builds `H₀ = {(e, f) ∈ A × B : e ∪ f ∈ H}` and `H₁ = {e ∪ f}` by scanning
/// host edges, so `A` is never enumerated.
pub fn incidence(host: &Hypergraph, template: &Template) -> Result<TemplateIncidence> {
    if template.a + template.b != host.r() {
        return Err(Error::UniformityMismatch {
            host: host.r(),
            pattern: template.a + template.b,
        });
    }
    let b_index: HashMap<VertexSet, usize> = template.b_sets.iter().enumerate().map(|(j, &f)| (f, j + 1)).collect();
    let mut pairs: BTreeMap<VertexSet, Vec<usize>> = BTreeMap::new();
    let mut h1 = Vec::new();
    for &e in host.edges() {
        let mut hit = false;
        for f in subsets(e, template.b) {
            if let Some(&j) = b_index.get(&f) {
                if template.contains_a(e - f) {
                    pairs.entry(e - f).or_default().push(j);
                    hit = true;
                }
            }
        }
        if hit {
            h1.push(e);
        }
    }
    let a_members: Vec<VertexSet> = pairs.keys().copied().collect();
    let edges = pairs
        .values()
        .enumerate()
        .flat_map(|(i, js)| js.iter().map(move |&j| (i + 1, j)));
    let h0 = BipartiteGraph::new(a_members.len(), template.b_sets.len(), edges)?;
    Ok(TemplateIncidence {
        h0,
        a_members,
        b_members: template.b_sets.clone(),
        h1: Hypergraph::new(host.n(), host.r(), h1)?,
    })
}

impl TemplateIncidence {
    /// The host embedding of `tree(a, b)` described by a tree embedding
    /// into `H₀`, laid out like [`crate::constructions::blowup`].
    pub fn to_host_embedding(&self, tree: &BipartiteGraph, emb: &TreeEmbedding) -> Embedding {
        let u_blocks: Vec<VertexSet> = emb.u_map.iter().map(|&i| self.a_members[i - 1]).collect();
        let v_blocks: Vec<VertexSet> = emb.v_map.iter().map(|&j| self.b_members[j - 1]).collect();
        debug_assert_eq!((u_blocks.len(), v_blocks.len()), (tree.s(), tree.t()));
        let vertex_map = u_blocks.iter().chain(&v_blocks).flat_map(|blk| blk.iter()).collect();
        Embedding {
            vertex_map,
            block_map: Some(BlockMap { u_blocks, v_blocks }),
        }
    }
}

/// Outcome of growing one tree in a template's incidence graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeOutcome {
    pub tree: BipartiteGraph,
    /// A validated host embedding of the tree's blowup, if one was found.
    pub embedding: Option<Embedding>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TemplateBoundReport {
    pub a_size: usize,
    pub b_size: usize,
    pub h0_size: usize,
    pub h1_size: usize,
    /// `(t - 1)|A| + (s - 1)|B|`.
    pub bound: usize,
    pub exceeded: bool,
    /// One entry per requested tree; empty when the bound holds.
    pub outcomes: Vec<TreeOutcome>,
}

impl TemplateBoundReport {
    /// `true` when the bound holds or every requested tree was embedded.
    pub fn consistent(&self) -> bool {
        !self.exceeded || self.outcomes.iter().all(|o| o.embedding.is_some())
    }
}

/// Checks `|H₁| ≤ (t-1)|A| + (s-1)|B|` for a template whose `A` and `B` are
/// matchings; when the inequality fails, grows every tree of `trees` (each
/// with parts of sizes `s` and `t`) in `H₀`.
pub fn verify_template_bound(
    host: &Hypergraph,
    template: &Template,
    s: usize,
    t: usize,
    trees: &[BipartiteGraph],
) -> Result<TemplateBoundReport> {
    if !template.a_is_matching() {
        return invalid("the template bound needs A to be a matching");
    }
    if s == 0 || t == 0 {
        return invalid("tree parts must be nonempty");
    }
    if let Some(bad) = trees.iter().find(|tr| tr.s() != s || tr.t() != t || !tr.is_tree()) {
        return invalid(format!(
            "tree with parts ({}, {}) does not match ({s}, {t})",
            bad.s(),
            bad.t()
        ));
    }
    let inc = incidence(host, template)?;
    let a_size = template.a_len() as usize;
    let b_size = template.b_sets.len();
    let bound = (t - 1) * a_size + (s - 1) * b_size;
    let exceeded = inc.h1.len() > bound;
    let mut outcomes = Vec::new();
    if exceeded {
        for tree in trees {
            let embedding = grow_tree_in_bipartite(&inc.h0, tree)
                .map(|e| inc.to_host_embedding(tree, &e))
                .filter(|e| {
                    let pattern = blowup(tree, template.a, template.b).map(|bl| bl.hypergraph);
                    pattern.is_ok_and(|p| validate_embedding(host, &p, e))
                });
            outcomes.push(TreeOutcome {
                tree: tree.clone(),
                embedding,
            });
        }
    }
    Ok(TemplateBoundReport {
        a_size,
        b_size,
        h0_size: inc.h0.len(),
        h1_size: inc.h1.len(),
        bound,
        exceeded,
        outcomes,
    })
}

/// Heavy `a`-sets and a minimum cover of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeavySets {
    /// `D`: the `a`-sets of degree at least `n^b / m`.
    pub d: EdgeSet,
    /// `L`: a minimum vertex cover of `D`.
    pub l: VertexSet,
}

/// `D = {e : |e| = a, d_H(e) ≥ n^b / m}` with `b = r - a`, and a minimum
/// vertex cover `L` of `D`.
pub fn heavy_sets(host: &Hypergraph, a: usize, m: u64) -> Result<HeavySets> {
    let r = host.r();
    if a == 0 || a >= r {
        return invalid(format!("a={a} must lie in 1..{r}"));
    }
    if m == 0 {
        return invalid("m must be at least 1");
    }
    let b = r - a;
    let threshold = (host.n() as u128)
        .checked_pow(b as u32)
        .ok_or_else(|| Error::Unsupported(format!("n^b overflows for n={}, b={b}", host.n())))?;
    let mut degree: HashMap<VertexSet, u128> = HashMap::new();
    for &e in host.edges() {
        for f in subsets(e, a) {
            *degree.entry(f).or_default() += 1;
        }
    }
    let heavy: Vec<VertexSet> = degree
        .into_iter()
        .filter(|&(_, d)| d * m as u128 >= threshold)
        .map(|(f, _)| f)
        .collect();
    let d = EdgeSet::new(host.n(), a, heavy)?;
    let l = min_cover_of_sets(d.members(), host.n()).witness;
    Ok(HeavySets { d, l })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SamplerParams {
    /// Inclusion probability of each vertex outside `L`.
    pub alpha: f64,
    /// Heaviness parameter.
    pub m: u64,
    pub seed: u64,
    /// Degree threshold fraction.
    pub delta: f64,
}

impl SamplerParams {
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.alpha) {
            return invalid(format!("alpha={} must lie in [0, 1]", self.alpha));
        }
        if self.m == 0 {
            return invalid("m must be at least 1");
        }
        if !self.delta.is_finite() || self.delta < 0.0 {
            return invalid("delta must be a nonnegative number");
        }
        Ok(())
    }
}

/// A random template drawn from a host.
#[derive(Clone, Debug, PartialEq)]
pub struct SampledTemplate {
    pub template: Template,
    /// The random set `R`; `A` consists of all its `a`-subsets.
    pub r_set: VertexSet,
    /// All blocks of the random partition.
    pub partition: Vec<VertexSet>,
    /// Blocks of `B` missing `L`.
    pub b0: Vec<VertexSet>,
    /// Blocks of `B` meeting `L`.
    pub b1: Vec<VertexSet>,
}

/// Draws `R ⊆ V ∖ L` by independent `alpha`-coins (in label order), then a
/// uniformly random partition of `V` into `b`-blocks (after dropping the
/// `n mod b` highest labels) by shuffling. `B` keeps the blocks avoiding
/// `R`. Everything is determined by the seed.
pub fn sample_template(host: &Hypergraph, a: usize, params: &SamplerParams, l: VertexSet) -> Result<SampledTemplate> {
    params.validate()?;
    let r = host.r();
    if a == 0 || a >= r {
        return invalid(format!("a={a} must lie in 1..{r}"));
    }
    let b = r - a;
    let n = host.n();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut r_set = VertexSet::EMPTY;
    for v in 1..=n as u32 {
        if !l.contains(v) && rng.gen_bool(params.alpha) {
            r_set.insert(v);
        }
    }
    let kept = n - n % b;
    let mut order: Vec<u32> = (1..=kept as u32).collect();
    order.shuffle(&mut rng);
    let partition: Vec<VertexSet> = order.chunks(b).map(|c| c.iter().copied().collect()).collect();
    let b_sets: Vec<VertexSet> = partition.iter().copied().filter(|blk| blk.is_disjoint(r_set)).collect();
    let (b1, b0): (Vec<VertexSet>, Vec<VertexSet>) = b_sets.iter().partition(|blk| !blk.is_disjoint(l));
    let template = Template::new(a, b, ASide::Subsets { ground: r_set }, b_sets)?;
    Ok(SampledTemplate {
        template,
        r_set,
        partition,
        b0,
        b1,
    })
}

/// Finite-`n` values of the quantities used in the sampling argument.
#[derive(Clone, Debug, PartialEq)]
pub struct SamplerDiagnostics {
    /// `a s δ n^{a-1}`.
    pub beta0: f64,
    /// `a s n^{a-1}`.
    pub beta1: f64,
    /// Probability that an edge missing `L` lands in `H₁`.
    pub p0: f64,
    /// Probability that an edge meeting `L` once lands in `H₁`.
    pub p1: f64,
    /// `m^{-1/r} n^{r-1} + m² n^{r-2}`.
    pub f_m: f64,
    /// `m > r^r`.
    pub m_above_r_pow_r: bool,
    /// `m ≤ √n`.
    pub m_below_sqrt_n: bool,
}

pub fn sampler_diagnostics(
    n: usize,
    r: usize,
    a: usize,
    s: usize,
    params: &SamplerParams,
) -> Result<SamplerDiagnostics> {
    params.validate()?;
    if a == 0 || a >= r || n < r {
        return invalid("need 1 <= a < r <= n");
    }
    let b = r - a;
    let (nf, mf, alpha) = (n as f64, params.m as f64, params.alpha);
    let denom = binomial(n as u64 - 1, b as u64 - 1) as f64;
    let p0 = binomial(r as u64, b as u64) as f64 * alpha.powi(a as i32) * (1.0 - alpha).powi(b as i32) / denom;
    let p1 =
        binomial(r as u64 - 1, b as u64 - 1) as f64 * alpha.powi(a as i32) * (1.0 - alpha).powi(b as i32 - 1) / denom;
    Ok(SamplerDiagnostics {
        beta0: (a * s) as f64 * params.delta * nf.powi(a as i32 - 1),
        beta1: (a * s) as f64 * nf.powi(a as i32 - 1),
        p0,
        p1,
        f_m: mf.powf(-1.0 / r as f64) * nf.powi(r as i32 - 1) + mf * mf * nf.powi(r as i32 - 2),
        m_above_r_pow_r: (params.m as u128) > (r as u128).pow(r as u32),
        m_below_sqrt_n: mf * mf <= nf,
    })
}

/// The edges meeting the cover of the heavy sets in exactly one vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearCrosscut {
    /// `F`: edges `e` with `|e ∩ L| = 1`.
    pub f: Hypergraph,
    pub l: VertexSet,
    /// `|G|`: edges with `|e ∩ L| ≤ 1`.
    pub g_size: usize,
    /// `|G₀|`: edges missing `L`.
    pub g0_size: usize,
}

/// Computes `(D, L)` by [`heavy_sets`] and keeps the edges meeting `L` in
/// exactly one vertex; `L` is a crosscut of the result by construction.
pub fn extract_near_crosscut(host: &Hypergraph, a: usize, m: u64) -> Result<NearCrosscut> {
    let HeavySets { l, .. } = heavy_sets(host, a, m)?;
    let g = host.filter(|e| e.intersection_len(l) <= 1);
    let f = g.filter(|e| e.intersection_len(l) == 1);
    Ok(NearCrosscut {
        g_size: g.len(),
        g0_size: g.len() - f.len(),
        f,
        l,
    })
}

/// A template with `k_a` disjoint `a`-sets and `k_b` disjoint `b`-sets on
/// distinct vertices of `[n]`, chosen by a seeded shuffle.
pub fn random_matched_template(n: usize, a: usize, b: usize, k_a: usize, k_b: usize, seed: u64) -> Result<Template> {
    if a * k_a + b * k_b > n {
        return invalid("not enough vertices for the requested template");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<u32> = (1..=n as u32).collect();
    order.shuffle(&mut rng);
    let a_sets = order[..a * k_a]
        .chunks(a)
        .map(|c| c.iter().copied().collect())
        .collect();
    let b_sets = order[a * k_a..a * k_a + b * k_b]
        .chunks(b)
        .map(|c| c.iter().copied().collect())
        .collect();
    Template::new(a, b, ASide::Explicit(a_sets), b_sets)
}

/// Whether `L` covers `D`, for re-validating [`heavy_sets`] results.
pub fn covers_heavy_sets(h: &HeavySets) -> Result<bool> {
    if h.d.is_empty() {
        return Ok(true);
    }
    Ok(is_vertex_cover(&h.d.to_hypergraph()?, h.l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{psi, psi1, trees_with_parts};

    fn vs(v: &[u32]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn incidence_examples() {
        let host = Hypergraph::from_lists(3, 3, &[&[1, 2, 3]]).unwrap();
        let t = Template::new(2, 1, ASide::Explicit(vec![vs(&[1, 2])]), vec![vs(&[3])]).unwrap();
        let inc = incidence(&host, &t).unwrap();
        assert_eq!(inc.h0.len(), 1);
        assert_eq!(inc.h1.edges(), &[vs(&[1, 2, 3])]);

        let empty = Template::new(2, 1, ASide::Explicit(vec![]), vec![vs(&[3])]).unwrap();
        let inc = incidence(&host, &empty).unwrap();
        assert!(inc.h0.is_empty() && inc.h1.is_empty());

        let k6 = Hypergraph::complete(6, 3).unwrap();
        let t = Template::new(
            2,
            1,
            ASide::Explicit(vec![vs(&[1, 2]), vs(&[3, 4])]),
            vec![vs(&[5]), vs(&[6])],
        )
        .unwrap();
        let inc = incidence(&k6, &t).unwrap();
        assert_eq!((inc.h0.len(), inc.h1.len()), (4, 4));
    }

    #[test]
    fn template_validation() {
        assert!(Template::new(2, 1, ASide::Explicit(vec![vs(&[1, 2])]), vec![vs(&[2])]).is_err());
        assert!(Template::new(2, 2, ASide::Explicit(vec![]), vec![vs(&[1, 2]), vs(&[2, 3])]).is_err());
        assert!(Template::new(2, 1, ASide::Explicit(vec![vs(&[1])]), vec![]).is_err());
    }

    #[test]
    fn bound_satisfied_runs_no_search() {
        let host = Hypergraph::from_lists(3, 3, &[&[1, 2, 3]]).unwrap();
        let t = Template::new(2, 1, ASide::Explicit(vec![vs(&[1, 2])]), vec![vs(&[3])]).unwrap();
        let trees = trees_with_parts(2, 2).unwrap();
        let rep = verify_template_bound(&host, &t, 2, 2, &trees).unwrap();
        assert!(!rep.exceeded);
        assert!(rep.outcomes.is_empty());
    }

    #[test]
    fn complete_incidence_embeds_all_trees() {
        let host = Hypergraph::complete(12, 3).unwrap();
        let a_sets = vec![vs(&[1, 2]), vs(&[3, 4]), vs(&[5, 6]), vs(&[7, 8])];
        let t = Template::new(2, 1, ASide::Explicit(a_sets), vec![vs(&[9]), vs(&[10]), vs(&[11])]).unwrap();
        let trees = trees_with_parts(2, 2).unwrap();
        let rep = verify_template_bound(&host, &t, 2, 2, &trees).unwrap();
        assert!(rep.exceeded);
        assert!(rep.consistent());
        assert_eq!(rep.h1_size, 12);
    }

    #[test]
    fn heavy_set_examples() {
        let hs = heavy_sets(&psi1(10, 3, 1).unwrap(), 2, 1).unwrap();
        assert!(hs.d.is_empty() && hs.l.is_empty());

        let hs = heavy_sets(&psi1(12, 3, 2).unwrap(), 2, 3).unwrap();
        assert!(!hs.d.is_empty());
        assert!(hs.d.members().iter().all(|e| !e.is_disjoint(vs(&[1, 2]))));
        assert!(hs.l.is_subset_of(vs(&[1, 2])));
        assert!(covers_heavy_sets(&hs).unwrap());

        let hs = heavy_sets(&Hypergraph::empty(8, 3).unwrap(), 2, 1).unwrap();
        assert!(hs.d.is_empty() && hs.l.is_empty());
    }

    #[test]
    fn sampler_extremes() {
        let host = Hypergraph::complete(12, 3).unwrap();
        let zero = SamplerParams {
            alpha: 0.0,
            m: 2,
            seed: 1,
            delta: 0.5,
        };
        let st = sample_template(&host, 2, &zero, VertexSet::EMPTY).unwrap();
        assert!(st.r_set.is_empty());
        assert_eq!(incidence(&host, &st.template).unwrap().h1.len(), 0);

        let one = SamplerParams { alpha: 1.0, ..zero };
        let st = sample_template(&host, 2, &one, VertexSet::EMPTY).unwrap();
        assert!(st.template.b_sets().is_empty());
        assert_eq!(st.template.a_len(), 66);
    }

    #[test]
    fn sampler_is_deterministic() {
        let host = Hypergraph::complete(12, 3).unwrap();
        let p = SamplerParams {
            alpha: 0.3,
            m: 2,
            seed: 42,
            delta: 0.5,
        };
        let x = sample_template(&host, 2, &p, VertexSet::EMPTY).unwrap();
        let y = sample_template(&host, 2, &p, VertexSet::EMPTY).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn drops_leftover_vertices() {
        let host = Hypergraph::complete(7, 4).unwrap();
        let p = SamplerParams {
            alpha: 0.0,
            m: 1,
            seed: 3,
            delta: 0.1,
        };
        let st = sample_template(&host, 2, &p, VertexSet::EMPTY).unwrap();
        assert_eq!(st.partition.len(), 3);
        assert!(st.partition.iter().all(|blk| !blk.contains(7)));
    }

    #[test]
    fn near_crosscut_examples() {
        let host = psi1(12, 3, 2).unwrap();
        let nc = extract_near_crosscut(&host, 2, 2).unwrap();
        assert_eq!(nc.l, vs(&[1, 2]));
        assert_eq!(nc.f, host);

        let star = psi(12, 3, 1).unwrap();
        let nc = extract_near_crosscut(&star, 2, 2).unwrap();
        assert_eq!(nc.l, vs(&[1]));
        assert_eq!(nc.f, star);

        let sparse = Hypergraph::from_lists(9, 3, &[&[1, 2, 3], &[4, 5, 6]]).unwrap();
        let nc = extract_near_crosscut(&sparse, 2, 1).unwrap();
        assert!(nc.l.is_empty() && nc.f.is_empty());
    }

    #[test]
    fn diagnostics_relations() {
        let p = SamplerParams {
            alpha: 0.2,
            m: 30,
            seed: 0,
            delta: 0.5,
        };
        let d = sampler_diagnostics(100, 3, 2, 2, &p).unwrap();
        // p0 = (r/b)(1 - alpha) p1.
        assert!((d.p0 - 3.0 * 0.8 * d.p1).abs() < 1e-12);
        assert!(d.m_above_r_pow_r);
        assert!(d.m_below_sqrt_n == (30.0 * 30.0 <= 100.0));
        assert!((d.beta1 - 4.0 * 100.0).abs() < 1e-9);
        assert!((d.beta0 - 0.5 * d.beta1).abs() < 1e-9);
    }
}
