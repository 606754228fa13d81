//! Containment of fixed patterns in host hypergraphs.
//!
//! [`contains`] is the generic engine: backtracking over the pattern's
//! vertices in breadth-first order from a vertex of maximum degree, with host
//! candidates in decreasing degree order. Partial edge images are checked
//! against the host's shadows, and among unused host vertices that are twins
//! (their transposition is an automorphism) only one is ever tried.

mod blowup;
mod grow;
mod tight;

use std::collections::HashSet;
use std::ops::ControlFlow;

pub use blowup::{contains_blowup, contains_blowup_with};
pub use grow::{core_after_pruning, grow_tree_in_bipartite, TreeEmbedding};
pub use tight::{greedy_tight_tree, is_tight_tree, prune_low_degree, TightTree};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{subsets, VertexSet};

/// An injective vertex map from a pattern into a host.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// `vertex_map[v - 1]` is the host image of pattern vertex `v`.
    pub vertex_map: Vec<u32>,
    /// Host blocks of skeleton vertices when the pattern is a blowup.
    pub block_map: Option<BlockMap>,
}

/// Images of the skeleton vertices of a blowup pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMap {
    pub u_blocks: Vec<VertexSet>,
    pub v_blocks: Vec<VertexSet>,
}

impl Embedding {
    pub fn image(&self, e: VertexSet) -> VertexSet {
        e.map(&self.vertex_map)
    }
}

/// Outcome of a budgeted containment query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Containment {
    Found(Embedding),
    Absent,
    /// The node budget ran out before the question was settled.
    Unknown,
}

impl Containment {
    pub fn is_found(&self) -> bool {
        matches!(self, Containment::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Containment::Absent)
    }

    pub fn embedding(&self) -> Option<&Embedding> {
        match self {
            Containment::Found(e) => Some(e),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ContainOptions {
    /// Maximum number of search nodes; `None` means unlimited.
    pub budget: Option<u64>,
}

/// Searches for a copy of `pattern` in `host` without a node budget.
pub fn contains(host: &Hypergraph, pattern: &Hypergraph) -> Result<Option<Embedding>> {
    match contains_with(host, pattern, ContainOptions::default())? {
        Containment::Found(e) => Ok(Some(e)),
        Containment::Absent => Ok(None),
        Containment::Unknown => unreachable!("unbudgeted search always terminates with an answer"),
    }
}

pub fn contains_with(host: &Hypergraph, pattern: &Hypergraph, opts: ContainOptions) -> Result<Containment> {
    check_uniformity(host, pattern)?;
    let mut found = None;
    let complete = Engine::new(host, pattern, true).run(opts.budget, &mut |map| {
        found = Some(map.to_vec());
        ControlFlow::Break(())
    });
    Ok(match (found, complete) {
        (Some(vertex_map), _) => Containment::Found(Embedding {
            vertex_map,
            block_map: None,
        }),
        (None, true) => Containment::Absent,
        (None, false) => Containment::Unknown,
    })
}

/// Calls `visit` with the vertex map of every embedding of `pattern` into
/// `host` (isolated pattern vertices are sent to the smallest free labels,
/// so maps differing only there are reported once).
pub fn for_each_embedding(
    host: &Hypergraph,
    pattern: &Hypergraph,
    mut visit: impl FnMut(&[u32]) -> ControlFlow<()>,
) -> Result<()> {
    check_uniformity(host, pattern)?;
    Engine::new(host, pattern, false).run(None, &mut visit);
    Ok(())
}

/// Whether `emb` maps `pattern` injectively into `host`, edge to edge, with
/// disjoint blocks when a block map is present.
pub fn validate_embedding(host: &Hypergraph, pattern: &Hypergraph, emb: &Embedding) -> bool {
    let map = &emb.vertex_map;
    if map.len() != pattern.n() || map.iter().any(|&v| v == 0 || v as usize > host.n()) {
        return false;
    }
    let image: VertexSet = map.iter().copied().collect();
    if image.len() != map.len() {
        return false;
    }
    if !pattern.edges().iter().all(|&e| host.contains_edge(emb.image(e))) {
        return false;
    }
    if let Some(blocks) = &emb.block_map {
        let all: Vec<VertexSet> = blocks.u_blocks.iter().chain(&blocks.v_blocks).copied().collect();
        if !crate::hypergraph::is_matching(&all) {
            return false;
        }
    }
    true
}

pub(crate) fn check_uniformity(host: &Hypergraph, pattern: &Hypergraph) -> Result<()> {
    if host.r() != pattern.r() {
        return Err(Error::UniformityMismatch {
            host: host.r(),
            pattern: pattern.r(),
        });
    }
    Ok(())
}

/// Host-side lookup tables shared by the engines.
pub(crate) struct HostIndex {
    pub edges: HashSet<VertexSet>,
    /// `shadows[k]` holds the `k`-shadow for `2 <= k < r`.
    pub shadows: Vec<HashSet<VertexSet>>,
    pub neighbors: Vec<VertexSet>,
    pub degree: Vec<usize>,
    pub twin_class: Vec<VertexSet>,
}

impl HostIndex {
    pub fn new(host: &Hypergraph) -> Self {
        let r = host.r();
        let mut shadows = vec![HashSet::new(); r];
        for &e in host.edges() {
            for (k, shadow) in shadows.iter_mut().enumerate().skip(2) {
                shadow.extend(subsets(e, k));
            }
        }
        let mut neighbors = vec![VertexSet::EMPTY; host.n()];
        for &e in host.edges() {
            for v in e {
                neighbors[v as usize - 1] |= e.without(v);
            }
        }
        HostIndex {
            edges: host.edges().iter().copied().collect(),
            shadows,
            neighbors,
            degree: host.vertex_degrees(),
            twin_class: host.twin_classes(),
        }
    }

    /// Whether the set is contained in some host edge.
    pub fn in_shadow(&self, s: VertexSet, r: usize) -> bool {
        match s.len() {
            0 => true,
            1 => self.degree[s.min().unwrap() as usize - 1] > 0,
            k if k == r => self.edges.contains(&s),
            k if k < r => self.shadows[k].contains(&s),
            _ => false,
        }
    }
}

struct Engine<'a> {
    host: &'a Hypergraph,
    index: HostIndex,
    /// Non-isolated pattern vertices in search order.
    order: Vec<u32>,
    /// For each depth, the already-placed parts (including the new vertex)
    /// of pattern edges through the vertex placed at that depth.
    checks: Vec<Vec<VertexSet>>,
    /// For each depth, earlier-placed vertices sharing an edge with it.
    anchors: Vec<VertexSet>,
    pattern_degree: Vec<usize>,
    isolated: Vec<u32>,
    host_order: Vec<u32>,
    prune_twins: bool,
    pattern_n: usize,
    r: usize,
}

impl<'a> Engine<'a> {
    fn new(host: &'a Hypergraph, pattern: &Hypergraph, prune_twins: bool) -> Self {
        let order = search_order(pattern);
        let mut placed = VertexSet::EMPTY;
        let mut checks = Vec::with_capacity(order.len());
        let mut anchors = Vec::with_capacity(order.len());
        for &p in &order {
            placed.insert(p);
            let through: Vec<VertexSet> = pattern
                .edges()
                .iter()
                .filter(|e| e.contains(p))
                .map(|&e| e & placed)
                .filter(|part| part.len() >= 2)
                .collect();
            anchors.push(through.iter().fold(VertexSet::EMPTY, |acc, &e| acc | e).without(p));
            checks.push(through);
        }
        let support = pattern.support();
        let isolated = (1..=pattern.n() as u32).filter(|&v| !support.contains(v)).collect();
        let index = HostIndex::new(host);
        let mut host_order: Vec<u32> = (1..=host.n() as u32).collect();
        host_order.sort_by_key(|&v| (std::cmp::Reverse(index.degree[v as usize - 1]), v));
        Engine {
            host,
            index,
            order,
            checks,
            anchors,
            pattern_degree: pattern.vertex_degrees(),
            isolated,
            host_order,
            prune_twins,
            pattern_n: pattern.n(),
            r: pattern.r(),
        }
    }

    /// Runs the search; returns `false` iff the budget was exhausted.
    fn run(&self, budget: Option<u64>, visit: &mut dyn FnMut(&[u32]) -> ControlFlow<()>) -> bool {
        if self.pattern_n > self.host.n() {
            return true;
        }
        let mut state = State {
            map: vec![0; self.pattern_n],
            used: VertexSet::EMPTY,
            nodes: 0,
            budget: budget.unwrap_or(u64::MAX),
            out_of_budget: false,
        };
        let _ = self.extend(0, &mut state, visit);
        !state.out_of_budget
    }

    fn extend(
        &self,
        depth: usize,
        st: &mut State,
        visit: &mut dyn FnMut(&[u32]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        st.nodes += 1;
        if st.nodes > st.budget {
            st.out_of_budget = true;
            return ControlFlow::Break(());
        }
        if depth == self.order.len() {
            return self.finish(st, visit);
        }
        let p = self.order[depth];
        let mut allowed = self.host.vertex_set() - st.used;
        for w in self.anchors[depth] {
            allowed &= self.index.neighbors[st.map[w as usize - 1] as usize - 1];
        }
        let need = self.pattern_degree[p as usize - 1];
        let mut tried = VertexSet::EMPTY;
        for &h in &self.host_order {
            if !allowed.contains(h) || self.index.degree[h as usize - 1] < need {
                continue;
            }
            if self.prune_twins {
                if tried.contains(h) {
                    continue;
                }
                tried |= self.index.twin_class[h as usize - 1];
            }
            st.map[p as usize - 1] = h;
            let ok = self.checks[depth].iter().all(|part| {
                let image = part
                    .iter()
                    .fold(VertexSet::EMPTY, |acc, v| acc.with(st.map[v as usize - 1]));
                self.index.in_shadow(image, self.r)
            });
            if ok {
                st.used.insert(h);
                let flow = self.extend(depth + 1, st, visit);
                st.used.remove(h);
                if flow.is_break() {
                    st.map[p as usize - 1] = 0;
                    return flow;
                }
            }
        }
        st.map[p as usize - 1] = 0;
        ControlFlow::Continue(())
    }

    fn finish(&self, st: &mut State, visit: &mut dyn FnMut(&[u32]) -> ControlFlow<()>) -> ControlFlow<()> {
        let free = self.host.vertex_set() - st.used;
        if free.len() < self.isolated.len() {
            return ControlFlow::Continue(());
        }
        let mut map = st.map.clone();
        for (&p, h) in self.isolated.iter().zip(free.iter()) {
            map[p as usize - 1] = h;
        }
        visit(&map)
    }
}

struct State {
    map: Vec<u32>,
    used: VertexSet,
    nodes: u64,
    budget: u64,
    out_of_budget: bool,
}

/// Breadth-first order over non-isolated vertices, each component started
/// at a remaining vertex of maximum degree; neighbors by decreasing degree.
pub(crate) fn search_order(pattern: &Hypergraph) -> Vec<u32> {
    let degree = pattern.vertex_degrees();
    let mut nbrs = vec![VertexSet::EMPTY; pattern.n()];
    for &e in pattern.edges() {
        for v in e {
            nbrs[v as usize - 1] |= e.without(v);
        }
    }
    let by_degree = |set: VertexSet| {
        let mut vs = set.to_vec();
        vs.sort_by_key(|&v| (std::cmp::Reverse(degree[v as usize - 1]), v));
        vs
    };
    let mut remaining = pattern.support();
    let mut order = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let root = by_degree(remaining)[0];
        remaining.remove(root);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for w in by_degree(nbrs[v as usize - 1] & remaining) {
                remaining.remove(w);
                queue.push_back(w);
            }
        }
    }
    order
}
