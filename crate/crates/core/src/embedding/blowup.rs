//! Block-structured search for copies of `(a, b)`-blowups.
//!
//! Skeleton vertices are placed one at a time onto disjoint host blocks: a
//! vertex adjacent to an already placed block `Y` draws its candidates from
//! the neighborhood `Γ(Y)`. Unused members of a host twin class are
//! interchangeable, so a block may only use the smallest unused ones of
//! each class.

use std::ops::ControlFlow;

use super::{BlockMap, ContainOptions, Containment, Embedding, HostIndex};
use crate::bipartite::{BipartiteGraph, PartVertex};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{subsets, VertexSet};

/// Searches for a copy of `skeleton(a, b)` in `host` without a budget.
pub fn contains_blowup(host: &Hypergraph, skeleton: &BipartiteGraph, a: usize, b: usize) -> Result<Option<Embedding>> {
    match contains_blowup_with(host, skeleton, a, b, ContainOptions::default())? {
        Containment::Found(e) => Ok(Some(e)),
        Containment::Absent => Ok(None),
        Containment::Unknown => unreachable!("unbudgeted search always terminates with an answer"),
    }
}

pub fn contains_blowup_with(
    host: &Hypergraph,
    skeleton: &BipartiteGraph,
    a: usize,
    b: usize,
    opts: ContainOptions,
) -> Result<Containment> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("block sizes a and b must be positive".into()));
    }
    if a + b != host.r() {
        return Err(Error::UniformityMismatch {
            host: host.r(),
            pattern: a + b,
        });
    }
    let search = BlockSearch::new(host, skeleton, a, b);
    let mut st = BlockState {
        blocks: vec![VertexSet::EMPTY; skeleton.s() + skeleton.t()],
        used: VertexSet::EMPTY,
        nodes: 0,
        budget: opts.budget.unwrap_or(u64::MAX),
        out_of_budget: false,
        found: None,
    };
    let _ = search.extend(0, &mut st);
    if let Some(blocks) = st.found {
        return Ok(Containment::Found(search.to_embedding(&blocks)));
    }
    Ok(if st.out_of_budget {
        Containment::Unknown
    } else {
        Containment::Absent
    })
}

struct BlockSearch<'a> {
    host: &'a Hypergraph,
    index: HostIndex,
    skeleton: &'a BipartiteGraph,
    a: usize,
    b: usize,
    /// Non-isolated skeleton vertices in placement order, as flat indices
    /// (`U` first).
    order: Vec<usize>,
    /// For each position, flat indices of earlier-placed neighbors.
    placed_neighbors: Vec<Vec<usize>>,
    position: Vec<usize>,
    isolated: Vec<usize>,
    /// Host twin classes, each listed once.
    classes: Vec<VertexSet>,
}

struct BlockState {
    blocks: Vec<VertexSet>,
    used: VertexSet,
    nodes: u64,
    budget: u64,
    out_of_budget: bool,
    found: Option<Vec<VertexSet>>,
}

impl<'a> BlockSearch<'a> {
    fn new(host: &'a Hypergraph, skeleton: &'a BipartiteGraph, a: usize, b: usize) -> Self {
        let s = skeleton.s();
        let total = s + skeleton.t();
        let flat = |x: PartVertex| match x {
            PartVertex::U(i) => i - 1,
            PartVertex::V(j) => s + j - 1,
        };
        let mut adj = vec![Vec::new(); total];
        for &(u, v) in skeleton.edges() {
            adj[u - 1].push(s + v - 1);
            adj[s + v - 1].push(u - 1);
        }
        let mut by_degree: Vec<usize> = (0..total).filter(|&x| !adj[x].is_empty()).collect();
        by_degree.sort_by_key(|&x| (std::cmp::Reverse(adj[x].len()), x));
        let mut seen = vec![false; total];
        let mut order = Vec::new();
        for &root in &by_degree {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                order.push(x);
                let mut next: Vec<usize> = adj[x].iter().copied().filter(|&y| !seen[y]).collect();
                next.sort_by_key(|&y| (std::cmp::Reverse(adj[y].len()), y));
                for y in next {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        let mut position = vec![usize::MAX; total];
        for (i, &x) in order.iter().enumerate() {
            position[x] = i;
        }
        let placed_neighbors = order
            .iter()
            .enumerate()
            .map(|(i, &x)| adj[x].iter().copied().filter(|&y| position[y] < i).collect())
            .collect();
        let isolated = skeleton.vertices().map(flat).filter(|&x| adj[x].is_empty()).collect();
        let index = HostIndex::new(host);
        let mut classes: Vec<VertexSet> = index.twin_class.clone();
        classes.sort_unstable();
        classes.dedup();
        BlockSearch {
            host,
            index,
            skeleton,
            a,
            b,
            order,
            placed_neighbors,
            position,
            isolated,
            classes,
        }
    }

    fn size_of(&self, x: usize) -> usize {
        if x < self.skeleton.s() {
            self.a
        } else {
            self.b
        }
    }

    /// A block is canonical when, inside every twin class, it uses the
    /// smallest unused members.
    fn is_canonical(&self, block: VertexSet, used: VertexSet) -> bool {
        self.classes.iter().all(|&class| {
            let inside = block & class;
            inside.is_empty() || inside == (class - used).lowest(inside.len())
        })
    }

    fn candidates(&self, x: usize, st: &BlockState) -> Vec<VertexSet> {
        let size = self.size_of(x);
        let free = self.host.vertex_set() - st.used;
        let raw: Vec<VertexSet> = match self.placed_neighbors[self.position(x)].first() {
            Some(&y) => {
                let anchor = st.blocks[y];
                self.host
                    .edges()
                    .iter()
                    .filter(|e| anchor.is_subset_of(**e))
                    .map(|&e| e - anchor)
                    .filter(|c| c.is_subset_of(free))
                    .collect()
            }
            None => {
                let mut seen = std::collections::HashSet::new();
                for &e in self.host.edges() {
                    seen.extend(subsets(e & free, size));
                }
                let mut v: Vec<VertexSet> = seen.into_iter().collect();
                v.sort_unstable();
                v
            }
        };
        raw.into_iter()
            .filter(|&c| {
                self.placed_neighbors[self.position(x)]
                    .iter()
                    .all(|&y| self.index.edges.contains(&(c | st.blocks[y])))
                    && self.is_canonical(c, st.used)
            })
            .collect()
    }

    fn position(&self, x: usize) -> usize {
        self.position[x]
    }

    fn extend(&self, depth: usize, st: &mut BlockState) -> ControlFlow<()> {
        st.nodes += 1;
        if st.nodes > st.budget {
            st.out_of_budget = true;
            return ControlFlow::Break(());
        }
        if depth == self.order.len() {
            return self.finish(st);
        }
        let x = self.order[depth];
        for c in self.candidates(x, st) {
            st.blocks[x] = c;
            st.used |= c;
            let flow = self.extend(depth + 1, st);
            st.used = st.used - c;
            st.blocks[x] = VertexSet::EMPTY;
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn finish(&self, st: &mut BlockState) -> ControlFlow<()> {
        let mut free = self.host.vertex_set() - st.used;
        let mut blocks = st.blocks.clone();
        for &x in &self.isolated {
            let size = self.size_of(x);
            if free.len() < size {
                return ControlFlow::Continue(());
            }
            let block = free.lowest(size);
            blocks[x] = block;
            free = free - block;
        }
        st.found = Some(blocks);
        ControlFlow::Break(())
    }

    /// Vertex map onto the blowup layout of
    /// [`crate::constructions::blowup`]: `U`-blocks first, then `V`-blocks.
    fn to_embedding(&self, blocks: &[VertexSet]) -> Embedding {
        let s = self.skeleton.s();
        let vertex_map = blocks.iter().flat_map(|blk| blk.iter()).collect();
        Embedding {
            vertex_map,
            block_map: Some(BlockMap {
                u_blocks: blocks[..s].to_vec(),
                v_blocks: blocks[s..].to_vec(),
            }),
        }
    }
}
