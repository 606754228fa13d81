//! Exact canonical forms for small hypergraphs.
//!
//! Color refinement on the vertex/edge incidence structure, followed by an
//! individualization search tree whose leaves are discrete colorings. The
//! form is the lexicographically least relabeled edge list over all leaves.
//! Vertices whose transposition is an automorphism (twins) are individualized
//! through a single representative, which keeps blowups and `Ψ`-type
//! families cheap despite their large automorphism groups.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// Largest vertex count accepted by [`canonical_form`].
pub const CANON_MAX_VERTICES: usize = 64;

/// Canonical byte string: equal iff the hypergraphs are isomorphic.
pub fn canonical_form(h: &Hypergraph) -> Result<Vec<u8>> {
    canonical_form_colored(h, &vec![0; h.n()])
}

/// Canonical form under isomorphisms preserving the vertex coloring
/// (`colors[v - 1]` is the color of `v`).
pub fn canonical_form_colored(h: &Hypergraph, colors: &[u32]) -> Result<Vec<u8>> {
    let (perm, _) = canonical_labeling_colored(h, colors)?;
    let mut sorted_colors = colors.to_vec();
    sorted_colors.sort_unstable();

    let mut edges: Vec<VertexSet> = h.edges().iter().map(|e| e.map(&perm)).collect();
    edges.sort_unstable();

    let mut out = Vec::with_capacity(16 + 4 * colors.len() + edges.len() * h.r());
    out.extend_from_slice(&(h.n() as u32).to_le_bytes());
    out.extend_from_slice(&(h.r() as u32).to_le_bytes());
    out.extend_from_slice(&(edges.len() as u32).to_le_bytes());
    if sorted_colors.iter().any(|&c| c != 0) {
        for c in sorted_colors {
            out.extend_from_slice(&c.to_le_bytes());
        }
    }
    for e in edges {
        out.extend(e.iter().map(|v| v as u8));
    }
    Ok(out)
}

/// Whether two hypergraphs are isomorphic.
pub fn are_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    if a.n() != b.n() || a.r() != b.r() || a.len() != b.len() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// A canonical relabeling `perm` (`perm[v - 1]` is the new label of `v`)
/// together with the relabeled hypergraph.
pub fn canonical_labeling(h: &Hypergraph) -> Result<(Vec<u32>, Hypergraph)> {
    canonical_labeling_colored(h, &vec![0; h.n()])
}

fn canonical_labeling_colored(h: &Hypergraph, colors: &[u32]) -> Result<(Vec<u32>, Hypergraph)> {
    let n = h.n();
    if n > CANON_MAX_VERTICES {
        return Err(Error::Unsupported(format!(
            "canonical form limited to {CANON_MAX_VERTICES} vertices, got {n}"
        )));
    }
    if colors.len() != n {
        return Err(Error::InvalidParameter("one color per vertex required".into()));
    }
    let ctx = Context::new(h, colors);
    let mut initial = ranks(colors);
    ctx.refine(&mut initial);
    let mut best: Option<(Vec<u128>, Vec<u32>)> = None;
    ctx.search(initial, &mut best);
    let (_, coloring) = best.expect("search visits at least one leaf");
    let perm: Vec<u32> = coloring.iter().map(|&c| c + 1).collect();
    let relabeled = h.relabel(&perm)?;
    Ok((perm, relabeled))
}

struct Context<'a> {
    h: &'a Hypergraph,
    incidence: Vec<Vec<usize>>,
    edge_vertices: Vec<Vec<usize>>,
    twin_class: Vec<u128>,
}

impl<'a> Context<'a> {
    fn new(h: &'a Hypergraph, colors: &[u32]) -> Self {
        let n = h.n();
        let mut incidence = vec![Vec::new(); n];
        let edge_vertices: Vec<Vec<usize>> = h
            .edges()
            .iter()
            .map(|e| e.iter().map(|v| v as usize - 1).collect())
            .collect();
        for (i, e) in edge_vertices.iter().enumerate() {
            for &v in e {
                incidence[v].push(i);
            }
        }
        // Twins must also agree on their initial color.
        let twin_class = h
            .twin_classes()
            .into_iter()
            .enumerate()
            .map(|(v, class)| {
                class
                    .iter()
                    .filter(|&w| colors[w as usize - 1] == colors[v])
                    .fold(0u128, |acc, w| acc | 1u128 << (w - 1))
            })
            .collect();
        Context {
            h,
            incidence,
            edge_vertices,
            twin_class,
        }
    }

    /// Iterated refinement: a vertex's new color is determined by its old
    /// color and the multiset of colored edges through it.
    fn refine(&self, colors: &mut Vec<u32>) {
        let n = colors.len();
        let mut classes = count_classes(colors);
        loop {
            let mut sigs: Vec<(u32, Vec<Vec<u32>>, usize)> = (0..n)
                .map(|v| {
                    let mut edge_sigs: Vec<Vec<u32>> = self.incidence[v]
                        .iter()
                        .map(|&e| {
                            let mut s: Vec<u32> = self.edge_vertices[e]
                                .iter()
                                .filter(|&&w| w != v)
                                .map(|&w| colors[w])
                                .collect();
                            s.sort_unstable();
                            s
                        })
                        .collect();
                    edge_sigs.sort_unstable();
                    (colors[v], edge_sigs, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut next = vec![0u32; n];
            let mut rank = 0u32;
            for i in 0..n {
                if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                    rank = i as u32;
                }
                next[sigs[i].2] = rank;
            }
            let new_classes = count_classes(&next);
            *colors = next;
            if new_classes == classes {
                return;
            }
            classes = new_classes;
        }
    }

    fn search(&self, colors: Vec<u32>, best: &mut Option<(Vec<u128>, Vec<u32>)>) {
        let n = colors.len();
        // Colors are ranks (the index of the first vertex of the cell in
        // sorted order), so a cell is a singleton iff its rank has no repeat.
        let mut counts = vec![0usize; n.max(1)];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let target = (0..n).find(|&c| counts[c] > 1);
        let Some(cell) = target else {
            let cert = self.certificate(&colors);
            if best.as_ref().is_none_or(|(b, _)| cert < *b) {
                *best = Some((cert, colors));
            }
            return;
        };
        let mut tried: u128 = 0;
        for w in 0..n {
            if colors[w] as usize != cell || tried >> w & 1 == 1 {
                continue;
            }
            tried |= self.twin_class[w];
            let mut next: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(v, &c)| if c as usize == cell && v != w { 2 * c + 1 } else { 2 * c })
                .collect();
            normalize(&mut next);
            self.refine(&mut next);
            self.search(next, best);
        }
    }

    fn certificate(&self, colors: &[u32]) -> Vec<u128> {
        let mut cert: Vec<u128> = self
            .h
            .edges()
            .iter()
            .map(|e| e.iter().fold(0u128, |acc, v| acc | 1u128 << colors[v as usize - 1]))
            .collect();
        cert.sort_unstable();
        cert
    }
}

/// Replaces arbitrary color values by ranks (first index in sorted order).
fn normalize(colors: &mut [u32]) {
    let mut order: Vec<(u32, usize)> = colors.iter().copied().zip(0..).collect();
    order.sort_unstable();
    let mut rank = 0u32;
    for i in 0..order.len() {
        if i > 0 && order[i].0 != order[i - 1].0 {
            rank = i as u32;
        }
        colors[order[i].1] = rank;
    }
}

fn ranks(colors: &[u32]) -> Vec<u32> {
    let mut out = colors.to_vec();
    normalize(&mut out);
    out
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vertex_set::k_subsets;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_hypergraph(rng: &mut ChaCha8Rng, n: usize, r: usize, p: f64) -> Hypergraph {
        Hypergraph::new(n, r, k_subsets(n, r).filter(|_| rng.gen_bool(p))).unwrap()
    }

    fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<u32> {
        let mut p: Vec<u32> = (1..=n as u32).collect();
        p.shuffle(rng);
        p
    }

    #[test]
    fn permutation_invariance_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee);
        for _ in 0..100 {
            let n = rng.gen_range(3..=10);
            let r = rng.gen_range(2..=3.min(n));
            let p = rng.gen_range(0.1..0.7);
            let h = random_hypergraph(&mut rng, n, r, p);
            let g = h.relabel(&random_perm(&mut rng, n)).unwrap();
            assert_eq!(canonical_form(&h).unwrap(), canonical_form(&g).unwrap());
        }
    }

    #[test]
    fn two_triangles_differ_from_star() {
        let triangles = Hypergraph::from_lists(6, 2, &[&[1, 2], &[1, 3], &[2, 3], &[4, 5], &[4, 6], &[5, 6]]).unwrap();
        let star = Hypergraph::from_lists(6, 2, &[&[1, 2], &[1, 3], &[1, 4], &[1, 5], &[1, 6], &[2, 3]]).unwrap();
        assert_ne!(canonical_form(&triangles).unwrap(), canonical_form(&star).unwrap());
    }

    #[test]
    fn empty_graphs_agree() {
        let a = Hypergraph::empty(5, 3).unwrap();
        let b = Hypergraph::empty(5, 3).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
        let c = Hypergraph::empty(6, 3).unwrap();
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&c).unwrap());
    }

    #[test]
    fn distinguishes_non_isomorphic_pairs() {
        // Path vs. star on four vertices, three edges each.
        let path = Hypergraph::from_lists(4, 2, &[&[1, 2], &[2, 3], &[3, 4]]).unwrap();
        let star = Hypergraph::from_lists(4, 2, &[&[1, 2], &[1, 3], &[1, 4]]).unwrap();
        assert!(!are_isomorphic(&path, &star).unwrap());
        // Two regular graphs with the same degree sequence: C6 vs 2·K3.
        let c6 = Hypergraph::from_lists(6, 2, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6], &[1, 6]]).unwrap();
        let k3k3 = Hypergraph::from_lists(6, 2, &[&[1, 2], &[1, 3], &[2, 3], &[4, 5], &[4, 6], &[5, 6]]).unwrap();
        assert!(!are_isomorphic(&c6, &k3k3).unwrap());
    }

    #[test]
    fn labeling_is_a_permutation() {
        let h = Hypergraph::from_lists(5, 3, &[&[1, 2, 3], &[3, 4, 5]]).unwrap();
        let (perm, g) = canonical_labeling(&h).unwrap();
        let mut sorted = perm.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 3, 4, 5]);
        assert_eq!(g.len(), 2);
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn size_limit_is_explicit() {
        let h = Hypergraph::empty(65, 2).unwrap();
        assert!(matches!(canonical_form(&h), Err(Error::Unsupported(_))));
    }

    #[test]
    fn colors_are_respected() {
        let g = Hypergraph::from_lists(2, 2, &[&[1, 2]]).unwrap();
        let a = canonical_form_colored(&g, &[0, 1]).unwrap();
        let b = canonical_form_colored(&g, &[1, 0]).unwrap();
        let c = canonical_form_colored(&g, &[0, 0]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }
}
