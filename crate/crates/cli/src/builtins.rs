//! Named hypergraphs so patterns and hosts can be given without files.
//!
//! | name | meaning |
//! |------|---------|
//! | `path:L:A:B` | `(A,B)`-blowup of the path with `L` edges |
//! | `tightpath:L:R`, `loosepath:L:R` | tight and loose `R`-uniform paths |
//! | `c4:A:B` | `(A,B)`-blowup of the 4-cycle |
//! | `tree:P:A:B` | blowup of the tree with Prüfer code `P` (comma separated, may be empty) |
//! | `graphpath:L` | the graph path with `L` edges |
//! | `psi:N:R:C`, `psi1:N:R:C`, `complete:N:R`, `nostability:N:R`, `fano` | constructions |
//!
//! Anything else is read as a file in the hypergraph text format.

use std::fs;

use hgx_core::constructions::{blowup, fano, graph_path, loose_path, no_stability_example, psi, psi1, tight_path};
use hgx_core::io::parse_hypergraph;
use hgx_core::{BipartiteGraph, Hypergraph};

/// A resolved hypergraph, with its skeleton when it is a blowup.
pub struct Named {
    pub hypergraph: Hypergraph,
    pub skeleton: Option<(BipartiteGraph, usize, usize)>,
}

fn nums(parts: &[&str], want: usize, name: &str) -> Result<Vec<usize>, String> {
    if parts.len() != want {
        return Err(format!("{name} takes {want} parameters, got {}", parts.len()));
    }
    parts
        .iter()
        .map(|p| p.parse().map_err(|_| format!("bad number {p:?} in {name}")))
        .collect()
}

fn blown(skeleton: BipartiteGraph, a: usize, b: usize) -> Result<Named, String> {
    let h = blowup(&skeleton, a, b).map_err(|e| e.to_string())?.hypergraph;
    Ok(Named {
        hypergraph: h,
        skeleton: Some((skeleton, a, b)),
    })
}

fn plain(h: hgx_core::Result<Hypergraph>) -> Result<Named, String> {
    Ok(Named {
        hypergraph: h.map_err(|e| e.to_string())?,
        skeleton: None,
    })
}

/// Resolves a builtin name, or reads the file at `input`.
pub fn resolve(input: &str) -> Result<Named, String> {
    let mut fields = input.split(':');
    let head = fields.next().unwrap_or_default();
    let rest: Vec<&str> = fields.collect();
    match head {
        "path" => {
            let v = nums(&rest, 3, head)?;
            blown(BipartiteGraph::path(v[0]), v[1], v[2])
        }
        "c4" => {
            let v = nums(&rest, 2, head)?;
            blown(BipartiteGraph::complete(2, 2), v[0], v[1])
        }
        "tree" => {
            if rest.len() != 3 {
                return Err("tree takes a Prüfer code and two block sizes".into());
            }
            let code: Vec<usize> = rest[0]
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse().map_err(|_| format!("bad Prüfer entry {s:?}")))
                .collect::<Result<_, _>>()?;
            let v = nums(&rest[1..], 2, head)?;
            let skeleton = BipartiteGraph::from_prufer(&code).map_err(|e| e.to_string())?;
            blown(skeleton, v[0], v[1])
        }
        "tightpath" => {
            let v = nums(&rest, 2, head)?;
            plain(tight_path(v[0], v[1]))
        }
        "loosepath" => {
            let v = nums(&rest, 2, head)?;
            plain(loose_path(v[0], v[1]))
        }
        "graphpath" => {
            let v = nums(&rest, 1, head)?;
            plain(graph_path(v[0]))
        }
        "psi" | "psi1" => {
            let v = nums(&rest, 3, head)?;
            plain(if head == "psi" {
                psi(v[0], v[1], v[2])
            } else {
                psi1(v[0], v[1], v[2])
            })
        }
        "complete" => {
            let v = nums(&rest, 2, head)?;
            plain(Hypergraph::complete(v[0], v[1]))
        }
        "nostability" => {
            let v = nums(&rest, 2, head)?;
            plain(no_stability_example(v[0], v[1]))
        }
        "fano" if rest.is_empty() => plain(Ok(fano())),
        _ => {
            let text =
                fs::read_to_string(input).map_err(|e| format!("{input}: not a builtin name and unreadable: {e}"))?;
            let h = parse_hypergraph(&text).map_err(|e| format!("{input}: {e}"))?;
            Ok(Named {
                hypergraph: h,
                skeleton: None,
            })
        }
    }
}

/// Shorthand used where only the hypergraph matters.
pub fn hypergraph(input: &str) -> Result<Hypergraph, String> {
    resolve(input).map(|n| n.hypergraph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hgx_core::canon::canonical_form;
    use hgx_core::constructions::ab_path;

    #[test]
    fn names_resolve() {
        assert_eq!(
            canonical_form(&hypergraph("path:3:2:1").unwrap()).unwrap(),
            canonical_form(&ab_path(3, 2, 1).unwrap()).unwrap()
        );
        assert_eq!(hypergraph("psi:6:3:2").unwrap().len(), 16);
        assert_eq!(hypergraph("c4:1:1").unwrap().len(), 4);
        assert_eq!(hypergraph("tree::1:1").unwrap().len(), 1);
        assert_eq!(hypergraph("tree:1,1:1:2").unwrap().len(), 3);
        assert!(resolve("path:3:2").is_err());
        assert!(resolve("/no/such/file").is_err());
    }
}
