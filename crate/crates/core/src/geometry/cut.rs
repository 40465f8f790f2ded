use std::collections::BTreeSet;

use super::VertexSet01;
use crate::bases::parity_words;
use crate::error::{Error, Result};
use crate::hypergraph::{coned_graph, edge_hypergraph, Graph};

/// Largest graph accepted by [`cut_polytope_vertices`].
pub const MAX_CUT_VERTICES: usize = 6;

/// Cut vectors of `g` over its edges in sorted order, deduplicated and
/// ascending. An edgeless graph gives the single point of `{0,1}^0`.
pub fn cut_polytope_vertices(g: &Graph) -> Result<VertexSet01> {
    let n = g.vertex_count();
    if n > MAX_CUT_VERTICES {
        return Err(Error::SizeGuard {
            what: "graph vertex count for cut vectors",
            value: n,
            limit: MAX_CUT_VERTICES,
        });
    }
    let edges = g.edges();
    let cuts: BTreeSet<u64> = (0u64..(1 << n))
        .map(|s| {
            edges.iter().enumerate().fold(0u64, |acc, (e, &(u, v))| {
                let crosses = ((s >> u) ^ (s >> v)) & 1;
                acc | (crosses << e)
            })
        })
        .collect();
    VertexSet01::new(edges.len(), cuts.into_iter().collect())
}

/// Checks that the parity polytope of `𝒜_G` is `CUT(Ĝ)` after renaming
/// coordinates: atom `{i}` becomes the apex edge `(i, n)` and pair `{i, j}`
/// becomes the edge `(i, j)`.
pub fn cut_matches_parity(g: &Graph) -> Result<bool> {
    let n = g.vertex_count();
    if n + 1 > MAX_CUT_VERTICES {
        return Err(Error::SizeGuard {
            what: "graph vertex count for the coned cut check",
            value: n,
            limit: MAX_CUT_VERTICES - 1,
        });
    }
    let coned = coned_graph(g);
    let cut = cut_polytope_vertices(&coned)?;
    let a = edge_hypergraph(g)?;
    let target: Vec<usize> = a
        .sets()
        .iter()
        .map(|s| {
            let members: Vec<usize> = s.support().collect();
            let edge = match members[..] {
                [i] => (i, n),
                [i, j] => (i, j),
                _ => unreachable!("edge hypergraphs hold atoms and pairs only"),
            };
            coned
                .edges()
                .binary_search(&edge)
                .expect("every set maps to an edge of the coned graph")
        })
        .collect();
    let renamed: BTreeSet<u64> = parity_words(&a)?
        .into_iter()
        .map(|w| {
            target
                .iter()
                .enumerate()
                .fold(0u64, |acc, (j, &e)| acc | ((w.get(j) as u64) << e))
        })
        .collect();
    Ok(renamed.len() == cut.len() && renamed.into_iter().eq(cut.points().iter().copied()))
}
