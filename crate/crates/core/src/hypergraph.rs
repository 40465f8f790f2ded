//! Pre-hypergraphs on the ground set `[N]`, the uniform families `𝒜_{k,N}`,
//! and the graph constructions feeding them.
//!
//! Ground elements are 0-based internally and 1-based in JSON and display.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{BitWord, MAX_WIDTH};

/// Canonical order: atoms by element, then by cardinality, then
/// lexicographically on the ascending member lists.
fn canonical_cmp(a: &BitWord, b: &BitWord) -> Ordering {
    a.weight()
        .cmp(&b.weight())
        .then_with(|| a.support().cmp(b.support()))
}

/// A family of nonempty subsets of `[N]` containing every atom, kept in
/// canonical order. The order fixes the coordinates of every derived
/// matrix and code.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PreHypergraph {
    n: usize,
    sets: Vec<BitWord>,
}

impl PreHypergraph {
    pub fn new(n: usize, mut sets: Vec<BitWord>) -> Result<Self> {
        if n == 0 || n > MAX_WIDTH {
            return Err(Error::InvalidHypergraph(format!(
                "ground set size {n} is outside 1..={MAX_WIDTH}"
            )));
        }
        if let Some(s) = sets.iter().find(|s| s.width() != n) {
            return Err(Error::InvalidHypergraph(format!(
                "set {} is over {} elements, expected {n}",
                fmt_set(*s),
                s.width()
            )));
        }
        if sets.iter().any(|s| s.is_zero()) {
            return Err(Error::InvalidHypergraph("contains the empty set".into()));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = sets.iter().find(|s| !seen.insert(**s)) {
            return Err(Error::InvalidHypergraph(format!(
                "duplicate set {}",
                fmt_set(*dup)
            )));
        }
        if let Some(i) = (0..n).find(|&i| !seen.contains(&BitWord::from_raw(n, 1 << i))) {
            return Err(Error::InvalidHypergraph(format!(
                "missing atom {{{}}}",
                i + 1
            )));
        }
        sets.sort_by(canonical_cmp);
        Ok(PreHypergraph { n, sets })
    }

    /// Builds from 0-based member lists.
    pub fn from_members(n: usize, members: &[Vec<usize>]) -> Result<Self> {
        let sets = members
            .iter()
            .map(|m| set_from_members(n, m))
            .collect::<Result<_>>()?;
        Self::new(n, sets)
    }

    pub fn atoms(n: usize) -> Result<Self> {
        uniform(1, n)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn sets(&self) -> &[BitWord] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: BitWord) -> bool {
        self.sets.contains(&set)
    }

    pub fn to_json(&self) -> HypergraphJson {
        HypergraphJson {
            n: self.n,
            sets: self
                .sets
                .iter()
                .map(|s| s.support().map(|i| i + 1).collect())
                .collect(),
        }
    }

    pub fn from_json(json: &HypergraphJson) -> Result<Self> {
        let members = json
            .sets
            .iter()
            .map(|set| {
                set.iter()
                    .map(|&i| {
                        if i == 0 || i > json.n {
                            Err(Error::InvalidHypergraph(format!(
                                "member {i} is outside the ground set 1..={}",
                                json.n
                            )))
                        } else {
                            Ok(i - 1)
                        }
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_members(json.n, &members)
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        let json: HypergraphJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&json)
    }
}

impl fmt::Display for PreHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, s) in self.sets.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(&fmt_set(*s))?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for PreHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PreHypergraph(N={}, {self})", self.n)
    }
}

/// On-disk form: `{"n": 3, "sets": [[1], [2], [3], [1, 2]]}`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphJson {
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
}

/// Formats a subset of `[N]` with 1-based members, e.g. `{1,3}`.
pub fn fmt_set(s: BitWord) -> String {
    let members: Vec<String> = s.support().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", members.join(","))
}

pub fn set_from_members(n: usize, members: &[usize]) -> Result<BitWord> {
    let mut bits = 0u64;
    for &i in members {
        if i >= n {
            return Err(Error::InvalidHypergraph(format!(
                "member {} is outside the ground set 1..={n}",
                i + 1
            )));
        }
        bits |= 1 << i;
    }
    BitWord::new(n, bits)
}

pub fn is_hypergraph(a: &PreHypergraph) -> bool {
    let present: HashSet<BitWord> = a.sets.iter().copied().collect();
    // Closure under removing one element implies closure under all
    // nonempty subsets.
    a.sets.iter().all(|&s| {
        s.weight() == 1
            || s
                .support()
                .all(|i| present.contains(&BitWord::from_raw(a.n, s.bits() & !(1 << i))))
    })
}

/// `𝒜_{k,N}`: all nonempty subsets of `[N]` with at most `k` elements.
pub fn uniform(k: usize, n: usize) -> Result<PreHypergraph> {
    if n == 0 || n > MAX_WIDTH {
        return Err(Error::OutOfRange {
            what: "N",
            value: n,
            expected: format!("1..={MAX_WIDTH}"),
        });
    }
    if k == 0 || k > n {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            expected: format!("1..={n}"),
        });
    }
    let total: usize = (1..=k).map(|j| binomial(n, j)).sum();
    if n > 24 || total > 1 << 24 {
        return Err(Error::SizeGuard {
            what: "|A_{k,N}|",
            value: total,
            limit: 1 << 24,
        });
    }
    let sets = (1u64..(1u64 << n))
        .filter(|s| s.count_ones() as usize <= k)
        .map(|s| BitWord::from_raw(n, s))
        .collect();
    PreHypergraph::new(n, sets)
}

/// Sets of `a` with no proper superset in `a`, in canonical order.
pub fn maximal_elements(a: &PreHypergraph) -> Vec<BitWord> {
    a.sets
        .iter()
        .copied()
        .filter(|&s| {
            !a.sets
                .iter()
                .any(|&t| t != s && t.bits() & s.bits() == s.bits())
        })
        .collect()
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edges are normalised to `(min, max)` and sorted.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut norm = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidHypergraph(format!("loop at vertex {}", u + 1)));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidHypergraph(format!(
                    "edge ({}, {}) leaves the vertex set 1..={n}",
                    u + 1,
                    v + 1
                )));
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidHypergraph("duplicate edge".into()));
        }
        Ok(Graph { n, edges: norm })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph { n, edges }
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| (v - 1, v)).collect();
        Graph { n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }
}

/// Largest graph accepted by [`clique_hypergraph`], which scans all vertex
/// subsets.
pub const MAX_CLIQUE_SCAN: usize = 24;

/// All nonempty cliques of `g`, singletons included.
pub fn clique_hypergraph(g: &Graph) -> Result<PreHypergraph> {
    if g.n > MAX_CLIQUE_SCAN {
        return Err(Error::SizeGuard {
            what: "graph vertex count",
            value: g.n,
            limit: MAX_CLIQUE_SCAN,
        });
    }
    let adjacency: Vec<u64> = (0..g.n)
        .map(|u| {
            (0..g.n)
                .filter(|&v| g.has_edge(u, v))
                .fold(0u64, |acc, v| acc | (1 << v))
        })
        .collect();
    let sets = (1u64..(1u64 << g.n))
        .filter(|&s| {
            (0..g.n)
                .filter(|&u| (s >> u) & 1 == 1)
                .all(|u| s & !(1 << u) & !adjacency[u] == 0)
        })
        .map(|s| BitWord::from_raw(g.n, s))
        .collect();
    PreHypergraph::new(g.n, sets)
}

/// `Ĝ`: `g` plus an apex vertex (index `n`) joined to every vertex.
pub fn coned_graph(g: &Graph) -> Graph {
    let apex = g.n;
    let mut edges = g.edges.clone();
    edges.extend((0..g.n).map(|v| (v, apex)));
    edges.sort_unstable();
    Graph {
        n: g.n + 1,
        edges,
    }
}

/// `𝒜_G = V(G) ∪ E(G)`: the atoms plus one pair per edge.
pub fn edge_hypergraph(g: &Graph) -> Result<PreHypergraph> {
    let sets = (0..g.n)
        .map(|i| 1u64 << i)
        .chain(g.edges.iter().map(|&(u, v)| (1u64 << u) | (1u64 << v)))
        .map(|s| BitWord::new(g.n, s))
        .collect::<Result<_>>()?;
    PreHypergraph::new(g.n, sets)
}
