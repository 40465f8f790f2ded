//! The four generating systems of the interaction space as explicit
//! matrices over the configuration space `𝒳 = {0,1}^N`.
//!
//! Rows are configurations in ascending binary order of the string
//! `x_1 x_2 … x_N` (so `x_1` is the most significant digit and row 5 of a
//! three-variable matrix is `x = (1,0,1)`). Columns follow the canonical
//! order of the pre-hypergraph; marginal columns are the pairs `(A, y_A)`
//! for maximal `A`, with `y_A` ascending in the same digit convention.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{BitWord, MAX_WIDTH};
use crate::hypergraph::{fmt_set, is_hypergraph, maximal_elements, PreHypergraph};
use crate::linalg;
use crate::Rational;

/// Largest ground set for which the `2^N`-row matrices are built.
pub const MAX_CONFIG_BITS: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Parity,
    Character,
    Monomial,
    Marginal,
}

impl std::str::FromStr for BasisKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "parity" => Ok(BasisKind::Parity),
            "character" => Ok(BasisKind::Character),
            "monomial" => Ok(BasisKind::Monomial),
            "marginal" => Ok(BasisKind::Marginal),
            other => Err(Error::Parse(format!(
                "unknown basis {other:?} (expected parity, character, monomial or marginal)"
            ))),
        }
    }
}

/// A `2^N × m` integer matrix with one row per configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatisticMatrix {
    pub kind: BasisKind,
    pub n: usize,
    pub columns: Vec<String>,
    pub entries: Vec<Vec<i8>>,
}

impl StatisticMatrix {
    pub fn nrows(&self) -> usize {
        self.entries.len()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    /// Row of configuration `x`.
    pub fn row(&self, x: BitWord) -> &[i8] {
        &self.entries[row_index(x)]
    }

    pub fn column(&self, c: usize) -> Vec<i8> {
        self.entries.iter().map(|r| r[c]).collect()
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", cells.join("\t"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("statistic matrices serialize")
    }

    fn rational_columns(&self) -> Vec<Vec<Rational>> {
        (0..self.ncols())
            .map(|c| {
                self.entries
                    .iter()
                    .map(|r| Rational::from_integer(r[c].into()))
                    .collect()
            })
            .collect()
    }
}

/// All configurations in row order.
pub fn configurations(n: usize) -> Result<Vec<BitWord>> {
    if n == 0 || n > MAX_CONFIG_BITS {
        return Err(Error::SizeGuard {
            what: "N for configuration matrices",
            value: n,
            limit: MAX_CONFIG_BITS,
        });
    }
    Ok((0u64..(1u64 << n))
        .map(|r| {
            let bits = (0..n).fold(0u64, |acc, i| acc | (((r >> (n - 1 - i)) & 1) << i));
            BitWord::from_raw(n, bits)
        })
        .collect())
}

/// Row index of configuration `x` (inverse of [`configurations`]).
pub fn row_index(x: BitWord) -> usize {
    let n = x.width();
    (0..n).fold(0usize, |acc, i| acc | ((x.get(i) as usize) << (n - 1 - i)))
}

/// `f_A(x)`: parity of `|supp(x) ∩ A|`.
pub fn parity(a: BitWord, x: BitWord) -> bool {
    a.dot(x)
}

fn build(
    kind: BasisKind,
    a: &PreHypergraph,
    columns: Vec<String>,
    cell: impl Fn(BitWord, usize) -> i8,
) -> Result<StatisticMatrix> {
    let entries = configurations(a.ground_size())?
        .into_iter()
        .map(|x| (0..columns.len()).map(|c| cell(x, c)).collect())
        .collect();
    Ok(StatisticMatrix {
        kind,
        n: a.ground_size(),
        columns,
        entries,
    })
}

fn set_labels(a: &PreHypergraph) -> Vec<String> {
    a.sets().iter().map(|&s| fmt_set(s)).collect()
}

pub fn parity_matrix(a: &PreHypergraph) -> Result<StatisticMatrix> {
    let sets = a.sets();
    build(BasisKind::Parity, a, set_labels(a), |x, c| {
        parity(sets[c], x) as i8
    })
}

/// `e_A(x) = (−1)^{|{i ∈ A : x_i = 1}|}`.
pub fn character_matrix(a: &PreHypergraph) -> Result<StatisticMatrix> {
    let sets = a.sets();
    build(BasisKind::Character, a, set_labels(a), |x, c| {
        if (sets[c].bits() & x.bits()).count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        }
    })
}

/// `∏_{i ∈ A} x_i`.
pub fn monomial_matrix(a: &PreHypergraph) -> Result<StatisticMatrix> {
    let sets = a.sets();
    build(BasisKind::Monomial, a, set_labels(a), |x, c| {
        (sets[c].bits() & !x.bits() == 0) as i8
    })
}

/// One cylinder indicator column `1{x_A = y_A}` per set and local
/// configuration, given as the pair (set, values on the set as a mask).
fn cylinder_columns(sets: &[BitWord]) -> Vec<(BitWord, u64, String)> {
    let mut out = Vec::new();
    for &s in sets {
        let members: Vec<usize> = s.support().collect();
        let k = members.len();
        for y in 0u64..(1u64 << k) {
            // y's most significant digit belongs to the smallest member.
            let (value_mask, label): (u64, String) = members.iter().enumerate().fold(
                (0u64, String::new()),
                |(m, mut lbl), (j, &i)| {
                    let bit = (y >> (k - 1 - j)) & 1;
                    lbl.push(if bit == 1 { '1' } else { '0' });
                    (m | (bit << i), lbl)
                },
            );
            out.push((s, value_mask, format!("{}={}", fmt_set(s), label)));
        }
    }
    out
}

fn cylinder_matrix(
    kind: BasisKind,
    a: &PreHypergraph,
    sets: &[BitWord],
) -> Result<StatisticMatrix> {
    let cols = cylinder_columns(sets);
    let labels = cols.iter().map(|c| c.2.clone()).collect();
    build(kind, a, labels, |x, c| {
        let (s, value, _) = &cols[c];
        (x.bits() & s.bits() == *value) as i8
    })
}

/// The marginal map, stored configuration-major: entry `(x, (A, y_A))` is
/// `1` iff `x` restricted to `A` equals `y_A`, for maximal `A`.
pub fn marginal_matrix(a: &PreHypergraph) -> Result<StatisticMatrix> {
    cylinder_matrix(BasisKind::Marginal, a, &maximal_elements(a))
}

fn require_hypergraph(a: &PreHypergraph) -> Result<()> {
    if is_hypergraph(a) {
        Ok(())
    } else {
        Err(Error::NotHypergraph(format!(
            "{a} is not closed under taking nonempty subsets"
        )))
    }
}

fn all_cylinders(a: &PreHypergraph) -> Result<StatisticMatrix> {
    cylinder_matrix(BasisKind::Marginal, a, a.sets())
}

/// Dimension of `ℐ_𝒜`: the rank of all cylinder indicators `1{X_A = y_A}`,
/// `A ∈ 𝒜`. Equals `|𝒜| + 1` for hypergraphs.
pub fn interaction_space_dim(a: &PreHypergraph) -> Result<usize> {
    require_hypergraph(a)?;
    Ok(linalg::rank(all_cylinders(a)?.rational_columns()))
}

/// Checks that the parity functions together with the constant function
/// form a basis of the interaction space, by comparing ranks of the two
/// column sets and of their union.
pub fn verify_parity_basis(a: &PreHypergraph) -> Result<bool> {
    require_hypergraph(a)?;
    let mut parity = parity_matrix(a)?.rational_columns();
    parity.push(vec![Rational::from_integer(1.into()); 1 << a.ground_size()]);
    let cylinders = all_cylinders(a)?.rational_columns();
    let rank_p = linalg::rank(parity.clone());
    if rank_p != a.len() + 1 {
        return Ok(false);
    }
    let rank_c = linalg::rank(cylinders.clone());
    let mut union = parity;
    union.extend(cylinders);
    Ok(rank_c == rank_p && linalg::rank(union) == rank_p)
}

/// The vertices `f_𝒜(x)` of `ℱ_𝒜` as words of width `|𝒜|`, in row order.
pub fn parity_words(a: &PreHypergraph) -> Result<Vec<BitWord>> {
    if a.len() > MAX_WIDTH {
        return Err(Error::SizeGuard {
            what: "|A| for packed parity vectors",
            value: a.len(),
            limit: MAX_WIDTH,
        });
    }
    Ok(configurations(a.ground_size())?
        .into_iter()
        .map(|x| parity_word(a, x))
        .collect())
}

/// `f_𝒜(x)` for a single configuration; requires `|𝒜| ≤ 64`.
pub fn parity_word(a: &PreHypergraph, x: BitWord) -> BitWord {
    let bits = a
        .sets()
        .iter()
        .enumerate()
        .fold(0u64, |acc, (j, &s)| acc | ((parity(s, x) as u64) << j));
    BitWord::from_raw(a.len(), bits)
}
