//! The bridge between pre-hypergraphs and binary linear codes.

use std::collections::{HashMap, HashSet};

use num_integer::binomial;

use crate::bases::parity_word;
use crate::error::{Error, Result};
use crate::gf2::{rank_gf2, span_enumerate, BitWord, GF2Matrix};
use crate::hypergraph::PreHypergraph;

/// Largest code dimension for which codewords are enumerated.
pub const MAX_ENUMERATED_DIM: usize = 20;

/// Largest ground set for the exhaustive homomorphism check.
pub const MAX_HOMOMORPHISM_N: usize = 8;

/// An `[s, k]` binary linear code given by a full-row-rank generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: GF2Matrix,
}

impl LinearCode {
    pub fn new(generator: GF2Matrix) -> Result<Self> {
        let rank = rank_gf2(&generator);
        if rank != generator.nrows() {
            return Err(Error::NotGeneratorMatrix {
                rank,
                rows: generator.nrows(),
            });
        }
        Ok(LinearCode { generator })
    }

    pub fn generator(&self) -> &GF2Matrix {
        &self.generator
    }

    pub fn length(&self) -> usize {
        self.generator.ncols()
    }

    pub fn dim(&self) -> usize {
        self.generator.nrows()
    }
}

/// The `[|𝒜|, N]` code spanned by `f_𝒜(e_1), …, f_𝒜(e_N)`. With atoms first
/// in the column order the generator is already `(E_N | H)`.
pub fn code_from_hypergraph(a: &PreHypergraph) -> Result<LinearCode> {
    let n = a.ground_size();
    if a.len() > crate::gf2::MAX_WIDTH {
        return Err(Error::SizeGuard {
            what: "code length |A|",
            value: a.len(),
            limit: crate::gf2::MAX_WIDTH,
        });
    }
    let rows = (0..n)
        .map(|i| BitWord::unit(n, i).map(|e| parity_word(a, e)))
        .collect::<Result<Vec<_>>>()?;
    LinearCode::new(GF2Matrix::new(a.len(), rows)?)
}

fn check_enumerable(c: &LinearCode) -> Result<()> {
    if c.dim() > MAX_ENUMERATED_DIM {
        return Err(Error::SizeGuard {
            what: "code dimension",
            value: c.dim(),
            limit: MAX_ENUMERATED_DIM,
        });
    }
    Ok(())
}

/// All `2^k` codewords, in ascending string order.
pub fn codewords(c: &LinearCode) -> Result<Vec<BitWord>> {
    check_enumerable(c)?;
    span_enumerate(c.length(), c.generator.rows())
}

/// Minimum weight of a nonzero codeword.
pub fn min_distance(c: &LinearCode) -> Result<usize> {
    Ok(codewords(c)?
        .into_iter()
        .filter(|w| !w.is_zero())
        .map(BitWord::weight)
        .min()
        .expect("k >= 1 gives a nonzero codeword"))
}

/// `Σ_{l=0}^{k−1} C(N−1, l)`, the distance of the code of `𝒜_{k,N}`.
pub fn distance_formula(k: usize, n: usize) -> Result<u64> {
    if n == 0 || n > crate::gf2::MAX_WIDTH {
        return Err(Error::OutOfRange {
            what: "N",
            value: n,
            expected: format!("1..={}", crate::gf2::MAX_WIDTH),
        });
    }
    if k == 0 || k > n {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            expected: format!("1..={n}"),
        });
    }
    Ok((0..k).map(|l| binomial((n - 1) as u64, l as u64)).sum())
}

/// A column of `H` that did not produce a new set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DuplicateColumn {
    /// 0-based column of the generator matrix.
    pub column: usize,
    /// Earlier column (0-based) carrying the same set; atoms are columns
    /// `0..N`.
    pub duplicate_of: usize,
}

/// Reads a pre-hypergraph off a generator `(E_N | H)`: the atoms plus one set
/// `A_j = {i : H_ij = 1}` per column of `H`. Repeated columns collapse and
/// are reported.
pub fn hypergraph_from_generator(
    g: &GF2Matrix,
) -> Result<(PreHypergraph, Vec<DuplicateColumn>)> {
    let n = g.nrows();
    let s = g.ncols();
    if n == 0 || n > s {
        return Err(Error::NotStandardForm);
    }
    let standard = (0..n).all(|r| (0..n).all(|c| g.get(r, c) == (r == c)));
    if !standard {
        return Err(Error::NotStandardForm);
    }
    let mut first_seen: HashMap<BitWord, usize> = HashMap::new();
    for i in 0..n {
        first_seen.insert(BitWord::unit(n, i)?, i);
    }
    let mut sets: Vec<BitWord> = (0..n).map(|i| BitWord::unit(n, i)).collect::<Result<_>>()?;
    let mut duplicates = Vec::new();
    for c in n..s {
        let col = g.column(c)?;
        if col.is_zero() {
            return Err(Error::ZeroColumn(c));
        }
        match first_seen.get(&col) {
            Some(&earlier) => duplicates.push(DuplicateColumn {
                column: c,
                duplicate_of: earlier,
            }),
            None => {
                first_seen.insert(col, c);
                sets.push(col);
            }
        }
    }
    Ok((PreHypergraph::new(n, sets)?, duplicates))
}

/// `f_𝒜(x)` packed into 64-bit blocks, for any `|𝒜|`.
fn parity_blocks(a: &PreHypergraph, x: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len().div_ceil(64)];
    for (j, s) in a.sets().iter().enumerate() {
        if (s.bits() & x).count_ones() % 2 == 1 {
            out[j / 64] |= 1 << (j % 64);
        }
    }
    out
}

/// Exhaustively checks `f_𝒜(x ⊕ y) = f_𝒜(x) ⊕ f_𝒜(y)` over all pairs and
/// that `f_𝒜` is injective.
pub fn verify_homomorphism(a: &PreHypergraph) -> Result<bool> {
    let n = a.ground_size();
    if n > MAX_HOMOMORPHISM_N {
        return Err(Error::SizeGuard {
            what: "N for the exhaustive homomorphism check",
            value: n,
            limit: MAX_HOMOMORPHISM_N,
        });
    }
    let images: Vec<Vec<u64>> = (0u64..(1 << n)).map(|x| parity_blocks(a, x)).collect();
    let additive = (0..images.len()).all(|x| {
        (0..images.len()).all(|y| {
            let sum: Vec<u64> = images[x]
                .iter()
                .zip(&images[y])
                .map(|(p, q)| p ^ q)
                .collect();
            images[x ^ y] == sum
        })
    });
    let distinct: HashSet<&Vec<u64>> = images.iter().collect();
    Ok(additive && distinct.len() == images.len())
}
