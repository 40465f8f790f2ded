//! Linear algebra over the two-element field.
//!
//! A [`BitWord`] packs up to 64 coordinates into one machine word; coordinate
//! `i` is bit `i`. The text form lists coordinates left to right, so `"110"`
//! has coordinates 0 and 1 set. Words order by width, then by their integer
//! value.

use std::collections::HashSet;
use std::fmt;
use std::ops::BitXor;

use itertools::Itertools;

use crate::error::{Error, Result};

pub const MAX_WIDTH: usize = 64;

/// Largest basis accepted by [`span_enumerate`].
pub const MAX_SPAN_BASIS: usize = 30;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitWord {
    width: u8,
    bits: u64,
}

/// Shorter words first; words of one width compare as their strings, so
/// coordinate 0 is the most significant.
impl Ord for BitWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.width
            .cmp(&other.width)
            .then_with(|| self.bits.reverse_bits().cmp(&other.bits.reverse_bits()))
    }
}

impl PartialOrd for BitWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

impl BitWord {
    pub fn new(width: usize, bits: u64) -> Result<Self> {
        if width == 0 || width > MAX_WIDTH {
            return Err(Error::BadWidth(width));
        }
        if bits & !mask(width) != 0 {
            return Err(Error::OutOfRange {
                what: "bit pattern",
                value: bits as usize,
                expected: format!("fewer than {width} bits"),
            });
        }
        Ok(BitWord {
            width: width as u8,
            bits,
        })
    }

    /// Builds a word without validation; `bits` is masked to `width`.
    pub(crate) fn from_raw(width: usize, bits: u64) -> Self {
        debug_assert!((1..=MAX_WIDTH).contains(&width));
        BitWord {
            width: width as u8,
            bits: bits & mask(width),
        }
    }

    pub fn zero(width: usize) -> Result<Self> {
        Self::new(width, 0)
    }

    pub fn unit(width: usize, i: usize) -> Result<Self> {
        if i >= width {
            return Err(Error::OutOfRange {
                what: "coordinate",
                value: i,
                expected: format!("< {width}"),
            });
        }
        Self::new(width, 1 << i)
    }

    pub fn from_bools(coords: &[bool]) -> Result<Self> {
        let bits = coords
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &b)| acc | ((b as u64) << i));
        Self::new(coords.len(), bits)
    }

    /// Parses a string of `'0'`/`'1'` characters, coordinate 0 first.
    pub fn parse(s: &str) -> Result<Self> {
        let coords = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!(
                    "unexpected character {other:?} in binary word {s:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bools(&coords)
    }

    pub fn width(self) -> usize {
        self.width as usize
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn get(self, i: usize) -> bool {
        i < self.width() && (self.bits >> i) & 1 == 1
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn weight(self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Parity of the coordinatewise product, i.e. the `𝔽₂` dot product.
    pub fn dot(self, other: BitWord) -> bool {
        (self.bits & other.bits).count_ones() % 2 == 1
    }

    pub fn hamming(self, other: BitWord) -> usize {
        (self.bits ^ other.bits).count_ones() as usize
    }

    /// Appends one coordinate at the end (index `width`).
    pub fn push(self, b: bool) -> Result<Self> {
        Self::new(self.width() + 1, self.bits | ((b as u64) << self.width()))
    }

    pub fn coords(self) -> impl Iterator<Item = bool> {
        (0..self.width()).map(move |i| self.get(i))
    }

    pub fn support(self) -> impl Iterator<Item = usize> {
        (0..self.width()).filter(move |&i| self.get(i))
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.coords() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitWord({self})")
    }
}

/// Coordinatewise XOR. Panics on a width mismatch; use [`xor_add`] for the
/// checked form.
impl BitXor for BitWord {
    type Output = BitWord;

    fn bitxor(self, rhs: BitWord) -> BitWord {
        assert_eq!(self.width, rhs.width, "xor of words with different widths");
        BitWord {
            width: self.width,
            bits: self.bits ^ rhs.bits,
        }
    }
}

pub fn xor_add(a: BitWord, b: BitWord) -> Result<BitWord> {
    if a.width != b.width {
        return Err(Error::WidthMismatch {
            left: a.width(),
            right: b.width(),
        });
    }
    Ok(a ^ b)
}

/// A matrix over `𝔽₂` stored as row words of width `cols`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GF2Matrix {
    cols: usize,
    rows: Vec<BitWord>,
}

impl GF2Matrix {
    pub fn new(cols: usize, rows: Vec<BitWord>) -> Result<Self> {
        if cols == 0 || cols > MAX_WIDTH {
            return Err(Error::BadWidth(cols));
        }
        if let Some(r) = rows.iter().find(|r| r.width() != cols) {
            return Err(Error::WidthMismatch {
                left: cols,
                right: r.width(),
            });
        }
        Ok(GF2Matrix { cols, rows })
    }

    pub fn from_rows(rows: Vec<BitWord>) -> Result<Self> {
        let cols = rows
            .first()
            .map(|r| r.width())
            .ok_or_else(|| Error::Parse("matrix has no rows".into()))?;
        Self::new(cols, rows)
    }

    pub fn identity(k: usize) -> Result<Self> {
        let rows = (0..k).map(|i| BitWord::unit(k, i)).collect::<Result<_>>()?;
        Self::new(k, rows)
    }

    /// Parses one row per non-empty line, each a string of `0`/`1`.
    pub fn parse(text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(BitWord::parse)
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn to_text(&self) -> String {
        self.rows.iter().map(|r| format!("{r}\n")).collect()
    }

    pub fn rows(&self) -> &[BitWord] {
        &self.rows
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    /// Column `c` as a word of width `nrows` (row `r` is coordinate `r`).
    pub fn column(&self, c: usize) -> Result<BitWord> {
        let bits = self
            .rows
            .iter()
            .enumerate()
            .fold(0u64, |acc, (r, row)| acc | ((row.get(c) as u64) << r));
        BitWord::new(self.nrows(), bits)
    }

    /// Reduced row echelon form with zero rows dropped, plus pivot columns.
    pub fn rref(&self) -> (GF2Matrix, Vec<usize>) {
        let (rows, pivots) = rref_rows(&self.rows, self.cols);
        (
            GF2Matrix {
                cols: self.cols,
                rows,
            },
            pivots,
        )
    }

    pub fn permute_columns(&self, perm: &[usize]) -> Result<GF2Matrix> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let bits = perm
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (new, &old)| acc | ((r.get(old) as u64) << new));
                BitWord::new(perm.len(), bits)
            })
            .collect::<Result<_>>()?;
        GF2Matrix::new(perm.len(), rows)
    }
}

impl fmt::Debug for GF2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.rows.iter().map(|r| r.to_string()))
            .finish()
    }
}

/// Gauss-Jordan elimination on packed rows. Returns the nonzero rows of the
/// reduced echelon form and the pivot column of each.
fn rref_rows(input: &[BitWord], cols: usize) -> (Vec<BitWord>, Vec<usize>) {
    let mut rows: Vec<BitWord> = input.to_vec();
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..cols {
        let Some(p) = (top..rows.len()).find(|&r| rows[r].get(c)) else {
            continue;
        };
        rows.swap(top, p);
        let pivot_row = rows[top];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != top && row.get(c) {
                *row = *row ^ pivot_row;
            }
        }
        pivots.push(c);
        top += 1;
        if top == rows.len() {
            break;
        }
    }
    rows.truncate(top);
    (rows, pivots)
}

pub fn rank_gf2(m: &GF2Matrix) -> usize {
    rref_rows(&m.rows, m.cols).1.len()
}

/// Brings a full-row-rank generator matrix into the form `(E_k | H)`.
///
/// Returns the reduced matrix together with the column permutation used:
/// column `j` of the result is column `perm[j]` of the row-reduced input.
/// Pivot columns move to the front in order; the rest keep their order.
pub fn standard_form(g: &GF2Matrix) -> Result<(GF2Matrix, Vec<usize>)> {
    let (reduced, pivots) = g.rref();
    if pivots.len() < g.nrows() {
        return Err(Error::NotGeneratorMatrix {
            rank: pivots.len(),
            rows: g.nrows(),
        });
    }
    let perm: Vec<usize> = pivots
        .iter()
        .copied()
        .chain((0..g.ncols()).filter(|c| !pivots.contains(c)))
        .collect();
    Ok((reduced.permute_columns(&perm)?, perm))
}

/// All elements of the span of `basis`, deduplicated and ascending.
pub fn span_enumerate(width: usize, basis: &[BitWord]) -> Result<Vec<BitWord>> {
    if width == 0 || width > MAX_WIDTH {
        return Err(Error::BadWidth(width));
    }
    if let Some(b) = basis.iter().find(|b| b.width() != width) {
        return Err(Error::WidthMismatch {
            left: width,
            right: b.width(),
        });
    }
    if basis.len() > MAX_SPAN_BASIS {
        return Err(Error::SizeGuard {
            what: "span basis size",
            value: basis.len(),
            limit: MAX_SPAN_BASIS,
        });
    }
    let (rows, _) = rref_rows(basis, width);
    let mut out = Vec::with_capacity(1 << rows.len());
    // Gray-code walk: one XOR per element.
    let mut acc = 0u64;
    out.push(BitWord::from_raw(width, 0));
    for step in 1u64..(1u64 << rows.len()) {
        acc ^= rows[step.trailing_zeros() as usize].bits;
        out.push(BitWord::from_raw(width, acc));
    }
    out.sort_unstable();
    Ok(out)
}

/// Reduced echelon basis and pivots of the span of `elements`.
pub fn group_basis(width: usize, elements: &[BitWord]) -> (Vec<BitWord>, Vec<usize>) {
    rref_rows(elements, width)
}

/// Coordinates of `w` with respect to a reduced echelon basis: bit `j` is
/// the entry of `w` at pivot column `j`. Only meaningful for `w` in the span.
pub fn echelon_coordinates(w: BitWord, pivots: &[usize]) -> u64 {
    pivots
        .iter()
        .enumerate()
        .fold(0u64, |acc, (j, &p)| acc | ((w.get(p) as u64) << j))
}

/// Checks that `elements` (all of one width, no repeats) is exactly a
/// subgroup of `(𝔽₂^w, ⊕)`, i.e. has as many elements as its span.
pub fn is_subgroup(elements: &[BitWord]) -> bool {
    validate_subgroup(elements).is_ok()
}

fn validate_subgroup(elements: &[BitWord]) -> Result<(usize, Vec<BitWord>, Vec<usize>)> {
    let width = elements
        .first()
        .map(|e| e.width())
        .ok_or_else(|| Error::NotSubgroup("empty element list".into()))?;
    if elements.iter().any(|e| e.width() != width) {
        return Err(Error::NotSubgroup("elements have different widths".into()));
    }
    let distinct: HashSet<_> = elements.iter().collect();
    if distinct.len() != elements.len() {
        return Err(Error::NotSubgroup("repeated elements".into()));
    }
    let (basis, pivots) = rref_rows(elements, width);
    if basis.len() >= 64 || distinct.len() != 1usize << basis.len() {
        return Err(Error::NotSubgroup(format!(
            "{} elements but the generated span has 2^{} elements",
            distinct.len(),
            basis.len()
        )));
    }
    Ok((width, basis, pivots))
}

/// An index-2 subgroup given as the kernel of a nonzero linear form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexTwoSubgroup {
    /// The form, in the dual of the reduced echelon basis of the group.
    pub functional: BitWord,
    /// Its kernel, ascending.
    pub kernel: Vec<BitWord>,
}

/// All `2^k − 1` index-2 subgroups of a group of order `2^k`, ordered by
/// the integer value of their functional.
pub fn index2_subgroups(group: &[BitWord]) -> Result<Vec<IndexTwoSubgroup>> {
    let (_, basis, pivots) = validate_subgroup(group)?;
    let k = basis.len();
    if k == 0 {
        return Err(Error::NotSubgroup(
            "the trivial group has no index-2 subgroups".into(),
        ));
    }
    let coords: Vec<(BitWord, u64)> = group
        .iter()
        .map(|&g| (g, echelon_coordinates(g, &pivots)))
        .collect();
    (1u64..(1u64 << k))
        .map(|phi| {
            let mut kernel: Vec<BitWord> = coords
                .iter()
                .filter(|(_, c)| (c & phi).count_ones() % 2 == 0)
                .map(|(g, _)| *g)
                .collect();
            kernel.sort_unstable();
            Ok(IndexTwoSubgroup {
                functional: BitWord::new(k, phi)?,
                kernel,
            })
        })
        .collect()
}

/// Reduced echelon bases of every `k`-dimensional subspace of `𝔽₂^n`, one
/// per subspace. The count is the Gaussian binomial `[n choose k]_2`.
pub fn subspaces(n: usize, k: usize) -> Result<Vec<Vec<BitWord>>> {
    if n == 0 || n > MAX_WIDTH {
        return Err(Error::BadWidth(n));
    }
    if k > n {
        return Err(Error::OutOfRange {
            what: "subspace dimension",
            value: k,
            expected: format!("<= {n}"),
        });
    }
    let mut out = Vec::new();
    for pivots in (0..n).combinations(k) {
        // Free entries: row j, columns right of its pivot that are not pivots.
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(j, &p)| {
                let pivots = &pivots;
                (p + 1..n)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (j, c))
            })
            .collect();
        if free.len() >= 64 {
            return Err(Error::SizeGuard {
                what: "free entries in echelon pattern",
                value: free.len(),
                limit: 63,
            });
        }
        for fill in 0u64..(1u64 << free.len()) {
            let mut rows: Vec<u64> = pivots.iter().map(|&p| 1u64 << p).collect();
            for (bit, &(j, c)) in free.iter().enumerate() {
                if (fill >> bit) & 1 == 1 {
                    rows[j] |= 1 << c;
                }
            }
            out.push(rows.into_iter().map(|r| BitWord::from_raw(n, r)).collect());
        }
    }
    Ok(out)
}

/// Every subgroup of `(𝔽₂^n, ⊕)` as an ascending element list.
pub fn all_subgroups(n: usize) -> Result<Vec<Vec<BitWord>>> {
    let mut out = Vec::new();
    for k in 0..=n {
        for basis in subspaces(n, k)? {
            out.push(span_enumerate(n, &basis)?);
        }
    }
    Ok(out)
}
