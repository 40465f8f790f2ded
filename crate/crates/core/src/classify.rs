//! 0/1 polytopes whose vertex set is a subgroup of `(𝔽₂^n, ⊕)` and whose
//! hull is full-dimensional: generation by prisms and lifts, counting, and
//! brute-force cross-checks.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{affine_rank, contains_point, VertexSet01};
use crate::gf2::{all_subgroups, group_basis, index2_subgroups, is_subgroup, span_enumerate, subspaces, BitWord};
use crate::lp::{LinearProgram, Relation};
use crate::scalar::bit;
use crate::Rational;

/// Default largest `n` for [`enumerate_pn`].
pub const MAX_ENUMERATION_N: usize = 7;

/// Hard ceiling for [`enumerate_pn_with`].
pub const HARD_ENUMERATION_N: usize = 8;

/// A full-dimensional 0/1 polytope whose vertices form a subgroup of `W_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupPolytope {
    n: usize,
    vertices: Vec<BitWord>,
}

impl GroupPolytope {
    /// Validates both conditions, the dimension with exact rational rank.
    pub fn new(mut vertices: Vec<BitWord>) -> Result<Self> {
        let n = vertices
            .first()
            .map(|v| v.width())
            .ok_or_else(|| Error::NotSubgroup("empty vertex list".into()))?;
        if !is_subgroup(&vertices) {
            return Err(Error::NotSubgroup(
                "vertex set is not closed under XOR".into(),
            ));
        }
        vertices.sort_unstable();
        let found = rank_dim(n, &vertices);
        if found != n {
            return Err(Error::NotFullDimensional { found, ambient: n });
        }
        Ok(GroupPolytope { n, vertices })
    }

    /// The segment `[0,1]`.
    pub fn segment() -> Self {
        GroupPolytope {
            n: 1,
            vertices: vec![BitWord::from_raw(1, 0), BitWord::from_raw(1, 1)],
        }
    }

    /// The cube `W_n`.
    pub fn cube(n: usize) -> Result<Self> {
        if n == 0 || n > 20 {
            return Err(Error::OutOfRange {
                what: "cube dimension",
                value: n,
                expected: "1..=20".into(),
            });
        }
        let mut vertices: Vec<BitWord> = (0..1u64 << n).map(|b| BitWord::from_raw(n, b)).collect();
        vertices.sort_unstable();
        Ok(GroupPolytope { n, vertices })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Vertices, ascending.
    pub fn vertices(&self) -> &[BitWord] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `log₂ |V|`.
    pub fn log_order(&self) -> usize {
        self.vertices.len().trailing_zeros() as usize
    }

    /// `U_i = V ∩ {x_i = 0}` for a 0-based coordinate `i`.
    pub fn coordinate_kernel(&self, i: usize) -> Vec<BitWord> {
        self.vertices.iter().copied().filter(|v| !v.get(i)).collect()
    }

    pub fn to_vertex_set(&self) -> VertexSet01 {
        VertexSet01::from_words(&self.vertices).expect("group polytopes have distinct points")
    }
}

impl fmt::Display for GroupPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.vertices.iter().join(","))
    }
}

fn rank_dim(n: usize, vertices: &[BitWord]) -> usize {
    let bits: Vec<u64> = vertices.iter().map(|v| v.bits()).collect();
    affine_rank::<Rational>(n, &bits)
}

/// Full-dimensionality of a subgroup's hull, read off its coordinate
/// functionals: they must be pairwise distinct and nonzero. Each functional
/// is recorded by its values on a basis of the group.
pub fn full_dimensional_fast(width: usize, group: &[BitWord]) -> bool {
    let (basis, _) = group_basis(width, group);
    let mut seen = HashSet::with_capacity(width);
    (0..width).all(|i| {
        let functional = basis
            .iter()
            .enumerate()
            .fold(0u64, |acc, (j, b)| acc | ((b.get(i) as u64) << j));
        functional != 0 && seen.insert(functional)
    })
}

/// `P × [0,1]`.
pub fn prism(p: &GroupPolytope) -> GroupPolytope {
    let mut vertices: Vec<BitWord> = p
        .vertices
        .iter()
        .flat_map(|&v| [push(v, false), push(v, true)])
        .collect();
    vertices.sort_unstable();
    GroupPolytope {
        n: p.n + 1,
        vertices,
    }
}

fn push(v: BitWord, b: bool) -> BitWord {
    v.push(b).expect("enumeration widths stay below 64")
}

/// Checks that `u` is an index-2 subgroup of `V(P)` and returns it sorted.
fn validate_index_two(p: &GroupPolytope, u: &[BitWord]) -> Result<Vec<BitWord>> {
    let mut u = u.to_vec();
    u.sort_unstable();
    if 2 * u.len() != p.len()
        || u.iter().any(|x| p.vertices.binary_search(x).is_err())
        || !is_subgroup(&u)
    {
        return Err(Error::NotIndexTwo);
    }
    Ok(u)
}

fn lift_vertices(p: &GroupPolytope, u: &[BitWord]) -> Vec<BitWord> {
    let mut vertices: Vec<BitWord> = p
        .vertices
        .iter()
        .map(|&v| push(v, u.binary_search(&v).is_err()))
        .collect();
    vertices.sort_unstable();
    vertices
}

/// Index of the coordinate kernel equal to `u`, if any.
fn degenerate_coordinate(p: &GroupPolytope, u: &[BitWord]) -> Option<usize> {
    (0..p.n).find(|&i| u.iter().all(|x| !x.get(i)))
}

/// `U` at height 0 and `V ∖ U` at height 1.
pub fn lift(p: &GroupPolytope, u: &[BitWord]) -> Result<GroupPolytope> {
    let u = validate_index_two(p, u)?;
    if let Some(i) = degenerate_coordinate(p, &u) {
        return Err(Error::DegenerateLift(i + 1));
    }
    Ok(GroupPolytope {
        n: p.n + 1,
        vertices: lift_vertices(p, &u),
    })
}

/// The four equivalent conditions for a lift, each decided on its own.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiftConditions {
    /// The lift has dimension `n + 1` (exact rank).
    pub full_dimensional: bool,
    /// No coordinate vanishes on all of `U` (coordinate scan).
    pub not_in_coordinate_hyperplane: bool,
    /// The centre `(½,…,½)` lies in both `conv(U)` and `conv(V ∖ U)` (LP).
    pub centre_in_both: bool,
    /// `conv(U)` and `conv(V ∖ U)` meet (LP over both weight vectors).
    pub hulls_intersect: bool,
}

impl LiftConditions {
    pub fn as_array(&self) -> [bool; 4] {
        [
            self.full_dimensional,
            self.not_in_coordinate_hyperplane,
            self.centre_in_both,
            self.hulls_intersect,
        ]
    }

    pub fn all_equal(&self) -> bool {
        self.as_array().iter().all_equal()
    }
}

fn hulls_intersect(n: usize, a: &[BitWord], b: &[BitWord]) -> bool {
    // Weights λ on a, then μ on b: Σλa − Σμb = 0, Σλ = 1, Σμ = 1.
    let vars = a.len() + b.len();
    let mut lp = LinearProgram::<Rational>::new(vars);
    for j in 0..n {
        let row = a
            .iter()
            .map(|x| bit::<Rational>(x.get(j)))
            .chain(b.iter().map(|x| -bit::<Rational>(x.get(j))))
            .collect();
        lp.add_constraint(row, Relation::Equal, Rational::zero());
    }
    let pick = |first: bool| {
        (0..vars)
            .map(|i| bit::<Rational>((i < a.len()) == first))
            .collect()
    };
    lp.add_constraint(pick(true), Relation::Equal, Rational::one());
    lp.add_constraint(pick(false), Relation::Equal, Rational::one());
    lp.is_feasible()
}

pub fn lift_conditions(p: &GroupPolytope, u: &[BitWord]) -> Result<LiftConditions> {
    let u = validate_index_two(p, u)?;
    let rest: Vec<BitWord> = p
        .vertices
        .iter()
        .copied()
        .filter(|v| u.binary_search(v).is_err())
        .collect();
    let n = p.n;
    let full_dimensional = rank_dim(n + 1, &lift_vertices(p, &u)) == n + 1;
    let not_in_coordinate_hyperplane = (0..n).all(|i| u.iter().any(|x| x.get(i)));
    let centre = vec![Rational::new(1.into(), 2.into()); n];
    let as_set = |w: &[BitWord]| VertexSet01::from_words(w).expect("distinct points");
    let centre_in_both = contains_point(&as_set(&u), &centre)?
        && contains_point(&as_set(&rest), &centre)?;
    Ok(LiftConditions {
        full_dimensional,
        not_in_coordinate_hyperplane,
        centre_in_both,
        hulls_intersect: hulls_intersect(n, &u, &rest),
    })
}

/// Every polytope one step up from `p`: the prism and all non-degenerate
/// lifts, in that order.
pub fn children(p: &GroupPolytope) -> Vec<GroupPolytope> {
    let mut out = vec![prism(p)];
    let subgroups = index2_subgroups(&p.vertices).expect("vertex sets are nontrivial groups");
    for s in subgroups {
        if degenerate_coordinate(p, &s.kernel).is_none() {
            out.push(GroupPolytope {
                n: p.n + 1,
                vertices: lift_vertices(p, &s.kernel),
            });
        }
    }
    out
}

/// Result of [`enumerate_pn_with`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    /// All polytopes for the requested `n`, ascending.
    pub polytopes: Vec<GroupPolytope>,
    /// Candidates generated in the last step before deduplication.
    pub generated: usize,
}

impl Enumeration {
    /// Number of polytopes with `2^k` vertices, indexed by `k = 1..=n`
    /// (entry 0 unused).
    pub fn counts_by_k(&self, n: usize) -> Vec<usize> {
        let mut counts = vec![0; n + 1];
        for p in &self.polytopes {
            counts[p.log_order()] += 1;
        }
        counts
    }
}

pub fn enumerate_pn(n: usize) -> Result<Vec<GroupPolytope>> {
    Ok(enumerate_pn_with(n, MAX_ENUMERATION_N)?.polytopes)
}

/// Generates all polytopes in dimension `n`, starting from `[0,1]`. Each
/// candidate is checked with [`full_dimensional_fast`].
pub fn enumerate_pn_with(n: usize, max_n: usize) -> Result<Enumeration> {
    let limit = max_n.min(HARD_ENUMERATION_N);
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            expected: "at least 1".into(),
        });
    }
    if n > limit {
        return Err(Error::SizeGuard {
            what: "n for enumeration",
            value: n,
            limit,
        });
    }
    let mut level = vec![GroupPolytope::segment()];
    let mut generated = 1;
    for m in 1..n {
        let candidates: Vec<GroupPolytope> = level.par_iter().flat_map_iter(children).collect();
        generated = candidates.len();
        if let Some(bad) = candidates.iter().find(|c| !full_dimensional_fast(m + 1, &c.vertices)) {
            unreachable!("a generated polytope is not full-dimensional: {bad}");
        }
        let unique: BTreeSet<GroupPolytope> = candidates.into_iter().collect();
        level = unique.into_iter().collect();
    }
    Ok(Enumeration {
        polytopes: level,
        generated,
    })
}

/// Largest `n` for the brute-force subgroup scan.
pub const MAX_SUBGROUP_SCAN_N: usize = 6;

/// Every subgroup of `W_n` with a full-dimensional hull, found by listing
/// all subgroups and testing each with exact rank. Ascending.
pub fn full_dimensional_subgroups(n: usize) -> Result<Vec<GroupPolytope>> {
    if n == 0 || n > MAX_SUBGROUP_SCAN_N {
        return Err(Error::OutOfRange {
            what: "n for the subgroup scan",
            value: n,
            expected: format!("1..={MAX_SUBGROUP_SCAN_N}"),
        });
    }
    let groups = all_subgroups(n)?;
    let mut out: Vec<GroupPolytope> = groups
        .into_par_iter()
        .filter(|g| rank_dim(n, g) == n)
        .map(|vertices| GroupPolytope { n, vertices })
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// The triangle `c_n(k)`, `1 ≤ k ≤ n ≤ n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    rows: Vec<Vec<BigUint>>,
}

impl CountTable {
    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    /// `c_n(k)` for `1 ≤ k ≤ n ≤ n_max`.
    pub fn get(&self, n: usize, k: usize) -> &BigUint {
        &self.rows[n - 1][k - 1]
    }

    /// Row `n` as `c_n(1), …, c_n(n)`.
    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n - 1]
    }

    /// `c_n = Σ_k c_n(k)`.
    pub fn total(&self, n: usize) -> BigUint {
        self.row(n).iter().sum()
    }

    /// One line per `n`: `n`, the counts for `k = 1..=n`, then the total,
    /// tab-separated, under a header line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("n");
        for k in 1..=self.n_max() {
            out.push_str(&format!("\tk={k}"));
        }
        out.push_str("\ttotal\n");
        for n in 1..=self.n_max() {
            out.push_str(&n.to_string());
            for c in self.row(n) {
                out.push_str(&format!("\t{c}"));
            }
            out.push_str(&format!("\t{}\n", self.total(n)));
        }
        out
    }
}

/// Counts by the recursion `c_{n+1}(k) = c_n(k−1) + c_n(k)(2^k − n − 1)`,
/// applied where `k ≤ n < 2^k`, from `c_1(1) = 1`.
pub fn count_cnk(n_max: usize) -> Result<CountTable> {
    if n_max == 0 {
        return Err(Error::OutOfRange {
            what: "n_max",
            value: 0,
            expected: "at least 1".into(),
        });
    }
    let mut rows = vec![vec![BigUint::one()]];
    for n in 1..n_max {
        let prev = &rows[n - 1];
        let next: Vec<BigUint> = (1..=n + 1)
            .map(|k| {
                let order = BigUint::one() << k;
                if order <= BigUint::from(n + 1) {
                    BigUint::zero()
                } else if k == n + 1 {
                    BigUint::one()
                } else {
                    let carried = if k >= 2 { prev[k - 2].clone() } else { BigUint::zero() };
                    carried + &prev[k - 1] * (order - BigUint::from(n + 1))
                }
            })
            .collect();
        rows.push(next);
    }
    Ok(CountTable { rows })
}

/// `|GL(k, 2)| = Π_{i<k} (2^k − 2^i)`.
pub fn gl_order(k: usize) -> BigUint {
    (0..k)
        .map(|i| (BigUint::one() << k) - (BigUint::one() << i))
        .product()
}

/// `c_n(k)` counted as `n! · S / |GL(k,2)|`, where `S` is the number of
/// `n`-sets of nonzero vectors of `𝔽₂^k` that span it.
pub fn count_cnk_oracle(n: usize, k: usize) -> Result<BigUint> {
    if !(1..=4).contains(&k) || !(1..=10).contains(&n) {
        return Err(Error::OutOfRange {
            what: "oracle size",
            value: n.max(k),
            expected: "1 <= k <= 4 and 1 <= n <= 10".into(),
        });
    }
    let nonzero: Vec<BitWord> = (1u64..1 << k).map(|b| BitWord::from_raw(k, b)).collect();
    let spanning = nonzero
        .iter()
        .copied()
        .combinations(n)
        .filter(|c| group_basis(k, c).0.len() == k)
        .count();
    let factorial: BigUint = (1..=n).map(BigUint::from).product();
    Ok(factorial * BigUint::from(spanning) / gl_order(k))
}

/// Subsets of `W_n` of size `2^k` whose hull is full-dimensional.
pub fn dnk_bruteforce(n: usize, k: usize) -> Result<BigUint> {
    if !(1..=4).contains(&n) || k > n {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            expected: "1 <= n <= 4 and k <= n".into(),
        });
    }
    let points: Vec<u64> = (0..1u64 << n).collect();
    let subsets: Vec<Vec<u64>> = points.iter().copied().combinations(1 << k).collect();
    let count = subsets
        .par_iter()
        .filter(|s| affine_rank::<Rational>(n, s) == n)
        .count();
    Ok(BigUint::from(count))
}

/// Largest `n` for [`regular_simplex_subgroup`].
pub const MAX_SIMPLEX_N: usize = 7;

/// A subgroup of `W_n` of order `n + 1` whose hull is a regular
/// `n`-simplex, if one exists. Regularity is checked through Hamming
/// distances, which equal squared Euclidean distances on 0/1 points.
pub fn regular_simplex_subgroup(n: usize) -> Result<Option<Vec<BitWord>>> {
    if n == 0 || n > MAX_SIMPLEX_N {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            expected: format!("1..={MAX_SIMPLEX_N}"),
        });
    }
    if !(n + 1).is_power_of_two() {
        return Ok(None);
    }
    let m = (n + 1).trailing_zeros() as usize;
    let candidates = subspaces(n, m)?;
    let witness = candidates.into_par_iter().find_first(|basis| {
        let group = span_enumerate(n, basis).expect("m <= 3");
        is_regular_simplex(n, &group)
    });
    Ok(witness.map(|basis| span_enumerate(n, &basis).expect("m <= 3")))
}

fn is_regular_simplex(n: usize, group: &[BitWord]) -> bool {
    let weights: HashSet<usize> = group
        .iter()
        .filter(|x| !x.is_zero())
        .map(|x| x.weight())
        .collect();
    let distances: HashSet<usize> = group
        .iter()
        .tuple_combinations()
        .map(|(a, b)| a.hamming(*b))
        .collect();
    weights.len() == 1 && distances.len() == 1 && rank_dim(n, group) == n
}

/// Short scientific form `d.dd·10^e` of a big integer, truncated.
pub fn approx_decimal(x: &BigUint, significant: usize) -> String {
    let digits = x.to_string();
    let exponent = digits.len() - 1;
    let significant = significant.max(1).min(digits.len());
    let (head, tail) = digits[..significant].split_at(1);
    if tail.is_empty() {
        format!("{head}e{exponent}")
    } else {
        format!("{head}.{tail}e{exponent}")
    }
}
