//! Exact polytope computations on 0/1 vertex sets.
//!
//! Faces are identified by the set of vertices they contain, packed into a
//! [`VertexMask`] (bit `i` is point `i`), so vertex sets here hold at most
//! 64 points. No floating point is used: every decision goes through exact
//! elimination or the exact simplex method.

mod cut;
mod facets;
mod io;
mod lattice;

pub use cut::{cut_matches_parity, cut_polytope_vertices, MAX_CUT_VERTICES};
pub use facets::{facets, facets_with};
pub use io::{lattice_json, parse_vertex_json, parse_vrep, vertex_json, vrep, LatticeJson, VertexSetJson};
pub use lattice::{
    face_lattice, face_lattice_with, faces_by_lp, is_simple, simplex_face_criterion, FaceLattice,
    SizeLimits,
};

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gf2::BitWord;
use crate::linalg;
use crate::lp::{LinearProgram, Relation};
use crate::scalar::{bit, Field};
use crate::Rational;

/// A set of vertex indices of a [`VertexSet01`].
pub type VertexMask = u64;

pub const MAX_POINTS: usize = 64;

/// Distinct points of `{0,1}^d`. Coordinate `j` of a point is bit `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet01 {
    dim: usize,
    points: Vec<u64>,
}

impl VertexSet01 {
    pub fn new(dim: usize, points: Vec<u64>) -> Result<Self> {
        if dim > 64 {
            return Err(Error::BadWidth(dim));
        }
        if points.is_empty() {
            return Err(Error::InvalidVertexSet("no points".into()));
        }
        if points.len() > MAX_POINTS {
            return Err(Error::SizeGuard {
                what: "number of points",
                value: points.len(),
                limit: MAX_POINTS,
            });
        }
        if dim < 64 && points.iter().any(|&p| p >> dim != 0) {
            return Err(Error::InvalidVertexSet(format!(
                "a point has a coordinate beyond dimension {dim}"
            )));
        }
        let mut seen = HashSet::new();
        if points.iter().any(|p| !seen.insert(*p)) {
            return Err(Error::InvalidVertexSet("repeated point".into()));
        }
        Ok(VertexSet01 { dim, points })
    }

    pub fn from_words(words: &[BitWord]) -> Result<Self> {
        let dim = words
            .first()
            .map(|w| w.width())
            .ok_or_else(|| Error::InvalidVertexSet("no points".into()))?;
        if let Some(w) = words.iter().find(|w| w.width() != dim) {
            return Err(Error::WidthMismatch {
                left: dim,
                right: w.width(),
            });
        }
        Self::new(dim, words.iter().map(|w| w.bits()).collect())
    }

    /// All of `{0,1}^d`.
    pub fn cube(dim: usize) -> Result<Self> {
        if dim > 6 {
            return Err(Error::SizeGuard {
                what: "cube dimension",
                value: dim,
                limit: 6,
            });
        }
        Self::new(dim, (0..1u64 << dim).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[u64] {
        &self.points
    }

    pub fn coord(&self, i: usize, j: usize) -> bool {
        (self.points[i] >> j) & 1 == 1
    }

    pub fn full_mask(&self) -> VertexMask {
        mask_prefix(self.len())
    }

    pub fn point_as<T: Field>(&self, i: usize) -> Vec<T> {
        (0..self.dim).map(|j| bit(self.coord(i, j))).collect()
    }

    /// Points selected by `mask`, in index order.
    pub fn subset(&self, mask: VertexMask) -> Vec<u64> {
        indices(mask).map(|i| self.points[i]).collect()
    }

    /// The vertex set with its points sorted ascending.
    pub fn sorted(&self) -> Self {
        let mut points = self.points.clone();
        points.sort_unstable();
        VertexSet01 {
            dim: self.dim,
            points,
        }
    }
}

pub(crate) fn mask_prefix(n: usize) -> VertexMask {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Indices set in `mask`, ascending.
pub fn indices(mask: VertexMask) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| (mask >> i) & 1 == 1)
}

pub fn mask_of(idx: &[usize]) -> VertexMask {
    idx.iter().fold(0, |m, &i| m | (1 << i))
}

/// Affine dimension of a list of 0/1 points over the field `T`.
pub fn affine_rank<T: Field>(dim: usize, points: &[u64]) -> usize {
    let Some((&base, rest)) = points.split_first() else {
        return 0;
    };
    let rows: Vec<Vec<T>> = rest
        .iter()
        .map(|&p| {
            (0..dim)
                .map(|j| {
                    let a = ((p >> j) & 1) as i64;
                    let b = ((base >> j) & 1) as i64;
                    T::from_int(a - b)
                })
                .collect()
        })
        .collect();
    linalg::rank(rows)
}

/// Rational rank of `{p − p₀}`.
pub fn affine_dim(v: &VertexSet01) -> usize {
    affine_rank::<Rational>(v.dim, &v.points)
}

/// Whether `p` is a convex combination of the points, decided by an exact
/// LP feasibility problem over the weights.
pub fn contains_point<T: Field>(v: &VertexSet01, p: &[T]) -> Result<bool> {
    if p.len() != v.dim {
        return Err(Error::WidthMismatch {
            left: v.dim,
            right: p.len(),
        });
    }
    let n = v.len();
    let mut lp = LinearProgram::<T>::new(n);
    for (j, target) in p.iter().enumerate() {
        let row = (0..n).map(|i| bit(v.coord(i, j))).collect();
        lp.add_constraint(row, Relation::Equal, target.clone());
    }
    lp.add_constraint(vec![T::one(); n], Relation::Equal, T::one());
    Ok(lp.is_feasible())
}

/// Whether the points in `s` are exactly the points on some supporting
/// hyperplane: there is `(c, b)` with `c·v = b` on `s` and
/// `c·w ≤ b − margin` off `s`. Any positive margin gives the same answer.
pub fn is_face_with_margin<T: Field>(v: &VertexSet01, s: VertexMask, margin: T) -> bool {
    let d = v.dim;
    // Variables c_0..c_{d-1}, b, all free.
    let mut lp = LinearProgram::<T>::new(d + 1);
    for j in 0..=d {
        lp.set_free(j);
    }
    for i in 0..v.len() {
        let mut row: Vec<T> = v.point_as(i);
        row.push(-T::one());
        if (s >> i) & 1 == 1 {
            lp.add_constraint(row, Relation::Equal, T::zero());
        } else {
            lp.add_constraint(row, Relation::LessEq, -margin.clone());
        }
    }
    lp.is_feasible()
}

pub fn is_face(v: &VertexSet01, s: VertexMask) -> bool {
    is_face_with_margin(v, s, Rational::from_int(1))
}
