use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;

use super::{affine_rank, facets, indices, is_face, VertexMask, VertexSet01};
use crate::error::{Error, Result};
use crate::gf2::BitWord;
use crate::Rational;

/// Size guards for [`face_lattice_with`]. The defaults admit every
/// `ℱ_{k,N}` with `N ≤ 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeLimits {
    pub max_points: usize,
    pub max_dim: usize,
}

impl Default for SizeLimits {
    fn default() -> Self {
        SizeLimits {
            max_points: 16,
            max_dim: 15,
        }
    }
}

impl SizeLimits {
    /// Raises the dimension guard to `max_dim` and the point guard to the
    /// 64-point hard limit. Values below the defaults keep the defaults.
    pub fn with_max_dim(max_dim: usize) -> Self {
        let default = Self::default();
        if max_dim <= default.max_dim {
            return default;
        }
        SizeLimits {
            max_points: super::MAX_POINTS,
            max_dim,
        }
    }

    fn check(&self, v: &VertexSet01) -> Result<()> {
        if v.len() > self.max_points {
            return Err(Error::SizeGuard {
                what: "number of vertices",
                value: v.len(),
                limit: self.max_points,
            });
        }
        if v.dim() > self.max_dim {
            return Err(Error::SizeGuard {
                what: "dimension",
                value: v.dim(),
                limit: self.max_dim,
            });
        }
        Ok(())
    }
}

/// All nonempty faces, grouped by dimension.
///
/// The empty face is not included; the polytope itself is, as the single
/// face of dimension `d`. Faces within one dimension are ordered by their
/// ascending vertex-index lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceLattice {
    pub dim: usize,
    pub num_vertices: usize,
    pub faces: Vec<Vec<VertexMask>>,
}

impl FaceLattice {
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn all_faces(&self) -> impl Iterator<Item = VertexMask> + '_ {
        self.faces.iter().flatten().copied()
    }

    pub fn facets(&self) -> &[VertexMask] {
        if self.dim == 0 {
            &[]
        } else {
            &self.faces[self.dim - 1]
        }
    }

    /// Rows `dim count`, then `sum` and `simple y|n`.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for (d, count) in self.f_vector().iter().enumerate() {
            out.push_str(&format!("{d} {count}\n"));
        }
        out.push_str(&format!("sum {}\n", self.total()));
        out.push_str(&format!(
            "simple {}\n",
            if is_simple(self) { "y" } else { "n" }
        ));
        out
    }
}

fn sort_by_index_lists(faces: &mut [VertexMask]) {
    faces.sort_by_cached_key(|&m| indices(m).collect::<Vec<_>>());
}

pub fn face_lattice(v: &VertexSet01) -> Result<FaceLattice> {
    face_lattice_with(v, SizeLimits::default())
}

/// Face lattice of a full-dimensional vertex set: facets first, then
/// closure under intersection, then an exact affine dimension per face.
pub fn face_lattice_with(v: &VertexSet01, limits: SizeLimits) -> Result<FaceLattice> {
    limits.check(v)?;
    let facet_masks = facets(v)?;
    let full = v.full_mask();
    let mut seen: HashSet<VertexMask> = HashSet::from([full]);
    let mut queue = VecDeque::from([full]);
    while let Some(face) = queue.pop_front() {
        for &f in &facet_masks {
            let meet = face & f;
            if meet != 0 && seen.insert(meet) {
                queue.push_back(meet);
            }
        }
    }
    let all: Vec<VertexMask> = seen.into_iter().collect();
    let dims: Vec<usize> = all
        .par_iter()
        .map(|&m| affine_rank::<Rational>(v.dim(), &v.subset(m)))
        .collect();
    let mut faces = vec![Vec::new(); v.dim() + 1];
    for (m, d) in all.into_iter().zip(dims) {
        faces[d].push(m);
    }
    for group in faces.iter_mut() {
        sort_by_index_lists(group);
    }
    Ok(FaceLattice {
        dim: v.dim(),
        num_vertices: v.len(),
        faces,
    })
}

/// Every vertex lies on exactly `d` edges.
pub fn is_simple(l: &FaceLattice) -> bool {
    if l.dim == 0 {
        return true;
    }
    let edges = &l.faces[1];
    (0..l.num_vertices).all(|i| edges.iter().filter(|&&e| (e >> i) & 1 == 1).count() == l.dim)
}

/// Largest vertex set for the all-subsets LP oracle.
pub const MAX_LP_ORACLE_POINTS: usize = 12;

/// Every nonempty subset accepted by the LP face test, ascending by mask.
/// Exponential in the number of points; used as an independent check of
/// [`face_lattice`].
pub fn faces_by_lp(v: &VertexSet01) -> Result<Vec<VertexMask>> {
    if v.len() > MAX_LP_ORACLE_POINTS {
        return Err(Error::SizeGuard {
            what: "number of vertices for the LP oracle",
            value: v.len(),
            limit: MAX_LP_ORACLE_POINTS,
        });
    }
    let subsets: Vec<VertexMask> = (1..=v.full_mask()).collect();
    Ok(subsets
        .into_par_iter()
        .filter(|&s| is_face(v, s))
        .collect())
}

/// Face test for `ℱ_{N−1,N}` on a set of configurations: a proper subset is
/// a face iff it contains neither parity class of `{0,1}^N`. The whole
/// configuration space is accepted as the polytope itself.
pub fn simplex_face_criterion(n: usize, subset: &[BitWord]) -> Result<bool> {
    if n == 0 || n > 20 {
        return Err(Error::OutOfRange {
            what: "N",
            value: n,
            expected: "1..=20".into(),
        });
    }
    if let Some(x) = subset.iter().find(|x| x.width() != n) {
        return Err(Error::WidthMismatch {
            left: n,
            right: x.width(),
        });
    }
    let distinct: HashSet<&BitWord> = subset.iter().collect();
    let odd = distinct.iter().filter(|x| x.weight() % 2 == 1).count();
    let even = distinct.len() - odd;
    let class = 1usize << (n - 1);
    if odd == class && even == class {
        return Ok(true);
    }
    Ok(odd < class && even < class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::parity_words;
    use crate::hypergraph::uniform;

    fn parity_polytope(k: usize, n: usize) -> VertexSet01 {
        VertexSet01::from_words(&parity_words(&uniform(k, n).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn cube_lattice() {
        let l = face_lattice(&parity_polytope(1, 3)).unwrap();
        assert_eq!(l.f_vector(), vec![8, 12, 6, 1]);
        assert_eq!(l.total(), 27);
        assert!(is_simple(&l));
    }

    #[test]
    fn f23_lattice() {
        let l = face_lattice(&parity_polytope(2, 3)).unwrap();
        assert_eq!(l.f_vector(), vec![8, 28, 56, 68, 48, 16, 1]);
        assert_eq!(l.total(), 225);
        assert!(!is_simple(&l));
        assert_eq!(
            l.to_table(),
            "0 8\n1 28\n2 56\n3 68\n4 48\n5 16\n6 1\nsum 225\nsimple n\n"
        );
    }

    #[test]
    fn lattice_invariants() {
        for k in 1..=3 {
            let v = parity_polytope(k, 3);
            let l = face_lattice(&v).unwrap();
            let f = l.f_vector();
            assert_eq!(f[0], v.len());
            assert_eq!(f[l.dim], 1);
            assert!(l.faces[0].iter().all(|m| m.count_ones() == 1));
            // Each face is the intersection of the facets containing it.
            for face in l.all_faces() {
                let meet = l
                    .facets()
                    .iter()
                    .filter(|&&f| f & face == face)
                    .fold(v.full_mask(), |acc, &f| acc & f);
                assert_eq!(meet, face);
            }
        }
    }

    #[test]
    fn size_guard() {
        let v = VertexSet01::cube(5).unwrap();
        assert!(matches!(
            face_lattice(&v),
            Err(Error::SizeGuard { what: "number of vertices", .. })
        ));
        let l = face_lattice_with(&v, SizeLimits::with_max_dim(16)).unwrap();
        assert_eq!(l.f_vector(), vec![32, 80, 80, 40, 10, 1]);
        assert_eq!(SizeLimits::with_max_dim(3), SizeLimits::default());
    }

    #[test]
    fn criterion_examples() {
        let configs = crate::bases::configurations(3).unwrap();
        let odd: Vec<BitWord> = configs.iter().copied().filter(|x| x.weight() % 2 == 1).collect();
        assert!(!simplex_face_criterion(3, &odd).unwrap());
        assert!(simplex_face_criterion(3, &configs[..3]).unwrap());
        assert!(!simplex_face_criterion(3, &configs[1..]).unwrap());
        assert!(simplex_face_criterion(3, &configs).unwrap());
        assert!(simplex_face_criterion(3, &[]).unwrap());
        assert!(simplex_face_criterion(2, &configs[..1]).is_err());
    }
}
