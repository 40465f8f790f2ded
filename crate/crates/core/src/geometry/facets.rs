use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;

use super::{affine_dim, VertexMask, VertexSet01};
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{bit, Field};
use crate::Rational;

/// Incidence set of the hyperplane through the points in `basis`, if those
/// points are affinely independent and every point lies on one closed side.
fn supporting_hyperplane<T: Field>(v: &VertexSet01, basis: &[usize]) -> Option<VertexMask> {
    let d = v.dim();
    // Rows (p, 1); a kernel vector (a, a₀) gives the hyperplane a·x + a₀ = 0.
    let rows: Vec<Vec<T>> = basis
        .iter()
        .map(|&i| {
            let mut r: Vec<T> = (0..d).map(|j| bit(v.coord(i, j))).collect();
            r.push(T::one());
            r
        })
        .collect();
    let kernel = linalg::nullspace(rows, d + 1);
    let [normal] = kernel.as_slice() else {
        return None;
    };
    let mut incidence = 0u64;
    let (mut above, mut below) = (false, false);
    for i in 0..v.len() {
        let value = (0..d)
            .filter(|&j| v.coord(i, j))
            .fold(normal[d].clone(), |acc, j| acc + normal[j].clone());
        if value.is_zero() {
            incidence |= 1 << i;
        } else if value.is_positive() {
            above = true;
        } else {
            below = true;
        }
        if above && below {
            return None;
        }
    }
    Some(incidence)
}

/// Facets of a full-dimensional vertex set as incidence masks, ascending.
///
/// Every facet contains `d` affinely independent points, so scanning all
/// `d`-subsets and keeping the hyperplanes with all points on one side
/// finds each facet at least once.
pub fn facets(v: &VertexSet01) -> Result<Vec<VertexMask>> {
    facets_with::<Rational>(v)
}

/// [`facets`] over an arbitrary field.
pub fn facets_with<T: Field>(v: &VertexSet01) -> Result<Vec<VertexMask>> {
    let found = affine_dim(v);
    if found != v.dim() {
        return Err(Error::NotFullDimensional {
            found,
            ambient: v.dim(),
        });
    }
    if v.dim() == 0 {
        return Ok(Vec::new());
    }
    let candidates: Vec<Vec<usize>> = (0..v.len()).combinations(v.dim()).collect();
    let masks: BTreeSet<VertexMask> = candidates
        .par_iter()
        .filter_map(|basis| supporting_hyperplane::<T>(v, basis))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(masks.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bases::parity_words;
    use crate::geometry::mask_of;
    use crate::gf2::BitWord;
    use crate::hypergraph::uniform;

    fn parity_polytope(k: usize, n: usize) -> VertexSet01 {
        VertexSet01::from_words(&parity_words(&uniform(k, n).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn cube_has_six_facets() {
        let f = facets(&VertexSet01::cube(3).unwrap()).unwrap();
        assert_eq!(f.len(), 6);
        assert!(f.iter().all(|m| m.count_ones() == 4));
        assert!(f.contains(&mask_of(&[0, 1, 2, 3])));
    }

    #[test]
    fn simplex_has_four_facets() {
        let words: Vec<BitWord> = ["000", "110", "101", "011"]
            .iter()
            .map(|s| BitWord::parse(s).unwrap())
            .collect();
        let f = facets(&VertexSet01::from_words(&words).unwrap()).unwrap();
        assert_eq!(f, vec![0b0111, 0b1011, 0b1101, 0b1110]);
    }

    #[test]
    fn parity_polytope_f23_has_sixteen_facets() {
        assert_eq!(facets(&parity_polytope(2, 3)).unwrap().len(), 16);
    }

    #[test]
    fn rejects_lower_dimensional_input() {
        let words: Vec<BitWord> = ["000", "100", "011", "111"]
            .iter()
            .map(|s| BitWord::parse(s).unwrap())
            .collect();
        assert_eq!(
            facets(&VertexSet01::from_words(&words).unwrap()),
            Err(Error::NotFullDimensional { found: 2, ambient: 3 })
        );
    }

    #[test]
    fn fixed_width_ratios_agree_on_small_inputs() {
        let v = parity_polytope(2, 3);
        assert_eq!(
            facets_with::<num_rational::Ratio<i64>>(&v).unwrap(),
            facets(&v).unwrap()
        );
    }
}
