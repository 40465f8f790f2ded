//! Dense elimination over an arbitrary [`Field`].

use crate::scalar::Field;

/// Row-reduces `rows` in place to reduced echelon form and returns the
/// pivot columns. Rows past the rank are left zero.
pub fn rref<T: Field>(rows: &mut [Vec<T>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut top = 0;
    for c in 0..ncols {
        if top == rows.len() {
            break;
        }
        let Some(p) = (top..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(top, p);
        let inv = T::one() / rows[top][c].clone();
        for x in rows[top][c..].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = rows[top].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == top || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !p.is_zero() {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
        pivots.push(c);
        top += 1;
    }
    pivots
}

pub fn rank<T: Field>(mut rows: Vec<Vec<T>>) -> usize {
    rref(&mut rows).len()
}

/// A basis of the right null space `{x : M x = 0}`.
pub fn nullspace<T: Field>(mut rows: Vec<Vec<T>>, ncols: usize) -> Vec<Vec<T>> {
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let pivots = rref(&mut rows);
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![T::zero(); ncols];
            v[free] = T::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][free].clone();
            }
            v
        })
        .collect()
}

/// Lifts a 0/1 (or small integer) matrix into the field.
pub fn from_ints<T: Field>(rows: &[Vec<i64>]) -> Vec<Vec<T>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| T::from_int(v)).collect())
        .collect()
}
