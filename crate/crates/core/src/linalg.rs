//! Dense linear algebra over a [`FieldSpec`], enough for span tests.

use crate::field::{FieldElem, FieldSpec};

/// Solves `sum_j x_j * columns[j] = rhs`, returning one solution if any.
/// All vectors must have the same length.
pub fn solve(spec: FieldSpec, columns: &[Vec<FieldElem>], rhs: &[FieldElem]) -> Option<Vec<FieldElem>> {
    let rows = rhs.len();
    let cols = columns.len();
    debug_assert!(columns.iter().all(|c| c.len() == rows));
    // augmented matrix, row-major
    let mut m: Vec<Vec<FieldElem>> = (0..rows)
        .map(|r| columns.iter().map(|c| c[r].clone()).chain(std::iter::once(rhs[r].clone())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, pr);
        let inv = m[row][col].inv().expect("pivot is nonzero");
        for entry in m[row].iter_mut() {
            *entry = &*entry * &inv;
        }
        let pivot_row = m[row].clone();
        for (r, target) in m.iter_mut().enumerate() {
            if r != row && !target[col].is_zero() {
                let factor = target[col].clone();
                for (t, p) in target.iter_mut().zip(&pivot_row).skip(col) {
                    *t = &*t - &(&factor * p);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }
    if m[row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![spec.zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}
