//! Exact dense linear algebra over [`ParamRat`], used internally for
//! per-degree basis transitions and the triangular systems of Macdonald
//! polynomial construction.

use crate::scalars::ParamRat;

/// Inverts a square matrix by Gauss–Jordan elimination; `None` when singular.
pub(crate) fn invert(a: &[Vec<ParamRat>]) -> Option<Vec<Vec<ParamRat>>> {
    let n = a.len();
    let mut left: Vec<Vec<ParamRat>> = a.to_vec();
    let mut right: Vec<Vec<ParamRat>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        ParamRat::one()
                    } else {
                        ParamRat::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !left[r][col].is_zero())?;
        left.swap(col, pivot);
        right.swap(col, pivot);
        let inv = left[col][col].try_inv().expect("pivot nonzero");
        for j in 0..n {
            left[col][j] = &left[col][j] * &inv;
            right[col][j] = &right[col][j] * &inv;
        }
        for r in 0..n {
            if r == col || left[r][col].is_zero() {
                continue;
            }
            let factor = left[r][col].clone();
            for j in 0..n {
                let l = &left[col][j] * &factor;
                left[r][j] = &left[r][j] - &l;
                let rr = &right[col][j] * &factor;
                right[r][j] = &right[r][j] - &rr;
            }
        }
    }
    Some(right)
}

/// Solves a (possibly overdetermined) system `A x = b` by Gaussian
/// elimination. Returns the solution only when it exists and is unique:
/// `None` when the system is inconsistent or the solution space has
/// positive dimension.
pub(crate) fn solve_unique(a: &[Vec<ParamRat>], b: &[ParamRat]) -> Option<Vec<ParamRat>> {
    let rows = a.len();
    if rows == 0 {
        return None;
    }
    let cols = a[0].len();
    let mut m: Vec<Vec<ParamRat>> = a.to_vec();
    let mut rhs: Vec<ParamRat> = b.to_vec();
    let mut pivot_row = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..cols {
        let Some(found) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, found);
        rhs.swap(pivot_row, found);
        let inv = m[pivot_row][col].try_inv().expect("pivot nonzero");
        for j in col..cols {
            m[pivot_row][j] = &m[pivot_row][j] * &inv;
        }
        rhs[pivot_row] = &rhs[pivot_row] * &inv;
        for r in 0..rows {
            if r == pivot_row || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for j in col..cols {
                let v = &m[pivot_row][j] * &factor;
                m[r][j] = &m[r][j] - &v;
            }
            let v = &rhs[pivot_row] * &factor;
            rhs[r] = &rhs[r] - &v;
        }
        pivot_cols.push(col);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    if pivot_cols.len() < cols {
        return None;
    }
    if rhs[pivot_row..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    let mut x = vec![ParamRat::zero(); cols];
    for (row, &col) in pivot_cols.iter().enumerate() {
        x[col] = rhs[row].clone();
    }
    Some(x)
}
