//! Exact Gauss–Jordan elimination over the rationals.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Row-reduces `rows` in place, returning the pivot column of each nonzero row.
fn reduce(rows: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = BigRational::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let factor = rows[i][c].clone();
            let (pivot_row, other) = if i < r {
                let (lo, hi) = rows.split_at_mut(r);
                (&hi[0], &mut lo[i])
            } else {
                let (lo, hi) = rows.split_at_mut(i);
                (&lo[r], &mut hi[0])
            };
            for (x, p) in other.iter_mut().zip(pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &factor * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn rank(matrix: &[Vec<BigRational>]) -> usize {
    let cols = matrix.first().map_or(0, Vec::len);
    let mut rows = matrix.to_vec();
    reduce(&mut rows, cols).len()
}

/// Unique solution of `A x = b`, or `None` when the system is inconsistent
/// or underdetermined.
pub fn solve(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.first().map_or(0, Vec::len);
    if a.len() != b.len() {
        return None;
    }
    let mut rows: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = reduce(&mut rows, n + 1);
    if pivots.len() != n || pivots.contains(&n) {
        return None;
    }
    Some((0..n).map(|i| rows[i][n].clone()).collect())
}
