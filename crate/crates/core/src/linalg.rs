//! Dense exact linear algebra over the rationals. Only small systems appear here.

use num_traits::{One, Zero};

use crate::lincomb::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Row-reduces in place and returns the rank.
fn row_reduce(m: &mut Matrix, cols: usize) -> usize {
    let rows = m.len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = Rational::one() / &m[rank][col];
        for x in m[rank].iter_mut() {
            *x *= &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..m[r].len() {
                    let delta = &factor * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

pub fn rank(m: &Matrix) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut work = m.clone();
    row_reduce(&mut work, cols)
}

/// Inverse of a square matrix, or `None` if it is singular.
pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "inverse needs a square matrix");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    if row_reduce(&mut aug, n) < n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}
