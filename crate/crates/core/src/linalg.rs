//! Exact Gaussian elimination over the rationals.

use num_traits::Zero;

use crate::rational::Rational;
use crate::space::RationalVector;

/// Row-reduces `rows` in place and returns the rank.
fn row_reduce(rows: &mut [Vec<Rational>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][col].clone();
        for c in col..cols {
            rows[rank][c] = &rows[rank][c] / &lead;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..cols {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] -= delta;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

pub fn rank(vectors: &[RationalVector]) -> usize {
    let mut rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    row_reduce(&mut rows)
}

pub fn is_independent(vectors: &[RationalVector]) -> bool {
    rank(vectors) == vectors.len()
}

/// `true` iff `v` is a linear combination of `basis`.
pub fn in_span(basis: &[RationalVector], v: &RationalVector) -> bool {
    let mut with = basis.to_vec();
    with.push(v.clone());
    rank(&with) == rank(basis)
}
