//! Fraction-free (Bareiss) elimination over an exact domain.

use super::field::Domain;

/// Fraction-free row echelon form in place. Returns the rank and the sign of the
/// row permutation used. After the call, the last nonzero pivot equals the
/// determinant of the corresponding leading minor (up to that sign).
fn bareiss_echelon<D: Domain>(m: &mut [Vec<D>]) -> (usize, bool) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = D::one();
    let mut rank = 0;
    let mut flipped = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            flipped = !flipped;
        }
        let pivot = m[rank][c].clone();
        for r in rank + 1..rows {
            let factor = m[r][c].clone();
            let (top, bottom) = m.split_at_mut(r);
            let pivot_row = &top[rank];
            for (k, entry) in bottom[0].iter_mut().enumerate().take(cols).skip(c + 1) {
                let v = pivot.times(entry).minus(&factor.times(&pivot_row[k]));
                *entry = v
                    .div_exact(&prev)
                    .expect("Bareiss step divides exactly over a domain");
            }
            m[r][c] = D::zero();
        }
        prev = pivot;
        rank += 1;
    }
    (rank, flipped)
}

/// Determinant of a square matrix.
pub fn determinant<D: Domain>(mut m: Vec<Vec<D>>) -> D {
    let n = m.len();
    assert!(m.iter().all(|r| r.len() == n), "determinant needs a square matrix");
    if n == 0 {
        return D::one();
    }
    let (rank, flipped) = bareiss_echelon(&mut m);
    if rank < n {
        return D::zero();
    }
    let d = m[n - 1][n - 1].clone();
    if flipped {
        d.negate()
    } else {
        d
    }
}

/// Rank of a (not necessarily square) matrix.
pub fn rank<D: Domain>(mut m: Vec<Vec<D>>) -> usize {
    bareiss_echelon(&mut m).0
}
