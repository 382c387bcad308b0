use super::QuadExt;
use crate::error::{Error, Result};

/// Exact rank of a matrix over ℚ(√d) by Bareiss-style fraction-free
/// elimination. Pivots are the first nonzero entry in each column, decided by
/// the exact sign test. All entries must share one radicand (rationals mix
/// freely); a second radicand surfaces as [`Error::RadicandMismatch`].
pub fn fraction_free_rank(matrix: &[Vec<QuadExt>]) -> Result<usize> {
    let rows = matrix.len();
    if rows == 0 {
        return Ok(0);
    }
    let cols = matrix[0].len();
    for (row, r) in matrix.iter().enumerate() {
        if r.len() != cols {
            return Err(Error::RaggedMatrix {
                row,
                expected: cols,
                found: r.len(),
            });
        }
    }
    let mut m: Vec<Vec<QuadExt>> = matrix.to_vec();
    let mut prev_pivot = QuadExt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in rank + 1..rows {
            let factor = m[r][col].clone();
            for c in col + 1..cols {
                // (pivot·m[r][c] - factor·m[rank][c]) / prev_pivot
                let num = pivot
                    .try_mul(&m[r][c])?
                    .try_sub(&factor.try_mul(&m[rank][c])?)?;
                m[r][c] = num.try_div(&prev_pivot)?;
            }
            m[r][col] = QuadExt::zero();
        }
        prev_pivot = pivot;
        rank += 1;
    }
    Ok(rank)
}
