//! Dense row reduction over `F_p`.

use crate::field::PrimeField;

/// Rank of the matrix whose rows are `rows` (all of equal length).
pub fn rank(field: PrimeField, mut rows: Vec<Vec<u64>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]).expect("nonzero pivot");
        for v in rows[rank].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                *v = field.sub(*v, field.mul(factor, *p));
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(rank(f, vec![]), 0);
        assert_eq!(rank(f, vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(f, vec![vec![1, 2], vec![2, 0]]), 2);
        assert_eq!(rank(f, vec![vec![0, 0, 0]]), 0);
        // 3 ≡ -2 mod 5
        assert_eq!(
            rank(f, vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 4]]),
            2
        );
    }
}
