//! Small dense matrices over `F_q`, just enough for the residue-basis maps.

use crate::field::LevelTable;

/// Row-reduce `mat` in place; returns the rank. Entries are `F_q` indices.
pub(crate) fn rref(base: &LevelTable, mat: &mut [Vec<u64>]) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| mat[r][col] != 0) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = base.inv(mat[rank][col]);
        for x in mat[rank].iter_mut() {
            *x = base.mul(*x, inv);
        }
        for r in 0..rows {
            if r != rank && mat[r][col] != 0 {
                let factor = mat[r][col];
                for c in 0..cols {
                    let sub = base.mul(factor, mat[rank][c]);
                    mat[r][c] = base.sub(mat[r][c], sub);
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

/// Left inverse of the matrix whose columns are `cols` (each of length
/// `rows`): returns `L` with `L * A = I`, or `None` if the columns are
/// dependent.
pub(crate) fn left_inverse(base: &LevelTable, cols: &[Vec<u64>]) -> Option<Vec<Vec<u64>>> {
    let d = cols.len();
    let rows = cols.first().map(|c| c.len()).unwrap_or(0);
    // Augment [A | I] row-wise and reduce; pivots must land in the first d
    // columns for A to have full column rank.
    let mut mat: Vec<Vec<u64>> = (0..rows)
        .map(|r| {
            let mut row: Vec<u64> = cols.iter().map(|c| c[r]).collect();
            row.extend((0..rows).map(|i| u64::from(i == r)));
            row
        })
        .collect();
    let rank = rref(base, &mut mat);
    if rank < d {
        return None;
    }
    for (i, row) in mat.iter().take(d).enumerate() {
        if row[..d] != (0..d).map(|j| u64::from(i == j)).collect::<Vec<_>>()[..] {
            return None;
        }
    }
    Some(mat.into_iter().take(d).map(|row| row[d..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldTower;

    #[test]
    fn left_inverse_recovers_coordinates() {
        let tw = FieldTower::new(2, 3, 6).unwrap();
        let base = tw.table(1);
        // Columns: three independent vectors in F_8^4.
        let cols = vec![vec![1, 0, 2, 0], vec![0, 1, 5, 0], vec![0, 0, 3, 1]];
        let l = left_inverse(base, &cols).unwrap();
        for (j, col) in cols.iter().enumerate() {
            for (i, row) in l.iter().enumerate() {
                let dot = row
                    .iter()
                    .zip(col)
                    .fold(0u64, |acc, (&a, &b)| base.add(acc, base.mul(a, b)));
                assert_eq!(dot, u64::from(i == j));
            }
        }
    }

    #[test]
    fn dependent_columns_have_no_left_inverse() {
        let tw = FieldTower::new(2, 1, 1).unwrap();
        let base = tw.table(1);
        let cols = vec![vec![1, 1, 0], vec![1, 1, 0]];
        assert!(left_inverse(base, &cols).is_none());
    }
}
