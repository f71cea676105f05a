//! Stirling triangles by the standard recurrences, memoized row by row.
//!
//! s(n+1, j) = s(n, j-1) - n s(n, j) (signed first kind),
//! S2(n+1, m) = m S2(n, m) + S2(n, m-1), with s(0,0) = S2(0,0) = 1.

use crate::rational::BigInt;
use num_traits::{One, Zero};

pub(super) fn extend_stirling1(rows: &mut Vec<Vec<BigInt>>, n: usize) {
    if rows.is_empty() {
        rows.push(vec![BigInt::one()]);
    }
    while rows.len() <= n {
        let k = rows.len(); // building row k from row k-1
        let prev = &rows[k - 1];
        let mut row = vec![BigInt::zero(); k + 1];
        for j in 1..=k {
            row[j] = prev[j - 1].clone();
        }
        for j in 0..k {
            row[j] -= &prev[j] * BigInt::from((k - 1) as u64);
        }
        rows.push(row);
    }
}

pub(super) fn extend_stirling2(rows: &mut Vec<Vec<BigInt>>, n: usize) {
    if rows.is_empty() {
        rows.push(vec![BigInt::one()]);
    }
    while rows.len() <= n {
        let k = rows.len();
        let prev = &rows[k - 1];
        let mut row = vec![BigInt::zero(); k + 1];
        for m in 1..=k {
            let mut v = if m < prev.len() {
                &prev[m] * BigInt::from(m as u64)
            } else {
                BigInt::zero()
            };
            v += &prev[m - 1];
            row[m] = v;
        }
        rows.push(row);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signed_first_kind_rows() {
        let mut rows = Vec::new();
        extend_stirling1(&mut rows, 4);
        assert_eq!(rows[0], vec![BigInt::from(1)]);
        // row 4: 0, -6, 11, -6, 1
        assert_eq!(
            rows[4],
            vec![0, -6, 11, -6, 1].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
    }

    #[test]
    fn second_kind_rows() {
        let mut rows = Vec::new();
        extend_stirling2(&mut rows, 4);
        // row 4: 0, 1, 7, 6, 1
        assert_eq!(
            rows[4],
            vec![0, 1, 7, 6, 1].into_iter().map(BigInt::from).collect::<Vec<_>>()
        );
    }
}
