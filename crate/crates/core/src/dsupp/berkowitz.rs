//! Division-free characteristic polynomials.

use crate::error::{Error, Result};
use crate::poly::CommRing;

/// A square matrix over a commutative ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix<T> {
    rows: Vec<Vec<T>>,
}

impl<T: CommRing> SquareMatrix<T> {
    pub fn new(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("empty matrix".into()));
        }
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch(format!("row of length {} in a {n}x{n} matrix", r.len())));
        }
        Ok(SquareMatrix { rows })
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(entries: Vec<T>) -> Result<Self> {
        let zero = entries.first().ok_or_else(|| Error::DimensionMismatch("empty matrix".into()))?.zero_like();
        let n = entries.len();
        let rows = entries
            .into_iter()
            .enumerate()
            .map(|(i, d)| {
                let mut row = vec![zero.clone(); n];
                row[i] = d;
                row
            })
            .collect();
        Ok(SquareMatrix { rows })
    }

    /// Block-diagonal sum of the given blocks.
    pub fn block_diagonal(blocks: &[SquareMatrix<T>]) -> Result<Self> {
        let zero = blocks.first().ok_or_else(|| Error::DimensionMismatch("no blocks".into()))?.rows[0][0].zero_like();
        let n: usize = blocks.iter().map(|b| b.size()).sum();
        let mut rows = vec![vec![zero; n]; n];
        let mut off = 0;
        for b in blocks {
            for i in 0..b.size() {
                for j in 0..b.size() {
                    rows[off + i][off + j] = b.rows[i][j].clone();
                }
            }
            off += b.size();
        }
        Ok(SquareMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn map<U: CommRing>(&self, f: impl Fn(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix { rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect() }
    }
}

/// Coefficients of `det(v·I − M)`, highest degree first (so the first entry is 1).
///
/// Uses Berkowitz's recursion on trailing principal blocks: only ring operations,
/// no division.
pub fn berkowitz<T: CommRing>(m: &SquareMatrix<T>) -> Vec<T> {
    let n = m.size();
    let a = &m.rows;
    let one = a[0][0].one_like();
    let mut p = vec![one.clone(), a[n - 1][n - 1].neg()];
    for k in (0..n - 1).rev() {
        let size = n - 1 - k;
        // Toeplitz column: 1, −a_kk, −R S, −R M S, …, −R M^{size−1} S
        let mut col = Vec::with_capacity(size + 2);
        col.push(one.clone());
        col.push(a[k][k].neg());
        let mut s: Vec<T> = (k + 1..n).map(|i| a[i][k].clone()).collect();
        for step in 0..size {
            let rs = (0..size).fold(one.zero_like(), |acc, j| acc.add(&a[k][k + 1 + j].mul(&s[j])));
            col.push(rs.neg());
            if step + 1 < size {
                s = (0..size)
                    .map(|i| (0..size).fold(one.zero_like(), |acc, j| acc.add(&a[k + 1 + i][k + 1 + j].mul(&s[j]))))
                    .collect();
            }
        }
        p = (0..size + 2)
            .map(|i| (0..=i.min(size)).fold(one.zero_like(), |acc, j| acc.add(&col[i - j].mul(&p[j]))))
            .collect();
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Field, Scalar};

    fn q(x: i64) -> Scalar {
        Field::Rationals.from_i64(x)
    }

    #[test]
    fn two_by_two() {
        let m = SquareMatrix::new(vec![vec![q(1), q(2)], vec![q(3), q(4)]]).unwrap();
        assert_eq!(berkowitz(&m), vec![q(1), q(-5), q(-2)]);
    }

    #[test]
    fn zero_matrix() {
        let m = SquareMatrix::new(vec![vec![q(0), q(0)], vec![q(0), q(0)]]).unwrap();
        assert_eq!(berkowitz(&m), vec![q(1), q(0), q(0)]);
    }

    #[test]
    fn three_by_three_determinant() {
        let m = SquareMatrix::new(vec![vec![q(2), q(0), q(1)], vec![q(1), q(3), q(2)], vec![q(1), q(1), q(1)]]).unwrap();
        let c = berkowitz(&m);
        // trace 6, det 2*(3-2) - 0 + 1*(1-3) = 0
        assert_eq!(c[1], q(-6));
        assert_eq!(c[3], q(0));
    }
}
