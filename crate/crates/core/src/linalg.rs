//! Exact Gaussian elimination over a base field.

use crate::poly::{Field, Scalar};

/// Dense matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub field: Field,
    pub rows: Vec<Vec<Scalar>>,
    pub ncols: usize,
}

impl Matrix {
    pub fn new(field: Field, rows: Vec<Vec<Scalar>>, ncols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        Matrix { field, rows, ncols }
    }

    pub fn zeros(field: Field, nrows: usize, ncols: usize) -> Self {
        Matrix { field, rows: vec![vec![field.zero(); ncols]; nrows], ncols }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            if r == self.rows.len() {
                break;
            }
            let Some(p) = (r..self.rows.len()).find(|&i| !self.rows[i][c].is_zero()) else {
                continue;
            };
            self.rows.swap(r, p);
            let inv = self.rows[r][c].inv().expect("pivot is nonzero");
            for x in self.rows[r].iter_mut() {
                *x = x.mul(&inv);
            }
            let pivot_row = self.rows[r].clone();
            for (i, row) in self.rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = x.sub(&y.mul(&f));
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.ncols];
                v[f] = self.field.one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = m.rows[row][f].neg();
                }
                v
            })
            .collect()
    }

    /// Some solution of `M x = b`, if one exists.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows.len());
        let mut aug = Matrix::new(
            self.field,
            self.rows.iter().zip(b).map(|(r, x)| r.iter().cloned().chain(std::iter::once(x.clone())).collect()).collect(),
            self.ncols + 1,
        );
        let pivots = aug.rref();
        if pivots.last() == Some(&self.ncols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.ncols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.rows[row][self.ncols].clone();
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rationals;
        Matrix::new(f, rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect(), rows[0].len())
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = a.nullspace();
        assert_eq!(k.len(), 1);
        for row in &a.rows {
            let dot = row.iter().zip(&k[0]).fold(Field::Rationals.zero(), |acc, (x, y)| acc.add(&x.mul(y)));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn solving() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let f = Field::Rationals;
        let x = a.solve(&[f.from_i64(3), f.from_i64(1)]).unwrap();
        assert_eq!(x, vec![f.from_i64(2), f.from_i64(1)]);
        let singular = m(&[&[1, 1], &[2, 2]]);
        assert!(singular.solve(&[f.from_i64(1), f.from_i64(3)]).is_none());
    }
}
