//! Exact linear algebra over the rationals and fraction-free rank over polynomials.

use num_traits::{One, Zero};

use super::poly::{Poly, Rat};

/// Dense matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl QMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c));
        QMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    /// Row echelon form in place; returns pivot column indices.
    fn echelon(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, row * self.cols + j);
                }
            }
            let inv = Rat::one() / self.get(row, col).clone();
            for j in col..self.cols {
                let v = self.get(row, j) * &inv;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let f = self.get(r, col).clone();
                    for j in col..self.cols {
                        let v = self.get(r, j) - &(self.get(row, j) * &f);
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.echelon().len()
    }

    /// Basis of the right kernel, one vector per column.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let mut m = self.clone();
        let pivots = m.echelon();
        let mut basis = Vec::new();
        let piv_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        for free in 0..self.cols {
            if piv_set[free] {
                continue;
            }
            let mut vec = vec![Rat::zero(); self.cols];
            vec[free] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                vec[p] = -m.get(r, free).clone();
            }
            basis.push(vec);
        }
        basis
    }

    /// One solution of self * x = b, if consistent.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = QMatrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.echelon();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }
}

/// Rank of a polynomial matrix by fraction-free Bareiss elimination.
pub fn poly_mat_rank(mat: &[Vec<Poly>]) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let nvars = mat
        .iter()
        .flatten()
        .map(|p| p.nvars)
        .max()
        .unwrap_or(0);
    let mut m: Vec<Vec<Poly>> = mat
        .iter()
        .map(|row| row.iter().map(|p| p.extend_vars(nvars)).collect())
        .collect();
    let mut prev = Poly::one(nvars);
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        if row == rows {
            break;
        }
        let Some(pr) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pr, row);
        for r in row + 1..rows {
            for c in col + 1..cols {
                let num = &(&m[row][col] * &m[r][c]) - &(&m[r][col] * &m[row][c]);
                m[r][c] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[r][col] = Poly::zero(nvars);
        }
        prev = m[row][col].clone();
        rank += 1;
        row += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyalg::rat;

    fn q(rows: Vec<Vec<i64>>) -> QMatrix {
        QMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(rat).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_kernel_solve() {
        let m = q(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        for i in 0..m.rows {
            let dot: Rat = (0..m.cols).map(|j| m.get(i, j) * &ker[0][j]).sum();
            assert!(dot.is_zero());
        }
        let b = vec![rat(6), rat(12), rat(2)];
        let x = m.solve(&b).unwrap();
        for i in 0..m.rows {
            let dot: Rat = (0..m.cols).map(|j| m.get(i, j) * &x[j]).sum();
            assert_eq!(dot, b[i]);
        }
        assert!(m.solve(&[rat(1), rat(1), rat(1)]).is_none());
    }

    #[test]
    fn bareiss_rank_matches_vandermonde() {
        // Vandermonde in X1, X2, X3 has full symbolic rank.
        let n = 3;
        let row = |i: usize| {
            let x = Poly::var(i, n);
            vec![Poly::one(n), x.clone(), &x * &x]
        };
        let m = vec![row(1), row(2), row(3)];
        assert_eq!(poly_mat_rank(&m), 3);
        // Repeating a row drops the rank.
        let m2 = vec![row(1), row(2), row(2)];
        assert_eq!(poly_mat_rank(&m2), 2);
    }
}
