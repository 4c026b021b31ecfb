//! Integer matrices and row-style Hermite Normal Form.
//!
//! HNF here: row span preserved, row echelon with positive pivots, entries
//! above each pivot reduced into [0, pivot). Unique for a given row span, so
//! equal spans give byte-equal HNFs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMat {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        assert!(!rows.is_empty());
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMat { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// row_i -= q * row_j
    fn sub_scaled_row(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let v = self.at(i, c) - q * self.at(j, c);
            self.set(i, c, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.at(i, c);
            self.set(i, c, v);
        }
    }

    /// Hermite Normal Form of the row span; zero rows are dropped.
    pub fn hnf(&self) -> IntMat {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            // Euclidean reduction within the column below pivot_row.
            loop {
                let mut best: Option<usize> = None;
                for i in pivot_row..m.rows {
                    if m.at(i, col).is_zero() {
                        continue;
                    }
                    best = match best {
                        None => Some(i),
                        Some(b) => {
                            if m.at(i, col).abs() < m.at(b, col).abs() {
                                Some(i)
                            } else {
                                Some(b)
                            }
                        }
                    };
                }
                let Some(b) = best else { break };
                m.swap_rows(pivot_row, b);
                let pivot = m.at(pivot_row, col).clone();
                let mut all_cleared = true;
                for i in pivot_row + 1..m.rows {
                    if m.at(i, col).is_zero() {
                        continue;
                    }
                    let q = m.at(i, col).div_floor(&pivot);
                    m.sub_scaled_row(i, pivot_row, &q);
                    if !m.at(i, col).is_zero() {
                        all_cleared = false;
                    }
                }
                if all_cleared {
                    break;
                }
            }
            if m.at(pivot_row, col).is_zero() {
                continue;
            }
            if m.at(pivot_row, col).is_negative() {
                m.negate_row(pivot_row);
            }
            // Reduce entries above the pivot into [0, pivot).
            let pivot = m.at(pivot_row, col).clone();
            for i in 0..pivot_row {
                let q = m.at(i, col).div_floor(&pivot);
                m.sub_scaled_row(i, pivot_row, &q);
            }
            pivot_row += 1;
        }
        let kept: Vec<Vec<BigInt>> = (0..pivot_row).map(|i| m.row(i).to_vec()).collect();
        if kept.is_empty() {
            IntMat { rows: 0, cols: m.cols, data: Vec::new() }
        } else {
            IntMat::from_rows(kept)
        }
    }

    pub fn stack(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        IntMat { rows: self.rows + other.rows, cols: self.cols, data }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_basic() {
        let m = IntMat::from_i64_rows(&[&[2, 0], &[0, 2], &[1, 1]]);
        let h = m.hnf();
        assert_eq!(h, IntMat::from_i64_rows(&[&[1, 1], &[0, 2]]));
    }

    #[test]
    fn hnf_drops_dependent_rows() {
        let m = IntMat::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        let h = m.hnf();
        assert_eq!(h.nrows(), 2);
        assert_eq!(h, IntMat::from_i64_rows(&[&[1, 0, 1], &[0, 1, 1]]));
    }

    #[test]
    fn hnf_idempotent() {
        let m = IntMat::from_i64_rows(&[&[4, 0, 0], &[2, 2, 0], &[3, 0, 9]]);
        let h = m.hnf();
        assert_eq!(h.hnf(), h);
    }

    #[test]
    fn hnf_invariant_under_row_mixing() {
        let a = IntMat::from_i64_rows(&[&[4, 0, 0, 0], &[2, 2, 0, 0], &[2, 0, 2, 0], &[2, 0, 0, 2]]);
        // Same span written with mixed rows.
        let b = IntMat::from_i64_rows(&[
            &[6, 2, 0, 0],
            &[2, 2, 0, 0],
            &[2, 2, 2, 2],
            &[2, 0, 0, 2],
            &[8, 0, 0, 0],
        ]);
        assert_eq!(a.hnf(), b.hnf());
    }

    #[test]
    fn negative_pivots_normalized() {
        let m = IntMat::from_i64_rows(&[&[-3, 1], &[0, -2]]);
        let h = m.hnf();
        assert_eq!(h, IntMat::from_i64_rows(&[&[3, 1], &[0, 2]]));
    }
}
