//! Dense matrices over Q(sqrt d) with exact, deterministic elimination.
//!
//! Convention throughout the crate: vectors are rows, a lattice point is
//! coeffs * generator_matrix. Elimination pivots on the first nonzero entry
//! in column order, so det/solve/inverse are bit-for-bit reproducible.

use super::quad::QuadElem;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldMat {
    rows: usize,
    cols: usize,
    data: Vec<QuadElem>,
}

impl std::fmt::Debug for FieldMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FieldMat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(
                f,
                "  [{}]",
                self.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
            )?;
        }
        write!(f, "]")
    }
}

impl FieldMat {
    pub fn from_rows(rows: Vec<Vec<QuadElem>>) -> Self {
        assert!(!rows.is_empty(), "empty matrix");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let nrows = rows.len();
        FieldMat { rows: nrows, cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| QuadElem::from_int(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![QuadElem::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = QuadElem::one();
        }
        FieldMat { rows: n, cols: n, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &QuadElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: QuadElem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[QuadElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<QuadElem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> FieldMat {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.at(i, j).clone());
            }
        }
        FieldMat { rows: self.cols, cols: self.rows, data }
    }

    pub fn matmul(&self, rhs: &FieldMat) -> FieldMat {
        assert_eq!(self.cols, rhs.rows);
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = QuadElem::zero();
                for k in 0..self.cols {
                    acc = acc + self.at(i, k) * rhs.at(k, j);
                }
                data.push(acc);
            }
        }
        FieldMat { rows: self.rows, cols: rhs.cols, data }
    }

    /// Gram matrix G = M * M^T.
    pub fn gram(&self) -> FieldMat {
        self.matmul(&self.transpose())
    }

    pub fn scale(&self, s: &QuadElem) -> FieldMat {
        FieldMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn det(&self) -> QuadElem {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        let n = self.rows;
        let mut m = self.clone();
        let mut det = QuadElem::one();
        for col in 0..n {
            let pivot = (col..n).find(|&i| !m.at(i, col).is_zero());
            let Some(p) = pivot else {
                return QuadElem::zero();
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pv = m.at(col, col).clone();
            det = det * &pv;
            for i in col + 1..n {
                if m.at(i, col).is_zero() {
                    continue;
                }
                let f = m.at(i, col) / &pv;
                for j in col..n {
                    let v = m.at(i, j) - &(&f * m.at(col, j));
                    m.set(i, j, v);
                }
            }
        }
        det
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            let pivot = (r..m.rows).find(|&i| !m.at(i, col).is_zero());
            let Some(p) = pivot else { continue };
            m.swap_rows(p, r);
            let pv = m.at(r, col).clone();
            for i in r + 1..m.rows {
                if m.at(i, col).is_zero() {
                    continue;
                }
                let f = m.at(i, col) / &pv;
                for j in col..m.cols {
                    let v = m.at(i, j) - &(&f * m.at(r, j));
                    m.set(i, j, v);
                }
            }
            r += 1;
        }
        r
    }

    /// Gauss-Jordan inverse; None when singular.
    pub fn inverse(&self) -> Option<FieldMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut m = self.clone();
        let mut inv = FieldMat::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&i| !m.at(i, col).is_zero())?;
            m.swap_rows(p, col);
            inv.swap_rows(p, col);
            let pv = m.at(col, col).clone();
            let pv_inv = pv.inv();
            for j in 0..n {
                let v = m.at(col, j) * &pv_inv;
                m.set(col, j, v);
                let v = inv.at(col, j) * &pv_inv;
                inv.set(col, j, v);
            }
            for i in 0..n {
                if i == col || m.at(i, col).is_zero() {
                    continue;
                }
                let f = m.at(i, col).clone();
                for j in 0..n {
                    let v = m.at(i, j) - &(&f * m.at(col, j));
                    m.set(i, j, v);
                    let v = inv.at(i, j) - &(&f * inv.at(col, j));
                    inv.set(i, j, v);
                }
            }
        }
        Some(inv)
    }

    /// Solve x * M = y for a row vector x; None when M is singular.
    pub fn solve_row(&self, y: &[QuadElem]) -> Option<Vec<QuadElem>> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(y.len(), self.cols);
        let inv = self.inverse()?;
        Some(row_times_mat(y, &inv))
    }
}

pub fn row_times_mat(v: &[QuadElem], m: &FieldMat) -> Vec<QuadElem> {
    assert_eq!(v.len(), m.nrows());
    (0..m.ncols())
        .map(|j| {
            let mut acc = QuadElem::zero();
            for (i, vi) in v.iter().enumerate() {
                if !vi.is_zero() {
                    acc = acc + vi * m.at(i, j);
                }
            }
            acc
        })
        .collect()
}

pub fn dot(u: &[QuadElem], v: &[QuadElem]) -> QuadElem {
    assert_eq!(u.len(), v.len());
    let mut acc = QuadElem::zero();
    for (a, b) in u.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            acc = acc + a * b;
        }
    }
    acc
}

pub fn norm2(v: &[QuadElem]) -> QuadElem {
    dot(v, v)
}

pub fn vec_add(u: &[QuadElem], v: &[QuadElem]) -> Vec<QuadElem> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn vec_sub(u: &[QuadElem], v: &[QuadElem]) -> Vec<QuadElem> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn vec_neg(v: &[QuadElem]) -> Vec<QuadElem> {
    v.iter().map(|a| -a).collect()
}

pub fn vec_scale(v: &[QuadElem], s: &QuadElem) -> Vec<QuadElem> {
    v.iter().map(|a| a * s).collect()
}
