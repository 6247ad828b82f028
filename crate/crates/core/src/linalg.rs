//! Dense integer matrices and the handful of lattice algorithms the rest of
//! the crate needs: echelon forms with unimodular transforms, saturated
//! kernels, exact inverses of unimodular matrices and left inverses of
//! saturated bases.
//!
//! Entries are `i128`. Workspace builds keep overflow checks on, so an
//! overflowing product panics instead of wrapping.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i128) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        IntMatrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i128>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        IntMatrix { rows: r, cols: c, data: rows.concat() }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(n: usize, columns: &[Vec<i128>]) -> Self {
        assert!(columns.iter().all(|c| c.len() == n), "column length mismatch");
        Self::from_fn(n, columns.len(), |i, j| columns[j][i])
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> Vec<i128> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<i128> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i128>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn entries(&self) -> &[i128] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                let rrow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, &b) in orow.iter_mut().zip(rrow) {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i128]) -> Vec<i128> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| self.data[i * self.cols..(i + 1) * self.cols].iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn add(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, k: i128) -> IntMatrix {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * k).collect() }
    }

    pub fn neg(&self) -> IntMatrix {
        self.scale(-1)
    }

    pub fn pow(&self, mut e: u32) -> IntMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = IntMatrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == IntMatrix::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&a| a == 0)
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && *self == self.transpose().neg()
    }

    /// Sub-matrix of the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])])
    }

    /// `selfᵀ · g · self`, the Gram matrix of the columns of `self` under `g`.
    pub fn congruence(&self, g: &IntMatrix) -> IntMatrix {
        self.transpose().mul(g).mul(self)
    }

    pub fn max_abs(&self) -> i128 {
        self.data.iter().map(|a| a.abs()).max().unwrap_or(0)
    }

    /// Determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> i128 {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut a = self.clone();
        let mut sign = 1;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if a[(k, k)] == 0 {
                match (k + 1..n).find(|&i| a[(i, k)] != 0) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    a[(i, j)] = (a[(i, j)] * a[(k, k)] - a[(i, k)] * a[(k, j)]) / prev;
                }
            }
            prev = a[(k, k)];
        }
        sign * a[(n - 1, n - 1)]
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// `row[target] -= q * row[src]`
    fn row_axpy(&mut self, target: usize, src: usize, q: i128) {
        for c in 0..self.cols {
            let v = self[(src, c)];
            self[(target, c)] -= q * v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            self[(i, c)] = -self[(i, c)];
        }
    }

    /// Row echelon form by unimodular row operations.
    ///
    /// Returns `(h, u)` with `u · self = h`, `u` unimodular and `h` in row
    /// echelon form with positive pivots. Pivot selection takes the smallest
    /// nonzero magnitude, lowest row first, so the output is deterministic.
    pub fn echelon(&self) -> Echelon {
        let mut h = self.clone();
        let mut u = IntMatrix::identity(self.rows);
        let mut pivots = Vec::new();
        let mut pr = 0;
        for c in 0..self.cols {
            if pr == self.rows {
                break;
            }
            loop {
                let piv = (pr..self.rows).filter(|&i| h[(i, c)] != 0).min_by_key(|&i| (h[(i, c)].abs(), i));
                let Some(piv) = piv else { break };
                h.swap_rows(pr, piv);
                u.swap_rows(pr, piv);
                let mut clean = true;
                for i in pr + 1..self.rows {
                    if h[(i, c)] != 0 {
                        let q = h[(i, c)] / h[(pr, c)];
                        h.row_axpy(i, pr, q);
                        u.row_axpy(i, pr, q);
                        if h[(i, c)] != 0 {
                            clean = false;
                        }
                    }
                }
                if clean {
                    if h[(pr, c)] < 0 {
                        h.negate_row(pr);
                        u.negate_row(pr);
                    }
                    pivots.push(c);
                    pr += 1;
                    break;
                }
            }
        }
        Echelon { h, u, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// A basis of the integer kernel `{x : self · x = 0}` as columns.
    ///
    /// The returned lattice is saturated: it is the full intersection of the
    /// rational kernel with ℤⁿ.
    pub fn kernel(&self) -> IntMatrix {
        let e = self.transpose().echelon();
        let r = e.pivots.len();
        let n = self.cols;
        let cols: Vec<Vec<i128>> = (r..n).map(|i| e.u.row(i)).collect();
        IntMatrix::from_columns(n, &cols)
    }

    /// Exact inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::Degenerate("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let Echelon { mut h, mut u, pivots } = self.echelon();
        if pivots.len() != n || (0..n).any(|i| h[(i, i)] != 1) {
            return Err(Error::Degenerate("matrix is not unimodular".into()));
        }
        for c in (0..n).rev() {
            for i in 0..c {
                let q = h[(i, c)];
                if q != 0 {
                    h.row_axpy(i, c, q);
                    u.row_axpy(i, c, q);
                }
            }
        }
        debug_assert!(h.is_identity());
        Ok(u)
    }

    /// Whether the columns span a saturated sublattice of full column rank.
    pub fn is_saturated(&self) -> bool {
        let e = self.echelon();
        e.pivots.len() == self.cols && (0..self.cols).all(|i| e.h[(i, e.pivots[i])] == 1)
    }

    /// For an `n × r` matrix whose columns form a saturated basis, an
    /// integer `r × n` matrix `l` with `l · self = I`.
    pub fn left_inverse(&self) -> Result<IntMatrix> {
        let r = self.cols;
        let e = self.echelon();
        if e.pivots.len() != r {
            return Err(Error::Degenerate("columns are linearly dependent".into()));
        }
        let top = e.h.select(&(0..r).collect::<Vec<_>>(), &(0..r).collect::<Vec<_>>());
        let top_inv = top
            .inverse_unimodular()
            .map_err(|_| Error::Degenerate("column span is not saturated".into()))?;
        let u_top = e.u.select(&(0..r).collect::<Vec<_>>(), &(0..self.rows).collect::<Vec<_>>());
        let l = top_inv.mul(&u_top);
        if !l.mul(self).is_identity() {
            return Err(Error::internal("left inverse check failed"));
        }
        Ok(l)
    }

    /// An integer solution of `self · x = b`, if one exists.
    pub fn solve_integer(&self, b: &[i128]) -> Option<Vec<i128>> {
        assert_eq!(b.len(), self.rows);
        let e = self.transpose().echelon();
        // self · uᵀ = hᵀ, so solve hᵀ d = b by forward substitution on pivots
        let mut d = vec![0i128; self.cols];
        for (k, &p) in e.pivots.iter().enumerate() {
            let rest: i128 = (0..k).map(|i| e.h[(i, p)] * d[i]).sum();
            let num = b[p] - rest;
            if num % e.h[(k, p)] != 0 {
                return None;
            }
            d[k] = num / e.h[(k, p)];
        }
        let x = e.u.transpose().mul_vec(&d);
        (self.mul_vec(&x) == b).then_some(x)
    }

    /// Stacks matrices with equal row counts side by side.
    pub fn hstack(parts: &[&IntMatrix]) -> IntMatrix {
        let rows = parts.first().map_or(0, |m| m.rows);
        assert!(parts.iter().all(|m| m.rows == rows));
        let cols: Vec<Vec<i128>> = parts.iter().flat_map(|m| (0..m.cols).map(|j| m.column(j))).collect();
        IntMatrix::from_columns(rows, &cols)
    }
}

/// Result of [`IntMatrix::echelon`].
#[derive(Debug, Clone)]
pub struct Echelon {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Pivot column of each nonzero row of `h`.
    pub pivots: Vec<usize>,
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix{:?}", self.to_rows())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.data.iter().map(|a| a.to_string().len()).max().unwrap_or(1);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|a| format!("{a:>width$}")).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

pub fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_small() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![7, 4]]);
        assert_eq!(m.det(), 1);
        let s = IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]);
        assert_eq!(s.det(), -2);
    }

    #[test]
    fn echelon_transform_is_consistent() {
        let m = IntMatrix::from_rows(&[vec![4, 6, 2], vec![6, 9, 3], vec![2, 5, 7]]);
        let e = m.echelon();
        assert_eq!(e.u.mul(&m), e.h);
        assert_eq!(e.u.det().abs(), 1);
    }

    #[test]
    fn kernel_is_saturated() {
        // x + 2y + 3z = 0 has a saturated kernel of rank 2
        let a = IntMatrix::from_rows(&[vec![2, 4, 6]]);
        let k = a.kernel();
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).is_zero());
        assert!(k.is_saturated());
    }

    #[test]
    fn integer_solutions() {
        let a = IntMatrix::from_rows(&[vec![2, 3, 0], vec![0, 1, 5]]);
        let x = a.solve_integer(&[1, 7]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![1, 7]);
        // 2x + 4y = 1 has no integer solution
        assert!(IntMatrix::from_rows(&[vec![2, 4]]).solve_integer(&[1]).is_none());
    }

    #[test]
    fn unimodular_inverse() {
        let m = IntMatrix::from_rows(&[vec![2, 1, 0], vec![7, 4, 0], vec![1, 1, 1]]);
        let inv = m.inverse_unimodular().unwrap();
        assert!(m.mul(&inv).is_identity());
        let bad = IntMatrix::from_rows(&[vec![2, 0], vec![0, 1]]);
        assert!(bad.inverse_unimodular().is_err());
    }

    #[test]
    fn left_inverse_rejects_unsaturated() {
        let q = IntMatrix::from_columns(3, &[vec![2, 0, 0], vec![0, 1, 0]]);
        assert!(q.left_inverse().is_err());
        let q = IntMatrix::from_columns(3, &[vec![1, 1, 0], vec![0, 1, 1]]);
        let l = q.left_inverse().unwrap();
        assert!(l.mul(&q).is_identity());
    }
}
