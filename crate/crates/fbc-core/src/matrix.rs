//! Dense exact matrices.
//!
//! `Mat<T>` is a plain row-major container; the exact linear algebra
//! (elimination, kernels, inverses) is implemented for field entries, with
//! integer-specific helpers for lattice work.

use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::Field;
use crate::{Error, Int, Rat, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Mat<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
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

    pub fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }
}

impl<T: Clone + Zero> Mat<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat::from_fn(rows, cols, |_, _| T::zero())
    }
}

impl<T: Clone + Zero + One> Mat<T> {
    pub fn identity(n: usize) -> Self {
        Mat::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }
}

impl<T> Mat<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T>,
{
    pub fn mul_mat(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.at(i, k).clone() * other.at(k, j).clone();
            }
            acc
        })
    }

    /// Row vector times matrix.
    pub fn act_on_row(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.rows, "dimension mismatch");
        (0..self.cols)
            .map(|j| {
                let mut acc = T::zero();
                for i in 0..self.rows {
                    acc = acc + v[i].clone() * self.at(i, j).clone();
                }
                acc
            })
            .collect()
    }
}

impl<T> Mat<T>
where
    T: Clone + Zero + One + Add<Output = T> + Mul<Output = T>,
{
    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Mat::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mat(&base);
            }
            base = base.mul_mat(&base);
            e >>= 1;
        }
        acc
    }
}

impl<T> Mat<T>
where
    T: Clone + Add<Output = T>,
{
    pub fn add_mat(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() + other.at(i, j).clone()
        })
    }
}

impl<T> Mat<T>
where
    T: Clone + Sub<Output = T>,
{
    pub fn sub_mat(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self.at(i, j).clone() - other.at(i, j).clone()
        })
    }
}

impl<T> Mat<T>
where
    T: Clone + Neg<Output = T>,
{
    pub fn neg_mat(&self) -> Self {
        self.map(|x| -x.clone())
    }
}

// Field-entry elimination routines.
impl<K: Field> Mat<K> {
    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.at(r, c).inv();
            for j in c..m.cols {
                *m.at_mut(r, j) = m.at(r, j).clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let factor = m.at(i, c).clone();
                    for j in c..m.cols {
                        *m.at_mut(i, j) =
                            m.at(i, j).clone() - factor.clone() * m.at(r, j).clone();
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> K {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = K::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return K::zero();
            };
            if p != c {
                m.swap_rows(c, p);
                det = -det;
            }
            det = det * m.at(c, c).clone();
            let inv = m.at(c, c).inv();
            for i in c + 1..n {
                if !m.at(i, c).is_zero() {
                    let factor = m.at(i, c).clone() * inv.clone();
                    for j in c..n {
                        *m.at_mut(i, j) =
                            m.at(i, j).clone() - factor.clone() * m.at(c, j).clone();
                    }
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Result<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.at(i, j).clone()
            } else if j - n == i {
                K::one()
            } else {
                K::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::invalid("matrix is singular"));
        }
        aug = r;
        Ok(Mat::from_fn(n, n, |i, j| aug.at(i, j + n).clone()))
    }

    /// Basis (as rows) of the left kernel `{ x : x * self = 0 }`.
    pub fn left_kernel(&self) -> Vec<Vec<K>> {
        let t = self.transpose();
        let (r, pivots) = t.rref();
        let n = self.rows;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![K::zero(); n];
            v[fc] = K::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.at(ri, fc).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `x * self = rhs` for a row vector, if consistent.
    pub fn solve_left(&self, rhs: &[K]) -> Option<Vec<K>> {
        assert_eq!(rhs.len(), self.cols);
        let n = self.rows;
        // Transpose to the column convention: self^T x^T = rhs^T.
        let mut aug = Mat::from_fn(self.cols, n + 1, |i, j| {
            if j < n {
                self.at(j, i).clone()
            } else {
                rhs[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        aug = r;
        if pivots.contains(&n) {
            return None;
        }
        let mut x = vec![K::zero(); n];
        for (ri, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(ri, n).clone();
        }
        Some(x)
    }
}

impl Mat<Int> {
    pub fn to_rat(&self) -> Mat<Rat> {
        self.map(|x| Rat::from(x.clone()))
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Int::from(x)).collect())
                .collect(),
        )
    }

    pub fn det_int(&self) -> Int {
        let d = self.to_rat().det();
        assert!(d.is_integer());
        d.to_integer()
    }

    /// Exact inverse of a unimodular (det ±1) integer matrix.
    pub fn inverse_unimodular(&self) -> Result<Mat<Int>> {
        let inv = self.to_rat().inverse()?;
        let mut out = Mat::zero(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let e = inv.at(i, j);
                if !e.is_integer() {
                    return Err(Error::invalid("matrix is not unimodular"));
                }
                *out.at_mut(i, j) = e.to_integer();
            }
        }
        Ok(out)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|x| !x.is_negative())
    }

    /// True when every row and column has exactly one entry equal to 1.
    pub fn is_permutation(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        let one = Int::one();
        for i in 0..n {
            if (0..n).filter(|&j| !self.at(i, j).is_zero()).count() != 1 {
                return false;
            }
            if (0..n).filter(|&j| !self.at(j, i).is_zero()).count() != 1 {
                return false;
            }
        }
        self.data.iter().all(|x| x.is_zero() || *x == one)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qm(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_i64_rows(rows).to_rat()
    }

    #[test]
    fn det_and_inverse() {
        let m = qm(&[&[0, 1], &[1, 1]]);
        assert_eq!(m.det(), Rat::from(Int::from(-1)));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul_mat(&inv), Mat::identity(2));
    }

    #[test]
    fn kernel_of_singular() {
        let m = qm(&[&[1, 2], &[2, 4]]);
        let k = m.left_kernel();
        assert_eq!(k.len(), 1);
        let img = m.act_on_row(&[k[0][0].clone(), k[0][1].clone()]);
        assert!(img.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn solve_left_roundtrip() {
        let m = qm(&[&[2, 1], &[1, 1]]);
        let rhs = m.act_on_row(&[Rat::from(Int::from(3)), Rat::from(Int::from(-2))]);
        let x = m.solve_left(&rhs).unwrap();
        assert_eq!(x, vec![Rat::from(Int::from(3)), Rat::from(Int::from(-2))]);
    }

    #[test]
    fn permutation_detection() {
        assert!(Mat::from_i64_rows(&[&[0, 1], &[1, 0]]).is_permutation());
        assert!(!Mat::from_i64_rows(&[&[0, 2], &[1, 0]]).is_permutation());
        assert!(!Mat::from_i64_rows(&[&[1, 1], &[0, 1]]).is_permutation());
    }
}
